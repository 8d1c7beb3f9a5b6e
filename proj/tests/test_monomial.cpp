#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "cremona/monomial.hpp"
#include "testutil.hpp"

using namespace cremona;

namespace {
IntMatrix2 M2(int64_t a, int64_t b, int64_t c, int64_t d) { return {a, b, c, d}; }

// exact value of [s0; s1, ..., sk] as a fraction
std::pair<int64_t, int64_t> cf_value(const std::vector<int64_t>& s) {
    int64_t num = s.back(), den = 1;
    for (size_t i = s.size() - 1; i-- > 0;) {
        std::swap(num, den);
        num = checked_add(num, checked_mul(s[i], den));
    }
    return {num, den};
}
}  // namespace

TEST_CASE("sym3 is the full permutation group") {
    const auto& g = sym3();
    CHECK(g[0] == IntMatrix2::ident());
    CHECK(in_sym3(IntMatrix2::tau()));
    for (const auto& x : g) {
        CHECK((x.det() == 1 || x.det() == -1));
        for (const auto& y : g) CHECK(in_sym3(x * y));
        CHECK(in_sym3(x.inverse()));
        // -Sym3 is disjoint from Sym3 (this feeds the length-1 branch)
        CHECK_FALSE(in_sym3(-x));
    }
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) CHECK_FALSE(g[i] == g[j]);
}

TEST_CASE("word matrices of the worked examples") {
    CHECK(word_matrix(LRWord{{5, 1}}) == M2(1, 5, 1, 6));
    CHECK(word_matrix(LRWord{{1, 1, 1, 1}}) == M2(2, 3, 3, 5));
    CHECK(word_matrix(LRWord{{3, 5, 7, 1}}) == M2(36, 115, 41, 131));
    CHECK(word_matrix(LRWord{}) == IntMatrix2::ident());
}

TEST_CASE("factor_word examples") {
    auto f = factor_word(M2(1, 5, 1, 6));
    CHECK(f.word == LRWord{{5, 1}});
    CHECK_FALSE(f.tau_flipped);

    CHECK(factor_word(IntMatrix2::ident()).word.empty());
    CHECK(factor_word(M2(2, 3, 3, 5)).word == LRWord{{1, 1, 1, 1}});

    // an S_L matrix is factored after a tau flip
    auto g = factor_word(M2(6, 1, 5, 1));
    CHECK(g.tau_flipped);
    CHECK(g.word == LRWord{{5, 1}});

    CHECK_THROWS_AS(factor_word(M2(0, 1, 1, 0)), MatrixError);
    CHECK_THROWS_AS(factor_word(M2(2, 0, 0, 2)), MatrixError);
}

TEST_CASE("property: free-monoid factorization round trip (entries <= 200)") {
    // exhaustive over words, not matrices
    int64_t cases = 0;
    std::function<void(LRWord&, const IntMatrix2&)> rec = [&](LRWord& w, const IntMatrix2& m) {
        if (m.a > 200 || m.b > 200 || m.c > 200 || m.d > 200) return;
        if (!w.exponents.empty()) {
            ++cases;
            auto f = factor_word(m);
            CHECK_FALSE(f.tau_flipped);
            CHECK(f.word == w);
            CHECK(word_matrix(f.word) == m);
            // the tau-conjugate factors to the same tuple, flipped
            IntMatrix2 t{m.d, m.c, m.b, m.a};
            if (!(t == m)) {
                auto ft = factor_word(t);
                CHECK(ft.tau_flipped);
                CHECK(ft.word == w);
            }
        }
        // append one more block on the left (index n+1: R when odd, L when even)
        size_t n = w.exponents.size();
        for (int64_t s = 1; s <= 200; ++s) {
            IntMatrix2 block = (n % 2 == 0) ? IntMatrix2{1, s, 0, 1} : IntMatrix2{1, 0, s, 1};
            IntMatrix2 grown = block * m;
            if (grown.a > 200 || grown.b > 200 || grown.c > 200 || grown.d > 200) break;
            w.exponents.push_back(s);
            rec(w, grown);
            w.exponents.pop_back();
        }
    };
    LRWord w;
    rec(w, IntMatrix2::ident());
    CHECK(cases > 1000);
}

TEST_CASE("ell examples and recursion") {
    CHECK(ell(LRWord{}) == 0);
    CHECK(ell(LRWord{{3, 5, 7, 1}}) == 3);
    CHECK(ell(LRWord{{5, 1}}) == 1);
    CHECK(ell(LRWord{{1, 1, 1, 1}}) == 2);
    for (int64_t s = 1; s <= 9; ++s) CHECK(ell(LRWord{{s}}) == 1);
    CHECK(ell(LRWord{{4, 7, 1}}) == 2);
    CHECK(ell(LRWord{{6, 1}}) == 1);
}

TEST_CASE("property: ell ignores the first exponent") {
    testutil::Rng rng(1);
    for (int i = 0; i < 10000; ++i) {
        auto w = testutil::random_word(rng);
        auto w2 = w;
        w2.exponents[0] = testutil::pick(rng, 1, 50);
        CHECK(ell(w) == ell(w2));
    }
}

TEST_CASE("property: ell is additive over concatenation when t1 >= 2") {
    testutil::Rng rng(2);
    for (int i = 0; i < 10000; ++i) {
        auto w1 = testutil::random_word(rng);
        auto w2 = testutil::random_word(rng);
        if (w2.exponents.size() < 2) w2.exponents.push_back(testutil::pick(rng, 1, 6));
        if (w2.exponents[0] < 2) w2.exponents[0] = testutil::pick(rng, 2, 6);
        LRWord cat = w1;
        cat.exponents.insert(cat.exponents.end(), w2.exponents.begin(), w2.exponents.end());
        CHECK(ell(cat) == ell(w1) + ell(w2));
    }
}

TEST_CASE("gl2 length examples") {
    CHECK(gl2_length(M2(36, 115, 41, 131)).length == 3);
    CHECK(gl2_length(IntMatrix2::tau()).length == 0);
    CHECK(gl2_length(M2(-1, 0, 0, -1)).length == 1);
    CHECK(gl2_length(M2(1, 5, 1, 6)).length == 1);
    CHECK(gl2_length(M2(2, 3, 3, 5)).length == 2);
    CHECK_THROWS_AS(gl2_length(M2(2, 0, 0, 2)), MatrixError);
}

TEST_CASE("property: normalization witnesses verify; inverse symmetry") {
    testutil::Rng rng(3);
    for (int i = 0; i < 10000; ++i) {
        auto m = testutil::random_gl2(rng);
        auto res = gl2_length(m);
        CHECK(res.witness.verifies(m));
        CHECK(gl2_length(m.inverse()).length == res.length);
        CHECK(res.length >= 0);
    }
}

TEST_CASE("ordered matrices and continued fractions") {
    auto cf = ordered_to_cf(M2(36, 115, 41, 131));
    CHECK(cf.lower == std::vector<int64_t>{3, 5, 7, 1});
    CHECK(cf.upper == std::vector<int64_t>{3, 5, 7});
    CHECK(cf_value(cf.lower) == std::pair<int64_t, int64_t>{131, 41});
    CHECK(cf_value(cf.upper) == std::pair<int64_t, int64_t>{115, 36});

    CHECK(cf_to_word({1, 1}) == M2(1, 1, 1, 2));
    testutil::Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
        int64_t s1 = testutil::pick(rng, 1, 30), s2 = testutil::pick(rng, 1, 30);
        CHECK(cf_to_word({s1, s2}) == M2(1, s1, s2, s1 * s2 + 1));
    }

    CHECK_THROWS_AS(ordered_to_cf(M2(2, 1, 1, 1)), MatrixError);   // not ordered
    CHECK_THROWS_AS(ordered_to_cf(M2(1, 5, 1, 6).inverse()), MatrixError);
    CHECK_THROWS_AS(cf_to_word({1, 2, 3}), std::invalid_argument);  // odd length
    CHECK_THROWS_AS(cf_to_word({2}), std::invalid_argument);

    // round trip on random even words
    for (int i = 0; i < 1000; ++i) {
        auto w = testutil::random_word(rng);
        if (w.exponents.size() % 2) w.exponents.push_back(testutil::pick(rng, 1, 6));
        auto m = cf_to_word(w.exponents);
        auto back = ordered_to_cf(m);
        CHECK(back.lower == w.exponents);
    }
}

TEST_CASE("conjugate_to_ordered examples") {
    auto oc = conjugate_to_ordered(M2(1, 1, 1, 2));
    CHECK(oc.word == LRWord{{1, 1}});
    CHECK(oc.conjugator == IntMatrix2::ident());

    auto oc2 = conjugate_to_ordered(M2(2, 1, 1, 1));
    CHECK(oc2.word == LRWord{{1, 1}});
    CHECK(oc2.conjugator * M2(2, 1, 1, 1) * oc2.conjugator.inverse() == word_matrix(oc2.word));

    // R M(5,1) R^-1: cyclically equivalent to (5,1)
    IntMatrix2 r = IntMatrix2::R();
    IntMatrix2 m = r * M2(1, 5, 1, 6) * r.inverse();
    auto oc3 = conjugate_to_ordered(m);
    CHECK(oc3.conjugator * m * oc3.conjugator.inverse() == word_matrix(oc3.word));
    bool cyclic = oc3.word == LRWord{{5, 1}} || oc3.word == LRWord{{1, 5}};
    CHECK(cyclic);

    CHECK_THROWS_AS(conjugate_to_ordered(M2(1, 1, 0, 1)), MatrixError);   // trace 2
    CHECK_THROWS_AS(conjugate_to_ordered(M2(0, -1, 1, 0)), MatrixError);  // trace 0
}

TEST_CASE("property: conjugation postcondition on random conjugates") {
    testutil::Rng rng(5);
    int cases = 0;
    while (cases < 4000) {
        auto w = testutil::random_word(rng, 6, 4);
        if (w.exponents.size() % 2) w.exponents.push_back(testutil::pick(rng, 1, 4));
        IntMatrix2 base = word_matrix(w);
        if (base.trace() < 3) continue;
        auto g = testutil::random_gl2(rng, 6);
        IntMatrix2 m = g * base * g.inverse();
        ++cases;
        auto oc = conjugate_to_ordered(m);
        IntMatrix2 img = oc.conjugator * m * oc.conjugator.inverse();
        REQUIRE(img == word_matrix(oc.word));
        // the result is an ordered matrix
        CHECK(img.a >= 0);
        CHECK(img.a <= img.b);
        CHECK(img.b <= img.d);
        CHECK(img.a <= img.c);
        CHECK(img.c <= img.d);
        CHECK(oc.word.exponents.size() % 2 == 0);
    }
}

TEST_CASE("dynamical length examples") {
    CHECK(dynamical_length(M2(0, 1, 1, 1)) == Rational{1, 2});
    CHECK(dynamical_length(M2(1, 5, 1, 6)) == Rational{1, 1});
    CHECK(dynamical_length(M2(2, 3, 3, 5)) == Rational{2, 1});
    CHECK(dynamical_length(M2(0, -1, 1, 0)) == Rational{0, 1});
    CHECK(dynamical_length(M2(1, 7, 0, 1)) == Rational{0, 1});
    CHECK_THROWS_AS(dynamical_length(M2(2, 0, 0, 2)), MatrixError);
}

TEST_CASE("property: rotations with leading exponent >= 2 agree (letters <= 12)") {
    // exhaustive over even-length exponent tuples with letter count <= 12
    std::vector<int64_t> cur;
    std::function<void(int64_t)> rec = [&](int64_t remaining) {
        if (cur.size() % 2 == 0 && !cur.empty() &&
            *std::max_element(cur.begin(), cur.end()) >= 2) {
            int64_t want = -1;
            for (size_t k = 0; k < cur.size(); ++k) {
                if (cur[k] < 2) continue;
                std::vector<int64_t> rot(cur.begin() + static_cast<ptrdiff_t>(k), cur.end());
                rot.insert(rot.end(), cur.begin(), cur.begin() + static_cast<ptrdiff_t>(k));
                int64_t v = ell(LRWord{rot});
                if (want < 0) want = v;
                CHECK(v == want);
            }
        }
        if (cur.size() >= 12) return;
        for (int64_t s = 1; s <= remaining; ++s) {
            cur.push_back(s);
            rec(remaining - s);
            cur.pop_back();
        }
    };
    rec(12);
}

TEST_CASE("property: dynamical length is at most the length") {
    testutil::Rng rng(6);
    for (int i = 0; i < 5000; ++i) {
        auto m = testutil::random_gl2(rng);
        auto dyn = dynamical_length(m);
        int64_t len = gl2_length(m).length;
        CHECK(dyn.num <= checked_mul(len, dyn.den));
    }
}

TEST_CASE("monomial degree") {
    CHECK(monomial_degree(IntMatrix2::ident()) == 1);
    CHECK(monomial_degree(M2(1, 1, 1, 2)) == 3);
    CHECK(monomial_degree(M2(36, 115, 41, 131)) == 172);
    CHECK_THROWS_AS(monomial_degree(M2(1, -1, 0, 1)), MatrixError);
}

TEST_CASE("degree matrix powers") {
    auto id = degree_matrix_power(DegreeMatrix::A, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));

    CHECK(degree_matrix_power(DegreeMatrix::A, 1)[0][0] == 3);
    CHECK(degree_matrix_power(DegreeMatrix::A, 5)[0][0] == 144);

    // A follows d_n = 3 d_{n-1} - d_{n-2} (seeds 0, 1); its first row also
    // carries d_n - d_{n-1} and d_{n-1}
    BigInt dprev = 0, dcur = 1;
    for (int64_t n = 1; n <= 30; ++n) {
        BigInt dnext = 3 * dcur - dprev;
        auto an = degree_matrix_power(DegreeMatrix::A, n);
        CHECK(an[0][0] == dnext);
        CHECK(an[0][1] == dnext - dcur);
        CHECK(an[0][2] == dcur);
        dprev = dcur;
        dcur = dnext;
    }

    // B's top-left entries obey their own recursion
    // x_n = 3 x_{n-1} - 2 x_{n-2} + x_{n-3} (characteristic polynomial of B),
    // and the (1,4) entry is the difference of consecutive terms.
    BigInt x0 = 1, x1 = 3, x2 = 7;
    CHECK(degree_matrix_power(DegreeMatrix::B, 1)[0][0] == x1);
    CHECK(degree_matrix_power(DegreeMatrix::B, 2)[0][0] == x2);
    for (int64_t n = 3; n <= 30; ++n) {
        BigInt xn = 3 * x2 - 2 * x1 + x0;
        auto bn = degree_matrix_power(DegreeMatrix::B, n);
        CHECK(bn[0][0] == xn);
        CHECK(bn[0][3] == xn - x2);
        x0 = x1;
        x1 = x2;
        x2 = xn;
    }
}

TEST_CASE("matrix and word syntax") {
    CHECK(parse_matrix("[[36,115],[41,131]]") == M2(36, 115, 41, 131));
    CHECK(parse_matrix(" [ [ 1 , -5 ] , [ 0 , 1 ] ] ") == M2(1, -5, 0, 1));
    CHECK(format_matrix(M2(36, 115, 41, 131)) == "[[36,115],[41,131]]");
    CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]"), MatrixError);

    CHECK(parse_word("3,5,7,1") == LRWord{{3, 5, 7, 1}});
    CHECK(format_word(LRWord{{3, 5, 7, 1}}) == "3,5,7,1");
    CHECK_THROWS_AS(parse_word("3,0,1"), MatrixError);
}
