#include "cremona/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <sstream>

namespace cremona {

IntMatrix2 IntMatrix2::inverse() const {
    int64_t dt = det();
    if (dt == 1) return {d, -b, -c, a};
    if (dt == -1) return {-d, b, c, -a};
    throw MatrixError("inverse: determinant must be +1 or -1");
}

IntMatrix2 word_matrix(const LRWord& w) {
    // M(s_1,...,s_n) = B_n B_{n-1} ... B_1 with B_i = R^{s_i} (i odd), L^{s_i} (i even).
    IntMatrix2 m = IntMatrix2::ident();
    for (size_t i = w.exponents.size(); i-- > 0;) {
        int64_t s = w.exponents[i];
        if (s < 1) throw std::invalid_argument("word_matrix: exponents must be positive");
        IntMatrix2 block = (i % 2 == 0) ? IntMatrix2{1, s, 0, 1} : IntMatrix2{1, 0, s, 1};
        m = m * block;
    }
    return m;
}

const std::array<IntMatrix2, 6>& sym3() {
    static const std::array<IntMatrix2, 6> g = [] {
        IntMatrix2 tau = IntMatrix2::tau();
        IntMatrix2 nu{1, -1, 0, -1};
        return std::array<IntMatrix2, 6>{IntMatrix2::ident(), tau, nu,
                                         tau * nu, nu * tau, tau * nu * tau};
    }();
    return g;
}

bool in_sym3(const IntMatrix2& m) {
    for (const auto& g : sym3())
        if (g == m) return true;
    return false;
}

namespace {

// Left-to-right block decomposition of a nonzero word in the free monoid
// <L,R>.  Requires nonnegative entries, det 1, m != id.
std::vector<std::pair<char, int64_t>> monoid_blocks(IntMatrix2 m) {
    std::vector<std::pair<char, int64_t>> rev;  // peeled from the right
    while (!(m == IntMatrix2::ident())) {
        if (m.a < 0 || m.b < 0 || m.c < 0 || m.d < 0 || m.det() != 1)
            throw MatrixError("not an element of the free monoid on L and R");
        bool in_r = m.a <= m.b && m.c <= m.d;
        bool in_l = m.a >= m.b && m.c >= m.d;
        int64_t k;
        if (in_r && !in_l) {
            k = (m.c == 0) ? m.b : std::min(m.b / m.a, m.d / m.c);
            m = IntMatrix2{m.a, m.b - checked_mul(k, m.a), m.c, m.d - checked_mul(k, m.c)};
            rev.emplace_back('R', k);
        } else if (in_l && !in_r) {
            k = (m.b == 0) ? m.c : std::min(m.a / m.b, m.c / m.d);
            m = IntMatrix2{m.a - checked_mul(k, m.b), m.b, m.c - checked_mul(k, m.d), m.d};
            rev.emplace_back('L', k);
        } else {
            throw MatrixError("not an element of the free monoid on L and R");
        }
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

LRWord blocks_to_word(const std::vector<std::pair<char, int64_t>>& blocks) {
    // blocks run left to right; exponent s_1 is the rightmost (R) block.
    LRWord w;
    w.exponents.reserve(blocks.size());
    for (size_t i = blocks.size(); i-- > 0;) w.exponents.push_back(blocks[i].second);
    // alternation sanity: rightmost block is R, letters alternate
    for (size_t i = 0; i < blocks.size(); ++i) {
        char expect = ((blocks.size() - i) % 2 == 1) ? 'R' : 'L';
        if (blocks[i].first != expect) throw MatrixError("word does not end with an R-block");
    }
    return w;
}

}  // namespace

FactorResult factor_word(const IntMatrix2& m) {
    if (!m.nonnegative()) throw MatrixError("factor_word: entries must be nonnegative");
    if (m.det() != 1) throw MatrixError("factor_word: determinant must be 1");
    FactorResult out;
    if (m == IntMatrix2::ident()) return out;
    IntMatrix2 n = m;
    if (m.a >= m.b && m.c >= m.d) {  // word ends with L: conjugate by tau
        n = IntMatrix2{m.d, m.c, m.b, m.a};
        out.tau_flipped = true;
    }
    out.word = blocks_to_word(monoid_blocks(n));
    return out;
}

int64_t ell(const LRWord& w) {
    for (int64_t s : w.exponents)
        if (s < 1) throw std::invalid_argument("ell: exponents must be positive");
    std::vector<int64_t> s = w.exponents;
    size_t pos = 0;
    int64_t count = 0;
    for (;;) {
        size_t n = s.size() - pos;
        if (n == 0) return count;
        if (n == 1) return count + 1;
        if (n == 2) return count + (s[pos + 1] == 1 ? 1 : 2);
        if (s[pos + 1] >= 2) {
            ++pos;       // drop s_1, s_2 - 1 becomes the new head
            --s[pos];
        } else {
            pos += 2;    // drop s_1, s_2
        }
        ++count;
    }
}

bool NormalizationWitness::verifies(const IntMatrix2& m) const {
    IntMatrix2 prod = A * m * B;
    if (sign < 0) prod = -prod;
    return prod == word_matrix(word);
}

GL2Length gl2_length(const IntMatrix2& m) {
    int64_t dt = m.det();
    if (dt != 1 && dt != -1) throw MatrixError("gl2_length: |det| must be 1");

    if (in_sym3(m))
        return {0, {m.inverse(), IntMatrix2::ident(), 1, {}}};
    if (in_sym3(-m))
        return {1, {(-m).inverse(), IntMatrix2::ident(), -1, {}}};

    // 6 x 6 x 2 normalization candidates; fixed order, first hit wins.
    for (const auto& A : sym3()) {
        for (const auto& B : sym3()) {
            for (int sign : {1, -1}) {
                IntMatrix2 cand = A * m * B;
                if (sign < 0) cand = -cand;
                if (cand.det() != 1 || !cand.nonnegative()) continue;
                NormalizationWitness w{A, B, sign, {}};
                if (cand.a >= cand.b && cand.c >= cand.d && !(cand == IntMatrix2::ident())) {
                    // fold the tau-flip into the witness
                    IntMatrix2 tau = IntMatrix2::tau();
                    w.A = tau * w.A;
                    w.B = w.B * tau;
                    cand = IntMatrix2{cand.d, cand.c, cand.b, cand.a};
                }
                auto f = factor_word(cand);
                assert(!f.tau_flipped);
                w.word = f.word;
                return {ell(f.word), w};
            }
        }
    }
    throw MatrixError("gl2_length: normalization failed");  // unreachable
}

namespace {

bool is_ordered(const IntMatrix2& m) {
    return 0 <= m.a && m.a <= m.b && m.b <= m.d && m.a <= m.c && m.c <= m.d;
}

}  // namespace

ContinuedFractions ordered_to_cf(const IntMatrix2& m) {
    if (m.det() != 1 || !is_ordered(m)) throw MatrixError("ordered_to_cf: matrix is not ordered");
    auto f = factor_word(m);
    if (f.tau_flipped || f.word.exponents.size() < 2 || f.word.exponents.size() % 2 != 0)
        throw MatrixError("ordered_to_cf: matrix is not ordered");
    ContinuedFractions cf;
    cf.lower = f.word.exponents;
    cf.upper = f.word.exponents;
    cf.upper.pop_back();
    return cf;
}

IntMatrix2 cf_to_word(const std::vector<int64_t>& s) {
    if (s.size() < 2 || s.size() % 2 != 0)
        throw std::invalid_argument("cf_to_word: expansion length must be even and >= 2");
    for (int64_t v : s)
        if (v < 1) throw std::invalid_argument("cf_to_word: entries must be positive");
    return word_matrix(LRWord{s});
}

// ---------------------------------------------------------------------------
// Conjugation to an ordered word.  The eigenvector slopes of M are the roots
// of  b x^2 + (a-d) x - c;  with trace >= 3 and det 1 they are conjugate
// quadratic irrationals (the discriminant trace^2 - 4 is positive and never
// a square), so every comparison below is an exact integer sign evaluation.

namespace {

// sign of A + B*sqrt(D), D > 0 not a square
int sign_quad(int64_t A, int64_t B, int64_t D) {
    if (B == 0) return sign_of(A);
    if (A >= 0 && B > 0) return 1;
    if (A <= 0 && B < 0) return -1;
    int64_t lhs = checked_mul(A, A);
    int64_t rhs = checked_mul(checked_mul(B, B), D);
    if (A >= 0)  // B < 0
        return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;  // A < 0, B > 0
}

// (p + eps*sqrt(D)) / q  with q != 0, eps = +-1
struct Slope {
    int64_t p, q, D;
    int eps;

    int sign() const { return sign_quad(p, eps, D) * sign_of(q); }

    // sign of (this - u/v), v > 0
    int cmp(int64_t u, int64_t v) const {
        int64_t A = checked_sub(checked_mul(p, v), checked_mul(u, q));
        int64_t B = checked_mul(eps, v);
        return sign_quad(A, B, D) * sign_of(q);
    }

    int64_t floor() const {
        double approx = (static_cast<double>(p) + eps * std::sqrt(static_cast<double>(D))) /
                        static_cast<double>(q);
        // estimate only; the exact comparisons below settle the value
        approx = std::clamp(approx, -1e18, 1e18);
        auto t = static_cast<int64_t>(std::floor(approx));
        while (cmp(t, 1) < 0) --t;
        while (cmp(checked_add(t, 1), 1) >= 0) ++t;
        return t;
    }
};

std::pair<Slope, Slope> slopes_of(const IntMatrix2& m) {
    int64_t D = checked_sub(checked_mul(m.trace(), m.trace()), 4);
    int64_t p = checked_sub(m.d, m.a);
    int64_t q = checked_mul(2, m.b);
    Slope lo{p, q, D, q > 0 ? -1 : 1};
    Slope hi{p, q, D, q > 0 ? 1 : -1};
    return {lo, hi};
}

IntMatrix2 pow_L(int64_t s) { return {1, 0, s, 1}; }

}  // namespace

OrderedConjugation conjugate_to_ordered(const IntMatrix2& m) {
    if (m.det() != 1) throw MatrixError("conjugate_to_ordered: determinant must be 1");
    if (m.trace() < 3) throw MatrixError("conjugate_to_ordered: trace must be >= 3");

    IntMatrix2 cur = m;
    IntMatrix2 conj = IntMatrix2::ident();
    auto apply = [&](const IntMatrix2& g) {
        cur = g * cur * g.inverse();
        conj = g * conj;
    };

    // Reduce until the two slopes have opposite signs.  The slope product is
    // -c/b, so the matrices with b*c > 0 are exactly the finished ones.
    for (int guard = 0; !(checked_mul(cur.b, cur.c) > 0); ++guard) {
        if (guard > 300) throw MatrixError("conjugate_to_ordered: reduction failed to terminate");
        auto [lo, hi] = slopes_of(cur);
        int64_t n = checked_add(lo.floor(), 1);
        if (hi.cmp(n, 1) > 0) {
            // an integer lies strictly between the slopes: shift it to 0
            apply(pow_L(checked_neg(n)));
        } else {
            // both slopes in (n-1, n): shift into (0,1), and further into
            // (-1/2, 1/2) when neither lands below 1/2, then invert.  The
            // slope gap grows by a factor > 2 every pass.
            int64_t s = checked_neg(lo.floor());
            // shifted slope >= 1/2  <=>  slope >= (1 - 2s)/2
            if (lo.cmp(checked_sub(1, checked_mul(2, s)), 2) > 0 &&
                hi.cmp(checked_sub(1, checked_mul(2, s)), 2) > 0)
                s = checked_sub(s, 1);
            apply(pow_L(s));
            apply(IntMatrix2::P());
        }
    }

    // Opposite-sign slopes.  If the eigenvalue of the positive slope exceeds
    // 1 the matrix itself is a positive word; otherwise its inverse is.
    auto [lo, hi] = slopes_of(cur);
    Slope pos = lo.sign() > 0 ? lo : hi;
    // mu = a + b*pos > 1  <=>  (a-1)q + b p + b*eps*sqrt(D) has the sign of q
    int mu_cmp = sign_quad(checked_add(checked_mul(checked_sub(cur.a, 1), pos.q),
                                       checked_mul(cur.b, pos.p)),
                           checked_mul(cur.b, pos.eps), pos.D) *
                 sign_of(pos.q);
    bool invert = mu_cmp < 0;

    IntMatrix2 n_mat = invert ? cur.inverse() : cur;
    IntMatrix2 rot = IntMatrix2::ident();
    auto blocks = monoid_blocks(n_mat);
    // rotate blocks until the word starts with L and ends with R
    for (int guard = 0; blocks.front().first != 'L' || blocks.back().first != 'R'; ++guard) {
        if (guard > 4) throw MatrixError("conjugate_to_ordered: rotation failed");
        IntMatrix2 x;
        if (blocks.back().first == 'L') {
            // move the trailing L-block to the front
            auto [letter, k] = blocks.back();
            x = pow_L(k);
            n_mat = x * n_mat * x.inverse();
        } else {
            // move the leading R-block to the back
            auto [letter, k] = blocks.front();
            x = IntMatrix2{1, k, 0, 1}.inverse();
            n_mat = x * n_mat * x.inverse();
        }
        rot = x * rot;
        blocks = monoid_blocks(n_mat);
    }

    LRWord word = blocks_to_word(blocks);
    IntMatrix2 full = rot * conj;
    if (invert) {
        std::reverse(word.exponents.begin(), word.exponents.end());
        full = IntMatrix2::P() * rot * conj;
    }
    return {word, full};
}

Rational dynamical_length(const IntMatrix2& m) {
    int64_t dt = m.det();
    if (dt != 1 && dt != -1) throw MatrixError("dynamical_length: |det| must be 1");

    auto dyn_det1 = [](const IntMatrix2& x) -> int64_t {
        int64_t tr = x.trace();
        if (tr >= -2 && tr <= 2) return 0;  // finite order or a shear
        IntMatrix2 n = tr >= 3 ? x : -x;
        auto oc = conjugate_to_ordered(n);
        auto& e = oc.word.exponents;
        // rotate the cyclic block word so the leading exponent is >= 2;
        // when all exponents are 1 the word is (LR)^k of length k
        size_t lead = 0;
        while (lead < e.size() && e[lead] < 2) ++lead;
        if (lead == e.size()) return static_cast<int64_t>(e.size() / 2);
        std::rotate(e.begin(), e.begin() + static_cast<ptrdiff_t>(lead), e.end());
        return ell(oc.word);
    };

    if (dt == 1) return {dyn_det1(m), 1};
    int64_t twice = dyn_det1(m * m);
    if (twice % 2 == 0) return {twice / 2, 1};
    return {twice, 2};
}

int64_t monomial_degree(const IntMatrix2& m) {
    if (!m.nonnegative()) throw MatrixError("monomial_degree: entries must be nonnegative");
    if (m.det() != 1) throw MatrixError("monomial_degree: determinant must be 1");
    return std::max(checked_add(m.a, m.b), checked_add(m.c, m.d));
}

// ---------------------------------------------------------------------------
// Degree matrices of the two quadratic-map iterations

Matrix4 degree_matrix(DegreeMatrix which) {
    auto fill = [](std::array<std::array<int, 4>, 4> v) {
        Matrix4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m[i][j] = v[i][j];
        return m;
    };
    if (which == DegreeMatrix::A)
        return fill({{{3, 2, 1, 1}, {0, 0, 0, 0}, {-1, -1, 0, 0}, {0, 0, 0, 0}}});
    return fill({{{3, 1, 1, 2}, {-1, 0, -1, -1}, {-1, 0, 0, -1}, {0, 0, 0, 0}}});
}

namespace {

Matrix4 mat4_identity() {
    Matrix4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = (i == j) ? 1 : 0;
    return m;
}

Matrix4 mat4_mul(const Matrix4& x, const Matrix4& y) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            BigInt acc = 0;
            for (int k = 0; k < 4; ++k) acc += x[i][k] * y[k][j];
            r[i][j] = acc;
        }
    return r;
}

}  // namespace

Matrix4 degree_matrix_power(DegreeMatrix which, int64_t n) {
    if (n < 0) throw std::invalid_argument("degree_matrix_power: n must be >= 0");
    Matrix4 base = degree_matrix(which);
    Matrix4 acc = mat4_identity();
    while (n > 0) {
        if (n & 1) acc = mat4_mul(acc, base);
        base = mat4_mul(base, base);
        n >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// CLI syntax

namespace {

struct Scan {
    std::string_view s;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    void expect(char c) {
        ws();
        if (i >= s.size() || s[i] != c)
            throw MatrixError(std::string("expected '") + c + "' in matrix literal");
        ++i;
    }
    int64_t integer() {
        ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, v);
        if (ec != std::errc() || start == i) throw MatrixError("expected integer in matrix literal");
        return v;
    }
    bool done() {
        ws();
        return i == s.size();
    }
};

}  // namespace

IntMatrix2 parse_matrix(std::string_view text) {
    Scan sc{text};
    sc.expect('[');
    sc.expect('[');
    IntMatrix2 m;
    m.a = sc.integer();
    sc.expect(',');
    m.b = sc.integer();
    sc.expect(']');
    sc.expect(',');
    sc.expect('[');
    m.c = sc.integer();
    sc.expect(',');
    m.d = sc.integer();
    sc.expect(']');
    sc.expect(']');
    if (!sc.done()) throw MatrixError("trailing characters after matrix literal");
    return m;
}

std::string format_matrix(const IntMatrix2& m) {
    std::ostringstream os;
    os << "[[" << m.a << ',' << m.b << "],[" << m.c << ',' << m.d << "]]";
    return os.str();
}

LRWord parse_word(std::string_view text) {
    Scan sc{text};
    LRWord w;
    for (;;) {
        w.exponents.push_back(sc.integer());
        sc.ws();
        if (sc.i < sc.s.size() && sc.s[sc.i] == ',') {
            ++sc.i;
            continue;
        }
        break;
    }
    if (!sc.done()) throw MatrixError("trailing characters after word");
    for (int64_t v : w.exponents)
        if (v < 1) throw MatrixError("word exponents must be positive");
    return w;
}

std::string format_word(const LRWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.exponents.size(); ++i) {
        if (i) os << ',';
        os << w.exponents[i];
    }
    return os.str();
}

}  // namespace cremona
