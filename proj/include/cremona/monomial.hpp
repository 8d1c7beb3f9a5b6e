#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cremona/ints.hpp"

namespace cremona {

struct MatrixError : std::runtime_error {
    explicit MatrixError(const std::string& what) : std::runtime_error(what) {}
};

// A 2x2 integer matrix [[a,b],[c,d]].  The monomial transformation attached
// to it is [x:y:1] -> [x^a y^b : x^c y^d : 1].
struct IntMatrix2 {
    int64_t a = 1, b = 0, c = 0, d = 1;

    int64_t det() const {
        return checked_sub(checked_mul(a, d), checked_mul(b, c));
    }
    int64_t trace() const { return checked_add(a, d); }
    bool nonnegative() const { return a >= 0 && b >= 0 && c >= 0 && d >= 0; }

    // Inverse for |det| = 1.
    IntMatrix2 inverse() const;

    friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
        return IntMatrix2{checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
                          checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
                          checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
                          checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
    }
    friend IntMatrix2 operator-(const IntMatrix2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

    static IntMatrix2 ident() { return {1, 0, 0, 1}; }
    static IntMatrix2 L() { return {1, 0, 1, 1}; }
    static IntMatrix2 R() { return {1, 1, 0, 1}; }
    // tau = [[0,1],[1,0]]; conjugation by it swaps L and R.
    static IntMatrix2 tau() { return {0, 1, 1, 0}; }
    // P = [[0,1],[-1,0]]; P R^-1 P^-1 = L and P L^-1 P^-1 = R.
    static IntMatrix2 P() { return {0, 1, -1, 0}; }
};

// Exponent tuple (s_1,...,s_n) encoding ... L^{s_2} R^{s_1}: the word of
// M(s_1,...,s_n), whose rightmost block is an R-block.  Empty = identity.
struct LRWord {
    std::vector<int64_t> exponents;
    bool empty() const { return exponents.size() == 0; }
    friend bool operator==(const LRWord&, const LRWord&) = default;
};

IntMatrix2 word_matrix(const LRWord& w);

// The six matrices of GL2(Z) acting by coordinate permutations on P^2,
// generated by [[0,1],[1,0]] and [[1,-1],[0,-1]].  Fixed order.
const std::array<IntMatrix2, 6>& sym3();
bool in_sym3(const IntMatrix2& m);

// Unique free-monoid factorization of a matrix with nonnegative entries and
// determinant 1.  When the word ends in L the matrix is conjugated by tau
// first so that the stored tuple always encodes an S_R word; tau_flipped
// records whether this happened.
struct FactorResult {
    LRWord word;
    bool tau_flipped = false;
};
FactorResult factor_word(const IntMatrix2& m);

// Length of M(s_1,...,s_n) as a plane Cremona transformation.
int64_t ell(const LRWord& w);

// Witness for the reduction of an arbitrary GL2(Z) matrix to M(s_1,...,s_n):
// sign * A * M * B == word_matrix(word), with A, B coordinate permutations.
struct NormalizationWitness {
    IntMatrix2 A, B;
    int sign = 1;
    LRWord word;
    bool verifies(const IntMatrix2& m) const;
};

struct GL2Length {
    int64_t length = 0;
    NormalizationWitness witness;
};
GL2Length gl2_length(const IntMatrix2& m);

// For an ordered matrix (0 <= a <= b <= d, 0 <= a <= c <= d), the two
// continued fractions b/a = [s_1; s_2,...,s_{n-1}] and d/c = [s_1; ..., s_n].
struct ContinuedFractions {
    std::vector<int64_t> upper;  // expansion of b/a
    std::vector<int64_t> lower;  // expansion of d/c
};
ContinuedFractions ordered_to_cf(const IntMatrix2& m);

// Even-length expansion [s_1; s_2, ..., s_n] -> L^{s_n} ... L^{s_2} R^{s_1}.
IntMatrix2 cf_to_word(const std::vector<int64_t>& s);

// For det = 1 and trace >= 3: an even word W and C in GL2(Z) with
// C * M * C^-1 == word_matrix(W) and word_matrix(W) ordered.  All eigenvalue
// slope comparisons are done in exact integer arithmetic.
struct OrderedConjugation {
    LRWord word;
    IntMatrix2 conjugator;
};
OrderedConjugation conjugate_to_ordered(const IntMatrix2& m);

// Exact nonnegative rational (den 1 or 2 in every reachable case).
struct Rational {
    int64_t num = 0;
    int64_t den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

Rational dynamical_length(const IntMatrix2& m);

// Degree of the monomial map of a matrix in SL2(Z) with nonnegative entries:
// max(a+b, c+d).
int64_t monomial_degree(const IntMatrix2& m);

// The two fixed 4x4 integer matrices driving the quadratic-map degree
// iterations, and their exact powers (unbounded integers).
using BigInt = boost::multiprecision::cpp_int;
using Matrix4 = std::array<std::array<BigInt, 4>, 4>;

enum class DegreeMatrix { A, B };
Matrix4 degree_matrix(DegreeMatrix which);
Matrix4 degree_matrix_power(DegreeMatrix which, int64_t n);

// CLI-facing syntax: matrices as [[a,b],[c,d]], words as comma-separated
// exponents.
IntMatrix2 parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix2& m);
LRWord parse_word(std::string_view text);
std::string format_word(const LRWord& w);

}  // namespace cremona
