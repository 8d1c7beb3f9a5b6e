#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
struct NegativeEntryError : std::runtime_error {
    explicit NegativeEntryError(const std::string& what) : std::runtime_error(what) {}
};
struct NoetherViolationError : std::runtime_error {
    explicit NoetherViolationError(const std::string& what) : std::runtime_error(what) {}
};
struct DegreeOneError : std::runtime_error {
    explicit DegreeOneError(const std::string& what) : std::runtime_error(what) {}
};

// One state of the Hudson descent, with multiplicities sorted
// non-increasingly (zero entries removed, negative ones kept).
struct HudsonStep {
    int64_t degree = 0;
    std::vector<int64_t> mults;
    friend bool operator==(const HudsonStep&, const HudsonStep&) = default;
};

struct HudsonResult {
    bool proper = false;
    std::vector<HudsonStep> trace;  // includes the starting state
};

struct NotProperError : std::runtime_error {
    explicit NotProperError(const std::string& what, std::vector<HudsonStep> t = {})
        : std::runtime_error(what), trace(std::move(t)) {}
    std::vector<HudsonStep> trace;
};

// A proper homaloidal type: a degree d >= 1 together with the non-increasing
// list of positive base-point multiplicities (empty exactly when d = 1).
// Validation (Noether equalities + Hudson test) happens in make(); every
// instance in circulation satisfies all invariants.
class HomaloidalType {
public:
    // The type (1) of the linear maps.
    static HomaloidalType identity() { return HomaloidalType(1, {}); }

    // Canonicalizes and validates raw data.  Throws NegativeEntryError,
    // NoetherViolationError, NotProperError or OverflowError.
    static HomaloidalType make(int64_t degree, std::vector<int64_t> raw_mults);

    int64_t degree() const { return degree_; }
    const std::vector<int64_t>& mults() const { return mults_; }
    // Number of base-points.
    int64_t base_count() const { return static_cast<int64_t>(mults_.size()); }
    int64_t max_mult() const { return mults_.empty() ? 0 : mults_.front(); }
    int64_t comult() const { return degree_ - max_mult(); }

    // Materializes the class  d e0 - sum m_i e_{i}  on labels 0..r-1.
    LatticeClass to_lattice() const;

    friend bool operator==(const HomaloidalType&, const HomaloidalType&) = default;
    // Orders by degree, then anti-lexicographically on multiplicities (the
    // ordering used by the degree tables).
    friend bool operator<(const HomaloidalType& a, const HomaloidalType& b);

private:
    HomaloidalType(int64_t degree, std::vector<int64_t> mults)
        : degree_(degree), mults_(std::move(mults)) {}

    int64_t degree_;
    std::vector<int64_t> mults_;

    friend HomaloidalType predecessor(const HomaloidalType&);
    friend HomaloidalType castelnuovo_predecessor(const HomaloidalType&);
    friend std::vector<HomaloidalType> enumerate_types(
        int64_t, const std::function<void(const HomaloidalType&)>&);
};

struct TypeHash {
    size_t operator()(const HomaloidalType& t) const;
};

// Hudson's test: decides whether (degree; mults) lies in the Weyl orbit of
// e0.  Requires the Noether equalities (otherwise the descent need not
// terminate); throws std::invalid_argument when they fail.  The returned
// trace lists every intermediate state.
HudsonResult hudson_test(int64_t degree, std::vector<int64_t> mults);

// The set S of admissible half-lengths s for the predecessor move:
// S = { s >= 1 | m0 + m_{2s-1} + m_{2s} >= d >= m0 + m_{2s+1} + m_{2s+2} },
// indices into the padded non-increasing multiplicity sequence.
// Non-empty and made of consecutive integers for every proper type of
// degree >= 2.  Throws DegreeOneError on (1).
std::set<int64_t> s_set(const HomaloidalType& t);

// The unique predecessor type (computed with s = min S).
HomaloidalType predecessor(const HomaloidalType& t);

// Castelnuovo reduction: the involution iota at a point of maximal
// multiplicity and the major base-points M = { q != p | m_p + 2 m_q > d }
// (dropping one of minimal multiplicity when |M| is odd).
HomaloidalType castelnuovo_predecessor(const HomaloidalType& t);

struct PredecessorChain {
    std::vector<HomaloidalType> steps;  // starts at the input, ends at (1)
    int64_t length() const { return static_cast<int64_t>(steps.size()) - 1; }
};

PredecessorChain chain(const HomaloidalType& t);
int64_t length(const HomaloidalType& t);

// Jonquieres types: (1) or (d; d-1, 1^{2d-2}).
bool is_jonquieres(const HomaloidalType& t);

// All proper homaloidal types of degree exactly d, sorted
// anti-lexicographically on the multiplicity vectors (table order).
// If big_s_diagnostic is set it is called for every type whose set S
// contains three or more elements (an open question; never an error).
std::vector<HomaloidalType> enumerate_types(
    int64_t d, const std::function<void(const HomaloidalType&)>& big_s_diagnostic = nullptr);

// Distance from the identity vertex in the Wright graph: 2 * length.
int64_t wright_distance(const HomaloidalType& t);

// Text grammar shared by the CLI and the test fixtures:
//   (d; m1^e1, m2^e2, ...)   with ^e optional when e = 1,  and  (1).
// Whitespace-insensitive.  parse_raw_type performs no validation and is
// used where improper data is expected (e.g. the hudson command).
std::pair<int64_t, std::vector<int64_t>> parse_raw_type(std::string_view text);
HomaloidalType parse_type(std::string_view text);
std::string format_type(const HomaloidalType& t);
std::string format_raw_type(int64_t degree, const std::vector<int64_t>& mults);

}  // namespace cremona
