#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cremona/ints.hpp"

namespace cremona {

// Abstract model of the rank-unbounded lattice Z e0 + sum_q Z e_q on which
// the infinite Weyl group acts. Point labels are pure names: no position or
// infinitely-near structure is attached to them.

struct PointLabel {
    int32_t id = 0;
    friend auto operator<=>(const PointLabel&, const PointLabel&) = default;
};

// A class  a = degree * e0 - sum_q mult(q) * e_q.  Only nonzero
// multiplicities are stored, so the support of the map equals Base(a).
// Multiplicities may be negative here; positivity is a property of
// homaloidal types, not of the lattice.
class LatticeClass {
public:
    LatticeClass() = default;
    LatticeClass(int64_t degree, std::map<PointLabel, int64_t> mults)
        : degree_(degree), mults_(std::move(mults)) {
        prune_zeros();
    }

    // e0, the class of a line.
    static LatticeClass line() { return LatticeClass(1, {}); }

    // e_q, the class of the exceptional divisor of q (degree 0, mult -1).
    static LatticeClass exceptional(PointLabel q) { return LatticeClass(0, {{q, -1}}); }

    int64_t degree() const { return degree_; }
    int64_t mult(PointLabel q) const {
        auto it = mults_.find(q);
        return it == mults_.end() ? 0 : it->second;
    }
    const std::map<PointLabel, int64_t>& mults() const { return mults_; }
    std::set<PointLabel> base_points() const;

    friend bool operator==(const LatticeClass&, const LatticeClass&) = default;

private:
    int64_t degree_ = 0;
    std::map<PointLabel, int64_t> mults_;

    void prune_zeros();
};

// Intersection form: e0.e0 = 1, e_q.e_q = -1, mixed products 0.
int64_t intersect(const LatticeClass& a, const LatticeClass& b);

// Canonical form: omega(e0) = -3, omega(e_q) = -1.
int64_t canonical(const LatticeClass& a);

// Quadratic involution sigma_{p1,p2,p3}: v -> v + (xi.v) xi with
// xi = e0 - e_{p1} - e_{p2} - e_{p3}.  Labels must be pairwise distinct.
LatticeClass apply_sigma(const LatticeClass& a, PointLabel p1, PointLabel p2, PointLabel p3);

// Jonquieres involution iota_{q,delta}; |delta| must be even and q outside it.
LatticeClass apply_iota(const LatticeClass& a, PointLabel q, const std::set<PointLabel>& delta);

// Largest multiplicity over the support (0 on empty support), the labels
// attaining it, and comult = degree - max multiplicity.
int64_t max_mult(const LatticeClass& a);
std::set<PointLabel> max_mult_points(const LatticeClass& a);
int64_t comult(const LatticeClass& a);

// Noether equalities: sum m = 3(d-1) and sum m^2 = d^2 - 1.
bool noether_check(const LatticeClass& a);

}  // namespace cremona
