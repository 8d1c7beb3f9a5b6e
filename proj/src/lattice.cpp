#include "cremona/lattice.hpp"

#include <stdexcept>

namespace cremona {

void LatticeClass::prune_zeros() {
    for (auto it = mults_.begin(); it != mults_.end();) {
        if (it->second == 0)
            it = mults_.erase(it);
        else
            ++it;
    }
}

std::set<PointLabel> LatticeClass::base_points() const {
    std::set<PointLabel> out;
    for (const auto& [q, m] : mults_) out.insert(q);
    return out;
}

int64_t intersect(const LatticeClass& a, const LatticeClass& b) {
    int64_t acc = checked_mul(a.degree(), b.degree());
    // Supports are sorted maps; walk the smaller one.
    const auto& small = a.mults().size() <= b.mults().size() ? a.mults() : b.mults();
    const LatticeClass& other = a.mults().size() <= b.mults().size() ? b : a;
    for (const auto& [q, m] : small)
        acc = checked_sub(acc, checked_mul(m, other.mult(q)));
    return acc;
}

int64_t canonical(const LatticeClass& a) {
    int64_t acc = checked_mul(-3, a.degree());
    for (const auto& [q, m] : a.mults()) acc = checked_add(acc, m);
    return acc;
}

LatticeClass apply_sigma(const LatticeClass& a, PointLabel p1, PointLabel p2, PointLabel p3) {
    if (p1 == p2 || p1 == p3 || p2 == p3)
        throw std::invalid_argument("apply_sigma: labels must be pairwise distinct");
    // t = xi . a  with  xi = e0 - e_{p1} - e_{p2} - e_{p3}
    int64_t t = checked_sub(checked_sub(checked_sub(a.degree(), a.mult(p1)), a.mult(p2)), a.mult(p3));
    auto mults = a.mults();
    mults[p1] = checked_add(a.mult(p1), t);
    mults[p2] = checked_add(a.mult(p2), t);
    mults[p3] = checked_add(a.mult(p3), t);
    return LatticeClass(checked_add(a.degree(), t), std::move(mults));
}

LatticeClass apply_iota(const LatticeClass& a, PointLabel q, const std::set<PointLabel>& delta) {
    if (delta.count(q)) throw std::invalid_argument("apply_iota: q must not belong to delta");
    if (delta.size() % 2 != 0) throw std::invalid_argument("apply_iota: |delta| must be even");

    const auto n = static_cast<int64_t>(delta.size() / 2);
    const int64_t d = a.degree();
    const int64_t mq = a.mult(q);
    int64_t delta_sum = 0;
    for (PointLabel r : delta) delta_sum = checked_add(delta_sum, a.mult(r));

    // Images of the basis vectors give, for  a = d e0 - mq e_q - sum m_r e_r - rest:
    //   d'   = (n+1) d - n mq - sum_{delta} m_r
    //   mq'  =   n   d - (n-1) mq - sum_{delta} m_r
    //   m_r' = d - mq - m_r            (r in delta)
    int64_t d2 = checked_sub(checked_sub(checked_mul(n + 1, d), checked_mul(n, mq)), delta_sum);
    int64_t mq2 = checked_sub(checked_sub(checked_mul(n, d), checked_mul(n - 1, mq)), delta_sum);

    auto mults = a.mults();
    mults[q] = mq2;
    for (PointLabel r : delta)
        mults[r] = checked_sub(checked_sub(d, mq), a.mult(r));
    return LatticeClass(d2, std::move(mults));
}

int64_t max_mult(const LatticeClass& a) {
    int64_t best = 0;
    bool seen = false;
    for (const auto& [q, m] : a.mults()) {
        if (!seen || m > best) best = m;
        seen = true;
    }
    return seen ? best : 0;
}

std::set<PointLabel> max_mult_points(const LatticeClass& a) {
    std::set<PointLabel> out;
    if (a.mults().empty()) return out;
    int64_t best = max_mult(a);
    for (const auto& [q, m] : a.mults())
        if (m == best) out.insert(q);
    return out;
}

int64_t comult(const LatticeClass& a) { return checked_sub(a.degree(), max_mult(a)); }

bool noether_check(const LatticeClass& a) {
    int64_t sum = 0, sq = 0;
    for (const auto& [q, m] : a.mults()) {
        sum = checked_add(sum, m);
        sq = checked_add(sq, checked_mul(m, m));
    }
    int64_t d = a.degree();
    return sum == checked_mul(3, checked_sub(d, 1)) &&
           sq == checked_sub(checked_mul(d, d), 1);
}

}  // namespace cremona
