#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "cremona/homaloidal.hpp"
#include "cremona/lattice.hpp"
#include "cremona/monomial.hpp"

namespace testutil {

using namespace cremona;

using Rng = std::mt19937_64;

inline int64_t pick(Rng& rng, int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

// Random class with small support and multiplicities in [-bound, bound];
// not necessarily in the Weyl orbit of e0.
inline LatticeClass random_class(Rng& rng, int max_labels = 10, int64_t bound = 9) {
    std::map<PointLabel, int64_t> mm;
    int n = static_cast<int>(pick(rng, 0, max_labels));
    for (int i = 0; i < n; ++i) {
        int64_t m = pick(rng, -bound, bound);
        if (m != 0) mm[PointLabel{static_cast<int32_t>(pick(rng, 0, 19))}] = m;
    }
    return LatticeClass(pick(rng, -bound, bound), std::move(mm));
}

// Random element of the Weyl orbit of e0, built by applying random iota
// moves; every result is a proper homaloidal class.  Degrees are kept below
// max_degree by discarding oversized moves.
inline LatticeClass random_orbit_class(Rng& rng, int moves = 4, int64_t max_degree = 400) {
    LatticeClass a = LatticeClass::line();
    int32_t next_label = 0;
    for (int step = 0; step < moves; ++step) {
        auto base = a.base_points();
        std::vector<PointLabel> pool(base.begin(), base.end());
        int fresh = static_cast<int>(pick(rng, 1, 3)) * 2 + 1;
        for (int i = 0; i < fresh; ++i) pool.push_back(PointLabel{next_label + i});

        std::shuffle(pool.begin(), pool.end(), rng);
        PointLabel q = pool.back();
        pool.pop_back();
        int64_t want = pick(rng, 1, static_cast<int64_t>(pool.size() / 2));
        std::set<PointLabel> delta(pool.begin(), pool.begin() + 2 * want);

        LatticeClass b = apply_iota(a, q, delta);
        if (b.degree() > max_degree) continue;
        a = b;
        next_label += fresh;
    }
    return a;
}

inline HomaloidalType to_type(const LatticeClass& a) {
    std::vector<int64_t> m;
    for (const auto& [q, v] : a.mults()) m.push_back(v);
    return HomaloidalType::make(a.degree(), std::move(m));
}

inline HomaloidalType random_type(Rng& rng, int moves = 4, int64_t max_degree = 400) {
    return to_type(random_orbit_class(rng, moves, max_degree));
}

// Random GL2(Z) matrix as a short word in L, R, tau, -id; entries stay small.
inline IntMatrix2 random_gl2(Rng& rng, int letters = 8) {
    IntMatrix2 m = IntMatrix2::ident();
    for (int i = 0; i < letters; ++i) {
        switch (pick(rng, 0, 5)) {
            case 0: m = m * IntMatrix2::L(); break;
            case 1: m = m * IntMatrix2::R(); break;
            case 2: m = m * IntMatrix2::L().inverse(); break;
            case 3: m = m * IntMatrix2::R().inverse(); break;
            case 4: m = m * IntMatrix2::tau(); break;
            default: m = -m; break;
        }
    }
    return m;
}

inline LRWord random_word(Rng& rng, int max_blocks = 8, int64_t max_exp = 6) {
    LRWord w;
    int n = static_cast<int>(pick(rng, 1, max_blocks));
    for (int i = 0; i < n; ++i) w.exponents.push_back(pick(rng, 1, max_exp));
    return w;
}

}  // namespace testutil
