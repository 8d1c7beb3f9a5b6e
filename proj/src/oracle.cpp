#include "cremona/oracle.hpp"

#include <algorithm>
#include <limits>
#include <functional>
#include <map>
#include <queue>
#include <unordered_set>

namespace cremona {

BrutePredecessor brute_predecessor(const HomaloidalType& t) {
    if (t.degree() < 2)
        throw DegreeOneError("brute_predecessor: type (1) has no predecessor");
    const auto base = static_cast<size_t>(t.base_count());
    if (base > 16) throw BudgetExceededError("brute_predecessor: more than 16 base-points");

    LatticeClass a = t.to_lattice();
    std::vector<PointLabel> labels;
    for (const auto& [q, m] : a.mults()) labels.push_back(q);

    BrutePredecessor out;
    bool seen = false;
    for (size_t qi = 0; qi < base; ++qi) {
        // even subsets of the remaining base-points
        std::vector<PointLabel> rest;
        for (size_t j = 0; j < base; ++j)
            if (j != qi) rest.push_back(labels[j]);
        const size_t n = rest.size();
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            if (__builtin_popcountll(mask) % 2 != 0) continue;
            std::set<PointLabel> delta;
            for (size_t j = 0; j < n; ++j)
                if (mask & (uint64_t{1} << j)) delta.insert(rest[j]);
            int64_t deg = apply_iota(a, labels[qi], delta).degree();
            if (!seen || deg < out.min_degree) {
                out.min_degree = deg;
                out.achieving_moves.clear();
                seen = true;
            }
            if (deg == out.min_degree) out.achieving_moves.push_back({labels[qi], delta});
        }
    }
    return out;
}

namespace {

// BFS state: degree + multiplicity multiset, the class modulo label
// permutations.
struct State {
    int64_t degree;
    std::vector<int64_t> mults;  // sorted non-increasingly
    friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
    size_t operator()(const State& s) const {
        size_t h = std::hash<int64_t>{}(s.degree);
        for (int64_t m : s.mults)
            h ^= std::hash<int64_t>{}(m) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

// Every iota move's effect depends only on the chosen multiplicity values,
// so moves are enumerated as value multisets: a value for q and a count per
// distinct value for delta.  Fresh points enter as value 0 with the given
// allowance.
std::vector<State> successors(const State& s, int64_t fresh_allowance) {
    // distinct values with availability
    std::vector<std::pair<int64_t, int64_t>> vals;  // (value, count)
    for (int64_t m : s.mults) {
        if (!vals.empty() && vals.back().first == m)
            ++vals.back().second;
        else
            vals.emplace_back(m, 1);
    }
    if (fresh_allowance > 0) vals.emplace_back(0, fresh_allowance);

    std::vector<State> out;
    const int64_t d = s.degree;

    // choose the multiplicity of q among the distinct values
    for (size_t qv = 0; qv < vals.size(); ++qv) {
        auto avail = vals;
        --avail[qv].second;
        const int64_t mq = vals[qv].first;

        // enumerate delta as counts per distinct value
        std::vector<int64_t> counts(avail.size(), 0);
        std::function<void(size_t, int64_t, int64_t)> rec = [&](size_t i, int64_t total,
                                                                int64_t delta_sum) {
            if (i == avail.size()) {
                if (total == 0 || total % 2 != 0) return;
                const int64_t n = total / 2;
                // degree and transformed multiplicities of iota_{q,delta}
                int64_t d2 = checked_sub(checked_sub(checked_mul(n + 1, d), checked_mul(n, mq)),
                                         delta_sum);
                std::vector<int64_t> m2;
                m2.reserve(s.mults.size() + static_cast<size_t>(total) + 1);
                int64_t mq2 = checked_sub(checked_sub(checked_mul(n, d), checked_mul(n - 1, mq)),
                                          delta_sum);
                if (mq2 != 0) m2.push_back(mq2);
                for (size_t k = 0; k < avail.size(); ++k) {
                    int64_t value = avail[k].first;
                    int64_t untouched = avail[k].second - counts[k];
                    for (int64_t j = 0; j < untouched; ++j)
                        if (value != 0) m2.push_back(value);
                    int64_t img = checked_sub(checked_sub(d, mq), value);
                    for (int64_t j = 0; j < counts[k]; ++j)
                        if (img != 0) m2.push_back(img);
                }
                std::sort(m2.begin(), m2.end(), std::greater<>());
                out.push_back({d2, std::move(m2)});
                return;
            }
            for (int64_t c = 0; c <= avail[i].second; ++c) {
                counts[i] = c;
                rec(i + 1, total + c, delta_sum + c * avail[i].first);
            }
            counts[i] = 0;
        };
        rec(0, 0, 0);
    }
    return out;
}

}  // namespace

std::optional<int64_t> bounded_bfs_length(const HomaloidalType& t, const SearchBudget& budget) {
    State start{t.degree(), t.mults()};
    const State goal{1, {}};
    if (start == goal) return 0;

    std::unordered_set<State, StateHash> seen{start};
    std::vector<State> frontier{start};
    for (int64_t depth = 1; depth <= budget.max_depth; ++depth) {
        std::vector<State> next;
        for (const State& s : frontier) {
            for (State& succ : successors(s, budget.max_fresh_points)) {
                if (succ == goal) return depth;
                if (succ.degree > budget.max_degree || succ.degree < 1) continue;
                if (seen.insert(succ).second) next.push_back(std::move(succ));
            }
        }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return std::nullopt;
}

int64_t segment_min_cut(const LRWord& w) {
    // letter string of ... L^{s_2} R^{s_1}, leftmost letter first
    std::string letters;
    for (size_t i = w.exponents.size(); i-- > 0;) {
        int64_t s = w.exponents[i];
        if (s < 1) throw std::invalid_argument("segment_min_cut: exponents must be positive");
        letters.append(static_cast<size_t>(s), i % 2 == 0 ? 'R' : 'L');
    }
    const size_t n = letters.size();
    if (n == 0) return 0;

    // dp[j] = minimal segments for the prefix of length j
    const int64_t inf = std::numeric_limits<int64_t>::max() / 2;
    std::vector<int64_t> dp(n + 1, inf);
    dp[0] = 0;
    auto is_shape = [&](size_t i, size_t j) {
        // letters[i..j): R^s or L^s or (L then R^s) or (R then L^s)
        size_t len = j - i;
        bool uniform = true;
        for (size_t k = i + 1; k < j; ++k)
            if (letters[k] != letters[i]) uniform = false;
        if (uniform) return true;
        if (len < 2) return false;
        char head = letters[i];
        for (size_t k = i + 1; k < j; ++k)
            if (letters[k] == head) return false;
        char tail = letters[i + 1];
        for (size_t k = i + 2; k < j; ++k)
            if (letters[k] != tail) return false;
        return true;
    };
    for (size_t j = 1; j <= n; ++j)
        for (size_t i = 0; i < j; ++i)
            if (dp[i] + 1 < dp[j] && is_shape(i, j)) dp[j] = dp[i] + 1;
    return dp[n];
}

// ---------------------------------------------------------------------------
// Agreement suites

VerifyReport verify_predecessor(int64_t max_degree) {
    VerifyReport rep;
    for (int64_t d = 2; d <= max_degree; ++d) {
        for (const auto& t : enumerate_types(d)) {
            ++rep.cases;
            auto brute = brute_predecessor(t);
            auto fast = predecessor(t);
            if (brute.min_degree != fast.degree())
                rep.failures.push_back(format_type(t) + ": brute min degree " +
                                       std::to_string(brute.min_degree) + " != predecessor degree " +
                                       std::to_string(fast.degree()));
        }
    }
    return rep;
}

VerifyReport verify_length(int64_t max_degree) {
    VerifyReport rep;
    for (int64_t d = 1; d <= max_degree; ++d) {
        for (const auto& t : enumerate_types(d)) {
            int64_t expect = length(t);
            for (int64_t fresh : {0, 1}) {
                ++rep.cases;
                SearchBudget budget{2 * d, expect, fresh};
                auto found = bounded_bfs_length(t, budget);
                if (!found) {
                    rep.failures.push_back(format_type(t) + ": BFS inconclusive within budget");
                } else if (*found != expect) {
                    // a shorter path would mean the greedy chain is not optimal
                    rep.failures.push_back(format_type(t) + ": BFS found " +
                                           std::to_string(*found) + ", length() says " +
                                           std::to_string(expect));
                }
            }
        }
    }
    return rep;
}

VerifyReport verify_words(int64_t max_total) {
    VerifyReport rep;
    // all exponent tuples with sum <= max_total
    std::vector<int64_t> cur;
    std::function<void(int64_t)> rec = [&](int64_t remaining) {
        if (!cur.empty()) {
            ++rep.cases;
            LRWord w{cur};
            int64_t a = ell(w), b = segment_min_cut(w);
            if (a != b)
                rep.failures.push_back("word (" + format_word(w) + "): ell " + std::to_string(a) +
                                       " != segment_min_cut " + std::to_string(b));
        }
        for (int64_t s = 1; s <= remaining; ++s) {
            cur.push_back(s);
            rec(remaining - s);
            cur.pop_back();
        }
    };
    rec(max_total);
    ++rep.cases;  // the empty word
    if (segment_min_cut(LRWord{}) != 0 || ell(LRWord{}) != 0)
        rep.failures.push_back("empty word: expected 0");
    return rep;
}

}  // namespace cremona
