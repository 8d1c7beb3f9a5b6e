#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/homaloidal.hpp"
#include "cremona/monomial.hpp"

namespace cremona {

// Brute-force validators for the closed-form algorithms.  These deliberately
// avoid the code paths they check: the predecessor oracle enumerates labelled
// moves on a lattice class, the length oracle is a breadth-first search, and
// the word oracle is a segmentation DP.

struct SearchBudget {
    int64_t max_degree = 0;
    int64_t max_depth = 0;
    int64_t max_fresh_points = 0;
};

struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// One Jonquieres move, by labels of the materialized class.
struct IotaMove {
    PointLabel q;
    std::set<PointLabel> delta;
};

struct BrutePredecessor {
    int64_t min_degree = 0;
    std::vector<IotaMove> achieving_moves;
};

// Enumerates every q in Base(a) and every even subset of Base(a) \ {q} on
// the class of t; exponential in the number of base-points (capped at 16).
BrutePredecessor brute_predecessor(const HomaloidalType& t);

// Shortest move count from t to (1) under iota moves whose points come from
// the current base-points plus at most max_fresh_points unused labels,
// pruning states whose degree exceeds the budget.  States are canonicalized
// modulo label permutations (degree + multiplicity multiset).  Returns
// nullopt when the budget is exhausted first.
std::optional<int64_t> bounded_bfs_length(const HomaloidalType& t, const SearchBudget& budget);

// Minimal number of contiguous segments of the letter string of a word,
// each segment of one of the shapes R^s, L^s, LR^s, RL^s.
int64_t segment_min_cut(const LRWord& w);

// Agreement suites used by tests and the CLI verify command.
struct VerifyReport {
    int64_t cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

VerifyReport verify_predecessor(int64_t max_degree = 8);
VerifyReport verify_length(int64_t max_degree = 8);
VerifyReport verify_words(int64_t max_total = 14);

}  // namespace cremona
