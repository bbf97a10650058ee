#pragma once

#include <utility>
#include <vector>

#include "dlab/instance.hpp"

// Position-reading reference implementations used only for verification.
// They mirror the contract of the query-based code but read the ground truth
// directly, so the two sides stay independent.
namespace dlab::reference {

// Ranking of one voter by pairwise distance comparisons (no sort call).
std::vector<int> ranking_by_pairwise_counts(const Instance& instance,
                                            int voter);

// Farthest-first greedy over true candidate positions, seeded with the two
// extremes. Tie-breaks match rule_greedy: largest distance to the elected
// set first, leftmost interval, then the left straddle candidate.
std::vector<int> greedy_committee(const Instance& instance, int k);

// Most distant candidate to the endpoints of candidate interval [left, right]
// (candidate indices), and its distance; ties go left.
std::pair<int, double> interval_champion(const Instance& instance, int left,
                                         int right);

// True midpoint straddle of candidate interval [left, right]: the candidates
// flanking (c_left + c_right) / 2. A candidate exactly on the midpoint may be
// reported on either side; both are valid splits.
struct Straddle {
  int left_end;    // rightmost candidate not right of the midpoint
  int right_end;   // leftmost candidate not left of the midpoint
  bool midpoint_candidate;  // some candidate sits exactly on the midpoint
};
Straddle midpoint_straddle(const Instance& instance, int left, int right);

}  // namespace dlab::reference
