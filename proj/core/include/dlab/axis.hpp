#pragma once

#include <vector>

#include "dlab/instance.hpp"

namespace dlab {

// Left-to-right candidate order recovered from a ranking profile. The
// orientation is normalized (see recover_axis), so equal profiles yield
// identical axes.
struct CandidateAxis {
  std::vector<int> order;  // order[i] = candidate at axis position i
  std::vector<int> pos;    // pos[c] = axis position of candidate c

  int m() const { return static_cast<int>(order.size()); }
  int at(int i) const { return order[i]; }
  int position(int c) const { return pos[c]; }

  static CandidateAxis from_order(std::vector<int> order);
  CandidateAxis reversed() const;
};

struct ClusterTable {
  // members[c] = voters whose top choice is c, in voter-index order.
  std::vector<std::vector<int>> members;
  std::vector<bool> active;
  int active_count = 0;

  int m() const { return static_cast<int>(members.size()); }
  bool is_active(int c) const { return active[c]; }
  // First-listed cluster voter; throws InactiveCandidate.
  int representative(int c) const;
  long size(int c) const { return static_cast<long>(members[c].size()); }
};

// Candidate-restricted instance: weighted points on a line, identified by
// candidate id, with the gaps between consecutive points.
struct WeightedLineInstance {
  std::vector<int> candidate_ids;  // in axis order
  std::vector<long> weights;       // weights[i] >= 1 unless keep_zero_weights
  std::vector<double> gaps;        // gaps[i] = distance ids[i] -> ids[i+1]

  int size() const { return static_cast<int>(candidate_ids.size()); }
  long total_weight() const;
  std::vector<double> positions() const;  // cumulative, first point at 0
};

// Recovers the axis by peeling: every voter's last-ranked candidate among the
// remaining ones must be an endpoint of the remaining axis. Side assignment
// uses the ordinal betweenness test (b lies between a and c iff no voter
// ranks b below both). The result is validated against every ranking and
// oriented so the first voter's top candidate falls in the left half.
// Throws NotSinglePeaked when the profile admits no consistent order.
CandidateAxis recover_axis(const RankingProfile& profile);

// True iff every ranking is single-peaked with respect to `order`: walking a
// ranking top-down always extends a contiguous axis interval by one endpoint.
bool is_single_peaked(const RankingProfile& profile,
                      const std::vector<int>& order);

ClusterTable clusters(const RankingProfile& profile, const CandidateAxis& axis);

// Candidates between the leftmost and rightmost active candidates inclusive,
// in axis order. Throws NoActiveCandidate.
std::vector<int> trim_to_active_span(const CandidateAxis& axis,
                                     const ClusterTable& table);

// Restricts the electorate to `subset` (candidate ids in axis order): each
// voter contributes one unit of weight at her best-ranked subset member.
// `gaps[i]` must hold the distance between subset[i] and subset[i+1].
// Zero-weight members are dropped (their gaps merge) unless
// keep_zero_weights is set. Throws MissingGap on a size mismatch.
WeightedLineInstance candidate_restrict(const RankingProfile& profile,
                                        const CandidateAxis& axis,
                                        const std::vector<int>& subset,
                                        const std::vector<double>& gaps,
                                        bool keep_zero_weights = false);

}  // namespace dlab
