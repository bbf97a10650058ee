#include "dlab/axis.hpp"

#include <algorithm>
#include <numeric>

namespace dlab {

CandidateAxis CandidateAxis::from_order(std::vector<int> order) {
  CandidateAxis axis;
  axis.pos.assign(order.size(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    axis.pos[order[i]] = i;
  axis.order = std::move(order);
  return axis;
}

CandidateAxis CandidateAxis::reversed() const {
  std::vector<int> rev(order.rbegin(), order.rend());
  return from_order(std::move(rev));
}

int ClusterTable::representative(int c) const {
  if (!active[c])
    throw InactiveCandidate("candidate " + std::to_string(c) +
                            " has no cluster voter");
  return members[c].front();
}

long WeightedLineInstance::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0L);
}

std::vector<double> WeightedLineInstance::positions() const {
  std::vector<double> pos(candidate_ids.size(), 0.0);
  for (std::size_t i = 1; i < pos.size(); ++i)
    pos[i] = pos[i - 1] + gaps[i - 1];
  return pos;
}

namespace {

// b lies between a and c on the line iff no voter ranks b below both a and c.
// Witnesses exist whenever the profile is non-degenerate (the extreme
// clusters provide them).
bool between(const RankingProfile& profile, int a, int b, int c) {
  for (int v = 0; v < profile.n(); ++v) {
    const auto& rank = profile.rank_of[v];
    if (rank[b] > rank[a] && rank[b] > rank[c]) return false;
  }
  return true;
}

}  // namespace

bool is_single_peaked(const RankingProfile& profile,
                      const std::vector<int>& order) {
  const int m = static_cast<int>(order.size());
  std::vector<int> pos(m, -1);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;
  for (int v = 0; v < profile.n(); ++v) {
    int lo = pos[profile.ranked[v][0]];
    int hi = lo;
    for (int r = 1; r < m; ++r) {
      int p = pos[profile.ranked[v][r]];
      if (p == lo - 1)
        lo = p;
      else if (p == hi + 1)
        hi = p;
      else
        return false;
    }
  }
  return true;
}

CandidateAxis recover_axis(const RankingProfile& profile) {
  const int n = profile.n();
  const int m = profile.m();
  if (n == 0 || m == 0) throw NotSinglePeaked("empty profile");
  if (m == 1) return CandidateAxis::from_order({profile.ranked[0][0]});

  std::vector<bool> removed(m, false);
  // worst_at[v]: cursor into voter v's ranking from the bottom.
  std::vector<int> worst_at(n, m - 1);
  std::vector<int> left_seq, right_seq;
  left_seq.reserve(m);
  right_seq.reserve(m);
  int remaining = m;

  auto advance_cursors = [&]() {
    for (int v = 0; v < n; ++v)
      while (removed[profile.ranked[v][worst_at[v]]]) --worst_at[v];
  };

  while (remaining > 0) {
    advance_cursors();
    if (remaining == 1) {
      for (int c = 0; c < m; ++c)
        if (!removed[c]) left_seq.push_back(c);
      break;
    }
    int w1 = -1, w2 = -1;
    for (int v = 0; v < n; ++v) {
      int w = profile.ranked[v][worst_at[v]];
      if (w == w1 || w == w2) continue;
      if (w1 < 0)
        w1 = w;
      else if (w2 < 0)
        w2 = w;
      else
        throw NotSinglePeaked("three distinct last-ranked candidates remain");
    }
    const bool first_round = left_seq.empty() && right_seq.empty();
    if (w2 >= 0) {
      int to_left = w1, to_right = w2;
      if (!first_round) {
        // Orientation fixed by earlier placements: the one between the
        // innermost left placement and the other endpoint goes left.
        if (!between(profile, left_seq.back(), w1, w2)) std::swap(to_left, to_right);
      }
      left_seq.push_back(to_left);
      right_seq.push_back(to_right);
      removed[to_left] = removed[to_right] = true;
      remaining -= 2;
    } else {
      bool goes_left = true;
      if (!first_round) {
        int probe = -1;
        for (int c = 0; c < m && probe < 0; ++c)
          if (!removed[c] && c != w1) probe = c;
        goes_left = between(profile, left_seq.back(), w1, probe);
      }
      (goes_left ? left_seq : right_seq).push_back(w1);
      removed[w1] = true;
      remaining -= 1;
    }
  }

  std::vector<int> order = left_seq;
  order.insert(order.end(), right_seq.rbegin(), right_seq.rend());
  if (!is_single_peaked(profile, order))
    throw NotSinglePeaked("no candidate order is consistent with the profile");

  // Normalize orientation: the first voter whose top candidate is off-center
  // decides; fall back to candidate ids for palindromic top placements.
  CandidateAxis axis = CandidateAxis::from_order(std::move(order));
  for (int v = 0; v < n; ++v) {
    int i = axis.position(profile.top(v));
    int j = m - 1 - i;
    if (i < j) return axis;
    if (i > j) return axis.reversed();
  }
  return axis.order.front() < axis.order.back() ? axis : axis.reversed();
}

ClusterTable clusters(const RankingProfile& profile,
                      const CandidateAxis& axis) {
  ClusterTable table;
  table.members.assign(axis.m(), {});
  table.active.assign(axis.m(), false);
  for (int v = 0; v < profile.n(); ++v)
    table.members[profile.top(v)].push_back(v);
  for (int c = 0; c < axis.m(); ++c) {
    table.active[c] = !table.members[c].empty();
    if (table.active[c]) ++table.active_count;
  }
  return table;
}

std::vector<int> trim_to_active_span(const CandidateAxis& axis,
                                     const ClusterTable& table) {
  int lo = -1, hi = -1;
  for (int i = 0; i < axis.m(); ++i) {
    if (!table.is_active(axis.at(i))) continue;
    if (lo < 0) lo = i;
    hi = i;
  }
  if (lo < 0) throw NoActiveCandidate("no candidate is any voter's top");
  return {axis.order.begin() + lo, axis.order.begin() + hi + 1};
}

WeightedLineInstance candidate_restrict(const RankingProfile& profile,
                                        const CandidateAxis& axis,
                                        const std::vector<int>& subset,
                                        const std::vector<double>& gaps,
                                        bool keep_zero_weights) {
  if (subset.empty()) throw BadParams("empty candidate subset");
  if (gaps.size() + 1 != subset.size())
    throw MissingGap("need exactly |subset|-1 gaps, got " +
                     std::to_string(gaps.size()));
  for (std::size_t i = 0; i + 1 < subset.size(); ++i) {
    if (axis.position(subset[i]) >= axis.position(subset[i + 1]))
      throw BadParams("subset not in axis order");
    if (!(gaps[i] > 0.0)) throw MissingGap("non-positive gap");
  }
  std::vector<long> weight(subset.size(), 0);
  for (int v = 0; v < profile.n(); ++v) {
    int best = 0;
    for (std::size_t i = 1; i < subset.size(); ++i)
      if (profile.rank_of[v][subset[i]] < profile.rank_of[v][subset[best]])
        best = static_cast<int>(i);
    ++weight[best];
  }
  WeightedLineInstance out;
  double pending_gap = 0.0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (weight[i] == 0 && !keep_zero_weights) {
      if (i < gaps.size()) pending_gap += gaps[i];
      continue;
    }
    if (!out.candidate_ids.empty()) out.gaps.push_back(pending_gap);
    out.candidate_ids.push_back(subset[i]);
    out.weights.push_back(weight[i]);
    pending_gap = i < gaps.size() ? gaps[i] : 0.0;
  }
  return out;
}

}  // namespace dlab
