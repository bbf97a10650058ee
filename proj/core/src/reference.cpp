#include "dlab/reference.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dlab::reference {

std::vector<int> ranking_by_pairwise_counts(const Instance& instance,
                                            int voter) {
  const int m = instance.m();
  std::vector<int> rank(m, 0);
  for (int c = 0; c < m; ++c) {
    double dc = std::abs(instance.voters[voter] - instance.candidates[c]);
    for (int other = 0; other < m; ++other) {
      if (other == c) continue;
      double od = std::abs(instance.voters[voter] - instance.candidates[other]);
      if (od < dc) ++rank[c];
    }
  }
  std::vector<int> ranking(m, -1);
  for (int c = 0; c < m; ++c) ranking[rank[c]] = c;
  return ranking;
}

std::pair<int, double> interval_champion(const Instance& instance, int left,
                                         int right) {
  const auto& cs = instance.candidates;
  int best = -1;
  double best_delta = -1.0;
  for (int c = left + 1; c < right; ++c) {
    double delta = std::min(cs[c] - cs[left], cs[right] - cs[c]);
    if (delta > best_delta) {  // ties stay with the leftmost candidate
      best_delta = delta;
      best = c;
    }
  }
  return {best, best_delta};
}

std::vector<int> greedy_committee(const Instance& instance, int k) {
  const int m = instance.m();
  std::vector<int> elected = {0, m - 1};
  std::set<int> chosen(elected.begin(), elected.end());
  while (static_cast<int>(chosen.size()) < k) {
    int best_cand = -1;
    double best_delta = -1.0;
    int prev = -1;
    for (int c : chosen) {
      if (prev >= 0 && c - prev >= 2) {
        auto [cand, delta] = interval_champion(instance, prev, c);
        if (delta > best_delta) {  // ties stay with the leftmost interval
          best_delta = delta;
          best_cand = cand;
        }
      }
      prev = c;
    }
    elected.push_back(best_cand);
    chosen.insert(best_cand);
  }
  return elected;
}

Straddle midpoint_straddle(const Instance& instance, int left, int right) {
  const auto& cs = instance.candidates;
  const double mid = (cs[left] + cs[right]) / 2.0;
  Straddle s{left, right, false};
  for (int c = left; c <= right; ++c) {
    if (cs[c] <= mid) s.left_end = c;
    if (cs[c] == mid) s.midpoint_candidate = true;
  }
  for (int c = right; c >= left; --c)
    if (cs[c] >= mid) s.right_end = c;
  return s;
}

}  // namespace dlab::reference
