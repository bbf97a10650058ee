#include "dlab/rules.hpp"

#include <algorithm>
#include <cmath>

#include "dlab/exact.hpp"

namespace dlab {
namespace {

long voters_in_range(const ClusterTable& table, const CandidateAxis& axis,
                     int left, int right) {
  long total = 0;
  for (int i = left; i <= right; ++i) total += table.size(axis.at(i));
  return total;
}

void require_all_active(const ClusterTable& table) {
  if (table.active_count != table.m())
    throw InactiveCandidate("rule needs every candidate to be active");
}

// Ordinal scan shared by distant_candidate and partition_interval: walking the
// interval left to right, find the first candidate whose cluster voter
// prefers the right endpoint; it and its predecessor bracket the midpoint up
// to a one-step proxy shift.
std::pair<int, int> straddle_scan(const RankingProfile& profile,
                                  const CandidateAxis& axis,
                                  const ClusterTable& table, int left,
                                  int right) {
  const int c_left = axis.at(left);
  const int c_right = axis.at(right);
  for (int i = left + 1; i <= right; ++i) {
    int voter = table.representative(axis.at(i));
    if (profile.prefers(voter, c_right, c_left)) return {i - 1, i};
  }
  throw NotSinglePeaked("interval scan never reached the right endpoint");
}

}  // namespace

std::pair<int, double> distant_candidate(const RankingProfile& profile,
                                         const CandidateAxis& axis,
                                         const ClusterTable& table,
                                         DistanceOracle& oracle, int left,
                                         int right) {
  const int count = right - left + 1;
  if (count < 3)
    throw IntervalTooSmall("distant_candidate needs >= 3 candidates");
  const int c_left = axis.at(left);
  const int c_right = axis.at(right);
  if (count == 3) {
    const int mid = axis.at(left + 1);
    const double d1 = oracle.candidate_query(mid, c_left);
    const double d2 = oracle.candidate_query(mid, c_right);
    return {mid, std::min(d1, d2)};
  }
  auto [l_pos, r_pos] = straddle_scan(profile, axis, table, left, right);
  const int c_l = axis.at(l_pos);
  const int c_r = axis.at(r_pos);
  const double left_len = oracle.candidate_query(c_left, c_l);
  const double right_len = oracle.candidate_query(c_r, c_right);
  if (left_len >= right_len) {
    const double across = oracle.candidate_query(c_right, c_l);
    return {c_l, std::min(left_len, across)};
  }
  const double across = oracle.candidate_query(c_r, c_left);
  return {c_r, std::min(across, right_len)};
}

SplitResult partition_interval(const RankingProfile& profile,
                               const CandidateAxis& axis,
                               const ClusterTable& table,
                               DistanceOracle& oracle, int left, int right) {
  if (right - left + 1 < 4)
    throw IntervalTooSmall("partition_interval needs >= 4 candidates");
  const int c_left = axis.at(left);
  const int c_right = axis.at(right);
  auto [l_pos, r_pos] = straddle_scan(profile, axis, table, left, right);
  double left_len = oracle.candidate_query(c_left, axis.at(l_pos));
  double right_len = oracle.candidate_query(axis.at(r_pos), c_right);
  if (left_len >= right_len) {
    // The left straddle candidate is the most distant one; it may still sit
    // right of the midpoint.
    const double across = oracle.candidate_query(axis.at(l_pos), c_right);
    if (left_len > across) {
      r_pos = l_pos;
      l_pos = l_pos - 1;
      right_len = across;
      left_len = oracle.candidate_query(c_left, axis.at(l_pos));
    }
  } else {
    const double across = oracle.candidate_query(c_left, axis.at(r_pos));
    if (across < right_len) {
      l_pos = r_pos;
      r_pos = r_pos + 1;
      left_len = across;
      right_len = oracle.candidate_query(axis.at(r_pos), c_right);
    }
  }
  SplitResult split;
  split.left = {left, l_pos, voters_in_range(table, axis, left, l_pos),
                left_len};
  split.right = {r_pos, right, voters_in_range(table, axis, r_pos, right),
                 right_len};
  return split;
}

RuleOutput rule_extremes(const RankingProfile&, const CandidateAxis& axis,
                         const ClusterTable& table) {
  if (table.active_count < 2)
    throw TooFewActive("needs two active candidates");
  int lo = -1, hi = -1;
  for (int i = 0; i < axis.m(); ++i) {
    if (!table.is_active(axis.at(i))) continue;
    if (lo < 0) lo = i;
    hi = i;
  }
  RuleOutput out;
  out.committee = {axis.at(lo), axis.at(hi)};
  std::sort(out.committee.begin(), out.committee.end());
  return out;
}

RuleOutput rule_median_clusters(const RankingProfile& profile,
                                const CandidateAxis& axis,
                                const ClusterTable& table) {
  if (table.active_count < 2)
    throw TooFewActive("needs two active candidates");
  if (profile.n() < 3) throw BadParams("needs at least 3 voters");
  const int m = axis.m();
  int lo = -1, hi = -1;
  for (int i = 0; i < m; ++i) {
    if (!table.is_active(axis.at(i))) continue;
    if (lo < 0) lo = i;
    hi = i;
  }
  const int c_l = axis.at(lo);
  const int c_r = axis.at(hi);

  // Per-axis-position voter counts of each side, and the voters of the right
  // side in axis-cluster order (for the collision tie-break below).
  std::vector<long> left_counts(m, 0), right_counts(m, 0);
  long n1 = 0, n2 = 0;
  for (int v = 0; v < profile.n(); ++v) {
    if (profile.prefers(v, c_l, c_r)) {
      ++left_counts[axis.position(profile.top(v))];
      ++n1;
    } else {
      ++right_counts[axis.position(profile.top(v))];
      ++n2;
    }
  }
  auto candidate_at_count = [&](const std::vector<long>& counts, long target) {
    long seen = 0;
    for (int i = 0; i < m; ++i) {
      seen += counts[i];
      if (seen >= target) return axis.at(i);
    }
    throw BadParams("empty voter side");
  };
  const int a1 = candidate_at_count(left_counts, (n1 + 1) / 2);
  const int a2 = candidate_at_count(right_counts, n2 / 2 + 1);

  RuleOutput out;
  if (a1 != a2) {
    out.committee = {a1, a2};
  } else {
    // Both medians share a top candidate; hand the second seat to an axis
    // neighbor, preferring the ones inside the right side's top span, ranked
    // by the right side's median voter.
    int span_lo = m, span_hi = -1;
    for (int i = 0; i < m; ++i) {
      if (right_counts[i] == 0) continue;
      span_lo = std::min(span_lo, i);
      span_hi = std::max(span_hi, i);
    }
    int median_voter = -1;
    long seen = 0;
    for (int i = 0; i < m && median_voter < 0; ++i) {
      for (int v : table.members[axis.at(i)]) {
        if (profile.prefers(v, c_l, c_r)) continue;
        if (++seen == n2 / 2 + 1) {
          median_voter = v;
          break;
        }
      }
    }
    const int p = axis.position(a1);
    std::vector<int> pool;
    for (int nb : {p - 1, p + 1})
      if (nb >= 0 && nb < m && nb >= span_lo && nb <= span_hi)
        pool.push_back(axis.at(nb));
    if (pool.empty())
      for (int nb : {p - 1, p + 1})
        if (nb >= 0 && nb < m) pool.push_back(axis.at(nb));
    int second = pool.front();
    if (pool.size() == 2 && profile.prefers(median_voter, pool[1], pool[0]))
      second = pool[1];
    out.committee = {a1, second};
  }
  std::sort(out.committee.begin(), out.committee.end());
  out.elected_order = {a1, a2};
  return out;
}

RuleOutput rule_two_of_three(const RankingProfile& profile,
                             const CandidateAxis& axis,
                             const ClusterTable& table) {
  (void)table;
  if (axis.m() != 3) throw WrongM("rule elects 2 out of exactly 3 candidates");
  const int a = axis.at(0), b = axis.at(1), c = axis.at(2);
  long n_abc = 0, n_bac = 0, n_bca = 0, n_cba = 0;
  for (int v = 0; v < profile.n(); ++v) {
    const int top = profile.ranked[v][0];
    const int second = profile.ranked[v][1];
    if (top == a)
      ++n_abc;
    else if (top == c)
      ++n_cba;
    else if (second == a)
      ++n_bac;
    else
      ++n_bca;
  }
  const int e1 = n_abc >= n_bac ? a : b;
  const int e2 = n_bca >= n_cba ? b : c;
  RuleOutput out;
  out.committee = e1 == e2 ? Committee{a, b} : Committee{e1, e2};
  std::sort(out.committee.begin(), out.committee.end());
  return out;
}

namespace {

struct ChampionEntry {
  int left;   // axis positions of the interval endpoints
  int right;
  int champion_pos;
  double delta;
};

}  // namespace

RuleOutput rule_greedy(const RankingProfile& profile, const CandidateAxis& axis,
                       const ClusterTable& table, DistanceOracle& oracle,
                       int k) {
  const int m = axis.m();
  if (k < 2 || k > m - 1)
    throw KOutOfRange("greedy needs 2 <= k <= m-1");
  require_all_active(table);

  RuleOutput out;
  out.elected_order = {axis.at(0), axis.at(m - 1)};
  if (k == 2) {
    out.committee = out.elected_order;
    std::sort(out.committee.begin(), out.committee.end());
    return out;
  }
  std::vector<ChampionEntry> entries;
  auto add_entry = [&](int left, int right) {
    if (right - left < 2) return;  // no interior candidate
    auto [cand, delta] =
        distant_candidate(profile, axis, table, oracle, left, right);
    entries.push_back({left, right, axis.position(cand), delta});
  };
  add_entry(0, m - 1);
  int elected = 2;
  while (elected < k) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
      if (best < 0 || entries[i].delta > entries[best].delta ||
          (entries[i].delta == entries[best].delta &&
           entries[i].left < entries[best].left))
        best = i;
    }
    if (best < 0) throw KOutOfRange("ran out of interval champions");
    ChampionEntry chosen = entries[best];
    entries.erase(entries.begin() + best);
    out.elected_order.push_back(axis.at(chosen.champion_pos));
    ++elected;
    if (elected < k) {
      add_entry(chosen.left, chosen.champion_pos);
      add_entry(chosen.champion_pos, chosen.right);
    }
  }
  out.committee = out.elected_order;
  std::sort(out.committee.begin(), out.committee.end());
  return out;
}

std::vector<double> reconstruct_gaps(const RankingProfile&,
                                     const CandidateAxis& axis,
                                     const ClusterTable& table,
                                     DistanceOracle& oracle,
                                     GapQueryMode mode) {
  const int m = axis.m();
  require_all_active(table);
  std::vector<double> gaps(m - 1, 0.0);
  if (mode == GapQueryMode::kCandidate) {
    for (int i = 0; i + 1 < m; ++i)
      gaps[i] = oracle.candidate_query(axis.at(i), axis.at(i + 1));
    return gaps;
  }
  // Regular-query route: measure everything from one voter of the leftmost
  // cluster, fixing her side of the leftmost candidate first.
  const int c_first = axis.at(0);
  const int c_last = axis.at(m - 1);
  const int v1 = table.representative(c_first);
  const int vm = table.representative(c_last);
  const double a = oracle.regular_query(v1, c_first);
  const double b = oracle.regular_query(v1, c_last);
  const double x = oracle.regular_query(vm, c_last);
  const double y = oracle.regular_query(vm, c_first);
  // v1 "outside" means on the far side of the leftmost candidate, where the
  // first gap is d(v1,c2) - d(v1,c1) instead of the sum.
  bool v1_outside;
  if (a == 0.0) {
    v1_outside = false;  // collocated, both formulas coincide
  } else if (x == 0.0) {
    // The far side is pinned; v1's side follows from b against y = span.
    v1_outside = b > y;
  } else if (b > y) {
    v1_outside = b == a + x + y || a > x;
  } else if (b < y) {
    v1_outside = !(y == a + b + x || a > x);
  } else {
    // Mirrored offsets; one voter-pair distance settles the side. The probe
    // candidate is the second one on the axis, so the chain below reuses it.
    const int probe = axis.at(1);
    const double w =
        oracle.regular_query(v1, probe) + oracle.regular_query(vm, probe);
    v1_outside = w == y + a;
  }
  double prev = oracle.regular_query(v1, axis.at(1));
  gaps[0] = v1_outside ? prev - a : prev + a;
  for (int i = 2; i < m; ++i) {
    const double cur =
        i == m - 1 ? b : oracle.regular_query(v1, axis.at(i));
    gaps[i - 1] = cur - prev;
    prev = cur;
  }
  return gaps;
}

RuleOutput rule_full_axis_dp(const RankingProfile& profile,
                             const CandidateAxis& axis,
                             const ClusterTable& table, DistanceOracle& oracle,
                             int k, GapQueryMode mode) {
  const int m = axis.m();
  if (k < 1 || k > m - 1) throw KOutOfRange("needs 1 <= k <= m-1");
  require_all_active(table);
  std::vector<double> gaps = reconstruct_gaps(profile, axis, table, oracle, mode);
  WeightedLineInstance w =
      candidate_restrict(profile, axis, axis.order, gaps);
  auto [committee, dp_cost] = dp_opt_line(w, k, Objective::kSocialCost);
  (void)dp_cost;
  RuleOutput out;
  out.committee = std::move(committee);
  return out;
}

double coreset_interval_cap(int k, long n) {
  return 7.0 * k * (std::log2(5.0 * static_cast<double>(n) * k) + 2.0);
}

long coreset_query_cap(int k, long n, int good_set_size) {
  return (6L * k - 15) + 4L * (k - 1) +
         4L * static_cast<long>(std::ceil(coreset_interval_cap(k, n))) +
         (good_set_size - 1);
}

RuleOutput rule_coreset(const RankingProfile& profile, const CandidateAxis& axis,
                        const ClusterTable& table, DistanceOracle& oracle,
                        int k) {
  const int m = axis.m();
  const long n = profile.n();
  if (k < 3 || k > m - 1) throw KOutOfRange("coreset needs 3 <= k <= m-1");
  require_all_active(table);

  RuleOutput greedy = rule_greedy(profile, axis, table, oracle, k);
  std::vector<int> seats;  // axis positions of the greedy committee
  seats.reserve(k);
  for (int c : greedy.committee) seats.push_back(axis.position(c));
  std::sort(seats.begin(), seats.end());

  // Voronoi intervals of the elected candidates. Each consecutive seat pair
  // is split at its midpoint; the pieces on either side of a seat merge into
  // that seat's interval, and their lengths add up to its length.
  std::vector<int> left_ext(k), right_ext(k);
  std::vector<double> left_len(k, 0.0), right_len(k, 0.0);
  left_ext[0] = seats[0];
  right_ext[k - 1] = seats[k - 1];
  for (int i = 0; i + 1 < k; ++i) {
    const int gap_cands = seats[i + 1] - seats[i] + 1;
    if (gap_cands == 2) {
      right_ext[i] = seats[i];
      left_ext[i + 1] = seats[i + 1];
    } else if (gap_cands == 3) {
      const int mid = seats[i] + 1;
      const double to_left =
          oracle.candidate_query(axis.at(mid), axis.at(seats[i]));
      const double to_right =
          oracle.candidate_query(axis.at(mid), axis.at(seats[i + 1]));
      if (to_left <= to_right) {
        right_ext[i] = mid;
        right_len[i] = to_left;
        left_ext[i + 1] = seats[i + 1];
      } else {
        right_ext[i] = seats[i];
        left_ext[i + 1] = mid;
        left_len[i + 1] = to_right;
      }
    } else {
      SplitResult split = partition_interval(profile, axis, table, oracle,
                                             seats[i], seats[i + 1]);
      right_ext[i] = split.left.right;
      right_len[i] = split.left.length;
      left_ext[i + 1] = split.right.left;
      left_len[i + 1] = split.right.length;
    }
  }
  std::vector<AxisInterval> intervals;
  intervals.reserve(k);
  double delta_star = 0.0;
  for (int i = 0; i < k; ++i) {
    AxisInterval iv;
    iv.left = left_ext[i];
    iv.right = right_ext[i];
    iv.length = left_len[i] + right_len[i];
    iv.voters = voters_in_range(table, axis, iv.left, iv.right);
    delta_star = std::max(delta_star, iv.length);
    intervals.push_back(iv);
  }

  const double cap = coreset_interval_cap(k, n);
  while (static_cast<double>(intervals.size()) <= cap) {
    int heaviest = -1;
    for (int i = 0; i < static_cast<int>(intervals.size()); ++i) {
      if (intervals[i].candidate_count() < 4) continue;
      if (heaviest < 0 || intervals[i].weight() > intervals[heaviest].weight())
        heaviest = i;  // scan order keeps the leftmost on ties
    }
    if (heaviest < 0) break;
    if (intervals[heaviest].weight() <= delta_star / (5.0 * k)) break;
    SplitResult split =
        partition_interval(profile, axis, table, oracle,
                           intervals[heaviest].left, intervals[heaviest].right);
    intervals[heaviest] = split.right;
    intervals.insert(intervals.begin() + heaviest, split.left);
  }

  std::vector<int> good_set;
  for (const AxisInterval& iv : intervals) {
    if (iv.candidate_count() > 3) {
      good_set.push_back(axis.at(iv.left));
      good_set.push_back(axis.at(iv.right));
    } else {
      for (int i = iv.left; i <= iv.right; ++i) good_set.push_back(axis.at(i));
    }
  }
  std::vector<double> gaps;
  gaps.reserve(good_set.size() - 1);
  for (std::size_t i = 0; i + 1 < good_set.size(); ++i)
    gaps.push_back(oracle.candidate_query(good_set[i], good_set[i + 1]));

  WeightedLineInstance w = candidate_restrict(profile, axis, good_set, gaps);
  auto [committee, dp_cost] = dp_opt_line(w, k, Objective::kSocialCost);
  (void)dp_cost;

  RuleOutput out;
  out.committee = std::move(committee);
  out.elected_order = greedy.elected_order;
  out.partition = std::move(intervals);
  out.good_set = std::move(good_set);
  out.delta_star = delta_star;
  return out;
}

namespace {

void require_k(int k, int expected, const char* rule) {
  if (k != expected)
    throw KOutOfRange(std::string(rule) + " elects exactly " +
                      std::to_string(expected) + " candidates");
}

}  // namespace

const std::vector<RuleEntry>& rule_registry() {
  static const std::vector<RuleEntry> registry = {
      {"extremes2",
       [](const RankingProfile& p, const CandidateAxis& a,
          const ClusterTable& t, DistanceOracle&, int k) {
         require_k(k, 2, "extremes2");
         return rule_extremes(p, a, t);
       }},
      {"median2",
       [](const RankingProfile& p, const CandidateAxis& a,
          const ClusterTable& t, DistanceOracle&, int k) {
         require_k(k, 2, "median2");
         return rule_median_clusters(p, a, t);
       }},
      {"two-of-three",
       [](const RankingProfile& p, const CandidateAxis& a,
          const ClusterTable& t, DistanceOracle&, int k) {
         require_k(k, 2, "two-of-three");
         return rule_two_of_three(p, a, t);
       }},
      {"greedy",
       [](const RankingProfile& p, const CandidateAxis& a,
          const ClusterTable& t, DistanceOracle& o, int k) {
         return rule_greedy(p, a, t, o, k);
       }},
      {"full-axis-dp",
       [](const RankingProfile& p, const CandidateAxis& a,
          const ClusterTable& t, DistanceOracle& o, int k) {
         return rule_full_axis_dp(p, a, t, o, k);
       }},
      {"coreset",
       [](const RankingProfile& p, const CandidateAxis& a,
          const ClusterTable& t, DistanceOracle& o, int k) {
         return rule_coreset(p, a, t, o, k);
       }},
  };
  return registry;
}

const RuleEntry* find_rule(const std::string& name) {
  for (const RuleEntry& entry : rule_registry())
    if (entry.name == name) return &entry;
  return nullptr;
}

}  // namespace dlab
