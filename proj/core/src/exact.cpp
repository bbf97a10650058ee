#include "dlab/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dlab {
namespace {

double combine(Objective objective, double lhs, double rhs) {
  return objective == Objective::kSocialCost ? lhs + rhs : std::max(lhs, rhs);
}

double committee_cost(const Instance& instance, const Committee& committee,
                      Objective objective) {
  CostReport report = cost(instance, committee);
  return objective == Objective::kSocialCost ? report.social_cost
                                             : report.egalitarian_cost;
}

}  // namespace

QueryCounts QueryCounts::from(const QueryLedger& ledger) {
  QueryCounts q;
  q.regular = ledger.issued_regular;
  q.candidate = ledger.issued_candidate;
  q.voter = ledger.issued_voter;
  q.gross_regular = ledger.gross_regular;
  q.gross_candidate = ledger.gross_candidate;
  q.gross_voter = ledger.gross_voter;
  q.regular_equiv = ledger.regular_equiv_issued;
  q.gross_regular_equiv = ledger.regular_equiv_gross;
  return q;
}

std::pair<Committee, double> brute_force_opt(const Instance& instance, int k,
                                             Objective objective,
                                             const std::vector<int>& subset,
                                             int enum_limit) {
  const int s = static_cast<int>(subset.size());
  if (k < 1 || k > s) throw KTooLarge("k=" + std::to_string(k) + " of " +
                                      std::to_string(s) + " candidates");
  if (s > enum_limit)
    throw TooLarge("brute force limited to " + std::to_string(enum_limit) +
                   " candidates, got " + std::to_string(s));
  std::vector<int> pool = subset;
  std::sort(pool.begin(), pool.end());
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  Committee best;
  double best_cost = std::numeric_limits<double>::infinity();
  Committee current(k);
  while (true) {
    for (int i = 0; i < k; ++i) current[i] = pool[pick[i]];
    double c = committee_cost(instance, current, objective);
    if (c < best_cost) {  // lexicographic enumeration: first strict win stays
      best_cost = c;
      best = current;
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == s - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {best, best_cost};
}

std::pair<Committee, double> brute_force_opt(const Instance& instance, int k,
                                             Objective objective,
                                             int enum_limit) {
  std::vector<int> all(instance.m());
  std::iota(all.begin(), all.end(), 0);
  return brute_force_opt(instance, k, objective, all, enum_limit);
}

std::pair<Committee, double> dp_opt_line(const WeightedLineInstance& w, int k,
                                         Objective objective) {
  const int len = w.size();
  if (len == 0) throw BadParams("empty weighted instance");
  if (k < 1 || k > len)
    throw KTooLarge("k=" + std::to_string(k) + " of " + std::to_string(len) +
                    " weighted points");
  const std::vector<double> pos = w.positions();
  // Prefix sums for O(1) one-center costs.
  std::vector<double> pw(len + 1, 0.0), pwp(len + 1, 0.0);
  for (int i = 0; i < len; ++i) {
    pw[i + 1] = pw[i] + static_cast<double>(w.weights[i]);
    pwp[i + 1] = pwp[i] + static_cast<double>(w.weights[i]) * pos[i];
  }
  // Social cost of serving points [l..r] from point t.
  auto sc_at = [&](int l, int r, int t) {
    double left = pos[t] * (pw[t + 1] - pw[l]) - (pwp[t + 1] - pwp[l]);
    double right = (pwp[r + 1] - pwp[t + 1]) - pos[t] * (pw[r + 1] - pw[t + 1]);
    return left + right;
  };
  auto one_center = [&](int l, int r) -> std::pair<double, int> {
    if (l == r) return {0.0, l};
    if (objective == Objective::kSocialCost) {
      const double half = (pw[r + 1] - pw[l]) / 2.0;
      int t = l;
      while (t < r && pw[t + 1] - pw[l] < half) ++t;
      double best = sc_at(l, r, t);
      int best_t = t;
      if (t > l && sc_at(l, r, t - 1) < best) {
        best = sc_at(l, r, t - 1);
        best_t = t - 1;
      }
      return {best, best_t};
    }
    const double mid = (pos[l] + pos[r]) / 2.0;
    int t = l;
    while (t < r && pos[t + 1] <= mid) ++t;
    auto ec_at = [&](int u) { return std::max(pos[u] - pos[l], pos[r] - pos[u]); };
    double best = ec_at(t);
    int best_t = t;
    if (t + 1 <= r && ec_at(t + 1) < best) {
      best = ec_at(t + 1);
      best_t = t + 1;
    }
    return {best, best_t};
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // dp[t][i]: first i points served by t centers.
  std::vector<std::vector<double>> dp(k + 1, std::vector<double>(len + 1, kInf));
  std::vector<std::vector<int>> cut(k + 1, std::vector<int>(len + 1, -1));
  dp[0][0] = 0.0;
  for (int t = 1; t <= k; ++t) {
    for (int i = t; i <= len; ++i) {
      for (int j = t - 1; j < i; ++j) {
        if (dp[t - 1][j] == kInf) continue;
        double c = combine(objective, dp[t - 1][j], one_center(j, i - 1).first);
        if (c < dp[t][i]) {
          dp[t][i] = c;
          cut[t][i] = j;
        }
      }
    }
  }
  Committee committee;
  int i = len;
  for (int t = k; t >= 1; --t) {
    int j = cut[t][i];
    committee.push_back(w.candidate_ids[one_center(j, i - 1).second]);
    i = j;
  }
  std::sort(committee.begin(), committee.end());
  return {committee, dp[k][len]};
}

std::pair<Committee, double> optimal_committee(const Instance& instance, int k,
                                               Objective objective) {
  const int m = instance.m();
  const int n = instance.n();
  if (k < 1 || k > m) throw KTooLarge("k=" + std::to_string(k));
  Committee pad;
  if (n == 0) {
    for (int c = 0; c < k; ++c) pad.push_back(c);
    return {pad, 0.0};
  }
  std::vector<double> vs = instance.voters;
  std::sort(vs.begin(), vs.end());
  const std::vector<double>& cs = instance.candidates;
  std::vector<double> pv(n + 1, 0.0);
  for (int i = 0; i < n; ++i) pv[i + 1] = pv[i] + vs[i];

  // Social cost of voters [l..r] served from location c.
  auto sc_from = [&](int l, int r, double c) {
    int split = static_cast<int>(
        std::upper_bound(vs.begin() + l, vs.begin() + r + 1, c) - vs.begin());
    double left = c * (split - l) - (pv[split] - pv[l]);
    double right = (pv[r + 1] - pv[split]) - c * (r + 1 - split);
    return left + right;
  };
  // Best single candidate for voters [l..r]. The objective is convex along
  // the line, so it is enough to probe the candidates flanking the voter
  // medians (social) or the midpoint (egalitarian).
  auto best_center = [&](int l, int r) -> std::pair<double, int> {
    double bc = std::numeric_limits<double>::infinity();
    int bi = -1;
    auto probe = [&](int ci) {
      if (ci < 0 || ci >= m) return;
      double c = objective == Objective::kSocialCost
                     ? sc_from(l, r, cs[ci])
                     : std::max(std::abs(vs[l] - cs[ci]),
                                std::abs(vs[r] - cs[ci]));
      if (c < bc || (c == bc && ci < bi)) {
        bc = c;
        bi = ci;
      }
    };
    if (objective == Objective::kSocialCost) {
      for (double target : {vs[(l + r) / 2], vs[(l + r + 1) / 2]}) {
        int idx = static_cast<int>(
            std::lower_bound(cs.begin(), cs.end(), target) - cs.begin());
        probe(idx - 1);
        probe(idx);
      }
    } else {
      const double mid = (vs[l] + vs[r]) / 2.0;
      int idx = static_cast<int>(
          std::lower_bound(cs.begin(), cs.end(), mid) - cs.begin());
      probe(idx - 1);
      probe(idx);
    }
    return {bc, bi};
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> dp(k + 1, std::vector<double>(n + 1, kInf));
  std::vector<std::vector<int>> cut(k + 1, std::vector<int>(n + 1, -1));
  dp[0][0] = 0.0;
  for (int t = 1; t <= k; ++t) {
    dp[t][0] = 0.0;  // no voters yet; centers to spare
    for (int i = 1; i <= n; ++i) {
      for (int j = 0; j < i; ++j) {
        if (dp[t - 1][j] == kInf) continue;
        double c =
            combine(objective, dp[t - 1][j], best_center(j, i - 1).first);
        if (c < dp[t][i]) {
          dp[t][i] = c;
          cut[t][i] = j;
        }
      }
    }
  }
  // Recover block centers; blocks may share a candidate, so pad to k.
  std::vector<bool> in_committee(m, false);
  Committee committee;
  int i = n;
  for (int t = k; t >= 1 && i > 0; --t) {
    int j = cut[t][i];
    int center = best_center(j, i - 1).second;
    if (!in_committee[center]) {
      in_committee[center] = true;
      committee.push_back(center);
    }
    i = j;
  }
  for (int c = 0; c < m && static_cast<int>(committee.size()) < k; ++c) {
    if (!in_committee[c]) {
      in_committee[c] = true;
      committee.push_back(c);
    }
  }
  std::sort(committee.begin(), committee.end());
  // Padding can only help; report the committee's real cost.
  return {committee, committee_cost(instance, committee, objective)};
}

double distortion(double rule_cost, double optimal_cost) {
  if (optimal_cost > 0.0) return rule_cost / optimal_cost;
  return rule_cost == 0.0 ? 1.0 : kInfiniteDistortion;
}

EvaluationReport evaluate(const Instance& instance, int k,
                          const std::string& rule_name,
                          const Committee& committee,
                          const QueryLedger& ledger, double runtime_ms) {
  EvaluationReport report;
  report.rule = rule_name;
  report.committee = committee;
  CostReport costs = cost(instance, committee);
  report.sc_rule = costs.social_cost;
  report.ec_rule = costs.egalitarian_cost;
  report.sc_opt = optimal_committee(instance, k, Objective::kSocialCost).second;
  report.ec_opt =
      optimal_committee(instance, k, Objective::kEgalitarianCost).second;
  report.dist_sc = distortion(report.sc_rule, report.sc_opt);
  report.dist_ec = distortion(report.ec_rule, report.ec_opt);
  report.queries = QueryCounts::from(ledger);
  report.runtime_ms = runtime_ms;
  return report;
}

}  // namespace dlab
