#include "dlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dlab/adversarial.hpp"
#include "dlab/exact.hpp"
#include "dlab/harness.hpp"
#include "dlab/oracle.hpp"
#include "dlab/reference.hpp"
#include "dlab/rng.hpp"
#include "dlab/rules.hpp"

namespace dlab::checks {
namespace {

struct Pipeline {
  Instance instance;
  RankingProfile profile;
  CandidateAxis axis;
  ClusterTable table;
};

Pipeline prepare(Instance instance) {
  Pipeline p;
  p.profile = derive_profile(instance);
  p.axis = recover_axis(p.profile);
  p.table = clusters(p.profile, p.axis);
  p.instance = std::move(instance);
  return p;
}

Instance draw_instance(Rng& rng, int m_lo, int m_hi, int n_extra_hi,
                       bool active_only, bool extremes_active = false) {
  GenConfig cfg;
  cfg.m = static_cast<int>(rng.int_in(m_lo, m_hi));
  const int n_lo = active_only ? cfg.m : std::max(3, cfg.m / 2);
  cfg.n = static_cast<int>(rng.int_in(n_lo, n_lo + n_extra_hi));
  cfg.active_only = active_only;
  cfg.extremes_active = extremes_active;
  switch (rng.below(3)) {
    case 0: cfg.placement = Placement::kUniform; break;
    case 1: cfg.placement = Placement::kClustered; break;
    default:
      cfg.placement = Placement::kCollocatedFraction;
      cfg.collocated_fraction = 0.3;
  }
  return random_instance(rng.next(), cfg);
}

double true_distance(double a, double b) { return std::abs(a - b); }

}  // namespace

void CheckResult::fail(const std::string& what, const Instance* instance) {
  passed = false;
  if (failures.size() < 25) failures.push_back(what);
  if (!counterexample && instance) counterexample = *instance;
}

void CheckResult::merge(const CheckResult& other) {
  passed = passed && other.passed;
  checks += other.checks;
  for (const std::string& f : other.failures)
    if (failures.size() < 50) failures.push_back(other.name + ": " + f);
  for (const std::string& n : other.notes) notes.push_back(n);
  if (!counterexample && other.counterexample)
    counterexample = other.counterexample;
}

CheckResult oracle_simulations(std::uint64_t seed, int instances,
                               int pairs_per_kind) {
  CheckResult result;
  result.name = "oracle-simulations";
  Rng root(seed);
  const int per_instance = std::max(1, pairs_per_kind / std::max(1, instances));
  for (int t = 0; t < instances; ++t) {
    Rng rng = root.fork(t);
    Pipeline p = prepare(draw_instance(rng, 3, 25, 35, /*active_only=*/true));
    GroundTruthOracle oracle(p.instance, p.axis, p.table);
    const Instance& inst = p.instance;
    for (int q = 0; q < per_instance; ++q) {
      const int v1 = static_cast<int>(rng.below(inst.n()));
      const int v2 = static_cast<int>(rng.below(inst.n()));
      const long before = oracle.ledger().regular_equiv_issued;
      const double got = oracle.voter_query(v1, v2);
      const long used = oracle.ledger().regular_equiv_issued - before;
      ++result.checks;
      if (got != true_distance(inst.voters[v1], inst.voters[v2]))
        result.fail("voter query inexact", &inst);
      if (used > 2) result.fail("voter query used > 2 regular queries", &inst);
    }
    for (int q = 0; q < per_instance; ++q) {
      const int c1 = static_cast<int>(rng.below(inst.m()));
      const int c2 = static_cast<int>(rng.below(inst.m()));
      const long before = oracle.ledger().regular_equiv_issued;
      const double got = oracle.candidate_query(c1, c2);
      const long used = oracle.ledger().regular_equiv_issued - before;
      ++result.checks;
      if (got != true_distance(inst.candidates[c1], inst.candidates[c2]))
        result.fail("candidate query inexact", &inst);
      if (used > 6)
        result.fail("candidate query used > 6 regular queries", &inst);
    }
    const QueryLedger& led = oracle.ledger();
    ++result.checks;
    if (led.regular_equiv_issued > 6 * led.issued_candidate +
                                       2 * led.issued_voter +
                                       led.issued_regular)
      result.fail("regular-equivalent budget inequality violated", &inst);
    // Replaying the full log against a fresh oracle must reproduce every
    // answer.
    GroundTruthOracle fresh(p.instance, p.axis, p.table);
    for (const QueryRecord& rec : led.log) {
      double again = 0.0;
      switch (rec.type) {
        case QueryType::kRegular: again = fresh.regular_query(rec.id1, rec.id2); break;
        case QueryType::kCandidate: again = fresh.candidate_query(rec.id1, rec.id2); break;
        case QueryType::kVoter: again = fresh.voter_query(rec.id1, rec.id2); break;
      }
      if (again != rec.answer) {
        result.fail("ledger replay diverged", &inst);
        break;
      }
    }
    ++result.checks;
  }
  return result;
}

CheckResult axis_recovery(std::uint64_t seed, int trials) {
  CheckResult result;
  result.name = "axis-recovery";
  Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.fork(t);
    const bool all_active = rng.chance(0.5);
    Pipeline p = prepare(
        draw_instance(rng, 2, 30, 30, all_active, /*extremes_active=*/true));
    ++result.checks;
    std::vector<int> identity(p.instance.m());
    for (int i = 0; i < p.instance.m(); ++i) identity[i] = i;
    std::vector<int> reversed(identity.rbegin(), identity.rend());
    if (p.axis.order != identity && p.axis.order != reversed)
      result.fail("recovered axis differs from the true order", &p.instance);
    if (!is_single_peaked(p.profile, p.axis.order))
      result.fail("recovered axis fails the single-peaked check", &p.instance);
  }
  return result;
}

namespace {

// Independent enumeration oracle for weighted line instances.
double weighted_brute(const WeightedLineInstance& w, int k,
                      Objective objective) {
  const int len = w.size();
  const std::vector<double> pos = w.positions();
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    double total = 0.0;
    for (int i = 0; i < len; ++i) {
      double d = std::numeric_limits<double>::infinity();
      for (int j : pick) d = std::min(d, std::abs(pos[i] - pos[j]));
      if (objective == Objective::kSocialCost)
        total += static_cast<double>(w.weights[i]) * d;
      else if (w.weights[i] > 0)
        total = std::max(total, d);
    }
    best = std::min(best, total);
    int i = k - 1;
    while (i >= 0 && pick[i] == len - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

WeightedLineInstance random_weighted(Rng& rng, int max_points) {
  WeightedLineInstance w;
  const int len = static_cast<int>(rng.int_in(2, max_points));
  for (int i = 0; i < len; ++i) {
    w.candidate_ids.push_back(i);
    w.weights.push_back(rng.int_in(1, 9));
    if (i + 1 < len)
      w.gaps.push_back(static_cast<double>(rng.int_in(1, 1 << 20)) *
                       kPositionGrid);
  }
  return w;
}

WeightedLineInstance true_restriction(const Instance& inst) {
  // Candidate-restricted instance straight from the ground truth: voters move
  // to their nearest candidate, inactive candidates drop out.
  RankingProfile profile = derive_profile(inst);
  std::vector<long> weight(inst.m(), 0);
  for (int v = 0; v < inst.n(); ++v) ++weight[profile.top(v)];
  WeightedLineInstance w;
  double last_pos = 0.0;
  for (int c = 0; c < inst.m(); ++c) {
    if (weight[c] == 0) continue;
    if (!w.candidate_ids.empty())
      w.gaps.push_back(inst.candidates[c] - last_pos);
    w.candidate_ids.push_back(c);
    w.weights.push_back(weight[c]);
    last_pos = inst.candidates[c];
  }
  return w;
}

}  // namespace

CheckResult exact_oracles(std::uint64_t seed, int trials) {
  CheckResult result;
  result.name = "exact-oracles";
  Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.fork(t);
    WeightedLineInstance w = random_weighted(rng, 12);
    const int k = static_cast<int>(rng.int_in(1, std::min(5, w.size())));
    for (Objective objective :
         {Objective::kSocialCost, Objective::kEgalitarianCost}) {
      const double via_dp = dp_opt_line(w, k, objective).second;
      const double via_brute = weighted_brute(w, k, objective);
      ++result.checks;
      if (via_dp != via_brute)
        result.fail("dp_opt_line disagrees with enumeration (" +
                    std::string(objective_name(objective)) + ")");
    }
  }
  // The voter-interval program must match full enumeration on small originals.
  for (int t = 0; t < std::max(1, trials / 2); ++t) {
    Rng rng = root.fork(0x5EED + t);
    Instance inst = draw_instance(rng, 3, 10, 12, rng.chance(0.5));
    const int k = static_cast<int>(rng.int_in(1, inst.m() - 1));
    for (Objective objective :
         {Objective::kSocialCost, Objective::kEgalitarianCost}) {
      const double via_dp = optimal_committee(inst, k, objective).second;
      const double via_brute = brute_force_opt(inst, k, objective).second;
      ++result.checks;
      if (via_dp != via_brute)
        result.fail("optimal_committee disagrees with brute force (" +
                        std::string(objective_name(objective)) + ")",
                    &inst);
    }
  }
  return result;
}

std::pair<CheckResult, CheckResult> greedy_sweep(std::uint64_t seed,
                                                 int trials) {
  CheckResult equiv;
  equiv.name = "greedy-equivalence";
  CheckResult egal;
  egal.name = "greedy-egalitarian";
  Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.fork(t);
    const int k = static_cast<int>(rng.int_in(3, 8));
    GenConfig cfg;
    cfg.m = static_cast<int>(rng.int_in(k + 1, 20));
    cfg.n = static_cast<int>(rng.int_in(cfg.m, 40));
    cfg.active_only = true;
    cfg.placement = rng.chance(0.5) ? Placement::kUniform : Placement::kClustered;
    Pipeline p = prepare(random_instance(rng.next(), cfg));
    GroundTruthOracle oracle(p.instance, p.axis, p.table);
    RuleOutput out = rule_greedy(p.profile, p.axis, p.table, oracle, k);
    ++equiv.checks;
    if (out.elected_order != reference::greedy_committee(p.instance, k))
      equiv.fail("greedy election order differs from the reference",
                 &p.instance);
    if (oracle.ledger().issued_candidate > 6L * k - 15)
      equiv.fail("greedy exceeded 6k-15 candidate queries", &p.instance);
    EvaluationReport report =
        evaluate(p.instance, k, "greedy", out.committee, oracle.ledger());
    if (!within_bound(report.dist_sc, 5.0 * p.instance.n()))
      equiv.fail("greedy social distortion above 5n", &p.instance);
    ++egal.checks;
    if (!within_bound(report.ec_rule, 5.0 * report.ec_opt))
      egal.fail("greedy egalitarian cost above 5x the optimum", &p.instance);
  }
  return {equiv, egal};
}

CheckResult greedy_showcase() {
  CheckResult result;
  result.name = "greedy-showcase";
  TightnessParams params;
  params.n = 10;
  params.eps = 1e-6;
  Pipeline p = prepare(gen_tightness("greedy-remark", params));
  GroundTruthOracle oracle(p.instance, p.axis, p.table);
  RuleOutput out = rule_greedy(p.profile, p.axis, p.table, oracle, 3);
  ++result.checks;
  if (out.committee != Committee{0, 3, 4})
    result.fail("showcase committee is not {a,d,e}", &p.instance);
  EvaluationReport report =
      evaluate(p.instance, 3, "greedy", out.committee, oracle.ledger());
  ++result.checks;
  if (std::abs(report.dist_sc - 10.0 / 3.0) > 1e-3)
    result.fail("showcase social distortion not within 1e-3 of 10/3",
                &p.instance);
  return result;
}

CheckResult interval_routines(std::uint64_t seed, int trials,
                              IntervalRoutine which) {
  CheckResult result;
  result.name = which == IntervalRoutine::kDistant    ? "distant-candidate"
                : which == IntervalRoutine::kPartition ? "partition-interval"
                                                        : "interval-routines";
  Rng root(seed);
  const int per_instance = 8;
  const int rounds = (trials + per_instance - 1) / per_instance;
  for (int t = 0; t < rounds; ++t) {
    Rng rng = root.fork(t);
    Pipeline p = prepare(draw_instance(rng, 5, 28, 28, /*active_only=*/true));
    const int m = p.instance.m();
    for (int q = 0; q < per_instance; ++q) {
      const bool partition = which == IntervalRoutine::kPartition ||
                             (which == IntervalRoutine::kBoth && q % 2 == 1);
      const int min_span = partition ? 3 : 2;
      if (m - 1 < min_span) break;
      const int left = static_cast<int>(rng.below(m - min_span));
      const int right =
          static_cast<int>(rng.int_in(left + min_span, m - 1));
      GroundTruthOracle oracle(p.instance, p.axis, p.table);
      ++result.checks;
      if (!partition) {
        auto [cand, delta] =
            distant_candidate(p.profile, p.axis, p.table, oracle, left, right);
        auto [want_cand, want_delta] =
            reference::interval_champion(p.instance, left, right);
        if (cand != want_cand || delta != want_delta)
          result.fail("distant candidate differs from brute force",
                      &p.instance);
        if (oracle.ledger().issued_candidate > 3)
          result.fail("distant candidate used > 3 queries", &p.instance);
      } else {
        SplitResult split = partition_interval(p.profile, p.axis, p.table,
                                               oracle, left, right);
        reference::Straddle want =
            reference::midpoint_straddle(p.instance, left, right);
        const bool straddle_ok =
            (split.left.right == want.left_end &&
             split.right.left == want.right_end) ||
            (want.midpoint_candidate &&
             ((split.left.right == want.left_end &&
               split.right.left == want.left_end + 1) ||
              (split.left.right == want.left_end - 1 &&
               split.right.left == want.left_end)));
        if (!straddle_ok)
          result.fail("partition straddle differs from the midpoint",
                      &p.instance);
        if (oracle.ledger().issued_candidate > 4)
          result.fail("partition used > 4 queries", &p.instance);
        const auto& cs = p.instance.candidates;
        const double parent = cs[right] - cs[left];
        if (split.left.length != cs[split.left.right] - cs[left] ||
            split.right.length != cs[right] - cs[split.right.left])
          result.fail("partition reported wrong sub-lengths", &p.instance);
        if (split.left.length > parent / 2.0 ||
            split.right.length > parent / 2.0)
          result.fail("partition sub-length above half the parent",
                      &p.instance);
        long want_voters = 0;
        for (int i = left; i <= right; ++i)
          want_voters += p.table.size(p.axis.at(i));
        if (split.left.voters + split.right.voters != want_voters)
          result.fail("partition voter counts do not add up", &p.instance);
      }
    }
  }
  return result;
}

CheckResult coreset_guarantees(std::uint64_t seed, int trials) {
  CheckResult result;
  result.name = "coreset-guarantees";
  Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.fork(t);
    const int k = static_cast<int>(rng.int_in(3, 6));
    GenConfig cfg;
    cfg.m = static_cast<int>(rng.int_in(k + 2, 200));
    cfg.n = static_cast<int>(rng.int_in(cfg.m, 400));
    cfg.active_only = true;
    cfg.placement = rng.chance(0.5) ? Placement::kUniform : Placement::kClustered;
    Pipeline p = prepare(random_instance(rng.next(), cfg));
    GroundTruthOracle oracle(p.instance, p.axis, p.table);
    RuleOutput out = rule_coreset(p.profile, p.axis, p.table, oracle, k);
    const long n = p.instance.n();
    const double sc_opt =
        optimal_committee(p.instance, k, Objective::kSocialCost).second;
    ++result.checks;
    if (!within_bound(cost(p.instance, out.good_set).social_cost,
                      2.0 * sc_opt))
      result.fail("retained set costs more than twice the optimum",
                  &p.instance);
    if (!within_bound(cost(p.instance, out.committee).social_cost,
                      5.0 * sc_opt))
      result.fail("coreset social distortion above 5", &p.instance);
    if (static_cast<double>(out.partition.size()) >
        coreset_interval_cap(k, n) + 1.0 + 1e-9)
      result.fail("interval count above the budget", &p.instance);
    if (oracle.ledger().issued_candidate >
        coreset_query_cap(k, n, static_cast<int>(out.good_set.size())))
      result.fail("candidate queries above the derived ceiling", &p.instance);
    // The interval set must tile the axis.
    int expect_left = 0;
    for (const AxisInterval& iv : out.partition) {
      if (iv.left != expect_left) {
        result.fail("intervals do not tile the axis", &p.instance);
        break;
      }
      expect_left = iv.right + 1;
    }
    if (expect_left != p.instance.m())
      result.fail("intervals do not cover the axis", &p.instance);

    // Egalitarian restriction bounds, instantiated with measured goodness.
    const double ec_opt =
        optimal_committee(p.instance, k, Objective::kEgalitarianCost).second;
    WeightedLineInstance full = true_restriction(p.instance);
    const auto [full_ec_committee, full_ec_cost] =
        dp_opt_line(full, std::min(k, full.size()), Objective::kEgalitarianCost);
    (void)full_ec_cost;
    ++result.checks;
    if (!within_bound(cost(p.instance, full_ec_committee).egalitarian_cost,
                      3.0 * ec_opt))
      result.fail("restricted egalitarian optimum above 3x the optimum",
                  &p.instance);
    std::vector<double> good_gaps;
    for (std::size_t i = 0; i + 1 < out.good_set.size(); ++i)
      good_gaps.push_back(p.instance.candidates[out.good_set[i + 1]] -
                          p.instance.candidates[out.good_set[i]]);
    WeightedLineInstance retained = candidate_restrict(
        p.profile, p.axis, out.good_set, good_gaps);
    const auto [retained_ec_committee, retained_ec_cost] = dp_opt_line(
        retained, std::min(k, retained.size()), Objective::kEgalitarianCost);
    (void)retained_ec_cost;
    const double beta = ec_opt > 0.0
                            ? std::max(1.0, cost(p.instance, out.good_set)
                                                    .egalitarian_cost /
                                                ec_opt)
                            : 1.0;
    ++result.checks;
    if (!within_bound(
            cost(p.instance, retained_ec_committee).egalitarian_cost,
            (2.0 + 3.0 * beta) * ec_opt))
      result.fail("retained egalitarian optimum above (2+3b)x the optimum",
                  &p.instance);
  }
  // Degenerate case: k seats over k+2 candidates leave every Voronoi
  // interval with at most 3 candidates, so nothing splits and the retained
  // set is the full axis.
  for (int t = 0; t < std::max(1, trials / 50); ++t) {
    Rng rng = root.fork(0xC0DE + t);
    GenConfig cfg;
    cfg.m = 6;
    cfg.n = static_cast<int>(rng.int_in(6, 24));
    cfg.active_only = true;
    Pipeline p = prepare(random_instance(rng.next(), cfg));
    GroundTruthOracle oracle(p.instance, p.axis, p.table);
    RuleOutput coreset_out = rule_coreset(p.profile, p.axis, p.table, oracle, 4);
    ++result.checks;
    if (static_cast<int>(coreset_out.good_set.size()) != p.instance.m())
      result.fail("no-split case did not retain every candidate", &p.instance);
    GroundTruthOracle oracle2(p.instance, p.axis, p.table);
    RuleOutput full_out =
        rule_full_axis_dp(p.profile, p.axis, p.table, oracle2, 4);
    if (cost(p.instance, coreset_out.committee).social_cost !=
        cost(p.instance, full_out.committee).social_cost)
      result.fail("no-split case differs from the full-axis solution",
                  &p.instance);
  }
  return result;
}

CheckResult k2_rules(std::uint64_t seed, int trials) {
  CheckResult result;
  result.name = "k2-rules";
  Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.fork(t);
    Pipeline p = prepare(
        draw_instance(rng, 3, 12, 27, rng.chance(0.5), /*extremes=*/true));
    const long n = p.instance.n();
    RuleOutput ext = rule_extremes(p.profile, p.axis, p.table);
    EvaluationReport ext_report =
        evaluate(p.instance, 2, "extremes2", ext.committee, QueryLedger{});
    ++result.checks;
    if (!within_bound(ext_report.dist_sc, 2.0 * n - 2.0))
      result.fail("extremes distortion above 2n-2", &p.instance);
    if (n >= 3) {
      RuleOutput med = rule_median_clusters(p.profile, p.axis, p.table);
      EvaluationReport med_report =
          evaluate(p.instance, 2, "median2", med.committee, QueryLedger{});
      ++result.checks;
      if (!within_bound(med_report.dist_sc, n + 1.0))
        result.fail("median distortion above n+1", &p.instance);
    }
  }
  // Tightness instances: the bounds are met within 1e-4 at eps = 1e-6.
  {
    TightnessParams params;
    params.n = 5;
    params.eps = 1e-6;
    Pipeline p = prepare(gen_tightness("extremes-tight", params));
    RuleOutput ext = rule_extremes(p.profile, p.axis, p.table);
    EvaluationReport report =
        evaluate(p.instance, 2, "extremes2", ext.committee, QueryLedger{});
    ++result.checks;
    if (std::abs(report.dist_sc - (2.0 * params.n - 3.0)) > 1e-4)
      result.fail("extremes tightness not within 1e-4 of 2n-3", &p.instance);
  }
  {
    TightnessParams params;
    params.n = 8;
    params.eps = 1e-6;
    Pipeline p = prepare(gen_tightness("median-tight", params));
    RuleOutput med = rule_median_clusters(p.profile, p.axis, p.table);
    EvaluationReport report =
        evaluate(p.instance, 2, "median2", med.committee, QueryLedger{});
    ++result.checks;
    if (std::abs(report.dist_sc - (params.n + 1.0)) > 1e-4)
      result.fail("median tightness not within 1e-4 of n+1", &p.instance);
  }
  // two-of-three: within 3 on random 3-candidate instances...
  const int tot_trials = 2 * trials;
  for (int t = 0; t < tot_trials; ++t) {
    Rng rng = root.fork(0x70F3 + t);
    GenConfig cfg;
    cfg.m = 3;
    cfg.n = static_cast<int>(rng.int_in(3, 30));
    cfg.active_only = true;
    Pipeline p = prepare(random_instance(rng.next(), cfg));
    RuleOutput out = rule_two_of_three(p.profile, p.axis, p.table);
    EvaluationReport report =
        evaluate(p.instance, 2, "two-of-three", out.committee, QueryLedger{});
    ++result.checks;
    if (!within_bound(report.dist_sc, 3.0))
      result.fail("two-of-three distortion above 3", &p.instance);
  }
  // ...and >= 3 - 1e-2 on the worst of its three hard instances.
  {
    double worst = 0.0;
    for (const char* name :
         {"two-of-three-lb-a", "two-of-three-lb-b", "two-of-three-lb-c"}) {
      TightnessParams params;
      params.eps = 1e-3;
      Pipeline p = prepare(gen_tightness(name, params));
      RuleOutput out = rule_two_of_three(p.profile, p.axis, p.table);
      EvaluationReport report = evaluate(p.instance, 2, "two-of-three",
                                         out.committee, QueryLedger{});
      worst = std::max(worst, report.dist_sc);
    }
    ++result.checks;
    if (worst < 3.0 - 1e-2)
      result.fail("two-of-three hard family peaked below 3 - 1e-2");
  }
  return result;
}

CheckResult lower_bound_family() {
  CheckResult result;
  result.name = "lower-bound-family";
  const double spread = 1000.0;
  const double eps = 1e-3;
  for (int k = 3; k <= 6; ++k) {
    std::vector<Instance> family;
    for (int j = 0; j <= 2 * (k - 1); ++j)
      family.push_back(gen_query_lb(k, spread, eps, j));
    auto [same, witness] = check_indistinguishable(family);
    ++result.checks;
    if (!same)
      result.fail("variants distinguishable at voter " +
                  std::to_string(witness.voter) + " rank " +
                  std::to_string(witness.rank));
    for (int j = 0; j < static_cast<int>(family.size()); ++j) {
      const Instance& inst = family[j];
      WeightedLineInstance w = true_restriction(inst);
      const double sc = dp_opt_line(w, k, Objective::kSocialCost).second;
      const double ec = dp_opt_line(w, k, Objective::kEgalitarianCost).second;
      ++result.checks;
      if (std::abs(sc - (k - 2)) > 1e-9)
        result.fail("variant optimum social cost != k-2", &inst);
      if (std::abs(ec - 1.0) > 1e-9)
        result.fail("variant optimum egalitarian cost != 1", &inst);
      if (j >= 1) {
        if (far_pair_penalty(inst, k) < spread - 1e-9)
          result.fail("far-pair penalty below the spread", &inst);
      }
    }
  }
  // Worst-case distortion of the query-using rules across the k=4 family,
  // next to a zero-query baseline (the two extremes plus the first interior
  // candidates). Reported for the record: enough queries pin the stretched
  // pair, no queries cannot.
  {
    const int k = 4;
    char line[160];
    for (const char* name : {"greedy", "full-axis-dp", "coreset"}) {
      const RuleEntry* rule = find_rule(name);
      double worst = 0.0;
      for (int j = 0; j <= 2 * (k - 1); ++j) {
        Instance inst = gen_query_lb(k, spread, eps, j);
        RankingProfile profile = derive_profile(inst);
        CandidateAxis axis = recover_axis(profile);
        ClusterTable table = clusters(profile, axis);
        GroundTruthOracle oracle(inst, axis, table);
        RuleOutput out = rule->run(profile, axis, table, oracle, k);
        worst = std::max(
            worst,
            evaluate(inst, k, name, out.committee, oracle.ledger()).dist_sc);
      }
      std::snprintf(line, sizeof line,
                    "k=4 family: worst social distortion of %s = %.4f", name,
                    worst);
      result.notes.push_back(line);
    }
    double worst = 0.0;
    Committee baseline;  // both extremes plus the leftmost interiors
    for (int c = 0; c + 1 < k; ++c) baseline.push_back(c);
    baseline.push_back(2 * (k - 1) - 1);
    for (int j = 0; j <= 2 * (k - 1); ++j) {
      Instance inst = gen_query_lb(k, spread, eps, j);
      worst = std::max(
          worst,
          evaluate(inst, k, "baseline", baseline, QueryLedger{}).dist_sc);
    }
    std::snprintf(
        line, sizeof line,
        "k=4 family: worst social distortion of a zero-query baseline = %.1f",
        worst);
    result.notes.push_back(line);
  }

  // k=2 family: electing {a,b} against the middle-voter placement costs a
  // factor of 2t+3.
  {
    const int t = 3;
    const double eps = 1e-4;
    Instance inst = gen_2fac_lb(t, 1.0 + eps, 1.0, eps, TwoFacCase::kAB);
    EvaluationReport report =
        evaluate(inst, 2, "fixed-ab", Committee{0, 1}, QueryLedger{});
    ++result.checks;
    if (std::abs(report.dist_sc - (2.0 * t + 3.0)) > 1e-2)
      result.fail("k=2 family distortion not within 1e-2 of 2t+3", &inst);
  }
  // k=m-1 family: dropping the far-side candidate is forced.
  {
    const double big = 100.0;
    Instance inst = gen_3fac_lb(big);
    auto [best, best_cost] =
        brute_force_opt(inst, 3, Objective::kSocialCost);
    ++result.checks;
    if (best != Committee{0, 1, 2} || std::abs(best_cost - 1.0) > 1e-4)
      result.fail("optimum does not drop the rightmost candidate", &inst);
    for (int dropped : {0, 1}) {
      Committee committee;
      for (int c = 0; c < 4; ++c)
        if (c != dropped) committee.push_back(c);
      if (cost(inst, committee).social_cost < big - 1e-3)
        result.fail("dropping a near candidate is too cheap", &inst);
    }
  }
  return result;
}

}  // namespace dlab::checks
