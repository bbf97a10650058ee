#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "dlab/axis.hpp"
#include "dlab/instance.hpp"
#include "dlab/oracle.hpp"

namespace dlab {

enum class Objective { kSocialCost, kEgalitarianCost };

inline const char* objective_name(Objective o) {
  return o == Objective::kSocialCost ? "social" : "egalitarian";
}

// Reported when the optimal cost is zero but the rule's cost is not.
inline constexpr double kInfiniteDistortion =
    std::numeric_limits<double>::infinity();

struct QueryCounts {
  long regular = 0;
  long candidate = 0;
  long voter = 0;
  long gross_regular = 0;
  long gross_candidate = 0;
  long gross_voter = 0;
  long regular_equiv = 0;
  long gross_regular_equiv = 0;

  static QueryCounts from(const QueryLedger& ledger);
};

struct EvaluationReport {
  std::string rule;
  Committee committee;
  double sc_rule = 0.0;
  double ec_rule = 0.0;
  double sc_opt = 0.0;
  double ec_opt = 0.0;
  double dist_sc = 1.0;
  double dist_ec = 1.0;
  QueryCounts queries;
  double runtime_ms = 0.0;
};

// Exact minimizer over all k-subsets of `subset` (default: every candidate,
// active or not) by full enumeration. Ties break lexicographically on the
// sorted candidate ids. Throws TooLarge when C(|subset|, k) would exceed the
// enumeration limit (default: subset size 16).
std::pair<Committee, double> brute_force_opt(const Instance& instance, int k,
                                             Objective objective,
                                             int enum_limit = 16);
std::pair<Committee, double> brute_force_opt(const Instance& instance, int k,
                                             Objective objective,
                                             const std::vector<int>& subset,
                                             int enum_limit = 16);

// Exact optimum of a weighted line instance over its own points; handles both
// objectives. O(len^2 k). Throws KTooLarge when k exceeds the point count.
std::pair<Committee, double> dp_opt_line(const WeightedLineInstance& w, int k,
                                         Objective objective);

// Exact optimum of the original instance (voters at their true positions,
// committee drawn from all candidates) via a voter-interval dynamic program;
// scales past the brute-force enumeration limit. Cross-checked against
// brute_force_opt in the test suite.
std::pair<Committee, double> optimal_committee(const Instance& instance, int k,
                                               Objective objective);

// Distortion convention at zero optimum: 1 when the rule's cost is also zero,
// +infinity otherwise.
double distortion(double rule_cost, double optimal_cost);

EvaluationReport evaluate(const Instance& instance, int k,
                          const std::string& rule_name,
                          const Committee& committee,
                          const QueryLedger& ledger, double runtime_ms = 0.0);

}  // namespace dlab
