#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dlab/instance.hpp"

namespace dlab {

// Default parameters for the query lower-bound family.
inline constexpr double kDefaultLbSpread = 1000.0;  // D
inline double default_lb_epsilon(int k) { return 1e-3 / k; }

// k-1 near pairs separated by wide gaps; variant j in [1, 2(k-1)] moves
// candidate c_j outward by D so that exactly one pair sits at distance D+1.
// Variant 0 is the basic instance. All voters are collocated with their top
// candidate and every variant induces the same ranking profile.
// Throws BadParams unless k >= 3, D >= 50, D^2 >= 100*(2D+1+k),
// eps in (0, 1/k) and j in [0, 2(k-1)].
Instance gen_query_lb(int k, double spread, double eps, int variant);

enum class TwoFacCase { kAB, kAC, kAD, kBC, kBD, kCD };

TwoFacCase two_fac_case_from_name(const std::string& name);

// Four candidates a,b,c,d at 0, x, x+y, x+y+z with the four ranking groups
// (t voters b>c>d>a, t voters c>d>b>a, one a>b>c>d, one d>c>b>a). The case
// selects the voter placement used against the corresponding elected pair:
// kAB/kAC/kAD put the a-voter near the middle of [a,b] (at x/2 - z/2), the
// rest collocate every voter with her top candidate, up to the small nudges
// needed to keep rankings strict. Throws BadParams unless t >= 1, z > 0,
// y >= z and x >= y+z.
Instance gen_2fac_lb(int t, double x, double y, double z, TwoFacCase which);

// k = m-1 family: candidates at 0, B, 2B, 2B+1, one voter per candidate.
// Dropping the rightmost candidate is optimal (cost ~1); dropping any of the
// two left ones costs at least B. Throws BadParams unless B >= 10.
Instance gen_3fac_lb(double big_gap);

struct TightnessParams {
  int n = 0;
  double eps = 1e-6;
  double spread = 100.0;  // extremes-tight far candidate / two-of-three-lb-a
};

// name: extremes-tight | median-tight | greedy-remark |
//       greedy-remark-medianized | two-of-three-lb-a | two-of-three-lb-b |
//       two-of-three-lb-c.  Throws UnknownName / BadParams.
Instance gen_tightness(const std::string& name, const TightnessParams& params);

std::vector<std::string> tightness_names();

struct ProfileWitness {
  int voter;
  int rank;
};

// True iff all instances induce exactly the same ranking profile; otherwise
// the first differing (voter, rank) cell is reported. Instances must agree on
// n and m (ShapeMismatch).
std::pair<bool, ProfileWitness> check_indistinguishable(
    const std::vector<Instance>& instances);

// Minimum social cost over all k-committees missing at least one member of
// the variant's far pair (brute force). Throws BadInstance unless the
// instance came from gen_query_lb with variant >= 1.
double far_pair_penalty(const Instance& instance, int k);

// The far pair of a gen_query_lb variant, as candidate indices.
std::pair<int, int> far_pair_of_variant(int k, int variant);

}  // namespace dlab
