#include "dlab/adversarial.hpp"

#include <algorithm>
#include <cmath>

#include "dlab/exact.hpp"

namespace dlab {
namespace {

Instance from_positions(std::vector<double> candidates,
                        std::vector<double> voters, std::string name) {
  Instance instance;
  instance.candidates = std::move(candidates);
  instance.voters = std::move(voters);
  instance.name = std::move(name);
  return instance;
}

}  // namespace

Instance gen_query_lb(int k, double spread, double eps, int variant) {
  if (k < 3) throw BadParams("query lower bound needs k >= 3");
  if (spread < 50.0 || spread * spread < 100.0 * (2.0 * spread + 1.0 + k))
    throw BadParams("spread too small for the pair/separator scale split");
  if (!(eps > 0.0) || !(eps < 1.0 / k)) throw BadParams("eps outside (0, 1/k)");
  const int m = 2 * (k - 1);
  if (variant < 0 || variant > m)
    throw BadParams("variant outside [0, 2(k-1)]");
  const double wide = spread * spread;
  // Separator offsets must exceed twice the variant displacement, or a moved
  // candidate crosses another candidate's distance shell in some ranking and
  // the variants stop being profile-identical.
  const double unit = 3.0 * spread + eps;
  std::vector<double> pos(m, 0.0);
  for (int i = 1; i < m; ++i) {
    const bool inside_pair = (i % 2) == 1;  // gap (c_i, c_{i+1}), 1-based odd
    const double gap =
        inside_pair ? 1.0 : wide + (static_cast<double>(i / 2) - 1.0) * unit;
    pos[i] = pos[i - 1] + gap;
  }
  if (variant >= 1) {
    // 1-based candidate c_j moves by `spread`: odd j to the left, even j to
    // the right; only c_j's distances change.
    if (variant % 2 == 1)
      pos[variant - 1] -= spread;
    else
      pos[variant - 1] += spread;
  }
  std::vector<double> voters = pos;
  return from_positions(std::move(pos), std::move(voters),
                        "query-lb-k" + std::to_string(k) + "-j" +
                            std::to_string(variant));
}

std::pair<int, int> far_pair_of_variant(int k, int variant) {
  if (variant < 1 || variant > 2 * (k - 1))
    throw BadParams("variant without a far pair");
  if (variant % 2 == 1) return {variant - 1, variant};  // 0-based
  return {variant - 2, variant - 1};
}

TwoFacCase two_fac_case_from_name(const std::string& name) {
  if (name == "ab") return TwoFacCase::kAB;
  if (name == "ac") return TwoFacCase::kAC;
  if (name == "ad") return TwoFacCase::kAD;
  if (name == "bc") return TwoFacCase::kBC;
  if (name == "bd") return TwoFacCase::kBD;
  if (name == "cd") return TwoFacCase::kCD;
  throw UnknownName("unknown pair case '" + name + "'");
}

Instance gen_2fac_lb(int t, double x, double y, double z, TwoFacCase which) {
  if (t < 1) throw BadParams("needs t >= 1");
  if (!(z > 0.0) || y < z || x < y + z)
    throw BadParams("needs z > 0, y >= z, x >= y + z");
  const double a = 0.0, b = x, c = x + y, d = x + y + z;
  // Collocating the b/c groups exactly would tie d(v,a) with d(v,d) (resp.
  // d(v,b) with d(v,d)) at the boundary parameter choices; a z/4 offset keeps
  // all four ranking groups strict without moving any cost materially.
  const double nudge = z / 4.0;
  const bool mid_voter = which == TwoFacCase::kAB || which == TwoFacCase::kAC ||
                         which == TwoFacCase::kAD;
  std::vector<double> voters;
  voters.reserve(2 * t + 2);
  for (int i = 0; i < t; ++i) voters.push_back(b + nudge);
  for (int i = 0; i < t; ++i) voters.push_back(c + nudge);
  voters.push_back(mid_voter ? x / 2.0 - z / 2.0 : a);
  voters.push_back(d);
  const char* case_name[] = {"ab", "ac", "ad", "bc", "bd", "cd"};
  return from_positions({a, b, c, d}, std::move(voters),
                        std::string("2fac-lb-") +
                            case_name[static_cast<int>(which)] + "-t" +
                            std::to_string(t));
}

Instance gen_3fac_lb(double big_gap) {
  if (big_gap < 10.0) throw BadParams("needs B >= 10");
  const double nudge = 1e-6;  // collocating the b-voter would tie a with c
  std::vector<double> candidates = {0.0, big_gap, 2.0 * big_gap,
                                    2.0 * big_gap + 1.0};
  std::vector<double> voters = {0.0, big_gap - nudge, 2.0 * big_gap,
                                2.0 * big_gap + 1.0};
  return from_positions(std::move(candidates), std::move(voters), "3fac-lb");
}

std::vector<std::string> tightness_names() {
  return {"extremes-tight",  "median-tight",      "greedy-remark",
          "greedy-remark-medianized", "two-of-three-lb-a", "two-of-three-lb-b",
          "two-of-three-lb-c"};
}

Instance gen_tightness(const std::string& name, const TightnessParams& params) {
  const double eps = params.eps;
  if (!(eps > 0.0) || eps >= 0.1) throw BadParams("eps outside (0, 0.1)");
  if (name == "extremes-tight") {
    if (params.n < 3) throw BadParams("needs n >= 3");
    if (params.spread <= 4.0) throw BadParams("needs spread > 4");
    std::vector<double> voters = {1.0 - eps};
    voters.insert(voters.end(), params.n - 2, 2.0);
    voters.push_back(params.spread);
    return from_positions({0.0, 2.0, params.spread}, std::move(voters),
                          name + "-n" + std::to_string(params.n));
  }
  if (name == "median-tight") {
    if (params.n < 4 || params.n % 2 != 0) throw BadParams("needs even n >= 4");
    std::vector<double> voters = {0.5, 1.0};
    voters.insert(voters.end(), params.n / 2 - 1, 1.0 + eps);
    voters.insert(voters.end(), params.n / 2 - 1, 2.0 + eps);
    return from_positions({0.0, 1.0 + eps, 2.0 + eps}, std::move(voters),
                          name + "-n" + std::to_string(params.n));
  }
  if (name == "greedy-remark" || name == "greedy-remark-medianized") {
    if (params.n < 6 || params.n % 2 != 0) throw BadParams("needs even n >= 6");
    std::vector<double> voters = {0.0};
    voters.insert(voters.end(), params.n / 2 - 1, 1.0);
    voters.insert(voters.end(), params.n / 2 - 2, 2.0 + eps);
    voters.push_back(4.0 + 3.0 * eps);
    voters.push_back(8.0 + 4.0 * eps);
    return from_positions(
        {0.0, 1.0, 2.0 + eps, 4.0 + 3.0 * eps, 8.0 + 4.0 * eps},
        std::move(voters), name + "-n" + std::to_string(params.n));
  }
  if (name == "two-of-three-lb-a") {
    if (params.spread <= 4.0) throw BadParams("needs spread > 4");
    return from_positions({0.0, params.spread, params.spread + 2.0},
                          {0.0, params.spread, params.spread + 2.0}, name);
  }
  if (name == "two-of-three-lb-b") {
    // The middle voter sits a hair right of b so she still ranks c above a.
    return from_positions({0.0, 2.0, 4.0}, {0.0, 2.0 + eps / 8.0, 3.0 + eps},
                          name);
  }
  if (name == "two-of-three-lb-c") {
    return from_positions({0.0, 2.0, 4.0}, {0.0, 3.0 - eps, 4.0}, name);
  }
  throw UnknownName("unknown tightness instance '" + name + "'");
}

std::pair<bool, ProfileWitness> check_indistinguishable(
    const std::vector<Instance>& instances) {
  if (instances.size() <= 1) return {true, {-1, -1}};
  const int n = instances.front().n();
  const int m = instances.front().m();
  for (const Instance& inst : instances)
    if (inst.n() != n || inst.m() != m)
      throw ShapeMismatch("instances disagree on n or m");
  const RankingProfile base = derive_profile(instances.front());
  for (std::size_t i = 1; i < instances.size(); ++i) {
    const RankingProfile other = derive_profile(instances[i]);
    for (int v = 0; v < n; ++v)
      for (int r = 0; r < m; ++r)
        if (base.ranked[v][r] != other.ranked[v][r])
          return {false, {v, r}};
  }
  return {true, {-1, -1}};
}

double far_pair_penalty(const Instance& instance, int k) {
  const int m = instance.m();
  if (m != instance.n() || m < 4 || m % 2 != 0 || m != 2 * (k - 1))
    throw BadInstance("not a query lower-bound instance for this k");
  // The far pair is the unique near-pair stretched past 1.
  int far_left = -1;
  double far_gap = 0.0;
  for (int i = 0; i + 1 < m; i += 2) {
    const double gap = instance.candidates[i + 1] - instance.candidates[i];
    if (gap > far_gap) {
      far_gap = gap;
      far_left = i;
    }
  }
  if (far_gap <= 1.0) throw BadInstance("basic instance has no far pair");

  // Brute-force minimum over committees missing at least one far-pair member.
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  double best = std::numeric_limits<double>::infinity();
  Committee committee(k);
  while (true) {
    bool both = false;
    {
      bool has_l = false, has_r = false;
      for (int i = 0; i < k; ++i) {
        committee[i] = pick[i];
        has_l |= pick[i] == far_left;
        has_r |= pick[i] == far_left + 1;
      }
      both = has_l && has_r;
    }
    if (!both)
      best = std::min(best, cost(instance, committee).social_cost);
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace dlab
