#include "dlab/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dlab/rng.hpp"

namespace dlab {
namespace {

// Position span for random instances, in grid units (positions in [0, 1000]).
constexpr std::int64_t kSpanUnits = std::int64_t{1000} << 20;

double from_units(std::int64_t units) {
  return static_cast<double>(units) * kPositionGrid;
}

bool all_finite(const std::vector<double>& xs) {
  return std::all_of(xs.begin(), xs.end(),
                     [](double x) { return std::isfinite(x); });
}

}  // namespace

void validate_instance(const Instance& instance, double margin) {
  if (instance.m() == 0) throw BadInstance("instance has no candidates");
  if (!all_finite(instance.candidates) || !all_finite(instance.voters))
    throw BadInstance("non-finite position");
  for (int i = 0; i + 1 < instance.m(); ++i) {
    if (!(instance.candidates[i + 1] - instance.candidates[i] >= margin))
      throw BadInstance("candidate positions not separated at index " +
                        std::to_string(i));
  }
  std::vector<double> dists(instance.m());
  for (int v = 0; v < instance.n(); ++v) {
    for (int c = 0; c < instance.m(); ++c)
      dists[c] = std::abs(instance.voters[v] - instance.candidates[c]);
    std::sort(dists.begin(), dists.end());
    for (int c = 0; c + 1 < instance.m(); ++c) {
      if (!(dists[c + 1] - dists[c] >= margin))
        throw TieDetected("voter " + std::to_string(v) +
                          " sees two candidate distances within margin");
    }
  }
}

RankingProfile derive_profile(const Instance& instance) {
  const int n = instance.n();
  const int m = instance.m();
  RankingProfile profile;
  profile.ranked.assign(n, {});
  profile.rank_of.assign(n, std::vector<int>(m, -1));
  std::vector<std::pair<double, int>> by_distance(m);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < m; ++c)
      by_distance[c] = {std::abs(instance.voters[v] - instance.candidates[c]),
                        c};
    std::sort(by_distance.begin(), by_distance.end());
    for (int r = 0; r + 1 < m; ++r) {
      if (by_distance[r].first == by_distance[r + 1].first)
        throw TieDetected("voter " + std::to_string(v) +
                          " is equidistant from candidates " +
                          std::to_string(by_distance[r].second) + " and " +
                          std::to_string(by_distance[r + 1].second));
    }
    profile.ranked[v].resize(m);
    for (int r = 0; r < m; ++r) {
      profile.ranked[v][r] = by_distance[r].second;
      profile.rank_of[v][by_distance[r].second] = r;
    }
  }
  return profile;
}

CostReport cost(const Instance& instance, const Committee& committee) {
  if (committee.empty()) throw EmptyCommittee("empty committee");
  for (int c : committee) {
    if (c < 0 || c >= instance.m())
      throw InvalidId("candidate id " + std::to_string(c));
  }
  CostReport report;
  report.assignment.resize(instance.n());
  for (int v = 0; v < instance.n(); ++v) {
    double best = std::numeric_limits<double>::infinity();
    int best_c = -1;
    for (int c : committee) {
      double d = std::abs(instance.voters[v] - instance.candidates[c]);
      if (d < best) {
        best = d;
        best_c = c;
      }
    }
    report.assignment[v] = best_c;
    report.social_cost += best;
    report.egalitarian_cost = std::max(report.egalitarian_cost, best);
  }
  return report;
}

namespace {

std::vector<std::int64_t> draw_candidates(Rng& rng, int m) {
  std::vector<std::int64_t> units;
  units.reserve(m);
  while (static_cast<int>(units.size()) < m) {
    std::int64_t u = rng.int_in(0, kSpanUnits);
    if (std::find(units.begin(), units.end(), u) == units.end())
      units.push_back(u);
  }
  std::sort(units.begin(), units.end());
  return units;
}

std::int64_t min_adjacent_gap(const std::vector<std::int64_t>& units) {
  std::int64_t gap = kSpanUnits;
  for (std::size_t i = 0; i + 1 < units.size(); ++i)
    gap = std::min(gap, units[i + 1] - units[i]);
  return gap;
}

// A voter strictly inside (c - reach, c + reach) with reach at most a quarter
// of the smallest adjacent gap has c as her unique top candidate.
std::int64_t pin_voter_near(Rng& rng, const std::vector<std::int64_t>& cands,
                            int c) {
  std::int64_t reach = std::max<std::int64_t>(1, min_adjacent_gap(cands) / 4);
  std::int64_t offset = rng.int_in(1, reach);
  if (rng.chance(0.5)) offset = -offset;
  std::int64_t u = cands[c] + offset;
  return std::clamp<std::int64_t>(u, 0, kSpanUnits);
}

std::int64_t draw_voter(Rng& rng, const std::vector<std::int64_t>& cands,
                        const GenConfig& config) {
  switch (config.placement) {
    case Placement::kUniform:
      return rng.int_in(0, kSpanUnits);
    case Placement::kClustered: {
      // Around a random candidate, with a spread of a few adjacent gaps.
      int c = static_cast<int>(rng.below(cands.size()));
      std::int64_t spread =
          std::max<std::int64_t>(1, min_adjacent_gap(cands) * 2);
      // Sum of three uniforms: cheap, deterministic, bell-ish.
      std::int64_t off = rng.int_in(-spread, spread) +
                         rng.int_in(-spread, spread) +
                         rng.int_in(-spread, spread);
      return std::clamp<std::int64_t>(cands[c] + off / 3, 0, kSpanUnits);
    }
    case Placement::kCollocatedFraction:
      if (rng.chance(config.collocated_fraction))
        return cands[rng.below(cands.size())];
      return rng.int_in(0, kSpanUnits);
  }
  return rng.int_in(0, kSpanUnits);
}

bool voter_ok(const std::vector<std::int64_t>& cands, std::int64_t voter) {
  // Strict rankings need pairwise-distinct |v - c|; on the grid a tie is an
  // exact integer equality.
  std::vector<std::int64_t> dist;
  dist.reserve(cands.size());
  for (std::int64_t c : cands) dist.push_back(std::llabs(voter - c));
  std::sort(dist.begin(), dist.end());
  return std::adjacent_find(dist.begin(), dist.end()) == dist.end();
}

}  // namespace

Instance random_instance(std::uint64_t seed, const GenConfig& config) {
  if (config.m < 1 || config.n < 1)
    throw BadParams("random_instance needs n >= 1 and m >= 1");
  if (config.active_only && config.n < config.m)
    throw BadParams("active-only placement needs n >= m");
  Rng rng = Rng(seed).fork(0x1157);
  for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
    std::vector<std::int64_t> cands = draw_candidates(rng, config.m);
    std::vector<std::int64_t> voters;
    voters.reserve(config.n);
    bool ok = true;
    for (int v = 0; v < config.n && ok; ++v) {
      int pinned = -1;
      if (config.active_only && v < config.m) {
        pinned = v;
      } else if (config.extremes_active && v < 2) {
        pinned = v == 0 ? 0 : config.m - 1;
      }
      bool placed = false;
      for (int redraw = 0; redraw < 16 && !placed; ++redraw) {
        std::int64_t u = pinned >= 0 ? pin_voter_near(rng, cands, pinned)
                                     : draw_voter(rng, cands, config);
        if (pinned >= 0) {
          // Keep the pin: the nearby draw must still top its candidate.
          std::int64_t best = std::llabs(u - cands[pinned]);
          bool top = true;
          for (int c = 0; c < config.m && top; ++c)
            if (c != pinned && std::llabs(u - cands[c]) <= best) top = false;
          if (!top) continue;
        }
        if (voter_ok(cands, u)) {
          voters.push_back(u);
          placed = true;
        }
      }
      ok = placed;
    }
    if (!ok) continue;
    Instance instance;
    instance.name = config.name;
    instance.candidates.reserve(config.m);
    instance.voters.reserve(config.n);
    for (std::int64_t u : cands) instance.candidates.push_back(from_units(u));
    for (std::int64_t u : voters) instance.voters.push_back(from_units(u));
    try {
      validate_instance(instance);
    } catch (const Error&) {
      continue;
    }
    return instance;
  }
  throw GenerationFailed("no valid instance after " +
                         std::to_string(config.max_attempts) + " attempts");
}

LoadedInstance load_instance(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad instance file: ") + e.what());
  }
  if (!j.contains("candidates") || !j.contains("voters"))
    throw IoError("instance file needs 'candidates' and 'voters'");
  LoadedInstance loaded;
  loaded.instance.name = j.value("name", std::string{});
  std::vector<double> cands = j["candidates"].get<std::vector<double>>();
  loaded.instance.voters = j["voters"].get<std::vector<double>>();
  loaded.file_order.resize(cands.size());
  std::iota(loaded.file_order.begin(), loaded.file_order.end(), 0);
  std::stable_sort(loaded.file_order.begin(), loaded.file_order.end(),
                   [&](int a, int b) { return cands[a] < cands[b]; });
  loaded.instance.candidates.reserve(cands.size());
  for (int idx : loaded.file_order)
    loaded.instance.candidates.push_back(cands[idx]);
  validate_instance(loaded.instance);
  return loaded;
}

LoadedInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return load_instance(in);
}

void save_instance(const Instance& instance, std::ostream& out) {
  nlohmann::json j;
  j["name"] = instance.name;
  j["candidates"] = instance.candidates;
  j["voters"] = instance.voters;
  out << j.dump(2) << '\n';
}

void save_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  save_instance(instance, out);
}

}  // namespace dlab
