#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dlab/errors.hpp"

namespace dlab {

// Positions are snapped to this dyadic grid by the random generator, so every
// distance, and every short sum/difference of distances, is an exact double.
inline constexpr double kPositionGrid = 0x1.0p-20;

// Minimum admissible separation between two distances seen by the same voter
// (and between candidate locations). The grid guarantees it by construction.
inline constexpr double kPositionMargin = 1e-9;

// Ground-truth positions on the real line. Candidates are kept sorted, so
// candidate index i is also the i-th location from the left. Rules never see
// this type; they work from the ranking profile and a metered oracle.
struct Instance {
  std::vector<double> candidates;  // strictly increasing
  std::vector<double> voters;
  std::string name;

  int m() const { return static_cast<int>(candidates.size()); }
  int n() const { return static_cast<int>(voters.size()); }
};

// Throws (TieDetected / BadInstance) unless candidates are strictly
// increasing, all positions are finite, and for every voter the distances to
// all candidates are pairwise distinct by at least `margin`.
void validate_instance(const Instance& instance,
                       double margin = kPositionMargin);

// Per-voter candidate permutations, most- to least-preferred.
struct RankingProfile {
  // ranked[v][r] = candidate at rank r for voter v.
  std::vector<std::vector<int>> ranked;
  // rank_of[v][c] = rank of candidate c in voter v's list.
  std::vector<std::vector<int>> rank_of;

  int n() const { return static_cast<int>(ranked.size()); }
  int m() const { return ranked.empty() ? 0 : static_cast<int>(ranked[0].size()); }
  int top(int voter) const { return ranked[voter][0]; }
  bool prefers(int voter, int c1, int c2) const {
    return rank_of[voter][c1] < rank_of[voter][c2];
  }
};

using Committee = std::vector<int>;  // sorted, distinct candidate indices

struct CostReport {
  double social_cost = 0.0;
  double egalitarian_cost = 0.0;
  std::vector<int> assignment;  // voter -> nearest committee member
};

// Sorts candidates by distance, strictly. Throws TieDetected when two
// distances compare exactly equal.
RankingProfile derive_profile(const Instance& instance);

// Social / egalitarian cost of a committee, with the nearest-member
// assignment. Throws EmptyCommittee / InvalidId.
CostReport cost(const Instance& instance, const Committee& committee);

enum class Placement { kUniform, kClustered, kCollocatedFraction };

struct GenConfig {
  int n = 0;
  int m = 0;
  Placement placement = Placement::kUniform;
  // Every candidate gets a dedicated nearby voter (all candidates active).
  bool active_only = false;
  // Outermost candidates get dedicated nearby voters (non-degenerate profile,
  // interior candidates may stay inactive).
  bool extremes_active = false;
  double collocated_fraction = 0.25;  // kCollocatedFraction only
  int max_attempts = 64;
  std::string name;
};

// Deterministic per seed. Rejection-samples until the instance passes
// validate_instance(); throws GenerationFailed after max_attempts.
Instance random_instance(std::uint64_t seed, const GenConfig& config);

// --- instance files -------------------------------------------------------
// JSON: { "name": str, "candidates": [...], "voters": [...] }. Candidates in
// the file may be unsorted; the loader sorts them and reports where each
// sorted candidate sat in the file.

struct LoadedInstance {
  Instance instance;
  std::vector<int> file_order;  // file_order[i] = file index of candidate i
};

LoadedInstance load_instance(std::istream& in);
LoadedInstance load_instance_file(const std::string& path);
void save_instance(const Instance& instance, std::ostream& out);
void save_instance_file(const Instance& instance, const std::string& path);

}  // namespace dlab
