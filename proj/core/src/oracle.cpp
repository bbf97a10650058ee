#include "dlab/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace dlab {
namespace {

std::uint64_t ordered_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

std::uint64_t unordered_key(int a, int b) {
  return a <= b ? ordered_key(a, b) : ordered_key(b, a);
}

const char* type_name(QueryType t) {
  switch (t) {
    case QueryType::kRegular: return "regular";
    case QueryType::kCandidate: return "candidate";
    case QueryType::kVoter: return "voter";
  }
  return "?";
}

}  // namespace

void write_query_log(const QueryLedger& ledger, std::ostream& out) {
  out << "seq,type,id1,id2,answer,cached\n";
  char buf[64];
  for (const QueryRecord& r : ledger.log) {
    std::snprintf(buf, sizeof buf, "%.17g", r.answer);
    out << r.seq << ',' << type_name(r.type) << ',' << r.id1 << ',' << r.id2
        << ',' << buf << ',' << (r.cached ? 1 : 0) << '\n';
  }
}

DistanceOracle::DistanceOracle(int n, int m, const CandidateAxis& axis,
                               const ClusterTable& clusters)
    : n_(n), m_(m), axis_(axis), clusters_(clusters), top_of_(n, -1) {
  for (int c = 0; c < m; ++c)
    for (int member : clusters_.members[c]) top_of_[member] = c;
}

void DistanceOracle::check_voter(int v) const {
  if (v < 0 || v >= n_) throw InvalidId("voter id " + std::to_string(v));
}

void DistanceOracle::check_candidate(int c) const {
  if (c < 0 || c >= m_) throw InvalidId("candidate id " + std::to_string(c));
}

double DistanceOracle::regular_internal(int voter, int candidate,
                                        bool direct) {
  check_voter(voter);
  check_candidate(candidate);
  ++ledger_.regular_equiv_gross;
  if (direct) ++ledger_.gross_regular;
  const std::uint64_t key = ordered_key(voter, candidate);
  auto it = regular_cache_.find(key);
  const bool cached = it != regular_cache_.end();
  double answer;
  if (cached) {
    answer = it->second;
  } else {
    answer = fetch(voter, candidate);
    regular_cache_.emplace(key, answer);
    ++ledger_.regular_equiv_issued;
    if (direct) ++ledger_.issued_regular;
    fetches_.push_back({static_cast<long>(fetches_.size()),
                        QueryType::kRegular, voter, candidate, answer, false});
  }
  ledger_.log.push_back({static_cast<long>(ledger_.log.size()),
                         QueryType::kRegular, voter, candidate, answer,
                         cached});
  return answer;
}

double DistanceOracle::regular_query(int voter, int candidate) {
  return regular_internal(voter, candidate, /*direct=*/true);
}

// Voter-pair distance from two regular queries against one probe candidate:
// with both voters on the same side of the probe the answers subtract, with
// the probe strictly between their top candidates the answers add.
double DistanceOracle::simulate_voter_distance(int v1, int v2) {
  const int c1 = top_of_[v1];
  const int c2 = top_of_[v2];
  if (c1 < 0 || c2 < 0) throw InvalidId("voter missing from clusters");
  const int m = m_;
  auto reg = [&](int v, int c) { return regular_internal(v, c, false); };

  if (c1 == c2) {
    const int p = axis_.position(c1);
    if (m < 2) throw ProbeUnavailable("voter query needs a second candidate");
    const int probe = p + 1 < m ? axis_.at(p + 1) : axis_.at(p - 1);
    return std::abs(reg(v1, probe) - reg(v2, probe));
  }
  const int p1 = axis_.position(c1);
  const int p2 = axis_.position(c2);
  const int lo = std::min(p1, p2);
  const int hi = std::max(p1, p2);
  if (hi - lo == 1) {
    int probe;
    if (hi + 1 < m)
      probe = axis_.at(hi + 1);
    else if (lo - 1 >= 0)
      probe = axis_.at(lo - 1);
    else
      throw ProbeUnavailable("voter query needs a third candidate");
    return std::abs(reg(v1, probe) - reg(v2, probe));
  }
  const int probe = axis_.at(lo + 1);
  return reg(v1, probe) + reg(v2, probe);
}

double DistanceOracle::voter_query(int v1, int v2) {
  check_voter(v1);
  check_voter(v2);
  ++ledger_.gross_voter;
  if (v1 == v2) {
    ledger_.log.push_back({static_cast<long>(ledger_.log.size()),
                           QueryType::kVoter, v1, v2, 0.0, true});
    return 0.0;
  }
  const std::uint64_t key = unordered_key(v1, v2);
  auto it = voter_cache_.find(key);
  if (it != voter_cache_.end()) {
    ledger_.log.push_back({static_cast<long>(ledger_.log.size()),
                           QueryType::kVoter, v1, v2, it->second, true});
    return it->second;
  }
  const double answer = simulate_voter_distance(v1, v2);
  ++ledger_.issued_voter;
  voter_cache_.emplace(key, answer);
  ledger_.log.push_back({static_cast<long>(ledger_.log.size()),
                         QueryType::kVoter, v1, v2, answer, false});
  return answer;
}

double DistanceOracle::candidate_query(int c1, int c2) {
  check_candidate(c1);
  check_candidate(c2);
  ++ledger_.gross_candidate;
  if (c1 == c2) {
    ledger_.log.push_back({static_cast<long>(ledger_.log.size()),
                           QueryType::kCandidate, c1, c2, 0.0, true});
    return 0.0;
  }
  const std::uint64_t key = unordered_key(c1, c2);
  auto it = candidate_cache_.find(key);
  if (it != candidate_cache_.end()) {
    ledger_.log.push_back({static_cast<long>(ledger_.log.size()),
                           QueryType::kCandidate, c1, c2, it->second, true});
    return it->second;
  }

  const int v1 = clusters_.representative(c1);
  const int v2 = clusters_.representative(c2);
  auto reg = [&](int v, int c) { return regular_internal(v, c, false); };

  // Distances measured from one cluster voter on each side; the relative
  // order of voter and candidate on each side follows from the sums below.
  // At most three regular queries per side.
  const double a = reg(v1, c1);
  double z;
  if (a == 0.0) {
    z = reg(v1, c2);
  } else if (const double x = reg(v2, c2); x == 0.0) {
    z = reg(v2, c1);
  } else {
    const double b = reg(v1, c2);
    const double y = reg(v2, c1);
    if (b > y) {
      if (b == a + x + y)
        z = b - a;
      else if (a > x)
        z = b - a;
      else
        z = b + a;
    } else if (b < y) {
      if (y == a + b + x)
        z = b + a;
      else if (a > x)
        z = b + a;
      else
        z = b - a;
    } else {
      // Both voters outside, or both inside, at mirrored offsets; one
      // voter-pair distance settles it.
      const double w = simulate_voter_distance(v1, v2);
      z = (w == y + a) ? b - a : b + a;
    }
  }
  ++ledger_.issued_candidate;
  candidate_cache_.emplace(key, z);
  ledger_.log.push_back({static_cast<long>(ledger_.log.size()),
                         QueryType::kCandidate, c1, c2, z, false});
  return z;
}

GroundTruthOracle::GroundTruthOracle(const Instance& instance,
                                     const CandidateAxis& axis,
                                     const ClusterTable& clusters)
    : DistanceOracle(instance.n(), instance.m(), axis, clusters),
      instance_(&instance) {}

double GroundTruthOracle::fetch(int voter, int candidate) {
  return std::abs(instance_->voters[voter] - instance_->candidates[candidate]);
}

ReplayOracle::ReplayOracle(std::vector<QueryRecord> trace, int n, int m,
                           const CandidateAxis& axis,
                           const ClusterTable& clusters)
    : DistanceOracle(n, m, axis, clusters), trace_(std::move(trace)) {}

double ReplayOracle::fetch(int voter, int candidate) {
  if (cursor_ >= trace_.size())
    throw ReplayMismatch("fetch past the end of the recorded trace");
  const QueryRecord& rec = trace_[cursor_++];
  if (rec.id1 != voter || rec.id2 != candidate)
    throw ReplayMismatch("fetch (" + std::to_string(voter) + "," +
                         std::to_string(candidate) +
                         ") diverges from the recorded trace");
  return rec.answer;
}

}  // namespace dlab
