#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "dlab/axis.hpp"
#include "dlab/instance.hpp"

namespace dlab {

enum class QueryType { kRegular, kCandidate, kVoter };

struct QueryRecord {
  long seq;
  QueryType type;
  int id1;
  int id2;
  double answer;
  bool cached;
};

// Query accounting. "Issued" counts exclude cache hits; "gross" counts every
// call. regular_equiv_* track the underlying voter-candidate distance fetches,
// including the ones spent inside candidate/voter query simulations.
struct QueryLedger {
  long issued_regular = 0;
  long issued_candidate = 0;
  long issued_voter = 0;
  long gross_regular = 0;
  long gross_candidate = 0;
  long gross_voter = 0;
  long regular_equiv_issued = 0;
  long regular_equiv_gross = 0;
  std::vector<QueryRecord> log;
};

// CSV rows: seq,type,id1,id2,answer,cached
void write_query_log(const QueryLedger& ledger, std::ostream& out);

// Metered distance access; the only cardinal channel available to rules.
// Candidate and voter queries are simulated from regular (voter-candidate)
// queries: a voter query costs at most 2 regular queries, a candidate query
// at most 6. All simulated answers are exact. Repeated identical queries hit
// a cache and do not increment issued counts.
class DistanceOracle {
 public:
  virtual ~DistanceOracle() = default;

  double regular_query(int voter, int candidate);
  double voter_query(int v1, int v2);
  double candidate_query(int c1, int c2);

  const QueryLedger& ledger() const { return ledger_; }
  int num_voters() const { return n_; }
  int num_candidates() const { return m_; }
  const CandidateAxis& axis() const { return axis_; }
  const ClusterTable& table() const { return clusters_; }

  // Ground-truth fetches in issue order; feeds ReplayOracle.
  const std::vector<QueryRecord>& fetch_trace() const { return fetches_; }

 protected:
  DistanceOracle(int n, int m, const CandidateAxis& axis,
                 const ClusterTable& clusters);

  // Uncached voter-candidate distance; the single point of position access.
  virtual double fetch(int voter, int candidate) = 0;

 private:
  double regular_internal(int voter, int candidate, bool direct);
  double simulate_voter_distance(int v1, int v2);
  void check_voter(int v) const;
  void check_candidate(int c) const;

  int n_;
  int m_;
  CandidateAxis axis_;
  ClusterTable clusters_;
  std::vector<int> top_of_;  // voter -> top candidate, from the clusters
  QueryLedger ledger_;
  std::vector<QueryRecord> fetches_;
  std::unordered_map<std::uint64_t, double> regular_cache_;
  std::unordered_map<std::uint64_t, double> candidate_cache_;
  std::unordered_map<std::uint64_t, double> voter_cache_;
};

// Oracle answering from the hidden ground-truth instance.
class GroundTruthOracle final : public DistanceOracle {
 public:
  GroundTruthOracle(const Instance& instance, const CandidateAxis& axis,
                    const ClusterTable& clusters);

 protected:
  double fetch(int voter, int candidate) override;

 private:
  const Instance* instance_;
};

// Oracle answering from a recorded fetch trace; it holds no positions at all.
// A deterministic rule re-run against the trace of its own prior run must ask
// the same fetches in the same order, otherwise ReplayMismatch is thrown.
// Used to certify that rules touch positions only through the oracle.
class ReplayOracle final : public DistanceOracle {
 public:
  ReplayOracle(std::vector<QueryRecord> trace, int n, int m,
               const CandidateAxis& axis, const ClusterTable& clusters);

  bool exhausted() const { return cursor_ == trace_.size(); }

 protected:
  double fetch(int voter, int candidate) override;

 private:
  std::vector<QueryRecord> trace_;
  std::size_t cursor_ = 0;
};

}  // namespace dlab
