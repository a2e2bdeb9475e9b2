#pragma once

#include <atomic>
#include <optional>

#include "bslope/peripheral.hpp"

namespace bslope {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Single-index reference evaluation: build R(I), take exact minors, test
// sign-definiteness, and derive valuations and the slope when certified.
struct IndexEvaluation {
  DegenerationIndex index;
  DegenerationVector dvec;
  std::optional<SlopeResult> result;  // empty when not sign-definite
};

IndexEvaluation evaluate_index(const ExponentMatrix& R, const CurvePair& curves,
                               const DegenerationIndex& idx);

struct SearchOptions {
  int workers = 0;             // 0 = hardware concurrency
  uint64_t chunk_size = 19683; // 3^9
  bool prune = false;          // DFS with shared partial elimination
  bool force = false;          // override the 3^n budget guard
  std::optional<std::string> resume;  // token from an interrupted run
  std::optional<uint64_t> max_chunks; // stop early after this many chunks
};

struct SearchReport {
  std::vector<SlopeResult> certified;  // sorted by enumeration rank
  uint64_t scanned = 0;                // contiguous prefix of [0, 3^n) covered
  std::vector<Slope> distinct_slopes;  // deduplicated, ascending
  double wall_seconds = 0.0;
  std::optional<std::string> resume_token;  // set when the scan stopped early
};

// Evaluates exactly the given indices, report in input order.
SearchReport verify_indices(const ExponentMatrix& R, const CurvePair& curves,
                            const std::vector<DegenerationIndex>& indices);

// Scans {0,1,inf}^n in base-3 lexicographic order (0 < 1 < inf). The result
// set is independent of worker count and chunking. Soft warning (stderr)
// above n = 16; refuses n > 18 without force.
SearchReport exhaustive_search(const ExponentMatrix& R, const CurvePair& curves,
                               const SearchOptions& opts = {});

// Workers stop claiming chunks once set; the report then carries a resume
// token. Reset before starting a new search.
std::atomic<bool>& search_interrupt_flag();

}  // namespace bslope
