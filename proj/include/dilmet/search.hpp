#pragma once

// Exhaustive searches over cyclic Cayley digraphs and instance-level checks
// of the dilation law k(G_{tM}) = t (k(G_M) + n) - n.

#include <cstdint>
#include <vector>

#include "dilmet/cayley.hpp"
#include "dilmet/lattice_core.hpp"

namespace dilmet {

struct SearchOptions {
  std::int64_t max_candidates = 100'000'000;
  double max_seconds = 0.0;  // 0 = no time limit
  unsigned workers = 1;
  bool multiplier_pruning = false;
  std::uint64_t seed = 0;  // nonzero permutes the enumeration order
  std::size_t witness_cap = 1000;
};

struct SearchResult {
  std::int64_t modulus = 0;
  std::int64_t degree = 0;
  std::int64_t best_k = -1;
  std::vector<std::vector<std::int64_t>> witnesses;  // sorted, at most witness_cap
  std::int64_t optimal_sets = 0;                     // uncapped count of witnesses
  std::int64_t explored = 0;
  bool exhaustive = true;
  bool pruned = false;  // witnesses are multiplier-orbit representatives
  double seconds = 0.0;
};

/// Diameter of Cay(Z_N, gens), or -1 if the set does not generate. With a
/// limit, any diameter above it is reported as limit + 1.
std::int64_t cyclic_diameter(std::int64_t modulus, const std::vector<std::int64_t>& gens,
                             std::int64_t limit = -1);

SearchResult min_diameter_cyclic(std::int64_t modulus, std::int64_t degree,
                                 const SearchOptions& options = {});

/// Largest N <= n_max with a degree-d cyclic digraph of diameter <= k.
SearchResult densest_cyclic_for_diameter(std::int64_t degree, std::int64_t k, std::int64_t n_max,
                                         const SearchOptions& options = {});

struct DilationRow {
  std::int64_t t = 0;
  Integer order;
  std::int64_t predicted_k = 0;
  std::int64_t bfs_k = 0;
  std::int64_t diagram_k = 0;
  bool tessellates = false;
  Rational density;
  bool pass = false;  // predicted_k == bfs_k
};

struct DilationCheck {
  IntMatrix base;
  std::int64_t base_k = 0;
  std::vector<DilationRow> rows;

  bool passed() const;
};

DilationCheck verify_dilating_theorem(const IntMatrix& m, std::int64_t t_max,
                                      std::int64_t max_order = std::int64_t{1} << 24);

}  // namespace dilmet
