#pragma once

// Hyper-Ls and minimum distance diagrams: finite downward-closed sets of unit
// cubes in N^n whose anchors hit every class of Z^n / M Z^n exactly once.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dilmet/cayley.hpp"
#include "dilmet/lattice_core.hpp"

namespace dilmet {

using Anchor = std::vector<std::int64_t>;

/// The cube [a1, a1+1) x ... x [an, an+1), identified by its anchor a >= 0.
struct UnitCube {
  Anchor anchor;

  std::int64_t norm() const;
  auto operator<=>(const UnitCube&) const = default;
};

class HyperL {
 public:
  /// Anchors must be nonnegative with the matrix's dimension; duplicates collapse.
  HyperL(IntMatrix matrix, std::vector<UnitCube> cubes);

  std::size_t dim() const noexcept { return matrix_.dim(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<UnitCube>& cubes() const noexcept { return cubes_; }
  std::size_t size() const noexcept { return cubes_.size(); }
  bool contains(const Anchor& a) const;

 private:
  IntMatrix matrix_;
  std::vector<UnitCube> cubes_;  // lex-sorted, unique
};

/// Maps points of Z^n to class indices of Z^n / M Z^n through the
/// invariant-factor presentation of G_M.
class LatticeClassifier {
 public:
  explicit LatticeClassifier(const IntMatrix& m);

  std::int64_t order() const noexcept { return digraph_.order(); }
  std::int64_t class_of(std::span<const std::int64_t> x) const;
  const CayleyDigraph& digraph() const noexcept { return digraph_; }
  const SmithDecomposition& smith() const noexcept { return snf_; }

 private:
  SmithDecomposition snf_;
  CayleyDigraph digraph_;
};

struct HyperLReport {
  std::int64_t expected_cubes = 0;
  std::int64_t actual_cubes = 0;
  std::vector<std::pair<Anchor, Anchor>> duplicate_classes;  // congruent pairs
  std::int64_t missing_classes = 0;
  std::vector<std::pair<Anchor, Anchor>> closure_gaps;  // (cube, absent cube below it)

  bool cardinality_ok() const { return expected_cubes == actual_cubes; }
  bool valid() const {
    return cardinality_ok() && duplicate_classes.empty() && missing_classes == 0 &&
           closure_gaps.empty();
  }
  std::vector<std::string> violations() const;
};

struct MinimalityReport {
  std::vector<std::pair<Anchor, std::int64_t>> non_minimal;  // cube, true distance
  bool minimal() const { return non_minimal.empty(); }
};

struct MddCertificate {
  HyperL diagram;
  std::vector<std::int32_t> class_distances;  // BFS distance per class index
  std::int64_t diameter = 0;
};

MddCertificate build_mdd(const IntMatrix& m);

HyperLReport validate_hyperl(const HyperL& l, const IntMatrix& m);
MinimalityReport check_minimality(const HyperL& l, const IntMatrix& m);
bool check_tessellation(const HyperL& l, const IntMatrix& m);

HyperL dilate(const HyperL& l, std::int64_t t);
std::int64_t hyperl_diameter(const HyperL& l);
std::vector<UnitCube> max_norm_cubes(const HyperL& l);

GroupElement vertex_of_cube(const UnitCube& cube, const IntMatrix& u, const IntMatrix& s);
GroupElement vertex_of_cube(const UnitCube& cube, const CayleyDigraph& g);

}  // namespace dilmet
