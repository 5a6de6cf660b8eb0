#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dilmet/lattice_core.hpp"

namespace dilmet {

using Rational = boost::multiprecision::cpp_rational;
using GroupElement = std::vector<std::int64_t>;

/// Z_{s1} + ... + Z_{sn} with s1 | s2 | ... | sn.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::int64_t order() const noexcept { return order_; }

  GroupElement identity() const { return GroupElement(factors_.size(), 0); }
  GroupElement reduce(std::span<const std::int64_t> x) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  bool is_canonical(const GroupElement& g) const;

  // Mixed-radix index in [0, order), last coordinate fastest.
  std::int64_t index_of(const GroupElement& g) const;
  GroupElement element_at(std::int64_t index) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
};

class CayleyDigraph {
 public:
  CayleyDigraph(AbelianGroup group, std::vector<GroupElement> generators);

  static CayleyDigraph cyclic(std::int64_t modulus, std::span<const std::int64_t> generators);

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  std::size_t degree() const noexcept { return generators_.size(); }
  std::int64_t order() const noexcept { return group_.order(); }

  /// Sum of a_i * gamma_i reduced into the group.
  GroupElement evaluate(std::span<const std::int64_t> coefficients) const;

 private:
  AbelianGroup group_;
  std::vector<GroupElement> generators_;
};

/// Cay(Z^n / M Z^n, E_n) presented on invariant factors; generator i is
/// column i of U reduced mod S.
CayleyDigraph group_from_matrix(const IntMatrix& m);
CayleyDigraph group_from_smith(const SmithDecomposition& snf);

/// Matrix M whose columns span the kernel of a -> sum a_i gamma_i, so that
/// g is isomorphic to G_M with e_i mapped to generator i.
IntMatrix lattice_of(const CayleyDigraph& g);

/// BFS distances from the identity, indexed by AbelianGroup::index_of; -1 if
/// unreachable.
std::vector<std::int32_t> distances_from_identity(const CayleyDigraph& g);

bool generates(const CayleyDigraph& g);
std::int64_t diameter_bfs(const CayleyDigraph& g);
std::map<std::int64_t, std::int64_t> distance_distribution(const CayleyDigraph& g);

Rational density(const Integer& order, std::int64_t degree, std::int64_t diameter);

bool verify_multiplier_isomorphism(std::int64_t modulus, std::span<const std::int64_t> gens_a,
                                   std::span<const std::int64_t> gens_b, std::int64_t mult);

/// Smallest unit u of Z_modulus with {u a : a in gens_a} = gens_b as
/// multisets (elementwise in order when `ordered`), if any.
std::optional<std::int64_t> find_multiplier_isomorphism(std::int64_t modulus,
                                                        std::span<const std::int64_t> gens_a,
                                                        std::span<const std::int64_t> gens_b,
                                                        bool ordered = false);

struct DigraphReport {
  bool generating = false;
  std::vector<std::string> warnings;
};

DigraphReport inspect(const CayleyDigraph& g);

std::string format_element(const GroupElement& g, const AbelianGroup& group);

}  // namespace dilmet
