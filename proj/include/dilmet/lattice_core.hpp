#pragma once

// Exact integer linear algebra over Z^n: Smith normal form with transforms,
// determinants, and congruence modulo the lattice M Z^n.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dilmet/error.hpp"

namespace dilmet {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Square matrix of unbounded integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& diag);

  std::size_t dim() const noexcept { return n_; }

  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  std::vector<Integer> diagonal_entries() const;
  bool is_diagonal() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& t, const IntMatrix& m);
IntVector operator*(const IntMatrix& m, const IntVector& x);

std::string to_string(const IntMatrix& m);

/// S = U * source * V with U, V unimodular and S = diag(s1 | s2 | ... | sn).
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  IntMatrix source;

  std::vector<Integer> invariant_factors() const { return s.diagonal_entries(); }
};

Integer determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

// Throws SingularMatrix when det(m) == 0.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Coordinatewise canonical residues of x in Z_{s1} + ... + Z_{sn}.
IntVector reduce_mod_group(const IntVector& x, const IntMatrix& s);

bool congruent_mod(const IntVector& a, const IntVector& b, const IntMatrix& m);

/// Congruence tests against one fixed matrix, sharing a single decomposition.
class CongruenceTester {
 public:
  explicit CongruenceTester(const IntMatrix& m);

  bool congruent(const IntVector& a, const IntVector& b) const;
  IntVector residue(const IntVector& x) const;
  const SmithDecomposition& smith() const noexcept { return snf_; }

 private:
  SmithDecomposition snf_;
};

// Checked narrowing used wherever a group-sized quantity must fit a machine word.
std::int64_t to_int64(const Integer& x, const char* what);

}  // namespace dilmet
