#pragma once

// Explicit infinite families of Cayley digraphs with predicted order,
// diameter, density and leading coefficient alpha (N = alpha k^d + O(k^{d-1})).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dilmet/cayley.hpp"
#include "dilmet/lattice_core.hpp"

namespace dilmet {

enum class FamilyId { Asz, CyclicX, Dilated84, GeneralD, Degree2 };

std::string_view to_string(FamilyId id);
FamilyId family_from_string(std::string_view name);

struct FamilySpec {
  FamilyId id;
  std::vector<std::int64_t> params;
  Integer order;
  std::int64_t diameter = 0;
  bool diameter_is_bound = false;
  // Advisory only: the bound is believed tight but not proven.
  bool expected_exact = false;
  Rational density;  // evaluated at the predicted diameter
  std::string signed_generators;
};

struct FamilyInstance {
  CayleyDigraph digraph;
  FamilySpec spec;
};

/// Rows (n, m, -2m-2n), (3n+m, m, m+2n), (2n, -m, m+n).
IntMatrix matrix_mn(std::int64_t m, std::int64_t n);

FamilyInstance family_asz(std::int64_t m, std::int64_t n);
FamilyInstance family_cyclic_x(std::int64_t x);
FamilyInstance family_dilated84(std::int64_t t);
FamilyInstance family_general(std::int64_t d, std::int64_t t);
FamilyInstance family_degree2(std::int64_t t);

FamilyInstance make_family(FamilyId id, const std::vector<std::int64_t>& params);

// Throws NotAvailable for the asz family.
Rational alpha_of_family(const FamilySpec& spec);

struct BoundsReport {
  std::int64_t degree = 0;
  std::int64_t diameter = 0;
  Integer upper_bound;  // C(k+d, d); no order exceeds it, strict once d, k >= 2
  std::optional<Integer> order;
  std::optional<std::int64_t> degree2_lower_bound;  // lb(N) = ceil(sqrt(3N)) - 2
};

BoundsReport bounds(std::int64_t degree, std::int64_t diameter,
                    std::optional<Integer> order = std::nullopt);

Integer binomial(std::int64_t n, std::int64_t k);
std::int64_t degree2_diameter_lower_bound(const Integer& order);

/// Leading term c / (d (ln d)^(1 + log2 e)) * k^d / d! of the asymptotic
/// lower bound on NA_{d,k}; the constant c is not known and must be supplied.
double asymptotic_lower_bound_term(std::int64_t degree, std::int64_t diameter, double c);

struct HistoricalAlpha {
  const char* authors;
  int year;
  double alpha;
};

// Reference values for degree 3 cyclic constructions; not reproduced.
inline constexpr std::array<HistoricalAlpha, 6> kDegree3HistoricalAlpha{{
    {"Gomez, Gutierrez & Ibeas", 2007, 0.0370},
    {"Hsu & Jia", 1994, 0.0620},
    {"Aguilo, Fiol & Garcia", 1997, 0.0740},
    {"Chen & Gu", 1992, 0.0780},
    {"Aguilo", 1999, 0.0807},
    {"Aguilo, Simo & Zaragoza", 2001, 0.0840},
}};

}  // namespace dilmet
