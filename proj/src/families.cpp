#include "dilmet/families.hpp"

#include <cmath>
#include <numbers>

namespace dilmet {

namespace {

[[noreturn]] void out_of_family(const std::string& what) {
  throw Error(ErrorKind::OutOfFamily, what);
}

std::int64_t checked_order(const Integer& n) { return to_int64(n, "family order"); }

}  // namespace

std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::Asz: return "asz";
    case FamilyId::CyclicX: return "cyclic_x";
    case FamilyId::Dilated84: return "dilated84";
    case FamilyId::GeneralD: return "general_d";
    case FamilyId::Degree2: return "degree2";
  }
  return "?";
}

FamilyId family_from_string(std::string_view name) {
  for (auto id : {FamilyId::Asz, FamilyId::CyclicX, FamilyId::Dilated84, FamilyId::GeneralD,
                  FamilyId::Degree2})
    if (to_string(id) == name) return id;
  throw Error(ErrorKind::InvalidInput, "unknown family '" + std::string(name) + "'");
}

IntMatrix matrix_mn(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) out_of_family("M(m,n) needs m, n >= 1");
  return IntMatrix{{n, m, -2 * m - 2 * n}, {3 * n + m, m, m + 2 * n}, {2 * n, -m, m + n}};
}

FamilyInstance family_asz(std::int64_t m, std::int64_t n) {
  const IntMatrix mat = matrix_mn(m, n);
  FamilySpec spec{FamilyId::Asz, {m, n}, {}, 0, true, false, {}, {}};
  spec.order = Integer(m) * m * m + 12 * Integer(m) * m * n + 14 * Integer(m) * n * n;
  spec.diameter = std::max({m + 8 * n - 3, 3 * m + 4 * n - 3, 5 * m - 3});
  spec.density = density(spec.order, 3, spec.diameter);
  return {group_from_matrix(mat), std::move(spec)};
}

FamilyInstance family_cyclic_x(std::int64_t x) {
  if (x < 1) out_of_family("cyclic_x needs x >= 1");
  const Integer big = x;
  const std::int64_t modulus =
      checked_order(84 * big * big * big + 74 * big * big + 18 * big + 1);
  const std::int64_t gens[] = {-21 * x * x - 15 * x - 2, 21 * x * x + 8 * x,
                               -42 * x * x - 23 * x - 3};
  FamilySpec spec{FamilyId::CyclicX, {x}, modulus, 10 * x + 2, true, x >= 2, {}, {}};
  spec.density = density(spec.order, 3, spec.diameter);
  spec.signed_generators = "{" + std::to_string(gens[0]) + "," + std::to_string(gens[1]) + "," +
                           std::to_string(gens[2]) + "}";
  return {CayleyDigraph::cyclic(modulus, gens), std::move(spec)};
}

FamilyInstance family_dilated84(std::int64_t t) {
  if (t < 1) out_of_family("dilated84 needs t >= 1");
  AbelianGroup group({t, t, checked_order(84 * Integer(t))});
  const std::int64_t raw[3][3] = {{1, 10, -38}, {0, 1, -3}, {0, -2, 7}};
  std::vector<GroupElement> gens;
  for (const auto& g : raw) gens.push_back(group.reduce(g));
  FamilySpec spec{FamilyId::Dilated84, {t}, 84 * Integer(t) * t * t, 10 * t - 3, false, false,
                  {}, "{(1,10,-38),(0,1,-3),(0,-2,7)}"};
  spec.density = density(spec.order, 3, spec.diameter);
  return {CayleyDigraph(std::move(group), std::move(gens)), std::move(spec)};
}

FamilyInstance family_general(std::int64_t d, std::int64_t t) {
  if (d < 2 || t < 1) out_of_family("general_d needs d >= 2, t >= 1");
  std::vector<std::int64_t> factors{t};
  for (std::int64_t i = 1; i < d; ++i) factors.push_back(checked_order(Integer(t) * (d + 1)));
  AbelianGroup group(factors);
  std::vector<GroupElement> gens;
  for (std::int64_t j = 0; j < d; ++j) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(d), 1);
    if (j > 0) a[static_cast<std::size_t>(j)] = 2;
    gens.push_back(group.reduce(a));
  }
  const Integer order = boost::multiprecision::pow(Integer(t), static_cast<unsigned>(d)) *
                        boost::multiprecision::pow(Integer(d + 1), static_cast<unsigned>(d - 1));
  FamilySpec spec{FamilyId::GeneralD, {d, t}, order, t * (d + 1) * d / 2 - d, false, false, {}, {}};
  spec.density = density(spec.order, d, spec.diameter);
  return {CayleyDigraph(std::move(group), std::move(gens)), std::move(spec)};
}

FamilyInstance family_degree2(std::int64_t t) {
  if (t < 1) out_of_family("degree2 needs t >= 1");
  AbelianGroup group({t, checked_order(3 * Integer(t))});
  const std::int64_t a[] = {1, -1};
  const std::int64_t b[] = {0, 1};
  std::vector<GroupElement> gens{group.reduce(a), group.reduce(b)};
  FamilySpec spec{FamilyId::Degree2, {t}, 3 * Integer(t) * t, 3 * t - 2, false, false, {},
                  "{(1,-1),(0,1)}"};
  spec.density = density(spec.order, 2, spec.diameter);
  return {CayleyDigraph(std::move(group), std::move(gens)), std::move(spec)};
}

FamilyInstance make_family(FamilyId id, const std::vector<std::int64_t>& p) {
  const std::size_t need = (id == FamilyId::Asz || id == FamilyId::GeneralD) ? 2 : 1;
  if (p.size() != need)
    throw Error(ErrorKind::InvalidInput, std::string(to_string(id)) + " takes " +
                                             std::to_string(need) + " parameter(s)");
  switch (id) {
    case FamilyId::Asz: return family_asz(p[0], p[1]);
    case FamilyId::CyclicX: return family_cyclic_x(p[0]);
    case FamilyId::Dilated84: return family_dilated84(p[0]);
    case FamilyId::GeneralD: return family_general(p[0], p[1]);
    case FamilyId::Degree2: return family_degree2(p[0]);
  }
  throw Error(ErrorKind::Internal, "unhandled family");
}

Rational alpha_of_family(const FamilySpec& spec) {
  switch (spec.id) {
    case FamilyId::Dilated84:
    case FamilyId::CyclicX:
      return Rational(84, 1000);
    case FamilyId::GeneralD: {
      const std::int64_t d = spec.params.at(0);
      return Rational(1, d + 1) *
             Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(d)),
                      boost::multiprecision::pow(Integer(d), static_cast<unsigned>(d)));
    }
    case FamilyId::Degree2:
      return Rational(1, 3);
    case FamilyId::Asz:
      break;
  }
  throw Error(ErrorKind::NotAvailable, "no closed-form alpha for the asz family");
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t degree2_diameter_lower_bound(const Integer& order) {
  if (order < 1) throw Error(ErrorKind::InvalidInput, "order must be >= 1");
  const Integer three_n = 3 * order;
  Integer root = boost::multiprecision::sqrt(three_n);
  if (root * root < three_n) ++root;
  return to_int64(root, "lower bound") - 2;
}

BoundsReport bounds(std::int64_t degree, std::int64_t diameter, std::optional<Integer> order) {
  if (degree < 1 || diameter < 0)
    throw Error(ErrorKind::InvalidInput, "bounds need degree >= 1 and diameter >= 0");
  BoundsReport rep;
  rep.degree = degree;
  rep.diameter = diameter;
  rep.upper_bound = binomial(diameter + degree, degree);
  rep.order = order;
  if (degree == 2 && order) rep.degree2_lower_bound = degree2_diameter_lower_bound(*order);
  return rep;
}

double asymptotic_lower_bound_term(std::int64_t degree, std::int64_t diameter, double c) {
  if (degree < 2) throw Error(ErrorKind::InvalidInput, "asymptotic bound needs degree > 1");
  const double d = static_cast<double>(degree);
  const double log2e = std::numbers::log2e;
  return c / (d * std::pow(std::log(d), 1.0 + log2e)) *
         std::exp(d * std::log(static_cast<double>(diameter)) - std::lgamma(d + 1.0));
}

}  // namespace dilmet
