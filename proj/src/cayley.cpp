#include "dilmet/cayley.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace dilmet {

namespace {

constexpr std::int64_t kMaxBfsOrder = std::int64_t{1} << 28;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorKind::InvalidInput, "group needs at least one factor");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 1) throw Error(ErrorKind::InvalidInput, "group factors must be positive");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw Error(ErrorKind::InvalidInput, "group factors must form a divisibility chain");
    if (order_ > std::numeric_limits<std::int64_t>::max() / factors_[i])
      throw Error(ErrorKind::InvalidInput, "group order exceeds 64-bit range");
    order_ *= factors_[i];
  }
}

GroupElement AbelianGroup::reduce(std::span<const std::int64_t> x) const {
  if (x.size() != factors_.size())
    throw Error(ErrorKind::DimensionMismatch, "element has wrong number of coordinates");
  GroupElement r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i], factors_[i]);
  return r;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
  return r;
}

bool AbelianGroup::is_canonical(const GroupElement& g) const {
  if (g.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] < 0 || g[i] >= factors_[i]) return false;
  return true;
}

std::int64_t AbelianGroup::index_of(const GroupElement& g) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + g[i];
  return idx;
}

GroupElement AbelianGroup::element_at(std::int64_t index) const {
  GroupElement g(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    g[i] = index % factors_[i];
    index /= factors_[i];
  }
  return g;
}

CayleyDigraph::CayleyDigraph(AbelianGroup group, std::vector<GroupElement> generators)
    : group_(std::move(group)), generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorKind::InvalidInput, "digraph needs degree >= 1");
  for (const auto& g : generators_)
    if (!group_.is_canonical(g))
      throw Error(ErrorKind::InvalidInput, "generator is not a canonical group element");
}

CayleyDigraph CayleyDigraph::cyclic(std::int64_t modulus, std::span<const std::int64_t> generators) {
  AbelianGroup group({modulus});
  std::vector<GroupElement> gens;
  for (auto a : generators) gens.push_back({mod(a, modulus)});
  return CayleyDigraph(std::move(group), std::move(gens));
}

GroupElement CayleyDigraph::evaluate(std::span<const std::int64_t> coefficients) const {
  if (coefficients.size() != generators_.size())
    throw Error(ErrorKind::DimensionMismatch, "coefficient count differs from degree");
  const auto& f = group_.factors();
  GroupElement r(f.size(), 0);
  for (std::size_t j = 0; j < generators_.size(); ++j)
    for (std::size_t i = 0; i < f.size(); ++i)
      r[i] = static_cast<std::int64_t>(
          (r[i] + static_cast<__int128>(mod(coefficients[j], f[i])) * generators_[j][i]) % f[i]);
  return r;
}

CayleyDigraph group_from_smith(const SmithDecomposition& snf) {
  const std::size_t n = snf.s.dim();
  std::vector<std::int64_t> factors(n);
  for (std::size_t i = 0; i < n; ++i) factors[i] = to_int64(snf.s(i, i), "invariant factor");
  AbelianGroup group(factors);
  std::vector<GroupElement> gens;
  gens.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const IntVector r = reduce_mod_group(snf.u.column(j), snf.s);
    GroupElement g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<std::int64_t>(r[i]);
    gens.push_back(std::move(g));
  }
  return CayleyDigraph(std::move(group), std::move(gens));
}

CayleyDigraph group_from_matrix(const IntMatrix& m) { return group_from_smith(smith_normal_form(m)); }

IntMatrix lattice_of(const CayleyDigraph& g) {
  // Integer kernel of [G | S] by unimodular column reduction; the x-part of
  // the kernel basis spans {x : sum x_i gamma_i = 0}.
  const auto& f = g.group().factors();
  const std::size_t r = f.size();
  const std::size_t d = g.degree();
  const std::size_t c = d + r;
  std::vector<std::vector<Integer>> a(r, std::vector<Integer>(c));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = g.generators()[j][i];
    a[i][d + i] = f[i];
  }
  std::vector<std::vector<Integer>> t(c, std::vector<Integer>(c));
  for (std::size_t i = 0; i < c; ++i) t[i][i] = 1;

  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < r; ++i) a[i][dst] += q * a[i][src];
    for (std::size_t i = 0; i < c; ++i) t[i][dst] += q * t[i][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < r; ++i) std::swap(a[i][x], a[i][y]);
    for (std::size_t i = 0; i < c; ++i) std::swap(t[i][x], t[i][y]);
  };

  std::size_t p = 0;
  for (std::size_t i = 0; i < r && p < c; ++i) {
    for (;;) {
      std::size_t best = c;
      for (std::size_t j = p; j < c; ++j)
        if (a[i][j] != 0 && (best == c || abs(a[i][j]) < abs(a[i][best]))) best = j;
      if (best == c) break;
      col_swap(p, best);
      bool done = true;
      for (std::size_t j = p + 1; j < c; ++j) {
        if (a[i][j] == 0) continue;
        col_axpy(j, p, -(a[i][j] / a[i][p]));
        if (a[i][j] != 0) done = false;
      }
      if (done) {
        ++p;
        break;
      }
    }
  }
  if (c - p != d) throw Error(ErrorKind::Internal, "kernel rank mismatch");

  IntMatrix m(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j) = t[i][p + j];
  const Integer det = abs(determinant(m));
  if (det != g.order())
    throw Error(ErrorKind::NotGenerating, "generators span a subgroup of order " + det.str());
  return m;
}

std::vector<std::int32_t> distances_from_identity(const CayleyDigraph& g) {
  const AbelianGroup& group = g.group();
  const std::int64_t order = group.order();
  if (order > kMaxBfsOrder)
    throw Error(ErrorKind::InvalidInput, "group order too large for BFS");
  const auto& f = group.factors();
  const std::size_t r = f.size();

  std::vector<std::int32_t> dist(static_cast<std::size_t>(order), -1);
  std::vector<std::int64_t> queue;
  queue.reserve(static_cast<std::size_t>(order));
  dist[0] = 0;
  queue.push_back(0);
  GroupElement x(r);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int64_t cur = queue[head];
    std::int64_t rest = cur;
    for (std::size_t i = r; i-- > 0;) {
      x[i] = rest % f[i];
      rest /= f[i];
    }
    const std::int32_t next = dist[static_cast<std::size_t>(cur)] + 1;
    for (const auto& gen : g.generators()) {
      std::int64_t idx = 0;
      for (std::size_t i = 0; i < r; ++i) {
        std::int64_t v = x[i] + gen[i];
        if (v >= f[i]) v -= f[i];
        idx = idx * f[i] + v;
      }
      auto& slot = dist[static_cast<std::size_t>(idx)];
      if (slot < 0) {
        slot = next;
        queue.push_back(idx);
      }
    }
  }
  return dist;
}

bool generates(const CayleyDigraph& g) {
  const auto dist = distances_from_identity(g);
  return std::none_of(dist.begin(), dist.end(), [](std::int32_t v) { return v < 0; });
}

std::map<std::int64_t, std::int64_t> distance_distribution(const CayleyDigraph& g) {
  std::map<std::int64_t, std::int64_t> hist;
  for (auto v : distances_from_identity(g)) {
    if (v < 0) throw Error(ErrorKind::NotGenerating, "generators do not generate the group");
    ++hist[v];
  }
  return hist;
}

std::int64_t diameter_bfs(const CayleyDigraph& g) {
  std::int32_t k = 0;
  for (auto v : distances_from_identity(g)) {
    if (v < 0) throw Error(ErrorKind::NotGenerating, "generators do not generate the group");
    k = std::max(k, v);
  }
  return k;
}

Rational density(const Integer& order, std::int64_t degree, std::int64_t diameter) {
  if (order < 1 || degree < 1 || diameter < 0)
    throw Error(ErrorKind::InvalidInput, "density needs order >= 1, degree >= 1, diameter >= 0");
  const Integer denom = boost::multiprecision::pow(Integer(diameter + degree), static_cast<unsigned>(degree));
  return Rational(order, denom);
}

bool verify_multiplier_isomorphism(std::int64_t modulus, std::span<const std::int64_t> gens_a,
                                   std::span<const std::int64_t> gens_b, std::int64_t mult) {
  if (modulus < 1 || gens_a.size() != gens_b.size()) return false;
  if (std::gcd(mod(mult, modulus), modulus) != 1) return false;
  std::vector<std::int64_t> image, target;
  for (auto a : gens_a)
    image.push_back(static_cast<std::int64_t>(static_cast<__int128>(mod(mult, modulus)) * mod(a, modulus) % modulus));
  for (auto b : gens_b) target.push_back(mod(b, modulus));
  std::sort(image.begin(), image.end());
  std::sort(target.begin(), target.end());
  return image == target;
}

std::optional<std::int64_t> find_multiplier_isomorphism(std::int64_t modulus,
                                                        std::span<const std::int64_t> gens_a,
                                                        std::span<const std::int64_t> gens_b,
                                                        bool ordered) {
  if (modulus < 1 || gens_a.size() != gens_b.size()) return std::nullopt;
  for (std::int64_t u = 1; u <= modulus; ++u) {
    if (std::gcd(u, modulus) != 1) continue;
    if (!ordered) {
      if (verify_multiplier_isomorphism(modulus, gens_a, gens_b, u)) return u % modulus;
      continue;
    }
    bool all = true;
    for (std::size_t i = 0; i < gens_a.size() && all; ++i)
      all = static_cast<__int128>(u) * mod(gens_a[i], modulus) % modulus == mod(gens_b[i], modulus);
    if (all) return u % modulus;
  }
  return std::nullopt;
}

DigraphReport inspect(const CayleyDigraph& g) {
  DigraphReport rep;
  rep.generating = generates(g);
  if (!rep.generating) rep.warnings.push_back("generators do not generate the group");
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] == g.group().identity())
      rep.warnings.push_back("generator " + std::to_string(i) + " is the identity (loop)");
    for (std::size_t j = 0; j < i; ++j)
      if (gens[i] == gens[j])
        rep.warnings.push_back("generator " + std::to_string(i) + " duplicates generator " +
                               std::to_string(j));
  }
  return rep;
}

std::string format_element(const GroupElement& g, const AbelianGroup& group) {
  // Coordinates of trivial factors carry no information.
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (group.factors()[i] == 1) continue;
    out << (first ? "" : ":") << g[i];
    first = false;
  }
  if (first) out << 0;
  return out.str();
}

}  // namespace dilmet
