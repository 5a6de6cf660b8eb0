#include "dilmet/hyperl.hpp"

#include <algorithm>
#include <numeric>

namespace dilmet {

std::int64_t UnitCube::norm() const {
  return std::accumulate(anchor.begin(), anchor.end(), std::int64_t{0});
}

HyperL::HyperL(IntMatrix matrix, std::vector<UnitCube> cubes)
    : matrix_(std::move(matrix)), cubes_(std::move(cubes)) {
  for (const auto& c : cubes_) {
    if (c.anchor.size() != matrix_.dim())
      throw Error(ErrorKind::DimensionMismatch, "cube dimension differs from matrix");
    for (auto x : c.anchor)
      if (x < 0) throw Error(ErrorKind::InvalidInput, "cube anchors must be nonnegative");
  }
  std::sort(cubes_.begin(), cubes_.end());
  cubes_.erase(std::unique(cubes_.begin(), cubes_.end()), cubes_.end());
}

bool HyperL::contains(const Anchor& a) const {
  return std::binary_search(cubes_.begin(), cubes_.end(), UnitCube{a});
}

LatticeClassifier::LatticeClassifier(const IntMatrix& m)
    : snf_(smith_normal_form(m)), digraph_(group_from_smith(snf_)) {}

std::int64_t LatticeClassifier::class_of(std::span<const std::int64_t> x) const {
  return digraph_.group().index_of(digraph_.evaluate(x));
}

std::vector<std::string> HyperLReport::violations() const {
  std::vector<std::string> out;
  auto show = [](const Anchor& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + "]";
  };
  if (!cardinality_ok())
    out.push_back("cardinality: " + std::to_string(actual_cubes) + " cubes, expected " +
                  std::to_string(expected_cubes));
  for (const auto& [a, b] : duplicate_classes)
    out.push_back("duplicate class: " + show(a) + " ~ " + show(b));
  if (missing_classes > 0)
    out.push_back("missing classes: " + std::to_string(missing_classes));
  for (const auto& [a, b] : closure_gaps)
    out.push_back("downward closure: " + show(b) + " missing below " + show(a));
  return out;
}

HyperLReport validate_hyperl(const HyperL& l, const IntMatrix& m) {
  if (l.dim() != m.dim()) throw Error(ErrorKind::DimensionMismatch, "diagram/matrix dimensions");
  const LatticeClassifier classes(m);
  HyperLReport rep;
  rep.expected_cubes = classes.order();
  rep.actual_cubes = static_cast<std::int64_t>(l.size());

  std::vector<std::int64_t> owner(static_cast<std::size_t>(classes.order()), -1);
  std::int64_t distinct = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto& a = l.cubes()[i].anchor;
    auto& slot = owner[static_cast<std::size_t>(classes.class_of(a))];
    if (slot >= 0) {
      rep.duplicate_classes.emplace_back(l.cubes()[static_cast<std::size_t>(slot)].anchor, a);
    } else {
      slot = static_cast<std::int64_t>(i);
      ++distinct;
    }
  }
  rep.missing_classes = classes.order() - distinct;

  // Closure under single unit steps down implies closure under all of nabla(a).
  for (const auto& c : l.cubes()) {
    Anchor below = c.anchor;
    for (std::size_t i = 0; i < below.size(); ++i) {
      if (below[i] == 0) continue;
      --below[i];
      if (!l.contains(below)) rep.closure_gaps.emplace_back(c.anchor, below);
      ++below[i];
    }
  }
  return rep;
}

MinimalityReport check_minimality(const HyperL& l, const IntMatrix& m) {
  if (l.dim() != m.dim()) throw Error(ErrorKind::DimensionMismatch, "diagram/matrix dimensions");
  const LatticeClassifier classes(m);
  const auto dist = distances_from_identity(classes.digraph());
  MinimalityReport rep;
  for (const auto& c : l.cubes()) {
    const auto d = dist[static_cast<std::size_t>(classes.class_of(c.anchor))];
    if (d != c.norm()) rep.non_minimal.emplace_back(c.anchor, d);
  }
  return rep;
}

MddCertificate build_mdd(const IntMatrix& m) {
  const LatticeClassifier classes(m);
  const std::size_t n = m.dim();
  const std::int64_t order = classes.order();
  const std::int64_t norm_limit = static_cast<std::int64_t>(n) * order;

  // Greedy over N^n in (norm, lex) order, one representative per class.
  // Every selected point of norm k+1 has a selected lower neighbour, so the
  // next layer only needs to look at unit steps up from the current one.
  std::vector<char> seen(static_cast<std::size_t>(order), 0);
  std::vector<UnitCube> selected;
  selected.reserve(static_cast<std::size_t>(order));
  std::vector<Anchor> layer{Anchor(n, 0)};
  seen[static_cast<std::size_t>(classes.class_of(layer.front()))] = 1;
  selected.push_back({layer.front()});
  std::int64_t norm = 0;
  while (static_cast<std::int64_t>(selected.size()) < order) {
    if (layer.empty() || ++norm > norm_limit)
      throw Error(ErrorKind::Internal, "diagram enumeration exceeded its norm bound");
    std::vector<Anchor> candidates;
    candidates.reserve(layer.size() * n);
    for (const auto& a : layer)
      for (std::size_t i = 0; i < n; ++i) {
        Anchor b = a;
        ++b[i];
        candidates.push_back(std::move(b));
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    layer.clear();
    for (auto& b : candidates) {
      auto& flag = seen[static_cast<std::size_t>(classes.class_of(b))];
      if (flag) continue;
      flag = 1;
      selected.push_back({b});
      layer.push_back(std::move(b));
    }
  }

  MddCertificate cert{HyperL(m, std::move(selected)), distances_from_identity(classes.digraph()),
                      0};
  cert.diameter = hyperl_diameter(cert.diagram);

  const HyperLReport rep = validate_hyperl(cert.diagram, m);
  if (!rep.valid())
    throw Error(ErrorKind::Internal, "constructed diagram is not a hyper-L: " + rep.violations().front());
  for (const auto& c : cert.diagram.cubes())
    if (cert.class_distances[static_cast<std::size_t>(classes.class_of(c.anchor))] != c.norm())
      throw Error(ErrorKind::Internal, "constructed diagram is not minimal");
  return cert;
}

bool check_tessellation(const HyperL& l, const IntMatrix& m) {
  if (l.dim() != m.dim()) throw Error(ErrorKind::DimensionMismatch, "diagram/matrix dimensions");
  const LatticeClassifier classes(m);
  if (static_cast<std::int64_t>(l.size()) != classes.order()) return false;
  std::vector<char> seen(static_cast<std::size_t>(classes.order()), 0);
  for (const auto& c : l.cubes()) {
    auto& flag = seen[static_cast<std::size_t>(classes.class_of(c.anchor))];
    if (flag) return false;
    flag = 1;
  }
  return true;
}

HyperL dilate(const HyperL& l, std::int64_t t) {
  if (t < 1) throw Error(ErrorKind::InvalidDilation, "dilation factor must be >= 1");
  const std::size_t n = l.dim();
  std::vector<UnitCube> out;
  std::size_t block = 1;
  for (std::size_t i = 0; i < n; ++i) block *= static_cast<std::size_t>(t);
  out.reserve(l.size() * block);
  Anchor offset(n, 0);
  for (const auto& c : l.cubes()) {
    std::fill(offset.begin(), offset.end(), 0);
    for (;;) {
      Anchor b(n);
      for (std::size_t i = 0; i < n; ++i) b[i] = t * c.anchor[i] + offset[i];
      out.push_back({std::move(b)});
      std::size_t i = n;
      while (i-- > 0) {
        if (++offset[i] < t) break;
        offset[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return HyperL(Integer(t) * l.matrix(), std::move(out));
}

std::int64_t hyperl_diameter(const HyperL& l) {
  if (l.size() == 0) throw Error(ErrorKind::EmptyDiagram, "diagram has no cubes");
  std::int64_t k = 0;
  for (const auto& c : l.cubes()) k = std::max(k, c.norm());
  return k;
}

std::vector<UnitCube> max_norm_cubes(const HyperL& l) {
  const std::int64_t k = hyperl_diameter(l);
  std::vector<UnitCube> out;
  for (const auto& c : l.cubes())
    if (c.norm() == k) out.push_back(c);
  return out;
}

GroupElement vertex_of_cube(const UnitCube& cube, const IntMatrix& u, const IntMatrix& s) {
  if (cube.anchor.size() != u.dim() || u.dim() != s.dim())
    throw Error(ErrorKind::DimensionMismatch, "cube/transform dimensions");
  IntVector x(cube.anchor.begin(), cube.anchor.end());
  const IntVector r = reduce_mod_group(u * x, s);
  GroupElement g(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) g[i] = to_int64(r[i], "group coordinate");
  return g;
}

GroupElement vertex_of_cube(const UnitCube& cube, const CayleyDigraph& g) {
  return g.evaluate(cube.anchor);
}

}  // namespace dilmet
