#include "dilmet/io.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace dilmet {

namespace {

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

Json anchor_list(const std::vector<UnitCube>& cubes) {
  Json out = Json::array();
  for (const auto& c : cubes) out.push_back(c.anchor);
  return out;
}

std::int64_t int64_from_json(const Json& j, const char* what) {
  return to_int64(integer_from_json(j), what);
}

}  // namespace

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>())
                                                           : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) bad_input("empty integer string");
    for (std::size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) bad_input("not an integer: " + s);
    return Integer(s);
  }
  bad_input("expected an exact integer, got " + j.dump());
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.dim()}, {"rows", std::move(rows)}};
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    bad_input("matrix JSON needs a \"rows\" array");
  const auto& rows = j["rows"];
  const std::size_t n = rows.size();
  if (n == 0) bad_input("matrix has no rows");
  if (j.contains("n") && int64_from_json(j["n"], "n") != static_cast<std::int64_t>(n))
    bad_input("matrix \"n\" does not match the row count");
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) bad_input("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = integer_from_json(rows[i][k]);
  }
  return m;
}

Json to_json(const SmithDecomposition& snf) {
  Json factors = Json::array();
  for (const auto& s : snf.invariant_factors()) factors.push_back(to_json(s));
  return Json{{"source", to_json(snf.source)}, {"u", to_json(snf.u)}, {"s", to_json(snf.s)},
              {"v", to_json(snf.v)},          {"invariant_factors", std::move(factors)},
              {"order", to_json(abs(determinant(snf.source)))}};
}

Json to_json(const CayleyDigraph& g) {
  Json gens = Json::array();
  for (const auto& x : g.generators()) gens.push_back(x);
  return Json{{"factors", g.group().factors()}, {"generators", std::move(gens)}};
}

CayleyDigraph digraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    bad_input("digraph JSON needs a \"generators\" array");
  if (j.contains("modulus")) {
    const std::int64_t modulus = int64_from_json(j["modulus"], "modulus");
    if (modulus < 1) bad_input("modulus must be >= 1");
    std::vector<std::int64_t> gens;
    for (const auto& a : j["generators"]) gens.push_back(int64_from_json(a, "generator"));
    return CayleyDigraph::cyclic(modulus, gens);
  }
  if (!j.contains("factors") || !j["factors"].is_array()) bad_input("digraph JSON needs \"factors\"");
  std::vector<std::int64_t> factors;
  for (const auto& s : j["factors"]) factors.push_back(int64_from_json(s, "factor"));
  AbelianGroup group(factors);
  std::vector<GroupElement> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array()) bad_input("generator must be a coordinate array");
    std::vector<std::int64_t> x;
    for (const auto& c : g) x.push_back(int64_from_json(c, "generator coordinate"));
    gens.push_back(group.reduce(x));
  }
  return CayleyDigraph(std::move(group), std::move(gens));
}

Json diagram_to_json(const HyperL& l) {
  Json out{{"matrix", to_json(l.matrix())},
           {"order", to_json(abs(determinant(l.matrix())))},
           {"cube_count", l.size()}};
  if (l.size() > 0) {
    out["diameter"] = hyperl_diameter(l);
    out["max_norm_cubes"] = anchor_list(max_norm_cubes(l));
  }
  out["cubes"] = anchor_list(l.cubes());
  return out;
}

HyperL diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j.contains("cubes") || !j["cubes"].is_array())
    bad_input("diagram JSON needs \"matrix\" and \"cubes\"");
  IntMatrix m = matrix_from_json(j["matrix"]);
  std::vector<UnitCube> cubes;
  for (const auto& c : j["cubes"]) {
    if (!c.is_array()) bad_input("cube must be a coordinate array");
    Anchor a;
    for (const auto& x : c) a.push_back(int64_from_json(x, "cube coordinate"));
    cubes.push_back({std::move(a)});
  }
  return HyperL(std::move(m), std::move(cubes));
}

std::string diagram_to_csv(const HyperL& l) {
  const LatticeClassifier classes(l.matrix());
  const auto& g = classes.digraph();
  std::ostringstream out;
  for (std::size_t i = 0; i < l.dim(); ++i) out << 'a' << (i + 1) << ',';
  out << "norm,vertex\n";
  for (const auto& c : l.cubes()) {
    for (auto x : c.anchor) out << x << ',';
    out << c.norm() << ',' << format_element(vertex_of_cube(c, g), g.group()) << '\n';
  }
  return out.str();
}

std::string diagram_to_obj(const HyperL& l) {
  if (l.dim() != 3) bad_input("OBJ export needs a 3-dimensional diagram");
  std::map<std::array<std::int64_t, 3>, std::size_t> index;
  std::vector<std::array<std::int64_t, 3>> verts;
  std::ostringstream faces;
  // Corner k of a cube has offsets (k>>2 & 1, k>>1 & 1, k & 1).
  static constexpr int kFaces[6][4] = {{0, 1, 3, 2}, {4, 6, 7, 5}, {0, 4, 5, 1},
                                       {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 5, 7, 3}};
  for (const auto& c : l.cubes()) {
    std::size_t id[8];
    for (int k = 0; k < 8; ++k) {
      const std::array<std::int64_t, 3> p{c.anchor[0] + ((k >> 2) & 1), c.anchor[1] + ((k >> 1) & 1),
                                          c.anchor[2] + (k & 1)};
      auto [it, fresh] = index.emplace(p, verts.size() + 1);
      if (fresh) verts.push_back(p);
      id[k] = it->second;
    }
    for (const auto& f : kFaces)
      faces << "f " << id[f[0]] << ' ' << id[f[1]] << ' ' << id[f[2]] << ' ' << id[f[3]] << '\n';
  }
  std::ostringstream out;
  out << "# " << l.size() << " unit cubes\n";
  out << "o diagram\n";
  for (const auto& v : verts) out << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  out << faces.str();
  return out.str();
}

Json to_json(const SearchResult& r, bool with_timing) {
  Json out{{"target", {{"modulus", r.modulus}, {"degree", r.degree}}},
           {"best_k", r.best_k},
           {"witnesses", r.witnesses},
           {"optimal_sets", r.optimal_sets},
           {"explored", r.explored},
           {"exhaustive", r.exhaustive},
           {"multiplier_pruning", r.pruned}};
  if (with_timing) out["seconds"] = r.seconds;
  return out;
}

std::string search_to_csv(const SearchResult& r) {
  std::ostringstream out;
  out << "modulus,degree,best_k,witness,explored,exhaustive\n";
  auto row = [&](const std::string& w) {
    out << r.modulus << ',' << r.degree << ',' << r.best_k << ',' << w << ',' << r.explored << ','
        << (r.exhaustive ? "true" : "false") << '\n';
  };
  if (r.witnesses.empty()) row("");
  for (const auto& w : r.witnesses) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
    row(s);
  }
  return out.str();
}

Json to_json(const DilationCheck& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows)
    rows.push_back(Json{{"t", r.t},
                        {"order", to_json(r.order)},
                        {"predicted_k", r.predicted_k},
                        {"bfs_k", r.bfs_k},
                        {"diagram_k", r.diagram_k},
                        {"tessellates", r.tessellates},
                        {"density", format_rational(r.density)},
                        {"pass", r.pass}});
  return Json{{"matrix", to_json(c.base)}, {"base_k", c.base_k}, {"rows", std::move(rows)},
              {"passed", c.passed()}};
}

std::string format_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string format_decimal(const Rational& r, int digits) {
  const Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  // Round half up on the magnitude.
  const Integer scaled = (abs(num) * scale * 2 + den) / (den * 2);
  const std::string whole = Integer(scaled / scale).str();
  const std::string sign = negative && scaled != 0 ? "-" : "";
  if (digits <= 0) return sign + whole;
  std::string frac = Integer(scaled % scale).str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return sign + whole + "." + frac;
}

std::string family_csv_header() { return "family,params,N,k_predicted,k_bfs,density,alpha"; }

std::string family_csv_row(const FamilyInstance& f, std::int64_t bfs_k) {
  std::ostringstream out;
  out << to_string(f.spec.id) << ',';
  for (std::size_t i = 0; i < f.spec.params.size(); ++i) out << (i ? ";" : "") << f.spec.params[i];
  out << ',' << f.spec.order << ',' << (f.spec.diameter_is_bound ? "<=" : "") << f.spec.diameter
      << ',' << bfs_k << ',';
  const Rational dens = density(f.spec.order, static_cast<std::int64_t>(f.digraph.degree()), bfs_k);
  out << format_rational(dens) << ' ' << format_decimal(dens) << ',';
  if (f.spec.id == FamilyId::Asz) {
    out << "NA";
  } else {
    const Rational a = alpha_of_family(f.spec);
    out << format_rational(a) << ' ' << format_decimal(a);
  }
  return out.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad_input(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace dilmet
