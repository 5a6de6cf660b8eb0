// dilmet: command-line front end for the dilmet library.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dilmet/io.hpp"

using namespace dilmet;

namespace {

enum ExitCode : int {
  kOk = 0,
  kSingular = 3,
  kNotGenerating = 4,
  kInvalidDilation = 5,
  kBudgetExceeded = 6,
  kValidationFailed = 7,
  kOutOfFamily = 8,
  kNotAvailable = 9,
  kEmptyDiagram = 10,
  kUsage = 64,
  kInput = 65,
  kInternal = 70,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return kSingular;
    case ErrorKind::NotGenerating: return kNotGenerating;
    case ErrorKind::InvalidDilation: return kInvalidDilation;
    case ErrorKind::BudgetExceeded: return kBudgetExceeded;
    case ErrorKind::OutOfFamily: return kOutOfFamily;
    case ErrorKind::NotAvailable: return kNotAvailable;
    case ErrorKind::EmptyDiagram: return kEmptyDiagram;
    case ErrorKind::InvalidInput:
    case ErrorKind::DimensionMismatch: return kInput;
    case ErrorKind::Internal: return kInternal;
  }
  return kInternal;
}

// Raised after output has been written, to report a non-success status.
struct StatusExit {
  int code;
  std::string message;
};

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

// A value is inline JSON if it starts with '{' or '['; otherwise a path.
Json read_input(const std::string& value) {
  const auto first = value.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (value[first] == '{' || value[first] == '['))
    return parse_json_text(value);
  std::ifstream in(value);
  if (!in) bad_input("cannot read " + value);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

struct Output {
  std::string path;
  std::string format = "json";
  bool timing = false;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) bad_input("cannot write " + path);
    out << text;
    if (!out) bad_input("write failed for " + path);
  }
  void write(const Json& j) const { write(j.dump(2) + "\n"); }
};

struct Inputs {
  std::string matrix;
  std::string digraph;
  std::string diagram;

  bool has_matrix() const { return !matrix.empty(); }
  bool has_digraph() const { return !digraph.empty(); }
  bool has_diagram() const { return !diagram.empty(); }
};

// The lattice of a run: --matrix directly, or the lattice of --digraph.
IntMatrix lattice_input(const Inputs& in) {
  if (in.has_matrix() == in.has_digraph()) bad_input("give exactly one of --matrix or --digraph");
  if (in.has_matrix()) return matrix_from_json(read_input(in.matrix));
  return lattice_of(digraph_from_json(read_input(in.digraph)));
}

CayleyDigraph digraph_input(const Inputs& in) {
  if (in.has_matrix() == in.has_digraph()) bad_input("give exactly one of --matrix or --digraph");
  if (in.has_digraph()) return digraph_from_json(read_input(in.digraph));
  return group_from_matrix(matrix_from_json(read_input(in.matrix)));
}

void warn(const CayleyDigraph& g) {
  for (const auto& w : inspect(g).warnings) std::cerr << "warning: " << w << '\n';
}

// "1,1;3,1" -> {{1,1},{3,1}}
std::vector<std::vector<std::int64_t>> parse_param_list(const std::string& text) {
  std::vector<std::vector<std::int64_t>> out;
  std::stringstream groups(text);
  for (std::string group; std::getline(groups, group, ';');) {
    std::vector<std::int64_t> p;
    std::stringstream items(group);
    for (std::string item; std::getline(items, item, ',');) {
      try {
        std::size_t used = 0;
        p.push_back(std::stoll(item, &used));
        if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        bad_input("bad family parameter '" + item + "'");
      }
    }
    if (p.empty()) bad_input("empty family parameter group");
    out.push_back(std::move(p));
  }
  if (out.empty()) bad_input("no family parameters given");
  return out;
}

std::vector<std::vector<std::int64_t>> params_from_json(const Json& j) {
  const Json& list = j.is_object() ? j.value("params", Json::array()) : j;
  if (!list.is_array() || list.empty()) bad_input("parameter file needs a \"params\" array");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& p : list) {
    if (!p.is_array()) bad_input("each parameter set must be an array");
    std::vector<std::int64_t> v;
    for (const auto& x : p) v.push_back(to_int64(integer_from_json(x), "family parameter"));
    out.push_back(std::move(v));
  }
  return out;
}

std::int64_t default_budget() {
  const char* env = std::getenv("DILMET_BUDGET");
  if (env == nullptr || *env == '\0') return SearchOptions{}.max_candidates;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::logic_error&) {
  }
  bad_input(std::string("DILMET_BUDGET must be a positive integer, got '") + env + "'");
}

std::string search_output(const SearchResult& r, const Output& out) {
  return out.format == "csv" ? search_to_csv(r) : to_json(r, out.timing).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley digraphs on Abelian groups: Smith forms, minimum distance diagrams, dilation "
               "and exhaustive searches.",
               "dilmet"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dilmet 0.1.0");

  Inputs in;
  Output out;
  std::function<void()> action;

  // The first listed format is the subcommand's default.
  std::vector<std::pair<CLI::App*, std::string>> default_format;
  auto add_output = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("-o,--out", out.path, "Output file (default: stdout)");
    sub->add_option("-f,--format", out.format, "Output format")
        ->check(CLI::IsMember(formats))
        ->default_str(formats.front());
    default_format.emplace_back(sub, formats.front());
  };
  auto add_matrix = [&](CLI::App* sub) {
    return sub->add_option("-m,--matrix", in.matrix, "Matrix as a JSON file or inline JSON");
  };
  auto add_digraph = [&](CLI::App* sub) {
    return sub->add_option("-g,--digraph", in.digraph, "Digraph as a JSON file or inline JSON");
  };

  // snf
  auto* snf = app.add_subcommand("snf", "Smith normal form S = U M V with transforms");
  add_matrix(snf)->required();
  add_output(snf, {"json"});
  snf->callback([&] {
    action = [&] { out.write(to_json(smith_normal_form(matrix_from_json(read_input(in.matrix))))); };
  });

  // diameter
  auto* diam = app.add_subcommand("diameter", "Diameter and distance distribution by BFS");
  add_matrix(diam);
  add_digraph(diam);
  add_output(diam, {"json"});
  diam->callback([&] {
    action = [&] {
      const CayleyDigraph g = digraph_input(in);
      const std::int64_t k = diameter_bfs(g);
      warn(g);
      Json dist = Json::object();
      for (const auto& [d, count] : distance_distribution(g)) dist[std::to_string(d)] = count;
      const Rational dens = density(g.order(), static_cast<std::int64_t>(g.degree()), k);
      out.write(Json{{"digraph", to_json(g)},
                     {"order", g.order()},
                     {"degree", g.degree()},
                     {"diameter", k},
                     {"density", format_rational(dens)},
                     {"density_decimal", format_decimal(dens)},
                     {"distance_distribution", std::move(dist)}});
    };
  });

  // mdd
  auto* mdd = app.add_subcommand("mdd", "Build and validate the minimum distance diagram");
  add_matrix(mdd);
  add_digraph(mdd);
  add_output(mdd, {"json", "csv", "obj"});
  mdd->callback([&] {
    action = [&] {
      const IntMatrix m = lattice_input(in);
      const MddCertificate cert = build_mdd(m);
      if (out.format == "csv") return out.write(diagram_to_csv(cert.diagram));
      if (out.format == "obj") return out.write(diagram_to_obj(cert.diagram));
      out.write(diagram_to_json(cert.diagram));
    };
  });

  // validate
  std::string validate_matrix;
  auto* validate = app.add_subcommand("validate", "Check that a diagram is a hyper-L and a minimum distance diagram");
  validate->add_option("diagram", in.diagram, "Diagram JSON file or inline JSON")->required();
  validate->add_option("-m,--matrix", validate_matrix, "Check against this matrix instead of the stored one");
  add_output(validate, {"json"});
  validate->callback([&] {
    action = [&] {
      const HyperL l = diagram_from_json(read_input(in.diagram));
      const IntMatrix m = validate_matrix.empty() ? l.matrix() : matrix_from_json(read_input(validate_matrix));
      const HyperLReport rep = validate_hyperl(l, m);
      Json report{{"hyper_l", rep.valid()}, {"violations", rep.violations()}};
      bool ok = rep.valid();
      if (rep.valid()) {
        const MinimalityReport min = check_minimality(l, m);
        Json non_minimal = Json::array();
        for (const auto& [a, d] : min.non_minimal) non_minimal.push_back(Json{{"cube", a}, {"distance", d}});
        report["minimum_distance"] = min.minimal();
        report["non_minimal"] = std::move(non_minimal);
        report["tessellates"] = check_tessellation(l, m);
        report["diameter"] = hyperl_diameter(l);
        ok = min.minimal();
      }
      report["valid"] = ok;
      out.write(report);
      if (!ok) throw StatusExit{kValidationFailed, "diagram failed validation"};
    };
  });

  // dilate
  std::int64_t t = 0;
  auto* dil = app.add_subcommand("dilate", "Dilate a diagram by t (diagram route) or a matrix (matrix route)");
  dil->add_option("-t", t, "Dilation factor, t >= 1")->required();
  add_matrix(dil);
  add_digraph(dil);
  dil->add_option("-d,--diagram", in.diagram, "Diagram JSON file or inline JSON");
  add_output(dil, {"json", "csv", "obj"});
  dil->callback([&] {
    action = [&] {
      const int sources = in.has_matrix() + in.has_digraph() + in.has_diagram();
      if (sources != 1) bad_input("give exactly one of --matrix, --digraph or --diagram");
      const HyperL base = in.has_diagram() ? diagram_from_json(read_input(in.diagram)) : build_mdd(lattice_input(in)).diagram;
      const HyperL d = dilate(base, t);
      if (out.format == "csv") return out.write(diagram_to_csv(d));
      if (out.format == "obj") return out.write(diagram_to_obj(d));
      out.write(diagram_to_json(d));
    };
  });

  // density
  std::optional<std::string> order_text;
  std::int64_t degree = 0, diameter = -1;
  auto* dens = app.add_subcommand("density", "Density N / (k + d)^d, from numbers or by BFS on a digraph");
  add_matrix(dens);
  add_digraph(dens);
  dens->add_option("-N,--order", order_text, "Order N");
  dens->add_option("-d,--degree", degree, "Degree d");
  dens->add_option("-k,--diameter", diameter, "Diameter k");
  add_output(dens, {"json"});
  dens->callback([&] {
    action = [&] {
      Integer n;
      std::int64_t d = degree, k = diameter;
      if (in.has_matrix() || in.has_digraph()) {
        const CayleyDigraph g = digraph_input(in);
        n = g.order();
        d = static_cast<std::int64_t>(g.degree());
        k = diameter_bfs(g);
      } else {
        if (!order_text || degree < 1 || diameter < 0)
          throw CLI::ValidationError("density", "give --digraph/--matrix, or --order, --degree and --diameter");
        n = integer_from_json(Json(*order_text));
      }
      const Rational r = density(n, d, k);
      out.write(Json{{"order", to_json(n)},
                     {"degree", d},
                     {"diameter", k},
                     {"density", format_rational(r)},
                     {"density_decimal", format_decimal(r)}});
    };
  });

  // family
  std::string family_id, params_text, params_file;
  bool skip_bfs = false;
  auto* fam = app.add_subcommand("family", "Tabulate a family of digraphs over a parameter sweep");
  fam->add_option("id", family_id, "asz | cyclic_x | dilated84 | general_d | degree2")->required();
  fam->add_option("-p,--params", params_text, "Parameter sets, e.g. \"1,1;3,1\"");
  fam->add_option("--params-file", params_file, "JSON file with a \"params\" array");
  fam->add_flag("--no-bfs", skip_bfs, "Skip the BFS diameter check");
  add_output(fam, {"csv", "json"});
  fam->callback([&] {
    action = [&] {
      const FamilyId id = family_from_string(family_id);
      if (params_text.empty() == params_file.empty()) bad_input("give exactly one of --params or --params-file");
      const auto sets = params_text.empty() ? params_from_json(read_input(params_file)) : parse_param_list(params_text);
      std::string csv = family_csv_header() + "\n";
      Json rows = Json::array();
      for (const auto& p : sets) {
        const FamilyInstance f = make_family(id, p);
        const std::int64_t k = skip_bfs ? f.spec.diameter : diameter_bfs(f.digraph);
        csv += family_csv_row(f, k) + "\n";
        Json row{{"family", std::string(to_string(id))},
                 {"params", p},
                 {"digraph", to_json(f.digraph)},
                 {"order", to_json(f.spec.order)},
                 {"k_predicted", f.spec.diameter},
                 {"k_is_bound", f.spec.diameter_is_bound}};
        if (!skip_bfs) row["k_bfs"] = k;
        row["density"] = format_rational(density(f.spec.order, static_cast<std::int64_t>(f.digraph.degree()), k));
        row["alpha"] = id == FamilyId::Asz ? Json("NA") : Json(format_rational(alpha_of_family(f.spec)));
        rows.push_back(std::move(row));
      }
      if (out.format == "json") return out.write(rows);
      out.write(csv);
    };
  });

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Upper bound C(k+d, d) and, for d = 2, the diameter lower bound");
  bnd->add_option("-d,--degree", degree, "Degree d")->required();
  bnd->add_option("-k,--diameter", diameter, "Diameter k")->required();
  bnd->add_option("-N,--order", order_text, "Order N, for the degree-2 lower bound");
  add_output(bnd, {"json"});
  bnd->callback([&] {
    action = [&] {
      std::optional<Integer> n;
      if (order_text) n = integer_from_json(Json(*order_text));
      const BoundsReport r = bounds(degree, diameter, n);
      Json j{{"degree", r.degree}, {"diameter", r.diameter}, {"upper_bound", to_json(r.upper_bound)}};
      if (r.order) j["order"] = to_json(*r.order);
      if (r.degree2_lower_bound) j["degree2_lower_bound"] = *r.degree2_lower_bound;
      out.write(j);
    };
  });

  // verify-dilating
  std::int64_t t_max = 0;
  auto* vd = app.add_subcommand("verify-dilating", "Check k(G_tM) = t (k(G_M) + n) - n for t = 1..tmax");
  add_matrix(vd)->required();
  vd->add_option("--tmax", t_max, "Largest dilation factor")->required();
  add_output(vd, {"json"});
  vd->callback([&] {
    action = [&] {
      const DilationCheck c = verify_dilating_theorem(matrix_from_json(read_input(in.matrix)), t_max);
      out.write(to_json(c));
      if (!c.passed()) throw StatusExit{kValidationFailed, "dilation law check failed"};
    };
  });

  // search
  SearchOptions opts;
  std::optional<std::int64_t> max_candidates;
  std::int64_t modulus = 0, max_order = 0;
  bool allow_partial = false;
  auto* search = app.add_subcommand("search", "Exhaustive searches over cyclic Cayley digraphs");
  search->require_subcommand(1);
  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("-w,--workers", opts.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--max-candidates", max_candidates, "Candidate budget (default: $DILMET_BUDGET or 1e8)");
    sub->add_option("--max-seconds", opts.max_seconds, "Time budget in seconds, 0 for none");
    sub->add_option("--seed", opts.seed, "Permute the enumeration order");
    sub->add_option("--witness-cap", opts.witness_cap, "Keep at most this many witnesses");
    sub->add_flag("--prune", opts.multiplier_pruning, "One representative per multiplier orbit");
    sub->add_flag("--allow-partial", allow_partial, "Exit 0 on a budget-limited partial result");
    sub->add_flag("--timing", out.timing, "Include wall-clock seconds in JSON output");
    add_output(sub, {"json", "csv"});
  };
  auto finish_search = [&](const SearchResult& r) {
    out.write(search_output(r, out));
    if (!r.exhaustive && !allow_partial)
      throw StatusExit{kBudgetExceeded, "budget exhausted before the search finished; result is partial"};
  };

  auto* smin = search->add_subcommand("min-diameter", "Minimum diameter over all degree-d generator sets of Z_N");
  smin->add_option("-N,--modulus", modulus, "Order N")->required();
  smin->add_option("-d,--degree", degree, "Degree d")->required();
  add_search_flags(smin);
  smin->callback([&] {
    action = [&] {
      opts.max_candidates = max_candidates.value_or(default_budget());
      finish_search(min_diameter_cyclic(modulus, degree, opts));
    };
  });

  auto* sdense = search->add_subcommand("densest", "Largest N <= max-order with a degree-d digraph of diameter <= k");
  sdense->add_option("-d,--degree", degree, "Degree d")->required();
  sdense->add_option("-k,--diameter", diameter, "Diameter k")->required();
  sdense->add_option("--max-order", max_order, "Largest order to try")->required();
  add_search_flags(sdense);
  sdense->callback([&] {
    action = [&] {
      opts.max_candidates = max_candidates.value_or(default_budget());
      finish_search(densest_cyclic_for_diameter(degree, diameter, max_order, opts));
    };
  });

  // export
  auto* exp = app.add_subcommand("export", "Write a diagram as CSV, OBJ or JSON");
  exp->add_option("diagram", in.diagram, "Diagram JSON file or inline JSON")->required();
  add_output(exp, {"csv", "obj", "json"});
  exp->callback([&] {
    action = [&] {
      const HyperL l = diagram_from_json(read_input(in.diagram));
      if (out.format == "obj") return out.write(diagram_to_obj(l));
      if (out.format == "json") return out.write(diagram_to_json(l));
      out.write(diagram_to_csv(l));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  for (const auto& [sub, fmt] : default_format)
    if (sub->parsed() && sub->count("--format") == 0) out.format = fmt;

  try {
    action();
    return kOk;
  } catch (const StatusExit& s) {
    std::cerr << "dilmet: " << s.message << '\n';
    return s.code;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "dilmet: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "dilmet: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "dilmet: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
