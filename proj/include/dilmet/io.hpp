#pragma once

// Interchange formats: JSON for matrices, digraphs, diagrams and results;
// CSV rows for diagrams, searches and family tables; OBJ voxel meshes.

#include <string>

#include <json.hpp>

#include "dilmet/cayley.hpp"
#include "dilmet/families.hpp"
#include "dilmet/hyperl.hpp"
#include "dilmet/lattice_core.hpp"
#include "dilmet/search.hpp"

namespace dilmet {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// {"n": int, "rows": [[int, ...], ...]}
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const SmithDecomposition& snf);

/// {"factors": [...], "generators": [[...], ...]}; the cyclic shorthand
/// {"modulus": N, "generators": [a, b, ...]} is accepted on input.
Json to_json(const CayleyDigraph& g);
CayleyDigraph digraph_from_json(const Json& j);

Json diagram_to_json(const HyperL& l);
HyperL diagram_from_json(const Json& j);
std::string diagram_to_csv(const HyperL& l);
std::string diagram_to_obj(const HyperL& l);

Json to_json(const SearchResult& r, bool with_timing = true);
std::string search_to_csv(const SearchResult& r);

Json to_json(const DilationCheck& c);

std::string format_rational(const Rational& r);
std::string format_decimal(const Rational& r, int digits = 6);

std::string family_csv_header();
std::string family_csv_row(const FamilyInstance& f, std::int64_t bfs_k);

Json parse_json_text(const std::string& text);

}  // namespace dilmet
