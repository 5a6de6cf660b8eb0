#pragma once

// Invariant sweeps shared by the unit tests and the acceptance runner. Each
// sweep returns a list of human-readable failures; empty means it held.

#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dilmet/cayley.hpp"
#include "dilmet/families.hpp"
#include "dilmet/hyperl.hpp"
#include "dilmet/lattice_core.hpp"
#include "dilmet/search.hpp"
#include "oracles.hpp"

namespace props {

using namespace dilmet;
using Failures = std::vector<std::string>;

inline std::string describe(const IntMatrix& m) { return to_string(m); }

inline IntMatrix random_with_det(std::mt19937_64& rng, std::size_t n, std::int64_t bound,
                                 const Integer& max_det) {
  for (;;) {
    IntMatrix m = oracle::random_nonsingular(rng, n, bound);
    if (abs(oracle::cofactor_det(m)) <= max_det) return m;
  }
}

// U M V = S, U and V unimodular, S a nonnegative divisibility chain whose
// product is |det M|.
inline Failures snf_identities(std::mt19937_64& rng, int count, std::size_t max_n, std::int64_t bound) {
  Failures out;
  std::uniform_int_distribution<std::size_t> dim(1, max_n);
  for (int i = 0; i < count; ++i) {
    const IntMatrix m = oracle::random_nonsingular(rng, dim(rng), bound);
    const SmithDecomposition d = smith_normal_form(m);
    const Integer det = oracle::cofactor_det(m);
    std::string why;
    if (d.u * m * d.v != d.s) why = "U M V != S";
    else if (abs(oracle::cofactor_det(d.u)) != 1) why = "U not unimodular";
    else if (abs(oracle::cofactor_det(d.v)) != 1) why = "V not unimodular";
    else if (!d.s.is_diagonal()) why = "S not diagonal";
    else {
      const auto f = d.invariant_factors();
      Integer prod = 1;
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] <= 0) why = "nonpositive invariant factor";
        if (k + 1 < f.size() && f[k] != 0 && f[k + 1] % f[k] != 0) why = "divisibility chain broken";
        prod *= f[k];
      }
      if (why.empty() && prod != abs(det)) why = "product of invariant factors != |det|";
    }
    if (determinant(m) != det) why = "determinant disagrees with cofactor expansion";
    if (!why.empty()) out.push_back(why + " for " + describe(m));
  }
  return out;
}

// det(AB) = det(A) det(B) against the cofactor expansion.
inline Failures determinant_multiplicative(std::mt19937_64& rng, int count, std::size_t max_n,
                                           std::int64_t bound) {
  Failures out;
  std::uniform_int_distribution<std::size_t> dim(1, max_n);
  std::uniform_int_distribution<std::int64_t> entry(-bound, bound);
  for (int i = 0; i < count; ++i) {
    const std::size_t n = dim(rng);
    IntMatrix a(n), b(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) = entry(rng);
        b(r, c) = entry(rng);
      }
    if (determinant(a * b) != determinant(a) * determinant(b) ||
        determinant(a * b) != oracle::cofactor_det(a * b))
      out.push_back("det(AB) mismatch for " + describe(a) + " and " + describe(b));
  }
  return out;
}

// Library congruence agrees with the adjugate oracle and behaves as an
// equivalence relation on random triples.
inline Failures congruence_equivalence(std::mt19937_64& rng, int matrices, int triples, std::size_t max_n,
                                       std::int64_t bound) {
  Failures out;
  std::uniform_int_distribution<std::size_t> dim(1, max_n);
  for (int i = 0; i < matrices; ++i) {
    const std::size_t n = dim(rng);
    const IntMatrix m = oracle::random_nonsingular(rng, n, bound);
    const CongruenceTester tester(m);
    const Integer det = abs(oracle::cofactor_det(m));
    const std::int64_t spread = static_cast<std::int64_t>(std::min<Integer>(det, 6));
    std::uniform_int_distribution<std::int64_t> coord(-spread, spread);
    auto vec = [&] {
      std::vector<std::int64_t> x(n);
      for (auto& c : x) c = coord(rng);
      return x;
    };
    auto big = [](const std::vector<std::int64_t>& x) { return IntVector(x.begin(), x.end()); };
    for (int j = 0; j < triples; ++j) {
      const auto a = vec(), b = vec(), c = vec();
      const bool ab = tester.congruent(big(a), big(b));
      const bool bc = tester.congruent(big(b), big(c));
      const bool ac = tester.congruent(big(a), big(c));
      if (ab != oracle::congruent(a, b, m)) out.push_back("disagrees with oracle for " + describe(m));
      if (!tester.congruent(big(a), big(a))) out.push_back("not reflexive for " + describe(m));
      if (ab != tester.congruent(big(b), big(a))) out.push_back("not symmetric for " + describe(m));
      if (ab && bc && !ac) out.push_back("not transitive for " + describe(m));
      if (ab != (tester.residue(big(a)) == tester.residue(big(b))))
        out.push_back("residue disagrees with congruence for " + describe(m));
    }
  }
  return out;
}

// Every cube of the built diagram has the norm of the cheapest point of its
// class over N^n, found by brute-force enumeration.
inline Failures mdd_against_oracle(const IntMatrix& m) {
  Failures out;
  const MddCertificate cert = build_mdd(m);
  const Integer det = abs(oracle::cofactor_det(m));
  const IntMatrix adj = oracle::adjugate(m);
  const auto best = oracle::class_min_norms(m);
  std::int64_t oracle_k = 0;
  for (const auto& [key, norm] : best) oracle_k = std::max(oracle_k, norm);
  if (Integer(cert.diagram.size()) != det) out.push_back("cube count != |det| for " + describe(m));
  std::set<std::vector<Integer>> seen;
  for (const auto& c : cert.diagram.cubes()) {
    const auto key = oracle::class_key(c.anchor, m, adj, det);
    if (!seen.insert(key).second) out.push_back("two cubes share a class for " + describe(m));
    if (best.at(key) != c.norm()) out.push_back("cube norm above class minimum for " + describe(m));
  }
  if (cert.diameter != oracle_k) out.push_back("diameter disagrees with oracle for " + describe(m));
  if (!validate_hyperl(cert.diagram, m).valid()) out.push_back("diagram fails validation for " + describe(m));
  if (!check_minimality(cert.diagram, m).minimal()) out.push_back("minimality check rejects " + describe(m));
  return out;
}

// Anchors of a hyper-L for M are pairwise incongruent mod M and
// there are exactly |det M| of them.
inline Failures pairwise_incongruent(const HyperL& l, const IntMatrix& m) {
  Failures out;
  const Integer det = abs(oracle::cofactor_det(m));
  const IntMatrix adj = oracle::adjugate(m);
  std::set<std::vector<Integer>> keys;
  for (const auto& c : l.cubes())
    if (!keys.insert(oracle::class_key(c.anchor, m, adj, det)).second) {
      std::ostringstream s;
      s << "congruent anchors in diagram for " << describe(m);
      out.push_back(s.str());
      break;
    }
  if (Integer(l.size()) != det) out.push_back("cube count != |det| for " + describe(m));
  return out;
}

struct BoundSample {
  std::string label;
  Integer order;
  std::int64_t degree = 0;
  std::int64_t diameter = 0;
};

// Strict Moore-type bound N < C(k+d, d) for every sample.
inline Failures strict_upper_bound(const std::vector<BoundSample>& samples) {
  Failures out;
  for (const auto& s : samples) {
    const Integer cap = binomial(s.diameter + s.degree, s.degree);
    if (!(s.order < cap)) {
      std::ostringstream msg;
      msg << s.label << ": N=" << s.order << " d=" << s.degree << " k=" << s.diameter << " C(k+d,d)=" << cap;
      out.push_back(msg.str());
    }
  }
  return out;
}

inline BoundSample sample_of(std::string label, const CayleyDigraph& g) {
  return {std::move(label), Integer(g.order()), static_cast<std::int64_t>(g.degree()), diameter_bfs(g)};
}

}  // namespace props
