#pragma once

// Independent reference computations for tests. Nothing here calls into the
// Smith normal form, the BFS in cayley.cpp, or the diagram builder.

#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "dilmet/lattice_core.hpp"

namespace oracle {

using dilmet::Integer;
using dilmet::IntMatrix;

// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 1) return m(0, 0);
  Integer sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    const Integer term = m(0, j) * cofactor_det(minor);
    sum += (j % 2 == 0) ? term : Integer(-term);
  }
  return sum;
}

inline IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.dim();
  IntMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const Integer cof = cofactor_det(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : Integer(-cof);
    }
  return adj;
}

// a == b (mod M) iff adj(M)(a - b) is divisible by det M, since
// M^{-1} = adj(M) / det M.
inline bool congruent(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                      const IntMatrix& m) {
  const Integer det = cofactor_det(m);
  const IntMatrix adj = adjugate(m);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) s += adj(i, j) * (a[j] - b[j]);
    if (s % det != 0) return false;
  }
  return true;
}

// Class key of x mod M: adj(M) x reduced mod |det M|.
inline std::vector<Integer> class_key(const std::vector<std::int64_t>& x, const IntMatrix& m,
                                      const IntMatrix& adj, const Integer& det_abs) {
  std::vector<Integer> key(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) s += adj(i, j) * x[j];
    s %= det_abs;
    if (s < 0) s += det_abs;
    key[i] = s;
  }
  return key;
}

// Minimal l1 norm of every class of Z^n / M Z^n over N^n, by enumerating
// all points of N^n in increasing norm until every class is seen.
inline std::map<std::vector<Integer>, std::int64_t> class_min_norms(const IntMatrix& m) {
  const Integer det = abs(cofactor_det(m));
  const IntMatrix adj = adjugate(m);
  const std::size_t n = m.dim();
  std::map<std::vector<Integer>, std::int64_t> best;
  for (std::int64_t k = 0; Integer(best.size()) < det; ++k) {
    // compositions of k into n nonnegative parts
    std::vector<std::int64_t> x(n, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
      if (i + 1 == n) {
        x[i] = left;
        best.emplace(class_key(x, m, adj, det), k);
        return;
      }
      for (std::int64_t v = 0; v <= left; ++v) {
        x[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, k);
  }
  return best;
}

// Plain BFS on an explicit adjacency map of an Abelian group given by
// factors and generator coordinates; returns -1 if not generating.
inline std::int64_t cayley_diameter(const std::vector<std::int64_t>& factors,
                                    const std::vector<std::vector<std::int64_t>>& gens) {
  using E = std::vector<std::int64_t>;
  std::map<E, std::int64_t> dist;
  std::queue<E> q;
  E zero(factors.size(), 0);
  dist[zero] = 0;
  q.push(zero);
  std::int64_t order = 1, k = 0;
  for (auto f : factors) order *= f;
  while (!q.empty()) {
    E x = q.front();
    q.pop();
    k = std::max(k, dist[x]);
    for (const auto& g : gens) {
      E y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = (((x[i] + g[i]) % factors[i]) + factors[i]) % factors[i];
      if (dist.emplace(y, dist[x] + 1).second) q.push(y);
    }
  }
  return static_cast<std::int64_t>(dist.size()) == order ? k : -1;
}

inline std::int64_t cyclic_diameter(std::int64_t n, const std::vector<std::int64_t>& gens) {
  std::vector<std::vector<std::int64_t>> g;
  for (auto a : gens) g.push_back({a});
  return cayley_diameter({n}, g);
}

// Random square matrix with nonzero determinant; entries in [-bound, bound].
inline IntMatrix random_nonsingular(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  for (;;) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    if (cofactor_det(m) != 0) return m;
  }
}

}  // namespace oracle
