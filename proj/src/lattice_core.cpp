#include "dilmet/lattice_core.hpp"

#include <limits>
#include <sstream>
#include <utility>

namespace dilmet {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::InvalidDilation: return "InvalidDilation";
    case ErrorKind::EmptyDiagram: return "EmptyDiagram";
    case ErrorKind::OutOfFamily: return "OutOfFamily";
    case ErrorKind::NotAvailable: return "NotAvailable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "matrix dimension must be >= 1");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorKind::DimensionMismatch, "matrix must be square");
    std::size_t j = 0;
    for (auto x : r) (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& diag) {
  IntMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                   a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

std::vector<Integer> IntMatrix::diagonal_entries() const {
  std::vector<Integer> d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
  return d;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix product dimensions");
  const std::size_t n = a.dim();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator*(const Integer& t, const IntMatrix& m) {
  IntMatrix c = m;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) c(i, j) *= t;
  return c;
}

IntVector operator*(const IntMatrix& m, const IntVector& x) {
  if (m.dim() != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector dimensions");
  IntVector y(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << (i ? ", (" : "(");
    for (std::size_t j = 0; j < m.dim(); ++j) out << (j ? "," : "") << m(i, j);
    out << ')';
  }
  out << ']';
  return out.str();
}

// Fraction-free Gaussian elimination (Bareiss); every division is exact.
Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.dim();
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.dim(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.dim(); ++r) std::swap(a(r, i), a(r, j));
}

// row[dst] += q * row[src]
void add_row(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t c = 0; c < a.dim(); ++c) a(dst, c) += q * a(src, c);
}

void add_col(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < a.dim(); ++r) a(r, dst) += q * a(r, src);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  if (determinant(m) == 0)
    throw Error(ErrorKind::SingularMatrix, "matrix is singular: " + to_string(m));

  const std::size_t n = m.dim();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Pivot on the smallest nonzero |entry| of the trailing block.
      std::size_t pi = n, pj = n;
      Integer best;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (a(i, j) == 0) continue;
          Integer mag = abs(a(i, j));
          if (pi == n || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi == n) throw Error(ErrorKind::Internal, "zero block in nonsingular matrix");
      swap_rows(a, k, pi);
      swap_rows(u, k, pi);
      swap_cols(a, k, pj);
      swap_cols(v, k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        const Integer q = a(i, k) / a(k, k);
        add_row(a, i, k, -q);
        add_row(u, i, k, -q);
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j) == 0) continue;
        const Integer q = a(k, j) / a(k, k);
        add_col(a, j, k, -q);
        add_col(v, j, k, -q);
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility chain: pull a non-multiple into the pivot row.
      std::size_t bad = n;
      for (std::size_t i = k + 1; i < n && bad == n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (a(i, j) % a(k, k) != 0) {
            bad = i;
            break;
          }
      if (bad == n) break;
      add_row(a, k, bad, 1);
      add_row(u, k, bad, 1);
    }
    if (a(k, k) < 0) {
      add_row(a, k, k, -2);
      add_row(u, k, k, -2);
    }
  }

  SmithDecomposition out{std::move(u), std::move(a), std::move(v), m};
  if (out.u * m * out.v != out.s)
    throw Error(ErrorKind::Internal, "Smith decomposition failed to verify");
  return out;
}

IntVector reduce_mod_group(const IntVector& x, const IntMatrix& s) {
  if (x.size() != s.dim()) throw Error(ErrorKind::DimensionMismatch, "vector/diagonal dimensions");
  if (!s.is_diagonal()) throw Error(ErrorKind::InvalidInput, "group matrix must be diagonal");
  IntVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Integer& si = s(i, i);
    if (si <= 0) throw Error(ErrorKind::InvalidInput, "group diagonal must be positive");
    r[i] = x[i] % si;
    if (r[i] < 0) r[i] += si;
  }
  return r;
}

CongruenceTester::CongruenceTester(const IntMatrix& m) : snf_(smith_normal_form(m)) {}

IntVector CongruenceTester::residue(const IntVector& x) const {
  return reduce_mod_group(snf_.u * x, snf_.s);
}

bool CongruenceTester::congruent(const IntVector& a, const IntVector& b) const {
  if (a.size() != b.size() || a.size() != snf_.s.dim())
    throw Error(ErrorKind::DimensionMismatch, "congruence operand dimensions");
  IntVector diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  for (const auto& r : residue(diff))
    if (r != 0) return false;
  return true;
}

bool congruent_mod(const IntVector& a, const IntVector& b, const IntMatrix& m) {
  return CongruenceTester(m).congruent(a, b);
}

std::int64_t to_int64(const Integer& x, const char* what) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::InvalidInput, std::string(what) + " exceeds 64-bit range");
  return static_cast<std::int64_t>(x);
}

}  // namespace dilmet
