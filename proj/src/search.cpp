#include "dilmet/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>

#include "dilmet/families.hpp"
#include "dilmet/hyperl.hpp"

namespace dilmet {

namespace {

using Clock = std::chrono::steady_clock;
using Combo = std::vector<std::int64_t>;

constexpr std::int64_t kChunk = 4096;
constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

class CyclicBfs {
 public:
  std::int64_t run(std::int64_t n, const Combo& gens, std::int64_t limit) {
    std::int64_t g = n;
    for (auto a : gens) g = std::gcd(g, a);
    if (g != 1) return -1;
    if (n == 1) return 0;
    if (static_cast<std::int64_t>(dist_.size()) < n) dist_.resize(static_cast<std::size_t>(n));
    std::fill_n(dist_.begin(), n, -1);
    queue_.clear();
    dist_[0] = 0;
    queue_.push_back(0);
    std::int64_t depth = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::int64_t x = queue_[head];
      const std::int64_t dx = dist_[static_cast<std::size_t>(x)];
      depth = dx;
      if (limit >= 0 && dx >= limit) continue;
      for (auto a : gens) {
        std::int64_t y = x + a;
        if (y >= n) y -= n;
        if (dist_[static_cast<std::size_t>(y)] < 0) {
          dist_[static_cast<std::size_t>(y)] = dx + 1;
          queue_.push_back(y);
        }
      }
    }
    if (static_cast<std::int64_t>(queue_.size()) < n) return limit + 1;
    return depth;
  }

 private:
  std::vector<std::int64_t> dist_;
  std::vector<std::int64_t> queue_;
};

std::int64_t binom64(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kUnbounded) return kUnbounded;
  }
  return static_cast<std::int64_t>(r);
}

// Lex-order unranking of d-subsets of {1, ..., universe}.
Combo unrank(std::int64_t rank, std::int64_t universe, std::int64_t d) {
  Combo c(static_cast<std::size_t>(d));
  std::int64_t x = 1;
  for (std::int64_t i = 0; i < d; ++i) {
    for (;; ++x) {
      const std::int64_t below = binom64(universe - x, d - i - 1);
      if (rank < below) break;
      rank -= below;
    }
    c[static_cast<std::size_t>(i)] = x++;
  }
  return c;
}

bool next_combo(Combo& c, std::int64_t universe) {
  const std::int64_t d = static_cast<std::int64_t>(c.size());
  std::int64_t i = d - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == universe - (d - 1 - i)) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (std::int64_t j = i + 1; j < d; ++j)
    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Lex-least element of the orbit of A under multiplication by units of Z_N.
class OrbitCanon {
 public:
  explicit OrbitCanon(std::int64_t n) : n_(n) {
    for (std::int64_t u = 2; u < n; ++u)
      if (std::gcd(u, n) == 1) units_.push_back(u);
  }

  bool is_representative(const Combo& a) {
    image_.resize(a.size());
    for (auto u : units_) {
      for (std::size_t i = 0; i < a.size(); ++i)
        image_[i] = static_cast<std::int64_t>(static_cast<__int128>(a[i]) * u % n_);
      std::sort(image_.begin(), image_.end());
      if (image_ < a) return false;
    }
    return true;
  }

 private:
  std::int64_t n_;
  std::vector<std::int64_t> units_;
  Combo image_;
};

struct WorkerState {
  std::int64_t best = kUnbounded;
  std::vector<Combo> witnesses;
  std::int64_t optimal = 0;
  std::int64_t explored = 0;
};

void keep_capped(std::vector<Combo>& w, std::size_t cap) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  if (w.size() > cap) w.resize(cap);
}

// Exhaustive minimum over d-subsets of {1..N-1}; diameters above `ceiling`
// are never recorded.
SearchResult run_cyclic_search(std::int64_t n, std::int64_t d, const SearchOptions& opt,
                               std::int64_t ceiling, std::int64_t candidate_budget,
                               Clock::time_point started) {
  SearchResult res;
  res.modulus = n;
  res.degree = d;
  res.pruned = opt.multiplier_pruning;

  const Integer total_big = binomial(n - 1, d);
  const std::int64_t total = total_big > kUnbounded ? kUnbounded : static_cast<std::int64_t>(total_big);
  const std::int64_t limit = std::min(total, std::max<std::int64_t>(candidate_budget, 0));
  if (limit < total) res.exhaustive = false;

  std::uint64_t mult = 1, shift = 0;
  if (opt.seed != 0 && total > 1) {
    std::uint64_t s = splitmix(opt.seed);
    mult = s % static_cast<std::uint64_t>(total);
    while (mult == 0 || std::gcd(mult, static_cast<std::uint64_t>(total)) != 1)
      mult = (mult + 1) % static_cast<std::uint64_t>(total);
    shift = splitmix(s) % static_cast<std::uint64_t>(total);
  }

  const unsigned workers = std::max(1u, opt.workers);
  const std::int64_t chunks = (limit + kChunk - 1) / kChunk;
  std::vector<WorkerState> states(workers);
  std::atomic<bool> out_of_time{false};

  auto work = [&](unsigned w) {
    WorkerState& st = states[w];
    CyclicBfs bfs;
    std::optional<OrbitCanon> canon;
    if (opt.multiplier_pruning) canon.emplace(n);
    Combo c;
    for (std::int64_t ch = w; ch < chunks; ch += workers) {
      if (opt.max_seconds > 0 &&
          std::chrono::duration<double>(Clock::now() - started).count() > opt.max_seconds)
        out_of_time = true;
      if (out_of_time) return;
      const std::int64_t lo = ch * kChunk;
      const std::int64_t hi = std::min(limit, lo + kChunk);
      for (std::int64_t p = lo; p < hi; ++p) {
        if (opt.seed == 0) {
          if (p == lo) c = unrank(p, n - 1, d);
          else next_combo(c, n - 1);
        } else {
          const auto r = static_cast<std::int64_t>(
              (static_cast<unsigned __int128>(p) * mult + shift) % static_cast<std::uint64_t>(total));
          c = unrank(r, n - 1, d);
        }
        ++st.explored;
        if (canon && !canon->is_representative(c)) continue;
        const std::int64_t cap = std::min(st.best, ceiling);
        const std::int64_t k = bfs.run(n, c, cap == kUnbounded ? -1 : cap);
        if (k < 0 || k > cap) continue;
        if (k < st.best) {
          st.best = k;
          st.witnesses.clear();
          st.optimal = 0;
        }
        ++st.optimal;
        st.witnesses.push_back(c);
        if (st.witnesses.size() > 2 * opt.witness_cap + 16) keep_capped(st.witnesses, opt.witness_cap);
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  for (const auto& st : states) {
    res.explored += st.explored;
    res.best_k = std::min(res.best_k < 0 ? kUnbounded : res.best_k, st.best);
  }
  if (res.best_k == kUnbounded) res.best_k = -1;
  for (auto& st : states) {
    if (st.best != res.best_k || res.best_k < 0) continue;
    res.optimal_sets += st.optimal;
    res.witnesses.insert(res.witnesses.end(), st.witnesses.begin(), st.witnesses.end());
  }
  keep_capped(res.witnesses, opt.witness_cap);
  if (out_of_time) res.exhaustive = false;
  return res;
}

}  // namespace

std::int64_t cyclic_diameter(std::int64_t modulus, const std::vector<std::int64_t>& gens,
                             std::int64_t limit) {
  if (modulus < 1) throw Error(ErrorKind::InvalidInput, "modulus must be >= 1");
  Combo reduced;
  for (auto a : gens) reduced.push_back(((a % modulus) + modulus) % modulus);
  return CyclicBfs{}.run(modulus, reduced, limit);
}

SearchResult min_diameter_cyclic(std::int64_t modulus, std::int64_t degree, const SearchOptions& options) {
  if (modulus < 2 || degree < 1 || degree >= modulus)
    throw Error(ErrorKind::InvalidInput, "search needs modulus >= 2 and 1 <= degree < modulus");
  const auto started = Clock::now();
  SearchResult res =
      run_cyclic_search(modulus, degree, options, kUnbounded, options.max_candidates, started);
  res.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return res;
}

SearchResult densest_cyclic_for_diameter(std::int64_t degree, std::int64_t k, std::int64_t n_max,
                                         const SearchOptions& options) {
  if (degree < 2 || k < 1 || n_max < degree + 1)
    throw Error(ErrorKind::InvalidInput, "densest search needs degree >= 2, k >= 1, n_max > degree");
  const auto started = Clock::now();
  // Orders above C(k+d, d) are impossible; k = 1 attains it.
  const Integer cap = binomial(k + degree, degree);
  std::int64_t n = cap < n_max ? static_cast<std::int64_t>(cap) : n_max;
  std::int64_t explored = 0;
  SearchResult res;
  for (; n >= degree + 1; --n) {
    res = run_cyclic_search(n, degree, options, k, options.max_candidates - explored, started);
    explored += res.explored;
    res.explored = explored;
    if (res.best_k >= 0 || !res.exhaustive) break;
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return res;
}

bool DilationCheck::passed() const {
  return std::all_of(rows.begin(), rows.end(), [&](const DilationRow& r) {
    return r.pass && r.diagram_k == r.predicted_k && r.tessellates &&
           r.density == rows.front().density;
  });
}

DilationCheck verify_dilating_theorem(const IntMatrix& m, std::int64_t t_max, std::int64_t max_order) {
  if (t_max < 1) throw Error(ErrorKind::InvalidDilation, "t_max must be >= 1");
  const Integer det = abs(determinant(m));
  if (det == 0) throw Error(ErrorKind::SingularMatrix, "matrix is singular: " + to_string(m));
  const auto n = static_cast<std::int64_t>(m.dim());
  if (boost::multiprecision::pow(Integer(t_max), static_cast<unsigned>(n)) * det > max_order)
    throw Error(ErrorKind::BudgetExceeded, "dilated group order exceeds the configured budget");

  DilationCheck check;
  check.base = m;
  check.base_k = diameter_bfs(group_from_matrix(m));
  const MddCertificate base = build_mdd(m);
  for (std::int64_t t = 1; t <= t_max; ++t) {
    const IntMatrix tm = Integer(t) * m;
    DilationRow row;
    row.t = t;
    row.order = boost::multiprecision::pow(Integer(t), static_cast<unsigned>(n)) * det;
    row.predicted_k = t * (check.base_k + n) - n;
    row.bfs_k = diameter_bfs(group_from_matrix(tm));
    const HyperL dilated = dilate(base.diagram, t);
    row.diagram_k = hyperl_diameter(dilated);
    row.tessellates = check_tessellation(dilated, tm);
    row.density = density(row.order, n, row.bfs_k);
    row.pass = row.predicted_k == row.bfs_k;
    check.rows.push_back(std::move(row));
  }
  return check;
}

}  // namespace dilmet
