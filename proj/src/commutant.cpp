#include "uqso/commutant.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace uqso::reps {

namespace {

using Row = std::vector<std::pair<std::uint32_t, Complex>>;

// Rows of (X T - T X)_{ab} = sum_c X_ac T_cb - T_ac X_cb, with X_ac at a*d + c.
std::vector<Row> stacked_rows(const std::vector<SparseOperator>& ops, std::size_t d) {
  std::vector<Row> rows;
  rows.reserve(ops.size() * d * d);
  for (const SparseOperator& op : ops) {
    std::vector<std::vector<std::pair<std::size_t, Complex>>> by_col(d), by_row(d);
    for (const auto& e : op.entries) {
      by_col[e.col].emplace_back(e.row, e.value);
      by_row[e.row].emplace_back(e.col, e.value);
    }
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        Row r;
        for (const auto& [c, v] : by_col[b])
          r.emplace_back(static_cast<std::uint32_t>(a * d + c), v);
        for (const auto& [c, v] : by_row[a])
          r.emplace_back(static_cast<std::uint32_t>(c * d + b), -v);
        std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        Row merged;
        for (const auto& entry : r) {
          if (!merged.empty() && merged.back().first == entry.first)
            merged.back().second += entry.second;
          else
            merged.push_back(entry);
        }
        std::erase_if(merged, [](const auto& x) { return x.second == Complex(0.0, 0.0); });
        if (!merged.empty())
          rows.push_back(std::move(merged));
      }
  }
  return rows;
}

// Largest singular value by power iteration on M^H M.
double estimate_sigma_max(const std::vector<Row>& rows, std::size_t unknowns) {
  if (rows.empty())
    return 0.0;
  std::vector<Complex> x(unknowns), y(rows.size()), z(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i)
    x[i] = Complex(1.0 + 0.001 * static_cast<double>(i % 7), 0.01 * static_cast<double>(i % 5));
  double sigma = 0.0;
  for (int iter = 0; iter < 50; ++iter) {
    double nx = 0.0;
    for (const auto& v : x)
      nx += std::norm(v);
    nx = std::sqrt(nx);
    for (auto& v : x)
      v /= nx;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Complex s = 0.0;
      for (const auto& [c, v] : rows[r])
        s += v * x[c];
      y[r] = s;
    }
    std::fill(z.begin(), z.end(), Complex(0.0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r])
        z[c] += std::conj(v) * y[r];
    double nz = 0.0;
    for (const auto& v : z)
      nz += std::norm(v);
    double next = std::sqrt(std::sqrt(nz));
    x.swap(z);
    if (std::abs(next - sigma) <= 1e-6 * next) {
      sigma = next;
      break;
    }
    sigma = next;
  }
  return sigma;
}

} // namespace

std::size_t commutant_dimension(const std::vector<SparseOperator>& ops, double tol, CommutantStats* stats) {
  if (ops.empty())
    fail(ErrorKind::DimensionMismatch, "commutant of an empty operator list");
  const std::size_t d = ops.front().dim;
  for (const auto& op : ops) {
    if (op.dim != d)
      fail(ErrorKind::DimensionMismatch, "operators have dimensions " + std::to_string(d) + " and " +
                                             std::to_string(op.dim));
    for (const auto& e : op.entries)
      if (e.row >= d || e.col >= d)
        fail(ErrorKind::DimensionMismatch, "operator " + op.name + " has an entry outside its dimension");
  }
  const std::size_t unknowns = d * d;
  if (d > 400)
    fail(ErrorKind::InvalidArgument, "commutant of a " + std::to_string(d) + "-dimensional representation is too large");
  std::vector<Row> rows = stacked_rows(ops, d);
  const double sigma_full = estimate_sigma_max(rows, unknowns);

  double biggest = 0.0;
  for (const auto& r : rows)
    for (const auto& [c, v] : r)
      biggest = std::max(biggest, std::abs(v));
  const double pivot_floor = 1e-10 * biggest;

  // Singleton elimination.
  std::vector<std::vector<std::uint32_t>> rows_of(unknowns);
  std::vector<std::size_t> live(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    live[r] = rows[r].size();
    for (const auto& [c, v] : rows[r])
      rows_of[c].push_back(static_cast<std::uint32_t>(r));
  }
  std::vector<char> alive(unknowns, 1);
  std::deque<std::size_t> queue;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (live[r] == 1)
      queue.push_back(r);
  std::size_t eliminated = 0;
  while (!queue.empty()) {
    std::size_t r = queue.front();
    queue.pop_front();
    if (live[r] != 1)
      continue;
    for (const auto& [c, v] : rows[r]) {
      if (!alive[c])
        continue;
      if (std::abs(v) <= pivot_floor)
        break;
      alive[c] = 0;
      ++eliminated;
      for (std::uint32_t other : rows_of[c])
        if (--live[other] == 1)
          queue.push_back(other);
      break;
    }
  }

  // Doubleton rows a x_u + b x_w = 0 tie x_u to x_w; classes are kept as
  // x_u = factor[u] * x_root. Rows closing a cycle stay in the dense system.
  std::vector<std::uint32_t> parent(unknowns);
  std::vector<Complex> factor(unknowns, Complex(1.0));
  for (std::size_t u = 0; u < unknowns; ++u)
    parent[u] = static_cast<std::uint32_t>(u);
  auto find = [&](std::uint32_t u) {
    std::vector<std::uint32_t> path;
    while (parent[u] != u) {
      path.push_back(u);
      u = parent[u];
    }
    // Compress from the top so each factor becomes relative to the root.
    for (std::size_t i = path.size(); i-- > 0;) {
      std::uint32_t v = path[i];
      if (parent[v] != u) {
        factor[v] *= factor[parent[v]];
        parent[v] = u;
      }
    }
    return u;
  };
  std::vector<char> used(rows.size(), 0);
  std::size_t merged = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (live[r] != 2)
      continue;
    std::uint32_t u = 0, w = 0;
    Complex a, b;
    int seen = 0;
    for (const auto& [c, v] : rows[r])
      if (alive[c]) {
        (seen == 0 ? u : w) = c;
        (seen == 0 ? a : b) = v;
        ++seen;
      }
    if (std::abs(a) <= pivot_floor || std::abs(b) <= pivot_floor)
      continue;
    std::uint32_t ru = find(u), rw = find(w);
    if (ru == rw)
      continue;
    parent[ru] = rw;
    factor[ru] = -(b * factor[w]) / (a * factor[u]);
    used[r] = 1;
    ++merged;
  }

  std::vector<std::int64_t> column(unknowns, -1);
  std::vector<double> class_norm;
  std::size_t cols = 0;
  for (std::size_t u = 0; u < unknowns; ++u)
    if (alive[u] && find(static_cast<std::uint32_t>(u)) == u) {
      column[u] = static_cast<std::int64_t>(cols++);
      class_norm.push_back(0.0);
    }
  for (std::size_t u = 0; u < unknowns; ++u)
    if (alive[u])
      class_norm[static_cast<std::size_t>(column[find(static_cast<std::uint32_t>(u))])] += std::norm(factor[u]);
  for (double& x : class_norm)
    x = std::sqrt(x);
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (live[r] > 0 && !used[r])
      kept.push_back(r);

  if (stats) {
    stats->unknowns = unknowns;
    stats->eliminated = eliminated;
    stats->merged = merged;
    stats->dense_rows = kept.size();
    stats->dense_cols = cols;
  }
  if (cols == 0)
    return 0;
  if (kept.empty()) {
    if (stats)
      stats->sigma_max = sigma_full;
    return cols;
  }

  // Columns are unit vectors in the original unknowns, one per class.
  const std::size_t m = kept.size();
  constexpr std::size_t dense_limit = std::size_t{1} << 27; // 2 GiB of complex doubles
  if (m > dense_limit / cols)
    fail(ErrorKind::InvalidArgument, "commutant system with " + std::to_string(m) + " x " + std::to_string(cols) +
                                         " dense remainder exceeds the memory limit");
  std::vector<Complex> dense(m * cols, Complex(0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& [c, v] : rows[kept[i]])
      if (alive[c]) {
        auto col = static_cast<std::size_t>(column[find(c)]);
        dense[col * m + i] += v * factor[c] / class_norm[col];
      }
  rows.clear();
  rows.shrink_to_fit();

  std::vector<double> sv(std::min(m, cols));
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', static_cast<lapack_int>(m), static_cast<lapack_int>(cols),
                                   dense.data(), static_cast<lapack_int>(m), sv.data(), nullptr, 1, nullptr, 1);
  if (info != 0)
    fail(ErrorKind::DimensionMismatch, "singular value decomposition failed (info " + std::to_string(info) + ")");
  const double sigma = std::max(sigma_full, sv.empty() ? 0.0 : sv.front());
  if (stats)
    stats->sigma_max = sigma;
  std::size_t rank = 0;
  for (double s : sv)
    if (s >= tol * sigma)
      ++rank;
  return cols - rank;
}

} // namespace uqso::reps
