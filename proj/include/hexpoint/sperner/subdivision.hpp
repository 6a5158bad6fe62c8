#pragma once

// Points of the standard simplex and the Kuhn (Freudenthal) subdivision of the
// simplex dilated by n.
//
// A subdivision vertex is an integer vector v >= 0 with sum n; its point in
// the simplex is v / n. Internally vertices are walked in the partial-sum
// chart y_i = v_i + ... + v_m (i = 1..m), where the dilated simplex becomes
// n >= y_1 >= ... >= y_m >= 0. A Kuhn cell is b, b + e_p(1),
// b + e_p(1) + e_p(2), ..., b + (1,...,1) for a base point b and a
// permutation p; the cells lying inside the chart region tile it, n^m of them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "hexpoint/error.hpp"

namespace hexpoint::sperner {

inline constexpr double kSupportTolerance = 1e-12;

/// Barycentric coordinates on the standard simplex of dimension size() - 1.
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
    if (lambdas_.size() < 2) {
      throw Error(ErrorCode::InvalidArgument, "a simplex point needs at least two coordinates");
    }
    double sum = 0;
    for (double l : lambdas_) {
      if (!(l >= -kSupportTolerance)) {
        throw Error(ErrorCode::InvalidArgument, "barycentric coordinates must be nonnegative");
      }
      sum += l;
    }
    if (std::fabs(sum - 1.0) > kSupportTolerance * static_cast<double>(lambdas_.size())) {
      throw Error(ErrorCode::InvalidArgument, "barycentric coordinates must sum to 1");
    }
  }

  int dimension() const { return static_cast<int>(lambdas_.size()) - 1; }
  const std::vector<double>& lambdas() const { return lambdas_; }
  double operator[](std::size_t i) const { return lambdas_[i]; }

 private:
  std::vector<double> lambdas_;
};

/// Indices with a positive coordinate, read as > 1e-12.
inline std::vector<int> support(const SimplexPoint& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.lambdas().size(); ++i) {
    if (p[i] > kSupportTolerance) out.push_back(static_cast<int>(i));
  }
  return out;
}

struct SubdivisionLimits {
  std::size_t max_vertices = 4'000'000;
  std::size_t max_cells = 8'000'000;
};

class Subdivision {
 public:
  int dimension() const { return m_; }
  int resolution() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size() / stride(); }
  std::size_t cell_count() const { return cells_.size() / stride(); }

  /// Integer lattice coordinates v (sum n) of a vertex.
  std::span<const int> vertex(std::size_t id) const {
    return {vertices_.data() + id * stride(), stride()};
  }
  std::span<const std::size_t> cell(std::size_t id) const {
    return {cells_.data() + id * stride(), stride()};
  }

  SimplexPoint point(std::size_t id) const {
    std::vector<double> l;
    for (int v : vertex(id)) l.push_back(static_cast<double>(v) / n_);
    return SimplexPoint(std::move(l));
  }

  /// Exact support of a vertex: coordinates with v_i > 0.
  std::vector<int> vertex_support(std::size_t id) const {
    std::vector<int> out;
    const auto v = vertex(id);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] > 0) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  /// Barycentre of a cell.
  SimplexPoint barycenter(std::size_t cell_id) const {
    std::vector<double> l(stride(), 0.0);
    for (std::size_t vid : cell(cell_id)) {
      const auto v = vertex(vid);
      for (std::size_t i = 0; i < stride(); ++i) l[i] += v[i];
    }
    const double denom = static_cast<double>(n_) * static_cast<double>(stride());
    for (double& x : l) x /= denom;
    return SimplexPoint(std::move(l));
  }

  /// Largest max-norm distance between two vertices of one cell, in simplex units.
  double mesh() const {
    int worst = 0;
    for (std::size_t c = 0; c < cell_count(); ++c) {
      const auto ids = cell(c);
      for (std::size_t a = 0; a < ids.size(); ++a) {
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
          const auto va = vertex(ids[a]);
          const auto vb = vertex(ids[b]);
          for (std::size_t i = 0; i < stride(); ++i) worst = std::max(worst, std::abs(va[i] - vb[i]));
        }
      }
    }
    return static_cast<double>(worst) / n_;
  }

  /// Debug dump: `v <id> <v0..vm>` then `c <id> <vid0..vidm>`, one per line.
  std::string dump() const {
    std::ostringstream os;
    for (std::size_t id = 0; id < vertex_count(); ++id) {
      os << "v " << id;
      for (int x : vertex(id)) os << ' ' << x;
      os << '\n';
    }
    for (std::size_t id = 0; id < cell_count(); ++id) {
      os << "c " << id;
      for (std::size_t x : cell(id)) os << ' ' << x;
      os << '\n';
    }
    return os.str();
  }

 private:
  friend Subdivision subdivide(int m, int n, const SubdivisionLimits& limits);
  std::size_t stride() const { return static_cast<std::size_t>(m_) + 1; }

  int m_ = 0;
  int n_ = 0;
  std::vector<int> vertices_;
  std::vector<std::size_t> cells_;
};

/// Number of lattice points of the n-dilated m-simplex, C(n + m, m), as a double
/// so that oversized requests can be rejected before allocating.
inline double lattice_point_count(int m, int n) {
  double c = 1.0;
  for (int i = 1; i <= m; ++i) c = c * (n + i) / i;
  return c;
}

inline Subdivision subdivide(int m, int n, const SubdivisionLimits& limits = {}) {
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::InvalidArgument, "subdivision needs m >= 1 and n >= 1");
  }
  const double vcount = lattice_point_count(m, n);
  const double ccount = std::pow(static_cast<double>(n), m);
  if (vcount > static_cast<double>(limits.max_vertices) || ccount > static_cast<double>(limits.max_cells)) {
    throw Error(ErrorCode::ResourceLimit,
                "subdivision m=" + std::to_string(m) + ", n=" + std::to_string(n) + " would need " +
                    std::to_string(static_cast<long long>(vcount)) + " vertices and " +
                    std::to_string(static_cast<long long>(ccount)) + " cells");
  }

  Subdivision sub;
  sub.m_ = m;
  sub.n_ = n;
  const auto dim = static_cast<std::size_t>(m);
  const auto base = static_cast<std::uint64_t>(n) + 1;

  auto key_of = [&](const std::vector<int>& y) {
    std::uint64_t key = 0;
    for (int c : y) key = key * base + static_cast<std::uint64_t>(c);
    return key;
  };

  // Chart points n >= y_1 >= ... >= y_m >= 0 in lexicographic order.
  std::unordered_map<std::uint64_t, std::size_t> ids;
  ids.reserve(static_cast<std::size_t>(vcount));
  std::vector<std::vector<int>> chart;
  std::vector<int> y(dim, 0);
  auto emit = [&](const std::vector<int>& pt) {
    ids.emplace(key_of(pt), chart.size());
    chart.push_back(pt);
    sub.vertices_.push_back(n - pt[0]);
    for (std::size_t i = 0; i + 1 < dim; ++i) sub.vertices_.push_back(pt[i] - pt[i + 1]);
    sub.vertices_.push_back(pt[dim - 1]);
  };
  auto generate = [&](auto&& self, std::size_t i, int upper) -> void {
    if (i == dim) {
      emit(y);
      return;
    }
    for (int c = 0; c <= upper; ++c) {
      y[i] = c;
      self(self, i + 1, c);
    }
  };
  // Lexicographic order wants y_1 outermost, and y_1 ranges over 0..n.
  for (int first = 0; first <= n; ++first) {
    y[0] = first;
    generate(generate, 1, first);
  }

  auto inside = [&](const std::vector<int>& pt) {
    if (pt[0] > n || pt[dim - 1] < 0) return false;
    for (std::size_t i = 0; i + 1 < dim; ++i) {
      if (pt[i] < pt[i + 1]) return false;
    }
    return true;
  };

  std::vector<std::size_t> perm(dim);
  std::vector<int> walk(dim);
  for (const auto& b : chart) {
    if (b[0] >= n) continue;  // b + (1,...,1) must stay inside
    std::iota(perm.begin(), perm.end(), 0);
    do {
      walk = b;
      std::vector<std::size_t> cell{ids.at(key_of(walk))};
      bool ok = true;
      for (std::size_t step : perm) {
        ++walk[step];
        if (!inside(walk)) {
          ok = false;
          break;
        }
        cell.push_back(ids.at(key_of(walk)));
      }
      if (ok) sub.cells_.insert(sub.cells_.end(), cell.begin(), cell.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return sub;
}

}  // namespace hexpoint::sperner
