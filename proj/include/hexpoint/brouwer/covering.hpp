#pragma once

// Approximate fixed points on the unit square through the Hex theorem.
//
// On the k x k board the map f is sampled at z / k. The four covering sets
// collect the cells where f pushes the point more than eps east, west, north
// or south. For a map whose variation over one lattice step stays below eps,
// H+ never touches H- and V+ never touches V-, H+ misses the East edge and H-
// the West edge (likewise for V). A coloring of the whole board by
// H = H+ u H- and V = V+ u V- would then contain no winning chain, which the
// Hex theorem rules out. So some cell is in none of the sets, and there
// |f(z/k) - z/k| <= eps.

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "hexpoint/error.hpp"
#include "hexpoint/funcspec/mapspec.hpp"
#include "hexpoint/hex/board.hpp"

namespace hexpoint::brouwer {

using hex::Coord;

struct CoveringSets {
  int k = 0;
  double eps = 0;
  // Each list is in scan order: z2 ascending, then z1 ascending.
  std::vector<Coord> hplus, hminus, vplus, vminus;

  struct Membership {
    bool hplus = false, hminus = false, vplus = false, vminus = false;
    bool covered() const { return hplus || hminus || vplus || vminus; }
  };

  /// Per-cell flags, indexed like a Board: (z2 - 1) * k + (z1 - 1).
  std::vector<Membership> grid() const {
    std::vector<Membership> g(static_cast<std::size_t>(k) * k);
    auto idx = [this](const Coord& z) { return static_cast<std::size_t>(z.z2 - 1) * k + (z.z1 - 1); };
    for (const auto& z : hplus) g[idx(z)].hplus = true;
    for (const auto& z : hminus) g[idx(z)].hminus = true;
    for (const auto& z : vplus) g[idx(z)].vplus = true;
    for (const auto& z : vminus) g[idx(z)].vminus = true;
    return g;
  }
};

struct CoveringCounts {
  std::size_t hplus = 0, hminus = 0, vplus = 0, vminus = 0, uncovered = 0;
};

inline CoveringCounts counts(const CoveringSets& cs) {
  CoveringCounts c{cs.hplus.size(), cs.hminus.size(), cs.vplus.size(), cs.vminus.size(), 0};
  for (const auto& m : cs.grid()) c.uncovered += !m.covered();
  return c;
}

inline void require_square_map(const funcspec::MapSpec& f) {
  if (f.domain().kind() != funcspec::Domain::Kind::Square) {
    throw Error(ErrorCode::ArityError, "expected a map on the unit square, got one on " +
                                           f.domain().describe());
  }
}

inline CoveringSets covering_sets(const funcspec::MapSpec& f, int k, double eps) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "lattice resolution must be positive");
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  require_square_map(f);
  CoveringSets cs;
  cs.k = k;
  cs.eps = eps;
  const double dk = k;
  for (int z2 = 1; z2 <= k; ++z2) {
    for (int z1 = 1; z1 <= k; ++z1) {
      const double x = z1 / dk;
      const double y = z2 / dk;
      const auto img = f({x, y});
      if (img[0] - x > eps) cs.hplus.push_back({z1, z2});
      if (x - img[0] > eps) cs.hminus.push_back({z1, z2});
      if (img[1] - y > eps) cs.vplus.push_back({z1, z2});
      if (y - img[1] > eps) cs.vminus.push_back({z1, z2});
    }
  }
  return cs;
}

/// An adjacent pair with one cell in H+ and the other in H-, or one in V+ and
/// the other in V-, if any.
inline std::optional<std::pair<Coord, Coord>> find_contiguity(const CoveringSets& cs) {
  const auto g = cs.grid();
  const int k = cs.k;
  auto at = [&](int z1, int z2) -> const CoveringSets::Membership& {
    return g[static_cast<std::size_t>(z2 - 1) * k + (z1 - 1)];
  };
  constexpr Coord kForward[] = {{1, 0}, {0, 1}, {1, 1}};
  for (int z2 = 1; z2 <= k; ++z2) {
    for (int z1 = 1; z1 <= k; ++z1) {
      for (const auto& d : kForward) {
        const int w1 = z1 + d.z1, w2 = z2 + d.z2;
        if (w1 > k || w2 > k) continue;
        const auto& a = at(z1, z2);
        const auto& b = at(w1, w2);
        if ((a.hplus && b.hminus) || (a.hminus && b.hplus) || (a.vplus && b.vminus) ||
            (a.vminus && b.vplus)) {
          return std::make_pair(Coord{z1, z2}, Coord{w1, w2});
        }
      }
    }
  }
  return std::nullopt;
}

/// True when H+ and H- never touch and neither do V+ and V-. Meaningful as a
/// check of the construction when 1/k is below the map's modulus of
/// continuity at eps.
inline bool check_noncontiguity(const CoveringSets& cs) { return !find_contiguity(cs).has_value(); }

struct HexFixedPointOptions {
  // Max-norm Lipschitz bound of f, if known. A bound below 1 makes f a
  // contraction; the search then also lands within eps of its fixed point.
  std::optional<double> lipschitz;
  int start_k = 8;
  int max_k = 4096;
};

struct HexFixedPoint {
  double x = 0, y = 0;
  double residual = 0;
  int k = 0;
  Coord z;
  CoveringCounts counts;
  // Threshold the covering sets were built with; eps unless tightened for a
  // contraction.
  double tolerance = 0;
};

/// Lattice size from a Lipschitz bound: delta = min(eps / L, eps), k = ceil(1/delta) + 1.
inline int lattice_size_for(double eps, double lipschitz) {
  const double delta = lipschitz > 0 ? std::min(eps / lipschitz, eps) : eps;
  const double k = std::ceil(1.0 / delta) + 1.0;
  return k > 1e9 ? 1'000'000'000 : static_cast<int>(k);
}

inline HexFixedPoint fixed_point_2d_hex(const funcspec::MapSpec& f, double eps,
                                        const HexFixedPointOptions& options = {}) {
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  require_square_map(f);
  if (options.lipschitz && !(*options.lipschitz >= 0)) {
    throw Error(ErrorCode::InvalidArgument, "Lipschitz bound must be nonnegative");
  }
  // For a contraction with constant L, |p - p*| <= |f(p) - p| / (1 - L).
  const double tol = options.lipschitz && *options.lipschitz < 1 ? eps * (1 - *options.lipschitz) : eps;

  auto attempt = [&](int k) -> std::optional<HexFixedPoint> {
    const CoveringSets cs = covering_sets(f, k, tol);
    const auto g = cs.grid();
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].covered()) continue;
      const Coord z{static_cast<int>(i % k) + 1, static_cast<int>(i / k) + 1};
      HexFixedPoint out;
      out.x = static_cast<double>(z.z1) / k;
      out.y = static_cast<double>(z.z2) / k;
      const auto img = f({out.x, out.y});
      out.residual = std::max(std::fabs(img[0] - out.x), std::fabs(img[1] - out.y));
      out.k = k;
      out.z = z;
      out.counts = counts(cs);
      out.tolerance = tol;
      return out;
    }
    return std::nullopt;
  };
  auto too_large = [&](long long k) {
    return Error(ErrorCode::ResourceLimit, "lattice size " + std::to_string(k) + " exceeds cap " +
                                               std::to_string(options.max_k) +
                                               "; eps too small or map not continuous at this scale");
  };

  long long k = std::max(1, options.start_k);
  if (options.lipschitz) {
    k = lattice_size_for(tol, *options.lipschitz);
    if (k > options.max_k) throw too_large(k);
    if (auto hit = attempt(static_cast<int>(k))) return *hit;
    // The stated bound was wrong; keep refining.
    k *= 2;
  }
  for (;; k *= 2) {
    if (k > options.max_k) throw too_large(k);
    if (auto hit = attempt(static_cast<int>(k))) return *hit;
  }
}

}  // namespace hexpoint::brouwer
