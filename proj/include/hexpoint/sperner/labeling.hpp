#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hexpoint/error.hpp"
#include "hexpoint/funcspec/mapspec.hpp"
#include "hexpoint/sperner/subdivision.hpp"

namespace hexpoint::sperner {

inline constexpr int kUnlabeled = -1;

/// One label per subdivision vertex, indexed by vertex id.
using Labeling = std::vector<int>;

/// Label of every vertex lies in its support. Missing labels are an error,
/// out-of-range labels simply make the labeling improper.
inline bool check_proper(const Subdivision& sub, const Labeling& lab) {
  if (lab.size() != sub.vertex_count()) {
    throw Error(ErrorCode::MissingLabel, "labeling has " + std::to_string(lab.size()) +
                                             " entries for " + std::to_string(sub.vertex_count()) +
                                             " vertices");
  }
  for (std::size_t id = 0; id < lab.size(); ++id) {
    if (lab[id] == kUnlabeled) {
      throw Error(ErrorCode::MissingLabel, "vertex " + std::to_string(id) + " has no label");
    }
    const int l = lab[id];
    if (l < 0 || l > sub.dimension() || sub.vertex(id)[static_cast<std::size_t>(l)] == 0) return false;
  }
  return true;
}

/// Cells whose vertices carry every label 0..m. With a proper labeling their
/// number is odd.
inline std::vector<std::size_t> completely_labeled(const Subdivision& sub, const Labeling& lab) {
  if (!check_proper(sub, lab)) {
    throw Error(ErrorCode::ImproperLabeling, "labeling is not proper");
  }
  const std::uint64_t all = (std::uint64_t{1} << (sub.dimension() + 1)) - 1;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < sub.cell_count(); ++c) {
    std::uint64_t seen = 0;
    for (std::size_t v : sub.cell(c)) seen |= std::uint64_t{1} << lab[v];
    if (seen == all) out.push_back(c);
  }
  assert(out.size() % 2 == 1);
  return out;
}

namespace detail {

inline int min_label(const std::vector<double>& image, const std::vector<double>& at,
                     const std::vector<int>& chi, double slack) {
  for (int i : chi) {
    const auto u = static_cast<std::size_t>(i);
    if (image[u] <= at[u] + slack) return i;
  }
  return kUnlabeled;
}

inline int brouwer_label(const funcspec::MapSpec& f, const std::vector<double>& at,
                         const std::vector<int>& chi) {
  const auto image = f(at);
  int l = min_label(image, at, chi, 0.0);
  // Rounding can push the image sum a hair above 1; accept within the range tolerance.
  if (l == kUnlabeled) l = min_label(image, at, chi, funcspec::kRangeTolerance);
  if (l == kUnlabeled) {
    throw Error(ErrorCode::MapRangeError, "no coordinate of the support moves down; image sum exceeds 1");
  }
  return l;
}

inline void require_simplex_map(const funcspec::MapSpec& f, int m) {
  if (f.domain().kind() != funcspec::Domain::Kind::Simplex || f.domain().dimension() != m) {
    throw Error(ErrorCode::ArityError, "map is defined on " + f.domain().describe() +
                                           ", expected the simplex of dimension " + std::to_string(m));
  }
}

}  // namespace detail

/// Smallest i in the support of v with f_i(v) <= v_i.
inline int brouwer_label(const funcspec::MapSpec& f, const SimplexPoint& v) {
  detail::require_simplex_map(f, v.dimension());
  return detail::brouwer_label(f, v.lambdas(), support(v));
}

/// Same rule at a subdivision vertex, with the exact integer support.
inline int brouwer_label(const funcspec::MapSpec& f, const Subdivision& sub, std::size_t vertex_id) {
  detail::require_simplex_map(f, sub.dimension());
  return detail::brouwer_label(f, sub.point(vertex_id).lambdas(), sub.vertex_support(vertex_id));
}

inline Labeling brouwer_labeling(const funcspec::MapSpec& f, const Subdivision& sub) {
  detail::require_simplex_map(f, sub.dimension());
  Labeling lab(sub.vertex_count());
  for (std::size_t id = 0; id < sub.vertex_count(); ++id) {
    lab[id] = detail::brouwer_label(f, sub.point(id).lambdas(), sub.vertex_support(id));
  }
  return lab;
}

/// Max-norm distance between f(p) and p.
inline double residual(const funcspec::MapSpec& f, const std::vector<double>& p) {
  const auto image = f(p);
  double r = 0;
  for (std::size_t i = 0; i < p.size(); ++i) r = std::max(r, std::fabs(image[i] - p[i]));
  return r;
}

struct SpernerLimits {
  int start_n = 2;
  int max_n = 1024;
  SubdivisionLimits subdivision;
  // Max-norm Lipschitz bound of f, if known. Below 1 the residual target is
  // tightened so the point is also within eps of the unique fixed point.
  std::optional<double> lipschitz;
};

struct SpernerResult {
  SimplexPoint point;
  double residual = 0;
  int n = 0;
  std::size_t cell = 0;
  std::size_t completely_labeled_count = 0;
};

/// Approximate fixed point of f on the simplex: refine the Kuhn subdivision by
/// doubling n and return the barycentre of the first completely labeled cell
/// whose residual is within eps.
inline SpernerResult fixed_point_sperner(const funcspec::MapSpec& f, double eps,
                                         const SpernerLimits& limits = {}) {
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (f.domain().kind() != funcspec::Domain::Kind::Simplex) {
    throw Error(ErrorCode::ArityError, "Sperner search needs a map on a simplex");
  }
  const int m = f.domain().dimension();
  const double tol = limits.lipschitz && *limits.lipschitz < 1 ? eps * (1 - *limits.lipschitz) : eps;
  double best = INFINITY;
  for (int n = std::max(1, limits.start_n); n <= limits.max_n; n *= 2) {
    const Subdivision sub = subdivide(m, n, limits.subdivision);
    const Labeling lab = brouwer_labeling(f, sub);
    const auto cells = completely_labeled(sub, lab);
    for (std::size_t c : cells) {
      SimplexPoint p = sub.barycenter(c);
      const double r = residual(f, p.lambdas());
      best = std::min(best, r);
      if (r <= tol) return SpernerResult{std::move(p), r, n, c, cells.size()};
    }
    if (n > limits.max_n / 2) break;
  }
  throw Error(ErrorCode::ResourceLimit, "no completely labeled cell reached residual " +
                                            funcspec::format_number(tol) + " up to n=" +
                                            std::to_string(limits.max_n) + " (best " +
                                            funcspec::format_number(best) + ")");
}

}  // namespace hexpoint::sperner
