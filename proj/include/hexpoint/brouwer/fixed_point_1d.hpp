#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "hexpoint/error.hpp"
#include "hexpoint/funcspec/mapspec.hpp"

namespace hexpoint::brouwer {

struct Bisection1dOptions {
  int max_iterations = 200;
  bool record_brackets = false;
};

struct FixedPoint1d {
  double x = 0;
  double residual = 0;
  int iterations = 0;
  // (lo, hi) after every step when recording was requested.
  std::vector<std::pair<double, double>> brackets;
};

/// Bisection on g(x) = f(x) - x over [0,1]. Since f maps into [0,1],
/// g(0) >= 0 >= g(1), and the bracket keeps g(lo) >= 0 >= g(hi). Stops at a
/// midpoint with |g| <= tol once the bracket is at most 2 tol wide, so the
/// answer is also within tol of a fixed point inside the bracket. An endpoint
/// already within tol is returned as is.
inline FixedPoint1d fixed_point_1d(const funcspec::MapSpec& f, double tol,
                                   const Bisection1dOptions& options = {}) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (f.domain().kind() != funcspec::Domain::Kind::Interval) {
    throw Error(ErrorCode::ArityError, "fixed_point_1d needs a map on [0,1]");
  }
  auto g = [&f](double x) { return f({x})[0] - x; };

  FixedPoint1d out;
  const double g0 = g(0.0);
  if (std::fabs(g0) <= tol) {
    out.x = 0.0;
    out.residual = std::fabs(g0);
    return out;
  }
  const double g1 = g(1.0);
  if (std::fabs(g1) <= tol) {
    out.x = 1.0;
    out.residual = std::fabs(g1);
    return out;
  }

  double lo = 0.0, hi = 1.0;
  if (options.record_brackets) out.brackets.emplace_back(lo, hi);
  for (int it = 1; it <= options.max_iterations; ++it) {
    const double mid = lo + (hi - lo) / 2;
    const double gm = g(mid);
    out.iterations = it;
    if (std::fabs(gm) <= tol && hi - lo <= 2 * tol) {
      out.x = mid;
      out.residual = std::fabs(gm);
      return out;
    }
    if (gm >= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (options.record_brackets) out.brackets.emplace_back(lo, hi);
    if (hi - lo <= 0) break;
  }
  throw Error(ErrorCode::ResourceLimit, "bisection did not reach tolerance " +
                                            funcspec::format_number(tol) + " in " +
                                            std::to_string(options.max_iterations) +
                                            " steps; the map may be discontinuous");
}

}  // namespace hexpoint::brouwer
