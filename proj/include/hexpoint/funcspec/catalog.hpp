#pragma once

// Built-in maps with documented fixed points.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hexpoint/error.hpp"
#include "hexpoint/funcspec/mapspec.hpp"

namespace hexpoint::funcspec {

struct CatalogEntry {
  std::string name;
  MapSpec map;
  std::string description;
  // Fixed points known in closed form. When `unique_fixed_point` is set the
  // list holds the only one.
  std::vector<std::vector<double>> fixed_points;
  bool unique_fixed_point = false;
  // Max-norm Lipschitz bound, when one is known.
  std::optional<double> lipschitz;
  bool contraction = false;
};

namespace detail {

inline CatalogEntry entry(std::string name, std::string_view src, Domain domain, std::string description,
                          std::vector<std::vector<double>> fixed, bool unique,
                          std::optional<double> lipschitz, bool contraction = false) {
  return CatalogEntry{std::move(name), parse(src, domain), std::move(description), std::move(fixed),
                      unique, lipschitz, contraction};
}

inline CatalogEntry constant_map(double a, double b, std::string name) {
  const std::string src = format_number(a) + "; " + format_number(b);
  return entry(std::move(name), src, Domain::square(), "constant map to (" + format_number(a) + ", " +
                                                           format_number(b) + ")",
               {{a, b}}, true, 0.0, true);
}

inline CatalogEntry contraction_map(double a, double b, std::string name) {
  const std::string src =
      "(x + " + format_number(a) + ") / 2; (y + " + format_number(b) + ") / 2";
  return entry(std::move(name), src, Domain::square(),
               "halving contraction towards (" + format_number(a) + ", " + format_number(b) + ")",
               {{a, b}}, true, 0.5, true);
}

inline std::optional<std::pair<double, double>> parse_params(std::string_view name,
                                                             std::string_view prefix) {
  if (name.size() <= prefix.size() + 2 || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
  const std::string inner(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
  const auto comma = inner.find(',');
  if (comma == std::string::npos) return std::nullopt;
  char* end = nullptr;
  const std::string first = inner.substr(0, comma);
  const std::string second = inner.substr(comma + 1);
  const double a = std::strtod(first.c_str(), &end);
  if (end == first.c_str() || *end != '\0') return std::nullopt;
  const double b = std::strtod(second.c_str(), &end);
  if (end == second.c_str() || *end != '\0') return std::nullopt;
  if (!(a >= 0 && a <= 1 && b >= 0 && b <= 1)) return std::nullopt;
  return std::make_pair(a, b);
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  using detail::entry;
  static const std::vector<CatalogEntry> maps = [] {
    const double cos_fixed = 0.7390851332151607;  // root of cos(x) = x
    std::vector<CatalogEntry> v;
    // Unit square.
    v.push_back(entry("identity", "x; y", Domain::square(), "identity on the unit square", {}, false, 1.0));
    v.push_back(detail::constant_map(0.3, 0.6, "const"));
    v.push_back(entry("rotation180", "1 - x; 1 - y", Domain::square(),
                      "half turn about the centre of the square", {{0.5, 0.5}}, true, 1.0));
    v.push_back(detail::contraction_map(0.5, 0.25, "contraction"));
    v.push_back(entry("shear-clamped", "clamp01(x + 0.5 * y - 0.25); y", Domain::square(),
                      "horizontal shear clamped to the square; fixed on the line y = 0.5, on x = 1 "
                      "for y >= 0.5 and on x = 0 for y <= 0.5",
                      {{0.2, 0.5}, {1.0, 0.9}, {0.0, 0.1}}, false, 1.5));
    // Interval.
    v.push_back(entry("identity1d", "x", Domain::interval(), "identity on [0,1]", {}, false, 1.0));
    v.push_back(entry("flip1d", "1 - x", Domain::interval(), "reflection about 1/2", {{0.5}}, true, 1.0));
    v.push_back(entry("const1d", "0.3", Domain::interval(), "constant 0.3", {{0.3}}, true, 0.0, true));
    v.push_back(entry("contraction1d", "(x + 0.3) / 2", Domain::interval(),
                      "halving contraction towards 0.3", {{0.3}}, true, 0.5, true));
    v.push_back(entry("logistic", "3.2 * x * (1 - x)", Domain::interval(),
                      "logistic map r = 3.2; fixed at 0 and 1 - 1/3.2", {{0.0}, {0.6875}}, false, 3.2));
    v.push_back(entry("logistic-half", "(x + x * x) / 2", Domain::interval(),
                      "average of x and x^2; fixed at 0 and 1", {{0.0}, {1.0}}, false, 1.5));
    v.push_back(entry("cosine", "cos(x)", Domain::interval(), "cos on [0,1]; fixed at the Dottie number",
                      {{cos_fixed}}, true, std::sin(1.0), true));
    // Simplices.
    v.push_back(entry("simplex-identity", "l0; l1; l2", Domain::simplex(2), "identity on the 2-simplex",
                      {}, false, 1.0));
    v.push_back(entry("simplex-rotation", "l2; l0; l1", Domain::simplex(2),
                      "cyclic coordinate rotation; fixed at the barycentre",
                      {{1.0 / 3, 1.0 / 3, 1.0 / 3}}, true, 1.0));
    v.push_back(entry("simplex-constant", "0.2; 0.3; 0.5", Domain::simplex(2),
                      "constant map to (0.2, 0.3, 0.5)", {{0.2, 0.3, 0.5}}, true, 0.0, true));
    v.push_back(entry("simplex-contraction", "(l0 + 0.5) / 2; (l1 + 0.25) / 2; (l2 + 0.25) / 2",
                      Domain::simplex(2), "halving contraction towards (0.5, 0.25, 0.25)",
                      {{0.5, 0.25, 0.25}}, true, 0.5, true));
    v.push_back(entry("simplex1-flip", "l1; l0", Domain::simplex(1),
                      "reflection of the 1-simplex; same map as flip1d under x = l1", {{0.5, 0.5}}, true,
                      1.0));
    v.push_back(entry("simplex1-contraction", "(l0 + 0.7) / 2; (l1 + 0.3) / 2", Domain::simplex(1),
                      "contraction1d under x = l1", {{0.7, 0.3}}, true, 0.5, true));
    return v;
  }();
  return maps;
}

/// Looks up a built-in map. Besides the fixed names, `const(a,b)` and
/// `contraction(a,b)` with a, b in [0,1] build parametrised square maps.
inline CatalogEntry lookup(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  if (auto p = detail::parse_params(name, "const")) {
    return detail::constant_map(p->first, p->second, std::string(name));
  }
  if (auto p = detail::parse_params(name, "contraction")) {
    return detail::contraction_map(p->first, p->second, std::string(name));
  }
  throw Error(ErrorCode::NotFound, "no catalog map named '" + std::string(name) + "'");
}

}  // namespace hexpoint::funcspec
