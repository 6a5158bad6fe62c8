#include <gtest/gtest.h>

#include <cmath>

#include "hexpoint/brouwer/covering.hpp"
#include "hexpoint/funcspec/catalog.hpp"

using namespace hexpoint;
using namespace hexpoint::brouwer;
using hexpoint::hex::Coord;

namespace {

funcspec::MapSpec map2(const char* src) { return funcspec::parse(src, funcspec::Domain::square()); }

std::vector<Coord> cells_where(int k, auto pred) {
  std::vector<Coord> out;
  for (int z2 = 1; z2 <= k; ++z2)
    for (int z1 = 1; z1 <= k; ++z1)
      if (pred(z1, z2)) out.push_back({z1, z2});
  return out;
}

}  // namespace

TEST(CoveringSets, IdentityIsEmpty) {
  for (int k : {1, 5, 17}) {
    const auto cs = covering_sets(map2("x; y"), k, 0.01);
    EXPECT_TRUE(cs.hplus.empty() && cs.hminus.empty() && cs.vplus.empty() && cs.vminus.empty());
    EXPECT_EQ(counts(cs).uncovered, static_cast<std::size_t>(k * k));
  }
}

TEST(CoveringSets, ConstantCorner) {
  const auto cs = covering_sets(map2("1; 1"), 10, 0.1);
  EXPECT_EQ(cs.hplus, cells_where(10, [](int z1, int) { return z1 <= 8; }));
  EXPECT_TRUE(cs.hminus.empty());
  EXPECT_EQ(cs.vplus, cells_where(10, [](int, int z2) { return z2 <= 8; }));
  EXPECT_TRUE(cs.vminus.empty());
}

TEST(CoveringSets, HalvedHeight) {
  const auto cs = covering_sets(map2("x; y / 2"), 10, 0.1);
  EXPECT_EQ(cs.vminus, cells_where(10, [](int, int z2) { return z2 >= 3; }));
  EXPECT_TRUE(cs.vplus.empty());
  EXPECT_TRUE(cs.hplus.empty());
  EXPECT_TRUE(cs.hminus.empty());
}

TEST(CoveringSets, Errors) {
  EXPECT_THROW(covering_sets(map2("x; y"), 0, 0.1), Error);
  EXPECT_THROW(covering_sets(map2("x; y"), 4, 0), Error);
  EXPECT_THROW(covering_sets(funcspec::parse("x", 1), 4, 0.1), Error);
}

TEST(Noncontiguity, CatalogMapsWithLipschitzBound) {
  for (const auto& e : funcspec::catalog()) {
    if (e.map.domain().kind() != funcspec::Domain::Kind::Square || !e.lipschitz) continue;
    for (double eps : {0.1, 0.05, 0.01}) {
      const int k = static_cast<int>(std::floor(2 / eps)) + 1;
      EXPECT_TRUE(check_noncontiguity(covering_sets(e.map, k, eps))) << e.name << " eps=" << eps;
    }
  }
}

TEST(Noncontiguity, MergedSetsFromDifferentMaps) {
  const int k = 10;
  auto cs = covering_sets(map2("1; 0.5"), k, 0.1);
  cs.hminus = covering_sets(map2("0; 0.5"), k, 0.1).hminus;
  const auto hit = find_contiguity(cs);
  ASSERT_TRUE(hit.has_value());
  EXPECT_TRUE(hex::adjacent(hit->first, hit->second));
  EXPECT_FALSE(check_noncontiguity(cs));
}

TEST(Noncontiguity, CanFailForCoarseLattices) {
  // A steep map on a lattice coarser than its modulus of continuity.
  const auto cs = covering_sets(map2("clamp01(10 * (0.6 - x) + 0.5); y"), 4, 0.1);
  EXPECT_FALSE(check_noncontiguity(cs));
}

TEST(FixedPoint2dHex, Identity) {
  const auto r = fixed_point_2d_hex(map2("x; y"), 0.01);
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_EQ(r.k, 8);
  EXPECT_EQ(r.z, (Coord{1, 1}));
  EXPECT_EQ(r.x, 1.0 / 8);
}

TEST(FixedPoint2dHex, Rotation) {
  const auto r = fixed_point_2d_hex(funcspec::lookup("rotation180").map, 1e-2);
  EXPECT_LE(r.residual, 1e-2);
  EXPECT_NEAR(r.x, 0.5, 1e-2);
  EXPECT_NEAR(r.y, 0.5, 1e-2);
}

TEST(FixedPoint2dHex, Contraction) {
  const double eps = 1e-3;
  const auto r = fixed_point_2d_hex(map2("(x + 0.5) / 2; (y + 0.25) / 2"), eps);
  EXPECT_LE(r.residual, eps);
  // |p - p*| <= |f(p) - p| / (1 - 1/2) for this contraction.
  EXPECT_LE(std::max(std::fabs(r.x - 0.5), std::fabs(r.y - 0.25)), 2 * r.residual + 1e-15);
}

TEST(FixedPoint2dHex, ContractionWithBound) {
  // Off-lattice fixed point, so the guarantee comes from the bound alone.
  const auto e = funcspec::lookup("contraction(0.37,0.61)");
  HexFixedPointOptions opts;
  opts.lipschitz = e.lipschitz;
  const auto r = fixed_point_2d_hex(e.map, 1e-2, opts);
  EXPECT_DOUBLE_EQ(r.tolerance, 1e-2 * (1 - *e.lipschitz));
  EXPECT_LE(r.residual, r.tolerance);
  EXPECT_LE(std::max(std::fabs(r.x - 0.37), std::fabs(r.y - 0.61)), 1e-2);
}

TEST(FixedPoint2dHex, LipschitzSizing) {
  EXPECT_EQ(lattice_size_for(0.1, 1.0), 11);
  EXPECT_EQ(lattice_size_for(0.1, 2.0), 21);
  EXPECT_EQ(lattice_size_for(0.1, 0.5), 11);
  HexFixedPointOptions opts;
  opts.lipschitz = 1.5;
  const auto r = fixed_point_2d_hex(funcspec::lookup("shear-clamped").map, 0.05, opts);
  EXPECT_EQ(r.k, lattice_size_for(0.05, 1.5));
  EXPECT_LE(r.residual, 0.05);
}

TEST(FixedPoint2dHex, CountsMatchSets) {
  const auto f = funcspec::lookup("rotation180").map;
  const auto r = fixed_point_2d_hex(f, 0.05);
  const auto c = counts(covering_sets(f, r.k, 0.05));
  EXPECT_EQ(r.counts.hplus, c.hplus);
  EXPECT_EQ(r.counts.uncovered, c.uncovered);
  EXPECT_GT(r.counts.uncovered, 0u);
}

TEST(FixedPoint2dHex, ResourceLimit) {
  HexFixedPointOptions opts;
  opts.max_k = 64;
  try {
    fixed_point_2d_hex(map2("0.3; 0.7"), 1e-6, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
  }
  EXPECT_THROW(fixed_point_2d_hex(map2("x; y"), -1), Error);
}

TEST(FixedPoint2dHex, SquareCatalogResiduals) {
  for (const auto& e : funcspec::catalog()) {
    if (e.map.domain().kind() != funcspec::Domain::Kind::Square) continue;
    HexFixedPointOptions opts;
    opts.lipschitz = e.lipschitz;
    const auto r = fixed_point_2d_hex(e.map, 1e-2, opts);
    EXPECT_LE(r.residual, 1e-2) << e.name;
  }
}
