#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hexpoint/sperner/subdivision.hpp"

using namespace hexpoint;
using namespace hexpoint::sperner;

namespace {

long long binomial(int n, int k) {
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Integer determinant by cofactor expansion; m <= 3 here.
long long det(std::vector<std::vector<long long>> a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  long long d = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(a[r][c]);
      minor.push_back(row);
    }
    d += (col % 2 ? -1 : 1) * a[0][col] * det(minor);
  }
  return d;
}

}  // namespace

TEST(Support, Examples) {
  EXPECT_EQ(support(SimplexPoint({1, 0, 0})), (std::vector<int>{0}));
  EXPECT_EQ(support(SimplexPoint({1.0 / 3, 1.0 / 3, 1.0 / 3})), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(support(SimplexPoint({0.5, 0.5, 0})), (std::vector<int>{0, 1}));
}

TEST(SimplexPoint, Validation) {
  EXPECT_THROW(SimplexPoint({0.5, 0.6}), Error);
  EXPECT_THROW(SimplexPoint({-0.1, 1.1}), Error);
  EXPECT_THROW(SimplexPoint({1.0}), Error);
}

TEST(Subdivide, Counts) {
  auto s = subdivide(1, 4);
  EXPECT_EQ(s.vertex_count(), 5u);
  EXPECT_EQ(s.cell_count(), 4u);
  s = subdivide(2, 2);
  EXPECT_EQ(s.vertex_count(), 6u);
  EXPECT_EQ(s.cell_count(), 4u);
  s = subdivide(2, 8);
  EXPECT_EQ(s.vertex_count(), 45u);
  EXPECT_EQ(s.cell_count(), 64u);
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 6; ++n) {
      s = subdivide(m, n);
      long long cells = 1;
      for (int i = 0; i < m; ++i) cells *= n;
      EXPECT_EQ(static_cast<long long>(s.vertex_count()), binomial(n + m, m));
      EXPECT_EQ(static_cast<long long>(s.cell_count()), cells);
    }
  }
}

TEST(Subdivide, VerticesAreTheLatticePoints) {
  for (int m = 1; m <= 3; ++m) {
    const int n = 5;
    const auto s = subdivide(m, n);
    std::set<std::vector<int>> seen;
    for (std::size_t id = 0; id < s.vertex_count(); ++id) {
      const auto v = s.vertex(id);
      int sum = 0;
      for (int x : v) {
        EXPECT_GE(x, 0);
        sum += x;
      }
      EXPECT_EQ(sum, n);
      seen.insert(std::vector<int>(v.begin(), v.end()));
    }
    EXPECT_EQ(seen.size(), s.vertex_count());
  }
}

TEST(Subdivide, MeshShrinks) {
  for (int m = 1; m <= 3; ++m)
    for (int n : {1, 2, 4, 8}) EXPECT_LE(subdivide(m, n).mesh(), 1.0 / n + 1e-15);
}

TEST(Subdivide, CellsTileTheSimplex) {
  // Each cell is a unimodular lattice simplex, so the cells cover n^m units
  // of volume; every facet is shared by two cells unless it lies on the
  // boundary, where it belongs to exactly one.
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= (m == 3 ? 5 : 8); ++n) {
      const auto s = subdivide(m, n);
      std::map<std::vector<std::size_t>, int> facets;
      for (std::size_t c = 0; c < s.cell_count(); ++c) {
        const auto ids = s.cell(c);
        const auto v0 = s.vertex(ids[0]);
        std::vector<std::vector<long long>> rows;
        for (std::size_t j = 1; j < ids.size(); ++j) {
          const auto vj = s.vertex(ids[j]);
          std::vector<long long> row;
          for (int i = 0; i < m; ++i) row.push_back(vj[static_cast<std::size_t>(i)] - v0[static_cast<std::size_t>(i)]);
          rows.push_back(row);
        }
        EXPECT_EQ(std::llabs(det(rows)), 1) << "m=" << m << " n=" << n << " cell " << c;
        for (std::size_t skip = 0; skip < ids.size(); ++skip) {
          std::vector<std::size_t> f;
          for (std::size_t j = 0; j < ids.size(); ++j)
            if (j != skip) f.push_back(ids[j]);
          std::sort(f.begin(), f.end());
          ++facets[f];
        }
      }
      for (const auto& [f, count] : facets) {
        bool boundary = false;
        for (int i = 0; i <= m; ++i) {
          bool all_zero = true;
          for (auto id : f) all_zero &= s.vertex(id)[static_cast<std::size_t>(i)] == 0;
          boundary |= all_zero;
        }
        EXPECT_EQ(count, boundary ? 1 : 2);
      }
    }
  }
}

TEST(Subdivide, DumpFormat) {
  const auto s = subdivide(1, 2);
  EXPECT_EQ(s.dump(), "v 0 2 0\nv 1 1 1\nv 2 0 2\nc 0 0 1\nc 1 1 2\n");
}

TEST(Subdivide, Limits) {
  EXPECT_THROW(subdivide(0, 4), Error);
  EXPECT_THROW(subdivide(2, 0), Error);
  try {
    subdivide(3, 100000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
  }
}

TEST(Subdivide, Barycenter) {
  const auto s = subdivide(2, 1);
  const auto b = s.barycenter(0);
  for (double l : b.lambdas()) EXPECT_NEAR(l, 1.0 / 3, 1e-15);
}
