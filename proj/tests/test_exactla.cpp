#include <gtest/gtest.h>

#include <random>

#include "trideg/error.hpp"
#include "trideg/exactla.hpp"

using trideg::la::Field;
using trideg::la::Matrix;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  Matrix m(r, c, p);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

}  // namespace

TEST(Field, RejectsComposite) {
  EXPECT_THROW(Field(4), trideg::InputError);
  EXPECT_THROW(Field(1), trideg::InputError);
  EXPECT_NO_THROW(Field(2147483647u));
}

TEST(Field, Arithmetic) {
  const Field f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.reduce(-1), 6u);
}

TEST(Rref, IdentityIsFixed) {
  const Matrix id = Matrix::identity(3, 2);
  const auto r = trideg::la::rref(id);
  EXPECT_EQ(r.reduced, id);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.rank, 3u);
}

TEST(Rref, ZeroMatrix) {
  const Matrix z(2, 4, 2);
  const auto r = trideg::la::rref(z);
  EXPECT_EQ(r.reduced, z);
  EXPECT_TRUE(r.pivots.empty());
  EXPECT_EQ(r.rank, 0u);
}

TEST(Rref, HandReduction) {
  const Matrix m(2, 2, 2, {1, 1, 1, 1});
  const auto r = trideg::la::rref(m);
  EXPECT_EQ(r.reduced, Matrix(2, 2, 2, {1, 1, 0, 0}));
  EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, Idempotent) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Matrix m = random_matrix(5, 7, 3, rng);
    const auto once = trideg::la::rref(m).reduced;
    EXPECT_EQ(trideg::la::rref(once).reduced, once);
  }
}

TEST(Solve, IdentityReturnsRhs) {
  std::mt19937_64 rng(1);
  const Matrix b = random_matrix(4, 2, 5, rng);
  auto x = trideg::la::solve(Matrix::identity(4, 5), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(Solve, ZeroSystemInconsistent) {
  Matrix b(3, 1, 2);
  b.set(1, 0, 1);
  EXPECT_FALSE(trideg::la::solve(Matrix(3, 3, 2), b));
}

TEST(Solve, DimensionMismatchThrows) {
  EXPECT_THROW(trideg::la::solve(Matrix(3, 3, 2), Matrix(2, 1, 2)), trideg::InputError);
}

TEST(Solve, RandomConsistentSystems) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Matrix a = random_matrix(6, 4, 3, rng);
    const Matrix x0 = random_matrix(4, 2, 3, rng);
    const Matrix b = a * x0;
    auto x = trideg::la::solve(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, b);
  }
}

TEST(Kernel, Identity) { EXPECT_EQ(trideg::la::kernel_basis(Matrix::identity(4, 3)).cols(), 0u); }

TEST(Kernel, ZeroMatrix) {
  const Matrix k = trideg::la::kernel_basis(Matrix(3, 3, 2));
  EXPECT_EQ(k.cols(), 3u);
  EXPECT_EQ(trideg::la::rank(k), 3u);
}

TEST(Kernel, BruteForceOverGF2) {
  const Matrix a(1, 2, 2, {1, 1});
  const Matrix k = trideg::la::kernel_basis(a);
  ASSERT_EQ(k.cols(), 1u);
  // Enumerate GF(2)^2: the only nonzero kernel vector is (1, 1).
  std::vector<std::vector<std::uint32_t>> found;
  for (std::uint32_t x = 0; x < 2; ++x)
    for (std::uint32_t y = 0; y < 2; ++y)
      if ((x + y) % 2 == 0 && (x | y)) found.push_back({x, y});
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(k.column(0), found[0]);
}

TEST(Kernel, RandomProperties) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::uint32_t p = (i % 2) ? 3 : 2;
    const Matrix a = random_matrix(4, 6, p, rng);
    const Matrix k = trideg::la::kernel_basis(a);
    EXPECT_TRUE((a * k).is_zero());
    EXPECT_EQ(k.cols(), a.cols() - trideg::la::rank(a));
    EXPECT_EQ(trideg::la::rank(k), k.cols());
  }
}
