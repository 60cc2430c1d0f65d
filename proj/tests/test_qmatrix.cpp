#include <gtest/gtest.h>

#include <cmath>

#include "qgain/qmatrix.hpp"
#include "qgain/sampling.hpp"

using namespace qgg;

namespace {

const ExactQuaternion kOne = ExactQuaternion::identity();
const ExactQuaternion kI = ExactQuaternion::i();
const ExactQuaternion kJ = ExactQuaternion::j();
const ExactQuaternion kK = ExactQuaternion::k();

ExactMatrix mat2(const ExactQuaternion& a, const ExactQuaternion& b, const ExactQuaternion& c,
                 const ExactQuaternion& d) {
  ExactMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

ExactMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  ExactMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = random_cayley_unit(rng, 4);
  return m;
}

}  // namespace

TEST(QMatrix, MultiplyKeepsFactorOrder) {
  ExactMatrix a(1, 1), b(1, 1);
  a(0, 0) = kI;
  b(0, 0) = kJ;
  EXPECT_EQ(multiply(a, b)(0, 0), kK);
  EXPECT_EQ(multiply(b, a)(0, 0), -kK);
}

TEST(QMatrix, LeftDependentRows) {
  // row 2 = j * row 1
  const ExactMatrix m = mat2(kOne, kI, kJ, kJ * kI);
  EXPECT_EQ(row_left_rank(m), 1u);
  EXPECT_EQ(column_right_rank(m), 1u);
  EXPECT_EQ(complex_rank(complex_adjoint(m)), 2u);
}

TEST(QMatrix, RightDependentRowsAreIndependent) {
  // row 2 = row 1 * j, which is not a left combination
  const ExactMatrix m = mat2(kOne, kI, kJ, kI * kJ);
  EXPECT_EQ(row_left_rank(m), 2u);
  EXPECT_EQ(column_right_rank(m), 2u);
  EXPECT_EQ(complex_rank(complex_adjoint(m)), 4u);
}

TEST(QMatrix, ZeroAndIdentity) {
  ExactMatrix z(3, 4);
  EXPECT_EQ(row_left_rank(z), 0u);
  EXPECT_EQ(column_right_rank(z), 0u);
  ExactMatrix id(3, 3);
  for (int t = 0; t < 3; ++t) id(t, t) = kOne;
  EXPECT_EQ(row_left_rank(id), 3u);
  EXPECT_EQ(row_left_rank(ExactMatrix(0, 0)), 0u);
}

TEST(QMatrix, AdjointIsMultiplicative) {
  Rng rng(5);
  const ExactMatrix a = random_matrix(2, 3, rng);
  const ExactMatrix b = random_matrix(3, 2, rng);
  EXPECT_TRUE(complex_adjoint(multiply(a, b)) == multiply(complex_adjoint(a), complex_adjoint(b)));
}

TEST(QMatrix, LowRankProductsAgreeAcrossRoutes) {
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const Eigen::Index rows = rng.uniform(1, 5);
    const Eigen::Index cols = rng.uniform(1, 5);
    const Eigen::Index inner = rng.uniform(1, 4);
    const ExactMatrix m = multiply(random_matrix(rows, inner, rng), random_matrix(inner, cols, rng));
    const std::size_t left = row_left_rank(m);
    EXPECT_LE(left, static_cast<std::size_t>(std::min({rows, cols, inner})));
    EXPECT_EQ(left, column_right_rank(m));
    EXPECT_EQ(2 * left, complex_rank(complex_adjoint(m)));
  }
}

TEST(QMatrix, HermitianDetection) {
  const ExactMatrix h = mat2(ExactQuaternion(), kI, -kI, ExactQuaternion());
  EXPECT_TRUE(is_hermitian(h));
  EXPECT_TRUE(conjugate_transpose(h) == h);
  EXPECT_FALSE(is_hermitian(mat2(ExactQuaternion(), kI, kI, ExactQuaternion())));
}

TEST(QMatrix, FloatRankWithTolerance) {
  const double s = 1.0 / std::sqrt(2.0);
  FloatMatrix m(2, 2);
  m(0, 0) = FloatQuaternion(s, 0, 0, s);
  m(0, 1) = FloatQuaternion(0, 1, 0, 0);
  m(1, 0) = FloatQuaternion(0, 0, 1, 0) * m(0, 0);
  m(1, 1) = FloatQuaternion(0, 0, 1, 0) * m(0, 1);
  EXPECT_EQ(row_left_rank_float(m), 1u);
  m(1, 1) += FloatQuaternion(1e-3, 0, 0, 0);
  EXPECT_EQ(row_left_rank_float(m), 2u);
  EXPECT_EQ(row_left_rank_float(m, 0.5), 1u);
}

TEST(QMatrix, FloatMatchesExactOnRandomMatrices) {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const ExactMatrix m = multiply(random_matrix(4, 2, rng), random_matrix(2, 4, rng));
    EXPECT_EQ(row_left_rank_float(to_float(m)), row_left_rank(m));
  }
}
