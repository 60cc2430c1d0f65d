#include "qgain/qmatrix.hpp"

#include <sstream>

namespace qgg {

namespace {

double modulus(const FloatQuaternion& q) { return std::sqrt(norm_sq(q)); }

}  // namespace

std::size_t row_left_rank_float(FloatMatrix a, double pivot_tol) {
  if (!(pivot_tol > 0.0)) throw std::invalid_argument("row_left_rank_float: pivot_tol must be > 0");
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  double scale = 0.0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) scale = std::max(scale, modulus(a(r, c)));
  if (scale == 0.0) return 0;
  const double threshold = pivot_tol * scale;

  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    double best = threshold;
    for (Eigen::Index r = rank; r < rows; ++r) {
      const double m = modulus(a(r, col));
      if (m > best) {
        best = m;
        pivot = r;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    const FloatQuaternion pivot_inv = inverse(a(rank, col));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const FloatQuaternion factor = -(a(r, col) * pivot_inv);
      a(r, col) = FloatQuaternion();
      for (Eigen::Index c = col + 1; c < cols; ++c) a(r, c) += factor * a(rank, c);
    }
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

FloatMatrix to_float(const ExactMatrix& a) {
  FloatMatrix out(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) out(r, c) = to_float(a(r, c));
  return out;
}

std::string dump(const ExactMatrix& a) {
  std::ostringstream out;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (c) out << ' ';
      out << to_token(a(r, c));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qgg
