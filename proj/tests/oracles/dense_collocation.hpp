#pragma once

// Classical collocation for the integer-order linear problem
//
//   a2(x) z'' + a1(x) z' + a0(x) z = f(x),   z(0) = g0, z(theta) = g1, z(1) = g2
//
// on monomials of degree <= m: three boundary rows plus one row per node
// x_j = (j + offset)/m, j = 0..m-2, solved in the least-squares sense.

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

struct LinearBvp {
  long double theta;
  long double g0, g1, g2;
  std::function<long double(long double)> a0, a1, a2, f;
};

/// Ascending monomial coefficients of the least-squares solution.
inline std::vector<long double> dense_collocation(const LinearBvp& p, int m, long double offset) {
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const int cols = m + 1;
  const int rows = 3 + (m - 1);
  Mat a = Mat::Zero(rows, cols);
  Vec b(rows);
  auto value_row = [&](int r, long double x, long double v) {
    long double pw = 1;
    for (int k = 0; k < cols; ++k, pw *= x) a(r, k) = pw;
    b(r) = v;
  };
  value_row(0, 0, p.g0);
  value_row(1, p.theta, p.g1);
  value_row(2, 1, p.g2);
  for (int j = 0; j <= m - 2; ++j) {
    const long double x = (j + offset) / m;
    const int r = 3 + j;
    for (int k = 0; k < cols; ++k) {
      const long double v = std::pow(x, static_cast<long double>(k));
      const long double d1 = k >= 1 ? k * std::pow(x, static_cast<long double>(k - 1)) : 0;
      const long double d2 = k >= 2 ? k * (k - 1) * std::pow(x, static_cast<long double>(k - 2)) : 0;
      a(r, k) = p.a2(x) * d2 + p.a1(x) * d1 + p.a0(x) * v;
    }
    b(r) = p.f(x);
  }
  const Vec c = a.colPivHouseholderQr().solve(b);
  return std::vector<long double>(c.data(), c.data() + c.size());
}

inline long double eval_monomials(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace oracle
