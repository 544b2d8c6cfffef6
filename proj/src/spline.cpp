#include "semsig/spline.hpp"

#include <algorithm>
#include <string>

#include "semsig/error.hpp"

namespace semsig {

SplineModel SplineModel::fit(std::span<const double> times, std::span<const double> values) {
  const std::size_t n = times.size();
  if (n != values.size()) {
    throw Error(ErrorCode::BadArgument, "spline knots and values differ in length");
  }
  if (n < 3) {
    throw Error(ErrorCode::TooShort,
                "cubic spline needs at least 3 knots, got " + std::to_string(n));
  }
  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = times[i + 1] - times[i];
    if (!(h[i] > 0.0)) {
      throw Error(ErrorCode::BadArgument, "spline knots must be strictly increasing", i + 1);
    }
  }

  // Tridiagonal system for the interior second derivatives M_1..M_{n-2};
  // M_0 = M_{n-1} = 0. Thomas algorithm, the matrix is diagonally dominant.
  std::vector<double> m(n, 0.0);
  const std::size_t k = n - 2;
  std::vector<double> diag(k), upper(k), rhs(k);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t i = r + 1;
    diag[r] = 2.0 * (h[i - 1] + h[i]);
    upper[r] = h[i];
    rhs[r] = 6.0 * ((values[i + 1] - values[i]) / h[i] -
                    (values[i] - values[i - 1]) / h[i - 1]);
  }
  for (std::size_t r = 1; r < k; ++r) {
    const double lower = h[r];  // sub-diagonal entry of row r is h_{i-1} = h[r]
    const double f = lower / diag[r - 1];
    diag[r] -= f * upper[r - 1];
    rhs[r] -= f * rhs[r - 1];
  }
  for (std::size_t r = k; r-- > 0;) {
    const double next = (r + 1 < k) ? m[r + 2] : 0.0;
    m[r + 1] = (rhs[r] - upper[r] * next) / diag[r];
  }

  SplineModel s;
  s.knots_.assign(times.begin(), times.end());
  s.pieces_.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double hi = h[i];
    s.pieces_[i] = {values[i],
                    (values[i + 1] - values[i]) / hi - hi * (2.0 * m[i] + m[i + 1]) / 6.0,
                    0.5 * m[i], (m[i + 1] - m[i]) / (6.0 * hi)};
  }
  return s;
}

std::size_t SplineModel::piece_index(double t) const noexcept {
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  const auto pos = static_cast<std::size_t>(it - knots_.begin());
  if (pos == 0) return 0;
  return std::min(pos - 1, pieces_.size() - 1);
}

double SplineModel::piece_derivative(std::size_t i, double t, int order) const noexcept {
  const Piece& p = pieces_[i];
  const double u = t - knots_[i];
  switch (order) {
    case 0: return p.a + u * (p.b + u * (p.c + u * p.d));
    case 1: return p.b + u * (2.0 * p.c + 3.0 * u * p.d);
    default: return 2.0 * p.c + 6.0 * u * p.d;
  }
}

double SplineModel::value(double t) const noexcept {
  return piece_derivative(piece_index(t), t, 0);
}

double SplineModel::derivative(double t) const noexcept {
  return piece_derivative(piece_index(t), t, 1);
}

double SplineModel::second_derivative(double t) const noexcept {
  return piece_derivative(piece_index(t), t, 2);
}

}  // namespace semsig
