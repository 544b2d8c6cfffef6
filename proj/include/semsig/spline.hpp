#ifndef SEMSIG_SPLINE_HPP
#define SEMSIG_SPLINE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace semsig {

/// Natural cubic spline (zero second derivative at both ends) through
/// strictly increasing knots. Piece i covers [t_i, t_{i+1}] and is
/// a + b u + c u^2 + d u^3 with u = t - t_i.
class SplineModel {
 public:
  struct Piece {
    double a, b, c, d;
  };

  /// Throws TooShort below 3 knots, BadArgument for non-increasing times.
  static SplineModel fit(std::span<const double> times, std::span<const double> values);

  std::span<const double> knots() const noexcept { return knots_; }
  std::span<const Piece> pieces() const noexcept { return pieces_; }
  double first_knot() const noexcept { return knots_.front(); }
  double last_knot() const noexcept { return knots_.back(); }

  /// Piece index used for t; times outside the knot range extend the end pieces.
  std::size_t piece_index(double t) const noexcept;

  double operator()(double t) const noexcept { return value(t); }
  double value(double t) const noexcept;
  double derivative(double t) const noexcept;
  double second_derivative(double t) const noexcept;

  /// Derivative of order 0..2 of piece i at t, for one-sided limits at knots.
  double piece_derivative(std::size_t i, double t, int order) const noexcept;

 private:
  std::vector<double> knots_;
  std::vector<Piece> pieces_;
};

}  // namespace semsig

#endif  // SEMSIG_SPLINE_HPP
