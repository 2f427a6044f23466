#ifndef HAAR_NEWTON_QUADRATURE_HPP
#define HAAR_NEWTON_QUADRATURE_HPP

#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>

namespace haar_newton {

/// Node count of the Haar quadrature rule.
///
/// Built from a resolution level J1 the rule uses M = 2^J1 and P = 2M nodes.
/// from_points() accepts any P >= 1, in which case level() and m() are empty.
class Resolution {
 public:
  static Resolution from_level(unsigned j1);
  static Resolution from_points(std::size_t points);

  std::size_t points() const { return points_; }
  std::optional<unsigned> level() const { return j1_; }
  std::optional<std::size_t> m() const { return m_; }

 private:
  Resolution(std::size_t points, std::optional<unsigned> j1, std::optional<std::size_t> m)
      : points_(points), j1_(j1), m_(m) {}

  std::size_t points_;
  std::optional<unsigned> j1_;
  std::optional<std::size_t> m_;
};

/// 2 * 2^j1. Throws std::overflow_error if that does not fit std::size_t.
std::size_t resolution_points(unsigned j1);

/// Haar wavelet approximation of the integral of g over [a, b]:
///
///   (b - a)/P * sum_{k=1..P} g(a + (b - a)(k - 0.5)/P)
///
/// Calls g exactly P times, accumulating left to right. Returns exactly 0
/// when a == b. Throws std::invalid_argument if points == 0.
template <typename G>
  requires std::regular_invocable<G&, double>
double haar_indefinite_integral(G&& g, double a, double b, std::size_t points) {
  if (points == 0) throw std::invalid_argument("quadrature needs at least one node");
  const double width = b - a;
  const double p = static_cast<double>(points);
  double sum = 0.0;
  for (std::size_t k = 1; k <= points; ++k) {
    sum += g(a + width * ((static_cast<double>(k) - 0.5) / p));
  }
  if (width == 0.0) return 0.0;
  return width / p * sum;
}

}  // namespace haar_newton

#endif  // HAAR_NEWTON_QUADRATURE_HPP
