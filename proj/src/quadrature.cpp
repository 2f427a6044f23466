#include "haar_newton/quadrature.hpp"

#include <limits>

namespace haar_newton {

std::size_t resolution_points(unsigned j1) {
  // 2 * 2^j1 == 2^(j1 + 1) must stay below the top bit of size_t.
  if (j1 + 1 >= static_cast<unsigned>(std::numeric_limits<std::size_t>::digits)) {
    throw std::overflow_error("resolution level too large for the node count");
  }
  return std::size_t{2} << j1;
}

Resolution Resolution::from_level(unsigned j1) {
  const std::size_t points = resolution_points(j1);
  return Resolution(points, j1, points / 2);
}

Resolution Resolution::from_points(std::size_t points) {
  if (points == 0) throw std::invalid_argument("quadrature needs at least one node");
  return Resolution(points, std::nullopt, std::nullopt);
}

}  // namespace haar_newton
