#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace onedraw {

using Rational = boost::multiprecision::mpq_rational;

struct GridPoint {
  long long x = 0;
  long long y = 0;
  bool operator==(const GridPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const GridPoint& o) const { return !(*this == o); }
};

struct RPoint {
  Rational x, y;
  RPoint() = default;
  RPoint(Rational a, Rational b) : x(std::move(a)), y(std::move(b)) {}
  bool operator==(const RPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const RPoint& o) const { return !(*this == o); }
};

// Compass ports in counter-clockwise order.
enum class Port { E = 0, N = 1, W = 2, S = 3 };

inline int dir_dx(int d) { return d == 0 ? 1 : d == 2 ? -1 : 0; }
inline int dir_dy(int d) { return d == 1 ? 1 : d == 3 ? -1 : 0; }
inline Port opposite(Port p) { return static_cast<Port>((static_cast<int>(p) + 2) % 4); }
const char* port_name(Port p);
// Port for a unit axis direction; throws on a non-axis vector.
Port port_of(int dx, int dy);
template <class T>
int sgn(const T& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// "p" or "p/q".
std::string to_string(const Rational& r);

}  // namespace onedraw
