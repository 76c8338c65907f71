#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace reebsurg {

using Q = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Input that does not satisfy a documented precondition.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed object broke one of its own invariants.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

std::string to_string(const Q& q);  // "p/q", or "p" when integral
Q parse_rational(const std::string& s);
long long to_ll(const Q& q);  // requires an integral value
bool is_integer(const Q& q);
Q floor_q(const Q& q);

struct Point {
  Q x;
  Q y;
  bool operator==(const Point&) const = default;
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Q& s, const Point& a) { return {s * a.x, s * a.y}; }
inline Q cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline bool point_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Direction of a nonzero vector whose angle is a multiple of pi/4,
// returned as k with angle k*pi/4.
int octant(const Point& d);
Point octant_vector(int k);  // integer vector for octant k

// Turning from octant a to octant b, in (-4, 4).
int turn(int a, int b);

}  // namespace reebsurg
