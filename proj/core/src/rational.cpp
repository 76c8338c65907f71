#include "reebsurg/rational.hpp"

#include <boost/lexical_cast.hpp>

namespace reebsurg {

std::string to_string(const Q& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Q parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Q(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
    return Q(num, den);
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw ValidationError("not a rational number: '" + s + "'");
  }
}

bool is_integer(const Q& q) { return denominator(q) == 1; }

long long to_ll(const Q& q) {
  ensure(is_integer(q), "expected an integer, got " + to_string(q));
  return numerator(q).convert_to<long long>();
}

Q floor_q(const Q& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return Q(f);
}

int octant(const Point& d) {
  int sx = (d.x > 0) - (d.x < 0);
  int sy = (d.y > 0) - (d.y < 0);
  ensure(sx != 0 || sy != 0, "zero direction vector");
  ensure(sx == 0 || sy == 0 || abs(d.x) == abs(d.y), "direction is not a multiple of pi/4");
  static const int table[3][3] = {{5, 4, 3}, {6, -1, 2}, {7, 0, 1}};
  return table[sx + 1][sy + 1];
}

Point octant_vector(int k) {
  static const int v[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  k = ((k % 8) + 8) % 8;
  return {Q(v[k][0]), Q(v[k][1])};
}

int turn(int a, int b) {
  int d = ((b - a) % 8 + 8) % 8;
  if (d > 4) d -= 8;
  ensure(d != 4, "polyline reverses direction");
  return d;
}

}  // namespace reebsurg
