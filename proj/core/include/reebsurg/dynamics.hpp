#pragma once

#include "reebsurg/reeb_words.hpp"

#include <array>
#include <vector>

namespace reebsurg {

// Integer polynomial in u; coeffs[k] multiplies u^k.
struct IntPoly {
  std::vector<BigInt> coeffs;

  IntPoly() = default;
  explicit IntPoly(long long c);
  static IntPoly monomial(long long c, int degree);

  int degree() const;  // -1 for the zero polynomial
  BigInt leading() const;
  Q eval(const Q& u) const;
  void trim();
  bool operator==(const IntPoly& o) const;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
std::string to_string(const IntPoly& p);

using PolyMatrix = std::array<std::array<IntPoly, 2>, 2>;
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

struct ReturnMapPoly {
  int sign = 1;
  PolyMatrix entries;

  IntPoly trace() const;        // trace of sign * entries
  IntPoly determinant() const;  // determinant of sign * entries
};

using Vec2 = std::array<Q, 2>;
using Mat2 = std::array<std::array<Q, 2>, 2>;

struct AffineStep {
  Mat2 a;
  Vec2 b;
};

struct EmbeddingSolution {
  Q epsilon;
  std::vector<Vec2> points;  // (P_k, Q_k)
  Q action;
};

enum class HyperbolicType { Positive, Negative };

ReturnMapPoly return_map(const ResolvedDiagram& d, const CyclicWord& w);
int cz_mod2(const ResolvedDiagram& d, const CyclicWord& w);
std::pair<HyperbolicType, Q> hyperbolic_type(const ResolvedDiagram& d, const CyclicWord& w);
bool is_bad(const ResolvedDiagram& d, const CyclicWord& w);

// Offset d_{j1,j2}: capping arc length as a fraction of its component's length.
Q capping_offset(const ResolvedDiagram& d, int j1, int j2);
std::vector<AffineStep> affine_steps(const ResolvedDiagram& d, const CyclicWord& w, const Q& epsilon);
Vec2 apply_step(const AffineStep& s, const Vec2& v);
EmbeddingSolution embed_orbit(const ResolvedDiagram& d, const CyclicWord& w, const Q& epsilon);

// Twist potential in the linear zone of the piecewise-linear model.
Q twist_potential(const Q& p, const Q& epsilon);
Q orbit_action(const ResolvedDiagram& d, const CyclicWord& w, const Q& epsilon);
Q orbit_action(const ResolvedDiagram& d, const CyclicWord& w, const Q& epsilon, const std::vector<Vec2>& points);

}  // namespace reebsurg
