#include "reebsurg/dynamics.hpp"

#include "reebsurg/indices.hpp"

#include <algorithm>

namespace reebsurg {

IntPoly::IntPoly(long long c) {
  if (c != 0) coeffs.push_back(BigInt(c));
}

IntPoly IntPoly::monomial(long long c, int degree) {
  IntPoly p;
  if (c == 0) return p;
  p.coeffs.assign(degree + 1, BigInt(0));
  p.coeffs[degree] = c;
  return p;
}

void IntPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

int IntPoly::degree() const { return static_cast<int>(coeffs.size()) - 1; }

BigInt IntPoly::leading() const { return coeffs.empty() ? BigInt(0) : coeffs.back(); }

Q IntPoly::eval(const Q& u) const {
  Q s = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * u + Q(*it);
  return s;
}

bool IntPoly::operator==(const IntPoly& o) const {
  IntPoly a = *this, b = o;
  a.trim();
  b.trim();
  return a.coeffs == b.coeffs;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), BigInt(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly nb = b;
  for (auto& c : nb.coeffs) c = -c;
  return a + nb;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  r.trim();
  return r;
}

std::string to_string(const IntPoly& p) {
  if (p.coeffs.empty()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    BigInt c = p.coeffs[k];
    if (c == 0) continue;
    bool neg = c < 0;
    BigInt a = neg ? BigInt(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (k == 0 || a != 1) s += a.str();
    if (k >= 1) s += "u";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

IntPoly ReturnMapPoly::trace() const { return IntPoly(sign) * (entries[0][0] + entries[1][1]); }

IntPoly ReturnMapPoly::determinant() const {
  // the sign squares away
  return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
}

namespace {

int tip_coefficient(const ResolvedDiagram& d, int j) { return d.coefficient(d.chords.at(j).tip_component); }

void require_orbit_word(const ResolvedDiagram& d, const CyclicWord& w) {
  if (w.length() == 0) throw ValidationError("empty word");
  for (int j : w.word.chords) {
    const auto& c = d.chords.at(j);
    if (d.coefficient(c.tip_component) == 0 || d.coefficient(c.tail_component) == 0)
      throw ValidationError("word " + word_name(w.word.chords) + " touches a component without surgery");
  }
}

Q chebyshev(const Point& a, const Point& b) { return std::max(abs(b.x - a.x), abs(b.y - a.y)); }

Q arc_coordinate(const ResolvedDiagram& d, const ArcPos& p) {
  const auto& v = d.components[p.component];
  Q s = 0;
  for (int i = 0; i < p.segment; ++i) s += chebyshev(v[i], v[i + 1]);
  return s + p.t * chebyshev(v[p.segment], v[(p.segment + 1) % v.size()]);
}

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

}  // namespace

ReturnMapPoly return_map(const ResolvedDiagram& d, const CyclicWord& w) {
  require_orbit_word(d, w);
  const auto& c = w.word.chords;
  ReturnMapPoly r;
  r.entries = {{{IntPoly(1), IntPoly(0)}, {IntPoly(0), IntPoly(1)}}};
  long long rot = 0;
  for (size_t k = 0; k < c.size(); ++k) {
    rot += rotation_number(d, c[k], c[(k + 1) % c.size()]);
    PolyMatrix step = {{{IntPoly(0), IntPoly(-1)}, {IntPoly(1), IntPoly::monomial(-tip_coefficient(d, c[k]), 1)}}};
    r.entries = step * r.entries;
  }
  r.sign = rot % 2 == 0 ? 1 : -1;
  return r;
}

int cz_mod2(const ResolvedDiagram& d, const CyclicWord& w) {
  require_orbit_word(d, w);
  const auto& c = w.word.chords;
  long long s = 0;
  for (size_t k = 0; k < c.size(); ++k) {
    s += rotation_number(d, c[k], c[(k + 1) % c.size()]);
    if (tip_coefficient(d, c[k]) == 1) s += 1;
  }
  return static_cast<int>(((s % 2) + 2) % 2);
}

std::pair<HyperbolicType, Q> hyperbolic_type(const ResolvedDiagram& d, const CyclicWord& w) {
  IntPoly tr = return_map(d, w).trace();
  ensure(tr.degree() == static_cast<int>(w.length()), "trace degree differs from word length");
  ensure(abs(tr.leading()) == 1, "leading trace coefficient is not a unit");
  BigInt sum = 0;
  for (int k = 0; k < tr.degree(); ++k) sum += abs(tr.coeffs[k]);
  Q eps = std::min(Q(1, 2), Q(BigInt(1), BigInt(2) + sum));
  HyperbolicType type = cz_mod2(d, w) == 0 ? HyperbolicType::Positive : HyperbolicType::Negative;
  ensure((tr.leading() > 0) == (type == HyperbolicType::Positive), "trace sign disagrees with the mod 2 index");
  return {type, eps};
}

bool is_bad(const ResolvedDiagram& d, const CyclicWord& w) {
  auto [prim, k] = primitive_decomposition(w);
  return k % 2 == 0 && hyperbolic_type(d, prim).first == HyperbolicType::Negative;
}

Q capping_offset(const ResolvedDiagram& d, int j1, int j2) {
  if (!composable(d, j1, j2)) throw ValidationError("pair is not composable");
  const auto& a = d.chords.at(j1);
  const auto& b = d.chords.at(j2);
  const auto& v = d.components[a.tip_component];
  Q total = 0;
  for (size_t i = 0; i < v.size(); ++i) total += chebyshev(v[i], v[(i + 1) % v.size()]);
  Q len = arc_coordinate(d, b.tail) - arc_coordinate(d, a.tip);
  if (len <= 0) len += total;
  ensure(len > 0 && len < total, "capping arc length out of range");
  return len / total;
}

std::vector<AffineStep> affine_steps(const ResolvedDiagram& d, const CyclicWord& w, const Q& epsilon) {
  require_orbit_word(d, w);
  if (epsilon <= 0) throw ValidationError("epsilon must be positive");
  const auto& c = w.word.chords;
  std::vector<AffineStep> out;
  for (size_t k = 0; k < c.size(); ++k) {
    int next = c[(k + 1) % c.size()];
    Q sigma = rotation_number(d, c[k], next) % 2 == 0 ? 1 : -1;
    Q cc = tip_coefficient(d, c[k]);
    AffineStep s;
    s.a = {{{Q(0), -sigma}, {sigma, -sigma * cc / epsilon}}};
    s.b = {Q(0), sigma * (Q(1, 2) - capping_offset(d, c[k], next))};
    out.push_back(s);
  }
  return out;
}

Vec2 apply_step(const AffineStep& s, const Vec2& v) {
  return {s.a[0][0] * v[0] + s.a[0][1] * v[1] + s.b[0], s.a[1][0] * v[0] + s.a[1][1] * v[1] + s.b[1]};
}

EmbeddingSolution embed_orbit(const ResolvedDiagram& d, const CyclicWord& w, const Q& epsilon) {
  auto steps = affine_steps(d, w, epsilon);
  Mat2 A = {{{Q(1), Q(0)}, {Q(0), Q(1)}}};
  Vec2 b = {Q(0), Q(0)};
  for (const auto& s : steps) {
    b = apply_step(AffineStep{s.a, s.b}, b);
    A = mul(s.a, A);
  }
  // (I - A) u = b
  Q m00 = 1 - A[0][0], m01 = -A[0][1], m10 = -A[1][0], m11 = 1 - A[1][1];
  Q det = m00 * m11 - m01 * m10;
  ensure(det != 0, "return map has eigenvalue 1");
  Vec2 u = {(b[0] * m11 - m01 * b[1]) / det, (m00 * b[1] - m10 * b[0]) / det};
  EmbeddingSolution sol;
  sol.epsilon = epsilon;
  Vec2 cur = u;
  for (const auto& s : steps) {
    if (abs(cur[0]) >= epsilon)
      throw ValidationError("fixed point leaves the handle disk; epsilon " + to_string(epsilon) + " is too large");
    sol.points.push_back(cur);
    cur = apply_step(s, cur);
  }
  ensure(cur == u, "affine composition does not return to the fixed point");
  sol.action = orbit_action(d, w, epsilon, sol.points);
  return sol;
}

Q twist_potential(const Q& p, const Q& epsilon) {
  if (abs(p) * 2 > epsilon) return 0;
  return p * p / (2 * epsilon) - epsilon / 8;
}

Q orbit_action(const ResolvedDiagram& d, const CyclicWord& w, const Q& epsilon, const std::vector<Vec2>& points) {
  const auto& c = w.word.chords;
  ensure(points.size() == c.size(), "one point per letter expected");
  Q s = 0;
  for (size_t k = 0; k < c.size(); ++k) {
    const auto& p = points[k];
    s += d.chords[c[k]].action - 2 * epsilon - p[0] * p[1];
    s += 2 * epsilon + tip_coefficient(d, c[k]) * twist_potential(p[0], epsilon);
  }
  return s;
}

Q orbit_action(const ResolvedDiagram& d, const CyclicWord& w, const Q& epsilon) {
  return embed_orbit(d, w, epsilon).action;
}

}  // namespace reebsurg
