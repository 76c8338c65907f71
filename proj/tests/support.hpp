#pragma once

// Shared fixtures and independent oracles for the test suite. The oracles
// recompute quantities by routes that do not go through the library code
// they check (floating point turning, brute force intersection search,
// direct lattice membership, homogeneous matrix products).

#include "reebsurg/chain_report.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace rt {

using namespace reebsurg;

inline const char* kTrefoil = "L1,L3,X2,X2,X2,R1,R1";
inline const char* kHopf = "L1,L3,X2,X2,R1,R1";

inline ResolvedDiagram diagram(const std::string& text) { return resolve(parse_front(text)); }

inline ResolvedDiagram trefoil(int c) {
  return diagram(std::string(kTrefoil) + " / surgery {0:" + (c > 0 ? "+1" : "-1") + "}");
}

inline ResolvedDiagram unknot(int c) { return diagram(std::string("L1,R1 / surgery {0:") + (c > 0 ? "+1" : "-1") + "}"); }

inline ResolvedDiagram stabilized_unknot() { return diagram("L1,L2,R1,R1 / orientations {0:-} / surgery {0:+1}"); }

// "r1r2" -> canonical cyclic word
inline CyclicWord cw(const ResolvedDiagram& d, const std::string& name) {
  Word w;
  size_t i = 0;
  while (i < name.size()) {
    if (name[i] != 'r') throw std::runtime_error("bad word " + name);
    size_t j = i + 1;
    while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
    w.chords.push_back(std::stoi(name.substr(i + 1, j - i - 1)) - 1);
    i = j;
  }
  return canonical_cyclic(d, w);
}

inline double to_double(const Q& q) { return boost::multiprecision::numerator(q).convert_to<double>() / boost::multiprecision::denominator(q).convert_to<double>(); }

// ---------------------------------------------------------------------------
// Geometry oracles

struct Hit {
  int comp;
  int seg;
  Q t;  // parameter on the segment
};

// Every place a component polyline passes through p (vertex hits counted once).
inline std::vector<Hit> locate(const ResolvedDiagram& d, const Point& p) {
  std::vector<Hit> out;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const auto& v = d.components[c];
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
      Point a = v[i], b = v[(i + 1) % n];
      Q dx = b.x - a.x, dy = b.y - a.y;
      if ((p.x - a.x) * dy != (p.y - a.y) * dx) continue;
      Q t = dx != 0 ? (p.x - a.x) / dx : (p.y - a.y) / dy;
      if (t >= 0 && t < 1) out.push_back({c, i, t});
    }
  }
  return out;
}

// z along a component by summing trapezoids of y dx from vertex 0.
inline Q z_by_trapezoids(const ResolvedDiagram& d, const Hit& h) {
  const auto& v = d.components[h.comp];
  int n = static_cast<int>(v.size());
  Q z = d.vertex_z[h.comp][0];
  for (int i = 0; i < h.seg; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    z += (a.y + b.y) / 2 * (b.x - a.x);
  }
  const Point& a = v[h.seg];
  const Point& b = v[(h.seg + 1) % n];
  Point m{a.x + h.t * (b.x - a.x), a.y + h.t * (b.y - a.y)};
  z += (a.y + m.y) / 2 * (m.x - a.x);
  return z;
}

inline Point tangent(const ResolvedDiagram& d, const Hit& h) {
  const auto& v = d.components[h.comp];
  const Point& a = v[h.seg];
  const Point& b = v[(h.seg + 1) % v.size()];
  return {b.x - a.x, b.y - a.y};
}

struct OracleCrossing {
  Point p;
  Hit lower, upper;
  Q action;
  int sign;
};

// Brute force pairwise segment intersection, heights by trapezoids, sign from
// the oriented tangents (upper strand first).
inline std::vector<OracleCrossing> crossings_oracle(const ResolvedDiagram& d) {
  std::set<std::pair<Q, Q>> seen;
  std::vector<OracleCrossing> out;
  for (const auto& comp : d.components) {
    for (size_t i = 0; i < comp.size(); ++i) {
      const Point& a = comp[i];
      const Point& b = comp[(i + 1) % comp.size()];
      for (const auto& other : d.components) {
        for (size_t k = 0; k < other.size(); ++k) {
          const Point& c = other[k];
          const Point& e = other[(k + 1) % other.size()];
          Q den = (b.x - a.x) * (e.y - c.y) - (b.y - a.y) * (e.x - c.x);
          if (den == 0) continue;
          Q s = ((c.x - a.x) * (e.y - c.y) - (c.y - a.y) * (e.x - c.x)) / den;
          Q u = ((c.x - a.x) * (b.y - a.y) - (c.y - a.y) * (b.x - a.x)) / den;
          if (s <= 0 || s >= 1 || u <= 0 || u >= 1) continue;
          Point p{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
          if (!seen.insert({p.x, p.y}).second) continue;
          auto hits = locate(d, p);
          if (hits.size() != 2) throw std::runtime_error("oracle: not a double point");
          Q z0 = z_by_trapezoids(d, hits[0]);
          Q z1 = z_by_trapezoids(d, hits[1]);
          OracleCrossing x;
          x.p = p;
          if (z0 < z1) {
            x.lower = hits[0];
            x.upper = hits[1];
          } else {
            x.lower = hits[1];
            x.upper = hits[0];
          }
          x.action = abs(z1 - z0);
          Point tu = tangent(d, x.upper), tl = tangent(d, x.lower);
          x.sign = tu.x * tl.y - tu.y * tl.x > 0 ? 1 : -1;
          out.push_back(x);
        }
      }
    }
  }
  return out;
}

// Turning number of a closed polyline from atan2 differences.
inline long long turning_number(const std::vector<Point>& v) {
  double total = 0;
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    const Point& c = v[(i + 2) % n];
    double a1 = std::atan2(to_double(b.y - a.y), to_double(b.x - a.x));
    double a2 = std::atan2(to_double(c.y - b.y), to_double(c.x - b.x));
    double dth = a2 - a1;
    while (dth > M_PI) dth -= 2 * M_PI;
    while (dth <= -M_PI) dth += 2 * M_PI;
    total += dth;
  }
  return std::llround(total / (2 * M_PI));
}

// Rotation angle of a capping path in units of pi/2, from atan2 differences of
// the segments it passes, walking forward (eta) or backward (eta bar).
inline long long capping_quarters(const ResolvedDiagram& d, int j1, int j2, bool forward) {
  const auto& a = d.chords[j1];
  const auto& b = d.chords[j2];
  const auto& v = d.components[a.tip_component];
  int n = static_cast<int>(v.size());
  auto dir = [&](int i) {
    Point p = v[i], q = v[(i + 1) % n];
    double x = to_double(q.x - p.x), y = to_double(q.y - p.y);
    if (!forward) {
      x = -x;
      y = -y;
    }
    return std::atan2(y, x);
  };
  // parameters measured along the walking direction
  double start = to_double(a.tip.t), stop = to_double(b.tail.t);
  int i = a.tip.segment;
  double total = 0;
  bool done = i == b.tail.segment && (forward ? stop > start : stop < start);
  while (!done) {
    int j = forward ? (i + 1) % n : (i - 1 + n) % n;
    double dth = dir(j) - dir(i);
    while (dth > M_PI) dth -= 2 * M_PI;
    while (dth <= -M_PI) dth += 2 * M_PI;
    total += dth;
    i = j;
    done = i == b.tail.segment;
  }
  return std::llround(total / (M_PI / 2));
}

// Crossing-number parity point in polygon; p must not lie on the polygon.
inline bool inside_parity(const std::vector<Point>& poly, const Point& p) {
  bool in = false;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      Q x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x > p.x) in = !in;
    }
  }
  return in;
}

inline Q shoelace(const std::vector<Point>& poly) {
  Q s = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s / 2;
}

// ---------------------------------------------------------------------------
// Integer lattice oracles

using Mat = std::vector<std::vector<long long>>;

// Is v in the row lattice of the 2x2 matrix m?
inline bool in_row_lattice2(const Mat& m, long long v0, long long v1) {
  long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det != 0) {
    // x m = v  =>  x = v adj(m) / det
    long long x0 = v0 * m[1][1] - v1 * m[1][0];
    long long x1 = -v0 * m[0][1] + v1 * m[0][0];
    return x0 % det == 0 && x1 % det == 0;
  }
  for (long long a = -60; a <= 60; ++a)
    for (long long b = -60; b <= 60; ++b)
      if (a * m[0][0] + b * m[1][0] == v0 && a * m[0][1] + b * m[1][1] == v1) return true;
  return false;
}

struct CokerShape {
  int free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1, ascending
};

// Cokernel of a 2x2 integer matrix by enumeration: the order of the group and
// the orders of the generators for the finite case, gcd of entries otherwise.
inline CokerShape coker_brute(const Mat& m) {
  CokerShape s;
  long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det != 0) {
    long long n = std::llabs(det);
    // count classes in the box [0,n)^2 to confirm the order
    std::vector<std::pair<long long, long long>> reps;
    long long classes = 0;
    for (long long a = 0; a < n; ++a)
      for (long long b = 0; b < n; ++b) {
        bool fresh = true;
        for (auto& r : reps)
          if (in_row_lattice2(m, a - r.first, b - r.second)) {
            fresh = false;
            break;
          }
        if (fresh) {
          reps.push_back({a, b});
          ++classes;
        }
      }
    if (classes != n) throw std::runtime_error("oracle: cokernel order mismatch");
    auto order = [&](long long x, long long y) {
      for (long long k = 1; k <= n; ++k)
        if (in_row_lattice2(m, k * x, k * y)) return k;
      return n;
    };
    long long e = std::lcm(order(1, 0), order(0, 1));
    long long d1 = n / e;
    if (d1 > 1) s.torsion.push_back(d1);
    if (e > 1) s.torsion.push_back(e);
    return s;
  }
  bool all_zero = m[0][0] == 0 && m[0][1] == 0 && m[1][0] == 0 && m[1][1] == 0;
  if (all_zero) {
    s.free_rank = 2;
    return s;
  }
  s.free_rank = 1;
  long long g = std::gcd(std::gcd(m[0][0], m[0][1]), std::gcd(m[1][0], m[1][1]));
  if (g > 1) s.torsion.push_back(g);
  return s;
}

// ---------------------------------------------------------------------------
// Affine dynamics oracle

using M3 = std::array<std::array<Q, 3>, 3>;

inline M3 mul3(const M3& a, const M3& b) {
  M3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Q s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

// One handle pass in homogeneous coordinates: rotate by -pi/2 times the
// twist shear, signed by the capping rotation parity, translated by the
// capping offset.
inline M3 homogeneous_step(const ResolvedDiagram& d, int j, int next, const Q& eps) {
  long long rot = capping_angle(d, j, next, Side::Eta).rot;
  Q sg = (rot % 2 == 0) ? 1 : -1;
  Q c = d.coefficient(d.chords[j].tip_component);
  Q off = capping_offset(d, j, next);
  // J0 * [[1, -c/eps], [0, 1]] with J0 = [[0,-1],[1,0]]
  M3 m{};
  m[0][0] = 0;
  m[0][1] = -sg;
  m[0][2] = 0;
  m[1][0] = sg;
  m[1][1] = -sg * c / eps;
  m[1][2] = sg * (Q(1, 2) - off);
  m[2][2] = 1;
  return m;
}

struct OracleOrbit {
  std::vector<Vec2> points;
  bool unique = false;
};

// Composes the homogeneous steps, then runs one Newton step on F(u) = Phi(u) - u
// from each start of a grid. Phi is affine so every start lands on the fixed
// point in one step when it exists and is unique.
inline OracleOrbit affine_oracle(const ResolvedDiagram& d, const CyclicWord& w, const Q& eps, int grid) {
  const auto& c = w.word.chords;
  std::vector<M3> steps;
  for (size_t k = 0; k < c.size(); ++k) steps.push_back(homogeneous_step(d, c[k], c[(k + 1) % c.size()], eps));
  M3 phi{};
  for (int i = 0; i < 3; ++i) phi[i][i] = 1;
  for (const auto& s : steps) phi = mul3(s, phi);
  Q a = phi[0][0] - 1, b = phi[0][1], cc = phi[1][0], dd = phi[1][1] - 1;
  Q det = a * dd - b * cc;
  OracleOrbit out;
  if (det == 0) return out;
  std::set<std::pair<Q, Q>> landings;
  for (int i = -grid; i <= grid; ++i)
    for (int k = -grid; k <= grid; ++k) {
      Q p = eps * i / grid, q = eps * k / grid;
      Q f0 = phi[0][0] * p + phi[0][1] * q + phi[0][2] - p;
      Q f1 = phi[1][0] * p + phi[1][1] * q + phi[1][2] - q;
      // Cramer on the Jacobian [[a,b],[cc,dd]]
      Q dp = (f0 * dd - b * f1) / det;
      Q dq = (a * f1 - cc * f0) / det;
      landings.insert({p - dp, q - dq});
    }
  out.unique = landings.size() == 1;
  Vec2 cur = {landings.begin()->first, landings.begin()->second};
  for (const auto& s : steps) {
    out.points.push_back(cur);
    cur = {s[0][0] * cur[0] + s[0][1] * cur[1] + s[0][2], s[1][0] * cur[0] + s[1][1] * cur[1] + s[1][2]};
  }
  if (cur != out.points.front()) out.unique = false;
  return out;
}

// ---------------------------------------------------------------------------
// Word oracles

// All cyclically composable sequences of the given length, up to rotation,
// from a plain odometer over chord labels.
inline std::set<std::vector<int>> cyclic_words_brute(const ResolvedDiagram& d, int len) {
  int n = static_cast<int>(d.chords.size());
  std::set<std::vector<int>> out;
  std::vector<int> w(len, 0);
  while (true) {
    bool ok = true;
    for (int k = 0; k < len && ok; ++k) {
      const auto& a = d.chords[w[k]];
      const auto& b = d.chords[w[(k + 1) % len]];
      ok = a.tip_component == b.tail_component && d.coefficient(a.tip_component) != 0 &&
           d.coefficient(a.tail_component) != 0;
    }
    if (ok) {
      std::vector<int> best = w;
      for (int r = 1; r < len; ++r) {
        std::vector<int> rot(w.begin() + r, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + r);
        best = std::min(best, rot);
      }
      out.insert(best);
    }
    int pos = len - 1;
    while (pos >= 0 && ++w[pos] == n) w[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace rt
