#include "reebsurg/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace reebsurg {

namespace {

IntMatrix identity(size_t n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

long long floor_mod(long long a, long long m) { return ((a % m) + m) % m; }

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  size_t r = a.size(), k = b.size(), c = b[0].size();
  IntMatrix out(r, std::vector<long long>(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t m = 0; m < k; ++m)
      for (size_t j = 0; j < c; ++j) out[i][j] += a[i][m] * b[m][j];
  return out;
}

long long determinant(const IntMatrix& m) {
  size_t n = m.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1].convert_to<long long>();
}

SmithForm smith_normal_form(const IntMatrix& m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  SmithForm s;
  s.d = m;
  s.u = identity(rows);
  s.v = identity(cols);
  auto& D = s.d;
  auto swap_rows = [&](size_t a, size_t b) {
    std::swap(D[a], D[b]);
    std::swap(s.u[a], s.u[b]);
  };
  auto swap_cols = [&](size_t a, size_t b) {
    for (auto& r : D) std::swap(r[a], r[b]);
    for (auto& r : s.v) std::swap(r[a], r[b]);
  };
  auto add_row = [&](size_t dst, size_t src, long long f) {  // row dst += f * row src
    for (size_t j = 0; j < cols; ++j) D[dst][j] += f * D[src][j];
    for (size_t j = 0; j < rows; ++j) s.u[dst][j] += f * s.u[src][j];
  };
  auto add_col = [&](size_t dst, size_t src, long long f) {
    for (size_t i = 0; i < rows; ++i) D[i][dst] += f * D[i][src];
    for (size_t i = 0; i < cols; ++i) s.v[i][dst] += f * s.v[i][src];
  };
  size_t n = std::min(rows, cols);
  for (size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block
      size_t pi = rows, pj = cols;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j)
          if (D[i][j] != 0 && (pi == rows || std::llabs(D[i][j]) < std::llabs(D[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        long long q = D[i][t] / D[t][t];
        if (q) add_row(i, t, -q);
        if (D[i][t]) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        long long q = D[t][j] / D[t][t];
        if (q) add_col(j, t, -q);
        if (D[t][j]) clean = false;
      }
      if (!clean) continue;
      // divisibility of the remaining block
      size_t bad = rows;
      for (size_t i = t + 1; i < rows && bad == rows; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(t, bad, 1);
    }
    if (D[t][t] < 0) {
      for (size_t j = 0; j < cols; ++j) D[t][j] = -D[t][j];
      for (size_t j = 0; j < rows; ++j) s.u[t][j] = -s.u[t][j];
    }
  }
  for (size_t t = 0; t < n; ++t) s.diagonal.push_back(D[t][t]);
  for (size_t t = n; t < cols; ++t) s.diagonal.push_back(0);  // free directions without relations
  ensure(multiply(multiply(s.u, m), s.v) == D, "Smith form transforms do not reproduce the diagonal");
  return s;
}

H1Presentation h1_presentation(const ResolvedDiagram& d) {
  H1Presentation h;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
    if (d.coefficient(c) != 0) h.generators.push_back(c);
  size_t n = h.generators.size();
  h.relations.assign(n, std::vector<long long>(n, 0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      int i = h.generators[a], j = h.generators[b];
      h.relations[a][b] = i == j ? d.tb[i] + d.coefficient(i) : d.linking[i][j];
    }
  h.snf = smith_normal_form(h.relations);
  for (long long x : h.snf.diagonal) {
    if (x == 0) ++h.free_rank;
    if (x > 1) h.torsion.push_back(x);
  }
  h.finite = h.free_rank == 0;
  ensure(h.finite == (determinant(h.relations) != 0), "finiteness flag disagrees with the determinant");
  return h;
}

std::vector<long long> reduce(const H1Presentation& h, const std::vector<long long>& v) {
  size_t n = h.generators.size();
  std::vector<long long> g(n);
  for (size_t a = 0; a < n; ++a) g[a] = v.at(h.generators[a]);
  std::vector<long long> w(n, 0);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) w[j] += g[i] * h.snf.v[i][j];
  for (size_t j = 0; j < n; ++j) {
    long long dj = h.snf.diagonal[j];
    if (dj != 0) w[j] = floor_mod(w[j], dj);
  }
  return w;
}

OrbitClass make_class(const H1Presentation& h, const std::vector<long long>& v) {
  OrbitClass c;
  c.vector = v;
  c.normal_form = reduce(h, v);
  c.zero = std::all_of(c.normal_form.begin(), c.normal_form.end(), [](long long x) { return x == 0; });
  return c;
}

std::string describe_group(const H1Presentation& h) {
  std::vector<std::string> parts;
  for (long long t : h.torsion) parts.push_back("Z/" + std::to_string(t));
  for (int i = 0; i < h.free_rank; ++i) parts.push_back("Z");
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

std::vector<Q> chord_crossing_monomial(const ResolvedDiagram& d, int j, int c_tail, int c_tip) {
  const auto& c = d.chords.at(j);
  std::vector<Q> out(d.components.size(), Q(0));
  out[c.tail_component] += Q(c_tail + c.sign, 2);
  out[c.tip_component] += Q(c_tip + c.sign, 2);
  return out;
}

namespace {

std::vector<Q> pair_monomial(const ResolvedDiagram& d, int a, int b) {
  const auto& ca = d.chords[a];
  const auto& cb = d.chords[b];
  int comp = ca.tip_component;
  Q L = static_cast<long long>(d.components[comp].size());
  Q p = ca.tip.segment + ca.tip.t;
  Q q = cb.tail.segment + cb.tail.t;
  auto fwd = [&](const Q& r) {
    Q x = r - p;
    while (x < 0) x += L;
    while (x >= L) x -= L;
    return x;
  };
  Q span = fwd(q);
  std::vector<Q> out(d.components.size(), Q(0));
  for (int k = 0; k < static_cast<int>(d.chords.size()); ++k) {
    const auto& c = d.chords[k];
    if (c.tip.component == comp && k != a) {
      Q x = fwd(c.tip.segment + c.tip.t);
      if (x > 0 && x < span) out[c.tail_component] += c.sign;
    }
    if (c.tail.component == comp && k != b) {
      Q x = fwd(c.tail.segment + c.tail.t);
      if (x > 0 && x < span) out[c.tip_component] += c.sign;
    }
  }
  return out;
}

std::vector<long long> integral(const std::vector<Q>& v, const std::string& what) {
  std::vector<long long> out;
  for (const auto& x : v) {
    if (!is_integer(x)) throw InvariantError(what + " is not integral");
    out.push_back(to_ll(x));
  }
  return out;
}

}  // namespace

CrossingMonomials crossing_monomials(const ResolvedDiagram& d) {
  CrossingMonomials m;
  int n = static_cast<int>(d.chords.size());
  for (int j = 0; j < n; ++j) {
    const auto& c = d.chords[j];
    m.chord.push_back(chord_crossing_monomial(d, j, d.coefficient(c.tail_component), d.coefficient(c.tip_component)));
  }
  m.pair.assign(n, std::vector<std::vector<Q>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (composable(d, a, b)) m.pair[a][b] = pair_monomial(d, a, b);
  return m;
}

OrbitClass orbit_class_monomial(const ResolvedDiagram& d, const H1Presentation& h, const CyclicWord& w) {
  const auto& c = w.word.chords;
  std::vector<Q> sum(d.components.size(), Q(0));
  for (size_t k = 0; k < c.size(); ++k) {
    const auto& ch = d.chords.at(c[k]);
    auto cj = chord_crossing_monomial(d, c[k], d.coefficient(ch.tail_component), d.coefficient(ch.tip_component));
    int next = c[(k + 1) % c.size()];
    if (!composable(d, c[k], next)) throw ValidationError("word is not cyclically composable");
    auto cp = pair_monomial(d, c[k], next);
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += cj[i] + cp[i];
  }
  for (auto& x : sum) x /= 2;
  return make_class(h, integral(sum, "orbit class half-sum"));
}

std::vector<Q> pushout_linking(const ResolvedDiagram& d, const PushOutCurve& p) {
  size_t N = p.vertices.size();
  std::vector<long long> tot(d.components.size(), 0);
  for (size_t k = 0; k < N; ++k) {
    const Point& P1 = p.vertices[k];
    const Point& P2 = p.vertices[(k + 1) % N];
    Point dp = P2 - P1;
    int hc = p.host_component[k], hs = p.host_segment[k];
    const auto& hv = d.components[hc];
    for (int ci = 0; ci < static_cast<int>(d.components.size()); ++ci) {
      const auto& v = d.components[ci];
      int nv = static_cast<int>(v.size());
      for (int i = 0; i < nv; ++i) {
        const Point& q1 = v[i];
        const Point& q2 = v[(i + 1) % nv];
        Point dq = q2 - q1;
        Q den = cross(dp, dq);
        if (den == 0) {
          if (cross(q1 - P1, dp) == 0) throw DegenerateGeometry("push-out runs along the diagram");
          continue;
        }
        Q t = cross(q1 - P1, dq) / den;
        Q u = cross(q1 - P1, dp) / den;
        if (t < 0 || t >= 1 || u < 0 || u >= 1) continue;
        if (t == 0 || u == 0) throw DegenerateGeometry("push-out passes through a vertex");
        Point X = P1 + t * dp;
        Q z_other = d.vertex_z[ci][i] + (q1.y + X.y) / 2 * (X.x - q1.x);
        Point foot = X - p.offset * p.host_normal[k];
        Q z_host = d.vertex_z[hc][hs] + (hv[hs].y + foot.y) / 2 * (foot.x - hv[hs].x);
        if (z_host == z_other) throw DegenerateGeometry("push-out crossing at equal height");
        Q orient = z_host > z_other ? cross(dp, dq) : cross(dq, dp);
        tot[ci] += orient > 0 ? 1 : -1;
      }
    }
  }
  std::vector<Q> out;
  for (long long x : tot) out.push_back(Q(x, 2));
  return out;
}

std::vector<Q> pushout_linking(const ResolvedDiagram& d, const CyclicWord& w, const OrbitString& s, PushOutCurve* curve) {
  Q offset = default_pushout_offset(d);
  for (int attempt = 0; attempt < 12; ++attempt) {
    try {
      PushOutCurve p = push_out(d, w, s, offset);
      auto lk = pushout_linking(d, p);
      if (curve) *curve = std::move(p);
      return lk;
    } catch (const DegenerateGeometry&) {
      offset /= 3;
    }
  }
  throw InvariantError("push-out stays degenerate for every tried offset");
}

OrbitClass orbit_class_pushout(const ResolvedDiagram& d, const H1Presentation& h, const PushOutCurve& p) {
  return make_class(h, integral(pushout_linking(d, p), "push-out linking number"));
}

OrbitClass orbit_class_pushout(const ResolvedDiagram& d, const H1Presentation& h, const CyclicWord& w, const OrbitString& s) {
  return make_class(h, integral(pushout_linking(d, w, s), "push-out linking number"));
}

}  // namespace reebsurg
