#include "reebsurg/quiver_grading.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace reebsurg {

Quiver build_quiver(const ResolvedDiagram& d) {
  if (d.chords.empty()) throw ValidationError("diagram has no chords");
  Quiver q;
  q.vertices = static_cast<int>(d.components.size());
  for (const auto& c : d.chords) q.edges.push_back({c.id - 1, c.tail_component, c.tip_component});
  q.collapsed_rank = static_cast<int>(q.edges.size());
  return q;
}

long long count_cyclic_paths(const Quiver& q, int length, const std::vector<int>& allowed_vertices) {
  if (length <= 0) return 0;
  std::vector<bool> ok(q.vertices, allowed_vertices.empty());
  for (int v : allowed_vertices) ok.at(v) = true;
  // closed walks of length k: trace of the k-th power of the edge-count matrix
  size_t n = q.vertices;
  std::vector<std::vector<BigInt>> A(n, std::vector<BigInt>(n, 0));
  for (const auto& e : q.edges)
    if (ok[e.from] && ok[e.to]) A[e.from][e.to] += 1;
  auto mul = [&](const auto& X, const auto& Y) {
    std::vector<std::vector<BigInt>> R(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) R[i][j] += X[i][k] * Y[k][j];
    return R;
  };
  std::vector<BigInt> trace_pow(length + 1, 0);
  auto P = A;
  for (int k = 1; k <= length; ++k) {
    for (size_t i = 0; i < n; ++i) trace_pow[k] += P[i][i];
    P = mul(P, A);
  }
  auto phi = [](int m) {
    int r = m;
    for (int p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        while (m % p == 0) m /= p;
        r -= r / p;
      }
    if (m > 1) r -= r / m;
    return r;
  };
  // necklace count via Burnside over rotations
  BigInt total = 0;
  for (int dd = 1; dd <= length; ++dd)
    if (length % dd == 0) total += phi(length / dd) * trace_pow[dd];
  ensure(total % length == 0, "necklace count is not integral");
  return (total / length).convert_to<long long>();
}

bool cyclic_equivalence(const std::vector<int>& x, const std::vector<int>& y) {
  for (int a : x)
    if (a <= 0) throw ValidationError("cyclic equivalence needs positive words");
  for (int a : y)
    if (a <= 0) throw ValidationError("cyclic equivalence needs positive words");
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  return minimal_rotation(x) == minimal_rotation(y);
}

bool exposed_required(const ResolvedDiagram& d, const std::vector<CyclicWord>& plus, const std::vector<CyclicWord>& minus) {
  if (minus.empty() && !plus.empty()) return true;
  std::vector<long long> count(d.chords.size(), 0);
  for (const auto& w : plus)
    for (int j : w.word.chords) ++count.at(j);
  for (const auto& w : minus)
    for (int j : w.word.chords) --count.at(j);
  return std::any_of(count.begin(), count.end(), [](long long c) { return c != 0; });
}

namespace {

long long winding_or_degenerate(const std::vector<Point>& poly, const Point& p) {
  long long w = 0;
  size_t n = poly.size();
  for (size_t k = 0; k < n; ++k) {
    const Point& a = poly[k];
    const Point& b = poly[(k + 1) % n];
    if (a.y == p.y && b.y == p.y && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x))
      throw DegenerateGeometry("push-out passes through a basepoint");
    if ((a.y <= p.y && p.y < b.y) || (b.y <= p.y && p.y < a.y)) {
      Q x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x == p.x) throw DegenerateGeometry("push-out passes through a basepoint");
      if (x > p.x) w += b.y > a.y ? 1 : -1;
    }
  }
  return w;
}

// Solves M n = rhs over the rationals (M square, invertible).
std::vector<Q> solve(const IntMatrix& M, const std::vector<Q>& rhs) {
  size_t n = M.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = M[i][j];
    a[i][n] = rhs[i];
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw ValidationError("relation matrix is singular; first homology is infinite");
    std::swap(a[c], a[p]);
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Q f = a[i][c] / a[c][c];
      for (size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Q> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace

PushOutData pushout_data(const ResolvedDiagram& d, const CyclicWord& w, const OrbitString& s) {
  Q offset = default_pushout_offset(d);
  for (int attempt = 0; attempt < 12; ++attempt) {
    try {
      PushOutCurve p = push_out(d, w, s, offset);
      PushOutData out;
      out.linking = pushout_linking(d, p);
      for (const auto& f : d.faces) out.winding.push_back(winding_or_degenerate(p.vertices, f.basepoint));
      return out;
    } catch (const DegenerateGeometry&) {
      offset /= 3;
    }
  }
  throw InvariantError("push-out stays degenerate for every tried offset");
}

std::vector<Q> i_grading_rational(const ResolvedDiagram& d, const H1Presentation& h, const GradedOrbit& g) {
  if (!h.finite) throw ValidationError("intersection gradings need finite first homology");
  PushOutData pd = pushout_data(d, g.word, g.string);
  size_t m = h.generators.size();
  std::vector<Q> rhs(m);
  for (size_t a = 0; a < m; ++a) rhs[a] = -pd.linking[h.generators[a]];
  // M is symmetric, so M^T n = M n
  std::vector<Q> n = solve(h.relations, rhs);
  std::vector<Q> out(d.faces.size(), Q(0));
  for (size_t k = 0; k < d.faces.size(); ++k) {
    Q v = pd.winding[k];
    for (size_t a = 0; a < m; ++a) v += n[a] * winding_number(d.components[h.generators[a]], d.faces[k].basepoint);
    out[k] = g.sign * v;
  }
  return out;
}

IGradingVector i_grading(const ResolvedDiagram& d, const H1Presentation& h, const std::vector<GradedOrbit>& collection) {
  if (!h.finite) throw ValidationError("intersection gradings need finite first homology");
  std::vector<long long> cls(d.components.size(), 0);
  std::vector<Q> total(d.faces.size(), Q(0));
  for (const auto& g : collection) {
    auto oc = orbit_class_monomial(d, h, g.word);
    for (size_t i = 0; i < cls.size(); ++i) cls[i] += g.sign * oc.vector[i];
    auto part = i_grading_rational(d, h, g);
    for (size_t k = 0; k < total.size(); ++k) total[k] += part[k];
  }
  if (!make_class(h, cls).zero) throw ValidationError("collection has nonzero homology class; no spanning surface");
  IGradingVector out;
  for (const auto& x : total) {
    ensure(is_integer(x), "intersection grading of a class-zero collection is not integral");
    out.push_back(to_ll(x));
  }
  return out;
}

IGradingVector i_grading_default(const ResolvedDiagram& d, const H1Presentation& h, const std::vector<CyclicWord>& plus,
                                 const std::vector<CyclicWord>& minus) {
  std::vector<GradedOrbit> col;
  for (const auto& w : plus) col.push_back({w, OrbitString{std::vector<Side>(w.length(), Side::Eta)}, 1});
  for (const auto& w : minus) col.push_back({w, OrbitString{std::vector<Side>(w.length(), Side::Eta)}, -1});
  return i_grading(d, h, col);
}

bool delta_i_obstruction(const IGradingVector& delta) {
  return std::any_of(delta.begin(), delta.end(), [](long long x) { return x < 0; });
}

Q energy_lower_bound(const IGradingVector& delta, const std::vector<Q>& areas) {
  if (delta.size() != areas.size()) throw ValidationError("one area per grading entry expected");
  Q s = 0;
  for (size_t k = 0; k < delta.size(); ++k)
    if (delta[k] > 0) s += areas[k] * delta[k];
  return s;
}

std::vector<BubblingFace> bubbling_faces(const ResolvedDiagram& d) {
  std::vector<BubblingFace> out;
  for (int k = 0; k < static_cast<int>(d.faces.size()); ++k) {
    const auto& f = d.faces[k];
    if (f.corners.empty()) continue;
    bool ok = true;
    std::vector<int> word;
    for (const auto& c : f.corners) {
      const auto& ch = d.chords[c.chord];
      ok = ok && c.positive && d.coefficient(ch.tip_component) == 1 && d.coefficient(ch.tail_component) == 1;
      word.push_back(c.chord);
    }
    if (ok) out.push_back({k, CyclicWord{Word{minimal_rotation(word)}}});
  }
  return out;
}

}  // namespace reebsurg
