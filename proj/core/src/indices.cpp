#include "reebsurg/indices.hpp"

namespace reebsurg {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long pushoff_term(const ResolvedDiagram& d, const std::vector<long long>& pushoff) {
  if (pushoff.empty()) return 0;
  if (pushoff.size() != d.components.size()) throw ValidationError("need one push-off intersection number per component");
  long long s = 0;
  for (size_t i = 0; i < pushoff.size(); ++i) s += d.coefficient(static_cast<int>(i)) * d.rot[i] * pushoff[i];
  return 2 * s;
}

long long cz_sum(const ResolvedDiagram& d, const std::vector<CyclicWord>& ws) {
  long long s = 0;
  for (const auto& w : ws) s += cz_integral(d, w);
  return s;
}

}  // namespace

CappingAngle capping_angle(const ResolvedDiagram& d, int j1, int j2, Side side) {
  if (j1 < 0 || j2 < 0 || j1 >= static_cast<int>(d.chords.size()) || j2 >= static_cast<int>(d.chords.size()))
    throw ValidationError("unknown chord index");
  if (!composable(d, j1, j2)) throw ValidationError("pair (" + word_name({j1}) + ", " + word_name({j2}) + ") is not composable");
  const auto& a = d.chords[j1];
  const auto& b = d.chords[j2];
  int comp = a.tip_component;
  int n = static_cast<int>(d.components[comp].size());
  bool forward = side == Side::Eta;
  auto dir = [&](int i) { return forward ? d.direction_at(comp, i) : (d.direction_at(comp, i) + 4) % 8; };

  long long total = 0;
  int i = a.tip.segment;
  bool same_segment_done = i == b.tail.segment && (forward ? b.tail.t > a.tip.t : b.tail.t < a.tip.t);
  if (!same_segment_done) {
    do {
      int j = forward ? (i + 1) % n : (i - 1 + n) % n;
      total += turn(dir(i), dir(j));
      i = j;
    } while (i != b.tail.segment);
  }
  ensure(total % 2 == 0, "capping angle is not a multiple of pi/2");
  CappingAngle out;
  out.j1 = j1;
  out.j2 = j2;
  out.side = side;
  out.t = total / 2;
  ensure(out.t % 2 != 0, "capping angle is not an odd multiple of pi/2");
  out.rot = floor_div(out.t, 2);
  return out;
}

long long rotation_number(const ResolvedDiagram& d, int j1, int j2) { return capping_angle(d, j1, j2, Side::Eta).rot; }

long long cz_integral(const ResolvedDiagram& d, const CyclicWord& w) {
  const auto& c = w.word.chords;
  long long s = 0;
  for (size_t k = 0; k < c.size(); ++k) {
    s += rotation_number(d, c[k], c[(k + 1) % c.size()]);
    if (d.coefficient(d.chords[c[k]].tip_component) == 1) s += 1;
  }
  return s;
}

long long chord_word_m(const ResolvedDiagram& d, const std::vector<int>& chords) {
  long long s = 0;
  for (size_t l = 0; l + 1 < chords.size(); ++l) {
    s += rotation_number(d, chords[l], chords[l + 1]);
    if (d.coefficient(d.chords.at(chords[l]).tip_component) == 1) s += 1;
  }
  return s;
}

long long maslov_bcs(const ResolvedDiagram& d, const BrokenClosedString& b) {
  const auto& P = b.pieces;
  size_t n = P.size();
  if (n == 0) throw ValidationError("empty broken closed string");
  // arc k runs from the exit of piece k to the entry of piece k+1
  auto exit_comp = [&](const BrokenStringPiece& p) {
    return p.indicator > 0 ? d.chords.at(p.chords.back()).tip_component : d.chords.at(p.chords.front()).tail_component;
  };
  auto entry_comp = [&](const BrokenStringPiece& p) {
    return p.indicator > 0 ? d.chords.at(p.chords.front()).tail_component : d.chords.at(p.chords.back()).tip_component;
  };
  for (size_t k = 0; k < n; ++k) {
    const auto& p = P[k];
    if (p.indicator != 1 && p.indicator != -1) throw ValidationError("asymptotic indicators must be +1 or -1");
    const auto& q = P[(k + 1) % n];
    if (!p.chords.empty() && !q.chords.empty() && exit_comp(p) != entry_comp(q))
      throw ValidationError("broken closed string does not close up");
  }
  long long doubled = 0;
  for (const auto& p : P) doubled += p.arc_t - 1 + 2 * p.indicator * chord_word_m(d, p.chords);
  ensure(doubled % 2 == 0, "Maslov number is not an integer");
  return doubled / 2;
}

long long index_closed(const ResolvedDiagram& d, const std::vector<CyclicWord>& plus, const std::vector<CyclicWord>& minus,
                       long long chi, const std::vector<long long>& pushoff_intersections) {
  return cz_sum(d, plus) - cz_sum(d, minus) - chi - pushoff_term(d, pushoff_intersections);
}

long long index_disk(const ResolvedDiagram& d, const BrokenClosedString& b, long long punctures,
                     const std::vector<long long>& pushoff_intersections) {
  return maslov_bcs(d, b) + punctures - 1 - pushoff_term(d, pushoff_intersections);
}

long long index_general(const ResolvedDiagram& d, const std::vector<CyclicWord>& plus, const std::vector<CyclicWord>& minus,
                        const std::vector<BrokenClosedString>& strings, long long chi, long long interior_punctures,
                        long long boundary_punctures, const std::vector<long long>& pushoff_intersections) {
  long long m = 0;
  for (const auto& b : strings) m += maslov_bcs(d, b);
  return cz_sum(d, plus) - cz_sum(d, minus) + m - chi + interior_punctures + boundary_punctures -
         pushoff_term(d, pushoff_intersections);
}

std::vector<long long> c1_class(const ResolvedDiagram& d) {
  std::vector<long long> out(d.components.size(), 0);
  for (size_t i = 0; i < out.size(); ++i)
    if (d.coefficient(static_cast<int>(i)) != 0) out[i] = d.rot[i];
  return out;
}

long long meridian_twist(long long cz, long long n, long long k) { return cz - 2 * n * k; }

}  // namespace reebsurg
