#include "reebsurg/reeb_words.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace reebsurg {

namespace {

bool on_surgery_locus(const ResolvedDiagram& d, const ChordRecord& c) {
  return d.coefficient(c.tip_component) != 0 && d.coefficient(c.tail_component) != 0;
}

int length_cap(const ResolvedDiagram& d, const WordBounds& bounds, const std::vector<int>& usable) {
  if (bounds.max_length > 0) return bounds.max_length;
  if (!bounds.max_action) return 0;
  if (usable.empty()) return 0;
  Q amin = d.chords[usable.front()].action;
  for (int j : usable) amin = std::min(amin, d.chords[j].action);
  return static_cast<int>(to_ll(floor_q(*bounds.max_action / amin)));
}

}  // namespace

std::string word_name(const std::vector<int>& chords) {
  std::string s;
  for (int j : chords) s += "r" + std::to_string(j + 1);
  return s;
}

bool composable(const ResolvedDiagram& d, int a, int b) {
  return d.chords.at(a).tip_component == d.chords.at(b).tail_component;
}

Q word_action(const ResolvedDiagram& d, const std::vector<int>& chords) {
  Q s = 0;
  for (int j : chords) s += d.chords.at(j).action;
  return s;
}

std::vector<int> minimal_rotation(const std::vector<int>& chords) {
  std::vector<int> best = chords;
  std::vector<int> cur = chords;
  for (size_t r = 1; r < chords.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

CyclicWord canonical_cyclic(const ResolvedDiagram& d, const Word& w) {
  const auto& c = w.chords;
  if (c.empty()) throw ValidationError("empty word");
  for (int j : c)
    if (j < 0 || j >= static_cast<int>(d.chords.size())) throw ValidationError("unknown chord index");
  for (size_t k = 0; k < c.size(); ++k)
    if (!composable(d, c[k], c[(k + 1) % c.size()]))
      throw ValidationError("pair (" + word_name({c[k]}) + ", " + word_name({c[(k + 1) % c.size()]}) + ") is not composable");
  return CyclicWord{Word{minimal_rotation(c)}};
}

std::vector<CyclicWord> enumerate_orbit_words(const ResolvedDiagram& d, const WordBounds& bounds) {
  bool any = false;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) any = any || d.coefficient(c) != 0;
  if (!any) throw ValidationError("no component carries a nonzero surgery coefficient");
  if (bounds.max_length <= 0 && !bounds.max_action) return {};
  std::vector<int> usable;
  for (int j = 0; j < static_cast<int>(d.chords.size()); ++j)
    if (on_surgery_locus(d, d.chords[j])) usable.push_back(j);
  int cap = length_cap(d, bounds, usable);

  std::vector<CyclicWord> out;
  std::vector<int> cur;
  Q act = 0;
  // Words are generated starting from their smallest letter; a word is kept
  // only when it already is its own minimal rotation.
  std::function<void()> dfs = [&]() {
    if (!cur.empty() && composable(d, cur.back(), cur.front()) && minimal_rotation(cur) == cur)
      out.push_back(CyclicWord{Word{cur}});
    if (static_cast<int>(cur.size()) >= cap) return;
    for (int j : usable) {
      if (j < cur.front() || !composable(d, cur.back(), j)) continue;
      Q next = act + d.chords[j].action;
      if (bounds.max_action && next > *bounds.max_action) continue;
      cur.push_back(j);
      act = next;
      dfs();
      act -= d.chords[j].action;
      cur.pop_back();
    }
  };
  for (int j : usable) {
    if (bounds.max_action && d.chords[j].action > *bounds.max_action) continue;
    cur = {j};
    act = d.chords[j].action;
    dfs();
  }
  std::sort(out.begin(), out.end(), [](const CyclicWord& a, const CyclicWord& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.word.chords < b.word.chords;
  });
  return out;
}

std::vector<Word> enumerate_chord_words(const ResolvedDiagram& d, const WordBounds& bounds) {
  auto zero = [&](int comp) { return d.coefficient(comp) == 0; };
  bool any = false;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) any = any || zero(c);
  if (!any) throw ValidationError("no coefficient-zero component selected");
  if (bounds.max_length <= 0 && !bounds.max_action) return {};
  std::vector<int> all(d.chords.size());
  std::iota(all.begin(), all.end(), 0);
  int cap = length_cap(d, bounds, all);

  std::vector<Word> out;
  std::vector<int> cur;
  Q act = 0;
  std::function<void()> dfs = [&]() {
    const auto& last = d.chords[cur.back()];
    if (zero(last.tip_component)) {
      out.push_back(Word{cur});
      return;  // an endpoint on the zero part ends the word
    }
    if (static_cast<int>(cur.size()) >= cap) return;
    for (int j = 0; j < static_cast<int>(d.chords.size()); ++j) {
      const auto& c = d.chords[j];
      if (!composable(d, cur.back(), j)) continue;
      if (bounds.max_action && act + c.action > *bounds.max_action) continue;
      cur.push_back(j);
      act += c.action;
      dfs();
      act -= c.action;
      cur.pop_back();
    }
  };
  for (int j = 0; j < static_cast<int>(d.chords.size()); ++j) {
    const auto& c = d.chords[j];
    if (!zero(c.tail_component)) continue;
    if (bounds.max_action && c.action > *bounds.max_action) continue;
    cur = {j};
    act = c.action;
    dfs();
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.chords.size() != b.chords.size() ? a.chords.size() < b.chords.size() : a.chords < b.chords;
  });
  return out;
}

std::pair<CyclicWord, int> primitive_decomposition(const CyclicWord& w) {
  const auto& c = w.word.chords;
  size_t n = c.size();
  for (size_t p = 1; p <= n; ++p) {
    if (n % p) continue;
    bool periodic = true;
    for (size_t i = p; i < n && periodic; ++i) periodic = c[i] == c[i - p];
    if (periodic) return {CyclicWord{Word{minimal_rotation({c.begin(), c.begin() + static_cast<long>(p)})}}, static_cast<int>(n / p)};
  }
  return {w, 1};
}

CyclicWord power(const CyclicWord& w, int k) {
  std::vector<int> c;
  for (int i = 0; i < k; ++i) c.insert(c.end(), w.word.chords.begin(), w.word.chords.end());
  return CyclicWord{Word{minimal_rotation(c)}};
}

std::vector<OrbitString> all_orbit_strings(const CyclicWord& w) {
  size_t n = w.length();
  std::vector<OrbitString> out;
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    OrbitString s;
    for (size_t k = 0; k < n; ++k) s.sides.push_back((mask >> k) & 1 ? Side::EtaBar : Side::Eta);
    out.push_back(s);
  }
  return out;
}

Q default_pushout_offset(const ResolvedDiagram& d) {
  BigInt den = 1;
  for (const auto& v : d.components)
    for (const auto& p : v) {
      den = boost::multiprecision::lcm(den, denominator(p.x));
      den = boost::multiprecision::lcm(den, denominator(p.y));
    }
  return Q(BigInt(1), 64 * den);
}

PushOutCurve push_out(const ResolvedDiagram& d, const CyclicWord& w, const OrbitString& s) {
  return push_out(d, w, s, default_pushout_offset(d));
}

PushOutCurve push_out(const ResolvedDiagram& d, const CyclicWord& w, const OrbitString& s, const Q& offset) {
  const auto& word = w.word.chords;
  size_t n = word.size();
  if (s.sides.size() != n) throw ValidationError("orbit string needs one side per composable pair");
  struct Piece {
    int comp, seg;
    Point du, base, nu;
  };
  std::vector<Piece> pieces;
  for (size_t k = 0; k < n; ++k) {
    const auto& a = d.chords.at(word[k]);
    const auto& b = d.chords.at(word[(k + 1) % n]);
    ensure(a.tip_component == b.tail_component, "non-composable pair in push-out");
    int comp = a.tip_component;
    const auto& v = d.components[comp];
    int nv = static_cast<int>(v.size());
    Q side = d.coefficient(comp) == 1 ? 1 : -1;
    bool forward = s.sides[k] == Side::Eta;
    int i = a.tip.segment;
    int count = 0;
    while (true) {
      Point dir = forward ? v[(i + 1) % nv] - v[i] : v[i] - v[(i + 1) % nv];
      Q g = std::max(abs(dir.x), abs(dir.y));
      Point du{dir.x / g, dir.y / g};
      Point nu{-du.y * side, du.x * side};
      pieces.push_back({comp, i, du, v[i] + offset * nu, nu});
      ++count;
      bool later = forward ? b.tail.t > a.tip.t : b.tail.t < a.tip.t;
      if (i == b.tail.segment && (count > 1 || later)) break;
      i = forward ? (i + 1) % nv : (i - 1 + nv) % nv;
    }
  }
  std::vector<Piece> merged;
  auto same = [](const Piece& x, const Piece& y) { return x.comp == y.comp && x.seg == y.seg && x.du == y.du; };
  for (const auto& p : pieces)
    if (merged.empty() || !same(merged.back(), p)) merged.push_back(p);
  if (merged.size() > 1 && same(merged.front(), merged.back())) merged.pop_back();

  PushOutCurve out;
  out.offset = offset;
  size_t m = merged.size();
  for (size_t k = 0; k < m; ++k) {
    const Piece& A = merged[(k + m - 1) % m];
    const Piece& B = merged[k];
    Q den = cross(A.du, B.du);
    ensure(den != 0, "consecutive push-out pieces are parallel");
    Q t = cross(B.base - A.base, B.du) / den;
    out.vertices.push_back(A.base + t * A.du);
    out.host_component.push_back(B.comp);
    out.host_segment.push_back(B.seg);
    out.host_normal.push_back(B.nu);
  }
  return out;
}

}  // namespace reebsurg
