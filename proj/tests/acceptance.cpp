// Prints one PASS/FAIL line per acceptance criterion.
// With --expect-fail N[,M...] the exit status is 0 exactly when the failing
// set equals the listed one; without it, 0 means everything passed.

#include "support.hpp"

#include <iostream>
#include <sstream>

using namespace rt;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

void fail(Result& r, const std::string& why) {
  if (r.ok) r.detail = why;
  r.ok = false;
}

Result rotation_table() {
  Result r;
  auto d = trefoil(1);
  const long long table[5][5] = {
      {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {1, 1, 1, 1, 2}, {0, 0, 0, 0, 1},
  };
  int match = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      if (capping_angle(d, a, b, Side::Eta).rot == table[a][b])
        ++match;
      else
        fail(r, "rot(r" + std::to_string(a + 1) + ",r" + std::to_string(b + 1) + ") differs");
    }
  r.detail = std::to_string(match) + "/25 entries" + (r.ok ? "" : "; " + r.detail);
  return r;
}

Result crossing_table() {
  Result r;
  auto p = crossing_monomials(trefoil(1));
  auto m = crossing_monomials(trefoil(-1));
  const int plus[5] = {2, 2, 2, 0, 0};
  const int minus[5] = {0, 0, 0, -2, -2};
  const int pairs[5][5] = {
      {0, 0, 2, 3, 1}, {0, 0, 0, 1, 1}, {-2, 0, 0, 1, -1}, {1, 1, 3, 4, 2}, {-1, 1, 1, 2, 0},
  };
  int match = 0, total = 0;
  for (int j = 0; j < 5; ++j) {
    total += 2;
    match += (p.chord[j][0] == plus[j]) + (m.chord[j][0] == minus[j]);
    for (int k = 0; k < 5; ++k) {
      ++total;
      bool ok = p.pair[j][k].size() == 1 && p.pair[j][k][0] == pairs[j][k] && m.pair[j][k].size() == 1 &&
                m.pair[j][k][0] == pairs[j][k];
      match += ok;
    }
  }
  if (match != total) fail(r, "mismatch");
  r.detail = std::to_string(match) + "/" + std::to_string(total) + " entries";
  return r;
}

Result orbit_table() {
  Result r;
  struct Row {
    const char* word;
    long long mu_plus, cz_plus, mu_minus, cz_minus;
  };
  std::vector<Row> rows = {
      {"r1", 1, 1, 0, 0},   {"r2", 1, 1, 0, 0},   {"r3", 1, 1, 0, 0},    {"r4", 0, 2, 1, 1},
      {"r5", 0, 2, -1, 1},  {"r1r2", 0, 2, 0, 0}, {"r1r3", 0, 2, 0, 0},  {"r1r4", 1, 3, 1, 1},
      {"r1r5", 1, 3, -1, 1}, {"r2r3", 0, 2, 0, 0}, {"r2r4", 0, 3, 0, 1},  {"r2r5", 0, 3, 0, 1},
      {"r3r4", 1, 3, 1, 1}, {"r3r5", 1, 3, -1, 1}, {"r4r5", 0, 4, 0, 2},
  };
  auto p = trefoil(1);
  auto m = trefoil(-1);
  auto hp = h1_presentation(p);
  auto hm = h1_presentation(m);
  auto tp = generators(p, hp, {2, std::nullopt});
  auto tm = generators(m, hm, {2, std::nullopt});
  auto lookup = [](const GeneratorTable& t, const CyclicWord& w) -> const GeneratorRecord* {
    for (const auto& g : t.good)
      if (g.word == w) return &g;
    return nullptr;
  };
  int match = 0;
  for (const auto& row : rows) {
    const auto* a = lookup(tp, cw(p, row.word));
    const auto* b = lookup(tm, cw(m, row.word));
    bool ok = a && b && ((a->h1_class.vector[0] % 2) + 2) % 2 == row.mu_plus && a->cz == row.cz_plus &&
              b->h1_class.vector[0] == row.mu_minus && b->cz == row.cz_minus;
    if (ok)
      ++match;
    else
      fail(r, std::string("row ") + row.word);
  }
  r.detail = std::to_string(match) + "/15 rows" + (r.ok ? "" : "; " + r.detail);
  return r;
}

Result i_table() {
  Result r;
  auto d = trefoil(1);
  auto h = h1_presentation(d);
  struct Row {
    std::vector<std::string> names;
    IGradingVector want;
  };
  // the table as printed in the source
  std::vector<Row> rows = {
      {{"r4"}, {0, 0, 0, 0, 1, 0}},
      {{"r1", "r1"}, {-1, -1, -2, -1, 1, 1}},
      {{"r2", "r2"}, {1, 2, 2, 1, -1, -1}},
      {{"r3", "r3"}, {-1, -2, -1, -1, 1, 1}},
      {{"r1", "r2"}, {0, 1, 0, 0, 0, 0}},
      {{"r1", "r3"}, {-1, -1, -1, -1, 1, 1}},
      {{"r2", "r3"}, {0, 0, 1, 0, 0, 0}},
  };
  int cells = 0;
  bool string_independent = true;
  std::ostringstream diffs;
  for (const auto& row : rows) {
    std::vector<CyclicWord> ws;
    unsigned letters = 0;
    for (const auto& n : row.names) {
      ws.push_back(cw(d, n));
      letters += static_cast<unsigned>(ws.back().length());
    }
    std::optional<IGradingVector> first;
    for (unsigned mask = 0; mask < (1u << letters); ++mask) {
      std::vector<GradedOrbit> coll;
      unsigned bit = 0;
      for (const auto& w : ws) {
        auto strings = all_orbit_strings(w);
        coll.push_back({w, strings[(mask >> bit) & ((1u << w.length()) - 1)], 1});
        bit += static_cast<unsigned>(w.length());
      }
      auto g = i_grading(d, h, coll);
      if (!first)
        first = g;
      else if (g != *first)
        string_independent = false;
    }
    for (int k = 0; k < 6; ++k) {
      if ((*first)[k] == row.want[k]) {
        ++cells;
      } else {
        std::string name;
        for (const auto& n : row.names) name += "(" + n + ")";
        diffs << " " << name << " I" << (k + 1) << "=" << (*first)[k] << " vs " << row.want[k] << ";";
      }
    }
  }
  r.ok = cells == 42 && string_independent;
  r.detail = std::to_string(cells) + "/42 cells" + (string_independent ? ", identical for every orbit string" : ", depends on orbit string");
  if (cells != 42) r.detail += "; differing:" + diffs.str();
  return r;
}

Result forcing() {
  Result r;
  auto d = trefoil(1);
  auto h = h1_presentation(d);
  auto t = generators(d, h, {2, std::nullopt});
  int src = -1;
  for (size_t i = 0; i < t.good.size(); ++i)
    if (t.good[i].word == cw(d, "r4")) src = static_cast<int>(i);
  if (src < 0) {
    fail(r, "(r4) missing");
    return r;
  }
  auto rep = differential_candidates(d, h, t, src, Q(1, 100));
  std::ostringstream os;
  os << rep.examined << " monomials examined, survivors:";
  for (const auto& c : rep.survivors) os << " " << c.name;
  r.ok = rep.survivors.size() == 1 && rep.survivors[0].name == "1" &&
         rep.survivors[0].bubbling_faces == std::vector<int>{4} && rep.survivors[0].count == "+-1";
  if (!rep.survivors.empty() && !rep.survivors[0].bubbling_faces.empty())
    os << " via face R" << rep.survivors[0].bubbling_faces[0] + 1 << " count " << rep.survivors[0].count;
  r.detail = os.str();
  return r;
}

std::string rname(int k) {
  std::string s;
  for (int i = 0; i < k; ++i) s += "r1";
  return s;
}

Result unknot_suite() {
  Result r;
  auto m = unknot(-1);
  auto p = unknot(1);
  if (m.chords.size() != 1) fail(r, "chord count");
  auto hm = h1_presentation(m);
  auto hp = h1_presentation(p);
  if (describe_group(hm) != "Z/2") fail(r, "H1 for c=-1 is " + describe_group(hm));
  if (describe_group(hp) != "Z") fail(r, "H1 for c=+1 is " + describe_group(hp));
  for (int k = 1; k <= 5; ++k) {
    auto wm = cw(m, rname(k));
    auto wp = cw(p, rname(k));
    if (cz_integral(m, wm) != k) fail(r, "CZ c=-1 k=" + std::to_string(k));
    if (cz_integral(p, wp) != 2 * k) fail(r, "CZ c=+1 k=" + std::to_string(k));
    if (is_bad(m, wm) != (k % 2 == 0)) fail(r, "bad flag c=-1 k=" + std::to_string(k));
    if (is_bad(p, wp)) fail(r, "bad flag c=+1 k=" + std::to_string(k));
  }
  if (r.ok) r.detail = "1 chord, Z/2 and Z, CZ = k and 2k for k <= 5, bad exactly for even k at c=-1";
  return r;
}

Result stabilized() {
  Result r;
  auto d = stabilized_unknot();
  auto h = h1_presentation(d);
  if (d.chords.size() != 2) fail(r, "chord count");
  if (d.tb != std::vector<long long>{-2}) fail(r, "tb");
  if (d.rot != std::vector<long long>{1}) fail(r, "rot");
  auto w = cw(d, "r1");
  if (cz_integral(d, w) != 2) fail(r, "CZ(r1)");
  if (!orbit_class_monomial(d, h, w).zero) fail(r, "class of (r1)");
  bool found = false;
  for (const auto& b : bubbling_faces(d)) found = found || (b.face == 1 && b.corner_word == w);
  if (!found) fail(r, "face R2 missing from bubbling faces");
  if (r.ok) r.detail = "2 chords, tb=-2, rot=1, CZ(r1)=2, class 0, bubbling face with corner word (r1)";
  return r;
}

Result hopf_quiver() {
  Result r;
  auto d = diagram("L1,L3,X2,X2,R1,R1 / surgery {0:+1, 1:+1}");
  auto q = build_quiver(d);
  if (q.vertices != 2) fail(r, "vertex count");
  if (q.edges.size() != 4) fail(r, "edge count");
  std::vector<int> loops;
  int across = 0, back = 0;
  for (size_t i = 0; i < q.edges.size(); ++i) {
    const auto& e = q.edges[i];
    if (e.from == e.to) loops.push_back(static_cast<int>(i));
    across += e.from == 0 && e.to == 1;
    back += e.from == 1 && e.to == 0;
  }
  if (loops.size() != 2 || q.edges[loops[0]].from == q.edges[loops[1]].from) fail(r, "loops");
  if (across != 1 || back != 1) fail(r, "mixed edges");
  std::ostringstream os;
  os << q.vertices << " vertices, " << q.edges.size() << " edges";
  for (int i : loops) os << ", loop r" << q.edges[i].chord + 1 << "@l" << q.edges[i].from + 1;
  os << " (chords numbered left to right, so the l1 loop is r3 here and r1 under the other common labelling)";
  r.detail = os.str();
  return r;
}

Result property_suite() {
  Result r;
  Q eps(1, 100);
  std::ostringstream os;
  int n4 = 0;
  for (int c : {1, -1}) {
    auto d = trefoil(c);
    auto h = h1_presentation(d);
    for (const auto& w : enumerate_orbit_words(d, {4, std::nullopt})) {
      ++n4;
      // (a)
      if (((cz_integral(d, w) % 2) + 2) % 2 != cz_mod2(d, w)) fail(r, "(a) " + word_name(w.word.chords));
      // (b)
      auto rm = return_map(d, w);
      if (!(rm.determinant() == IntPoly(1))) fail(r, "(b) " + word_name(w.word.chords));
      // (c)
      long long rot = 0, plus = 0;
      const auto& ch = w.word.chords;
      for (size_t k = 0; k < ch.size(); ++k) {
        rot += capping_angle(d, ch[k], ch[(k + 1) % ch.size()], Side::Eta).rot;
        plus += d.coefficient(d.chords[ch[k]].tip_component) == 1;
      }
      int want = ((rot + plus) % 2 == 0) ? 1 : -1;
      auto tr = rm.trace();
      if (tr.degree() != static_cast<int>(w.length()) || tr.leading() != want) fail(r, "(c) " + word_name(ch));
      // (d)
      Q a = orbit_action(d, w, eps);
      if (!(abs(a - word_action(d, ch)) < 3 * eps * static_cast<long long>(w.length()))) fail(r, "(d) " + word_name(ch));
      // (e), (f)
      if (w.length() <= 3) {
        auto mono = orbit_class_monomial(d, h, w);
        for (const auto& s : all_orbit_strings(w))
          if (orbit_class_pushout(d, h, w, s).normal_form != mono.normal_form) fail(r, "(e) " + word_name(ch));
        auto sol = embed_orbit(d, w, eps);
        auto oracle = affine_oracle(d, w, eps, 3);
        if (!oracle.unique || oracle.points != sol.points) fail(r, "(f) " + word_name(ch));
      }
    }
    // (h)
    for (int j1 = 0; j1 < 5; ++j1)
      for (int j2 = 0; j2 < 5; ++j2)
        if (capping_angle(d, j1, j2, Side::Eta).t - capping_angle(d, j1, j2, Side::EtaBar).t != 4 * d.rot[0])
          fail(r, "(h)");
  }
  // (g)
  int mats = 0;
  for (long long a = -5; a <= 5; ++a)
    for (long long b = -5; b <= 5; ++b)
      for (long long c = -5; c <= 5; ++c)
        for (long long e = -5; e <= 5; ++e) {
          IntMatrix m = {{a, b}, {c, e}};
          auto s = smith_normal_form(m);
          auto want = coker_brute(m);
          std::vector<long long> torsion;
          int free_rank = 0;
          for (long long x : s.diagonal) {
            free_rank += x == 0;
            if (x > 1) torsion.push_back(x);
          }
          if (torsion != want.torsion || free_rank != want.free_rank) fail(r, "(g)");
          ++mats;
        }
  os << n4 << " words (both c), " << mats << " matrices";
  r.detail = os.str() + (r.ok ? "" : "; first failure " + r.detail);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) expected.insert(std::stoi(item));
    }
  }
  std::vector<std::pair<std::string, Result (*)()>> criteria = {
      {"trefoil rotation table", rotation_table},
      {"trefoil crossing monomials", crossing_table},
      {"trefoil orbit table", orbit_table},
      {"trefoil I grading table", i_table},
      {"trefoil differential forcing", forcing},
      {"unknot suite", unknot_suite},
      {"stabilized unknot", stabilized},
      {"Hopf link quiver", hopf_quiver},
      {"property suite", property_suite},
  };
  std::set<int> failed;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Result res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = std::string("exception: ") + e.what();
    }
    int id = static_cast<int>(i) + 1;
    if (!res.ok) failed.insert(id);
    std::cout << id << ". " << (res.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << ": " << res.detail << "\n";
  }
  return failed == expected ? 0 : 1;
}
