#include "reebsurg/chain_report.hpp"

#include <algorithm>
#include <functional>

namespace reebsurg {

bool z_grading_valid(const ResolvedDiagram& d, const H1Presentation& h, const OrbitClass& cls) {
  auto c1 = c1_class(d);
  bool c1_zero = std::all_of(c1.begin(), c1.end(), [](long long x) { return x == 0; });
  return c1_zero && (cls.zero || h.finite);
}

GeneratorTable generators(const ResolvedDiagram& d, const H1Presentation& h, const WordBounds& bounds) {
  GeneratorTable table;
  auto c1 = c1_class(d);
  table.z_graded = h.finite && std::all_of(c1.begin(), c1.end(), [](long long x) { return x == 0; });
  for (const auto& w : enumerate_orbit_words(d, bounds)) {
    GeneratorRecord r;
    r.word = w;
    r.cz = cz_integral(d, w);
    r.degree = r.cz - 1;
    r.h1_class = orbit_class_monomial(d, h, w);
    r.word_action = word_action(d, w.word.chords);
    auto [type, eps] = hyperbolic_type(d, w);
    r.type = type;
    r.threshold = eps;
    r.good = !is_bad(d, w);
    if (h.finite) {
      GradedOrbit g{w, OrbitString{std::vector<Side>(w.length(), Side::Eta)}, 1};
      r.rational_grading = i_grading_rational(d, h, g);
      if (r.h1_class.zero) {
        IGradingVector iv;
        for (const auto& x : r.rational_grading) {
          ensure(is_integer(x), "grading of a class-zero orbit is not integral");
          iv.push_back(to_ll(x));
        }
        r.grading = iv;
      }
    }
    (r.good ? table.good : table.bad).push_back(std::move(r));
  }
  return table;
}

CandidateReport differential_candidates(const ResolvedDiagram& d, const H1Presentation& h, const GeneratorTable& table,
                                        int source, const Q& epsilon) {
  if (source < 0 || source >= static_cast<int>(table.good.size())) throw ValidationError("source generator out of range");
  if (epsilon <= 0) throw ValidationError("epsilon must be positive");
  const auto& g = table.good[source];
  CandidateReport rep;
  rep.source = source;
  rep.degraded = !z_grading_valid(d, h, g.h1_class);
  if (rep.degraded) rep.warnings.push_back("degree grading is not integer valued here; filtering degrees mod 2");
  if (!h.finite) rep.warnings.push_back("first homology is infinite; intersection-grading and energy filters skipped");

  const auto& gens = table.good;
  Q g_len = static_cast<long long>(g.word.length());
  Q budget = g.word_action + 3 * epsilon * g_len;
  for (const auto& r : gens)
    if (r.word_action - 3 * epsilon * static_cast<long long>(r.word.length()) <= 0)
      throw ValidationError("epsilon too large for the action filter to terminate");

  auto bubbling = bubbling_faces(d);
  std::vector<Q> areas;
  for (const auto& f : d.faces) areas.push_back(f.area);
  auto target_class = reduce(h, g.h1_class.vector);

  // Running totals over the current monomial. Actions and gradings are kept
  // as integers over a common denominator; rational normalisation in the
  // inner loop dominates the search otherwise.
  auto denominator_lcm = [](BigInt l, const Q& q) {
    BigInt den = boost::multiprecision::denominator(q);
    return l / boost::multiprecision::gcd(l, den) * den;
  };
  BigInt act_den = denominator_lcm(1, 3 * epsilon);
  act_den = denominator_lcm(act_den, budget);
  BigInt grade_den = 1;
  for (const auto& r : gens) {
    act_den = denominator_lcm(act_den, r.word_action);
    for (const auto& x : r.rational_grading) grade_den = denominator_lcm(grade_den, x);
  }
  auto scaled = [](const Q& q, const BigInt& den) {
    return BigInt(boost::multiprecision::numerator(q) * (den / boost::multiprecision::denominator(q)));
  };
  std::vector<BigInt> act_i, grade_flat;
  for (const auto& r : gens) {
    act_i.push_back(scaled(r.word_action, act_den));
    for (size_t k = 0; k < d.faces.size(); ++k)
      grade_flat.push_back(r.rational_grading.empty() ? BigInt(0) : scaled(r.rational_grading[k], grade_den));
  }
  BigInt budget_s = scaled(budget, act_den);
  BigInt slack_s = scaled(3 * epsilon, act_den);

  std::vector<int> mono;
  BigInt act_s = 0;
  long long len = 0;
  long long deg = 0;
  std::vector<long long> cls(d.components.size(), 0);
  std::vector<BigInt> grading(d.faces.size(), BigInt(0));
  auto add = [&](int i, int s) {
    const auto& r = gens[i];
    if (s > 0) act_s += act_i[i]; else act_s -= act_i[i];
    len += s * static_cast<long long>(r.word.length());
    deg += s * r.degree;
    for (size_t c = 0; c < cls.size(); ++c) cls[c] += s * r.h1_class.vector[c];
    for (size_t k = 0; k < grading.size(); ++k) {
      const BigInt& x = grade_flat[i * grading.size() + k];
      if (s > 0) grading[k] += x; else grading[k] -= x;
    }
  };

  std::function<void(int)> visit = [&](int start) {
    ++rep.examined;
    bool deg_ok = rep.degraded ? ((g.degree - 1 - deg) % 2 == 0) : deg == g.degree - 1;
    if (deg_ok && reduce(h, cls) == target_class) {
      Q act(act_s, act_den);
      Candidate c;
      c.monomial.generators = mono;
      c.degree = deg;
      c.word_action = act;
      if (mono.empty()) {
        c.name = "1";
      } else {
        for (int i : mono) c.name += "(" + word_name(gens[i].word.word.chords) + ")";
      }
      c.trail.push_back(rep.degraded ? "degree matches mod 2" : "degree drops by one");
      c.trail.push_back("homology class matches");
      c.trail.push_back("word action within slack: " + to_string(act) + " < " + to_string(budget + 3 * epsilon * len));
      bool keep = true;
      if (h.finite) {
        IGradingVector delta;
        for (size_t k = 0; k < grading.size(); ++k) {
          Q x = g.rational_grading[k] - Q(grading[k], grade_den);
          ensure(is_integer(x), "grading difference of a class-zero pair is not integral");
          delta.push_back(to_ll(x));
        }
        c.delta_i = delta;
        if (delta_i_obstruction(delta)) {
          keep = false;
        } else {
          Q e = energy_lower_bound(delta, areas);
          c.energy = e;
          if (e > g.word_action - act + 3 * epsilon * (g_len + len)) keep = false;
          c.trail.push_back("intersection grading difference non-negative");
          c.trail.push_back("energy bound " + to_string(e) + " within action difference");
        }
      }
      if (keep) {
        c.count = "unknown";
        if (mono.empty()) {
          for (const auto& b : bubbling)
            if (b.corner_word == g.word) c.bubbling_faces.push_back(b.face);
          if (c.bubbling_faces.size() == 1) c.count = "+-1";
          if (c.bubbling_faces.size() > 1) c.count = "+-1 (sign ambiguous)";
        }
        if (c.count == "unknown") c.trail.push_back("unobstructed, count unknown");
        rep.survivors.push_back(std::move(c));
      }
    }
    for (int i = start; i < static_cast<int>(gens.size()); ++i) {
      long long l2 = len + static_cast<long long>(gens[i].word.length());
      if (act_s + act_i[i] >= budget_s + slack_s * l2) continue;
      mono.push_back(i);
      add(i, 1);
      visit(i);
      add(i, -1);
      mono.pop_back();
    }
  };
  visit(0);
  return rep;
}

}  // namespace reebsurg
