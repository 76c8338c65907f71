#include "render.hpp"

#include "reebsurg/chain_report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace reebsurg;
using reebsurg::cli::json;
using reebsurg::cli::Report;
using reebsurg::cli::Table;

namespace {

struct Options {
  std::string input;
  int max_len = -1;
  std::string max_action;
  std::string epsilon = "1/100";
  std::string format = "json";
  std::string source;
};

std::string q(const Q& v) { return to_string(v); }

json point(const Point& p) { return json::array({q(p.x), q(p.y)}); }

std::string chord_name(int j) { return "r" + std::to_string(j + 1); }

std::string side_name(Side s) { return s == Side::Eta ? "eta" : "eta_bar"; }

std::string type_name(HyperbolicType t) { return t == HyperbolicType::Positive ? "positive" : "negative"; }

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<Q>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + q(v[i]);
  return s;
}

std::string read_input(const std::string& path) {
  if (path.empty()) throw ValidationError("--input is required");
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WordBounds bounds(const Options& o) {
  WordBounds b;
  b.max_length = o.max_len;
  if (!o.max_action.empty()) b.max_action = parse_rational(o.max_action);
  if (b.max_length < 0) b.max_length = b.max_action ? 0 : 2;
  return b;
}

json bounds_json(const WordBounds& b) {
  json j;
  j["max_length"] = b.max_length;
  j["max_action"] = b.max_action ? json(q(*b.max_action)) : json(nullptr);
  return j;
}

Q epsilon(const Options& o) {
  Q e = parse_rational(o.epsilon);
  if (e <= 0) throw ValidationError("--epsilon must be positive");
  return e;
}

// "r1r2" -> chords {0, 1}
Word parse_word(const std::string& name) {
  Word w;
  size_t i = 0;
  while (i < name.size()) {
    if (name[i] != 'r') throw ValidationError("bad word '" + name + "'");
    size_t j = i + 1;
    while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
    if (j == i + 1) throw ValidationError("bad word '" + name + "'");
    w.chords.push_back(std::stoi(name.substr(i + 1, j - i - 1)) - 1);
    i = j;
  }
  if (w.chords.empty()) throw ValidationError("empty word");
  return w;
}

json arc_json(const ArcPos& p) { return {{"component", p.component}, {"segment", p.segment}, {"t", q(p.t)}}; }

json chord_json(const ChordRecord& c) {
  return {{"id", c.id},
          {"sign", c.sign},
          {"tail_component", c.tail_component},
          {"tip_component", c.tip_component},
          {"tail", arc_json(c.tail)},
          {"tip", arc_json(c.tip)},
          {"action", q(c.action)},
          {"point", point(c.point)}};
}

json face_json(const Face& f) {
  json corners = json::array();
  for (const auto& c : f.corners)
    corners.push_back({{"chord", chord_name(c.chord)}, {"quadrant", c.quadrant}, {"sign", c.positive ? "positive" : "negative"}});
  return {{"id", f.id}, {"corners", corners}, {"area", q(f.area)}, {"basepoint", point(f.basepoint)}};
}

std::string corner_text(const Face& f) {
  std::string s;
  for (const auto& c : f.corners) s += (s.empty() ? "" : " ") + chord_name(c.chord) + (c.positive ? "+" : "-") + c.quadrant;
  return s;
}

Report cmd_parse(const ResolvedDiagram& d) {
  const auto& f = d.front;
  Report r;
  json events = json::array();
  Table t{"events", {"index", "event"}, {}};
  for (size_t i = 0; i < f.events.size(); ++i) {
    events.push_back(event_token(f.events[i]));
    t.rows.push_back({std::to_string(i + 1), event_token(f.events[i])});
  }
  json orient = json::object(), surgery = json::object();
  Table c{"components", {"component", "orientation", "surgery"}, {}};
  for (int k = 0; k < f.component_count; ++k) {
    orient[std::to_string(k)] = f.orientation(k) > 0 ? "+" : "-";
    surgery[std::to_string(k)] = f.coefficient(k);
    c.rows.push_back({std::to_string(k), f.orientation(k) > 0 ? "+" : "-", std::to_string(f.coefficient(k))});
  }
  r.doc = {{"events", events},     {"orientations", orient},         {"surgery", surgery},
           {"component_count", f.component_count}, {"left_cusps", f.left_cusps()}, {"right_cusps", f.right_cusps()},
           {"crossings", f.crossings()}};
  r.tables = {c, t};
  return r;
}

Report cmd_invariants(const ResolvedDiagram& d) {
  Report r;
  auto inv = classical_invariants(d);
  Table comps{"components", {"component", "tb", "rot", "surgery"}, {}};
  for (size_t i = 0; i < inv.tb.size(); ++i)
    comps.rows.push_back({std::to_string(i), std::to_string(inv.tb[i]), std::to_string(inv.rot[i]),
                          std::to_string(d.coefficient(static_cast<int>(i)))});
  Table link{"linking", {"component"}, {}};
  for (size_t i = 0; i < inv.linking.size(); ++i) {
    link.header.push_back(std::to_string(i));
    std::vector<std::string> row = {std::to_string(i)};
    for (long long x : inv.linking[i]) row.push_back(std::to_string(x));
    link.rows.push_back(row);
  }
  json chords = json::array();
  Table ct{"chords", {"id", "sign", "tail_component", "tip_component", "action", "point"}, {}};
  for (const auto& c : d.chords) {
    chords.push_back(chord_json(c));
    ct.rows.push_back({chord_name(c.id - 1), std::to_string(c.sign), std::to_string(c.tail_component),
                       std::to_string(c.tip_component), q(c.action), "(" + q(c.point.x) + ", " + q(c.point.y) + ")"});
  }
  json faces = json::array();
  Table ft{"faces", {"id", "area", "basepoint", "corners"}, {}};
  for (const auto& f : d.faces) {
    faces.push_back(face_json(f));
    ft.rows.push_back({"R" + std::to_string(f.id), q(f.area), "(" + q(f.basepoint.x) + ", " + q(f.basepoint.y) + ")",
                       corner_text(f)});
  }
  r.doc = {{"tb", inv.tb}, {"rot", inv.rot}, {"linking", inv.linking}, {"chords", chords}, {"faces", faces}};
  r.tables = {comps, link, ct, ft};
  return r;
}

Report cmd_orbits(const ResolvedDiagram& d, const Options& o) {
  Report r;
  auto b = bounds(o);
  Q eps = epsilon(o);
  json rows = json::array();
  Table t{"orbits", {"word", "length", "word_action", "multiplicity", "type", "threshold", "good", "action"}, {}};
  for (const auto& w : enumerate_orbit_words(d, b)) {
    auto [prim, k] = primitive_decomposition(w);
    auto [type, thr] = hyperbolic_type(d, w);
    bool good = !is_bad(d, w);
    json item = {{"word", word_name(w.word.chords)},
                 {"length", w.length()},
                 {"word_action", q(word_action(d, w.word.chords))},
                 {"primitive", word_name(prim.word.chords)},
                 {"multiplicity", k},
                 {"type", type_name(type)},
                 {"threshold", q(thr)},
                 {"good", good}};
    std::string action = "";
    if (eps < thr) {
      auto sol = embed_orbit(d, w, eps);
      json pts = json::array();
      for (const auto& p : sol.points) pts.push_back(json::array({q(p[0]), q(p[1])}));
      item["embedding"] = {{"epsilon", q(eps)}, {"points", pts}, {"action", q(sol.action)}};
      action = q(sol.action);
    } else {
      item["embedding"] = nullptr;
    }
    rows.push_back(item);
    t.rows.push_back({word_name(w.word.chords), std::to_string(w.length()), q(word_action(d, w.word.chords)),
                      std::to_string(k), type_name(type), q(thr), good ? "yes" : "no", action});
  }
  r.doc = {{"bounds", bounds_json(b)}, {"epsilon", q(eps)}, {"orbits", rows}};
  r.tables = {t};
  return r;
}

Report cmd_chords(const ResolvedDiagram& d, const Options& o) {
  Report r;
  auto b = bounds(o);
  json rows = json::array();
  Table t{"chords on unsurgered components", {"word", "length", "word_action", "m"}, {}};
  for (const auto& w : enumerate_chord_words(d, b)) {
    long long m = chord_word_m(d, w.chords);
    rows.push_back({{"word", word_name(w.chords)},
                    {"length", w.chords.size()},
                    {"word_action", q(word_action(d, w.chords))},
                    {"m", m}});
    t.rows.push_back({word_name(w.chords), std::to_string(w.chords.size()), q(word_action(d, w.chords)), std::to_string(m)});
  }
  r.doc = {{"bounds", bounds_json(b)}, {"chord_words", rows}};
  r.tables = {t};
  return r;
}

Report cmd_cz(const ResolvedDiagram& d, const Options& o) {
  Report r;
  auto b = bounds(o);
  json rows = json::array();
  Table t{"Conley-Zehnder indices", {"word", "cz", "cz_mod2", "trace", "sign"}, {}};
  for (const auto& w : enumerate_orbit_words(d, b)) {
    const auto& c = w.word.chords;
    json caps = json::array();
    for (size_t k = 0; k < c.size(); ++k) {
      int j2 = c[(k + 1) % c.size()];
      auto e = capping_angle(d, c[k], j2, Side::Eta);
      auto eb = capping_angle(d, c[k], j2, Side::EtaBar);
      caps.push_back({{"pair", json::array({chord_name(c[k]), chord_name(j2)})},
                      {"t_eta", e.t},
                      {"t_eta_bar", eb.t},
                      {"rot", e.rot}});
    }
    auto rm = return_map(d, w);
    json entries = json::array();
    for (const auto& row : rm.entries) entries.push_back(json::array({to_string(row[0]), to_string(row[1])}));
    long long cz = cz_integral(d, w);
    int m2 = cz_mod2(d, w);
    rows.push_back({{"word", word_name(c)},
                    {"cz", cz},
                    {"cz_mod2", m2},
                    {"capping", caps},
                    {"return_map", {{"sign", rm.sign}, {"entries", entries}, {"trace", to_string(rm.trace())}}}});
    t.rows.push_back({word_name(c), std::to_string(cz), std::to_string(m2), to_string(rm.trace()), std::to_string(rm.sign)});
  }
  r.doc = {{"bounds", bounds_json(b)}, {"orbits", rows}};
  r.tables = {t};
  return r;
}

Report cmd_homology(const ResolvedDiagram& d, const Options& o) {
  Report r;
  auto h = h1_presentation(d);
  auto b = bounds(o);
  json classes = json::array();
  Table t{"orbit classes", {"word", "vector", "normal_form", "zero"}, {}};
  for (const auto& w : enumerate_orbit_words(d, b)) {
    auto cls = orbit_class_monomial(d, h, w);
    classes.push_back({{"word", word_name(w.word.chords)},
                       {"vector", cls.vector},
                       {"normal_form", cls.normal_form},
                       {"zero", cls.zero}});
    t.rows.push_back({word_name(w.word.chords), join(cls.vector), join(cls.normal_form), cls.zero ? "yes" : "no"});
  }
  Table g{"first homology", {"group", "diagonal", "c1"}, {{describe_group(h), join(h.snf.diagonal), join(c1_class(d))}}};
  r.doc = {{"group", describe_group(h)},
           {"generators", h.generators},
           {"relations", h.relations},
           {"diagonal", h.snf.diagonal},
           {"torsion", h.torsion},
           {"free_rank", h.free_rank},
           {"finite", h.finite},
           {"c1", c1_class(d)},
           {"bounds", bounds_json(b)},
           {"classes", classes}};
  r.tables = {g, t};
  return r;
}

Report cmd_quiver(const ResolvedDiagram& d, const Options& o) {
  Report r;
  auto qv = build_quiver(d);
  int max_len = o.max_len < 0 ? 4 : o.max_len;
  json edges = json::array();
  Table e{"edges", {"chord", "from", "to"}, {}};
  for (const auto& x : qv.edges) {
    edges.push_back({{"chord", chord_name(x.chord)}, {"from", "l" + std::to_string(x.from + 1)}, {"to", "l" + std::to_string(x.to + 1)}});
    e.rows.push_back({chord_name(x.chord), "l" + std::to_string(x.from + 1), "l" + std::to_string(x.to + 1)});
  }
  std::vector<int> surgered;
  for (int v = 0; v < qv.vertices; ++v)
    if (d.coefficient(v) != 0) surgered.push_back(v);
  json counts = json::array();
  Table c{"cyclic paths through surgered vertices", {"length", "count"}, {}};
  for (int len = 1; len <= max_len; ++len) {
    long long n = count_cyclic_paths(qv, len, surgered);
    counts.push_back({{"length", len}, {"count", n}});
    c.rows.push_back({std::to_string(len), std::to_string(n)});
  }
  r.doc = {{"vertices", qv.vertices}, {"edges", edges}, {"collapsed_rank", qv.collapsed_rank}, {"cyclic_paths", counts}};
  r.tables = {e, c};
  return r;
}

Report cmd_grading(const ResolvedDiagram& d, const Options& o) {
  Report r;
  auto h = h1_presentation(d);
  if (!h.finite) throw ValidationError("intersection gradings need finite first homology, here " + describe_group(h));
  auto b = bounds(o);
  json faces = json::array();
  Table ft{"faces", {"id", "area", "basepoint"}, {}};
  for (const auto& f : d.faces) {
    faces.push_back({{"id", f.id}, {"area", q(f.area)}, {"basepoint", point(f.basepoint)}});
    ft.rows.push_back({"R" + std::to_string(f.id), q(f.area), "(" + q(f.basepoint.x) + ", " + q(f.basepoint.y) + ")"});
  }
  json rows = json::array();
  Table t{"intersection gradings (default eta strings)", {"word", "class_zero", "grading"}, {}};
  for (const auto& w : enumerate_orbit_words(d, b)) {
    GradedOrbit g{w, OrbitString{std::vector<Side>(w.length(), Side::Eta)}, 1};
    auto rat = i_grading_rational(d, h, g);
    bool zero = orbit_class_monomial(d, h, w).zero;
    json item = {{"word", word_name(w.word.chords)}, {"class_zero", zero}, {"rational_grading", json::array()}};
    for (const auto& x : rat) item["rational_grading"].push_back(q(x));
    item["grading"] = zero ? json(i_grading(d, h, {g})) : json(nullptr);
    rows.push_back(item);
    t.rows.push_back({word_name(w.word.chords), zero ? "yes" : "no", join(rat)});
  }
  json bub = json::array();
  Table bt{"bubbling faces", {"face", "corner_word"}, {}};
  for (const auto& x : bubbling_faces(d)) {
    bub.push_back({{"face", "R" + std::to_string(x.face + 1)}, {"corner_word", word_name(x.corner_word.word.chords)}});
    bt.rows.push_back({"R" + std::to_string(x.face + 1), word_name(x.corner_word.word.chords)});
  }
  r.doc = {{"faces", faces}, {"bounds", bounds_json(b)}, {"orbits", rows}, {"bubbling_faces", bub}};
  r.tables = {ft, t, bt};
  return r;
}

json generator_json(const GeneratorRecord& g) {
  json j = {{"word", word_name(g.word.word.chords)},
            {"good", g.good},
            {"cz", g.cz},
            {"degree", g.degree},
            {"h1_class", {{"vector", g.h1_class.vector}, {"normal_form", g.h1_class.normal_form}, {"zero", g.h1_class.zero}}},
            {"grading", g.grading ? json(*g.grading) : json(nullptr)},
            {"word_action", q(g.word_action)},
            {"type", type_name(g.type)},
            {"threshold", q(g.threshold)}};
  return j;
}

Report cmd_chain(const ResolvedDiagram& d, const Options& o) {
  Report r;
  auto h = h1_presentation(d);
  auto b = bounds(o);
  Q eps = epsilon(o);
  auto table = generators(d, h, b);
  json good = json::array(), bad = json::array();
  Table gt{"generators", {"word", "good", "cz", "degree", "class", "word_action", "type"}, {}};
  auto add_row = [&](const GeneratorRecord& g) {
    gt.rows.push_back({word_name(g.word.word.chords), g.good ? "yes" : "no", std::to_string(g.cz), std::to_string(g.degree),
                       join(g.h1_class.normal_form), q(g.word_action), type_name(g.type)});
  };
  for (const auto& g : table.good) {
    good.push_back(generator_json(g));
    add_row(g);
  }
  for (const auto& g : table.bad) {
    bad.push_back(generator_json(g));
    add_row(g);
  }
  std::vector<int> sources;
  std::optional<CyclicWord> wanted;
  if (!o.source.empty()) wanted = canonical_cyclic(d, parse_word(o.source));
  for (int i = 0; i < static_cast<int>(table.good.size()); ++i)
    if (!wanted || table.good[i].word == *wanted) sources.push_back(i);
  if (!o.source.empty() && sources.empty()) throw ValidationError("source " + o.source + " is not a good generator within the bounds");

  json reports = json::array();
  Table st{"differential candidates", {"source", "candidate", "degree", "word_action", "delta_i", "count"}, {}};
  for (int s : sources) {
    auto rep = differential_candidates(d, h, table, s, eps);
    json surv = json::array();
    for (const auto& c : rep.survivors) {
      json mono = json::array();
      for (int i : c.monomial.generators) mono.push_back(word_name(table.good[i].word.word.chords));
      json bub = json::array();
      for (int f : c.bubbling_faces) bub.push_back({{"face", "R" + std::to_string(f + 1)}, {"count", "+-1"}});
      surv.push_back({{"monomial", mono},
                      {"name", c.name},
                      {"degree", c.degree},
                      {"word_action", q(c.word_action)},
                      {"delta_i", c.delta_i ? json(*c.delta_i) : json(nullptr)},
                      {"energy", c.energy ? json(q(*c.energy)) : json(nullptr)},
                      {"trail", c.trail},
                      {"bubbling", bub},
                      {"count", c.count}});
      st.rows.push_back({word_name(table.good[s].word.word.chords), c.name, std::to_string(c.degree), q(c.word_action),
                         c.delta_i ? join(*c.delta_i) : "", c.count});
    }
    reports.push_back({{"source", word_name(table.good[s].word.word.chords)},
                       {"examined", rep.examined},
                       {"degraded", rep.degraded},
                       {"warnings", rep.warnings},
                       {"survivors", surv}});
  }
  r.doc = {{"bounds", bounds_json(b)}, {"epsilon", q(eps)}, {"z_graded", table.z_graded},
           {"generators", good},       {"bad", bad},         {"reports", reports}};
  r.tables = {gt, st};
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reeb dynamics of contact surgery diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input", o.input, "front diagram file (text or JSON), '-' for stdin");
  app.add_option("--max-len", o.max_len, "maximal word length")->check(CLI::NonNegativeNumber);
  app.add_option("--max-action", o.max_action, "maximal word action, p/q");
  app.add_option("--epsilon", o.epsilon, "handle width, p/q")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv", "md"}))->capture_default_str();

  struct Sub {
    const char* name;
    const char* help;
  };
  std::vector<Sub> subs = {
      {"parse", "validated front code"},
      {"invariants", "tb, rot, linking, chords and faces"},
      {"orbits", "cyclic orbit words with types and embeddings"},
      {"chords", "chord words on components without surgery"},
      {"cz", "Conley-Zehnder indices and return maps"},
      {"homology", "first homology and orbit classes"},
      {"quiver", "component quiver and cycle counts"},
      {"grading", "intersection gradings and bubbling faces"},
      {"chain", "generators and differential candidates"},
  };
  std::map<std::string, CLI::App*> cmd;
  for (const auto& s : subs) cmd[s.name] = app.add_subcommand(s.name, s.help);
  cmd["chain"]->add_option("--source", o.source, "restrict to one source generator, e.g. r4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto d = resolve(parse_front(read_input(o.input)));
    Report r;
    if (cmd["parse"]->parsed()) r = cmd_parse(d);
    if (cmd["invariants"]->parsed()) r = cmd_invariants(d);
    if (cmd["orbits"]->parsed()) r = cmd_orbits(d, o);
    if (cmd["chords"]->parsed()) r = cmd_chords(d, o);
    if (cmd["cz"]->parsed()) r = cmd_cz(d, o);
    if (cmd["homology"]->parsed()) r = cmd_homology(d, o);
    if (cmd["quiver"]->parsed()) r = cmd_quiver(d, o);
    if (cmd["grading"]->parsed()) r = cmd_grading(d, o);
    if (cmd["chain"]->parsed()) r = cmd_chain(d, o);
    reebsurg::cli::print(std::cout, r, o.format);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
