#include "reebsurg/diagram_core.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace reebsurg {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

Event parse_event(const std::string& raw) {
  std::string t = trim(raw);
  if (t.size() < 2) throw ValidationError("bad event token '" + t + "'");
  Event e{};
  switch (std::toupper(static_cast<unsigned char>(t[0]))) {
    case 'L': e.kind = EventKind::LeftCusp; break;
    case 'R': e.kind = EventKind::RightCusp; break;
    case 'X': e.kind = EventKind::Crossing; break;
    default: throw ValidationError("unknown event kind in '" + t + "'");
  }
  for (size_t i = 1; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw ValidationError("bad strand index in '" + t + "'");
  e.position = std::stoi(t.substr(1));
  return e;
}

int parse_coefficient(const std::string& raw) {
  std::string v = trim(raw);
  if (v == "+1" || v == "1" || v == "+") return 1;
  if (v == "-1" || v == "-") return -1;
  if (v == "0") return 0;
  throw ValidationError("surgery coefficient must be +1, -1 or 0, got '" + v + "'");
}

int parse_sign(const std::string& raw) {
  std::string v = trim(raw);
  if (v == "+" || v == "+1" || v == "1") return 1;
  if (v == "-" || v == "-1") return -1;
  throw ValidationError("orientation must be + or -, got '" + v + "'");
}

int parse_component_id(const std::string& raw) {
  std::string k = trim(raw);
  if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ValidationError("bad component id '" + k + "'");
  return std::stoi(k);
}

// "{0:+1, 1:-1}" -> list of (key, value text)
std::vector<std::pair<int, std::string>> parse_map(const std::string& body) {
  std::string b = trim(body);
  if (b.size() < 2 || b.front() != '{' || b.back() != '}') throw ValidationError("expected {...} in '" + b + "'");
  std::vector<std::pair<int, std::string>> out;
  std::string inner = trim(b.substr(1, b.size() - 2));
  if (inner.empty()) return out;
  for (const auto& item : split(inner, ',')) {
    auto parts = split(item, ':');
    if (parts.size() != 2) throw ValidationError("bad map entry '" + trim(item) + "'");
    out.emplace_back(parse_component_id(parts[0]), trim(parts[1]));
  }
  return out;
}

// Strand tracing: fills component_count and cusp_component, validates positions.
void trace_components(FrontCode& f) {
  std::vector<int> active;  // left-cusp index owning each strand
  std::vector<int> parent;
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (const auto& e : f.events) {
    int n = static_cast<int>(active.size());
    int i = e.position;
    std::string tok = event_token(e);
    if (e.kind == EventKind::LeftCusp) {
      if (i < 1 || i > n + 1) throw ValidationError("event " + tok + " out of range (" + std::to_string(n) + " strands)");
      int k = static_cast<int>(parent.size());
      parent.push_back(k);
      active.insert(active.begin() + (i - 1), {k, k});
    } else {
      if (i < 1 || i + 1 > n) throw ValidationError("event " + tok + " out of range (" + std::to_string(n) + " strands)");
      if (e.kind == EventKind::Crossing) {
        std::swap(active[i - 1], active[i]);
      } else {
        int a = find(active[i - 1]), b = find(active[i]);
        parent[a] = b;
        active.erase(active.begin() + (i - 1), active.begin() + (i + 1));
      }
    }
  }
  if (!active.empty()) throw ValidationError(std::to_string(active.size()) + " open strands at end of events");
  if (parent.empty()) throw ValidationError("empty front");
  std::map<int, int> ids;
  f.cusp_component.clear();
  for (int k = 0; k < static_cast<int>(parent.size()); ++k) {
    int r = find(k);
    auto it = ids.find(r);
    if (it == ids.end()) it = ids.emplace(r, static_cast<int>(ids.size())).first;
    f.cusp_component.push_back(it->second);
  }
  f.component_count = static_cast<int>(ids.size());
}

void validate_maps(const FrontCode& f) {
  for (const auto& [c, v] : f.surgery) {
    if (c < 0 || c >= f.component_count) throw ValidationError("surgery coefficient for unknown component " + std::to_string(c));
    (void)v;
  }
  for (const auto& [c, v] : f.orientations) {
    if (c < 0 || c >= f.component_count) throw ValidationError("orientation for unknown component " + std::to_string(c));
    (void)v;
  }
}

FrontCode parse_json_front(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  FrontCode f;
  if (!j.contains("events")) throw ValidationError("JSON input lacks 'events'");
  const auto& ev = j["events"];
  if (ev.is_string()) {
    for (const auto& t : split(ev.get<std::string>(), ',')) f.events.push_back(parse_event(t));
  } else if (ev.is_array()) {
    for (const auto& t : ev) {
      if (!t.is_string()) throw ValidationError("event entries must be strings");
      f.events.push_back(parse_event(t.get<std::string>()));
    }
  } else {
    throw ValidationError("'events' must be a string or an array");
  }
  auto value_text = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ValidationError("unsupported value in map");
  };
  if (j.contains("surgery")) {
    if (!j["surgery"].is_object()) throw ValidationError("'surgery' must be an object");
    for (auto it = j["surgery"].begin(); it != j["surgery"].end(); ++it)
      f.surgery[parse_component_id(it.key())] = parse_coefficient(value_text(it.value()));
  }
  if (j.contains("orientations")) {
    if (!j["orientations"].is_object()) throw ValidationError("'orientations' must be an object");
    for (auto it = j["orientations"].begin(); it != j["orientations"].end(); ++it)
      f.orientations[parse_component_id(it.key())] = parse_sign(value_text(it.value()));
  }
  return f;
}

FrontCode parse_text_front(const std::string& text) {
  FrontCode f;
  bool have_events = false;
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), '\n', '/');
  std::replace(norm.begin(), norm.end(), ';', '/');
  for (const auto& raw : split(norm, '/')) {
    std::string sec = trim(raw);
    if (sec.empty() || sec[0] == '#') continue;
    auto brace = sec.find('{');
    std::string head = trim(sec.substr(0, brace == std::string::npos ? sec.size() : brace));
    if (!head.empty() && (head.back() == ':' || head.back() == '=')) head = trim(head.substr(0, head.size() - 1));
    if (head == "surgery") {
      if (brace == std::string::npos) throw ValidationError("surgery section needs {...}");
      for (const auto& [c, v] : parse_map(sec.substr(brace))) f.surgery[c] = parse_coefficient(v);
    } else if (head == "orientations" || head == "orientation") {
      if (brace == std::string::npos) throw ValidationError("orientations section needs {...}");
      for (const auto& [c, v] : parse_map(sec.substr(brace))) f.orientations[c] = parse_sign(v);
    } else {
      if (have_events) throw ValidationError("unexpected section '" + sec + "'");
      std::string body = sec;
      if (body.rfind("events", 0) == 0) {
        body = trim(body.substr(6));
        if (!body.empty() && (body[0] == ':' || body[0] == '=')) body = body.substr(1);
      }
      for (const auto& t : split(body, ',')) f.events.push_back(parse_event(t));
      have_events = true;
    }
  }
  if (!have_events) throw ValidationError("no events found");
  return f;
}

// ---------------------------------------------------------------------------
// Layout of the Lagrangian resolution.

const Q kGap = 2;

struct Strand {
  std::vector<Point> pts;
  Q z;
  int left_cusp = -1;
  bool left_upper = false;
  int right_loop = -1;
  bool right_upper = false;
};

struct Layout {
  std::vector<Strand> strands;
  std::vector<std::pair<int, int>> cusps;  // (upper, lower)
  std::vector<std::pair<int, int>> loops;  // (upper, lower) at the right cusp
  std::vector<Q> cusps_z;

  const Point& cur(int s) const { return strands[s].pts.back(); }

  void go(int s, const Point& p) {
    auto& st = strands[s];
    const Point a = st.pts.back();
    if (a == p) return;
    st.z += (a.y + p.y) / 2 * (p.x - a.x);
    st.pts.push_back(p);
  }
};

Q level(int p, int n) { return Q(n - 1 - p) * kGap; }

struct Walk {
  std::vector<Point> verts;
  Q start_z;  // height at verts[0]
};

std::vector<Walk> layout_front(const FrontCode& f) {
  Layout L;
  std::vector<int> active;
  Q x = 0;
  auto extend = [&](const Q& xx) {
    for (int s : active) L.go(s, {xx, L.cur(s).y});
  };
  for (const auto& e : f.events) {
    int n = static_cast<int>(active.size());
    int i = e.position;
    // reflow every strand to its target level
    std::map<int, Q> target;
    for (int p = 0; p < n; ++p) {
      int s = active[p];
      if (e.kind == EventKind::LeftCusp)
        target[s] = level(p < i - 1 ? p : p + 2, n + 2);
      else
        target[s] = level(p, n);
    }
    Q D = 0;
    for (int s : active) D = std::max(D, Q(abs(target[s] - L.cur(s).y)));
    if (D > 0) {
      for (int s : active) {
        Q d = target[s] - L.cur(s).y;
        if (d != 0) L.go(s, {x + abs(d), target[s]});
      }
      x += D;
      extend(x);
      x += 1;
      extend(x);
    }
    if (e.kind == EventKind::LeftCusp) {
      Q yu = level(i - 1, n + 2), yl = level(i, n + 2);
      int above = i - 2 >= 0 ? active[i - 2] : -1;
      int below = i - 1 < n ? active[i - 1] : -1;
      Q z = 0;
      if (above >= 0 && below >= 0)
        z = (L.strands[above].z + L.strands[below].z) / 2;
      else if (above >= 0)
        z = L.strands[above].z - 1;
      else if (below >= 0)
        z = L.strands[below].z + 1;
      int cusp = static_cast<int>(L.cusps.size());
      int su = static_cast<int>(L.strands.size());
      L.strands.push_back({{{x, yu}}, z, cusp, true, -1, false});
      int sl = static_cast<int>(L.strands.size());
      L.strands.push_back({{{x, yl}}, z, cusp, false, -1, false});
      L.cusps.emplace_back(su, sl);
      L.cusps_z.push_back(z);
      active.insert(active.begin() + (i - 1), {su, sl});
      x += 1;
      extend(x);
    } else {
      int a = active[i - 1], b = active[i];
      Q dpre = L.strands[a].z - L.strands[b].z;
      ensure(dpre > 0, "strand heights out of order at " + event_token(e));
      Q ya = L.cur(a).y, yb = L.cur(b).y;
      std::vector<int> others;
      for (int s : active)
        if (s != a && s != b) others.push_back(s);
      L.go(a, {x + kGap, yb});
      L.go(b, {x + kGap, ya});
      if (e.kind == EventKind::Crossing) {
        x += kGap;
        for (int s : others) L.go(s, {x, L.cur(s).y});
        std::swap(active[i - 1], active[i]);
        x += dpre;
        extend(x);
      } else {
        Q w = dpre / kGap;
        L.go(a, {x + kGap + w, yb});
        L.go(b, {x + kGap + w, ya});
        ensure(L.strands[a].z == L.strands[b].z, "right cusp heights disagree");
        int loop = static_cast<int>(L.loops.size());
        L.strands[a].right_loop = loop;
        L.strands[a].right_upper = true;
        L.strands[b].right_loop = loop;
        L.strands[b].right_upper = false;
        L.loops.emplace_back(a, b);
        active.erase(active.begin() + (i - 1), active.begin() + (i + 1));
        x += kGap + w;
        for (int s : others) L.go(s, {x, L.cur(s).y});
        x += 1;
        extend(x);
      }
    }
  }
  ensure(active.empty(), "open strands after layout");

  // Walk each component: rightward along the upper strand of its first cusp.
  std::vector<Walk> comps(f.component_count);
  std::vector<bool> used(L.strands.size(), false);
  for (int k = 0; k < static_cast<int>(L.cusps.size()); ++k) {
    int comp = f.cusp_component[k];
    int start = L.cusps[k].first;
    if (used[start] || !comps[comp].verts.empty()) continue;
    std::vector<Point> verts;
    int cur = start;
    bool forward = true;
    while (true) {
      used[cur] = true;
      const auto& pts = L.strands[cur].pts;
      if (forward) {
        verts.insert(verts.end(), pts.begin(), pts.end());
        auto [u, l] = L.loops[L.strands[cur].right_loop];
        cur = L.strands[cur].right_upper ? l : u;
        forward = false;
      } else {
        verts.insert(verts.end(), pts.rbegin(), pts.rend());
        auto [u, l] = L.cusps[L.strands[cur].left_cusp];
        cur = L.strands[cur].left_upper ? l : u;
        forward = true;
        if (cur == start) break;
      }
    }
    comps[comp] = {std::move(verts), L.cusps_z[k]};
  }
  return comps;
}

std::vector<Point> clean(const std::vector<Point>& v) {
  std::vector<Point> out;
  for (const auto& p : v)
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  bool changed = true;
  while (changed && out.size() > 3) {
    changed = false;
    size_t n = out.size();
    for (size_t i = 0; i < n; ++i) {
      const Point& a = out[(i + n - 1) % n];
      const Point& b = out[i];
      const Point& c = out[(i + 1) % n];
      Point d1 = b - a, d2 = c - b;
      if (cross(d1, d2) == 0 && d1.x * d2.x + d1.y * d2.y > 0) {
        out.erase(out.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

struct Intersection {
  Q t;
  Q u;
};

std::optional<Intersection> segment_intersection(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  Point r = p2 - p1, s = q2 - q1;
  Q den = cross(r, s);
  if (den == 0) return std::nullopt;
  Q t = cross(q1 - p1, s) / den;
  Q u = cross(q1 - p1, r) / den;
  if (t >= 0 && t < 1 && u >= 0 && u < 1) return Intersection{t, u};
  return std::nullopt;
}

std::vector<Q> z_profile(const std::vector<Point>& v) {
  std::vector<Q> z{Q(0)};
  size_t n = v.size();
  for (size_t i = 0; i + 1 < n; ++i) z.push_back(z.back() + (v[i].y + v[i + 1].y) / 2 * (v[i + 1].x - v[i].x));
  return z;
}

struct HalfEdgeGraph {
  struct Edge {
    Point u, w;
    int comp, seg;
  };
  struct Out {
    int oct;
    Point w;
    int edge;
    int dir;
  };
  std::vector<Edge> edges;
  std::map<Point, std::vector<Out>, decltype(&point_less)> out{&point_less};
};

HalfEdgeGraph build_graph(const ResolvedDiagram& d) {
  std::map<std::pair<int, int>, std::vector<std::pair<Q, Point>>> cuts;
  for (const auto& c : d.chords) {
    cuts[{c.tip.component, c.tip.segment}].emplace_back(c.tip.t, c.point);
    cuts[{c.tail.component, c.tail.segment}].emplace_back(c.tail.t, c.point);
  }
  HalfEdgeGraph g;
  for (int ci = 0; ci < static_cast<int>(d.components.size()); ++ci) {
    const auto& v = d.components[ci];
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
      std::vector<Point> seq{v[i]};
      auto it = cuts.find({ci, i});
      if (it != cuts.end()) {
        auto cs = it->second;
        std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [t, p] : cs) seq.push_back(p);
      }
      seq.push_back(v[(i + 1) % n]);
      for (size_t k = 0; k + 1 < seq.size(); ++k) g.edges.push_back({seq[k], seq[k + 1], ci, i});
    }
  }
  for (int idx = 0; idx < static_cast<int>(g.edges.size()); ++idx) {
    const auto& e = g.edges[idx];
    g.out[e.u].push_back({octant(e.w - e.u), e.w, idx, +1});
    g.out[e.w].push_back({octant(e.u - e.w), e.u, idx, -1});
  }
  for (auto& [p, lst] : g.out)
    std::sort(lst.begin(), lst.end(), [](const auto& a, const auto& b) { return a.oct < b.oct; });
  return g;
}

Q shoelace(const std::vector<Point>& cyc) {
  Q a = 0;
  size_t n = cyc.size();
  for (size_t i = 0; i < n; ++i) a += cross(cyc[i], cyc[(i + 1) % n]);
  return a / 2;
}

Point face_basepoint(const std::vector<std::vector<Point>>& boundary) {
  std::set<Q> ys;
  for (const auto& cyc : boundary)
    for (const auto& p : cyc) ys.insert(p.y);
  ensure(ys.size() >= 2, "degenerate face");
  auto it = ys.begin();
  Q y0 = *it++;
  Q ym = (y0 + *it) / 2;
  std::vector<Q> xs;
  for (const auto& cyc : boundary) {
    size_t n = cyc.size();
    for (size_t i = 0; i < n; ++i) {
      const Point& u = cyc[i];
      const Point& w = cyc[(i + 1) % n];
      if ((u.y < ym && ym < w.y) || (w.y < ym && ym < u.y)) xs.push_back(u.x + (ym - u.y) * (w.x - u.x) / (w.y - u.y));
    }
  }
  std::sort(xs.begin(), xs.end());
  ensure(xs.size() >= 2, "scanline misses face");
  return {(xs[0] + xs[1]) / 2, ym};
}

std::string quadrant_label(const Point& v) {
  if (v.x == 0) return v.y > 0 ? "N" : "S";
  if (v.y == 0) return v.x > 0 ? "E" : "W";
  throw InvariantError("corner turn is not perpendicular");
}

}  // namespace

int FrontCode::coefficient(int component) const {
  auto it = surgery.find(component);
  return it == surgery.end() ? 0 : it->second;
}

int FrontCode::orientation(int component) const {
  auto it = orientations.find(component);
  return it == orientations.end() ? 1 : it->second;
}

int FrontCode::left_cusps() const {
  return static_cast<int>(std::count_if(events.begin(), events.end(), [](const Event& e) { return e.kind == EventKind::LeftCusp; }));
}
int FrontCode::right_cusps() const {
  return static_cast<int>(std::count_if(events.begin(), events.end(), [](const Event& e) { return e.kind == EventKind::RightCusp; }));
}
int FrontCode::crossings() const {
  return static_cast<int>(std::count_if(events.begin(), events.end(), [](const Event& e) { return e.kind == EventKind::Crossing; }));
}

std::string event_token(const Event& e) {
  char k = e.kind == EventKind::LeftCusp ? 'L' : e.kind == EventKind::RightCusp ? 'R' : 'X';
  return std::string(1, k) + std::to_string(e.position);
}

FrontCode parse_front(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw ValidationError("empty input");
  FrontCode f = t[0] == '{' ? parse_json_front(t) : parse_text_front(t);
  trace_components(f);
  validate_maps(f);
  return f;
}

Point ResolvedDiagram::point_at(const ArcPos& p) const {
  const auto& v = components[p.component];
  const Point& a = v[p.segment];
  const Point& b = v[(p.segment + 1) % v.size()];
  return a + p.t * (b - a);
}

Q ResolvedDiagram::z_at(const ArcPos& p) const {
  const auto& v = components[p.component];
  const Point& a = v[p.segment];
  Point P = point_at(p);
  return vertex_z[p.component][p.segment] + (a.y + P.y) / 2 * (P.x - a.x);
}

int ResolvedDiagram::direction_at(int component, int segment) const {
  const auto& v = components[component];
  return octant(v[(segment + 1) % v.size()] - v[segment]);
}

Q closed_ydx(const std::vector<Point>& poly) {
  Q s = 0;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    s += (a.y + b.y) / 2 * (b.x - a.x);
  }
  return s;
}

long long winding_number(const std::vector<Point>& poly, const Point& p) {
  long long w = 0;
  size_t n = poly.size();
  for (size_t k = 0; k < n; ++k) {
    const Point& a = poly[k];
    const Point& b = poly[(k + 1) % n];
    if ((a.y <= p.y && p.y < b.y) || (b.y <= p.y && p.y < a.y)) {
      Q x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      ensure(x != p.x, "winding number requested for a point on the curve");
      if (x > p.x) w += b.y > a.y ? 1 : -1;
    }
  }
  return w;
}

namespace {

std::vector<ChordRecord> find_chords(const ResolvedDiagram& d) {
  struct Seg {
    int comp, idx;
    Point a, b;
  };
  std::vector<Seg> segs;
  for (int ci = 0; ci < static_cast<int>(d.components.size()); ++ci) {
    const auto& v = d.components[ci];
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) segs.push_back({ci, i, v[i], v[(i + 1) % n]});
  }
  std::vector<ChordRecord> out;
  for (size_t p = 0; p < segs.size(); ++p) {
    for (size_t q = p + 1; q < segs.size(); ++q) {
      const Seg& A = segs[p];
      const Seg& B = segs[q];
      auto hit = segment_intersection(A.a, A.b, B.a, B.b);
      if (!hit) continue;
      if (hit->t == 0 || hit->u == 0) {
        int n = static_cast<int>(d.components[A.comp].size());
        int gap = std::abs(A.idx - B.idx);
        if (A.comp == B.comp && (gap == 1 || gap == n - 1)) continue;
        throw InvariantError("polylines meet at a vertex; diagram is not chord generic");
      }
      ArcPos ea{A.comp, A.idx, hit->t}, eb{B.comp, B.idx, hit->u};
      Q za = d.z_at(ea), zb = d.z_at(eb);
      ensure(za != zb, "double point with equal heights");
      bool a_over = za > zb;
      ChordRecord c;
      c.tip = a_over ? ea : eb;
      c.tail = a_over ? eb : ea;
      c.tip_component = c.tip.component;
      c.tail_component = c.tail.component;
      c.action = a_over ? za - zb : zb - za;
      c.point = d.point_at(ea);
      Point dover = a_over ? A.b - A.a : B.b - B.a;
      Point dunder = a_over ? B.b - B.a : A.b - A.a;
      c.sign = cross(dover, dunder) > 0 ? 1 : -1;
      c.tip_octant = octant(dover);
      c.tail_octant = octant(dunder);
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), [](const ChordRecord& a, const ChordRecord& b) {
    return a.point.x < b.point.x || (a.point.x == b.point.x && a.point.y > b.point.y);
  });
  for (size_t k = 0; k < out.size(); ++k) out[k].id = static_cast<int>(k) + 1;
  return out;
}

std::vector<Face> compute_faces(const ResolvedDiagram& d) {
  HalfEdgeGraph g = build_graph(d);
  std::map<Point, int, decltype(&point_less)> chord_at(&point_less);
  for (int k = 0; k < static_cast<int>(d.chords.size()); ++k) chord_at[d.chords[k].point] = k;

  struct Cycle {
    std::vector<Point> pts;
    std::vector<std::pair<int, int>> halfedges;  // (edge, dir)
    Q area;
  };
  std::vector<Cycle> cycles;
  std::set<std::pair<int, int>> seen;
  for (const auto& [u0, lst0] : g.out) {
    for (const auto& o0 : lst0) {
      if (seen.count({o0.edge, o0.dir})) continue;
      Cycle cyc;
      Point u = u0, w = o0.w;
      int edge = o0.edge, dir = o0.dir;
      while (!seen.count({edge, dir})) {
        seen.insert({edge, dir});
        cyc.pts.push_back(u);
        cyc.halfedges.emplace_back(edge, dir);
        const auto& lst = g.out.at(w);
        int back = octant(u - w);
        int j = -1;
        for (int m = 0; m < static_cast<int>(lst.size()); ++m)
          if (lst[m].oct == back && lst[m].edge == edge) j = m;
        ensure(j >= 0, "half-edge structure is inconsistent");
        const auto& nx = lst[(j - 1 + lst.size()) % lst.size()];
        u = w;
        w = nx.w;
        edge = nx.edge;
        dir = nx.dir;
      }
      cyc.area = shoelace(cyc.pts);
      cycles.push_back(std::move(cyc));
    }
  }

  // connected pieces of the arrangement, to attach holes
  std::map<Point, int, decltype(&point_less)> vid(&point_less);
  for (const auto& [p, lst] : g.out) vid.emplace(p, static_cast<int>(vid.size()));
  std::vector<int> parent(vid.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (const auto& e : g.edges) parent[find(vid.at(e.u))] = find(vid.at(e.w));
  auto piece = [&](const Cycle& c) { return find(vid.at(c.pts.front())); };

  std::vector<int> bounded;
  for (int k = 0; k < static_cast<int>(cycles.size()); ++k)
    if (cycles[k].area > 0) bounded.push_back(k);
  std::map<int, std::vector<int>> holes;
  for (int k = 0; k < static_cast<int>(cycles.size()); ++k) {
    if (cycles[k].area > 0) continue;
    int best = -1;
    for (int b : bounded) {
      if (piece(cycles[b]) == piece(cycles[k])) continue;
      if (winding_number(cycles[b].pts, cycles[k].pts.front()) == 0) continue;
      if (best < 0 || cycles[b].area < cycles[best].area) best = b;
    }
    if (best >= 0) holes[best].push_back(k);
  }

  std::vector<Face> out;
  for (int b : bounded) {
    const Cycle& cyc = cycles[b];
    Face f;
    f.boundary.push_back(cyc.pts);
    f.area = cyc.area;
    for (int h : holes[b]) {
      f.boundary.push_back(cycles[h].pts);
      f.area += cycles[h].area;
    }
    for (const auto& pts : f.boundary) {
      int n = static_cast<int>(pts.size());
      for (int i = 0; i < n; ++i) {
        const Point& u = pts[i];
        const Point& w = pts[(i + 1) % n];
        auto it = chord_at.find(w);
        if (it == chord_at.end()) continue;
        const ChordRecord& c = d.chords[it->second];
        const Point& nx = pts[(i + 2) % n];
        int din = octant(w - u), dout = octant(nx - w);
        Corner corner;
        corner.chord = it->second;
        // entering on the lower (tail) strand means the boundary jumps up in z
        corner.positive = din % 4 != c.tip_octant % 4;
        corner.quadrant = quadrant_label(octant_vector(dout) - octant_vector(din));
        f.corners.push_back(corner);
      }
    }
    f.basepoint = face_basepoint(f.boundary);
    out.push_back(std::move(f));
  }
  // deterministic order: by basepoint, left to right then top to bottom
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.basepoint.x < b.basepoint.x || (a.basepoint.x == b.basepoint.x && a.basepoint.y > b.basepoint.y);
  });
  for (size_t k = 0; k < out.size(); ++k) out[k].id = static_cast<int>(k) + 1;
  return out;
}

}  // namespace

ResolvedDiagram resolve(const FrontCode& front) {
  ResolvedDiagram d;
  d.front = front;
  auto walks = layout_front(front);
  for (int c = 0; c < static_cast<int>(walks.size()); ++c) {
    auto v = walks[c].verts;
    // default orientation leaves the first cusp along its lower branch
    if (front.orientation(c) > 0) std::reverse(v.begin(), v.end());
    Point anchor = walks[c].verts.front();  // cusp point, a genuine corner
    v = clean(v);
    ensure(v.size() >= 3, "degenerate component polyline");
    auto at = std::find(v.begin(), v.end(), anchor);
    ensure(at != v.end(), "cusp point lost while simplifying the polyline");
    std::rotate(v.begin(), at, v.end());
    for (size_t i = 0; i < v.size(); ++i) octant(v[(i + 1) % v.size()] - v[i]);
    ensure(closed_ydx(v) == 0, "component " + std::to_string(c) + " does not close up in z");
    auto z = z_profile(v);
    for (auto& x : z) x += walks[c].start_z;
    d.vertex_z.push_back(std::move(z));
    d.components.push_back(std::move(v));
  }
  d.chords = find_chords(d);
  ensure(static_cast<int>(d.chords.size()) == front.crossings() + front.right_cusps(),
         "chord count differs from crossings plus right cusps");
  for (const auto& c : d.chords) {
    ensure(c.action > 0, "non-positive chord action");
    ensure(c.tip_octant % 4 == 3 && c.tail_octant % 4 == 1, "chord tangents are not in good position");
  }

  int m = static_cast<int>(d.components.size());
  d.tb.assign(m, 0);
  d.rot.assign(m, 0);
  d.linking.assign(m, std::vector<long long>(m, 0));
  std::vector<std::vector<long long>> doubled(m, std::vector<long long>(m, 0));
  for (const auto& c : d.chords) {
    if (c.tip_component == c.tail_component)
      d.tb[c.tip_component] += c.sign;
    else {
      doubled[c.tip_component][c.tail_component] += c.sign;
      doubled[c.tail_component][c.tip_component] += c.sign;
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      ensure(doubled[i][j] % 2 == 0, "odd inter-component crossing count");
      d.linking[i][j] = doubled[i][j] / 2;
    }
  for (int c = 0; c < m; ++c) {
    const auto& v = d.components[c];
    int n = static_cast<int>(v.size());
    long long total = 0;
    for (int i = 0; i < n; ++i) total += turn(d.direction_at(c, i), d.direction_at(c, (i + 1) % n));
    ensure(total % 8 == 0, "tangent winding is not a whole turn");
    d.rot[c] = total / 8;
  }
  d.faces = compute_faces(d);
  for (const auto& f : d.faces) {
    Q s = 0;
    for (const auto& cr : f.corners) s += cr.positive ? d.chords[cr.chord].action : -d.chords[cr.chord].action;
    ensure(s == f.area, "face " + std::to_string(f.id) + " fails the Stokes check");
  }
  return d;
}

ClassicalInvariants classical_invariants(const ResolvedDiagram& d) { return {d.tb, d.rot, d.linking}; }

std::vector<Q> chord_actions(const ResolvedDiagram& d) {
  std::vector<Q> out;
  for (const auto& c : d.chords) out.push_back(c.action);
  return out;
}

std::vector<Face> faces(const ResolvedDiagram& d) { return d.faces; }

std::vector<Point> point_basis(const ResolvedDiagram& d) {
  std::vector<Point> out;
  for (const auto& f : d.faces) out.push_back(f.basepoint);
  return out;
}

}  // namespace reebsurg
