#pragma once

#include "reebsurg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace reebsurg {

enum class EventKind { LeftCusp, RightCusp, Crossing };

struct Event {
  EventKind kind;
  int position;  // 1-based strand index counted from the top
};

struct FrontCode {
  std::vector<Event> events;
  std::map<int, int> orientations;  // component -> +1 / -1
  std::map<int, int> surgery;       // component -> -1, 0, +1
  int component_count = 0;
  std::vector<int> cusp_component;  // component of each left cusp, in event order

  int coefficient(int component) const;
  int orientation(int component) const;
  int left_cusps() const;
  int right_cusps() const;
  int crossings() const;
};

// Accepts the text grammar ("L1,R1 / surgery {0:-1}") or the JSON form.
FrontCode parse_front(const std::string& text);
std::string event_token(const Event& e);

// Position along a component polyline: segment index plus parameter in [0,1).
struct ArcPos {
  int component = 0;
  int segment = 0;
  Q t;
};

struct ChordRecord {
  int id = 0;  // 1-based label r_id
  int sign = 0;
  int tail_component = 0;
  int tip_component = 0;
  ArcPos tail;
  ArcPos tip;
  Q action;
  Point point;
  int tip_octant = 0;
  int tail_octant = 0;
};

struct Corner {
  int chord = 0;         // 0-based chord index
  std::string quadrant;  // N, E, S or W
  bool positive = false;
};

struct Face {
  int id = 0;  // 1-based label R_id
  std::vector<Corner> corners;  // in counterclockwise order
  Q area;
  Point basepoint;
  std::vector<std::vector<Point>> boundary;  // outer cycle first, then holes
};

struct ResolvedDiagram {
  FrontCode front;
  std::vector<std::vector<Point>> components;  // closed oriented polylines
  std::vector<std::vector<Q>> vertex_z;        // z at each vertex, heights shared across components
  std::vector<ChordRecord> chords;             // ordered by x, then descending y
  std::vector<Face> faces;
  std::vector<std::vector<long long>> linking;
  std::vector<long long> tb;
  std::vector<long long> rot;

  int coefficient(int component) const { return front.coefficient(component); }
  Q z_at(const ArcPos& p) const;
  Point point_at(const ArcPos& p) const;
  // Segment direction (octant) of the segment carrying the position.
  int direction_at(int component, int segment) const;
};

ResolvedDiagram resolve(const FrontCode& front);

struct ClassicalInvariants {
  std::vector<long long> tb;
  std::vector<long long> rot;
  std::vector<std::vector<long long>> linking;
};

ClassicalInvariants classical_invariants(const ResolvedDiagram& d);
std::vector<Q> chord_actions(const ResolvedDiagram& d);
std::vector<Face> faces(const ResolvedDiagram& d);
std::vector<Point> point_basis(const ResolvedDiagram& d);

// Exact signed integral of y dx around a closed polyline.
Q closed_ydx(const std::vector<Point>& poly);
// Winding number of a closed polyline about a point not on it.
long long winding_number(const std::vector<Point>& poly, const Point& p);

}  // namespace reebsurg
