#pragma once

#include "reebsurg/homology.hpp"

#include <vector>

namespace reebsurg {

struct QuiverEdge {
  int chord = 0;
  int from = 0;
  int to = 0;
};

struct Quiver {
  int vertices = 0;
  std::vector<QuiverEdge> edges;
  int collapsed_rank = 0;  // rank of H1 of the one-vertex collapse
};

Quiver build_quiver(const ResolvedDiagram& d);
// Counts closed paths of the given length in the quiver, up to rotation.
long long count_cyclic_paths(const Quiver& q, int length, const std::vector<int>& allowed_vertices);

// Letters are signed 1-based chord labels; negative letters are inverses.
bool cyclic_equivalence(const std::vector<int>& x, const std::vector<int>& y);
bool exposed_required(const ResolvedDiagram& d, const std::vector<CyclicWord>& plus,
                      const std::vector<CyclicWord>& minus);

struct GradedOrbit {
  CyclicWord word;
  OrbitString string;
  int sign = 1;  // +1 for positive ends, -1 for negative ends
};

using IGradingVector = std::vector<long long>;

// Linking numbers with each component and winding numbers about each face basepoint.
struct PushOutData {
  std::vector<Q> linking;
  std::vector<long long> winding;
};
PushOutData pushout_data(const ResolvedDiagram& d, const CyclicWord& w, const OrbitString& s);

// Grading of a single orbit with a rational surface coefficient vector; sums of
// these over class-zero collections are the integral gradings.
std::vector<Q> i_grading_rational(const ResolvedDiagram& d, const H1Presentation& h, const GradedOrbit& g);
IGradingVector i_grading(const ResolvedDiagram& d, const H1Presentation& h,
                         const std::vector<GradedOrbit>& collection);
// Same, using the default eta side choice for every orbit.
IGradingVector i_grading_default(const ResolvedDiagram& d, const H1Presentation& h,
                                 const std::vector<CyclicWord>& plus,
                                 const std::vector<CyclicWord>& minus);
bool delta_i_obstruction(const IGradingVector& delta);
Q energy_lower_bound(const IGradingVector& delta, const std::vector<Q>& areas);

struct BubblingFace {
  int face = 0;  // 0-based face index
  CyclicWord corner_word;
};

std::vector<BubblingFace> bubbling_faces(const ResolvedDiagram& d);

}  // namespace reebsurg
