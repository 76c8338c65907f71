#pragma once

#include "reebsurg/reeb_words.hpp"

#include <vector>

namespace reebsurg {

using IntMatrix = std::vector<std::vector<long long>>;

struct SmithForm {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix d;  // diagonal, d_i | d_{i+1}, non-negative
  IntMatrix v;  // unimodular, cols x cols; u * m * v = d
  std::vector<long long> diagonal;
};

SmithForm smith_normal_form(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
long long determinant(const IntMatrix& m);

struct H1Presentation {
  std::vector<int> generators;  // surgered components, in order
  IntMatrix relations;          // symmetric, rows are relations
  SmithForm snf;
  std::vector<long long> torsion;  // invariant factors > 1
  int free_rank = 0;
  bool finite = false;
};

// Class vector over all components; entries for unsurgered components ignored.
struct OrbitClass {
  std::vector<long long> vector;
  std::vector<long long> normal_form;  // SNF coordinates, reduced
  bool zero = false;
};

H1Presentation h1_presentation(const ResolvedDiagram& d);
std::vector<long long> reduce(const H1Presentation& h, const std::vector<long long>& v);
OrbitClass make_class(const H1Presentation& h, const std::vector<long long>& v);
std::string describe_group(const H1Presentation& h);

struct CrossingMonomials {
  // cross_j per chord, over components, for the diagram's own coefficients
  std::vector<std::vector<Q>> chord;
  // cross_{j1,j2}; empty vector when the pair is not composable
  std::vector<std::vector<std::vector<Q>>> pair;
};

std::vector<Q> chord_crossing_monomial(const ResolvedDiagram& d, int j, int c_tail, int c_tip);
CrossingMonomials crossing_monomials(const ResolvedDiagram& d);
OrbitClass orbit_class_monomial(const ResolvedDiagram& d, const H1Presentation& h, const CyclicWord& w);

// Signed-crossing linking numbers of a closed curve with each component (halved).
std::vector<Q> pushout_linking(const ResolvedDiagram& d, const PushOutCurve& p);
OrbitClass orbit_class_pushout(const ResolvedDiagram& d, const H1Presentation& h, const PushOutCurve& p);
// Builds the push-out itself, shrinking the offset while the curve is degenerate.
OrbitClass orbit_class_pushout(const ResolvedDiagram& d, const H1Presentation& h, const CyclicWord& w,
                               const OrbitString& s);
std::vector<Q> pushout_linking(const ResolvedDiagram& d, const CyclicWord& w, const OrbitString& s,
                               PushOutCurve* curve = nullptr);

}  // namespace reebsurg
