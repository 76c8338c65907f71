#pragma once

#include "reebsurg/dynamics.hpp"
#include "reebsurg/indices.hpp"
#include "reebsurg/quiver_grading.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reebsurg {

struct GeneratorRecord {
  CyclicWord word;
  bool good = true;
  long long cz = 0;
  long long degree = 0;  // CZ - 1
  OrbitClass h1_class;
  std::optional<IGradingVector> grading;
  std::vector<Q> rational_grading;  // filled when H1 is finite
  Q word_action;
  HyperbolicType type = HyperbolicType::Positive;
  Q threshold;
};

struct GeneratorTable {
  std::vector<GeneratorRecord> good;
  std::vector<GeneratorRecord> bad;
  bool z_graded = false;
};

struct Monomial {
  std::vector<int> generators;  // indices into the good table, sorted
};

struct Candidate {
  Monomial monomial;
  std::string name;  // "1" for the constant term
  std::vector<std::string> trail;
  std::vector<int> bubbling_faces;  // face indices witnessing a +-1 count
  std::string count;                // "+-1", "+-1 (sign ambiguous)" or "unknown"
  long long degree = 0;
  Q word_action;
  std::optional<IGradingVector> delta_i;
  std::optional<Q> energy;
};

struct CandidateReport {
  int source = 0;  // index into the good table
  std::vector<Candidate> survivors;
  std::vector<std::string> warnings;
  long long examined = 0;
  bool degraded = false;  // mod 2 degree filtering only
};

GeneratorTable generators(const ResolvedDiagram& d, const H1Presentation& h, const WordBounds& bounds);
CandidateReport differential_candidates(const ResolvedDiagram& d, const H1Presentation& h,
                                        const GeneratorTable& table, int source, const Q& epsilon);
bool z_grading_valid(const ResolvedDiagram& d, const H1Presentation& h, const OrbitClass& cls);

}  // namespace reebsurg
