#pragma once

#include "reebsurg/diagram_core.hpp"

#include <optional>
#include <vector>

namespace reebsurg {

// Chord indices are 0-based internally; r_k is index k-1.
struct Word {
  std::vector<int> chords;
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

struct CyclicWord {
  Word word;  // lexicographically minimal rotation
  bool operator==(const CyclicWord&) const = default;
  auto operator<=>(const CyclicWord&) const = default;
  size_t length() const { return word.chords.size(); }
};

std::string word_name(const std::vector<int>& chords);  // "r1r2"

enum class Side { Eta, EtaBar };

// One side choice per composable pair (r_{j_k}, r_{j_{k+1}}).
struct OrbitString {
  std::vector<Side> sides;
};

struct PushOutCurve {
  std::vector<Point> vertices;
  // For each piece k (vertices[k] -> vertices[k+1]): host component and segment.
  std::vector<int> host_component;
  std::vector<int> host_segment;
  std::vector<Point> host_normal;  // offset direction used for the piece
  Q offset;
};

// Raised when a push-out touches the diagram at a vertex; retry with a smaller offset.
struct DegenerateGeometry : InvariantError {
  using InvariantError::InvariantError;
};

struct WordBounds {
  int max_length = 0;
  std::optional<Q> max_action;
};

bool composable(const ResolvedDiagram& d, int a, int b);
Q word_action(const ResolvedDiagram& d, const std::vector<int>& chords);

std::vector<CyclicWord> enumerate_orbit_words(const ResolvedDiagram& d, const WordBounds& bounds);
CyclicWord canonical_cyclic(const ResolvedDiagram& d, const Word& w);
std::vector<int> minimal_rotation(const std::vector<int>& chords);
std::vector<Word> enumerate_chord_words(const ResolvedDiagram& d, const WordBounds& bounds);
std::pair<CyclicWord, int> primitive_decomposition(const CyclicWord& w);
CyclicWord power(const CyclicWord& w, int k);

std::vector<OrbitString> all_orbit_strings(const CyclicWord& w);
Q default_pushout_offset(const ResolvedDiagram& d);
PushOutCurve push_out(const ResolvedDiagram& d, const CyclicWord& w, const OrbitString& s);
PushOutCurve push_out(const ResolvedDiagram& d, const CyclicWord& w, const OrbitString& s, const Q& offset);

}  // namespace reebsurg
