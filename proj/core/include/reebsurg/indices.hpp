#pragma once

#include "reebsurg/reeb_words.hpp"

#include <vector>

namespace reebsurg {

struct CappingAngle {
  int j1 = 0;
  int j2 = 0;
  Side side = Side::Eta;
  long long t = 0;  // angle in units of pi/2, always odd
  long long rot = 0;
};

CappingAngle capping_angle(const ResolvedDiagram& d, int j1, int j2, Side side);
long long rotation_number(const ResolvedDiagram& d, int j1, int j2);
long long cz_integral(const ResolvedDiagram& d, const CyclicWord& w);

struct BrokenStringPiece {
  std::vector<int> chords;  // word kappa_k of chords with boundary on the zero-coefficient part
  int indicator = 1;        // a_k
  long long arc_t = 0;      // rotation angle of zeta_k in units of pi/2
};

struct BrokenClosedString {
  std::vector<BrokenStringPiece> pieces;
};

long long chord_word_m(const ResolvedDiagram& d, const std::vector<int>& chords);
long long maslov_bcs(const ResolvedDiagram& d, const BrokenClosedString& b);

long long index_closed(const ResolvedDiagram& d, const std::vector<CyclicWord>& plus,
                       const std::vector<CyclicWord>& minus, long long chi,
                       const std::vector<long long>& pushoff_intersections);
long long index_disk(const ResolvedDiagram& d, const BrokenClosedString& b, long long punctures,
                     const std::vector<long long>& pushoff_intersections);
long long index_general(const ResolvedDiagram& d, const std::vector<CyclicWord>& plus,
                        const std::vector<CyclicWord>& minus,
                        const std::vector<BrokenClosedString>& strings, long long chi,
                        long long interior_punctures, long long boundary_punctures,
                        const std::vector<long long>& pushoff_intersections);

std::vector<long long> c1_class(const ResolvedDiagram& d);
long long meridian_twist(long long cz, long long n, long long k);

}  // namespace reebsurg
