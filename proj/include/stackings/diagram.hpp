#ifndef STACKINGS_DIAGRAM_HPP
#define STACKINGS_DIAGRAM_HPP

#include <map>
#include <string>
#include <vector>

#include "stackings/complex.hpp"
#include "stackings/report.hpp"
#include "stackings/stacking.hpp"

namespace stackings {

// A disk diagram over a target complex: a finite combinatorial disk together
// with a cellular map to the target. Faces are oriented counterclockwise and
// `outer` walks the boundary of the unbounded region, so every diagram edge
// is traversed exactly twice among the face boundaries and the outer word,
// once in each direction. Together with connectivity and Euler characteristic
// V - E + F = 1 this pins down a planar embedding: the corner transitions of
// the face boundaries and the outer word define the rotation at every vertex,
// so no separate rotation system is stored.
struct DiskDiagram {
  TwoComplex complex;
  std::vector<SignedEdge> outer;
  std::map<std::string, std::string> cell_map;  // diagram cell -> target cell

  bool operator==(const DiskDiagram&) const = default;
};

// Structural and mapping checks, reported with codes:
//   dia.complex    the underlying complex fails validation
//   dia.connected  the diagram is empty or not connected
//   dia.euler      V - E + F differs from 1
//   dia.outer      the outer word is empty, uses unknown edges, or is not a
//                  closed path
//   dia.slots      some edge is not traversed exactly once in each direction
//                  among face boundaries and the outer word
//   dia.map        the cell map misses a cell, mixes dimensions, fails to
//                  commute with edge endpoints, or sends a face boundary to
//                  a word that is no rotation (or reflected rotation) of its
//                  target face boundary
Report check_diagram(const DiskDiagram& d, const TwoComplex& target);

// A cancellable pair: the two sides of some diagram edge whose mapped
// boundary words mirror each other exactly around that edge, so the pair
// could be surgered out of the diagram. Reported as dia.cancellable. Only the
// cell map is consulted, so faces with equal target boundaries count as the
// same label.
Report check_reduced(const DiskDiagram& d);

// Pull the target stacking back along the cell map: sides and corners sort
// by the rank of their image side or corner, ties broken by face id and
// position. A side-rank tie over an edge means both sides map onto the same
// target side, which is exactly a cancellable pair: malformed_error. On a
// reduced diagram the result is a stacking, and a good one whenever the
// target stacking is good. Also malformed_error when check_diagram fails.
Stacking induce_stacking(const DiskDiagram& d, const TwoComplex& target,
                         const Stacking& target_stacking);

struct FuzzOptions {
  int count = 1;
  unsigned long long seed = 0;
  int max_faces = 8;       // faces per diagram drawn from [1, max_faces]
  int attach_retries = 24; // attachment attempts per growth step
};

// Random reduced disk diagrams over the target, deterministic per seed. Each
// diagram starts as a single face and grows by gluing a fresh face along an
// arc of the outer boundary; attachments that would create a cancellable
// pair are rolled back.
std::vector<DiskDiagram> fuzz_diagrams(const TwoComplex& target, const FuzzOptions& opt);

}  // namespace stackings

#endif
