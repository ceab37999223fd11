#ifndef STACKINGS_DUALGRAPH_HPP
#define STACKINGS_DUALGRAPH_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stackings/complex.hpp"
#include "stackings/orders.hpp"
#include "stackings/stacking.hpp"

namespace stackings {

// One node per face; one edge per pair of sides lying over a common 1-cell
// whose faces count as distinct. By default faces are distinct when their
// ids differ; in torsion mode only when their boundary words differ up to
// rotation and inversion (fewer pairs qualify).
struct DualEdge {
  Side s1, s2;       // canonical: s1 < s2
  std::string edge;  // shared 1-cell

  bool operator==(const DualEdge&) const = default;
};

struct DualGraph {
  std::set<std::string> nodes;
  std::vector<DualEdge> edges;
};

// Each dual edge directed from the face of the lower side to the face of the
// higher side.
struct Arc {
  std::string from, to;
  Side lo, hi;
  std::string edge;

  bool operator==(const Arc&) const = default;
};

struct DirectedDual {
  std::set<std::string> nodes;
  std::vector<Arc> arcs;
};

DualGraph build_dual(const TwoComplex& c, bool torsion_mode = false);

// Requires a stacking that passes check_stacking.
DirectedDual direct_dual(const TwoComplex& c, const Stacking& s, const DualGraph& g);

// Directed cycle as a face sequence (first node repeated at the end), or
// nullopt when acyclic. Deterministic.
std::optional<std::vector<std::string>> find_cycle(const DirectedDual& d);

// Strict partial order: a < b iff b is reachable from a through at least one
// arc. Throws malformed_error when the graph has a cycle.
Relation reachability_order(const DirectedDual& d);

std::string to_dot(const DualGraph& g);
std::string to_dot(const DirectedDual& d);

}  // namespace stackings

#endif
