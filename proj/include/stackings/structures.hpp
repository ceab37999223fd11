#ifndef STACKINGS_STRUCTURES_HPP
#define STACKINGS_STRUCTURES_HPP

#include <map>
#include <optional>
#include <string>

#include "stackings/cover.hpp"
#include "stackings/orders.hpp"
#include "stackings/report.hpp"

namespace stackings {

// All certificates live on a Cayley ball (CoverData). In torsion mode every
// "distinct faces" quantifier reads "faces with distinct boundary words up to
// rotation and inversion" instead of "distinct ids".

// Deck-invariant preorder on the ball 1-cells plus a marked boundary edge
// pair r+ / r- per face.
// Conditions: (1) preorder, invariant; (2) r+ traversed exactly once;
// (3) r+/r- are deck-equivariant; (4) distinct r1,r2 with r1+ on the
// boundary of r2 force r1+ strictly below r2+; (5) r2- on the boundary of r1
// forces r1+ strictly below r2+. Missing or off-boundary r+/r- are malformed.
struct BislimStructure {
  Relation preorder;                        // on all ball 1-cells
  std::map<std::string, std::string> plus;  // face -> boundary edge
  std::map<std::string, std::string> minus;

  bool operator==(const BislimStructure&) const = default;
};

Report check_bislim(const CoverData& cv, const BislimStructure& b, bool torsion = false);

// For each face r let S = E+ intersected with its boundary. r+ must be the
// unique element of S that no other element of S sits weakly above.
// Code: BS.umax.
Report check_unique_strict_max(const CoverData& cv, const BislimStructure& b);

// Rebuild the preorder so that the strict part is concentrated on the plus
// cells: keep the pairs among them, put every other edge below all of them,
// add the diagonal. "Plus cell" is read through the projection (every ball
// edge over the image of a plus cell counts), because the deck group of the
// full cover moves any such edge onto a marked one; going by the ball-local
// marked set instead would break invariance at the frontier.
BislimStructure strengthen_unique_max(const CoverData& cv, const BislimStructure& b);

// Bislim whose strict part is total on the plus cells. Extra code: TBS.total.
Report check_tbs(const CoverData& cv, const BislimStructure& b, bool torsion = false);

// Three invariant strict total orders: faces, plus cells E+, minus cells E-.
// Conditions: (4) every face boundary meets E+ and E-; (5) the +-maximal
// boundary cell is traversed exactly once; (6) the face order is carried to
// both edge orders by max+ / min-.
struct TISStructure {
  Relation face_order;
  Relation plus_order;   // ground = E+
  Relation minus_order;  // ground = E-

  bool operator==(const TISStructure&) const = default;
};

Report check_tis(const CoverData& cv, const TISStructure& t, bool torsion = false);

// Partial-order variant: Max+/Min- are sets of maximal/minimal boundary
// cells, compared setwise. (7) a +-maximal cell of a on the boundary of b
// forces a < b; (8) a --minimal cell of a on the boundary of b forces b < a.
struct ISStructure {
  Relation face_order;
  Relation plus_order;
  Relation minus_order;

  bool operator==(const ISStructure&) const = default;
};

Report check_is(const CoverData& cv, const ISStructure& s, bool torsion = false);

// Quotient-level certificate: total order on the faces, total order on a
// subset E of the edges. (a) every face boundary meets E; (b) the face order
// is carried by both max_E and min_E.
struct StaggeredStructure {
  Relation face_order;  // ground = quotient faces
  Relation edge_order;  // ground = E, a subset of quotient edges

  bool operator==(const StaggeredStructure&) const = default;
};

Report check_staggered(const TwoComplex& quotient, const StaggeredStructure& s);

// At least min(#faces, 2) distinct faces of the subcomplex own a free edge
// (an edge traversed by exactly one side among the subcomplex faces).
// Code: collapse.short.
Report check_two_collapsing(const TwoComplex& x, const Subcomplex& sub);

// ---------------- exhaustive searches ----------------

struct BislimSearchResult {
  std::optional<BislimStructure> structure;
  SearchStats stats;
};

// Enumerate candidate preorders (subsets of off-diagonal pairs over the ball
// edges, in bit order) and plus/minus markings (boundary edges per face, in
// id order); return the first candidate passing check_bislim. `examined`
// counts work units: one per marking under a valid preorder, one per subset
// discarded for not being a preorder.
BislimSearchResult search_bislim(const CoverData& cv, long long budget, bool torsion = false);

struct StaggeredSearchResult {
  std::optional<StaggeredStructure> structure;
  SearchStats stats;
};

// Enumerate face permutations, then nonempty edge subsets, then permutations
// of the subset; return the first candidate passing check_staggered.
StaggeredSearchResult search_staggered(const TwoComplex& quotient, long long budget);

}  // namespace stackings

#endif
