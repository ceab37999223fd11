#ifndef STACKINGS_COMPLEX_HPP
#define STACKINGS_COMPLEX_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stackings/report.hpp"

namespace stackings {

// One letter of a boundary word: edge `edge` traversed forwards (dir=+1,
// src->dst) or backwards (dir=-1, dst->src).
struct SignedEdge {
  std::string edge;
  int dir = 1;
  auto operator<=>(const SignedEdge&) const = default;
};

struct EdgeEnds {
  std::string src;
  std::string dst;
  auto operator<=>(const EdgeEnds&) const = default;
};

using BoundaryWord = std::vector<SignedEdge>;

// Finite combinatorial 2-complex. Boundary words are stored with a
// distinguished starting letter but all semantics are cyclic; every word must
// be a closed edge path with no cyclic backtrack (no letter followed
// cyclically by its own inverse).
struct TwoComplex {
  std::set<std::string> vertices;
  std::map<std::string, EdgeEnds> edges;
  std::map<std::string, BoundaryWord> faces;

  bool operator==(const TwoComplex&) const = default;
};

// A side is one traversal of an edge by a face boundary: face `face`,
// letter index `pos` in its boundary word.
struct Side {
  std::string face;
  int pos = 0;
  auto operator<=>(const Side&) const = default;
};

// A corner is one visit of a vertex by a face boundary: the vertex sits
// between letters pos-1 and pos (cyclically) of `face`'s boundary word.
struct Corner {
  std::string face;
  int pos = 0;
  auto operator<=>(const Corner&) const = default;
};

// Sub-collection of cells closed under taking boundaries.
struct Subcomplex {
  std::set<std::string> vertices;
  std::set<std::string> edges;
  std::set<std::string> faces;

  bool operator==(const Subcomplex&) const = default;
};

// Vertex a letter starts at / ends at. Precondition: edge exists.
std::string letter_start(const TwoComplex& x, const SignedEdge& l);
std::string letter_end(const TwoComplex& x, const SignedEdge& l);

// Referential integrity, closed-path and no-backtrack checks.
// Codes: complex.edge-endpoint, complex.dangling-edge, complex.not-closed,
// complex.backtrack, complex.empty-boundary.
Report validate(const TwoComplex& x);

// All sides over `edge`, ordered by (face id, pos). Unknown edge -> empty.
std::vector<Side> sides_over(const TwoComplex& x, const std::string& edge);

// All corners located at `vertex`, ordered by (face id, pos).
std::vector<Corner> corners_at(const TwoComplex& x, const std::string& vertex);

// The letter a side traverses.
const SignedEdge& side_letter(const TwoComplex& x, const Side& s);

// The vertex a corner sits at (= start vertex of letter `pos`).
std::string corner_vertex(const TwoComplex& x, const Corner& c);

// The corner a side's traversal begins/ends at, located at the edge's
// src / dst endpoint respectively. For dir=+1 the traversal begins at src;
// for dir=-1 it begins at dst.
Corner germ_at_src(const TwoComplex& x, const Side& s);
Corner germ_at_dst(const TwoComplex& x, const Side& s);

// Closure check: every cell referenced by a member cell is a member.
// Codes: sub.unknown-cell, sub.not-closed.
Report validate_subcomplex(const TwoComplex& x, const Subcomplex& sub);

Subcomplex full_subcomplex(const TwoComplex& x);

// Smallest subcomplex containing the given faces.
Subcomplex subcomplex_of_faces(const TwoComplex& x, const std::set<std::string>& faces);

// Edges of `sub` traversed by exactly one side among sub's faces, paired with
// that owning face. Sorted by (face, edge).
std::vector<std::pair<std::string, std::string>> free_faces(const TwoComplex& x,
                                                            const Subcomplex& sub);

BoundaryWord inverse_word(const BoundaryWord& w);

// Equality of boundary words as cyclic sequences, up to rotation and
// orientation reversal.
bool boundary_equal_cyclic(const BoundaryWord& a, const BoundaryWord& b);

}  // namespace stackings

#endif
