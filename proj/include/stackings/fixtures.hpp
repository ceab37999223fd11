#ifndef STACKINGS_FIXTURES_HPP
#define STACKINGS_FIXTURES_HPP

#include "stackings/complex.hpp"
#include "stackings/convert.hpp"
#include "stackings/cover.hpp"
#include "stackings/stacking.hpp"
#include "stackings/structures.hpp"

// Recurring example complexes used across the tests, the acceptance suite and
// the command-line examples. Each stacking or structure handed out here has
// been verified by the matching checker; tests freeze them as known-good
// anchors.
namespace stackings::fixtures {

// <a,b | a b a~ b~>: one square face, deck group Z^2.
Presentation torus();
Stacking torus_good_stacking();
StaggeredStructure torus_staggered();  // E = {a,b}, a below b

// <a,b,c | acb, abc>: two triangles over the same three loops, deck group
// Z^2 (both relators force c = (ab)^-1 and commutativity).
Presentation two_triangles();
Stacking two_triangles_good_stacking();

// <a,b | a, ab>: trivial group; the one-relator face "a" collapses.
Presentation collapsing_pair();

// <a | aa, aa>: deck group Z/2 with two parallel faces (torsion-mode tests).
Presentation doubled_loop();

// <a,b,c | a b c~, b a c~>: deck group Z^2 with c = a + b; the two triangles
// swap a and b. Staggering fails outright but slope orders exist on balls.
Presentation swapped_triangles();

// Rational plane picture of a swapped_triangles ball: vertices at the integer
// points of Z^2 (a = (1,0), b = (0,1), c = (1,1)), edges and faces at
// half- and quarter-points chosen so distinct cells never share a point.
Embedding swapped_triangles_embedding(const CoverData& cv);

// Surface of the cube: 8 vertices, 12 edges, 6 square faces.
TwoComplex cube();

// A stacking of the cube found by exhaustive search: every face has a top
// side but some face has no bottom side, and the directed dual has a cycle.
// The cube admits no good stacking at all.
Stacking cube_half_stacking();

}  // namespace stackings::fixtures

#endif
