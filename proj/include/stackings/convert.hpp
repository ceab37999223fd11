#ifndef STACKINGS_CONVERT_HPP
#define STACKINGS_CONVERT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "stackings/cover.hpp"
#include "stackings/orders.hpp"
#include "stackings/stacking.hpp"
#include "stackings/structures.hpp"

namespace stackings {

// Certificate conversions. Every conversion validates its input first and
// throws malformed_error naming the first violated condition; horizon items
// on the input are tolerated. Outputs are plain certificates — run the
// matching checker on them when the input data only held up to the horizon.

// Good quotient stacking -> bislim structure on the ball. Each face is marked
// at its bottom-rank and top-rank boundary positions (lex-least (projected
// edge, position) when several); the preorder compares plus cells by
// reachability in the directed dual of the lifted stacking.
BislimStructure gs_to_bs(const CoverData& cv, const Stacking& quotient_stacking,
                         bool torsion = false);

// Bislim -> invariant staggering: faces order by their plus cells under the
// strict part of the preorder, the plus order is that strict part on the
// marked plus cells, and the minus order is the face order carried through
// the minus marks.
ISStructure bs_to_is(const CoverData& cv, const BislimStructure& b, bool torsion = false);

// Totally bislim -> total invariant staggering; same pullback as bs_to_is
// (totality on the plus cells makes all three orders total).
TISStructure tbs_to_tis(const CoverData& cv, const BislimStructure& b, bool torsion = false);

// Total invariant staggering -> totally bislim: marks are each face's top
// plus cell and bottom minus cell, the preorder is the diagonal plus the
// plus order.
BislimStructure tis_to_tbs(const CoverData& cv, const TISStructure& t, bool torsion = false);

// A total invariant staggering is in particular an invariant staggering.
ISStructure tis_to_is(const CoverData& cv, const TISStructure& t, bool torsion = false);

// Invariant staggering -> good stacking on the quotient, by descent. Faces
// get distinct rational levels from a linear extension of the face order;
// each quotient edge (vertex) reads its side (corner) order off the levels at
// a non-frontier lift. All non-frontier lifts must agree and the descended
// orders must form a good stacking (descent_error otherwise); a quotient cell
// with no non-frontier lift, or a ball face with a non-embedded boundary,
// leaves the descent undecided (horizon_error).
Stacking is_to_gs(const CoverData& cv, const ISStructure& s, bool torsion = false);

// Composite arrow: descend to a good stacking, then mark it back up.
BislimStructure is_to_bs(const CoverData& cv, const ISStructure& s, bool torsion = false);

// Staggered quotient -> total invariant staggering on the ball. Faces in the
// same orbit compare by the oracle on their basepoint words, distinct orbits
// by the quotient face order; the lifted edges of the staggered edge set,
// ordered the same way, serve as both the plus and the minus order. The
// oracle must order the deck group (finite kind: malformed_error; a Magnus
// cap shows up as undecided_error).
TISStructure staggered_to_tis(const CoverData& cv, const StaggeredStructure& st,
                              const LeftOrderOracle& oracle);

// Rational plane picture of a ball: one point per cell, deck translations
// acting by the given vectors.
struct Embedding {
  std::map<std::string, std::pair<Rat, Rat>> barycenters;   // cell -> (x, y)
  std::map<std::string, std::pair<Rat, Rat>> translations;  // generator -> (dx, dy)

  bool operator==(const Embedding&) const = default;
};

// Order ball cells by the linear form q*x + p*y (constant along lines of
// slope p/q). Faces among faces give the face order; edges among edges give
// one order used as both the plus and the minus order. Distinct cells at the
// same level make the orders merely partial: `is` is always produced, `tis`
// only when both classes are tie-free. Barycenters must cover the ball
// exactly and commute with the deck translations (malformed_error).
struct SlopeResult {
  ISStructure is;
  std::optional<TISStructure> tis;
};
SlopeResult slope_projection_order(const CoverData& cv, const Embedding& emb, long long p,
                                   long long q);

}  // namespace stackings

#endif
