#ifndef STACKINGS_STACKING_HPP
#define STACKINGS_STACKING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stackings/complex.hpp"
#include "stackings/orders.hpp"
#include "stackings/report.hpp"

namespace stackings {

// A stacking lays the sides over each edge into levels and, consistently,
// the corners around each vertex. Both lists run from lowest to highest.
struct Stacking {
  std::map<std::string, std::vector<Side>> side_order;     // per edge
  std::map<std::string, std::vector<Corner>> corner_order; // per vertex

  bool operator==(const Stacking&) const = default;
};

int side_rank(const Stacking& s, const std::string& edge, const Side& side);   // -1 absent
int corner_rank(const Stacking& s, const std::string& vertex, const Corner& c);

// A side's germ at an edge end is the corner it occupies there; ordering the
// sides over an edge must agree with the corner order at both endpoints.
// Codes: ST.cover (orders don't list exactly the sides/corners present),
// ST.compat (end-induced order disagrees with the side order).
Report check_stacking(const TwoComplex& c, const Stacking& s);

// Goodness: every face has some side lying lowest over its edge and some
// side lying highest over its edge. Codes: GS.low, GS.high.
Report check_good(const TwoComplex& c, const Stacking& s);

// Sort the sides over every edge by the corner ranks at the source endpoint;
// nullopt when the destination endpoint induces a different order.
std::optional<std::map<std::string, std::vector<Side>>> derive_side_orders(
    const TwoComplex& c, const std::map<std::string, std::vector<Corner>>& corner_order);

// Numeric levels realizing a stacking: one rational per corner. A side's
// span is the pair of heights of its two corners in traversal order.
struct HeightAssignment {
  std::map<Corner, Rat> corner_height;
};

HeightAssignment heights_from_stacking(const TwoComplex& c, const Stacking& s);
std::pair<Rat, Rat> side_span(const TwoComplex& c, const HeightAssignment& h, const Side& side);

// Rebuild orders by sorting on heights (corner heights must be distinct
// within each vertex; malformed_error otherwise). Round-trips with
// heights_from_stacking. Side orders come from the source-end germs; run
// check_stacking afterwards when the heights are not known-compatible.
Stacking stacking_from_heights(const TwoComplex& c, const HeightAssignment& h);

struct SearchStats {
  long long examined = 0;  // corner-order assignments tried
  bool exhausted = false;  // whole space covered without success
};

struct GoodSearchResult {
  std::optional<Stacking> stacking;
  SearchStats stats;
};

// Exhaustive search over products of per-vertex corner permutations
// (vertices in id order, permutations in lexicographic order). Stops at the
// first good stacking or after `budget` assignments.
GoodSearchResult search_good_stacking(const TwoComplex& c, long long budget);

}  // namespace stackings

#endif
