#ifndef STACKINGS_ORDERS_HPP
#define STACKINGS_ORDERS_HPP

#include <boost/rational.hpp>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stackings/report.hpp"

namespace stackings {

using Rat = boost::rational<long long>;

// Binary relation on a finite ground set of opaque ids. Conventions used
// throughout: preorders carry their diagonal; partial and total orders are
// strict (irreflexive).
struct Relation {
  std::set<std::string> ground;
  std::set<std::pair<std::string, std::string>> pairs;

  bool has(const std::string& a, const std::string& b) const {
    return pairs.count({a, b}) != 0;
  }
  void add(const std::string& a, const std::string& b) { pairs.insert({a, b}); }

  bool operator==(const Relation&) const = default;
};

// Total order as a ranked list, low to high.
struct TotalOrder {
  std::vector<std::string> ranked;

  int rank(const std::string& a) const;  // -1 when absent
  bool less(const std::string& a, const std::string& b) const {
    return rank(a) < rank(b);
  }
  Relation as_relation() const;  // strict pairs

  bool operator==(const TotalOrder&) const = default;
};

// Pairs must reference ground elements. Code: rel.loose-pair.
Report validate_relation(const Relation& r);

// Codes: preorder.not-reflexive, preorder.not-transitive.
Report check_preorder(const Relation& r);

// Strict partial order = irreflexive + transitive. Codes: order.reflexive-pair,
// order.not-transitive.
Report check_strict_partial_order(const Relation& r);

// Strict total order on the whole ground. Adds order.not-total.
Report check_strict_total_order(const Relation& r);

// Reflexive-transitive closure. Throws malformed_error on loose pairs.
Relation preorder_closure(const Relation& r);

// Transitive closure of {(a,b) : a<=b and not b<=a}. Input must be a
// preorder (malformed_error otherwise). The result is always a strict
// partial order.
Relation strict_closure(const Relation& pre);

// Deterministic topological order extending a strict partial order:
// repeatedly emit the lexicographically least minimal element.
// Throws malformed_error when `p` is not a strict partial order.
TotalOrder linear_extension(const Relation& p);

// rank k -> k/1.
std::map<std::string, Rat> embed_in_rationals(const TotalOrder& t);

// ---------------- words over a generator alphabet ----------------

// Letters are nonzero ints: +k is generator k (1-based), -k its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word concat_inverse(const Word& a, const Word& b);  // reduced a^-1 b
std::vector<long long> exponent_vector(const Word& w, int rank);

enum class Cmp { less, equal, greater };

// Comparison was not decided within the configured degree cap.
struct undecided_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orders the free group of the given rank by the first differing coefficient
// of the power-series images (each generator maps to 1+X_k, inverses to the
// geometric series), scanning monomials by degree then lexicographically.
// Truncation degree `cap`; throws undecided_error when words are distinct yet
// agree on every coefficient up to the cap. The order is invariant under
// multiplication on either side.
Cmp magnus_compare(const Word& a, const Word& b, int cap = 12);

// Total order oracle on deck-group words. `free_group` uses magnus_compare;
// `free_abelian` compares exponent vectors lexicographically (requires the
// group to actually be free abelian on the generators — callers must reject
// presentations whose relators have nonzero exponent vectors); `finite`
// always refuses (finite groups carry no such order).
struct LeftOrderOracle {
  enum Kind { free_group, free_abelian, finite } kind = free_group;
  int rank = 0;     // generator count
  int magnus_cap = 12;

  // Throws malformed_error for `finite`, undecided_error on Magnus cap.
  Cmp compare(const Word& a, const Word& b) const;
};

}  // namespace stackings

#endif
