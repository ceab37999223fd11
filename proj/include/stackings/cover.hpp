#ifndef STACKINGS_COVER_HPP
#define STACKINGS_COVER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stackings/complex.hpp"
#include "stackings/orders.hpp"
#include "stackings/report.hpp"
#include "stackings/stacking.hpp"

namespace stackings {

// ---------------- presentations ----------------

struct GenLetter {
  std::string gen;
  int dir = 1;
  auto operator<=>(const GenLetter&) const = default;
};

struct Relator {
  std::string id;
  std::vector<GenLetter> word;
  bool operator==(const Relator&) const = default;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relator> relators;
  bool operator==(const Presentation&) const = default;
};

// Generators must be distinct, nonempty, free of the id metacharacters
// '.', '~', '|', and distinct from relator ids and from "1" (the basepoint
// id). Relator words must be nonempty, over known generators, and cyclically
// reduced (otherwise their cells would not be immersed).
Report validate_presentation(const Presentation& p);

// One vertex "1", one loop per generator, one face per relator.
TwoComplex presentation_complex(const Presentation& p);

// Letters are indexed 1..rank by SORTED generator name; this convention is
// shared by every word-valued helper and both oracle families.
std::vector<std::string> sorted_generators(const Presentation& p);
Word letters_to_word(const std::vector<std::string>& gens_sorted,
                     const std::vector<GenLetter>& letters);

// Vertex ids spell the group word: "1" for the identity, else letters
// joined with '.', inverses marked '~' ("a.b~"). Edge and face ids are
// "<vertex>|<generator>" and "<vertex>|<relator>".
std::string vertex_id_of_word(const std::vector<std::string>& gens_sorted, const Word& w);
Word word_of_vertex_id(const std::vector<std::string>& gens_sorted, const std::string& id);

// "g|x" -> {"g", "x"}; a vertex id -> {id, ""}.
std::pair<std::string, std::string> split_cell_id(const std::string& id);

// ---------------- word problem oracles ----------------

// Decides triviality of words in the presented group. The caller picks the
// kind; it must actually match the group for the answers to mean anything.
struct WordProblemOracle {
  enum Kind { free_group, free_abelian, finite_table } kind = free_group;
  int rank = 0;

  // free_abelian: the group is Z^rank modulo the lattice spanned by these
  // rows (relator exponent vectors, kept in row-echelon form).
  std::vector<std::vector<long long>> lattice;

  // finite_table: elements 0..n-1 with 0 the identity; mult[i][j] = i*j;
  // gen_elem[k] = image of generator k+1.
  std::vector<std::vector<int>> mult;
  std::vector<int> gen_elem;

  bool is_trivial(const Word& w) const;
  bool same_element(const Word& a, const Word& b) const {
    return is_trivial(concat_inverse(a, b));
  }

  static WordProblemOracle for_free(int rank);
  static WordProblemOracle for_abelian(const Presentation& p);
  // Validates the table (identity row/column, inverses). malformed_error on
  // defects or when gen_elem does not cover the generators.
  static WordProblemOracle for_finite(const Presentation& p,
                                      std::vector<std::vector<int>> mult,
                                      std::vector<int> gen_elem);
};

// Left-order oracle factory; `free_abelian` refuses presentations whose
// relators have nonzero exponent vectors (lex order on exponent vectors is
// not well defined on cosets then), `finite` is constructed but refuses
// every comparison.
LeftOrderOracle make_order_oracle(const Presentation& p, LeftOrderOracle::Kind kind);

// ---------------- Cayley balls ----------------

// A radius-r piece of the universal cover of the presentation complex,
// together with the covering projection and the (partial) deck translations.
struct CoverData {
  TwoComplex quotient;
  TwoComplex ball;
  std::map<std::string, std::string> projection;                // ball cell -> quotient cell
  std::map<std::string, std::map<std::string, std::string>> deck;  // generator -> cell map
  std::set<std::string> frontier;                                // cells with truncated stars
  bool simply_connected_quotient = false;

  bool operator==(const CoverData&) const = default;
};

// Breadth-first ball: vertices are the group elements within `radius` of the
// identity (canonical representative = first-discovered word, generators in
// sorted order, positive letter before inverse); an edge is present when both
// endpoints are, a face when its whole boundary path is. Deck maps are the
// left translations by the generators, restricted to cells whose image is
// present. Frontier: vertices with incomplete edge stars or corner counts,
// edges with fewer sides than their quotient image; faces are never frontier.
CoverData build_cayley_ball(const Presentation& p, int radius, const WordProblemOracle& oracle);

// Structural coherence of cover data (possibly from JSON): both complexes
// valid, projection total and cell-class preserving, boundary words project
// letter by letter, deck maps are partial injections commuting with the
// projection, frontier ids exist. Codes prefixed "cover.".
Report validate_cover(const CoverData& cv);

// deck[gen] applied to a cell id (or its inverse map); nullopt when the
// image (preimage) is not in the ball.
std::optional<std::string> apply_deck(const CoverData& cv, const std::string& gen,
                                      const std::string& cell);
std::optional<std::string> apply_deck_inv(const CoverData& cv, const std::string& gen,
                                          const std::string& cell);

bool is_frontier(const CoverData& cv, const std::string& cell);

// Invariance of a relation under every deck translation and inverse.
// A miss is a definite violation (tagged `tag`.inv) only when the ball is
// known to hold all the relevant data: a ground-membership miss whose landing
// cell is non-frontier, or a missing pair translate both of whose landing
// cells are non-frontier.  Misses touching the frontier and translates
// leaving the ball are horizon items.
Report check_invariance(const CoverData& cv, const Relation& rel, const std::string& tag);

// Pull a quotient stacking back to the ball: sides over a ball edge sort by
// the quotient rank of their projected sides, corners likewise.
// `unverifiable_faces` have a frontier boundary edge, so their levels could
// shift if the ball grew. Goodness is preserved by the pullback.
struct LiftResult {
  Stacking stacking;
  std::set<std::string> unverifiable_faces;
};
LiftResult lift_stacking(const CoverData& cv, const Stacking& quotient_stacking);

// Every face boundary visits pairwise distinct vertices and edges.
// Code: ball.boundary-not-embedded.
Report check_boundary_embedded(const TwoComplex& ball);

}  // namespace stackings

#endif
