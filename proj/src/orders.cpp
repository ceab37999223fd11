#include "stackings/orders.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>

namespace stackings {

int TotalOrder::rank(const std::string& a) const {
  for (size_t i = 0; i < ranked.size(); ++i)
    if (ranked[i] == a) return (int)i;
  return -1;
}

Relation TotalOrder::as_relation() const {
  Relation r;
  r.ground.insert(ranked.begin(), ranked.end());
  for (size_t i = 0; i < ranked.size(); ++i)
    for (size_t j = i + 1; j < ranked.size(); ++j)
      r.add(ranked[i], ranked[j]);
  return r;
}

Report validate_relation(const Relation& r) {
  Report rep;
  for (auto& [a, b] : r.pairs) {
    if (!r.ground.count(a))
      rep.add("rel.loose-pair", "left element '" + a + "' not in ground");
    if (!r.ground.count(b))
      rep.add("rel.loose-pair", "right element '" + b + "' not in ground");
  }
  return rep;
}

namespace {

// Dense closure workspace over an indexed ground set.
struct Dense {
  std::vector<std::string> ids;
  std::map<std::string, int> index;
  std::vector<std::vector<char>> adj;

  explicit Dense(const Relation& r) {
    ids.assign(r.ground.begin(), r.ground.end());
    for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = (int)i;
    adj.assign(ids.size(), std::vector<char>(ids.size(), 0));
    for (auto& [a, b] : r.pairs) adj[index.at(a)][index.at(b)] = 1;
  }

  void transitive_close() {
    size_t n = ids.size();
    for (size_t k = 0; k < n; ++k)
      for (size_t i = 0; i < n; ++i)
        if (adj[i][k])
          for (size_t j = 0; j < n; ++j)
            if (adj[k][j]) adj[i][j] = 1;
  }

  Relation to_relation() const {
    Relation out;
    out.ground.insert(ids.begin(), ids.end());
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = 0; j < ids.size(); ++j)
        if (adj[i][j]) out.add(ids[i], ids[j]);
    return out;
  }
};

}  // namespace

Report check_preorder(const Relation& r) {
  Report rep = validate_relation(r);
  if (!rep.ok()) return rep;
  for (auto& a : r.ground)
    if (!r.has(a, a)) rep.add("preorder.not-reflexive", "missing (" + a + "," + a + ")");
  for (auto& [a, b] : r.pairs)
    for (auto& [c, d] : r.pairs)
      if (b == c && !r.has(a, d))
        rep.add("preorder.not-transitive",
                "(" + a + "," + b + ") and (" + b + "," + d + ") but not (" + a + "," + d + ")");
  return rep;
}

Report check_strict_partial_order(const Relation& r) {
  Report rep = validate_relation(r);
  if (!rep.ok()) return rep;
  for (auto& [a, b] : r.pairs)
    if (a == b) rep.add("order.reflexive-pair", "(" + a + "," + a + ")");
  for (auto& [a, b] : r.pairs)
    for (auto& [c, d] : r.pairs)
      if (b == c && !r.has(a, d))
        rep.add("order.not-transitive",
                "(" + a + "," + b + ") and (" + b + "," + d + ") but not (" + a + "," + d + ")");
  return rep;
}

Report check_strict_total_order(const Relation& r) {
  Report rep = check_strict_partial_order(r);
  if (!rep.ok()) return rep;
  for (auto& a : r.ground)
    for (auto& b : r.ground)
      if (a < b && !r.has(a, b) && !r.has(b, a))
        rep.add("order.not-total", "'" + a + "' and '" + b + "' incomparable");
  return rep;
}

Relation preorder_closure(const Relation& r) {
  Report v = validate_relation(r);
  if (!v.ok()) throw malformed_error("preorder_closure: " + v.violations[0].detail);
  Dense d(r);
  for (size_t i = 0; i < d.ids.size(); ++i) d.adj[i][i] = 1;
  d.transitive_close();
  return d.to_relation();
}

Relation strict_closure(const Relation& pre) {
  Report p = check_preorder(pre);
  if (!p.ok()) throw malformed_error("strict_closure: input is not a preorder: " +
                                     p.violations[0].code);
  Relation strict;
  strict.ground = pre.ground;
  for (auto& [a, b] : pre.pairs)
    if (!pre.has(b, a)) strict.add(a, b);
  Dense d(strict);
  d.transitive_close();
  Relation out = d.to_relation();
  // Strictifying a preorder can never create a cycle: a chain of one-way
  // arrows cannot close up.
  for (auto& a : out.ground)
    if (out.has(a, a)) throw std::logic_error("strict_closure: produced a cycle");
  return out;
}

TotalOrder linear_extension(const Relation& p) {
  Report rep = check_strict_partial_order(p);
  if (!rep.ok())
    throw malformed_error("linear_extension: not a strict partial order: " +
                          rep.violations[0].code);
  std::map<std::string, int> indeg;
  for (auto& a : p.ground) indeg[a] = 0;
  for (auto& [a, b] : p.pairs) indeg[b]++;
  std::set<std::string> avail;
  for (auto& [a, d] : indeg)
    if (d == 0) avail.insert(a);
  TotalOrder t;
  while (!avail.empty()) {
    std::string a = *avail.begin();  // lexicographically least minimal element
    avail.erase(avail.begin());
    t.ranked.push_back(a);
    for (auto& [x, y] : p.pairs)
      if (x == a && --indeg[y] == 0) avail.insert(y);
  }
  if (t.ranked.size() != p.ground.size())
    throw malformed_error("linear_extension: relation has a cycle");
  return t;
}

std::map<std::string, Rat> embed_in_rationals(const TotalOrder& t) {
  std::map<std::string, Rat> h;
  for (size_t i = 0; i < t.ranked.size(); ++i) h[t.ranked[i]] = Rat((long long)i);
  return h;
}

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (x == 0) throw malformed_error("free_reduce: zero letter");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word concat_inverse(const Word& a, const Word& b) {
  Word w;
  for (auto it = a.rbegin(); it != a.rend(); ++it) w.push_back(-*it);
  w.insert(w.end(), b.begin(), b.end());
  return free_reduce(w);
}

std::vector<long long> exponent_vector(const Word& w, int rank) {
  std::vector<long long> e(rank, 0);
  for (int x : w) {
    int k = std::abs(x);
    if (k < 1 || k > rank) throw malformed_error("exponent_vector: letter out of range");
    e[k - 1] += (x > 0) ? 1 : -1;
  }
  return e;
}

namespace {

// Monomials in noncommuting variables as index sequences, ordered by degree
// then lexicographically.
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Series = std::map<std::vector<int>, long long, GradedLex>;

// Truncated power-series image of a word: generator k maps to 1 + X_k, its
// inverse to 1 - X_k + X_k^2 - ... Built by one multiplication per letter.
Series magnus_series(const Word& w, int cap) {
  Series s;
  s[{}] = 1;
  for (int x : w) {
    int k = std::abs(x);
    Series next;
    for (auto& [m, c] : s) {
      next[m] += c;
      if (x > 0) {
        if ((int)m.size() < cap) {
          std::vector<int> m2 = m;
          m2.push_back(k);
          next[m2] += c;
        }
      } else {
        std::vector<int> m2 = m;
        long long sign = 1;
        while ((int)m2.size() < cap) {
          m2.push_back(k);
          sign = -sign;
          next[m2] += sign * c;
        }
      }
    }
    // drop zero coefficients so comparisons can walk supports directly
    s.clear();
    for (auto& [m, c] : next)
      if (c != 0) s[m] = c;
  }
  return s;
}

}  // namespace

Cmp magnus_compare(const Word& a, const Word& b, int cap) {
  Word ra = free_reduce(a), rb = free_reduce(b);
  if (ra == rb) return Cmp::equal;
  Series sa = magnus_series(ra, cap), sb = magnus_series(rb, cap);
  auto ia = sa.begin();
  auto ib = sb.begin();
  GradedLex lt;
  while (ia != sa.end() || ib != sb.end()) {
    if (ib == sb.end() || (ia != sa.end() && lt(ia->first, ib->first))) {
      // monomial present only in a
      return ia->second > 0 ? Cmp::greater : Cmp::less;
    }
    if (ia == sa.end() || lt(ib->first, ia->first)) {
      return ib->second > 0 ? Cmp::less : Cmp::greater;
    }
    if (ia->second != ib->second)
      return ia->second > ib->second ? Cmp::greater : Cmp::less;
    ++ia;
    ++ib;
  }
  throw undecided_error("magnus_compare: distinct words agree below degree cap");
}

Cmp LeftOrderOracle::compare(const Word& a, const Word& b) const {
  switch (kind) {
    case free_group:
      return magnus_compare(a, b, magnus_cap);
    case free_abelian: {
      auto ea = exponent_vector(a, rank), eb = exponent_vector(b, rank);
      if (ea == eb) return Cmp::equal;
      return ea < eb ? Cmp::less : Cmp::greater;
    }
    case finite:
      throw malformed_error("left order oracle: finite group admits no left order");
  }
  throw malformed_error("left order oracle: unknown kind");
}

}  // namespace stackings
