#include "stackings/cover.hpp"

#include <algorithm>
#include <sstream>

namespace stackings {

Report validate_presentation(const Presentation& p) {
  Report rep;
  std::set<std::string> gens;
  for (auto& g : p.generators) {
    if (g.empty() || g == "1" || g.find_first_of(".~|") != std::string::npos)
      rep.add("pres.gen", "bad generator name '" + g + "'");
    if (!gens.insert(g).second) rep.add("pres.gen", "duplicate generator '" + g + "'");
  }
  std::set<std::string> rids;
  for (auto& r : p.relators) {
    if (r.id.empty() || r.id == "1" || gens.count(r.id) ||
        r.id.find_first_of(".~|") != std::string::npos)
      rep.add("pres.relator", "bad relator id '" + r.id + "'");
    if (!rids.insert(r.id).second) rep.add("pres.relator", "duplicate relator id '" + r.id + "'");
    if (r.word.empty()) {
      rep.add("pres.relator", "relator '" + r.id + "' has an empty word");
      continue;
    }
    for (auto& l : r.word) {
      if (!gens.count(l.gen))
        rep.add("pres.relator", "relator '" + r.id + "' uses unknown generator '" + l.gen + "'");
      if (l.dir != 1 && l.dir != -1)
        rep.add("pres.relator", "relator '" + r.id + "' has a letter with dir != +-1");
    }
    for (size_t i = 0; i < r.word.size(); ++i) {
      auto& cur = r.word[i];
      auto& nxt = r.word[(i + 1) % r.word.size()];
      if (cur.gen == nxt.gen && cur.dir == -nxt.dir)
        rep.add("pres.not-cyc-reduced",
                "relator '" + r.id + "' cancels at position " + std::to_string(i));
    }
  }
  return rep;
}

TwoComplex presentation_complex(const Presentation& p) {
  TwoComplex x;
  x.vertices.insert("1");
  for (auto& g : p.generators) x.edges[g] = {"1", "1"};
  for (auto& r : p.relators) {
    BoundaryWord w;
    for (auto& l : r.word) w.push_back({l.gen, l.dir});
    x.faces[r.id] = std::move(w);
  }
  return x;
}

std::vector<std::string> sorted_generators(const Presentation& p) {
  std::vector<std::string> g = p.generators;
  std::sort(g.begin(), g.end());
  return g;
}

Word letters_to_word(const std::vector<std::string>& gens_sorted,
                     const std::vector<GenLetter>& letters) {
  Word w;
  for (auto& l : letters) {
    auto it = std::lower_bound(gens_sorted.begin(), gens_sorted.end(), l.gen);
    if (it == gens_sorted.end() || *it != l.gen)
      throw malformed_error("letters_to_word: unknown generator '" + l.gen + "'");
    int k = (int)(it - gens_sorted.begin()) + 1;
    w.push_back(l.dir > 0 ? k : -k);
  }
  return w;
}

std::string vertex_id_of_word(const std::vector<std::string>& gens_sorted, const Word& w) {
  if (w.empty()) return "1";
  std::string id;
  for (size_t i = 0; i < w.size(); ++i) {
    int k = std::abs(w[i]);
    if (k < 1 || k > (int)gens_sorted.size())
      throw malformed_error("vertex_id_of_word: letter out of range");
    if (i) id += ".";
    id += gens_sorted[k - 1];
    if (w[i] < 0) id += "~";
  }
  return id;
}

Word word_of_vertex_id(const std::vector<std::string>& gens_sorted, const std::string& id) {
  if (id == "1") return {};
  Word w;
  std::stringstream ss(id);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    int sgn = 1;
    if (!tok.empty() && tok.back() == '~') {
      sgn = -1;
      tok.pop_back();
    }
    auto it = std::lower_bound(gens_sorted.begin(), gens_sorted.end(), tok);
    if (it == gens_sorted.end() || *it != tok)
      throw malformed_error("word_of_vertex_id: unknown generator '" + tok + "' in '" + id + "'");
    w.push_back(sgn * ((int)(it - gens_sorted.begin()) + 1));
  }
  if (w.empty()) throw malformed_error("word_of_vertex_id: empty id");
  return w;
}

std::pair<std::string, std::string> split_cell_id(const std::string& id) {
  auto pos = id.find('|');
  if (pos == std::string::npos) return {id, ""};
  return {id.substr(0, pos), id.substr(pos + 1)};
}

// ---------------- oracles ----------------

namespace {

// integer row echelon (gcd pivots, distinct leading columns, rows ordered)
void echelonize(std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) return;
  size_t cols = rows[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (size_t i = r + 1; i < rows.size(); ++i) {
      while (rows[i][c] != 0) {
        if (rows[r][c] == 0) {
          std::swap(rows[r], rows[i]);
          continue;
        }
        long long q = rows[i][c] / rows[r][c];
        for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) std::swap(rows[r], rows[i]);
      }
    }
    if (rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (auto& v : rows[r]) v = -v;
      ++r;
    }
  }
  rows.resize(r);
}

size_t leading_col(const std::vector<long long>& row) {
  for (size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return j;
  return row.size();
}

bool in_lattice(const std::vector<std::vector<long long>>& rows, std::vector<long long> v) {
  for (auto& row : rows) {
    size_t c = leading_col(row);
    if (c == row.size()) continue;
    if (v[c] % row[c] != 0) return false;
    long long q = v[c] / row[c];
    for (size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

bool WordProblemOracle::is_trivial(const Word& w) const {
  switch (kind) {
    case free_group:
      return free_reduce(w).empty();
    case free_abelian:
      return in_lattice(lattice, exponent_vector(w, rank));
    case finite_table: {
      int elem = 0;
      int n = (int)mult.size();
      for (int x : w) {
        int k = std::abs(x);
        if (k < 1 || k > rank) throw malformed_error("oracle: letter out of range");
        int g = gen_elem[k - 1];
        if (x < 0) {
          int inv = -1;
          for (int j = 0; j < n; ++j)
            if (mult[g][j] == 0) {
              inv = j;
              break;
            }
          g = inv;
        }
        elem = mult[elem][g];
      }
      return elem == 0;
    }
  }
  throw malformed_error("oracle: unknown kind");
}

WordProblemOracle WordProblemOracle::for_free(int rank) {
  WordProblemOracle o;
  o.kind = free_group;
  o.rank = rank;
  return o;
}

WordProblemOracle WordProblemOracle::for_abelian(const Presentation& p) {
  WordProblemOracle o;
  o.kind = free_abelian;
  o.rank = (int)p.generators.size();
  auto gens = sorted_generators(p);
  for (auto& r : p.relators)
    o.lattice.push_back(exponent_vector(letters_to_word(gens, r.word), o.rank));
  echelonize(o.lattice);
  return o;
}

WordProblemOracle WordProblemOracle::for_finite(const Presentation& p,
                                                std::vector<std::vector<int>> mult,
                                                std::vector<int> gen_elem) {
  int n = (int)mult.size();
  if (n == 0) throw malformed_error("finite table: empty");
  for (auto& row : mult) {
    if ((int)row.size() != n) throw malformed_error("finite table: not square");
    for (int x : row)
      if (x < 0 || x >= n) throw malformed_error("finite table: entry out of range");
  }
  for (int j = 0; j < n; ++j)
    if (mult[0][j] != j || mult[j][0] != j)
      throw malformed_error("finite table: 0 is not an identity");
  for (int i = 0; i < n; ++i) {
    bool has_inv = false;
    for (int j = 0; j < n; ++j) has_inv |= mult[i][j] == 0;
    if (!has_inv) throw malformed_error("finite table: element without inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (mult[mult[i][j]][k] != mult[i][mult[j][k]])
          throw malformed_error("finite table: not associative");
  if (gen_elem.size() != p.generators.size())
    throw malformed_error("finite table: generator images missing");
  for (int g : gen_elem)
    if (g < 0 || g >= n) throw malformed_error("finite table: generator image out of range");

  WordProblemOracle o;
  o.kind = finite_table;
  o.rank = (int)p.generators.size();
  o.mult = std::move(mult);
  o.gen_elem = std::move(gen_elem);
  return o;
}

LeftOrderOracle make_order_oracle(const Presentation& p, LeftOrderOracle::Kind kind) {
  LeftOrderOracle o;
  o.kind = kind;
  o.rank = (int)p.generators.size();
  if (kind == LeftOrderOracle::free_abelian) {
    auto gens = sorted_generators(p);
    for (auto& r : p.relators) {
      auto e = exponent_vector(letters_to_word(gens, r.word), o.rank);
      for (auto x : e)
        if (x != 0)
          throw malformed_error(
              "order oracle: relator '" + r.id +
              "' has a nonzero exponent vector; lex order is not defined on cosets");
    }
  }
  return o;
}

// ---------------- ball construction ----------------

CoverData build_cayley_ball(const Presentation& p, int radius, const WordProblemOracle& oracle) {
  {
    Report pv = validate_presentation(p);
    if (!pv.ok()) throw malformed_error("presentation: " + pv.violations[0].detail);
  }
  if (radius < 0) throw malformed_error("build_cayley_ball: negative radius");
  if (oracle.rank != (int)p.generators.size())
    throw malformed_error("build_cayley_ball: oracle rank mismatch");

  auto gens = sorted_generators(p);
  int rank = (int)gens.size();

  CoverData cv;
  cv.quotient = presentation_complex(p);

  std::vector<Word> words;  // canonical representative per vertex, discovery order
  std::vector<std::string> vids;
  std::vector<int> depth;
  auto find_vertex = [&](const Word& w) -> int {
    for (size_t i = 0; i < words.size(); ++i)
      if (oracle.same_element(words[i], w)) return (int)i;
    return -1;
  };
  words.push_back({});
  vids.push_back("1");
  depth.push_back(0);
  for (size_t head = 0; head < words.size(); ++head) {
    if (depth[head] == radius) continue;
    Word u = words[head];
    for (int k = 1; k <= rank; ++k)
      for (int sgn : {+1, -1}) {
        Word w = u;
        w.push_back(sgn * k);
        if (find_vertex(w) < 0) {
          words.push_back(w);
          vids.push_back(vertex_id_of_word(gens, w));
          depth.push_back(depth[head] + 1);
        }
      }
  }
  for (auto& id : vids) cv.ball.vertices.insert(id);
  for (auto& id : vids) cv.projection[id] = "1";

  // an edge whenever both endpoints made it into the ball
  for (size_t i = 0; i < words.size(); ++i)
    for (int k = 1; k <= rank; ++k) {
      Word w = words[i];
      w.push_back(k);
      int j = find_vertex(w);
      if (j < 0) continue;
      std::string eid = vids[i] + "|" + gens[k - 1];
      cv.ball.edges[eid] = {vids[i], vids[j]};
      cv.projection[eid] = gens[k - 1];
    }

  // a face whenever its whole boundary path stays inside
  for (auto& rel : p.relators) {
    Word rw = letters_to_word(gens, rel.word);
    for (size_t i = 0; i < words.size(); ++i) {
      BoundaryWord bw;
      int cur = (int)i;
      bool inside = true;
      for (int x : rw) {
        Word nxt = words[cur];
        nxt.push_back(x);
        int j = find_vertex(nxt);
        if (j < 0) {
          inside = false;
          break;
        }
        int k = std::abs(x);
        if (x > 0)
          bw.push_back({vids[cur] + "|" + gens[k - 1], 1});
        else
          bw.push_back({vids[j] + "|" + gens[k - 1], -1});
        cur = j;
      }
      if (!inside) continue;
      std::string fid = vids[i] + "|" + rel.id;
      for (auto& l : bw)
        if (!cv.ball.edges.count(l.edge))
          throw std::logic_error("build_cayley_ball: face boundary edge missing");
      cv.ball.faces[fid] = std::move(bw);
      cv.projection[fid] = rel.id;
    }
  }

  // deck translations: left multiplication by each generator
  for (int k = 1; k <= rank; ++k) {
    auto& m = cv.deck[gens[k - 1]];
    std::vector<int> vimg(words.size(), -1);
    for (size_t i = 0; i < words.size(); ++i) {
      Word w;
      w.push_back(k);
      w.insert(w.end(), words[i].begin(), words[i].end());
      vimg[i] = find_vertex(w);
      if (vimg[i] >= 0) m[vids[i]] = vids[vimg[i]];
    }
    std::map<std::string, int> vindex;
    for (size_t i = 0; i < vids.size(); ++i) vindex[vids[i]] = (int)i;
    for (auto& [eid, ends] : cv.ball.edges) {
      auto [base, gen] = split_cell_id(eid);
      int i = vindex.at(base);
      if (vimg[i] < 0) continue;
      std::string img = vids[vimg[i]] + "|" + gen;
      if (cv.ball.edges.count(img)) m[eid] = img;
    }
    for (auto& [fid, w] : cv.ball.faces) {
      auto [base, rid] = split_cell_id(fid);
      int i = vindex.at(base);
      if (vimg[i] < 0) continue;
      std::string img = vids[vimg[i]] + "|" + rid;
      if (cv.ball.faces.count(img)) m[fid] = img;
    }
  }

  // frontier: incomplete stars
  std::map<std::string, std::set<std::string>> incoming, outgoing;
  for (auto& [eid, ends] : cv.ball.edges) {
    auto [base, gen] = split_cell_id(eid);
    outgoing[ends.src].insert(gen);
    incoming[ends.dst].insert(gen);
  }
  size_t quotient_corners = corners_at(cv.quotient, "1").size();
  for (auto& vid : cv.ball.vertices) {
    bool complete = true;
    for (auto& g : gens)
      if (!outgoing[vid].count(g) || !incoming[vid].count(g)) complete = false;
    if (corners_at(cv.ball, vid).size() != quotient_corners) complete = false;
    if (!complete) cv.frontier.insert(vid);
  }
  for (auto& [eid, ends] : cv.ball.edges)
    if (sides_over(cv.ball, eid).size() <
        sides_over(cv.quotient, cv.projection.at(eid)).size())
      cv.frontier.insert(eid);

  cv.simply_connected_quotient =
      cv.frontier.empty() && cv.ball.vertices.size() == cv.quotient.vertices.size() &&
      cv.ball.edges.size() == cv.quotient.edges.size() &&
      cv.ball.faces.size() == cv.quotient.faces.size();
  return cv;
}

// ---------------- cover validation ----------------

Report validate_cover(const CoverData& cv) {
  Report rep;
  rep.merge(validate(cv.quotient));
  rep.merge(validate(cv.ball));
  if (!rep.ok()) return rep;

  auto cell_class = [](const TwoComplex& x, const std::string& id) -> int {
    if (x.vertices.count(id)) return 0;
    if (x.edges.count(id)) return 1;
    if (x.faces.count(id)) return 2;
    return -1;
  };

  for (auto& vid : cv.ball.vertices)
    if (!cv.projection.count(vid)) rep.add("cover.projection", "vertex '" + vid + "' unmapped");
  for (auto& [eid, e] : cv.ball.edges)
    if (!cv.projection.count(eid)) rep.add("cover.projection", "edge '" + eid + "' unmapped");
  for (auto& [fid, w] : cv.ball.faces)
    if (!cv.projection.count(fid)) rep.add("cover.projection", "face '" + fid + "' unmapped");
  for (auto& [cell, img] : cv.projection) {
    int bc = cell_class(cv.ball, cell), qc = cell_class(cv.quotient, img);
    if (bc < 0) rep.add("cover.projection", "unknown ball cell '" + cell + "'");
    else if (qc != bc)
      rep.add("cover.projection", "'" + cell + "' maps across cell classes to '" + img + "'");
  }
  if (!rep.ok()) return rep;

  for (auto& [eid, e] : cv.ball.edges) {
    auto& q = cv.quotient.edges.at(cv.projection.at(eid));
    if (cv.projection.at(e.src) != q.src || cv.projection.at(e.dst) != q.dst)
      rep.add("cover.projection", "edge '" + eid + "' does not project onto its endpoints");
  }
  for (auto& [fid, w] : cv.ball.faces) {
    auto& qw = cv.quotient.faces.at(cv.projection.at(fid));
    if (w.size() != qw.size()) {
      rep.add("cover.projection", "face '" + fid + "' boundary length mismatch");
      continue;
    }
    for (size_t i = 0; i < w.size(); ++i)
      if (cv.projection.at(w[i].edge) != qw[i].edge || w[i].dir != qw[i].dir)
        rep.add("cover.projection",
                "face '" + fid + "' boundary letter " + std::to_string(i) + " mismatch");
  }

  for (auto& [g, m] : cv.deck) {
    if (!cv.quotient.edges.count(g))
      rep.add("cover.deck", "deck map for unknown generator '" + g + "'");
    std::set<std::string> images;
    for (auto& [c, img] : m) {
      int cc = cell_class(cv.ball, c), ic = cell_class(cv.ball, img);
      if (cc < 0 || ic < 0 || cc != ic) {
        rep.add("cover.deck", "deck '" + g + "' maps '" + c + "' -> '" + img + "' across classes");
        continue;
      }
      if (!images.insert(img).second)
        rep.add("cover.deck", "deck '" + g + "' is not injective at '" + img + "'");
      if (cv.projection.at(c) != cv.projection.at(img))
        rep.add("cover.deck", "deck '" + g + "' does not commute with projection at '" + c + "'");
      if (cc == 1) {
        auto& e = cv.ball.edges.at(c);
        auto& ie = cv.ball.edges.at(img);
        auto s = m.find(e.src);
        auto d = m.find(e.dst);
        if (s == m.end() || d == m.end() || s->second != ie.src || d->second != ie.dst)
          rep.add("cover.deck", "deck '" + g + "' breaks endpoints of edge '" + c + "'");
      }
      if (cc == 2) {
        auto& w = cv.ball.faces.at(c);
        auto& iw = cv.ball.faces.at(img);
        for (size_t i = 0; i < w.size(); ++i) {
          auto it = m.find(w[i].edge);
          if (it == m.end() || it->second != iw[i].edge || w[i].dir != iw[i].dir) {
            rep.add("cover.deck", "deck '" + g + "' breaks boundary of face '" + c + "'");
            break;
          }
        }
      }
    }
  }

  for (auto& f : cv.frontier)
    if (cell_class(cv.ball, f) < 0) rep.add("cover.frontier", "unknown cell '" + f + "'");
  return rep;
}

std::optional<std::string> apply_deck(const CoverData& cv, const std::string& gen,
                                      const std::string& cell) {
  auto it = cv.deck.find(gen);
  if (it == cv.deck.end()) return std::nullopt;
  auto jt = it->second.find(cell);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

std::optional<std::string> apply_deck_inv(const CoverData& cv, const std::string& gen,
                                          const std::string& cell) {
  auto it = cv.deck.find(gen);
  if (it == cv.deck.end()) return std::nullopt;
  for (auto& [c, img] : it->second)
    if (img == cell) return c;
  return std::nullopt;
}

bool is_frontier(const CoverData& cv, const std::string& cell) {
  return cv.frontier.count(cell) != 0;
}

Report check_invariance(const CoverData& cv, const Relation& rel, const std::string& tag) {
  Report rep;
  for (auto& [g, m] : cv.deck) {
    for (int dir = 0; dir < 2; ++dir) {
      auto apply = [&](const std::string& c) {
        return dir == 0 ? apply_deck(cv, g, c) : apply_deck_inv(cv, g, c);
      };
      std::string lbl = dir == 0 ? g : g + "^-1";

      for (auto& a : rel.ground) {
        auto ia = apply(a);
        if (!ia) {
          rep.note_horizon(tag + ".inv", "translate of '" + a + "' by " + lbl + " leaves the ball");
          continue;
        }
        if (!rel.ground.count(*ia)) {
          if (is_frontier(cv, *ia))
            rep.note_horizon(tag + ".inv", "translate '" + *ia + "' of '" + a + "' by " + lbl +
                                               " is a frontier cell outside the ground");
          else
            rep.add(tag + ".inv", "translate '" + *ia + "' of '" + a + "' by " + lbl +
                                      " is not in the ground set");
        }
      }

      for (auto& [a, b] : rel.pairs) {
        auto ia = apply(a), ib = apply(b);
        if (!ia || !ib) {
          rep.note_horizon(tag + ".inv",
                           "pair (" + a + "," + b + ") translate by " + lbl + " leaves the ball");
          continue;
        }
        if (!rel.ground.count(*ia) || !rel.ground.count(*ib)) {
          rep.note_horizon(tag + ".inv", "pair (" + a + "," + b + ") translate by " + lbl +
                                             " leaves the known ground");
          continue;
        }
        if (!rel.has(*ia, *ib)) {
          if (is_frontier(cv, *ia) || is_frontier(cv, *ib))
            rep.note_horizon(tag + ".inv", "pair (" + a + "," + b + ") translated by " + lbl +
                                               " to (" + *ia + "," + *ib +
                                               ") touches the frontier and is not in the relation");
          else
            rep.add(tag + ".inv", "pair (" + a + "," + b + ") translated by " + lbl + " to (" +
                                      *ia + "," + *ib + ") which is not in the relation");
        }
      }
    }
  }
  return rep;
}

LiftResult lift_stacking(const CoverData& cv, const Stacking& qs) {
  {
    Report sc = check_stacking(cv.quotient, qs);
    if (!sc.ok())
      throw malformed_error("lift_stacking: quotient stacking invalid: " + sc.violations[0].code);
  }
  LiftResult out;
  for (auto& [eid, ends] : cv.ball.edges) {
    auto sides = sides_over(cv.ball, eid);
    const std::string& qe = cv.projection.at(eid);
    auto qrank = [&](const Side& bs) {
      int r = side_rank(qs, qe, Side{cv.projection.at(bs.face), bs.pos});
      if (r < 0)
        throw malformed_error("lift_stacking: side of '" + bs.face +
                              "' projects outside the quotient order");
      return r;
    };
    std::sort(sides.begin(), sides.end(),
              [&](const Side& a, const Side& b) { return qrank(a) < qrank(b); });
    for (size_t i = 0; i + 1 < sides.size(); ++i)
      if (qrank(sides[i]) == qrank(sides[i + 1]))
        throw malformed_error("lift_stacking: projection folds two sides of edge '" + eid +
                              "' onto one quotient side");
    out.stacking.side_order[eid] = std::move(sides);
  }
  for (auto& vid : cv.ball.vertices) {
    auto corners = corners_at(cv.ball, vid);
    const std::string& qv = cv.projection.at(vid);
    auto qrank = [&](const Corner& bc) {
      int r = corner_rank(qs, qv, Corner{cv.projection.at(bc.face), bc.pos});
      if (r < 0)
        throw malformed_error("lift_stacking: corner of '" + bc.face +
                              "' projects outside the quotient order");
      return r;
    };
    std::sort(corners.begin(), corners.end(),
              [&](const Corner& a, const Corner& b) { return qrank(a) < qrank(b); });
    for (size_t i = 0; i + 1 < corners.size(); ++i)
      if (qrank(corners[i]) == qrank(corners[i + 1]))
        throw malformed_error("lift_stacking: projection folds two corners at '" + vid + "'");
    out.stacking.corner_order[vid] = std::move(corners);
  }
  for (auto& [fid, w] : cv.ball.faces)
    for (auto& l : w)
      if (cv.frontier.count(l.edge)) {
        out.unverifiable_faces.insert(fid);
        break;
      }
  return out;
}

Report check_boundary_embedded(const TwoComplex& ball) {
  Report rep;
  for (auto& [fid, w] : ball.faces) {
    std::set<std::string> verts, edges;
    bool dup = false;
    for (auto& l : w) {
      if (!edges.insert(l.edge).second) dup = true;
      if (!verts.insert(letter_start(ball, l)).second) dup = true;
    }
    if (dup)
      rep.add("ball.boundary-not-embedded", "face '" + fid + "' revisits a vertex or edge");
  }
  return rep;
}

}  // namespace stackings
