#include "stackings/convert.hpp"

#include <algorithm>

#include "stackings/dualgraph.hpp"

namespace stackings {

namespace {

bool pre_strict(const Relation& r, const std::string& a, const std::string& b) {
  return r.has(a, b) && !r.has(b, a);
}

std::string first_failure(const Report& r) {
  return r.violations[0].code + " (" + r.violations[0].detail + ")";
}

void require_ok(const Report& r, const std::string& who) {
  if (!r.ok()) throw malformed_error(who + ": input fails " + first_failure(r));
}

Relation edge_diagonal(const TwoComplex& ball) {
  Relation r;
  for (auto& [eid, ends] : ball.edges) {
    r.ground.insert(eid);
    r.add(eid, eid);
  }
  return r;
}

// face_order / plus_order / minus_order read off a bislim structure's marks.
struct MarkTriple {
  Relation face_order, plus_order, minus_order;
};

MarkTriple mark_pullback(const CoverData& cv, const BislimStructure& b) {
  MarkTriple t;
  for (auto& [fid, w] : cv.ball.faces) t.face_order.ground.insert(fid);
  for (auto& [fid, e] : b.plus) t.plus_order.ground.insert(e);
  for (auto& [fid, e] : b.minus) t.minus_order.ground.insert(e);
  for (auto& [f1, w1] : cv.ball.faces)
    for (auto& [f2, w2] : cv.ball.faces) {
      if (f1 == f2) continue;
      const std::string& p1 = b.plus.at(f1);
      const std::string& p2 = b.plus.at(f2);
      if (!pre_strict(b.preorder, p1, p2)) continue;
      t.face_order.add(f1, f2);
      t.plus_order.add(p1, p2);
      const std::string& m1 = b.minus.at(f1);
      const std::string& m2 = b.minus.at(f2);
      if (m1 != m2) t.minus_order.add(m1, m2);
    }
  return t;
}

}  // namespace

BislimStructure gs_to_bs(const CoverData& cv, const Stacking& qs, bool torsion) {
  require_ok(check_stacking(cv.quotient, qs), "gs_to_bs");
  require_ok(check_good(cv.quotient, qs), "gs_to_bs");
  LiftResult lift = lift_stacking(cv, qs);

  BislimStructure out;
  for (auto& [fid, w] : cv.ball.faces) {
    const std::string& qface = cv.projection.at(fid);
    std::optional<std::pair<std::string, int>> lo, hi;  // (projected edge, position)
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      const std::string& qedge = cv.projection.at(w[i].edge);
      int rank = side_rank(qs, qedge, Side{qface, i});
      int top = static_cast<int>(qs.side_order.at(qedge).size()) - 1;
      std::pair<std::string, int> key{qedge, i};
      if (rank == 0 && (!lo || key < *lo)) lo = key;
      if (rank == top && (!hi || key < *hi)) hi = key;
    }
    // goodness of the quotient stacking guarantees both marks exist
    out.plus[fid] = w[lo->second].edge;
    out.minus[fid] = w[hi->second].edge;
  }

  Relation pre = edge_diagonal(cv.ball);
  DirectedDual dd = direct_dual(cv.ball, lift.stacking, build_dual(cv.ball, torsion));
  Relation reach = reachability_order(dd);
  for (auto& [f1, f2] : reach.pairs) {
    const std::string& p1 = out.plus.at(f1);
    const std::string& p2 = out.plus.at(f2);
    if (p1 != p2) pre.add(p1, p2);
  }
  out.preorder = std::move(pre);
  return out;
}

ISStructure bs_to_is(const CoverData& cv, const BislimStructure& b, bool torsion) {
  require_ok(check_bislim(cv, b, torsion), "bs_to_is");
  MarkTriple t = mark_pullback(cv, b);
  return ISStructure{std::move(t.face_order), std::move(t.plus_order),
                     std::move(t.minus_order)};
}

TISStructure tbs_to_tis(const CoverData& cv, const BislimStructure& b, bool torsion) {
  require_ok(check_tbs(cv, b, torsion), "tbs_to_tis");
  MarkTriple t = mark_pullback(cv, b);
  return TISStructure{std::move(t.face_order), std::move(t.plus_order),
                      std::move(t.minus_order)};
}

BislimStructure tis_to_tbs(const CoverData& cv, const TISStructure& t, bool torsion) {
  require_ok(check_tis(cv, t, torsion), "tis_to_tbs");
  BislimStructure out;
  Relation pre = edge_diagonal(cv.ball);
  for (auto& [a, b] : t.plus_order.pairs) pre.add(a, b);
  out.preorder = std::move(pre);
  for (auto& [fid, w] : cv.ball.faces) {
    std::optional<std::string> top, bottom;
    for (auto& letter : w) {
      if (t.plus_order.ground.count(letter.edge) &&
          (!top || t.plus_order.has(*top, letter.edge)))
        top = letter.edge;
      if (t.minus_order.ground.count(letter.edge) &&
          (!bottom || t.minus_order.has(letter.edge, *bottom)))
        bottom = letter.edge;
    }
    // the validated input meets every face boundary in both edge sets
    out.plus[fid] = *top;
    out.minus[fid] = *bottom;
  }
  return out;
}

ISStructure tis_to_is(const CoverData& cv, const TISStructure& t, bool torsion) {
  require_ok(check_tis(cv, t, torsion), "tis_to_is");
  return ISStructure{t.face_order, t.plus_order, t.minus_order};
}

Stacking is_to_gs(const CoverData& cv, const ISStructure& s, bool torsion) {
  require_ok(check_is(cv, s, torsion), "is_to_gs");
  {
    Report emb = check_boundary_embedded(cv.ball);
    if (!emb.ok())
      throw horizon_error("is_to_gs: ball face boundaries are not embedded (" +
                          emb.violations[0].detail + "); a larger ball is needed");
  }

  std::map<std::string, Rat> level = embed_in_rationals(linear_extension(s.face_order));

  Stacking out;
  for (auto& [qe, ends] : cv.quotient.edges) {
    std::vector<Side> qsides = sides_over(cv.quotient, qe);
    if (qsides.empty()) {
      out.side_order[qe] = {};
      continue;
    }
    std::optional<std::vector<Side>> agreed;
    std::string chart;
    for (auto& [be, bends] : cv.ball.edges) {
      if (cv.projection.at(be) != qe || is_frontier(cv, be)) continue;
      std::vector<Side> bsides = sides_over(cv.ball, be);
      std::sort(bsides.begin(), bsides.end(), [&](const Side& x, const Side& y) {
        return level.at(x.face) < level.at(y.face);
      });
      std::vector<Side> ranking;
      ranking.reserve(bsides.size());
      for (auto& bs : bsides) ranking.push_back(Side{cv.projection.at(bs.face), bs.pos});
      if (!agreed) {
        agreed = std::move(ranking);
        chart = be;
      } else if (*agreed != ranking) {
        throw descent_error("is_to_gs: side orders over '" + qe + "' read from charts '" +
                            chart + "' and '" + be + "' disagree");
      }
    }
    if (!agreed)
      throw horizon_error("is_to_gs: edge '" + qe + "' has no non-frontier lift in the ball");
    out.side_order[qe] = std::move(*agreed);
  }

  for (auto& qv : cv.quotient.vertices) {
    std::vector<Corner> qcorners = corners_at(cv.quotient, qv);
    if (qcorners.empty()) {
      out.corner_order[qv] = {};
      continue;
    }
    std::optional<std::vector<Corner>> agreed;
    std::string chart;
    for (auto& bv : cv.ball.vertices) {
      if (cv.projection.at(bv) != qv || is_frontier(cv, bv)) continue;
      std::vector<Corner> bcorners = corners_at(cv.ball, bv);
      std::sort(bcorners.begin(), bcorners.end(), [&](const Corner& x, const Corner& y) {
        return level.at(x.face) < level.at(y.face);
      });
      std::vector<Corner> ranking;
      ranking.reserve(bcorners.size());
      for (auto& bc : bcorners) ranking.push_back(Corner{cv.projection.at(bc.face), bc.pos});
      if (!agreed) {
        agreed = std::move(ranking);
        chart = bv;
      } else if (*agreed != ranking) {
        throw descent_error("is_to_gs: corner orders at '" + qv + "' read from charts '" +
                            chart + "' and '" + bv + "' disagree");
      }
    }
    if (!agreed)
      throw horizon_error("is_to_gs: vertex '" + qv + "' has no non-frontier lift in the ball");
    out.corner_order[qv] = std::move(*agreed);
  }

  {
    Report st = check_stacking(cv.quotient, out);
    if (!st.ok())
      throw descent_error("is_to_gs: descended orders are not a stacking: " + first_failure(st));
    Report good = check_good(cv.quotient, out);
    if (!good.ok())
      throw descent_error("is_to_gs: descended stacking is not good: " + first_failure(good));
  }
  return out;
}

BislimStructure is_to_bs(const CoverData& cv, const ISStructure& s, bool torsion) {
  return gs_to_bs(cv, is_to_gs(cv, s, torsion), torsion);
}

TISStructure staggered_to_tis(const CoverData& cv, const StaggeredStructure& st,
                              const LeftOrderOracle& oracle) {
  if (oracle.kind == LeftOrderOracle::finite)
    throw malformed_error("staggered_to_tis: a finite deck group admits no left order");
  require_ok(check_staggered(cv.quotient, st), "staggered_to_tis");
  {
    Report emb = check_boundary_embedded(cv.ball);
    if (!emb.ok())
      throw horizon_error("staggered_to_tis: ball face boundaries are not embedded (" +
                          emb.violations[0].detail + "); a larger ball is needed");
  }

  std::vector<std::string> gens;
  for (auto& [g, m] : cv.deck) gens.push_back(g);
  if (static_cast<int>(gens.size()) != oracle.rank)
    throw malformed_error("staggered_to_tis: oracle rank " + std::to_string(oracle.rank) +
                          " does not match the " + std::to_string(gens.size()) +
                          " deck generators");

  auto base_less = [&](const std::string& c1, const std::string& c2) {
    Word w1 = word_of_vertex_id(gens, split_cell_id(c1).first);
    Word w2 = word_of_vertex_id(gens, split_cell_id(c2).first);
    return oracle.compare(w1, w2) == Cmp::less;
  };

  TISStructure out;
  for (auto& [fid, w] : cv.ball.faces) out.face_order.ground.insert(fid);
  for (auto& [f1, w1] : cv.ball.faces)
    for (auto& [f2, w2] : cv.ball.faces) {
      if (f1 == f2) continue;
      const std::string& q1 = cv.projection.at(f1);
      const std::string& q2 = cv.projection.at(f2);
      bool lt = q1 != q2 ? st.face_order.has(q1, q2) : base_less(f1, f2);
      if (lt) out.face_order.add(f1, f2);
    }

  Relation lifted;
  for (auto& [eid, ends] : cv.ball.edges)
    if (st.edge_order.ground.count(cv.projection.at(eid))) lifted.ground.insert(eid);
  for (auto& e1 : lifted.ground)
    for (auto& e2 : lifted.ground) {
      if (e1 == e2) continue;
      const std::string& q1 = cv.projection.at(e1);
      const std::string& q2 = cv.projection.at(e2);
      bool lt = q1 != q2 ? st.edge_order.has(q1, q2) : base_less(e1, e2);
      if (lt) lifted.add(e1, e2);
    }
  out.plus_order = lifted;
  out.minus_order = std::move(lifted);
  return out;
}

SlopeResult slope_projection_order(const CoverData& cv, const Embedding& emb, long long p,
                                   long long q) {
  if (p == 0 && q == 0) throw malformed_error("slope_projection_order: slope 0/0");

  auto in_ball = [&](const std::string& cell) {
    return cv.ball.vertices.count(cell) || cv.ball.edges.count(cell) ||
           cv.ball.faces.count(cell);
  };
  for (auto& [cell, xy] : emb.barycenters)
    if (!in_ball(cell))
      throw malformed_error("slope_projection_order: barycenter for unknown cell '" + cell +
                            "'");
  auto point = [&](const std::string& cell) -> const std::pair<Rat, Rat>& {
    auto it = emb.barycenters.find(cell);
    if (it == emb.barycenters.end())
      throw malformed_error("slope_projection_order: cell '" + cell + "' has no barycenter");
    return it->second;
  };
  for (auto& v : cv.ball.vertices) point(v);
  for (auto& [eid, ends] : cv.ball.edges) point(eid);
  for (auto& [fid, w] : cv.ball.faces) point(fid);

  for (auto& [g, xy] : emb.translations)
    if (!cv.deck.count(g))
      throw malformed_error("slope_projection_order: translation for unknown generator '" + g +
                            "'");
  for (auto& [g, m] : cv.deck) {
    auto it = emb.translations.find(g);
    if (it == emb.translations.end())
      throw malformed_error("slope_projection_order: generator '" + g + "' has no translation");
    for (auto& [cell, img] : m) {
      auto& a = point(cell);
      auto& b = point(img);
      if (b.first - a.first != it->second.first || b.second - a.second != it->second.second)
        throw malformed_error("slope_projection_order: barycenters of '" + cell + "' and '" +
                              img + "' do not differ by the '" + g + "' translation");
    }
  }

  auto val = [&](const std::string& cell) {
    auto& xy = point(cell);
    return Rat(q) * xy.first + Rat(p) * xy.second;
  };

  SlopeResult res;
  bool total = true;
  ISStructure& s = res.is;
  for (auto& [fid, w] : cv.ball.faces) s.face_order.ground.insert(fid);
  for (auto& [f1, w1] : cv.ball.faces)
    for (auto& [f2, w2] : cv.ball.faces) {
      if (f1 == f2) continue;
      Rat v1 = val(f1), v2 = val(f2);
      if (v1 < v2) s.face_order.add(f1, f2);
      if (v1 == v2 && f1 < f2) total = false;
    }
  Relation eord;
  for (auto& [eid, ends] : cv.ball.edges) eord.ground.insert(eid);
  for (auto& [e1, ends1] : cv.ball.edges)
    for (auto& [e2, ends2] : cv.ball.edges) {
      if (e1 == e2) continue;
      Rat v1 = val(e1), v2 = val(e2);
      if (v1 < v2) eord.add(e1, e2);
      if (v1 == v2 && e1 < e2) total = false;
    }
  s.plus_order = eord;
  s.minus_order = std::move(eord);
  if (total) res.tis = TISStructure{s.face_order, s.plus_order, s.minus_order};
  return res;
}

}  // namespace stackings
