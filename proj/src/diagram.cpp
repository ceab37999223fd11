#include "stackings/diagram.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <utility>

namespace stackings {

namespace {

SignedEdge flip(SignedEdge l) {
  l.dir = -l.dir;
  return l;
}

// Letterwise image of a boundary word under the cell map.
BoundaryWord mapped_word(const DiskDiagram& d, const BoundaryWord& w) {
  BoundaryWord m;
  m.reserve(w.size());
  for (const auto& l : w) m.push_back({d.cell_map.at(l.edge), l.dir});
  return m;
}

struct Alignment {
  int offset = 0;
  bool flipped = false;
};

// First rotation or reflected rotation carrying m onto t:
//   plain    m[k] == t[(offset + k) mod n]
//   flipped  m[k] == inverse of t[(offset - k) mod n]
std::optional<Alignment> align(const BoundaryWord& m, const BoundaryWord& t) {
  const int n = (int)t.size();
  if ((int)m.size() != n || n == 0) return std::nullopt;
  for (int off = 0; off < n; ++off) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) ok = m[k] == t[(off + k) % n];
    if (ok) return Alignment{off, false};
  }
  for (int off = 0; off < n; ++off) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) ok = m[k] == flip(t[((off - k) % n + n) % n]);
    if (ok) return Alignment{off, true};
  }
  return std::nullopt;
}

std::string side_str(const Side& s) {
  return "(" + s.face + "," + std::to_string(s.pos) + ")";
}

}  // namespace

Report check_diagram(const DiskDiagram& d, const TwoComplex& target) {
  Report rep;
  {
    Report base = validate(d.complex);
    for (const auto& v : base.violations) rep.add("dia.complex", v.code + ": " + v.detail);
    if (!rep.ok()) return rep;  // everything below assumes a sane complex
  }

  if (d.complex.vertices.empty()) {
    rep.add("dia.connected", "diagram has no vertices");
  } else {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [eid, ends] : d.complex.edges) {
      adj[ends.src].push_back(ends.dst);
      adj[ends.dst].push_back(ends.src);
    }
    std::set<std::string> seen{*d.complex.vertices.begin()};
    std::vector<std::string> todo{*d.complex.vertices.begin()};
    while (!todo.empty()) {
      std::string v = todo.back();
      todo.pop_back();
      for (const auto& w : adj[v])
        if (seen.insert(w).second) todo.push_back(w);
    }
    if (seen.size() != d.complex.vertices.size())
      rep.add("dia.connected", "diagram is not connected");
  }

  const long long chi = (long long)d.complex.vertices.size() -
                        (long long)d.complex.edges.size() + (long long)d.complex.faces.size();
  if (chi != 1) rep.add("dia.euler", "V - E + F = " + std::to_string(chi) + ", a disk needs 1");

  bool outer_usable = true;
  if (d.outer.empty()) {
    rep.add("dia.outer", "outer word is empty");
    outer_usable = false;
  }
  for (const auto& l : d.outer)
    if (!d.complex.edges.count(l.edge)) {
      rep.add("dia.outer", "outer word uses unknown edge '" + l.edge + "'");
      outer_usable = false;
    }
  if (outer_usable) {
    const int m = (int)d.outer.size();
    for (int i = 0; i < m; ++i)
      if (letter_end(d.complex, d.outer[i]) != letter_start(d.complex, d.outer[(i + 1) % m])) {
        rep.add("dia.outer", "outer word is not a closed path at letter " + std::to_string(i));
        break;
      }

    // Each edge is traversed once in each direction among face boundaries and
    // the outer word; that makes the corner-successor map a permutation of the
    // darts whose orbits are the faces plus the outer word, so the Euler count
    // above is exactly the planarity test.
    std::map<std::string, std::array<int, 2>> darts;  // [forwards, backwards]
    auto count = [&](const SignedEdge& l) { ++darts[l.edge][l.dir == 1 ? 0 : 1]; };
    for (const auto& [fid, w] : d.complex.faces)
      for (const auto& l : w) count(l);
    for (const auto& l : d.outer) count(l);
    for (const auto& [eid, ends] : d.complex.edges) {
      const auto a = darts[eid];
      if (a[0] != 1 || a[1] != 1)
        rep.add("dia.slots", "edge '" + eid + "' traversed " + std::to_string(a[0]) +
                                 "x forwards and " + std::to_string(a[1]) +
                                 "x backwards; a disk needs once each");
    }
  }

  for (const auto& v : d.complex.vertices) {
    auto it = d.cell_map.find(v);
    if (it == d.cell_map.end())
      rep.add("dia.map", "vertex '" + v + "' has no image");
    else if (!target.vertices.count(it->second))
      rep.add("dia.map", "vertex '" + v + "' maps to '" + it->second + "', not a target vertex");
  }
  for (const auto& [eid, ends] : d.complex.edges) {
    auto it = d.cell_map.find(eid);
    if (it == d.cell_map.end()) {
      rep.add("dia.map", "edge '" + eid + "' has no image");
      continue;
    }
    auto te = target.edges.find(it->second);
    if (te == target.edges.end()) {
      rep.add("dia.map", "edge '" + eid + "' maps to '" + it->second + "', not a target edge");
      continue;
    }
    auto ms = d.cell_map.find(ends.src);
    auto md = d.cell_map.find(ends.dst);
    if (ms != d.cell_map.end() && ms->second != te->second.src)
      rep.add("dia.map", "edge '" + eid + "': source maps to '" + ms->second +
                             "' but the image edge starts at '" + te->second.src + "'");
    if (md != d.cell_map.end() && md->second != te->second.dst)
      rep.add("dia.map", "edge '" + eid + "': destination maps to '" + md->second +
                             "' but the image edge ends at '" + te->second.dst + "'");
  }
  for (const auto& [fid, w] : d.complex.faces) {
    auto it = d.cell_map.find(fid);
    if (it == d.cell_map.end()) {
      rep.add("dia.map", "face '" + fid + "' has no image");
      continue;
    }
    auto tf = target.faces.find(it->second);
    if (tf == target.faces.end()) {
      rep.add("dia.map", "face '" + fid + "' maps to '" + it->second + "', not a target face");
      continue;
    }
    bool letters_known = true;
    for (const auto& l : w) letters_known = letters_known && d.cell_map.count(l.edge) > 0;
    if (!letters_known) continue;  // missing edge images reported above
    if (!align(mapped_word(d, w), tf->second))
      rep.add("dia.map", "face '" + fid + "': mapped boundary is no rotation of the boundary of '" +
                             it->second + "'");
  }
  return rep;
}

Report check_reduced(const DiskDiagram& d) {
  Report rep;
  for (const auto& [eid, ends] : d.complex.edges) {
    auto sides = sides_over(d.complex, eid);
    for (size_t i = 0; i < sides.size(); ++i)
      for (size_t j = i + 1; j < sides.size(); ++j) {
        const Side& s1 = sides[i];
        const Side& s2 = sides[j];
        const BoundaryWord& w1 = d.complex.faces.at(s1.face);
        const BoundaryWord& w2 = d.complex.faces.at(s2.face);
        if (w1[s1.pos].dir == w2[s2.pos].dir) continue;  // same dart direction: no mirror
        if (w1.size() != w2.size()) continue;
        const int n = (int)w1.size();
        bool mirror = true;
        for (int k = 0; k < n && mirror; ++k) {
          const SignedEdge& a = w1[(s1.pos + k) % n];
          const SignedEdge& b = w2[((s2.pos - k) % n + n) % n];
          auto ia = d.cell_map.find(a.edge);
          auto ib = d.cell_map.find(b.edge);
          mirror = ia != d.cell_map.end() && ib != d.cell_map.end() &&
                   ia->second == ib->second && a.dir == -b.dir;
        }
        if (mirror)
          rep.add("dia.cancellable", "sides " + side_str(s1) + " and " + side_str(s2) +
                                         " over edge '" + eid + "' mirror each other");
      }
  }
  return rep;
}

Stacking induce_stacking(const DiskDiagram& d, const TwoComplex& target,
                         const Stacking& target_stacking) {
  {
    Report chk = check_stacking(target, target_stacking);
    if (!chk.ok())
      throw malformed_error("induce_stacking: target stacking fails " +
                            chk.violations.front().code + " (" + chk.violations.front().detail +
                            ")");
    chk = check_diagram(d, target);
    if (!chk.ok())
      throw malformed_error("induce_stacking: diagram fails " + chk.violations.front().code +
                            " (" + chk.violations.front().detail + ")");
  }

  std::map<std::string, Alignment> al;
  for (const auto& [fid, w] : d.complex.faces)
    al[fid] = *align(mapped_word(d, w), target.faces.at(d.cell_map.at(fid)));

  auto target_side = [&](const Side& s) {
    const int n = (int)d.complex.faces.at(s.face).size();
    const Alignment& a = al.at(s.face);
    int q = a.flipped ? ((a.offset - s.pos) % n + n) % n : (s.pos + a.offset) % n;
    return Side{d.cell_map.at(s.face), q};
  };
  // A corner sits between letters pos-1 and pos; under a reflected alignment
  // those map to target letters (offset-pos)+1 and (offset-pos), so the image
  // corner index is (offset - pos + 1).
  auto target_corner = [&](const Corner& c) {
    const int n = (int)d.complex.faces.at(c.face).size();
    const Alignment& a = al.at(c.face);
    int q = a.flipped ? ((a.offset - c.pos + 1) % n + n) % n : (c.pos + a.offset) % n;
    return Corner{d.cell_map.at(c.face), q};
  };

  Stacking out;
  for (const auto& [eid, ends] : d.complex.edges) {
    const std::string& te = d.cell_map.at(eid);
    std::vector<std::tuple<int, Side>> keyed;
    for (const auto& s : sides_over(d.complex, eid))
      keyed.emplace_back(side_rank(target_stacking, te, target_side(s)), s);
    std::sort(keyed.begin(), keyed.end());
    for (size_t i = 0; i + 1 < keyed.size(); ++i)
      if (std::get<0>(keyed[i]) == std::get<0>(keyed[i + 1]))
        throw malformed_error("induce_stacking: sides " + side_str(std::get<1>(keyed[i])) +
                              " and " + side_str(std::get<1>(keyed[i + 1])) + " of edge '" + eid +
                              "' map onto one target side (cancellable pair)");
    auto& lv = out.side_order[eid];
    for (auto& [r, s] : keyed) lv.push_back(s);
  }
  for (const auto& v : d.complex.vertices) {
    const std::string& tv = d.cell_map.at(v);
    std::vector<std::tuple<int, Corner>> keyed;
    for (const auto& c : corners_at(d.complex, v))
      keyed.emplace_back(corner_rank(target_stacking, tv, target_corner(c)), c);
    std::sort(keyed.begin(), keyed.end());
    auto& lv = out.corner_order[v];
    for (auto& [r, c] : keyed) lv.push_back(c);
  }
  return out;
}

namespace {

struct Builder {
  const TwoComplex& target;
  const std::vector<std::string>& tf_ids;  // sorted target face ids
  std::mt19937_64& rng;
  DiskDiagram d;
  int vn = 0, en = 0, fn = 0;

  int rnd(int n) { return (int)(rng() % (unsigned long long)n); }
  std::string fresh_v() { return "v" + std::to_string(vn++); }
  std::string fresh_e() { return "e" + std::to_string(en++); }
  std::string fresh_f() { return "f" + std::to_string(fn++); }

  void seed_face() {
    const std::string& tf = tf_ids[rnd((int)tf_ids.size())];
    const BoundaryWord& T = target.faces.at(tf);
    const int n = (int)T.size();
    const int off = rnd(n);
    std::vector<std::string> ring;
    for (int i = 0; i < n; ++i) ring.push_back(fresh_v());
    BoundaryWord w;
    for (int i = 0; i < n; ++i) {
      const SignedEdge& tl = T[(off + i) % n];
      std::string e = fresh_e();
      const std::string& a = ring[i];
      const std::string& b = ring[(i + 1) % n];
      d.complex.edges[e] = tl.dir == 1 ? EdgeEnds{a, b} : EdgeEnds{b, a};
      d.cell_map[e] = tl.edge;
      d.cell_map[a] = letter_start(target, tl);
      w.push_back({e, tl.dir});
    }
    for (const auto& v : ring) d.complex.vertices.insert(v);
    std::string f = fresh_f();
    d.complex.faces[f] = w;
    d.cell_map[f] = tf;
    d.outer = inverse_word(w);
  }

  // Glue a fresh face along a random outer arc: the face adopts the arc's
  // darts and closes up with a fresh complement path, which becomes the new
  // stretch of outer boundary (walked the other way). Rolls back when the
  // result fails check_diagram or stops being reduced.
  bool attach() {
    const int m = (int)d.outer.size();
    int maxlen = 0;
    for (const auto& tf : tf_ids) maxlen = std::max(maxlen, (int)target.faces.at(tf).size());
    if (maxlen < 2 || m == 0) return false;
    const int L = 1 + rnd(std::min(m, maxlen - 1));
    const int s = rnd(m);

    BoundaryWord arc, marc;
    for (int i = 0; i < L; ++i) {
      const SignedEdge& l = d.outer[(s + i) % m];
      arc.push_back(l);
      marc.push_back({d.cell_map.at(l.edge), l.dir});
    }

    struct Cand {
      std::string tf;
      int off = 0;
      bool flipped = false;
    };
    std::vector<Cand> cands;
    for (const auto& tf : tf_ids) {
      const BoundaryWord& T = target.faces.at(tf);
      const int n = (int)T.size();
      if (n <= L) continue;
      for (int off = 0; off < n; ++off) {
        bool okp = true, okf = true;
        for (int k = 0; k < L && (okp || okf); ++k) {
          if (okp && !(marc[k] == T[(off + k) % n])) okp = false;
          if (okf && !(marc[k] == flip(T[((off - k) % n + n) % n]))) okf = false;
        }
        if (okp) cands.push_back({tf, off, false});
        if (okf) cands.push_back({tf, off, true});
      }
    }
    if (cands.empty()) return false;
    const Cand c = cands[rnd((int)cands.size())];

    DiskDiagram backup = d;

    const BoundaryWord& T = target.faces.at(c.tf);
    const int n = (int)T.size();
    auto target_letter = [&](int k) {
      return c.flipped ? flip(T[((c.off - k) % n + n) % n]) : T[(c.off + k) % n];
    };

    const std::string u0 = letter_start(d.complex, arc.front());
    const std::string uL = letter_end(d.complex, arc.back());
    BoundaryWord comp;
    std::string at = uL;
    for (int k = L; k < n; ++k) {
      const SignedEdge tl = target_letter(k);
      std::string to = k == n - 1 ? u0 : fresh_v();
      std::string e = fresh_e();
      d.complex.edges[e] = tl.dir == 1 ? EdgeEnds{at, to} : EdgeEnds{to, at};
      d.cell_map[e] = tl.edge;
      if (k != n - 1) {
        d.complex.vertices.insert(to);
        d.cell_map[to] = letter_end(target, tl);
      }
      comp.push_back({e, tl.dir});
      at = to;
    }

    std::string f = fresh_f();
    BoundaryWord w = arc;
    w.insert(w.end(), comp.begin(), comp.end());
    d.complex.faces[f] = w;
    d.cell_map[f] = c.tf;

    std::vector<SignedEdge> nouter;
    for (int i = 0; i < m - L; ++i) nouter.push_back(d.outer[(s + L + i) % m]);
    for (int j = (int)comp.size() - 1; j >= 0; --j) nouter.push_back(flip(comp[j]));
    d.outer = std::move(nouter);

    if (!check_diagram(d, target).ok() || !check_reduced(d).ok()) {
      d = std::move(backup);
      return false;
    }
    return true;
  }
};

}  // namespace

std::vector<DiskDiagram> fuzz_diagrams(const TwoComplex& target, const FuzzOptions& opt) {
  {
    Report chk = validate(target);
    if (!chk.ok())
      throw malformed_error("fuzz_diagrams: target fails " + chk.violations.front().code + " (" +
                            chk.violations.front().detail + ")");
  }
  if (target.faces.empty()) throw malformed_error("fuzz_diagrams: target has no faces");

  std::mt19937_64 rng(opt.seed);
  std::vector<std::string> tf_ids;
  for (const auto& [fid, w] : target.faces) tf_ids.push_back(fid);

  std::vector<DiskDiagram> out;
  for (int i = 0; i < opt.count; ++i) {
    Builder b{target, tf_ids, rng, {}};
    b.seed_face();
    const int want = 1 + b.rnd(std::max(1, opt.max_faces));
    int tries = 0;
    while ((int)b.d.complex.faces.size() < want && tries < opt.attach_retries)
      if (!b.attach()) ++tries;
    out.push_back(std::move(b.d));
  }
  return out;
}

}  // namespace stackings
