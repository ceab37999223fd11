#include "stackings/complex.hpp"

#include <algorithm>

namespace stackings {

std::string letter_start(const TwoComplex& x, const SignedEdge& l) {
  const EdgeEnds& e = x.edges.at(l.edge);
  return l.dir > 0 ? e.src : e.dst;
}

std::string letter_end(const TwoComplex& x, const SignedEdge& l) {
  const EdgeEnds& e = x.edges.at(l.edge);
  return l.dir > 0 ? e.dst : e.src;
}

Report validate(const TwoComplex& x) {
  Report rep;
  for (const auto& [id, ends] : x.edges) {
    if (!x.vertices.count(ends.src))
      rep.add("complex.edge-endpoint", "edge " + id + " src " + ends.src + " unknown");
    if (!x.vertices.count(ends.dst))
      rep.add("complex.edge-endpoint", "edge " + id + " dst " + ends.dst + " unknown");
  }
  for (const auto& [fid, w] : x.faces) {
    if (w.empty()) {
      rep.add("complex.empty-boundary", "face " + fid);
      continue;
    }
    bool refs_ok = true;
    for (const SignedEdge& l : w) {
      if (!x.edges.count(l.edge)) {
        rep.add("complex.dangling-edge", "face " + fid + " references edge " + l.edge);
        refs_ok = false;
      }
      if (l.dir != 1 && l.dir != -1) {
        rep.add("complex.dangling-edge", "face " + fid + " has letter with dir != +-1");
        refs_ok = false;
      }
    }
    if (!refs_ok) continue;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
      const SignedEdge& cur = w[i];
      const SignedEdge& nxt = w[(i + 1) % n];
      if (letter_end(x, cur) != letter_start(x, nxt))
        rep.add("complex.not-closed",
                "face " + fid + " letters " + std::to_string(i) + "," +
                    std::to_string((i + 1) % n) + " do not chain");
      if (cur.edge == nxt.edge && cur.dir == -nxt.dir)
        rep.add("complex.backtrack",
                "face " + fid + " backtracks at letter " + std::to_string(i));
    }
  }
  return rep;
}

std::vector<Side> sides_over(const TwoComplex& x, const std::string& edge) {
  std::vector<Side> out;
  for (const auto& [fid, w] : x.faces)
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      if (w[i].edge == edge) out.push_back({fid, i});
  return out;
}

std::vector<Corner> corners_at(const TwoComplex& x, const std::string& vertex) {
  std::vector<Corner> out;
  for (const auto& [fid, w] : x.faces)
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      if (letter_start(x, w[i]) == vertex) out.push_back({fid, i});
  return out;
}

const SignedEdge& side_letter(const TwoComplex& x, const Side& s) {
  return x.faces.at(s.face).at(static_cast<size_t>(s.pos));
}

std::string corner_vertex(const TwoComplex& x, const Corner& c) {
  return letter_start(x, x.faces.at(c.face).at(static_cast<size_t>(c.pos)));
}

Corner germ_at_src(const TwoComplex& x, const Side& s) {
  const BoundaryWord& w = x.faces.at(s.face);
  const int n = static_cast<int>(w.size());
  return w[static_cast<size_t>(s.pos)].dir > 0 ? Corner{s.face, s.pos}
                                               : Corner{s.face, (s.pos + 1) % n};
}

Corner germ_at_dst(const TwoComplex& x, const Side& s) {
  const BoundaryWord& w = x.faces.at(s.face);
  const int n = static_cast<int>(w.size());
  return w[static_cast<size_t>(s.pos)].dir > 0 ? Corner{s.face, (s.pos + 1) % n}
                                               : Corner{s.face, s.pos};
}

Report validate_subcomplex(const TwoComplex& x, const Subcomplex& sub) {
  Report rep;
  for (const auto& v : sub.vertices)
    if (!x.vertices.count(v)) rep.add("sub.unknown-cell", "vertex " + v);
  for (const auto& e : sub.edges) {
    auto it = x.edges.find(e);
    if (it == x.edges.end()) {
      rep.add("sub.unknown-cell", "edge " + e);
      continue;
    }
    if (!sub.vertices.count(it->second.src) || !sub.vertices.count(it->second.dst))
      rep.add("sub.not-closed", "edge " + e + " endpoint missing from subcomplex");
  }
  for (const auto& f : sub.faces) {
    auto it = x.faces.find(f);
    if (it == x.faces.end()) {
      rep.add("sub.unknown-cell", "face " + f);
      continue;
    }
    for (const SignedEdge& l : it->second)
      if (!sub.edges.count(l.edge))
        rep.add("sub.not-closed", "face " + f + " boundary edge " + l.edge + " missing");
  }
  return rep;
}

Subcomplex full_subcomplex(const TwoComplex& x) {
  Subcomplex sub;
  sub.vertices = x.vertices;
  for (const auto& [id, ends] : x.edges) sub.edges.insert(id);
  for (const auto& [id, w] : x.faces) sub.faces.insert(id);
  return sub;
}

Subcomplex subcomplex_of_faces(const TwoComplex& x, const std::set<std::string>& faces) {
  Subcomplex sub;
  sub.faces = faces;
  for (const auto& f : faces)
    for (const SignedEdge& l : x.faces.at(f)) sub.edges.insert(l.edge);
  for (const auto& e : sub.edges) {
    sub.vertices.insert(x.edges.at(e).src);
    sub.vertices.insert(x.edges.at(e).dst);
  }
  return sub;
}

std::vector<std::pair<std::string, std::string>> free_faces(const TwoComplex& x,
                                                            const Subcomplex& sub) {
  // Count traversals of each sub edge by sub faces; a free face is an edge
  // traversed exactly once in the subcomplex, paired with its one owner.
  std::map<std::string, std::vector<std::string>> owners;
  for (const auto& f : sub.faces)
    for (const SignedEdge& l : x.faces.at(f))
      if (sub.edges.count(l.edge)) owners[l.edge].push_back(f);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [e, fs] : owners)
    if (fs.size() == 1) out.push_back({fs.front(), e});
  std::sort(out.begin(), out.end());
  return out;
}

BoundaryWord inverse_word(const BoundaryWord& w) {
  BoundaryWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->edge, -it->dir});
  return out;
}

static bool is_rotation(const BoundaryWord& a, const BoundaryWord& b) {
  const size_t n = a.size();
  if (b.size() != n) return false;
  for (size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (size_t i = 0; i < n && match; ++i)
      if (a[i] != b[(i + shift) % n]) match = false;
    if (match) return true;
  }
  return false;
}

bool boundary_equal_cyclic(const BoundaryWord& a, const BoundaryWord& b) {
  return is_rotation(a, b) || is_rotation(a, inverse_word(b));
}

}  // namespace stackings
