#include "stackings/stacking.hpp"

#include <algorithm>
#include <cassert>

namespace stackings {

int side_rank(const Stacking& s, const std::string& edge, const Side& side) {
  auto it = s.side_order.find(edge);
  if (it == s.side_order.end()) return -1;
  for (size_t i = 0; i < it->second.size(); ++i)
    if (it->second[i] == side) return (int)i;
  return -1;
}

int corner_rank(const Stacking& s, const std::string& vertex, const Corner& c) {
  auto it = s.corner_order.find(vertex);
  if (it == s.corner_order.end()) return -1;
  for (size_t i = 0; i < it->second.size(); ++i)
    if (it->second[i] == c) return (int)i;
  return -1;
}

namespace {

// corner -> rank maps, one per vertex
std::map<std::string, std::map<Corner, int>> corner_ranks(const Stacking& s) {
  std::map<std::string, std::map<Corner, int>> r;
  for (auto& [v, corners] : s.corner_order) {
    auto& m = r[v];
    for (size_t i = 0; i < corners.size(); ++i) m[corners[i]] = (int)i;
  }
  return r;
}

bool same_multiset_sides(std::vector<Side> a, std::vector<Side> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool same_multiset_corners(std::vector<Corner> a, std::vector<Corner> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string side_str(const Side& s) {
  return "(" + s.face + "," + std::to_string(s.pos) + ")";
}

}  // namespace

Report check_stacking(const TwoComplex& c, const Stacking& s) {
  Report rep;

  // coverage: orders name exactly the sides over each edge / corners at each vertex
  for (auto& [e, ends] : c.edges) {
    auto want = sides_over(c, e);
    std::vector<Side> got;
    if (auto it = s.side_order.find(e); it != s.side_order.end()) got = it->second;
    if (!same_multiset_sides(want, got))
      rep.add("ST.cover", "edge '" + e + "': side order does not list its sides exactly");
  }
  for (auto& [e, order] : s.side_order)
    if (!c.edges.count(e)) rep.add("ST.cover", "side order for unknown edge '" + e + "'");

  for (auto& v : c.vertices) {
    auto want = corners_at(c, v);
    std::vector<Corner> got;
    if (auto it = s.corner_order.find(v); it != s.corner_order.end()) got = it->second;
    if (!same_multiset_corners(want, got))
      rep.add("ST.cover", "vertex '" + v + "': corner order does not list its corners exactly");
  }
  for (auto& [v, order] : s.corner_order)
    if (!c.vertices.count(v)) rep.add("ST.cover", "corner order for unknown vertex '" + v + "'");

  if (!rep.ok()) return rep;

  // compatibility: at each end of each edge, germ corners must appear in the
  // same order as the sides themselves
  auto ranks = corner_ranks(s);
  for (auto& [e, ends] : c.edges) {
    auto it = s.side_order.find(e);
    if (it == s.side_order.end()) continue;
    const auto& order = it->second;
    for (int end = 0; end < 2; ++end) {
      const std::string& v = end == 0 ? ends.src : ends.dst;
      auto& rk = ranks[v];
      int prev = -1;
      for (size_t i = 0; i < order.size(); ++i) {
        Corner g = end == 0 ? germ_at_src(c, order[i]) : germ_at_dst(c, order[i]);
        int r = rk.at(g);
        if (prev >= 0 && r <= prev) {
          rep.add("ST.compat", "edge '" + e + "' at " + (end == 0 ? "src" : "dst") +
                               " '" + v + "': sides " + side_str(order[i - 1]) + " < " +
                               side_str(order[i]) + " but corner ranks disagree");
          break;
        }
        prev = r;
      }
    }
  }
  return rep;
}

Report check_good(const TwoComplex& c, const Stacking& s) {
  Report rep = check_stacking(c, s);
  if (!rep.ok()) return rep;
  for (auto& [f, word] : c.faces) {
    bool has_low = false, has_high = false;
    for (int i = 0; i < (int)word.size(); ++i) {
      const std::string& e = word[i].edge;
      int r = side_rank(s, e, Side{f, i});
      int n = (int)s.side_order.at(e).size();
      if (r == 0) has_low = true;
      if (r == n - 1) has_high = true;
    }
    if (!has_low) rep.add("GS.low", "face '" + f + "' has no lowest side");
    if (!has_high) rep.add("GS.high", "face '" + f + "' has no highest side");
  }
  return rep;
}

std::optional<std::map<std::string, std::vector<Side>>> derive_side_orders(
    const TwoComplex& c, const std::map<std::string, std::vector<Corner>>& corner_order) {
  std::map<std::string, std::map<Corner, int>> ranks;
  for (auto& [v, corners] : corner_order) {
    auto& m = ranks[v];
    for (size_t i = 0; i < corners.size(); ++i) m[corners[i]] = (int)i;
  }
  std::map<std::string, std::vector<Side>> side_order;
  for (auto& [e, ends] : c.edges) {
    auto sides = sides_over(c, e);
    auto& src_rk = ranks[ends.src];
    std::sort(sides.begin(), sides.end(), [&](const Side& a, const Side& b) {
      return src_rk.at(germ_at_src(c, a)) < src_rk.at(germ_at_src(c, b));
    });
    auto& dst_rk = ranks[ends.dst];
    int prev = -1;
    for (auto& sd : sides) {
      int r = dst_rk.at(germ_at_dst(c, sd));
      if (r <= prev) return std::nullopt;
      prev = r;
    }
    side_order[e] = std::move(sides);
  }
  return side_order;
}

HeightAssignment heights_from_stacking(const TwoComplex& c, const Stacking& s) {
  (void)c;
  HeightAssignment h;
  for (auto& [v, corners] : s.corner_order)
    for (size_t i = 0; i < corners.size(); ++i)
      h.corner_height[corners[i]] = Rat((long long)i);
  return h;
}

std::pair<Rat, Rat> side_span(const TwoComplex& c, const HeightAssignment& h, const Side& side) {
  int n = (int)c.faces.at(side.face).size();
  Corner start{side.face, side.pos};
  Corner end{side.face, (side.pos + 1) % n};
  return {h.corner_height.at(start), h.corner_height.at(end)};
}

Stacking stacking_from_heights(const TwoComplex& c, const HeightAssignment& h) {
  Stacking s;
  for (auto& v : c.vertices) {
    auto corners = corners_at(c, v);
    std::sort(corners.begin(), corners.end(), [&](const Corner& a, const Corner& b) {
      return h.corner_height.at(a) < h.corner_height.at(b);
    });
    for (size_t i = 0; i + 1 < corners.size(); ++i)
      if (h.corner_height.at(corners[i]) == h.corner_height.at(corners[i + 1]))
        throw malformed_error("stacking_from_heights: tied corner heights at vertex '" + v + "'");
    s.corner_order[v] = std::move(corners);
  }
  auto side = derive_side_orders(c, s.corner_order);
  if (!side) throw malformed_error("stacking_from_heights: endpoint orders disagree");
  s.side_order = std::move(*side);
  return s;
}

GoodSearchResult search_good_stacking(const TwoComplex& c, long long budget) {
  GoodSearchResult res;

  std::vector<std::string> verts(c.vertices.begin(), c.vertices.end());
  std::vector<std::vector<Corner>> perms;  // current permutation per vertex
  for (auto& v : verts) {
    auto corners = corners_at(c, v);
    std::sort(corners.begin(), corners.end());
    perms.push_back(std::move(corners));
  }

  auto attempt = [&]() -> bool {
    std::map<std::string, std::vector<Corner>> corner_order;
    for (size_t i = 0; i < verts.size(); ++i) corner_order[verts[i]] = perms[i];
    auto side = derive_side_orders(c, corner_order);
    if (!side) return false;
    Stacking s{std::move(*side), std::move(corner_order)};
    if (check_good(c, s).ok()) {
      res.stacking = std::move(s);
      return true;
    }
    return false;
  };

  while (true) {
    if (res.stats.examined >= budget) return res;  // exhausted stays false
    res.stats.examined++;
    if (attempt()) return res;
    // odometer over per-vertex permutations, lexicographic
    size_t k = 0;
    while (k < perms.size() && !std::next_permutation(perms[k].begin(), perms[k].end())) ++k;
    if (k == perms.size()) {
      res.stats.exhausted = true;
      return res;
    }
  }
}

}  // namespace stackings
