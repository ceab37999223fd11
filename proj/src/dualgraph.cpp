#include "stackings/dualgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace stackings {

DualGraph build_dual(const TwoComplex& c, bool torsion_mode) {
  DualGraph g;
  for (auto& [f, w] : c.faces) g.nodes.insert(f);
  for (auto& [e, ends] : c.edges) {
    auto sides = sides_over(c, e);
    for (size_t i = 0; i < sides.size(); ++i)
      for (size_t j = i + 1; j < sides.size(); ++j) {
        bool distinct;
        if (torsion_mode)
          distinct = !boundary_equal_cyclic(c.faces.at(sides[i].face), c.faces.at(sides[j].face));
        else
          distinct = sides[i].face != sides[j].face;
        if (!distinct) continue;
        DualEdge de{std::min(sides[i], sides[j]), std::max(sides[i], sides[j]), e};
        g.edges.push_back(de);
      }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const DualEdge& a, const DualEdge& b) {
    return std::tie(a.edge, a.s1, a.s2) < std::tie(b.edge, b.s1, b.s2);
  });
  return g;
}

DirectedDual direct_dual(const TwoComplex& c, const Stacking& s, const DualGraph& g) {
  (void)c;
  DirectedDual d;
  d.nodes = g.nodes;
  for (auto& de : g.edges) {
    int r1 = side_rank(s, de.edge, de.s1);
    int r2 = side_rank(s, de.edge, de.s2);
    if (r1 < 0 || r2 < 0 || r1 == r2)
      throw malformed_error("direct_dual: stacking does not rank both sides of edge '" +
                            de.edge + "'");
    Side lo = r1 < r2 ? de.s1 : de.s2;
    Side hi = r1 < r2 ? de.s2 : de.s1;
    d.arcs.push_back(Arc{lo.face, hi.face, lo, hi, de.edge});
  }
  return d;
}

std::optional<std::vector<std::string>> find_cycle(const DirectedDual& d) {
  std::map<std::string, std::vector<std::string>> adj;
  for (auto& n : d.nodes) adj[n];
  for (auto& a : d.arcs) adj[a.from].push_back(a.to);
  for (auto& [n, outs] : adj) {
    std::sort(outs.begin(), outs.end());
    outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
  }

  std::map<std::string, int> color;  // 0 white, 1 on stack, 2 done
  std::vector<std::string> stack;
  std::optional<std::vector<std::string>> found;

  std::function<bool(const std::string&)> dfs = [&](const std::string& u) -> bool {
    color[u] = 1;
    stack.push_back(u);
    for (auto& v : adj[u]) {
      if (color[v] == 1) {
        auto it = std::find(stack.begin(), stack.end(), v);
        std::vector<std::string> cyc(it, stack.end());
        cyc.push_back(v);
        found = cyc;
        return true;
      }
      if (color[v] == 0 && dfs(v)) return true;
    }
    stack.pop_back();
    color[u] = 2;
    return false;
  };

  for (auto& n : d.nodes)
    if (color[n] == 0 && dfs(n)) return found;
  return std::nullopt;
}

Relation reachability_order(const DirectedDual& d) {
  if (find_cycle(d))
    throw malformed_error("reachability_order: directed dual has a cycle");
  Relation r;
  r.ground = d.nodes;
  for (auto& a : d.arcs) r.add(a.from, a.to);
  // transitive closure; irreflexive because the graph is acyclic
  std::vector<std::string> ids(r.ground.begin(), r.ground.end());
  std::map<std::string, int> idx;
  for (size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = (int)i;
  std::vector<std::vector<char>> m(ids.size(), std::vector<char>(ids.size(), 0));
  for (auto& [a, b] : r.pairs) m[idx[a]][idx[b]] = 1;
  for (size_t k = 0; k < ids.size(); ++k)
    for (size_t i = 0; i < ids.size(); ++i)
      if (m[i][k])
        for (size_t j = 0; j < ids.size(); ++j)
          if (m[k][j]) m[i][j] = 1;
  Relation out;
  out.ground = r.ground;
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = 0; j < ids.size(); ++j)
      if (m[i][j]) out.add(ids[i], ids[j]);
  return out;
}

namespace {
std::string side_label(const Side& s) {
  return s.face + ":" + std::to_string(s.pos);
}
}  // namespace

std::string to_dot(const DualGraph& g) {
  std::ostringstream os;
  os << "graph dual {\n";
  for (auto& n : g.nodes) os << "  \"" << n << "\";\n";
  for (auto& e : g.edges)
    os << "  \"" << e.s1.face << "\" -- \"" << e.s2.face << "\" [label=\"" << e.edge
       << " " << side_label(e.s1) << "|" << side_label(e.s2) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const DirectedDual& d) {
  std::ostringstream os;
  os << "digraph dual {\n";
  for (auto& n : d.nodes) os << "  \"" << n << "\";\n";
  auto arcs = d.arcs;
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.edge, a.lo, a.hi) < std::tie(b.edge, b.lo, b.hi);
  });
  for (auto& a : arcs)
    os << "  \"" << a.from << "\" -> \"" << a.to << "\" [label=\"" << a.edge << " "
       << side_label(a.lo) << "<" << side_label(a.hi) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace stackings
