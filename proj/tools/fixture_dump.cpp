// Prints one of the built-in example inputs as JSON, so the main CLI can be
// exercised without hand-writing files:
//
//   stackings-fixture torus-complex | stackings validate complex --input -

#include <iostream>
#include <map>
#include <string>

#include "stackings/fixtures.hpp"
#include "stackings/json_io.hpp"

using namespace stackings;

int main(int argc, char** argv) {
  const std::map<std::string, Json (*)()> table = {
      {"torus", [] { return to_json(fixtures::torus()); }},
      {"torus-complex", [] { return to_json(presentation_complex(fixtures::torus())); }},
      {"torus-gs", [] { return to_json(fixtures::torus_good_stacking()); }},
      {"torus-staggered", [] { return to_json(fixtures::torus_staggered()); }},
      {"two-triangles", [] { return to_json(fixtures::two_triangles()); }},
      {"two-triangles-complex",
       [] { return to_json(presentation_complex(fixtures::two_triangles())); }},
      {"two-triangles-gs", [] { return to_json(fixtures::two_triangles_good_stacking()); }},
      {"collapsing-pair", [] { return to_json(fixtures::collapsing_pair()); }},
      {"doubled-loop", [] { return to_json(fixtures::doubled_loop()); }},
      {"doubled-loop-table",
       [] { return Json{{"mult", Json::array({{0, 1}, {1, 0}})}, {"gens", Json::array({1})}}; }},
      {"swapped-triangles", [] { return to_json(fixtures::swapped_triangles()); }},
      {"swapped-triangles-complex",
       [] { return to_json(presentation_complex(fixtures::swapped_triangles())); }},
      {"swapped-triangles-embedding",
       [] {
         Presentation p = fixtures::swapped_triangles();
         CoverData cv = build_cayley_ball(p, 2, WordProblemOracle::for_abelian(p));
         return to_json(fixtures::swapped_triangles_embedding(cv));
       }},
      {"cube", [] { return to_json(fixtures::cube()); }},
      {"cube-half-stacking", [] { return to_json(fixtures::cube_half_stacking()); }},
  };

  if (argc == 2) {
    auto it = table.find(argv[1]);
    if (it != table.end()) {
      std::cout << dump_json(it->second());
      return 0;
    }
  }
  std::cerr << "usage: stackings-fixture NAME\nnames:\n";
  for (const auto& [name, fn] : table) std::cerr << "  " << name << "\n";
  return 2;
}
