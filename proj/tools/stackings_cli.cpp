// Command-line front end: validate, check, convert, build Cayley balls,
// render dual graphs, search for certificates, fuzz disk diagrams, and read
// slope orders off plane embeddings. All inputs are JSON files ("-" reads
// stdin); outputs go to stdout and are byte-deterministic.
//
// Exit codes: 0 pass / success, 1 a check or search came back negative,
// 2 malformed input, 3 the answer is out of reach (horizon, descent
// disagreement, order oracle gave up).

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "stackings/convert.hpp"
#include "stackings/diagram.hpp"
#include "stackings/dualgraph.hpp"
#include "stackings/json_io.hpp"

using namespace stackings;

namespace {

std::string read_file(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw malformed_error("cannot read '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

Json load(const std::string& path) { return parse_json(read_file(path)); }

int print_report(const Report& rep, bool strict_horizon) {
  for (const auto& v : rep.violations) std::cout << "fail " << v.code << ": " << v.detail << "\n";
  for (const auto& v : rep.horizon) std::cout << "horizon " << v.code << ": " << v.detail << "\n";
  if (!rep.ok()) {
    std::cout << "result: fail\n";
    return 1;
  }
  if (!rep.horizon.empty()) {
    std::cout << (strict_horizon ? "result: pass-to-horizon\n" : "result: pass (horizon noted)\n");
    return strict_horizon ? 3 : 0;
  }
  std::cout << "result: pass\n";
  return 0;
}

std::pair<long long, long long> parse_slope(const std::string& text) {
  auto cut = text.find('/');
  if (cut == std::string::npos) throw malformed_error("slope must look like p/q");
  try {
    return {std::stoll(text.substr(0, cut)), std::stoll(text.substr(cut + 1))};
  } catch (const std::exception&) {
    throw malformed_error("slope must look like p/q");
  }
}

WordProblemOracle word_oracle(const std::string& kind, const Presentation& p,
                              const std::string& table_path) {
  if (kind == "free") return WordProblemOracle::for_free((int)p.generators.size());
  if (kind == "abelian") return WordProblemOracle::for_abelian(p);
  // finite: {"mult": [[...]], "gens": [element per generator, sorted gen order]}
  if (table_path.empty()) throw malformed_error("--oracle finite needs --table");
  Json j = load(table_path);
  if (!j.is_object() || !j.contains("mult") || !j.contains("gens") || j.size() != 2)
    throw malformed_error("table must be {\"mult\": [[..]], \"gens\": [..]}");
  std::vector<std::vector<int>> mult;
  for (const auto& row : j["mult"]) {
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw malformed_error("table entries must be integers");
      r.push_back(x.get<int>());
    }
    mult.push_back(std::move(r));
  }
  std::vector<int> gens;
  for (const auto& x : j["gens"]) {
    if (!x.is_number_integer()) throw malformed_error("table entries must be integers");
    gens.push_back(x.get<int>());
  }
  return WordProblemOracle::for_finite(p, std::move(mult), std::move(gens));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificates for stacked 2-complexes"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- validate ----
  {
    CLI::App* validate_cmd = app.add_subcommand("validate", "structural validation of one input");
    validate_cmd->require_subcommand(1);
    static std::string in_path, target_path;

    CLI::App* vc = validate_cmd->add_subcommand("complex", "a 2-complex");
    vc->add_option("--input", in_path, "complex JSON")->required();
    vc->callback([&] {
      action = [] { return print_report(validate(complex_from_json(load(in_path))), false); };
    });

    CLI::App* vp = validate_cmd->add_subcommand("presentation", "a group presentation");
    vp->add_option("--input", in_path, "presentation JSON")->required();
    vp->callback([&] {
      action = [] {
        return print_report(validate_presentation(presentation_from_json(load(in_path))), false);
      };
    });

    CLI::App* vv = validate_cmd->add_subcommand("cover", "a ball with deck data");
    vv->add_option("--input", in_path, "cover JSON")->required();
    vv->callback([&] {
      action = [] { return print_report(validate_cover(cover_from_json(load(in_path))), false); };
    });

    CLI::App* vd = validate_cmd->add_subcommand("diagram", "a disk diagram over a target");
    vd->add_option("--input", in_path, "diagram JSON")->required();
    vd->add_option("--complex", target_path, "target complex JSON")->required();
    vd->callback([&] {
      action = [] {
        DiskDiagram d = diagram_from_json(load(in_path));
        TwoComplex target = complex_from_json(load(target_path));
        Report rep = check_diagram(d, target);
        rep.merge(check_reduced(d));
        return print_report(rep, false);
      };
    });
  }

  // ---- check ----
  {
    CLI::App* check_cmd = app.add_subcommand("check", "run one certificate checker");
    check_cmd->require_subcommand(1);
    static std::string complex_path, cover_path, input_path;
    static bool torsion = false, strict = false;

    auto add_common = [&](CLI::App* c, bool on_cover) {
      if (on_cover)
        c->add_option("--cover", cover_path, "cover JSON")->required();
      else
        c->add_option("--complex", complex_path, "complex JSON")->required();
      c->add_option("--input", input_path, "certificate JSON")->required();
      c->add_flag("--strict-horizon", strict, "exit 3 when anything was out of reach");
      if (on_cover) c->add_flag("--torsion", torsion, "compare faces by boundary words");
    };

    CLI::App* gs = check_cmd->add_subcommand("gs", "good stacking on a complex");
    add_common(gs, false);
    gs->callback([&] {
      action = [] {
        TwoComplex c = complex_from_json(load(complex_path));
        return print_report(check_good(c, stacking_from_json(load(input_path))), strict);
      };
    });

    CLI::App* st = check_cmd->add_subcommand("staggered", "staggered structure on a complex");
    add_common(st, false);
    st->callback([&] {
      action = [] {
        TwoComplex c = complex_from_json(load(complex_path));
        return print_report(check_staggered(c, staggered_from_json(load(input_path))), strict);
      };
    });

    CLI::App* bs = check_cmd->add_subcommand("bs", "bislim structure on a ball");
    add_common(bs, true);
    bs->callback([&] {
      action = [] {
        CoverData cv = cover_from_json(load(cover_path));
        return print_report(check_bislim(cv, bislim_from_json(load(input_path)), torsion), strict);
      };
    });

    CLI::App* tbs = check_cmd->add_subcommand("tbs", "totally bislim structure on a ball");
    add_common(tbs, true);
    tbs->callback([&] {
      action = [] {
        CoverData cv = cover_from_json(load(cover_path));
        return print_report(check_tbs(cv, bislim_from_json(load(input_path)), torsion), strict);
      };
    });

    CLI::App* is_c = check_cmd->add_subcommand("is", "invariant staggering on a ball");
    add_common(is_c, true);
    is_c->callback([&] {
      action = [] {
        CoverData cv = cover_from_json(load(cover_path));
        return print_report(check_is(cv, is_from_json(load(input_path)), torsion), strict);
      };
    });

    CLI::App* tis = check_cmd->add_subcommand("tis", "total invariant staggering on a ball");
    add_common(tis, true);
    tis->callback([&] {
      action = [] {
        CoverData cv = cover_from_json(load(cover_path));
        return print_report(check_tis(cv, tis_from_json(load(input_path)), torsion), strict);
      };
    });
  }

  // ---- convert ----
  {
    CLI::App* conv = app.add_subcommand("convert", "follow one conversion arrow");
    static std::string from, to, cover_path, input_path, pres_path, oracle_kind = "abelian";
    static bool torsion = false;
    conv->add_option("--from", from, "gs|bs|tbs|tis|is|staggered")->required();
    conv->add_option("--to", to, "bs|is|tis|tbs|gs")->required();
    conv->add_option("--cover", cover_path, "cover JSON")->required();
    conv->add_option("--input", input_path, "source certificate JSON")->required();
    conv->add_option("--presentation", pres_path, "presentation JSON (staggered source)");
    conv->add_option("--oracle", oracle_kind, "left-order oracle: free|abelian (staggered source)");
    conv->add_flag("--torsion", torsion, "compare faces by boundary words");
    conv->callback([&] {
      action = [] {
        CoverData cv = cover_from_json(load(cover_path));
        Json in = load(input_path);
        const std::string arrow = from + ">" + to;
        Json out;
        if (arrow == "gs>bs")
          out = to_json(gs_to_bs(cv, stacking_from_json(in), torsion));
        else if (arrow == "bs>is")
          out = to_json(bs_to_is(cv, bislim_from_json(in), torsion));
        else if (arrow == "tbs>tis")
          out = to_json(tbs_to_tis(cv, bislim_from_json(in), torsion));
        else if (arrow == "tis>tbs")
          out = to_json(tis_to_tbs(cv, tis_from_json(in), torsion));
        else if (arrow == "tis>is")
          out = to_json(tis_to_is(cv, tis_from_json(in), torsion));
        else if (arrow == "is>gs")
          out = to_json(is_to_gs(cv, is_from_json(in), torsion));
        else if (arrow == "is>bs")
          out = to_json(is_to_bs(cv, is_from_json(in), torsion));
        else if (arrow == "staggered>tis") {
          if (pres_path.empty())
            throw malformed_error("convert --from staggered needs --presentation");
          LeftOrderOracle::Kind k;
          if (oracle_kind == "free")
            k = LeftOrderOracle::free_group;
          else if (oracle_kind == "abelian")
            k = LeftOrderOracle::free_abelian;
          else
            throw malformed_error("--oracle must be free or abelian");
          LeftOrderOracle ord = make_order_oracle(presentation_from_json(load(pres_path)), k);
          out = to_json(staggered_to_tis(cv, staggered_from_json(in), ord));
        } else {
          throw malformed_error("no conversion from '" + from + "' to '" + to + "'");
        }
        std::cout << dump_json(out);
        return 0;
      };
    });
  }

  // ---- cover ball ----
  {
    CLI::App* cover_cmd = app.add_subcommand("cover", "build covers");
    cover_cmd->require_subcommand(1);
    CLI::App* ball = cover_cmd->add_subcommand("ball", "Cayley ball of a presentation");
    static std::string pres_path, oracle_kind, table_path;
    static int radius = 1;
    ball->add_option("--presentation", pres_path, "presentation JSON")->required();
    ball->add_option("--radius", radius, "ball radius")->required()->check(CLI::NonNegativeNumber);
    ball->add_option("--oracle", oracle_kind, "word problem oracle: free|abelian|finite")
        ->required();
    ball->add_option("--table", table_path, "finite multiplication table JSON");
    ball->callback([&] {
      action = [] {
        Presentation p = presentation_from_json(load(pres_path));
        if (oracle_kind != "free" && oracle_kind != "abelian" && oracle_kind != "finite")
          throw malformed_error("--oracle must be free, abelian or finite");
        std::cout << dump_json(to_json(build_cayley_ball(
            p, radius, word_oracle(oracle_kind, p, table_path))));
        return 0;
      };
    });
  }

  // ---- dual ----
  {
    CLI::App* dual_cmd = app.add_subcommand("dual", "dual graph as DOT");
    static std::string complex_path, stacking_path;
    static bool torsion = false;
    dual_cmd->add_option("--complex", complex_path, "complex JSON")->required();
    dual_cmd->add_option("--stacking", stacking_path, "orient arcs by this stacking");
    dual_cmd->add_flag("--torsion", torsion, "compare faces by boundary words");
    dual_cmd->callback([&] {
      action = [] {
        TwoComplex c = complex_from_json(load(complex_path));
        DualGraph g = build_dual(c, torsion);
        if (stacking_path.empty()) {
          std::cout << to_dot(g);
          return 0;
        }
        DirectedDual dd = direct_dual(c, stacking_from_json(load(stacking_path)), g);
        std::cout << to_dot(dd);
        if (auto cyc = find_cycle(dd)) {
          std::cerr << "cycle:";
          for (const auto& f : *cyc) std::cerr << " " << f;
          std::cerr << "\n";
          return 1;
        }
        return 0;
      };
    });
  }

  // ---- search ----
  {
    CLI::App* search_cmd = app.add_subcommand("search", "enumerate candidate certificates");
    search_cmd->require_subcommand(1);
    static std::string complex_path, cover_path;
    static long long budget = 1000000;
    static bool torsion = false;

    // static like the option variables: the callbacks run during parse, after
    // this block has gone out of scope
    static auto report_stats = [](const SearchStats& stats, bool found) {
      std::cerr << "examined " << stats.examined
                << (found ? ", found\n" : stats.exhausted ? ", exhausted\n" : ", budget hit\n");
    };
    static auto finish = [](const auto& result) {
      report_stats(result.stats, result.structure.has_value());
      if (result.structure) {
        std::cout << dump_json(to_json(*result.structure));
        return 0;
      }
      return result.stats.exhausted ? 1 : 3;
    };

    CLI::App* sg = search_cmd->add_subcommand("gs", "good stacking on a complex");
    sg->add_option("--complex", complex_path, "complex JSON")->required();
    sg->add_option("--budget", budget, "assignments to try");
    sg->callback([&] {
      action = [] {
        GoodSearchResult r = search_good_stacking(complex_from_json(load(complex_path)), budget);
        report_stats(r.stats, r.stacking.has_value());
        if (r.stacking) {
          std::cout << dump_json(to_json(*r.stacking));
          return 0;
        }
        return r.stats.exhausted ? 1 : 3;
      };
    });

    CLI::App* sb = search_cmd->add_subcommand("bislim", "bislim structure on a ball");
    sb->add_option("--cover", cover_path, "cover JSON")->required();
    sb->add_option("--budget", budget, "candidates to try");
    sb->add_flag("--torsion", torsion, "compare faces by boundary words");
    sb->callback([&] {
      action = [] {
        return finish(search_bislim(cover_from_json(load(cover_path)), budget, torsion));
      };
    });

    CLI::App* ss = search_cmd->add_subcommand("staggered", "staggered structure on a complex");
    ss->add_option("--complex", complex_path, "complex JSON")->required();
    ss->add_option("--budget", budget, "candidates to try");
    ss->callback([&] {
      action = [] {
        return finish(search_staggered(complex_from_json(load(complex_path)), budget));
      };
    });
  }

  // ---- diagram ----
  {
    CLI::App* dia = app.add_subcommand("diagram", "disk diagrams over a complex");
    dia->require_subcommand(1);
    static std::string complex_path, stacking_path, input_path, artifact_dir, emit_dir;
    static int count = 100, max_faces = 8;
    static unsigned long long seed = 0;

    CLI::App* fuzz = dia->add_subcommand(
        "fuzz", "grow reduced diagrams; induced-good ones must have acyclic duals");
    fuzz->add_option("--complex", complex_path, "target complex JSON")->required();
    fuzz->add_option("--stacking", stacking_path, "target stacking JSON")->required();
    fuzz->add_option("--count", count, "number of diagrams");
    fuzz->add_option("--seed", seed, "random seed");
    fuzz->add_option("--max-faces", max_faces, "faces per diagram at most");
    fuzz->add_option("--artifact", artifact_dir, "directory for counterexample dumps");
    fuzz->add_option("--emit", emit_dir, "also write every diagram into this directory");
    fuzz->callback([&] {
      action = [] {
        TwoComplex target = complex_from_json(load(complex_path));
        Stacking ts = stacking_from_json(load(stacking_path));
        FuzzOptions opt;
        opt.count = count;
        opt.seed = seed;
        opt.max_faces = max_faces;
        int good = 0;
        std::vector<DiskDiagram> batch = fuzz_diagrams(target, opt);
        for (int i = 0; i < (int)batch.size(); ++i) {
          const DiskDiagram& d = batch[i];
          if (!emit_dir.empty()) {
            std::ofstream out(emit_dir + "/diagram-" + std::to_string(i) + ".json",
                              std::ios::binary);
            out << dump_json(to_json(d));
          }
          Stacking ind = induce_stacking(d, target, ts);
          if (!check_good(d.complex, ind).ok()) continue;
          ++good;
          DirectedDual dd = direct_dual(d.complex, ind, build_dual(d.complex, false));
          if (auto cyc = find_cycle(dd)) {
            std::string msg = "diagram " + std::to_string(i) + ": induced-good but cyclic dual:";
            for (const auto& f : *cyc) msg += " " + f;
            std::cout << msg << "\n";
            if (!artifact_dir.empty()) {
              std::string path = artifact_dir + "/counterexample-" + std::to_string(i) + ".json";
              std::ofstream out(path, std::ios::binary);
              out << dump_json(to_json(d));
              std::cout << "wrote " << path << "\n";
            } else {
              std::cout << dump_json(to_json(d));
            }
            std::cout << "result: fail\n";
            return 1;
          }
        }
        std::cout << "result: pass (" << batch.size() << " reduced diagrams, " << good
                  << " induced-good, all duals acyclic)\n";
        return 0;
      };
    });

    CLI::App* ind = dia->add_subcommand("induce", "pull a target stacking back");
    ind->add_option("--complex", complex_path, "target complex JSON")->required();
    ind->add_option("--stacking", stacking_path, "target stacking JSON")->required();
    ind->add_option("--input", input_path, "diagram JSON")->required();
    ind->callback([&] {
      action = [] {
        TwoComplex target = complex_from_json(load(complex_path));
        std::cout << dump_json(to_json(induce_stacking(diagram_from_json(load(input_path)),
                                                       target,
                                                       stacking_from_json(load(stacking_path)))));
        return 0;
      };
    });
  }

  // ---- slope-order ----
  {
    CLI::App* slope = app.add_subcommand("slope-order", "orders induced by a plane direction");
    static std::string cover_path, embedding_path, slope_text;
    slope->add_option("--cover", cover_path, "cover JSON")->required();
    slope->add_option("--embedding", embedding_path, "embedding JSON")->required();
    slope->add_option("--slope", slope_text, "direction p/q")->required();
    slope->callback([&] {
      action = [] {
        auto [p, q] = parse_slope(slope_text);
        SlopeResult r = slope_projection_order(cover_from_json(load(cover_path)),
                                               embedding_from_json(load(embedding_path)), p, q);
        Json out{{"is", to_json(r.is)}, {"tis", r.tis ? to_json(*r.tis) : Json(nullptr)}};
        std::cout << dump_json(out);
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const malformed_error& e) {
    std::cerr << "malformed: " << e.what() << "\n";
    return 2;
  } catch (const horizon_error& e) {
    std::cerr << "horizon: " << e.what() << "\n";
    return 3;
  } catch (const descent_error& e) {
    std::cerr << "descent: " << e.what() << "\n";
    return 3;
  } catch (const undecided_error& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return 3;
  }
}
