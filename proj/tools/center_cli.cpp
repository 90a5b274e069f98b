// Command-line front end: recognize graph classes, compute weighted centers,
// verify radius-function properties, generate instances, and benchmark.
//
// Output is JSON-lines (one object per line) unless --human is given.
// Exit codes: 0 ok, 1 property violated / negative verdict, 2 input error,
// 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <map>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "graphcenter/cb_center.hpp"
#include "graphcenter/descent.hpp"
#include "graphcenter/gen.hpp"
#include "graphcenter/improve_biphelly.hpp"
#include "graphcenter/improve_bridged.hpp"
#include "graphcenter/io.hpp"
#include "graphcenter/median_center.hpp"
#include "graphcenter/oracle.hpp"
#include "graphcenter/recognize.hpp"

using nlohmann::json;
using namespace gc;

namespace {

bool g_human = false;

void emit(const json& j) {
  if (!g_human) {
    std::cout << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items())
    std::cout << "  " << key << " = " << value.dump() << '\n';
  std::cout << '\n';
}

json scaled_json(const Scaled& s) {
  json j;
  j["value"] = s.value;
  if (s.exact) {
    j["num"] = s.num;
    j["den"] = s.den;
  }
  return j;
}

std::string scaled_csv(const Scaled& s) {
  if (s.exact && s.den == 1) return std::to_string(s.num);
  std::ostringstream os;
  os << s.value;
  return os.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------------------
// recognize

recognize::ClassReport run_recognizer(const Graph& g, const std::string& cls,
                                      int cap) {
  if (cls == "weakly-modular") return recognize::is_weakly_modular(g, cap);
  if (cls == "modular") return recognize::is_modular(g, cap);
  if (cls == "median") return recognize::is_median(g, cap);
  if (cls == "cube-free-median") return recognize::is_cube_free_median(g, cap);
  if (cls == "weakly-bridged") return recognize::is_weakly_bridged(g, cap);
  if (cls == "bridged") return recognize::is_bridged(g, cap);
  if (cls == "convex-balls") return recognize::is_cb_graph(g, cap);
  if (cls == "bipartite-helly") return recognize::is_bipartite_helly(g, cap);
  throw input_error("unknown class: " + cls);
}

int cmd_recognize(const std::string& graph_file, const std::string& cls, int p,
                  int cap) {
  Graph g = io::load_graph(graph_file);
  json j;
  j["command"] = "recognize";
  j["graph"] = graph_file;
  j["n"] = g.n();
  j["m"] = g.m();
  j["class"] = cls;
  if (cls == "gp-unimodal") {
    j["p"] = p;
    recognize::GpUnimodalReport rep = recognize::recognize_Gp_unimodal_radius(g, p, cap);
    j["verdict"] = rep.verdict;
    if (!rep.verdict) {
      j["witness_pair"] = {rep.u, rep.v};
      Profile bad = recognize::build_violating_profile(g, rep.u, rep.v, p, cap);
      json prof = json::array();
      for (const auto& [v, w] : bad.entries())
        prof.push_back({{"vertex", v}, {"num", w.num}, {"den", w.den}});
      j["witness_profile"] = prof;
      j["local_min"] = rep.u;
      j["better_vertex"] = rep.v;
    }
    emit(j);
    return rep.verdict ? 0 : 1;
  }
  recognize::ClassReport rep = run_recognizer(g, cls, cap);
  j["verdict"] = rep.verdict;
  if (!rep.verdict) {
    j["condition"] = rep.condition;
    j["witness"] = rep.witness;
  }
  emit(j);
  return rep.verdict ? 0 : 1;
}

// ---------------------------------------------------------------------------
// center

struct SolveResult {
  Vertex center = -1;
  int steps = 0;
};

SolveResult solve_with(const Graph& g, const Profile& pi,
                       const std::string& method, std::uint64_t seed, bool det01,
                       int delta) {
  SolveResult out;
  if (method == "brute") {
    out.center = center_bruteforce_small(g, pi).centers.front();
  } else if (method == "bridged" || method == "biphelly") {
    ImproveStep step = method == "bridged" ? wb_improve_step() : bh_improve_step();
    auto [t, trace] = det01 ? deterministic_descent_01(g, pi, step)
                            : sample_select_descent(g, pi, step, seed);
    out.center = t;
    out.steps = trace.steps();
  } else if (method == "cb") {
    std::vector<ShrinkState> trace;
    out.center = center_cb(g, pi, seed, &trace);
    out.steps = static_cast<int>(trace.size());
  } else if (method == "median") {
    int rounds = 0;
    out.center = cut_on_best_neighbor(g, pi, &rounds);
    out.steps = rounds;
  } else if (method == "fpscan") {
    if (delta < 0) {
      // Exact hyperbolicity is only affordable on small inputs.
      delta = (oracle::hyperbolicity_twice_exact(g) + 1) / 2;
    }
    auto [t, trace] = fpscan_descent(g, pi, delta, brute_improve_step(1));
    out.center = t;
    out.steps = trace.steps();
  } else {
    throw input_error("unknown method: " + method);
  }
  return out;
}

// The recognizer guarding each class solver, most specific first for "auto".
std::string guard_class(const std::string& method) {
  if (method == "median") return "cube-free-median";
  if (method == "bridged") return "weakly-bridged";
  if (method == "biphelly") return "bipartite-helly";
  if (method == "cb") return "convex-balls";
  return "";
}

int cmd_center(const std::string& graph_file, const std::string& profile_file,
               std::string method, std::uint64_t seed, bool det01, int delta,
               int recog_cap) {
  Graph g = io::load_graph(graph_file);
  Profile pi = io::load_profile(profile_file);
  for (Vertex v : pi.support())
    if (v < 0 || v >= g.n()) throw input_error("profile vertex out of range");
  if (det01 && !pi.is_01()) throw input_error("--det01 requires a 0-1 profile");

  json j;
  j["command"] = "center";
  j["graph"] = graph_file;
  j["n"] = g.n();
  j["m"] = g.m();
  j["requested_method"] = method;
  j["seed"] = seed;

  auto t0 = std::chrono::steady_clock::now();
  if (method == "auto") {
    method = "brute";
    if (g.n() <= recog_cap)
      for (const char* cand : {"median", "bridged", "biphelly", "cb"})
        if (run_recognizer(g, guard_class(cand), recog_cap).verdict) {
          method = cand;
          break;
        }
  } else if (!guard_class(method).empty() && g.n() <= recog_cap) {
    recognize::ClassReport rep = run_recognizer(g, guard_class(method), recog_cap);
    if (!rep.verdict) {
      j["error"] = "method/class mismatch: graph fails " + rep.class_name;
      j["condition"] = rep.condition;
      j["witness"] = rep.witness;
      emit(j);
      return 2;
    }
  }
  j["method"] = method;

  SolveResult res = solve_with(g, pi, method, seed, det01, delta);
  // Independent re-derivation by one BFS at the reported center.
  RadiusEvaluation ev = radius_at(g, pi, res.center);
  j["center"] = res.center;
  j["radius"] = scaled_json(ev.value);
  j["steps"] = res.steps;
  j["millis"] = elapsed_ms(t0);
  emit(j);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& graph_file, const std::string& profile_file,
               int random_k, std::uint64_t seed, const std::string& property,
               int p, int alpha) {
  Graph g = io::load_graph(graph_file);
  bool violated = false;

  // Profile-independent properties run once.
  if (property == "helly-probe" || property == "cb-balls") {
    json j;
    j["command"] = "verify";
    j["property"] = property;
    j["graph"] = graph_file;
    if (property == "helly-probe") {
      bool ok = recognize::half_ball_helly_probe(g, seed);
      j["holds"] = ok;
      violated = !ok;
    } else {
      oracle::ConvexityReport rep = oracle::ball_convexity_check(g);
      j["holds"] = rep.holds;
      if (!rep.holds)
        j["witness"] = {{"center", rep.center},
                        {"radius", rep.radius},
                        {"interval", {rep.x, rep.w, rep.y}}};
      violated = !rep.holds;
    }
    emit(j);
    return violated ? 1 : 0;
  }

  std::vector<Profile> profiles;
  if (!profile_file.empty()) {
    profiles.push_back(io::load_profile(profile_file));
  } else if (random_k > 0) {
    SplitMix64 rng(seed);
    for (int i = 0; i < random_k; ++i)
      profiles.push_back(gen::random_profile(g, rng.next(), true));
  } else {
    throw input_error("verify: give a profile file or --random K");
  }

  for (size_t i = 0; i < profiles.size(); ++i) {
    const Profile& pi = profiles[i];
    json j;
    j["command"] = "verify";
    j["property"] = property;
    j["graph"] = graph_file;
    j["profile_index"] = i;
    if (property == "wp") {
      j["p"] = p;
      oracle::PeaklessReport rep = oracle::is_p_weakly_peakless(g, pi, p);
      j["holds"] = rep.holds;
      if (!rep.holds) {
        j["witness"] = {rep.counterexample->u, rep.counterexample->v};
        j["explanation"] = rep.counterexample->explanation;
        violated = true;
      }
    } else if (property == "unimodal") {
      j["p"] = p;
      oracle::UnimodalReport rep = oracle::is_Gp_unimodal_for_profile(g, pi, p);
      j["holds"] = rep.holds;
      if (!rep.holds) {
        j["witness"] = rep.counterexample;
        violated = true;
      }
    } else if (property == "diam-rad") {
      j["alpha"] = alpha;
      bool ok = oracle::verify_diam_rad_inequality(g, pi.support(), alpha);
      j["holds"] = ok;
      violated = violated || !ok;
    } else {
      throw input_error("unknown property: " + property);
    }
    emit(j);
  }
  return violated ? 1 : 0;
}

// ---------------------------------------------------------------------------
// gen

std::vector<std::vector<int>> parse_set_list(const std::string& text) {
  // "{1,2};{3}" -> {{1,2},{3}}
  std::vector<std::vector<int>> out;
  for (const std::string& chunk : [&] {
         std::vector<std::string> parts;
         std::string item;
         std::istringstream is(text);
         while (std::getline(is, item, ';')) parts.push_back(item);
         return parts;
       }()) {
    std::string body;
    for (char c : chunk)
      if (c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c)))
        body.push_back(c);
    std::vector<int> set;
    for (const std::string& tok : split_csv(body)) set.push_back(std::stoi(tok));
    if (set.empty()) throw input_error("gen hse: empty set in " + text);
    out.push_back(set);
  }
  if (out.empty()) throw input_error("gen hse: empty set list");
  return out;
}

gen::BlockPalette palette_of(const std::string& name) {
  if (name == "bridged") return gen::BlockPalette::Bridged;
  if (name == "weakly-bridged") return gen::BlockPalette::WeaklyBridged;
  if (name == "convex-balls") return gen::BlockPalette::ConvexBalls;
  if (name == "bipartite-helly") return gen::BlockPalette::BipartiteHelly;
  if (name == "cube-free-median") return gen::BlockPalette::CubeFreeMedian;
  throw input_error("unknown block palette: " + name);
}

int cmd_gen(std::string family, const std::string& out_file, int n, int k,
            int rows, int cols, int a, int b, int dim, std::uint64_t seed,
            const std::string& palette, const std::string& x_text,
            const std::string& y_text, int universe, bool with_profile,
            bool weighted) {
  for (char& c : family)
    if (c == '_') c = '-';

  Graph g;
  Profile pi;
  bool have_profile = false;
  json named = json::object();

  if (family == "path") {
    g = gen::path(n);
  } else if (family == "cycle") {
    g = gen::cycle(n);
  } else if (family == "complete") {
    g = gen::complete(n);
  } else if (family == "complete-bipartite") {
    g = gen::complete_bipartite(a, b);
  } else if (family == "star") {
    g = gen::star(n);
  } else if (family == "square-grid") {
    g = gen::square_grid(rows, cols);
  } else if (family == "king-grid") {
    g = gen::king_grid(rows, cols);
  } else if (family == "lozenge") {
    g = gen::triangular_lozenge(a, b);
  } else if (family == "triangle") {
    g = gen::triangular_triangle(n);
  } else if (family == "hypercube") {
    g = gen::hypercube(dim);
    pi = gen::hypercube_diametral_profile(g);
    have_profile = true;
  } else if (family == "wheel5") {
    g = gen::wheel5(n);
  } else if (family == "random-tree") {
    g = gen::random_tree(n, seed);
  } else if (family == "random-connected") {
    g = gen::random_connected(n, k, seed);
  } else if (family == "b") {
    g = gen::b_n(n);
  } else if (family == "b-hat") {
    g = gen::b_hat_n(n);
  } else if (family == "grid-plus-path") {
    gen::GridPlusPath inst = gen::grid_plus_path(k);
    g = inst.graph;
    pi = inst.profile;
    have_profile = true;
    named = {{"c", inst.c}, {"l", inst.l}, {"r", inst.r}, {"v", inst.v},
             {"z", inst.z}, {"zp", inst.zp}, {"u", inst.u}, {"t", inst.t}};
  } else if (family == "hse") {
    auto x_sets = parse_set_list(x_text);
    auto y_sets = parse_set_list(y_text);
    if (universe < 0) {
      // Compact the used element ids to 0..u-1.
      std::map<int, int> remap;
      for (auto* sets : {&x_sets, &y_sets})
        for (auto& s : *sets)
          for (int e : s) remap.emplace(e, 0);
      int next_id = 0;
      for (auto& [e, id] : remap) id = next_id++;
      for (auto* sets : {&x_sets, &y_sets})
        for (auto& s : *sets)
          for (int& e : s) e = remap.at(e);
      universe = next_id;
    }
    gen::HseInstance inst = gen::gen_hse(x_sets, y_sets, universe);
    g = inst.graph;
    pi = inst.profile;
    have_profile = true;
    named = {{"v", inst.v}, {"a", inst.a}, {"b", inst.b},
             {"c", inst.c}, {"w", inst.w}};
    named["x_vertices"] = inst.x_vertices;
    named["y_vertices"] = inst.y_vertices;
    named["u_vertices"] = inst.u_vertices;
    named["has_hitting_set"] = gen::has_hitting_set(x_sets, y_sets);
  } else if (family == "block-tree") {
    g = gen::block_tree(palette_of(palette), n, seed);
  } else if (family == "pentagon-tail") {
    g = gen::pentagon_tail(n, seed);
  } else {
    throw input_error("unknown family: " + family);
  }

  if (!have_profile && with_profile) {
    pi = gen::random_profile(g, seed, weighted);
    have_profile = true;
  }

  io::save_graph(out_file, g);
  json manifest;
  manifest["command"] = "gen";
  manifest["family"] = family;
  manifest["params"] = {{"n", n},       {"k", k},       {"rows", rows},
                        {"cols", cols}, {"a", a},       {"b", b},
                        {"dim", dim},   {"seed", seed}};
  manifest["graph_n"] = g.n();
  manifest["graph_m"] = g.m();
  manifest["files"] = json::array({out_file});
  if (have_profile) {
    std::string pfile = out_file + ".profile";
    io::save_profile(pfile, pi);
    manifest["files"].push_back(pfile);
  }
  if (!named.empty()) manifest["named"] = named;
  emit(manifest);
  return 0;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const std::string& methods_csv, const std::string& family,
              const std::string& sizes_csv, std::uint64_t seed, int profiles,
              bool weighted) {
  std::vector<std::string> methods = split_csv(methods_csv);
  std::vector<int> sizes;
  for (const std::string& s : split_csv(sizes_csv)) sizes.push_back(std::stoi(s));
  if (methods.empty() || sizes.empty())
    throw input_error("bench: need --methods and --sizes");

  std::cout << "family,n,m,method,seed,radius,steps,millis\n";
  SplitMix64 rng(seed);
  for (int size : sizes) {
    Graph g;
    std::string fam = family;
    for (char& c : fam)
      if (c == '_') c = '-';
    std::uint64_t inst_seed = rng.next();
    if (fam == "square-grid") {
      int side = std::max(2, static_cast<int>(std::lround(std::sqrt(size))));
      g = gen::square_grid(side, side);
    } else if (fam == "path") {
      g = gen::path(size);
    } else if (fam == "pentagon-tail") {
      g = gen::pentagon_tail(size, inst_seed);
    } else if (fam == "random-connected") {
      g = gen::random_connected(size, size / 4, inst_seed);
    } else {
      g = gen::block_tree(palette_of(fam), size, inst_seed);
    }
    for (int pidx = 0; pidx < profiles; ++pidx) {
      Profile pi = gen::random_profile(g, rng.next(), weighted);
      for (const std::string& method : methods) {
        std::uint64_t run_seed = rng.next();
        auto t0 = std::chrono::steady_clock::now();
        SolveResult res = solve_with(g, pi, method, run_seed, false, -1);
        double ms = elapsed_ms(t0);
        Scaled r = radius_at(g, pi, res.center).value;
        std::cout << family << ',' << g.n() << ',' << g.m() << ',' << method
                  << ',' << run_seed << ',' << scaled_csv(r) << ',' << res.steps
                  << ',' << ms << '\n';
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted graph center toolkit"};
  app.require_subcommand(1);
  app.add_flag("--human", g_human, "human-readable output instead of JSON lines");

  // recognize
  std::string rec_graph, rec_class;
  int rec_p = 1, rec_cap = 500;
  auto* rec = app.add_subcommand("recognize", "decide membership in a graph class");
  rec->add_option("graph", rec_graph, "graph file")->required();
  rec->add_option("class", rec_class,
                  "class name or gp-unimodal (weakly-modular, modular, median, "
                  "cube-free-median, weakly-bridged, bridged, convex-balls, "
                  "bipartite-helly, gp-unimodal)")
      ->required();
  rec->add_option("--p", rec_p, "power for gp-unimodal");
  rec->add_option("--cap", rec_cap, "vertex-count cap");

  // center
  std::string cen_graph, cen_profile, cen_method = "auto";
  std::uint64_t cen_seed = 0;
  bool cen_det01 = false;
  int cen_delta = -1, cen_recog_cap = 120;
  auto* cen = app.add_subcommand("center", "compute a weighted center vertex");
  cen->add_option("graph", cen_graph, "graph file")->required();
  cen->add_option("profile", cen_profile, "profile file")->required();
  cen->add_option("--method", cen_method,
                  "auto|bridged|biphelly|median|cb|brute|fpscan");
  cen->add_option("--seed", cen_seed, "random seed");
  cen->add_flag("--det01", cen_det01, "deterministic driver (0-1 profiles only)");
  cen->add_option("--delta", cen_delta, "hyperbolicity for fpscan");
  cen->add_option("--recog-cap", cen_recog_cap,
                  "largest n for which recognizers guard the method choice");

  // verify
  std::string ver_graph, ver_profile, ver_property;
  int ver_random = 0, ver_p = 2, ver_alpha = 1;
  std::uint64_t ver_seed = 0;
  auto* ver = app.add_subcommand("verify", "check radius-function properties");
  ver->add_option("graph", ver_graph, "graph file")->required();
  ver->add_option("--profile", ver_profile, "profile file");
  ver->add_option("--random", ver_random, "number of random profiles");
  ver->add_option("--seed", ver_seed, "random seed");
  ver->add_option("--property", ver_property,
                  "wp|unimodal|helly-probe|cb-balls|diam-rad")
      ->required();
  ver->add_option("--p", ver_p, "power for wp / unimodal");
  ver->add_option("--alpha", ver_alpha, "scale for diam-rad");

  // gen
  std::string gen_family, gen_out = "out.graph", gen_palette = "bridged";
  std::string gen_x, gen_y;
  int gen_n = 10, gen_k = 4, gen_rows = 4, gen_cols = 4, gen_a = 3, gen_b = 3;
  int gen_dim = 3, gen_universe = -1;
  std::uint64_t gen_seed = 0;
  bool gen_with_profile = false, gen_weighted = false;
  auto* gn = app.add_subcommand("gen", "generate an instance");
  gn->add_option("family", gen_family, "instance family")->required();
  gn->add_option("-o,--out", gen_out, "output graph file");
  gn->add_option("--n", gen_n, "vertex-count style parameter");
  gn->add_option("--k", gen_k, "k parameter (grid-plus-path, random-connected extras)");
  gn->add_option("--rows", gen_rows, "grid rows");
  gn->add_option("--cols", gen_cols, "grid cols");
  gn->add_option("--a", gen_a, "first side parameter");
  gn->add_option("--b", gen_b, "second side parameter");
  gn->add_option("--dim", gen_dim, "hypercube dimension");
  gn->add_option("--seed", gen_seed, "random seed");
  gn->add_option("--class", gen_palette, "block-tree palette");
  gn->add_option("--x", gen_x, "hse X sets, e.g. '{1};{2}'");
  gn->add_option("--y", gen_y, "hse Y sets");
  gn->add_option("--universe", gen_universe, "hse universe size");
  gn->add_flag("--with-profile", gen_with_profile, "emit a random profile too");
  gn->add_flag("--weighted", gen_weighted, "random profile gets integer weights");

  // bench
  std::string bn_methods, bn_family = "square-grid", bn_sizes;
  std::uint64_t bn_seed = 0;
  int bn_profiles = 3;
  bool bn_weighted = true;
  auto* bn = app.add_subcommand("bench", "method x size matrix, CSV output");
  bn->add_option("--methods", bn_methods, "comma-separated methods")->required();
  bn->add_option("--family", bn_family, "instance family");
  bn->add_option("--sizes", bn_sizes, "comma-separated target sizes")->required();
  bn->add_option("--seed", bn_seed, "random seed");
  bn->add_option("--profiles", bn_profiles, "profiles per instance");
  bn->add_flag("--weighted,!--unit", bn_weighted, "weighted random profiles");

  try {
    app.parse(argc, argv);
    if (rec->parsed()) return cmd_recognize(rec_graph, rec_class, rec_p, rec_cap);
    if (cen->parsed())
      return cmd_center(cen_graph, cen_profile, cen_method, cen_seed, cen_det01,
                        cen_delta, cen_recog_cap);
    if (ver->parsed())
      return cmd_verify(ver_graph, ver_profile, ver_random, ver_seed,
                        ver_property, ver_p, ver_alpha);
    if (gn->parsed())
      return cmd_gen(gen_family, gen_out, gen_n, gen_k, gen_rows, gen_cols,
                     gen_a, gen_b, gen_dim, gen_seed, gen_palette, gen_x, gen_y,
                     gen_universe, gen_with_profile, gen_weighted);
    if (bn->parsed())
      return cmd_bench(bn_methods, bn_family, bn_sizes, bn_seed, bn_profiles,
                       bn_weighted);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const invariant_violation& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "invariant"}}.dump() << '\n';
    return 3;
  } catch (const input_error& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "input"}}.dump() << '\n';
    return 2;
  } catch (const size_limit_error& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "cap"}}.dump() << '\n';
    return 2;
  }
  return 0;
}
