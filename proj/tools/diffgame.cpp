// Command-line driver for the diffgame library.
//
// Exit status: 0 success, 1 operational error, 2 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diffgame/blocks.hpp"
#include "diffgame/characterizations.hpp"
#include "diffgame/diffusion.hpp"
#include "diffgame/dot.hpp"
#include "diffgame/edge_list.hpp"
#include "diffgame/equilibrium.hpp"
#include "diffgame/generators.hpp"
#include "diffgame/hardness.hpp"
#include "diffgame/random_experiments.hpp"
#include "diffgame/report.hpp"
#include "diffgame/welfare.hpp"

namespace {

using namespace diffgame;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::vector<NodeId> parse_node_list(const std::string& text, const std::string& flag) {
  std::vector<NodeId> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto trimmed = std::string(detail::trim(item));
    const auto values = detail::parse_uints(trimmed);
    if (trimmed.empty() || !values || values->size() != 1)
      throw UsageError(flag + ": '" + text + "' is not a comma-separated node list");
    out.push_back(static_cast<NodeId>((*values)[0]));
  }
  if (out.empty()) throw UsageError(flag + ": empty node list");
  return out;
}

/// "0,3;7": player 0 seeds {0,3}, player 1 seeds {7}.
SeedProfile parse_seeds(const std::string& text) {
  SeedProfile profile;
  std::stringstream in(text);
  std::string player;
  while (std::getline(in, player, ';')) profile.seeds.push_back(parse_node_list(player, "--seeds"));
  if (profile.seeds.empty()) throw UsageError("--seeds: no players given");
  return profile;
}

// ---------------------------------------------------------------------------
// Shared option groups
// ---------------------------------------------------------------------------

struct GraphSource {
  std::string edge_list;
  std::vector<std::size_t> lattice;
  unsigned hypercube = 0;
  std::size_t complete = 0, path = 0, cycle = 0, star = 0;
  std::vector<std::string> er;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* app, bool random_allowed = true) {
    auto* group = app->add_option_group("graph source");
    group->add_option("--edge-list", edge_list, "Edge-list file");
    group->add_option("--lattice", lattice, "Lattice L(m x n)")->expected(2);
    group->add_option("--hypercube", hypercube, "Hypercube Q_k");
    group->add_option("--complete", complete, "Complete graph K_n");
    group->add_option("--path", path, "Path on n nodes");
    group->add_option("--cycle", cycle, "Cycle on n nodes");
    group->add_option("--star", star, "Star with the given number of leaves");
    if (random_allowed) group->add_option("--er", er, "G(n,p); p may be 'ln' for ln(n)/n; needs --seed")->expected(2);
    group->require_option(1);
  }

  Json describe() const {
    if (!edge_list.empty()) return Json{{"edge_list", edge_list}};
    if (!lattice.empty()) return Json{{"lattice", lattice}};
    if (hypercube) return Json{{"hypercube", hypercube}};
    if (complete) return Json{{"complete", complete}};
    if (path) return Json{{"path", path}};
    if (cycle) return Json{{"cycle", cycle}};
    if (star) return Json{{"star", star}};
    return Json{{"er", er}};
  }

  Graph build() const {
    if (!edge_list.empty()) return from_edge_list(read_file(edge_list));
    if (!lattice.empty()) return make_lattice(lattice[0], lattice[1]);
    if (hypercube) return make_hypercube(hypercube);
    if (complete) return make_complete(complete);
    if (path) return make_path(path);
    if (cycle) return make_cycle(cycle);
    if (star) return make_star(star);
    if (!seed) throw UsageError("--er requires --seed");
    const std::size_t n = std::stoul(er[0]);
    return make_erdos_renyi(n, parse_probability(er[1], n), *seed);
  }

  static double parse_probability(const std::string& text, std::size_t n) {
    if (text == "ln") return std::log(static_cast<double>(n)) / static_cast<double>(n);
    try {
      std::size_t used = 0;
      const double p = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return p;
    } catch (const std::exception&) {
      throw UsageError("probability '" + text + "' is neither a number nor 'ln'");
    }
  }
};

struct Output {
  std::string format = "json";
  std::string path;

  void attach(CLI::App* app, std::vector<std::string> formats) {
    app->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    app->add_option("--output,-o", path, "Write the report here instead of stdout");
  }

  Json describe() const { return Json{{"format", format}, {"output", path}}; }

  void emit(const std::string& text) const {
    if (path.empty()) std::cout << text;
    else write_file(path, text);
  }
  void emit(const Json& report) const { emit(report.dump(2) + "\n"); }
};

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

struct Context {
  std::size_t threads = 1;
};

Json base_config(const std::string& command, const Context& ctx, const Output& out) {
  Json config{{"command", command}, {"threads", ctx.threads}};
  config.update(out.describe());
  return config;
}

void add_simulate(CLI::App& root, Context& ctx) {
  auto* app = root.add_subcommand("simulate", "Run the diffusion process for a seed profile");
  auto src = std::make_shared<GraphSource>();
  auto out = std::make_shared<Output>();
  auto seeds = std::make_shared<std::string>();
  auto trace = std::make_shared<bool>(false);
  src->attach(app);
  app->add_option("--seed", src->seed, "RNG seed for random graph sources");
  app->add_option("--seeds", *seeds, "Per-player seed sets, e.g. '0,3;7'")->required();
  app->add_flag("--trace", *trace, "Include the per-round states");
  out->attach(app, {"json", "csv", "dot"});
  app->callback([=, &ctx] {
    const Graph g = src->build();
    const SeedProfile profile = parse_seeds(*seeds);
    const DiffusionOutcome o = diffuse(g, profile, *trace);
    if (out->format == "dot") return out->emit(to_dot(g, std::span<const NodeState>(o.final)));
    if (out->format == "csv") {
      std::string csv = "# diffgame.simulate.csv/1\nnode,state\n";
      for (NodeId v = 0; v < o.final.size(); ++v) csv += std::to_string(v) + "," + o.final[v].to_string() + "\n";
      return out->emit(csv);
    }
    Json config = base_config("simulate", ctx, *out);
    config["graph"] = src->describe();
    config["seeds"] = *seeds;
    config["trace"] = *trace;
    if (src->seed) config["seed"] = *src->seed;
    out->emit(make_report("simulate", config, to_json(o)));
  });
}

void add_sandwich(CLI::App& root, Context& ctx) {
  auto* app = root.add_subcommand("sandwich-check", "Check the distance sandwich for a 2-player run");
  auto src = std::make_shared<GraphSource>();
  auto out = std::make_shared<Output>();
  auto seeds = std::make_shared<std::string>();
  src->attach(app);
  app->add_option("--seed", src->seed, "RNG seed for random graph sources");
  app->add_option("--seeds", *seeds, "Two seed sets, e.g. '0;4'")->required();
  out->attach(app, {"json"});
  app->callback([=, &ctx] {
    const Graph g = src->build();
    const SeedProfile profile = parse_seeds(*seeds);
    if (profile.player_count() != 2) throw UsageError("--seeds: sandwich-check needs exactly two players");
    const auto o = diffuse(g, profile);
    const auto violations = check_distance_sandwich(g, profile, o);
    Json list = Json::array();
    for (const auto& v : violations)
      list.push_back(Json{{"node", v.node},
                          {"dist_a", v.dist_a == kUnreachable ? Json(nullptr) : Json(v.dist_a)},
                          {"dist_b", v.dist_b == kUnreachable ? Json(nullptr) : Json(v.dist_b)},
                          {"state", v.state.to_string()}});
    Json config = base_config("sandwich-check", ctx, *out);
    config["graph"] = src->describe();
    config["seeds"] = *seeds;
    out->emit(make_report("sandwich-check", config,
                          Json{{"utilities", o.utilities}, {"violations", list}, {"passed", violations.empty()}}));
  });
}

void add_utility_matrix(CLI::App& root, Context& ctx) {
  auto* app = root.add_subcommand("utility-matrix", "Player-0 utility for every ordered seed pair");
  auto src = std::make_shared<GraphSource>();
  auto out = std::make_shared<Output>();
  src->attach(app);
  app->add_option("--seed", src->seed, "RNG seed for random graph sources");
  out->attach(app, {"json", "csv"});
  app->callback([=, &ctx] {
    const Graph g = src->build();
    const UtilityMatrix ua = utility_matrix(g, ctx.threads);
    if (out->format == "csv") {
      std::string csv = "# diffgame.utility-matrix.csv/1\na,b,utility_a,utility_b\n";
      for (NodeId a = 0; a < g.node_count(); ++a)
        for (NodeId b = 0; b < g.node_count(); ++b)
          if (a != b)
            csv += std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(ua.at(a, b)) + "," +
                   std::to_string(ua.at(b, a)) + "\n";
      return out->emit(csv);
    }
    Json rows = Json::array();
    for (NodeId a = 0; a < g.node_count(); ++a) {
      Json row = Json::array();
      for (NodeId b = 0; b < g.node_count(); ++b) row.push_back(ua.at(a, b));
      rows.push_back(std::move(row));
    }
    Json config = base_config("utility-matrix", ctx, *out);
    config["graph"] = src->describe();
    out->emit(make_report("utility-matrix", config, Json{{"graph", graph_summary(g)}, {"matrix", rows}}));
  });
}

void add_equilibria(CLI::App& root, Context& ctx) {
  auto* app = root.add_subcommand("equilibria", "Enumerate 2-player single-seed equilibria");
  auto src = std::make_shared<GraphSource>();
  auto out = std::make_shared<Output>();
  auto no_block = std::make_shared<bool>(false);
  auto no_degree = std::make_shared<bool>(false);
  src->attach(app);
  app->add_option("--seed", src->seed, "RNG seed for random graph sources");
  app->add_flag("--no-block-filter", *no_block, "Do not prune pairs sharing no block");
  app->add_flag("--no-degree-filter", *no_degree, "Do not prune pairs violating the degree bounds");
  out->attach(app, {"json", "csv", "dot"});
  app->callback([=, &ctx] {
    const Graph g = src->build();
    if (out->format == "dot") return out->emit(to_dot(g));
    EquilibriumOptions options{!*no_block, !*no_degree, ctx.threads};
    const EquilibriumReport r = enumerate_equilibria_2p(g, options);
    if (out->format == "csv") {
      std::string csv = "# diffgame.equilibria.csv/1\na,b,utility_a,utility_b\n";
      for (const auto& p : r.equilibria)
        csv += std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.utility_a) + "," +
               std::to_string(p.utility_b) + "\n";
      return out->emit(csv);
    }
    Json result = to_json(r);
    result["necessary_conditions_hold"] = necessary_conditions_report(g, r).all_passed();
    Json config = base_config("equilibria", ctx, *out);
    config["graph"] = src->describe();
    config["block_filter"] = !*no_block;
    config["degree_filter"] = !*no_degree;
    out->emit(make_report("equilibria", config, result));
  });
}

void add_verify_family(CLI::App& root, Context& ctx) {
  auto* app = root.add_subcommand("verify-family", "Compare lattice or hypercube equilibria with the closed form");
  auto lattice = std::make_shared<std::vector<std::size_t>>();
  auto hypercube = std::make_shared<unsigned>(0);
  auto out = std::make_shared<Output>();
  auto* group = app->add_option_group("family");
  group->add_option("--lattice", *lattice, "Lattice L(m x n)")->expected(2);
  group->add_option("--hypercube", *hypercube, "Hypercube Q_k");
  group->require_option(1);
  out->attach(app, {"json"});
  app->callback([=, &ctx] {
    const Family family = lattice->empty() ? Family{HypercubeFamily{*hypercube}}
                                           : Family{LatticeFamily{(*lattice)[0], (*lattice)[1]}};
    const auto verdict = verify_characterization(family, ctx.threads);
    Json config = base_config("verify-family", ctx, *out);
    config["family"] = family_name(family);
    out->emit(make_report("verify-family", config, to_json(verdict)));
  });
}

ThreePartitionInstance load_instance(const std::string& path) { return parse_three_partition(read_file(path)); }

void add_gadget_build(CLI::App& root, Context& ctx) {
  auto* app = root.add_subcommand("gadget-build", "Build the 3-partition reduction gadget");
  auto instance = std::make_shared<std::string>();
  auto edges = std::make_shared<std::string>();
  auto regions = std::make_shared<std::string>();
  auto out = std::make_shared<Output>();
  app->add_option("--instance", *instance, "3-partition instance file")->required();
  app->add_option("--edges", *edges, "Write the gadget edge list here");
  app->add_option("--regions", *regions, "Write the region-label sidecar here");
  out->attach(app, {"json", "dot"});
  app->callback([=, &ctx] {
    const auto inst = load_instance(*instance);
    const GadgetGraph gadget = build_reduction_graph(inst, std::nullopt, ctx.threads);
    if (!edges->empty()) write_file(*edges, to_edge_list(gadget.graph, "reduction gadget, core " + gadget.core_name));
    if (!regions->empty()) write_file(*regions, regions_to_text(gadget.regions));
    if (out->format == "dot") return out->emit(to_dot(gadget.graph));
    Json config = base_config("gadget-build", ctx, *out);
    config["instance"] = *instance;
    config["edges"] = *edges;
    config["regions"] = *regions;
    out->emit(make_report("gadget-build", config, to_json(gadget)));
  });
}

void add_gadget_verify(CLI::App& root, Context& ctx) {
  auto* app = root.add_subcommand("gadget-verify", "Check the gadget against the brute-force 3-partition solver");
  auto instance = std::make_shared<std::string>();
  auto out = std::make_shared<Output>();
  app->add_option("--instance", *instance, "3-partition instance file")->required();
  out->attach(app, {"json"});
  app->callback([=, &ctx] {
    const auto inst = load_instance(*instance);
    const GadgetGraph gadget = build_reduction_graph(inst, std::nullopt, ctx.threads);
    const ReductionReport r = verify_reduction(inst, gadget, ctx.threads);
    Json result = to_json(r);
    result["gadget"] = to_json(gadget);
    Json config = base_config("gadget-verify", ctx, *out);
    config["instance"] = *instance;
    out->emit(make_report("gadget-verify", config, result));
  });
}

void add_extend(CLI::App& root, Context& ctx) {
  auto* app = root.add_subcommand("extend", "Build the extension graph that forces play onto T");
  auto src = std::make_shared<GraphSource>();
  auto T = std::make_shared<std::string>();
  auto edges = std::make_shared<std::string>();
  auto regions = std::make_shared<std::string>();
  auto out = std::make_shared<Output>();
  src->attach(app);
  app->add_option("--seed", src->seed, "RNG seed for random graph sources");
  app->add_option("--T", *T, "Comma-separated node set T")->required();
  app->add_option("--edges", *edges, "Write the extended edge list here");
  app->add_option("--regions", *regions, "Write the region-label sidecar here");
  out->attach(app, {"json", "dot"});
  app->callback([=, &ctx] {
    const Graph g = src->build();
    const auto nodes = parse_node_list(*T, "--T");
    const ExtendedGraph ext = extend_graph(g, nodes);
    if (!edges->empty()) write_file(*edges, to_edge_list(ext.graph, "extension graph"));
    if (!regions->empty()) write_file(*regions, regions_to_text(ext.regions));
    if (out->format == "dot") return out->emit(to_dot(ext.graph));
    Json config = base_config("extend", ctx, *out);
    config["graph"] = src->describe();
    config["T"] = nodes;
    config["edges"] = *edges;
    config["regions"] = *regions;
    out->emit(make_report("extend", config,
                          Json{{"graph", graph_summary(ext.graph)},
                               {"base", graph_summary(g)},
                               {"column_size", ext.column_size},
                               {"regions", region_counts(ext.regions)}}));
  });
}

void add_er_trials(CLI::App& root, Context& ctx) {
  auto* app = root.add_subcommand("er-trials", "Monte Carlo utilities on G(n,p)");
  auto n = std::make_shared<std::size_t>(0);
  auto p = std::make_shared<std::string>();
  auto trials = std::make_shared<std::size_t>(0);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto pair = std::make_shared<std::string>();
  auto out = std::make_shared<Output>();
  app->add_option("--n", *n, "Node count")->required();
  app->add_option("--p", *p, "Edge probability, or 'ln' for ln(n)/n")->required();
  app->add_option("--trials", *trials, "Number of trials")->required();
  app->add_option("--seed", *seed, "Master RNG seed")->required();
  app->add_option("--fixed-pair", *pair, "Seed every trial at 'a,b' instead of a uniform distinct pair");
  out->attach(app, {"json", "csv"});
  app->callback([=, &ctx] {
    const double prob = GraphSource::parse_probability(*p, *n);
    SeedPolicy policy = SeedPolicy::uniform();
    if (!pair->empty()) {
      const auto nodes = parse_node_list(*pair, "--fixed-pair");
      if (nodes.size() != 2) throw UsageError("--fixed-pair: expected 'a,b'");
      policy = SeedPolicy::fixed(nodes[0], nodes[1]);
    }
    const auto batch = run_er_trials(*n, prob, *trials, policy, *seed, ctx.threads);
    if (out->format == "csv") return out->emit(trials_csv(batch));
    Json config = base_config("er-trials", ctx, *out);
    config.update(Json{{"n", *n}, {"p", *p}, {"trials", *trials}, {"seed", *seed}, {"seed_policy", policy.tag()}});
    out->emit(make_report("er-trials", config, to_json(batch)));
  });
}

void add_tail_stats(CLI::App& root, Context& ctx) {
  auto* app = root.add_subcommand("tail-stats", "Sphere/ball growth tail frequency on G(n,p)");
  auto n = std::make_shared<std::size_t>(0);
  auto p = std::make_shared<std::string>();
  auto lambda = std::make_shared<std::optional<double>>();
  auto samples = std::make_shared<std::size_t>(0);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto out = std::make_shared<Output>();
  app->add_option("--n", *n, "Node count")->required();
  app->add_option("--p", *p, "Edge probability, or 'ln' for ln(n)/n")->required();
  app->add_option("--lambda", *lambda, "Growth threshold (default (1+sqrt 15) n p)");
  app->add_option("--samples", *samples, "Number of sampled graphs")->required();
  app->add_option("--seed", *seed, "Master RNG seed")->required();
  out->attach(app, {"json"});
  app->callback([=, &ctx] {
    const double prob = GraphSource::parse_probability(*p, *n);
    const double lam = lambda->value_or(proof_lambda(*n, prob));
    const auto stats = sphere_ball_tail_stats(*n, prob, lam, *samples, *seed, ctx.threads);
    Json config = base_config("tail-stats", ctx, *out);
    config.update(Json{{"n", *n}, {"p", *p}, {"lambda", lam}, {"samples", *samples}, {"seed", *seed}});
    out->emit(make_report("tail-stats", config, to_json(stats)));
  });
}

void add_welfare(CLI::App& root, Context& ctx, bool optimum) {
  const std::string name = optimum ? "welfare-optimum" : "welfare-bound";
  auto* app = root.add_subcommand(name, optimum ? "Brute-force maximum welfare with the lower bound"
                                                : "Exact sphere-size welfare lower bound");
  auto src = std::make_shared<GraphSource>();
  auto out = std::make_shared<Output>();
  src->attach(app);
  app->add_option("--seed", src->seed, "RNG seed for random graph sources");
  out->attach(app, {"json"});
  app->callback([=, &ctx] {
    const Graph g = src->build();
    WelfareBoundReport r;
    if (optimum) r = optimal_welfare_bruteforce(g, ctx.threads);
    else r.bound = welfare_lower_bound(g);
    Json config = base_config(name, ctx, *out);
    config["graph"] = src->describe();
    out->emit(make_report(name, config, to_json(r)));
  });
}

void add_submod(CLI::App& root, Context& ctx) {
  auto* app = root.add_subcommand("submod-search", "Search for sub-modularity violations of the utility");
  auto src = std::make_shared<GraphSource>();
  auto opponent = std::make_shared<std::string>();
  auto max_set = std::make_shared<std::size_t>(2);
  auto exhaustive = std::make_shared<std::size_t>(0);
  auto witness = std::make_shared<std::string>();
  auto out = std::make_shared<Output>();
  auto* group = app->add_option_group("graph source");
  group->add_option("--edge-list", src->edge_list, "Edge-list file");
  group->add_option("--lattice", src->lattice, "Lattice L(m x n)")->expected(2);
  group->add_option("--hypercube", src->hypercube, "Hypercube Q_k");
  group->add_option("--complete", src->complete, "Complete graph K_n");
  group->add_option("--path", src->path, "Path on n nodes");
  group->add_option("--cycle", src->cycle, "Cycle on n nodes");
  group->add_option("--star", src->star, "Star with the given number of leaves");
  group->add_option("--exhaustive", *exhaustive, "Search all connected graphs up to this many nodes");
  group->require_option(1);
  app->add_option("--opponent", *opponent, "Opponent seed set (single-graph mode)");
  app->add_option("--max-set-size", *max_set, "Largest own seed set considered");
  app->add_option("--witness-out", *witness, "Write the first violation as an annotated edge list");
  out->attach(app, {"json"});
  app->callback([=, &ctx] {
    Json config = base_config("submod-search", ctx, *out);
    config["max_set_size"] = *max_set;
    Json result;
    if (*exhaustive) {
      const auto r = small_graph_submodularity_search(*exhaustive, *max_set);
      config["exhaustive"] = *exhaustive;
      result = Json{{"graphs_examined", r.graphs_examined}, {"max_nodes_searched", r.max_nodes_searched},
                    {"found", r.witness.has_value()}};
      if (r.witness) {
        result["graph"] = graph_summary(r.witness->graph);
        result["opponent"] = r.witness->opponent;
        result["violation"] = to_json(r.witness->violation);
        if (!witness->empty()) write_file(*witness, witness_to_text(*r.witness));
      }
    } else {
      if (opponent->empty()) throw UsageError("--opponent is required unless --exhaustive is given");
      const Graph g = src->build();
      const auto opp = parse_node_list(*opponent, "--opponent");
      const auto violations = submodularity_search(g, opp, *max_set);
      config["graph"] = src->describe();
      config["opponent"] = opp;
      Json list = Json::array();
      for (const auto& v : violations) list.push_back(to_json(v));
      result = Json{{"violations", list}, {"count", violations.size()}};
      if (!violations.empty() && !witness->empty())
        write_file(*witness, witness_to_text(SubmodularityWitness{g, opp, violations.front()}));
    }
    config["witness_out"] = *witness;
    out->emit(make_report("submod-search", config, result));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Competitive diffusion games on graphs"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--threads", ctx.threads, "Worker threads (0 = all cores)")->capture_default_str();

  add_simulate(app, ctx);
  add_sandwich(app, ctx);
  add_utility_matrix(app, ctx);
  add_equilibria(app, ctx);
  add_verify_family(app, ctx);
  add_gadget_build(app, ctx);
  add_gadget_verify(app, ctx);
  add_extend(app, ctx);
  add_er_trials(app, ctx);
  add_tail_stats(app, ctx);
  add_welfare(app, ctx, false);
  add_welfare(app, ctx, true);
  add_submod(app, ctx);
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
