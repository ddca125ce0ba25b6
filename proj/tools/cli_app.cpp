#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <random>
#include <sstream>

#include "surfcount/dp_engine.hpp"
#include "surfcount/errors.hpp"
#include "surfcount/generators.hpp"
#include "surfcount/io.hpp"
#include "surfcount/layered_counter.hpp"
#include "surfcount/oracle.hpp"
#include "surfcount/ssd_builder.hpp"

namespace surfcount::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string host, pattern, colors, bd, format = "text";
  bool induced = false, no_prune = false, show_stats = false, mids = false;
  int root = 0;
  std::uint64_t limit = 0;
  int seed = 1, hosts = 40;
};

void print_count(std::ostream& out, const Options& o, const Count& c) {
  if (o.format == "json") {
    out << json{{"count", c.str()}}.dump() << '\n';
  } else {
    out << c << '\n';
  }
}

void print_list(std::ostream& out, const Options& o, const std::vector<Subgraph>& subs) {
  if (o.format == "json") {
    json items = json::array();
    for (const Subgraph& s : subs) items.push_back({{"V", s.vertices}, {"E", s.edges}});
    out << json{{"isomorphs", items}}.dump() << '\n';
    return;
  }
  for (const Subgraph& s : subs) {
    out << "iso V:";
    for (VertexId v : s.vertices) out << ' ' << v;
    out << " E:";
    for (EdgeId e : s.edges) out << ' ' << e;
    out << '\n';
  }
}

VertexId checked_root(const Map& map, int root) {
  if (root < 0 || root >= map.vertex_count()) throw InputError("root vertex " + std::to_string(root) + " out of range");
  return root;
}

int cmd_stats(const Options& o, std::ostream& out, bool root_given) {
  const Map map = read_map_file(o.host);
  const int f = face_count(map), g = genus(map);
  if (o.format == "json") {
    json j{{"n", map.vertex_count()}, {"m", map.edge_count()}, {"f", f}, {"genus", g}};
    if (root_given) j["eccentricity"] = eccentricity(map, checked_root(map, o.root));
    out << j.dump() << '\n';
    return 0;
  }
  out << "n=" << map.vertex_count() << " m=" << map.edge_count() << " f=" << f << " genus=" << g;
  if (root_given) out << " eccentricity=" << eccentricity(map, checked_root(map, o.root));
  out << '\n';
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Map map = read_map_file(o.host);
  const SsdResult r = construct_ssd(map, checked_root(map, o.root));
  out << "# genus " << r.genus << " eccentricity " << r.eccentricity << " width " << r.mids.width << " bound "
      << r.width_bound() << '\n';
  write_bd(out, r.bd, o.mids ? &r.mids : nullptr);
  return 0;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const Map map = read_map_file(o.host);
  const SimpleGraph pattern = read_pattern_file(o.pattern);
  CounterOptions options;
  options.root = checked_root(map, o.root);
  options.prune = !o.no_prune;
  CounterStats stats;
  const Count c = count_isomorphs(map, pattern, o.induced, options, &stats);
  print_count(out, o, c);
  if (o.show_stats)
    err << "depth=" << stats.depth << " windows=" << stats.windows << " max_table=" << stats.dp.max_table_size
        << " work=" << stats.counting_work() << '\n';
  return 0;
}

int cmd_list(const Options& o, std::ostream& out, std::ostream& err) {
  const Map map = read_map_file(o.host);
  const SimpleGraph pattern = read_pattern_file(o.pattern);
  CounterOptions options;
  options.root = checked_root(map, o.root);
  options.prune = !o.no_prune;
  ListingStats stats;
  print_list(out, o, list_isomorphs(map, pattern, o.induced, o.limit, options, &stats));
  if (o.show_stats)
    err << "listed=" << stats.listed << " generation_ops=" << stats.generation_ops
        << " counting_work=" << stats.counting.counting_work() << '\n';
  return 0;
}

int cmd_count_colorful(const Options& o, std::ostream& out) {
  const Map map = read_map_file(o.host);
  const SimpleGraph pattern = read_pattern_file(o.pattern);
  std::ifstream in(o.colors);
  if (!in) throw InputError("cannot open colour file '" + o.colors + "'");
  Coloring coloring;
  try {
    coloring.color = parse_colors(in, map.vertex_count());
  } catch (const InputError& e) {
    throw InputError(o.colors + ": " + e.what());
  }
  coloring.q = *std::max_element(coloring.color.begin(), coloring.color.end());
  const SimpleGraph host = underlying_graph(map);
  BranchDecomposition bd;
  if (!o.bd.empty()) {
    std::ifstream bd_in(o.bd);
    if (!bd_in) throw InputError("cannot open decomposition file '" + o.bd + "'");
    try {
      bd = parse_bd(bd_in);
    } catch (const InputError& e) {
      throw InputError(o.bd + ": " + e.what());
    }
    bd.validate(host.edge_count());
  } else {
    bd = build_ssd(map, checked_root(map, o.root));
  }
  const PatternGraph pg(pattern);
  if (pg.isolated() > 0) throw InputError("pattern has an isolated vertex");
  print_count(out, o, count_colorful(host, bd, coloring, pattern, o.induced, !o.no_prune));
  return 0;
}

int cmd_oracle_count(const Options& o, std::ostream& out) {
  const Map map = read_map_file(o.host);
  const SimpleGraph pattern = read_pattern_file(o.pattern);
  if (o.induced && PatternGraph(pattern).isolated() > 0)
    throw InputError("isolated-vertex pattern unsupported in induced mode");
  print_count(out, o, brute_count(underlying_graph(map), pattern, o.induced));
  return 0;
}

int cmd_oracle_list(const Options& o, std::ostream& out) {
  const Map map = read_map_file(o.host);
  const SimpleGraph pattern = read_pattern_file(o.pattern);
  if (PatternGraph(pattern).isolated() > 0) throw InputError("isolated-vertex pattern unsupported in listing");
  std::vector<Subgraph> subs = brute_list(underlying_graph(map), pattern, o.induced);
  if (o.limit != 0 && subs.size() > o.limit) subs.resize(o.limit);
  print_list(out, o, subs);
  return 0;
}

// Random hosts against the oracle, counting and listing in both modes.
int cmd_selftest(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(o.seed));
  const char* const patterns[] = {"K3", "P3", "P4", "C4", "2K2", "K2+K3"};
  int checks = 0, failures = 0;
  for (int h = 0; h < o.hosts; ++h) {
    const int n = 3 + static_cast<int>(rng() % 9);
    const Map map = random_map(n, static_cast<int>(rng() % (2 * n)), static_cast<int>(rng() % 3), rng);
    const SimpleGraph host = underlying_graph(map);
    for (const char* name : patterns) {
      const SimpleGraph p = named_pattern(name);
      for (bool induced : {false, true}) {
        ++checks;
        std::vector<Subgraph> listed = list_isomorphs(map, p, induced);
        std::sort(listed.begin(), listed.end());
        const bool ok = count_isomorphs(map, p, induced) == brute_count(host, p, induced) &&
                        listed == brute_list(host, p, induced);
        if (!ok) {
          ++failures;
          out << "FAIL host " << h << " pattern " << name << (induced ? " induced" : "") << '\n';
        }
      }
    }
  }
  out << "selftest: " << checks - failures << "/" << checks << " checks passed\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting and listing subgraph isomorphs in embedded graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_host = [&](CLI::App* sub) { sub->add_option("--host,--map", o.host, "Host map file")->required(); };
  auto add_pattern = [&](CLI::App* sub) { sub->add_option("--pattern", o.pattern, "Pattern graph file")->required(); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_flag("--induced", o.induced, "Count induced subgraphs");
    sub->add_option("--root", o.root, "Root vertex of the BFS layering");
    sub->add_flag("--no-prune", o.no_prune, "Keep table entries that cannot extend to an isomorph");
  };

  CLI::App* stats = app.add_subcommand("stats", "Vertex, edge and face counts, genus and eccentricity");
  add_host(stats);
  CLI::Option* root_opt = stats->add_option("--root", o.root, "Report the eccentricity of this vertex");
  add_format(stats);

  CLI::App* decompose = app.add_subcommand("decompose", "Emit a surface split decomposition");
  add_host(decompose);
  decompose->add_option("--root", o.root, "BFS root");
  decompose->add_flag("--mids", o.mids, "Annotate middle sets");

  CLI::App* count = app.add_subcommand("count", "Count isomorphs of a pattern");
  CLI::App* list = app.add_subcommand("list", "List isomorphs of a pattern");
  CLI::App* ocount = app.add_subcommand("oracle-count", "Brute-force count");
  CLI::App* olist = app.add_subcommand("oracle-list", "Brute-force listing");
  for (CLI::App* sub : {count, list, ocount, olist}) {
    add_host(sub);
    add_pattern(sub);
    add_mode(sub);
    add_format(sub);
  }
  for (CLI::App* sub : {list, olist}) sub->add_option("--limit", o.limit, "Stop after N isomorphs (0 = all)");
  for (CLI::App* sub : {count, list}) sub->add_flag("--stats", o.show_stats, "Report work counters on stderr");

  CLI::App* colorful = app.add_subcommand("count-colorful", "Colourful count over one decomposition");
  add_host(colorful);
  add_pattern(colorful);
  add_mode(colorful);
  add_format(colorful);
  colorful->add_option("--colors", o.colors, "Colour file")->required();
  colorful->add_option("--bd", o.bd, "Decomposition file (default: constructed)");

  CLI::App* selftest = app.add_subcommand("selftest", "Random hosts against the oracle");
  selftest->add_option("--seed", o.seed, "Random seed");
  selftest->add_option("--hosts", o.hosts, "Number of random hosts");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? 0 : 1;
  }

  try {
    if (*stats) return cmd_stats(o, out, root_opt->count() > 0);
    if (*decompose) return cmd_decompose(o, out);
    if (*count) return cmd_count(o, out, err);
    if (*list) return cmd_list(o, out, err);
    if (*colorful) return cmd_count_colorful(o, out);
    if (*ocount) return cmd_oracle_count(o, out);
    if (*olist) return cmd_oracle_list(o, out);
    if (*selftest) return cmd_selftest(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace surfcount::cli
