#include "mmtw/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mmtw/approx.hpp"
#include "mmtw/blocker_trace.hpp"
#include "mmtw/decomposition.hpp"
#include "mmtw/dp.hpp"
#include "mmtw/errors.hpp"
#include "mmtw/io.hpp"
#include "mmtw/reductions.hpp"

namespace mmtw {

namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::vector<std::string> files;
  int k = -1;
  std::string measure;
  std::string problem;
  std::string caps_text;
  std::string subset;
  std::string output;
  std::string map_path;
  std::uint64_t seed = 1;
  int threads = 1;
  bool json = false;
  bool timing = false;
  Caps caps;
};

/// Carries an exit status up to run_cli together with its message.
struct Outcome {
  int code = kExitOk;
  std::string status = "ok";
  std::string human;
  json payload = json::object();
};

Caps parse_caps(const std::string& text) {
  Caps caps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--caps: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("--caps: bad value in '" + item + "'");
    }
    if (key == "nodes") caps.nodes = value;
    else if (key == "depth") caps.depth = static_cast<int>(value);
    else if (key == "table") caps.table = value;
    else if (key == "mu") caps.mu_states = value;
    else if (key == "enumeration") caps.enumeration = value;
    else if (key == "brute") caps.brute_force_vertices = static_cast<int>(value);
    else if (key == "hom") caps.hom_target_vertices = static_cast<int>(value);
    else throw InputError("--caps: unknown key '" + key + "'");
  }
  return caps;
}

VertexSet parse_subset(const std::string& text, int n) {
  VertexSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = 0;
    try {
      v = std::stoi(item);
    } catch (const std::exception&) {
      throw InputError("-S: bad vertex '" + item + "'");
    }
    if (v < 1 || v > n) throw InputError("-S: vertex " + item + " out of range 1.." + std::to_string(n));
    s.insert(v - 1);
  }
  return s;
}

json set_json(const VertexSet& s) {
  json a = json::array();
  for (int v : s) a.push_back(v + 1);
  return a;
}

json width_json(int w) { return w == kInfinite ? json(nullptr) : json(w); }
std::string width_text(int w) { return w == kInfinite ? "inf" : std::to_string(w); }

Hypergraph load_hypergraph(const std::string& path) {
  try {
    return parse_hypergraph(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

TreeDecomposition load_td(const std::string& path) {
  try {
    return parse_td(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

bool is_graph(const Hypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [](const VertexSet& e) { return e.size() == 2; });
}

Graph load_graph(const Hypergraph& h) {
  if (!is_graph(h)) throw InputError("input is not a graph (every edge must have two vertices)");
  return Graph::from_hypergraph(h);
}

void need_files(const Options& o, std::size_t count, const char* usage) {
  if (o.files.size() != count) throw InputError(std::string("usage: ") + usage);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
}

Outcome cmd_decompose(const Options& o, std::ostream& out) {
  need_files(o, 1, "decompose -k K [--measure alpha|rho] H.hg");
  if (o.k < 1) throw InputError("decompose requires -k K with K >= 1");
  const Hypergraph h = load_hypergraph(o.files[0]);
  MeasureKind kind = MeasureKind::mu;
  if (!o.measure.empty()) {
    auto m = parse_measure(o.measure);
    if (!m || *m == MeasureKind::kappa) throw InputError("decompose: --measure must be alpha, rho or mu");
    kind = *m;
  }
  Outcome r;
  TreeDecomposition t;
  std::uint64_t calls = 0;
  bool refuted = false;
  if (kind == MeasureKind::mu) {
    const MuApproxResult a = approximate_mu_tw(load_graph(h), o.k, o.caps);
    refuted = a.refuted;
    t = a.decomposition;
    calls = a.calls;
  } else {
    const ApproxResult a = approx_tree_decomposition(h, o.k, kind, o.caps);
    refuted = a.refuted;
    t = a.decomposition;
    calls = a.calls;
  }
  r.payload["measure"] = measure_name(kind);
  r.payload["k"] = o.k;
  r.payload["bound"] = approx_width_bound(o.k);
  r.payload["calls"] = calls;
  if (refuted) {
    r.code = kExitRefuted;
    r.status = "refuted";
    r.human = measure_name(kind) + "-tw > " + std::to_string(o.k) + "\n";
    return r;
  }
  t.num_vertices = std::max(h.id_bound(), 0);
  const Validity v = validate(h, t);
  if (!v.valid) throw std::logic_error("decompose produced an invalid decomposition: " + v.defect);
  const WidthReport w = width(h, t, kind, o.caps, o.threads);
  const std::string text = serialize_td(t);
  r.payload["width"] = width_json(w.width);
  r.payload["bags"] = t.num_nodes();
  r.payload["max_bag_size"] = t.max_bag_size();
  if (o.output.empty()) {
    r.payload["decomposition"] = text;
  } else {
    write_file(o.output, text);
    r.payload["output"] = o.output;
  }
  if (!o.json) {
    if (o.output.empty()) out << text;
    r.human = "c " + measure_name(kind) + "-width " + width_text(w.width) + " (bound " +
              std::to_string(approx_width_bound(o.k)) + ")\n";
  }
  return r;
}

Outcome cmd_validate(const Options& o) {
  need_files(o, 2, "validate H.hg T.td");
  const Hypergraph h = load_hypergraph(o.files[0]);
  const TreeDecomposition t = load_td(o.files[1]);
  Outcome r;
  Validity v;
  try {
    v = validate(h, t);
  } catch (const InputError& e) {
    v.valid = false;
    v.defect = e.what();
  }
  r.payload["valid"] = v.valid;
  if (v.valid) {
    r.human = "valid\n";
    return r;
  }
  r.code = kExitInvalid;
  r.status = "invalid-input";
  r.payload["defect"] = v.defect;
  if (v.vertex >= 0) r.payload["vertex"] = v.vertex + 1;
  if (v.edge) r.payload["edge"] = set_json(*v.edge);
  r.human = "invalid: " + v.defect + "\n";
  return r;
}

Outcome cmd_width(const Options& o) {
  need_files(o, 2, "width --measure kappa|alpha|rho|mu H.hg T.td");
  const auto kind = parse_measure(o.measure.empty() ? "alpha" : o.measure);
  if (!kind) throw InputError("width: unknown measure '" + o.measure + "'");
  const Hypergraph h = load_hypergraph(o.files[0]);
  const TreeDecomposition t = load_td(o.files[1]);
  const Validity v = validate(h, t);
  if (!v.valid) throw InputError("width: not a tree decomposition: " + v.defect);
  const WidthReport w = width(h, t, *kind, o.caps, o.threads);
  Outcome r;
  r.payload["measure"] = measure_name(*kind);
  r.payload["width"] = width_json(w.width);
  r.payload["witness"] = w.witness >= 0 ? json(w.witness + 1) : json(nullptr);
  json per = json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < w.per_bag.size(); ++i) {
    per.push_back(width_json(w.per_bag[i]));
    os << "bag " << i + 1 << ' ' << width_text(w.per_bag[i]) << '\n';
  }
  r.payload["per_bag"] = per;
  os << measure_name(*kind) << "-width " << width_text(w.width) << '\n';
  r.human = os.str();
  return r;
}

Outcome cmd_trace(const Options& o) {
  need_files(o, 1, "trace -S v1,v2,... H.hg");
  const Hypergraph h = load_hypergraph(o.files[0]);
  const VertexSet s = parse_subset(o.subset, h.id_bound());
  const TraceResult tr = trace_blocker(h, s, o.caps);
  Outcome r;
  json members = json::array();
  std::ostringstream os;
  for (const auto& a : tr.traces.members) {
    members.push_back(set_json(a));
    os << a.to_string(1) << '\n';
  }
  r.payload["subset"] = set_json(s);
  r.payload["members"] = members;
  r.payload["nodes_explored"] = tr.nodes_explored;
  r.payload["distinct_nodes"] = tr.distinct_nodes;
  r.payload["max_quasimatching_len"] = tr.max_quasimatching_len;
  r.human = os.str();
  return r;
}

Outcome cmd_solve(const Options& o) {
  Outcome r;
  r.payload["problem"] = o.problem;
  if (o.problem == "mwis") {
    need_files(o, 2, "solve --problem mwis H.hg T.td");
    const Hypergraph h = load_hypergraph(o.files[0]);
    const MwisResult m = mwis(h, load_td(o.files[1]), o.caps);
    r.payload["feasible"] = m.feasible;
    if (!m.feasible) {
      r.human = "infeasible\n";
      return r;
    }
    r.payload["value"] = format_rational(m.value);
    r.payload["witness"] = set_json(m.witness);
    r.human = "value " + format_rational(m.value) + "\nwitness " + m.witness.to_string(1) + "\n";
    return r;
  }
  if (o.problem == "color") {
    need_files(o, 2, "solve --problem color -k K H.hg T.td");
    if (o.k < 0) throw InputError("solve --problem color requires -k K");
    const bool yes = chromatic_decide(load_hypergraph(o.files[0]), o.k, load_td(o.files[1]), o.caps);
    r.payload["k"] = o.k;
    r.payload["colourable"] = yes;
    r.human = std::string(yes ? "colourable" : "not colourable") + " with " + std::to_string(o.k) + " colours\n";
    return r;
  }
  if (o.problem == "hom") {
    need_files(o, 3, "solve --problem hom H.hg T.td F.hg");
    const bool yes =
        hom_decide(load_hypergraph(o.files[0]), load_hypergraph(o.files[2]), load_td(o.files[1]), o.caps);
    r.payload["homomorphism"] = yes;
    r.human = std::string(yes ? "homomorphism exists" : "no homomorphism") + "\n";
    return r;
  }
  throw InputError("solve: --problem must be mwis, color or hom");
}

Outcome cmd_reduce(const Options& o, std::ostream& out) {
  need_files(o, 2, "reduce m|l2 G.hg [-o out.hg] [--map out.map]");
  const Graph g = load_graph(load_hypergraph(o.files[1]));
  Graph built;
  std::vector<std::string> origins;
  if (o.files[0] == "m") {
    const PendantExtension x = pendant_extend(g);
    built = x.extended;
    for (int w = 0; w < built.n(); ++w) origins.push_back(x.origin(w));
  } else if (o.files[0] == "l2") {
    const LineSquare x = line_square(g);
    built = x.line;
    for (int e = 0; e < built.n(); ++e) origins.push_back(x.origin(e));
  } else {
    throw InputError("reduce: mode must be m or l2");
  }
  const std::string text = serialize_hypergraph(built.to_hypergraph());
  const std::string map_text = serialize_id_map(origins);
  std::string map_path = o.map_path;
  if (map_path.empty() && !o.output.empty()) map_path = o.output + ".map";
  if (!o.json || !o.output.empty()) emit(o, text, out);
  if (!map_path.empty()) write_file(map_path, map_text);
  Outcome r;
  r.payload["mode"] = o.files[0];
  r.payload["vertices"] = built.n();
  r.payload["edges"] = built.num_edges();
  if (!o.output.empty()) r.payload["output"] = o.output;
  if (!map_path.empty()) r.payload["map"] = map_path;
  if (o.output.empty() && o.json) r.payload["graph"] = text;
  return r;
}

Outcome cmd_stats(const Options& o) {
  need_files(o, 1, "stats H.hg");
  const Hypergraph h = load_hypergraph(o.files[0]);
  const Graph g = gaifman(h);
  const VertexSet cov = h.covered();
  int max_degree = 0;
  for (int v : h.vertices()) {
    int d = 0;
    for (const auto& e : h.edges()) d += e.contains(v) ? 1 : 0;
    max_degree = std::max(max_degree, d);
  }
  Outcome r;
  r.payload["vertices"] = h.num_vertices();
  r.payload["edges"] = h.num_edges();
  r.payload["rank"] = h.rank();
  r.payload["size"] = h.size_norm();
  r.payload["clutter"] = is_antichain(h.edges());
  r.payload["graph"] = is_graph(h);
  r.payload["empty_edge"] = h.has_empty_edge();
  r.payload["isolated"] = h.num_vertices() - cov.size();
  r.payload["components"] = g.components(h.vertices()).size();
  r.payload["gaifman_edges"] = g.num_edges();
  r.payload["max_degree"] = max_degree;
  r.payload["weighted"] = !h.weights().empty();
  std::ostringstream os;
  for (const auto& [key, value] : r.payload.items()) os << key << ' ' << value.dump() << '\n';
  r.human = os.str();
  return r;
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int max_n, int max_m, int max_rank) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const int m = std::uniform_int_distribution<int>(0, max_m)(rng);
  std::vector<VertexSet> edges;
  for (int i = 0; i < m; ++i) {
    const int size = std::uniform_int_distribution<int>(1, std::min(max_rank, n))(rng);
    VertexSet e;
    while (e.size() < size) e.insert(std::uniform_int_distribution<int>(0, n - 1)(rng));
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

Outcome cmd_selftest(const Options& o) {
  std::mt19937_64 rng(o.seed);
  json checks = json::array();
  std::ostringstream os;
  bool all = true;
  auto run = [&](const std::string& name, int cases, const std::function<bool()>& one) {
    int failures = 0;
    for (int i = 0; i < cases; ++i) failures += one() ? 0 : 1;
    all = all && failures == 0;
    checks.push_back({{"name", name}, {"cases", cases}, {"failures", failures}});
    os << name << ' ' << (failures == 0 ? "pass" : "FAIL") << " (" << cases << " cases, " << failures
       << " failures)\n";
  };
  run("blocker-duality", 40, [&] {
    const Clutter c = minimalize(random_hypergraph(rng, 8, 7, 3));
    return blocker_bruteforce(blocker_bruteforce(c)).edges() == c.edges();
  });
  run("trace-oracle", 40, [&] {
    const Hypergraph h = random_hypergraph(rng, 8, 7, 3);
    VertexSet s;
    for (int v : h.vertices()) {
      if (rng() % 2 == 0) s.insert(v);
    }
    const TraceFamily want = trace(blocker_bruteforce(minimalize(h)).edges(), s);
    return trace_blocker(h, s, o.caps).traces.members == want.members;
  });
  run("mwis-oracle", 30, [&] {
    Hypergraph h = random_hypergraph(rng, 8, 8, 3);
    for (int v : h.vertices()) h.set_weight(v, Rational(static_cast<std::int64_t>(rng() % 5)));
    std::vector<int> order = h.vertices().to_vector();
    std::shuffle(order.begin(), order.end(), rng);
    const MwisResult got = mwis(h, from_elimination_order(h, order), o.caps);
    Rational best = -1;
    const int n = h.id_bound();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      VertexSet s;
      for (int v = 0; v < n; ++v) {
        if ((mask >> v) & 1u) s.insert(v);
      }
      bool independent = true;
      for (const auto& e : h.edges()) independent = independent && !e.is_subset_of(s);
      if (!independent) continue;
      Rational w = 0;
      for (int v : s) w += h.weight(v);
      best = std::max(best, w);
    }
    return best < 0 ? !got.feasible : (got.feasible && got.value == best);
  });
  Outcome r;
  r.payload["seed"] = o.seed;
  r.payload["checks"] = checks;
  if (!all) {
    r.code = 1;
    r.status = "failed";
  }
  r.human = os.str();
  return r;
}

Outcome dispatch(const Options& o, std::ostream& out) {
  if (o.command == "decompose") return cmd_decompose(o, out);
  if (o.command == "validate") return cmd_validate(o);
  if (o.command == "width") return cmd_width(o);
  if (o.command == "trace") return cmd_trace(o);
  if (o.command == "solve") return cmd_solve(o);
  if (o.command == "reduce") return cmd_reduce(o, out);
  if (o.command == "stats") return cmd_stats(o);
  return cmd_selftest(o);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Minor-matching hypertree width toolkit"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("-k", o.k, "Width parameter");
  app.add_option("--measure", o.measure, "kappa | alpha | rho | mu");
  app.add_option("--problem", o.problem, "mwis | color | hom");
  app.add_option("--caps", o.caps_text,
                 "Resource caps, e.g. nodes=10000000,depth=4096,table=1000000,mu=2000000,"
                 "enumeration=50000000,brute=20,hom=10 (these are the defaults)");
  app.add_option("-S", o.subset, "Vertex subset for trace, e.g. 1,3");
  app.add_option("-o", o.output, "Write the main output to this file");
  app.add_option("--map", o.map_path, "Id-map sidecar path for reduce (default <output>.map)");
  app.add_option("--seed", o.seed, "Seed for randomized test data (selftest)");
  app.add_option("--threads", o.threads, "Worker threads for per-bag width evaluation")->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json, "Machine-readable JSON report on stdout");
  app.add_flag("--timing", o.timing, "Add wall-clock time to the JSON report");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"decompose", "Approximate decomposition, or refutation of width <= k"},
      {"validate", "Check that T is a tree decomposition of H"},
      {"width", "Per-bag and total width of T under a measure"},
      {"trace", "Trace of the blocker on a vertex subset"},
      {"solve", "Run a dynamic program over a decomposition"},
      {"reduce", "Build M(G) or L^2(G) with an id map"},
      {"stats", "Basic statistics of a hypergraph"},
      {"selftest", "Quick randomized self-check against brute force"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("files", o.files, "Input files");
    sub->callback([&o, n = std::string(name)] { o.command = n; });
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome r;
  try {
    o.caps = parse_caps(o.caps_text);
    r = dispatch(o, out);
  } catch (const InputError& e) {
    r = Outcome{kExitInvalid, "invalid-input", "", json::object()};
    r.payload["error"] = e.what();
    err << "error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    r = Outcome{kExitResource, "resource-exceeded", "", json::object()};
    r.payload["error"] = e.what();
    r.payload["nodes_explored"] = e.nodes_explored;
    r.payload["best_found"] = e.best_found;
    err << "resource cap exceeded: " << e.what() << '\n';
  }
  if (o.json) {
    json report = {{"schema", 1}, {"command", o.command}, {"status", r.status}};
    for (auto& [key, value] : r.payload.items()) report[key] = value;
    if (o.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    out << report.dump() << '\n';
  } else {
    out << r.human;
  }
  return r.code;
}

}  // namespace mmtw
