#include "genset/cli.hpp"

#include "genset/bounds.hpp"
#include "genset/extremal_search.hpp"
#include "genset/generator_check.hpp"
#include "genset/io.hpp"
#include "genset/kneser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace genset::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

/// Everything that applies to all subcommands.
struct RunConfig {
  std::string format;  // json | csv | text; empty picks the subcommand default
  bool no_meta = false;
  int threads = 0;
  std::optional<std::uint64_t> seed;
  Caps caps;
  SearchOptions search;
};

class Output {
 public:
  Output(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out), start_(Clock::now()) {}

  std::string format(const std::string& fallback = "json") const {
    return cfg_.format.empty() ? fallback : cfg_.format;
  }

  /// One record: JSON line, or `text` when the text format is selected.
  void record(Json rec, const std::string& text) {
    if (format() == "text") {
      out_ << text << '\n';
      return;
    }
    if (format() == "csv") {
      // Flat CSV of the top-level scalar fields.
      std::string header, row;
      for (auto& [key, value] : rec.items()) {
        if (value.is_structured()) continue;
        header += (header.empty() ? "" : ",") + key;
        row += (row.empty() ? "" : ",") + (value.is_string() ? value.get<std::string>() : value.dump());
      }
      out_ << header << '\n' << row << '\n';
      return;
    }
    add_meta(rec);
    out_ << rec.dump() << '\n';
  }

  void add_meta(Json& rec) const {
    if (cfg_.no_meta) return;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream ts;
    ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
    rec["meta"] = {{"timestamp", ts.str()},
                   {"elapsed_seconds", std::chrono::duration<double>(Clock::now() - start_).count()},
                   {"threads", max_threads()}};
  }

  std::ostream& raw() { return out_; }
  bool meta() const { return !cfg_.no_meta; }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  Clock::time_point start_;
};

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

void put_rational(Json& rec, const std::string& key, const Rational& q) {
  rec[key] = to_fraction_string(q);
  rec[key + "_decimal"] = to_decimal_string(q, 10);
}

Json bound_json(const BoundValue& v) {
  Json j;
  j["exact"] = v.is_exact() ? Json(to_fraction_string(*v.exact)) : Json(nullptr);
  j["approx"] = to_decimal_string(v.approx, 20);
  j["precision_bits"] = v.precision_bits;
  return j;
}

Json mask_list(std::span<const SubsetMask> masks) {
  Json arr = Json::array();
  for (SubsetMask s : masks) arr.push_back(s.to_string());
  return arr;
}

std::string join_masks(std::span<const SubsetMask> masks) {
  std::string s;
  for (SubsetMask m : masks) s += (s.empty() ? "" : " ") + m.to_string();
  return s;
}

struct GraphInput {
  std::string family_path;
  std::string graph_path;

  Graph load(const Caps& caps, std::optional<SetFamily>* family = nullptr) const {
    if (family_path.empty() == graph_path.empty()) throw InvalidInput("give exactly one of --family or --graph");
    if (!graph_path.empty()) return io::read_graph_file(graph_path);
    SetFamily f = io::read_family_file(family_path).family;
    Graph g = disjointness_graph(f, caps).graph;
    if (family) *family = std::move(f);
    return g;
  }

  void add_to(CLI::App* sub) {
    sub->add_option("--family", family_path, "Family file; the disjointness graph is used");
    sub->add_option("--graph", graph_path, "Edge-list graph file");
  }
};

std::uint64_t require_seed(const RunConfig& cfg, const char* what) {
  if (!cfg.seed) throw CLI::ValidationError(std::string(what) + " requires --seed");
  return *cfg.seed;
}

void write_text_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  body(f);
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and search for disjoint-union generators of the power set"};
  app.name("genset");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read option=value lines from a file");

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--no-meta", cfg.no_meta, "Omit timestamps and timings from output");
  app.add_option("--threads", cfg.threads, "Worker thread cap")->envname("GENSET_THREADS");
  app.add_option("--seed", cfg.seed, "64-bit seed for sampled modes");
  app.add_option("--dp-n", cfg.caps.dp_n, "Largest n for 2^n tables")->capture_default_str();
  app.add_option("--base-n", cfg.caps.base_n, "Largest n for k-base checks")->capture_default_str();
  app.add_option("--graph-m", cfg.caps.graph_m, "Largest materialized graph")->capture_default_str();
  app.add_option("--work-budget", cfg.caps.work_budget, "Enumeration node budget")->capture_default_str();
  app.add_option("--node-budget", cfg.search.node_budget, "Search node budget")->capture_default_str();
  app.add_option("--time-budget", cfg.search.time_budget_seconds, "Search wall-clock budget in seconds")
      ->capture_default_str();

  // construct
  int c_n = 0, c_k = 0;
  std::string c_out;
  auto* construct = app.add_subcommand("construct", "Write the canonical generator as a family file");
  construct->add_option("-n", c_n, "Ground set size")->required();
  construct->add_option("-k", c_k, "Number of classes")->required();
  construct->add_option("-o,--output", c_out, "Write to a file instead of standard output");

  // check
  std::string ch_family, ch_target;
  int ch_k = 0;
  bool ch_base = false;
  auto* check = app.add_subcommand("check", "Decide the k-generator or k-base property, or decompose a set");
  check->add_option("--family", ch_family, "Family file")->required();
  check->add_option("-k", ch_k, "Maximum number of parts")->required();
  auto* base_flag = check->add_flag("--base", ch_base, "Allow overlapping unions (k-base)");
  check->add_option("--decompose", ch_target, "Set to decompose, e.g. 1,3,4 or -")->excludes(base_flag);

  // search-min
  int s_n = 0, s_k = 0, s_nmax = 0, s_kmax = 0;
  auto* search = app.add_subcommand("search-min", "Exact minimum k-generator size by branch and bound");
  auto* s_n_opt = search->add_option("-n", s_n, "Ground set size");
  auto* s_k_opt = search->add_option("-k", s_k, "Maximum number of parts");
  auto* s_nmax_opt = search->add_option("--n-max", s_nmax, "Sweep: largest n");
  auto* s_kmax_opt = search->add_option("--k-max", s_kmax, "Sweep: largest k");
  s_n_opt->needs(s_k_opt)->excludes(s_nmax_opt);
  s_nmax_opt->needs(s_kmax_opt);

  // graph
  GraphInput g_in;
  int g_cliques = -1, g_density = -1;
  std::string g_emit;
  auto* graph = app.add_subcommand("graph", "Disjointness graph statistics, clique counts and densities");
  g_in.add_to(graph);
  graph->add_option("--cliques", g_cliques, "Count r-cliques");
  graph->add_option("--density", g_density, "Exact r-clique density");
  graph->add_option("--emit-edges", g_emit, "Write the edge list to a file ('-' for standard output)");

  // turan
  auto* turan = app.add_subcommand("turan", "Turán densities, graphs and the Erdős maximization check");
  turan->require_subcommand(1);
  int t_r = 0, t_s = 0, t_T = 0, t_l = 0;
  std::string t_out;
  auto* t_eta = turan->add_subcommand("eta", "s(s-1)...(s-r+1)/s^r");
  t_eta->add_option("-r", t_r)->required();
  t_eta->add_option("-s", t_s)->required();
  auto* t_graph = turan->add_subcommand("graph", "Edge list of the complete s-partite graph K_s(T)");
  t_graph->add_option("-s", t_s)->required();
  t_graph->add_option("-T", t_T)->required();
  t_graph->add_option("-o,--output", t_out, "Write to a file instead of standard output");
  auto* t_closed = turan->add_subcommand("closed-form", "C(s,r) T^r cliques in K_s(T), checked by counting");
  t_closed->add_option("-s", t_s)->required();
  t_closed->add_option("-T", t_T)->required();
  t_closed->add_option("-r", t_r)->required();
  auto* t_erdos = turan->add_subcommand("erdos", "Max K_r count over K_{s+1}-free graphs on l vertices");
  t_erdos->add_option("-l", t_l)->required();
  t_erdos->add_option("-s", t_s)->required();
  t_erdos->add_option("-r", t_r)->required();

  // blowup
  GraphInput b_in;
  int b_a = 0, b_t = 0;
  auto* blowup = app.add_subcommand("blowup", "Find a complete a-partite subgraph with parts of size t");
  b_in.add_to(blowup);
  blowup->add_option("-a", b_a, "Part count")->required();
  blowup->add_option("-t", b_t, "Part size")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Counting bounds and the union-size probability bound");
  bounds->require_subcommand(1);
  int bd_n = 0, bd_k = 0, bd_t = 0, bd_nmin = 1, bd_nmax = 0, bd_kmin = 1, bd_kmax = 0;
  std::string bd_m, bd_delta = "0", bd_family;
  std::uint64_t bd_trials = 0;
  bool bd_assume = false;
  auto* b_trivial = bounds->add_subcommand("trivial", "Smallest m with sum_{i<=k} C(m,i) >= 2^n");
  b_trivial->add_option("-n", bd_n)->required();
  b_trivial->add_option("-k", bd_k)->required();
  auto* b_lemma = bounds->add_subcommand("lemma4", "(k+1) 2^{n(1-delta t)} C(m,t)^{k+1} / (k+1)!");
  b_lemma->add_option("-n", bd_n)->required();
  b_lemma->add_option("-k", bd_k)->required();
  b_lemma->add_option("-m", bd_m)->required();
  b_lemma->add_option("--delta", bd_delta, "Rational, e.g. 1/6")->required();
  b_lemma->add_option("-t", bd_t)->required();
  auto* b_union = bounds->add_subcommand("union-check", "Small-union probability against its analytic bound");
  b_union->add_option("--family", bd_family)->required();
  b_union->add_option("-k", bd_k)->required();
  b_union->add_option("--delta", bd_delta, "Rational, e.g. 1/9")->required();
  b_union->add_option("-t", bd_t)->required();
  b_union->add_option("--trials", bd_trials, "Monte Carlo trials (sampled mode, needs --seed)");
  auto* b_cover = bounds->add_subcommand("coverage", "Disjoint <=k-tuples against 2^n");
  b_cover->add_option("--family", bd_family)->required();
  b_cover->add_option("-k", bd_k)->required();
  b_cover->add_flag("--assume", bd_assume, "Skip verifying the generator property");
  auto* b_table = bounds->add_subcommand("table", "Trivial bound, constants and canonical size per (n,k)");
  b_table->add_option("--n-min", bd_nmin)->capture_default_str();
  b_table->add_option("--n-max", bd_nmax)->required();
  b_table->add_option("--k-min", bd_kmin)->capture_default_str();
  b_table->add_option("--k-max", bd_kmax)->required();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Dense-subset and sampled union-size experiments");
  experiment->require_subcommand(1);
  GraphInput e_in;
  int e_l = 0, e_r = 0, e_t = 0, e_threshold_int = 0;
  std::string e_threshold, e_family;
  std::uint64_t e_samples = 0;
  auto* e_dense = experiment->add_subcommand("dense-subset", "Share of l-subsets with r-clique density >= threshold");
  e_in.add_to(e_dense);
  e_dense->add_option("-l", e_l)->required();
  e_dense->add_option("-r", e_r)->required();
  e_dense->add_option("--threshold", e_threshold, "Rational density threshold")->required();
  e_dense->add_option("--samples", e_samples, "Sample count (sampling mode, needs --seed)");
  auto* e_union = experiment->add_subcommand("union-prob", "Probability that t random members have a small union");
  e_union->add_option("--family", e_family)->required();
  e_union->add_option("-t", e_t)->required();
  e_union->add_option("--threshold", e_threshold_int, "Union size cutoff")->required();
  e_union->add_option("--trials", e_samples, "Monte Carlo trials (sampled mode, needs --seed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  set_threads(cfg.threads);
  cfg.caps.node_budget = cfg.search.node_budget;
  cfg.caps.time_budget_seconds = cfg.search.time_budget_seconds;
  Output o(cfg, out);
  const Caps& caps = cfg.caps;

  if (construct->parsed()) {
    const SetFamily f = canonical_generator(c_n, c_k, caps);
    if (c_out.empty()) {
      io::write_family(out, f);
    } else {
      write_text_file(c_out, [&](std::ostream& s) { io::write_family(s, f); });
      Json rec{{"command", "construct"}, {"n", c_n}, {"k", c_k}, {"size", f.size()}, {"path", c_out}};
      o.record(rec, std::to_string(f.size()));
    }
    return kOk;
  }

  if (check->parsed()) {
    const MadeFamily made = io::read_family_file(ch_family);
    const SetFamily& f = made.family;
    Json rec{{"command", "check"}, {"n", f.n()}, {"k", ch_k}, {"m", f.size()}};
    if (!ch_target.empty()) {
      const SubsetMask x = io::parse_set(ch_target, f.n());
      const auto d = decompose(f, ch_k, x, caps);
      rec["mode"] = "decompose";
      rec["target"] = x.to_string();
      rec["holds"] = d.has_value();
      if (d) rec["parts"] = mask_list(d->parts);
      o.record(rec, d ? "parts " + join_masks(d->parts) : std::string("absent"));
      return d ? kOk : kPropertyFails;
    }
    const GeneratorVerdict v = ch_base ? is_k_base(f, ch_k, caps) : is_k_generator(f, ch_k, caps);
    rec["mode"] = ch_base ? "base" : "generator";
    rec["holds"] = v.holds;
    if (v.counterexample) rec["counterexample"] = v.counterexample->to_string();
    o.record(rec, v.holds ? "holds" : "fails " + v.counterexample->to_string());
    return v.holds ? kOk : kPropertyFails;
  }

  if (search->parsed()) {
    std::vector<SearchReport> reports;
    const bool sweep = s_nmax_opt->count() > 0;
    if (sweep) {
      reports = verify_conjecture_range(s_nmax, s_kmax, cfg.search);
    } else {
      if (s_n_opt->count() == 0) throw CLI::ValidationError("search-min needs -n/-k or --n-max/--k-max");
      reports.push_back(min_generator_size(s_n, s_k, cfg.search));
    }
    const std::string fmt = o.format(sweep ? "csv" : "json");
    auto minimum_text = [](const SearchReport& r) { return r.minimum ? std::to_string(*r.minimum) : std::string(); };
    auto holds_text = [](const SearchReport& r) {
      return r.conclusive ? std::string(r.conjecture_holds ? "true" : "false") : std::string("inconclusive");
    };
    if (fmt == "csv") {
      out << "n,k,trivial_bound,canonical_size,minimum,conjecture_holds,nodes,seconds\n";
      for (const auto& r : reports) {
        std::ostringstream secs;
        if (o.meta()) secs << std::fixed << std::setprecision(3) << r.seconds;
        out << r.n << ',' << r.k << ',' << r.trivial_bound << ',' << r.canonical_size << ',' << minimum_text(r) << ','
            << holds_text(r) << ',' << r.nodes_explored << ',' << secs.str() << '\n';
      }
    } else {
      for (const auto& r : reports) {
        Json rec{{"command", "search-min"},
                 {"n", r.n},
                 {"k", r.k},
                 {"trivial_bound", big(r.trivial_bound)},
                 {"canonical_size", big(r.canonical_size)},
                 {"conclusive", r.conclusive},
                 {"minimum", r.minimum ? Json(*r.minimum) : Json(nullptr)},
                 {"lower_bound", r.lower_bound},
                 {"upper_bound", r.upper_bound},
                 {"conjecture_holds", r.conclusive ? Json(r.conjecture_holds) : Json("inconclusive")},
                 {"nodes", r.nodes_explored},
                 {"witness", mask_list(r.witness.members())}};
        if (!r.note.empty()) rec["note"] = r.note;
        if (o.meta()) rec["seconds"] = r.seconds;
        if (fmt == "text") {
          out << "n=" << r.n << " k=" << r.k << " minimum=" << minimum_text(r) << " canonical=" << r.canonical_size
              << " conjecture_holds=" << holds_text(r) << '\n';
        } else {
          o.add_meta(rec);
          out << rec.dump() << '\n';
        }
      }
    }
    bool inconclusive = false, refuted = false;
    for (const auto& r : reports) {
      inconclusive |= !r.conclusive;
      refuted |= r.conclusive && !r.conjecture_holds;
    }
    return inconclusive ? kBudgetExceeded : refuted ? kPropertyFails : kOk;
  }

  if (graph->parsed()) {
    std::optional<SetFamily> fam;
    const Graph g = g_in.load(caps, &fam);
    if (g_emit == "-") {
      io::write_graph(out, g);
      return kOk;
    }
    if (!g_emit.empty()) write_text_file(g_emit, [&](std::ostream& s) { io::write_graph(s, g); });
    Json rec{{"command", "graph"}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    std::string text = "vertices=" + std::to_string(g.vertex_count()) + " edges=" + std::to_string(g.edge_count());
    if (g_cliques >= 0) {
      const BigInt c = count_cliques(g, g_cliques, caps);
      rec["r"] = g_cliques;
      rec["cliques"] = big(c);
      text += " cliques=" + c.str();
    }
    if (g_density >= 0) {
      const Rational d = clique_density(g, g_density, caps);
      rec["density_r"] = g_density;
      put_rational(rec, "density", d);
      text += " density=" + to_fraction_string(d);
    }
    o.record(rec, text);
    return kOk;
  }

  if (turan->parsed()) {
    if (t_eta->parsed()) {
      const Rational eta = turan_eta(t_r, t_s);
      Json rec{{"command", "turan eta"}, {"r", t_r}, {"s", t_s}};
      put_rational(rec, "eta", eta);
      o.record(rec, to_fraction_string(eta));
      return kOk;
    }
    if (t_graph->parsed()) {
      const Graph g = turan_blowup_graph(t_s, t_T, caps);
      if (t_out.empty()) {
        io::write_graph(out, g);
      } else {
        write_text_file(t_out, [&](std::ostream& s) { io::write_graph(s, g); });
        o.record(Json{{"command", "turan graph"}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"path", t_out}},
                 std::to_string(g.edge_count()));
      }
      return kOk;
    }
    if (t_closed->parsed()) {
      const BigInt closed = turan_clique_closed_form(t_s, t_T, t_r);
      const BigInt counted = count_cliques(turan_blowup_graph(t_s, t_T, caps), t_r, caps);
      Json rec{{"command", "turan closed-form"}, {"s", t_s}, {"T", t_T}, {"r", t_r},
               {"closed_form", big(closed)}, {"counted", big(counted)}, {"agree", closed == counted}};
      o.record(rec, closed.str());
      return closed == counted ? kOk : kPropertyFails;
    }
    const ErdosMaxResult e = erdos_max_check(t_l, t_s, t_r, caps);
    Json rec{{"command", "turan erdos"}, {"l", t_l}, {"s", t_s}, {"r", t_r}, {"max_count", big(e.max_count)},
             {"turan_count", big(e.turan_count)}, {"attained_by_turan", e.attained_by_turan},
             {"graphs_visited", e.graphs_visited}};
    o.record(rec, e.max_count.str() + " " + e.turan_count.str() + (e.attained_by_turan ? " attained" : " not-attained"));
    return e.attained_by_turan ? kOk : kPropertyFails;
  }

  if (blowup->parsed()) {
    const Graph g = b_in.load(caps);
    const auto classes = find_blowup(g, BlowupSpec{b_a, b_t}, caps);
    Json rec{{"command", "blowup"}, {"a", b_a}, {"t", b_t}, {"found", classes.has_value()}};
    std::string text = "absent";
    if (classes) {
      rec["classes"] = *classes;
      text.clear();
      for (const auto& c : *classes) {
        if (!text.empty()) text += " | ";
        for (std::size_t i = 0; i < c.size(); ++i) text += (i ? " " : "") + std::to_string(c[i]);
      }
    }
    o.record(rec, text);
    return classes ? kOk : kPropertyFails;
  }

  if (bounds->parsed()) {
    if (b_trivial->parsed()) {
      const BigInt tb = trivial_lower_bound(bd_n, bd_k);
      o.record(Json{{"command", "bounds trivial"}, {"n", bd_n}, {"k", bd_k}, {"trivial_bound", big(tb)}}, tb.str());
      return kOk;
    }
    if (b_lemma->parsed()) {
      BoundParams p;
      p.n = bd_n;
      p.k = bd_k;
      try {
        p.m = BigInt(bd_m);
      } catch (const std::exception&) {
        throw InvalidInput("-m must be an integer");
      }
      p.delta = parse_rational(bd_delta);
      p.t = bd_t;
      p.threshold = bd_n / (bd_k + 1);
      const BoundValue v = lemma4_bound(p);
      const RegimeInfo reg = regime(p.n, p.k, p.m, p.delta);
      Json rec{{"command", "bounds lemma4"}, {"n", p.n}, {"k", p.k}, {"m", big(p.m)}, {"delta", to_fraction_string(p.delta)},
               {"t", p.t}, {"bound", bound_json(v)}, {"in_regime", reg.in_regime},
               {"implied_delta", to_decimal_string(reg.implied_delta, 12)}};
      o.record(rec, v.is_exact() ? to_fraction_string(*v.exact) : to_decimal_string(v.approx, 20));
      return kOk;
    }
    if (b_union->parsed()) {
      const SetFamily f = io::read_family_file(bd_family).family;
      std::optional<SampledMode> mode;
      if (bd_trials > 0) mode = SampledMode{require_seed(cfg, "sampled mode"), bd_trials};
      const UnionBoundReport r = union_bound_check(f, bd_k, parse_rational(bd_delta), bd_t, mode, caps);
      Json rec{{"command", "bounds union-check"}, {"n", f.n()}, {"k", bd_k}, {"m", f.size()}, {"t", bd_t},
               {"delta", to_fraction_string(parse_rational(bd_delta))}, {"threshold", r.threshold},
               {"in_regime", r.regime.in_regime}, {"exact", r.probability.exact}};
      put_rational(rec, "probability", r.probability.value);
      if (!r.probability.exact) {
        rec["standard_error"] = r.probability.standard_error;
        rec["seed"] = r.probability.seed;
        rec["trials"] = big(r.probability.trials);
      }
      put_rational(rec, "subset_sum_bound", r.subset_sum_bound);
      rec["analytic_bound"] = bound_json(r.analytic_bound);
      rec["delta_bound"] = bound_json(r.delta_bound);
      rec["bound_holds"] = r.bound_holds;
      o.record(rec, std::string(r.bound_holds ? "holds " : "fails ") + to_fraction_string(r.probability.value));
      const bool must_hold = r.regime.in_regime && r.probability.exact;
      return (!must_hold || r.bound_holds) ? kOk : kPropertyFails;
    }
    if (b_cover->parsed()) {
      const SetFamily f = io::read_family_file(bd_family).family;
      const CoverageReport r = coverage_inequality_check(f, bd_k, !bd_assume, caps);
      Json rec{{"command", "bounds coverage"}, {"n", f.n()}, {"k", bd_k}, {"tuples", big(r.tuples)},
               {"two_to_n", big(r.two_to_n)}, {"holds", r.holds}, {"generator", to_string(r.status)}};
      o.record(rec, r.tuples.str() + (r.holds ? " >= " : " < ") + r.two_to_n.str());
      return r.holds ? kOk : kPropertyFails;
    }
    const auto rows = bound_table(bd_nmin, bd_nmax, bd_kmin, bd_kmax);
    const std::string fmt = o.format("csv");
    if (fmt == "csv" || fmt == "text") {
      out << "n,k,trivial_bound,factorial_constant_bound,k_constant_bound,canonical_size\n";
      for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.trivial_bound << ',' << to_decimal_string(r.factorial_constant, 6) << ','
            << to_decimal_string(r.k_constant, 6) << ',' << r.canonical_size << '\n';
      }
    } else {
      for (const auto& r : rows) {
        Json rec{{"command", "bounds table"}, {"n", r.n}, {"k", r.k}, {"trivial_bound", big(r.trivial_bound)},
                 {"factorial_constant_bound", to_decimal_string(r.factorial_constant, 6)},
                 {"k_constant_bound", to_decimal_string(r.k_constant, 6)},
                 {"canonical_size", big(r.canonical_size)}};
        out << rec.dump() << '\n';
      }
    }
    return kOk;
  }

  if (experiment->parsed()) {
    if (e_dense->parsed()) {
      const Graph g = e_in.load(caps);
      std::optional<SamplingMode> mode;
      if (e_samples > 0) mode = SamplingMode{e_samples, require_seed(cfg, "sampling mode")};
      const Rational threshold = parse_rational(e_threshold);
      const DenseSubsetResult r = dense_subset_fraction(g, e_l, e_r, threshold, mode, caps);
      Json rec{{"command", "experiment dense-subset"}, {"vertices", g.vertex_count()}, {"l", e_l}, {"r", e_r},
               {"threshold", to_fraction_string(threshold)}, {"exact", r.exact}, {"dense_count", big(r.dense_count)},
               {"total", big(r.total)}};
      put_rational(rec, "fraction", r.fraction);
      if (!r.exact) {
        rec["standard_error"] = r.standard_error;
        rec["seed"] = mode->seed;
      }
      o.record(rec, to_fraction_string(r.fraction));
      return kOk;
    }
    const SetFamily f = io::read_family_file(e_family).family;
    std::optional<SampledMode> mode;
    if (e_samples > 0) mode = SampledMode{require_seed(cfg, "sampled mode"), e_samples};
    const ProbabilityEstimate p = small_union_probability(f, e_t, e_threshold_int, mode, caps);
    Json rec{{"command", "experiment union-prob"}, {"n", f.n()}, {"m", f.size()}, {"t", e_t},
             {"threshold", e_threshold_int}, {"exact", p.exact}, {"hits", big(p.hits)}, {"trials", big(p.trials)}};
    put_rational(rec, "probability", p.value);
    if (!p.exact) {
      rec["standard_error"] = p.standard_error;
      rec["seed"] = p.seed;
    }
    o.record(rec, to_fraction_string(p.value));
    return kOk;
  }
  return kUsageError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(argc, argv, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("genset");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace genset::cli
