#include "hanzigraph/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hanzigraph/analytics.hpp"
#include "hanzigraph/cdl.hpp"
#include "hanzigraph/corpus.hpp"
#include "hanzigraph/graph.hpp"
#include "hanzigraph/graph_io.hpp"
#include "hanzigraph/ids.hpp"
#include "hanzigraph/lexicon.hpp"
#include "hanzigraph/stroke_space.hpp"
#include "hanzigraph/utf8.hpp"
#include "json.hpp"
#include "report.hpp"

namespace hanzi::cli {

void RunConfig::validate() const {
  if (q && !(*q > 0)) throw std::invalid_argument("--q must be positive");
  if (lambda_main && !(*lambda_main > 0)) throw std::invalid_argument("--lambda-main must be positive");
  if (!weight_function_from(weight)) throw std::invalid_argument("unknown --weight '" + weight + "'");
  if (!cluster_method_from(method)) throw std::invalid_argument("unknown --method '" + method + "'");
  if (!export_format_from(format)) throw std::invalid_argument("unknown --format '" + format + "'");
  if (max_clique_size < 2) throw std::invalid_argument("--max-clique-size must be at least 2");
  if (max_clique_size > kDefaultMaxCliqueSize && !allow_large_cliques) {
    throw std::invalid_argument("--max-clique-size above " + std::to_string(kDefaultMaxCliqueSize) +
                                " requires --allow-large-cliques");
  }
  if (clique_budget_ms && *clique_budget_ms <= 0) throw std::invalid_argument("--clique-budget-ms must be positive");
  if (workers < 1) throw std::invalid_argument("--workers must be at least 1");
  if (hypernym_depth < 1) throw std::invalid_argument("--hypernym-depth must be at least 1");
}

std::string RunConfig::to_json() const {
  nlohmann::json j;
  j["store"] = store.string();
  j["graphs"] = nlohmann::json::array();
  for (const auto& g : graphs) j["graphs"].push_back(g.string());
  j["output"] = output ? nlohmann::json(output->string()) : nlohmann::json(nullptr);
  j["q"] = q ? nlohmann::json(*q) : nlohmann::json(nullptr);
  j["lambda_main"] = lambda_main ? nlohmann::json(*lambda_main) : nlohmann::json(nullptr);
  j["theta_s"] = theta_s ? nlohmann::json(*theta_s) : nlohmann::json(nullptr);
  j["weight"] = weight;
  j["threshold"] = threshold;
  j["method"] = method;
  j["max_clique_size"] = max_clique_size;
  j["allow_large_cliques"] = allow_large_cliques;
  j["clique_budget_ms"] = clique_budget_ms ? nlohmann::json(*clique_budget_ms) : nlohmann::json(nullptr);
  j["top"] = top;
  j["format"] = format;
  j["workers"] = workers;
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  j["use_glosses"] = use_glosses;
  j["hypernym_depth"] = hypernym_depth;
  j["blocking"] = blocking;
  return j.dump();
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;
  RunClock clock;
};

char32_t parse_char_arg(const std::string& text) {
  if (const char32_t cp = utf8::single(text)) return cp;
  try {
    return utf8::parse_hex(text);
  } catch (const DataError&) {
    throw UsageError("expected one character or U+XXXX, got '" + text + "'");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Corpus open_store(const RunConfig& cfg, bool create) {
  if (!std::filesystem::exists(cfg.store)) {
    if (create) return Corpus{};
    throw Error("store " + cfg.store.string() + " does not exist; run `hanzigraph ingest` first");
  }
  return load_store(cfg.store);
}

// Effective parameters: flags override the store's config.
StoreConfig effective(const RunConfig& cfg, const Corpus& corpus) {
  StoreConfig s = corpus.config;
  if (cfg.q) s.q = *cfg.q;
  if (cfg.lambda_main) s.lambda_main = *cfg.lambda_main;
  if (cfg.theta_s) s.theta_s = *cfg.theta_s;
  if (cfg.seed) s.seed = *cfg.seed;
  return s;
}

void warn_quantization(double q, std::ostream& err) {
  if (q > kQuantizationHazardStep) {
    err << "warning: quantization step " << number_text(q)
        << " may merge boundaries that distinguish characters (e.g. 力 vs 刀)\n";
  }
}

void print_warnings(const std::string& source, const std::vector<Warning>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << source << ":" << w.line << ": warning: " << w.message << "\n";
}

BuildOptions build_options(const RunConfig& cfg, const StoreConfig& s, WeightFunction fn) {
  BuildOptions o;
  o.weight = fn;
  o.lambda_main = s.lambda_main;
  o.theta_s = s.theta_s;
  o.meaning = {cfg.use_glosses, cfg.hypernym_depth};
  o.blocking = cfg.blocking;
  o.workers = cfg.workers;
  return o;
}

void print_summary(std::ostream& os, const MergeSummary& s) {
  os << "added: " << s.added << "\nupdated: " << s.updated << "\nunchanged: " << s.unchanged
     << "\nskipped: " << s.skipped << "\nwarnings: " << s.warnings.size() << "\n";
}

int cmd_ingest(Context& ctx, const std::string& kind, const std::filesystem::path& path, const std::string& resource) {
  Corpus corpus = open_store(ctx.cfg, true);
  const std::string text = read_file(path);
  std::istringstream in(text);
  MergeSummary summary;
  if (kind == "cdl") {
    std::vector<StrokeSet> sets;
    try {
      for (const auto& desc : parse_cdl_document(text)) sets.push_back(flatten(desc));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
    } catch (const DataError& e) {
      throw DataError(path.string() + ": " + e.what());
    }
    summary = corpus.merge_strokes(sets);
  } else if (kind == "ids") {
    summary = corpus.merge_ids(load_ids(in));
    summary.skipped = summary.warnings.size();
  } else if (kind == "unihan") {
    summary = corpus.merge_unihan(parse_unihan(in));
  } else if (kind == "senses") {
    auto loaded = load_senses(in, resource);
    summary = corpus.merge_senses(loaded.senses);
    summary.warnings = loaded.warnings;
    summary.skipped = loaded.warnings.size();
  } else if (kind == "relations") {
    auto loaded = load_relations(in, resource);
    summary = corpus.merge_relations(loaded.relations);
    summary.warnings = loaded.warnings;
    summary.skipped = loaded.warnings.size();
  } else {
    throw UsageError("unknown ingest kind '" + kind + "' (cdl, ids, unihan, senses, relations)");
  }
  print_warnings(path.string(), summary.warnings, ctx.err);
  save_store(corpus, ctx.cfg.store);
  Report report("ingest", ctx.clock);
  report.body() << "command: ingest " << kind << "\nrun_config: " << ctx.cfg.to_json() << "\n";
  print_summary(report.body(), summary);
  report.body() << "records: " << corpus.records.size() << "\n";
  ctx.out << report.render();
  return kOk;
}

int cmd_config(Context& ctx) {
  Corpus corpus = open_store(ctx.cfg, true);
  corpus.config = effective(ctx.cfg, corpus);
  save_store(corpus, ctx.cfg.store);
  ctx.out << "q: " << number_text(corpus.config.q) << "\nlambda_main: " << number_text(corpus.config.lambda_main)
          << "\ntheta_s: " << corpus.config.theta_s << "\nseed: " << corpus.config.seed << "\n";
  return kOk;
}

const CharacterRecord& require_record(const Corpus& corpus, char32_t ch) {
  const auto it = corpus.records.find(ch);
  if (it == corpus.records.end()) throw DataError("unknown character " + char_label(ch));
  return it->second;
}

int cmd_signature(Context& ctx, const std::string& arg) {
  const char32_t ch = parse_char_arg(arg);
  const Corpus corpus = open_store(ctx.cfg, false);
  const StoreConfig s = effective(ctx.cfg, corpus);
  const auto& rec = require_record(corpus, ch);
  if (!rec.strokes) throw MissingLayerError("no stroke data for " + char_label(ch));
  warn_quantization(s.q, ctx.err);
  ctx.out << canonical_text(make_profile(*rec.strokes, s.q).sig) << "\n";
  return kOk;
}

void describe_pattern(std::ostream& os, const StrokeProfile& a, const StrokeProfile& b, const Pattern& p) {
  os << "pattern_size: " << p.size() << "\npattern:";
  for (const auto& pair : p.mapping) {
    os << " " << a.strokes.strokes[pair.a].label.text() << "<->" << b.strokes.strokes[pair.b].label.text();
  }
  os << "\n";
}

int cmd_compare(Context& ctx, const std::string& arg1, const std::string& arg2) {
  const char32_t c1 = parse_char_arg(arg1);
  const char32_t c2 = parse_char_arg(arg2);
  const Corpus corpus = open_store(ctx.cfg, false);
  const StoreConfig s = effective(ctx.cfg, corpus);
  const auto& r1 = require_record(corpus, c1);
  const auto& r2 = require_record(corpus, c2);
  warn_quantization(s.q, ctx.err);
  const CharacterIndex index = prepare(corpus, s.q);

  Report report("compare", ctx.clock);
  auto& os = report.body();
  os << "command: compare " << char_label(c1) << " " << char_label(c2) << "\nrun_config: " << ctx.cfg.to_json()
     << "\n";
  if (r1.strokes && r2.strokes) {
    const auto& a = index.profiles.at(c1);
    const auto& b = index.profiles.at(c2);
    const Pattern p = common_pattern(a, b);
    describe_pattern(os, a, b, p);
    os << "w_S: " << p.size() << "\n";
  } else {
    os << "strokes: unavailable\n";
  }
  const auto b1 = index.bags.find(c1);
  const auto b2 = index.bags.find(c2);
  if (b1 != index.bags.end() && b2 != index.bags.end()) {
    os << "shared_components:";
    for (const auto& [c, d1] : b1->second.components) {
      const auto it = b2->second.components.find(c);
      if (it != b2->second.components.end()) os << " " << c << "(" << d1 << "," << it->second << ")";
    }
    os << "\n";
    const BuildOptions base = build_options(ctx.cfg, s, WeightFunction::w_R);
    for (auto fn : {WeightFunction::w_R, WeightFunction::w_gR, WeightFunction::w_gR_variant}) {
      BuildOptions o = base;
      o.weight = fn;
      os << to_string(fn) << ": " << number_text(pair_weight(index, o, c1, c2)) << "\n";
    }
  } else {
    os << "components: unavailable\n";
  }
  ctx.out << report.render();
  return kOk;
}

WeightFunction weight_of(const RunConfig& cfg) { return *weight_function_from(cfg.weight); }

WeightedGraph graph_input(Context& ctx, std::size_t i) {
  if (i < ctx.cfg.graphs.size()) return read_graph(ctx.cfg.graphs[i]);
  if (i > 0) throw UsageError("this command needs " + std::to_string(i + 1) + " --graph inputs");
  const Corpus corpus = open_store(ctx.cfg, false);
  const StoreConfig s = effective(ctx.cfg, corpus);
  const CharacterIndex index = prepare(corpus, s.q);
  for (const auto& w : index.warnings) ctx.err << "warning: " << w << "\n";
  return build_graph(index, build_options(ctx.cfg, s, weight_of(ctx.cfg)));
}

void graph_line(std::ostream& os, const std::string& label, const WeightedGraph& g) {
  os << label << ": kind=" << to_string(g.kind()) << " weight=" << g.provenance().weight
     << " vertices=" << g.vertices().size() << " edges=" << g.edges().size() << " h_edges=" << g.h_edges().size()
     << "\n";
}

int cmd_graph_build(Context& ctx) {
  if (!ctx.cfg.output) throw UsageError("graph build needs --out");
  const Corpus corpus = open_store(ctx.cfg, false);
  const StoreConfig s = effective(ctx.cfg, corpus);
  const WeightFunction fn = weight_of(ctx.cfg);
  if (fn == WeightFunction::w_S) warn_quantization(s.q, ctx.err);
  const CharacterIndex index = prepare(corpus, s.q);
  for (const auto& w : index.warnings) ctx.err << "warning: " << w << "\n";
  const WeightedGraph g = build_graph(index, build_options(ctx.cfg, s, fn));
  write_graph(g, *export_format_from(ctx.cfg.format), *ctx.cfg.output);
  Report report("graph build", ctx.clock);
  report.body() << "command: graph build\nrun_config: " << ctx.cfg.to_json() << "\n";
  graph_line(report.body(), "graph", g);
  ctx.out << report.render();
  return kOk;
}

int cmd_graph_analyze(Context& ctx) {
  const WeightedGraph g = graph_input(ctx, 0);
  CliqueOptions co;
  co.max_size = ctx.cfg.max_clique_size;
  co.top_k = ctx.cfg.top;
  co.allow_large = ctx.cfg.allow_large_cliques;
  if (ctx.cfg.clique_budget_ms) co.time_budget = std::chrono::milliseconds(*ctx.cfg.clique_budget_ms);
  const auto cliques = heaviest_cliques(g, co);

  Report report("graph analyze", ctx.clock);
  auto& os = report.body();
  os << "command: graph analyze\nrun_config: " << ctx.cfg.to_json() << "\n";
  graph_line(os, "graph", g);
  os << "top_vertices:\n";
  std::size_t rank = 0;
  for (const auto& v : top_vertices(g, ctx.cfg.top)) {
    os << "  " << ++rank << "\t" << char_label(v.vertex) << "\t" << number_text(v.weight) << "\n";
  }
  os << "heaviest_cliques: max_size=" << co.max_size << " complete=" << (cliques.complete ? "true" : "false") << "\n";
  rank = 0;
  for (const auto& c : cliques.cliques) {
    os << "  " << ++rank << "\t" << number_text(c.weight) << "\t";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) os << (i ? " " : "") << utf8::encode(c.vertices[i]);
    os << "\n";
  }
  ctx.out << report.render();
  return kOk;
}

int cmd_graph_similarity(Context& ctx) {
  if (ctx.cfg.graphs.size() != 2) throw UsageError("graph similarity needs exactly two --graph inputs");
  const WeightedGraph g1 = read_graph(ctx.cfg.graphs[0]);
  const WeightedGraph g2 = read_graph(ctx.cfg.graphs[1]);
  const auto r = similarity(g1, g2);
  Report report("graph similarity", ctx.clock);
  auto& os = report.body();
  os << "command: graph similarity\nrun_config: " << ctx.cfg.to_json() << "\n";
  graph_line(os, "first", g1);
  graph_line(os, "second", g2);
  os << "edge_jaccard: " << number_text(r.edge_jaccard) << "\nweight_rank_correlation: "
     << number_text(r.weight_rank_correlation) << "\ncoverage_in_meaning: "
     << (r.coverage_in_meaning ? number_text(*r.coverage_in_meaning) : std::string("undefined")) << "\n";
  ctx.out << report.render();
  return kOk;
}

int cmd_graph_cluster(Context& ctx) {
  const WeightedGraph g = graph_input(ctx, 0);
  const auto method = *cluster_method_from(ctx.cfg.method);
  const std::uint64_t seed = ctx.cfg.seed.value_or(0);
  const Partition p = cluster(g, ctx.cfg.threshold, method, seed);
  Report report("graph cluster", ctx.clock);
  auto& os = report.body();
  os << "command: graph cluster\nrun_config: " << ctx.cfg.to_json() << "\n";
  graph_line(os, "graph", g);
  std::map<std::size_t, std::vector<char32_t>> members;
  for (const auto& [v, c] : p) members[c].push_back(v);
  os << "clusters: " << members.size() << "\n";
  for (const auto& [c, vs] : members) {
    os << "  " << c << "\t";
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << utf8::encode(vs[i]);
    os << "\n";
  }
  if (ctx.cfg.graphs.size() >= 2) {
    const WeightedGraph other = read_graph(ctx.cfg.graphs[1]);
    Partition q = cluster(other, ctx.cfg.threshold, method, seed);
    // Compare on the union of vertices; missing vertices are singletons.
    Partition a = p;
    std::size_t next_a = members.size();
    std::size_t next_b = 0;
    for (const auto& [v, c] : q) next_b = std::max(next_b, c + 1);
    for (const auto& [v, c] : q) {
      if (!a.count(v)) a[v] = next_a++;
    }
    for (const auto& [v, c] : a) {
      if (!q.count(v)) q[v] = next_b++;
    }
    graph_line(os, "compared_with", other);
    os << "adjusted_rand_index: " << number_text(adjusted_rand_index(a, q)) << "\n";
  }
  ctx.out << report.render();
  return kOk;
}

void stat_lines(std::ostream& os, const std::string& label, const DirectionStat& s) {
  auto frac = [](std::optional<double> f) { return f ? number_text(*f) : std::string("undefined"); };
  os << label << ": h_edges=" << s.edges << " strokes=" << frac(s.stroke_fraction()) << " (" << s.stroke_smaller
     << "/" << s.stroke_comparable << ") components=" << frac(s.component_fraction()) << " ("
     << s.component_smaller << "/" << s.component_comparable << ") either=" << frac(s.either_fraction()) << " ("
     << s.either_smaller << "/" << s.either_comparable << ")\n";
}

int cmd_graph_hyperdir(Context& ctx) {
  const Corpus corpus = open_store(ctx.cfg, false);
  const StoreConfig s = effective(ctx.cfg, corpus);
  const CharacterIndex index = prepare(corpus, s.q);
  const WeightedGraph g = ctx.cfg.graphs.empty()
                              ? build_graph(index, build_options(ctx.cfg, s, WeightFunction::m))
                              : read_graph(ctx.cfg.graphs[0]);
  if (g.kind() != GraphKind::meaning) throw UsageError("hyperdir needs a meaning graph");
  const auto report_data = hypernym_direction_stat(g, index);
  Report report("graph hyperdir", ctx.clock);
  auto& os = report.body();
  os << "command: graph hyperdir\nrun_config: " << ctx.cfg.to_json() << "\n";
  graph_line(os, "graph", g);
  stat_lines(os, "overall", report_data.overall);
  for (const auto& [resource, stat] : report_data.by_resource) {
    stat_lines(os, "resource " + (resource.empty() ? std::string("(untagged)") : resource), stat);
  }
  ctx.out << report.render();
  return kOk;
}

int cmd_graph_export(Context& ctx) {
  if (!ctx.cfg.output) throw UsageError("graph export needs --out");
  const WeightedGraph g = graph_input(ctx, 0);
  write_graph(g, *export_format_from(ctx.cfg.format), *ctx.cfg.output);
  Report report("graph export", ctx.clock);
  report.body() << "command: graph export\nrun_config: " << ctx.cfg.to_json() << "\n";
  graph_line(report.body(), "graph", g);
  ctx.out << report.render();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stroke, component and meaning graphs over Chinese characters", "hanzigraph"};
  app.require_subcommand(1);
  RunConfig cfg;
  const char* env_store = std::getenv(kStoreEnv);
  cfg.store = env_store && *env_store ? env_store : kDefaultStore;

  std::string store_arg;
  std::vector<std::string> graph_args;
  std::string output_arg;
  app.add_option("--store", store_arg, std::string("Corpus store file (default $") + kStoreEnv + " or " +
                                           kDefaultStore + ")");
  app.add_option("--q", cfg.q, "Quantization step on the 0-128 scale");
  app.add_option("--lambda-main", cfg.lambda_main, "Main-radical boost for w_gR");
  app.add_option("--theta-s", cfg.theta_s, "Minimum w_S for a stroke edge");
  app.add_option("--weight", cfg.weight, "w_R | w_gR | w_gR_variant | w_S | m");
  app.add_option("--threshold", cfg.threshold, "Minimum edge weight used by clustering");
  app.add_option("--method", cfg.method, "threshold-components | label-propagation");
  app.add_option("--max-clique-size", cfg.max_clique_size, "Largest clique size searched");
  app.add_flag("--allow-large-cliques", cfg.allow_large_cliques, "Permit clique sizes above 6");
  app.add_option("--clique-budget-ms", cfg.clique_budget_ms, "Time budget for clique search");
  app.add_option("--top", cfg.top, "Number of ranked vertices and cliques");
  app.add_option("--format", cfg.format, "json | graphml | dot");
  app.add_option("--workers", cfg.workers, "Worker threads for pairwise weights");
  app.add_option("--seed", cfg.seed, "Seed for label propagation");
  app.add_option("-g,--graph", graph_args, "Graph json input (repeatable)");
  app.add_option("-o,--out", output_arg, "Output file");
  app.add_flag("--glosses", cfg.use_glosses, "Also link characters sharing a Unihan gloss");
  app.add_option("--hypernym-depth", cfg.hypernym_depth, "Hypernymy closure depth for H edges");
  bool no_blocking = false;
  app.add_flag("--no-blocking", no_blocking, "Evaluate every pair instead of blocked candidates");

  std::string ingest_kind;
  std::string ingest_path;
  std::string resource;
  auto* ingest = app.add_subcommand("ingest", "Merge a data file into the store");
  ingest->add_option("kind", ingest_kind, "cdl | ids | unihan | senses | relations")->required();
  ingest->add_option("path", ingest_path, "Input file")->required();
  ingest->add_option("--resource", resource, "Tag for sense/relation files (e.g. cwn, jwn)");

  auto* config = app.add_subcommand("config", "Persist --q/--lambda-main/--theta-s/--seed into the store");

  std::string sig_char;
  auto* sig = app.add_subcommand("signature", "Print a character's canonical stroke signature");
  sig->add_option("char", sig_char, "Character or U+XXXX")->required();

  std::string cmp_a;
  std::string cmp_b;
  auto* compare = app.add_subcommand("compare", "Compare two characters");
  compare->add_option("first", cmp_a)->required();
  compare->add_option("second", cmp_b)->required();

  auto* graph = app.add_subcommand("graph", "Build, analyze and export character graphs");
  graph->require_subcommand(1);
  auto* build = graph->add_subcommand("build", "Build a graph from the store");
  auto* analyze = graph->add_subcommand("analyze", "Heaviest vertices and cliques");
  auto* similar = graph->add_subcommand("similarity", "Compare two graphs");
  auto* clus = graph->add_subcommand("cluster", "Cluster a graph; with a second graph, report the ARI");
  auto* hyper = graph->add_subcommand("hyperdir", "Hypernymy direction statistics");
  auto* exp = graph->add_subcommand("export", "Convert a graph to json, graphml or dot");

  for (CLI::App* sub : {ingest, config, sig, compare, graph, build, analyze, similar, clus, hyper, exp}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (!store_arg.empty()) cfg.store = store_arg;
  for (const auto& g : graph_args) cfg.graphs.emplace_back(g);
  if (!output_arg.empty()) cfg.output = output_arg;
  cfg.blocking = !no_blocking;

  Context ctx{cfg, out, err, {}};
  try {
    ctx.cfg.validate();
    if (*ingest) return cmd_ingest(ctx, ingest_kind, ingest_path, resource);
    if (*config) return cmd_config(ctx);
    if (*sig) return cmd_signature(ctx, sig_char);
    if (*compare) return cmd_compare(ctx, cmp_a, cmp_b);
    if (*build) return cmd_graph_build(ctx);
    if (*analyze) return cmd_graph_analyze(ctx);
    if (*similar) return cmd_graph_similarity(ctx);
    if (*clus) return cmd_graph_cluster(ctx);
    if (*hyper) return cmd_graph_hyperdir(ctx);
    if (*exp) return cmd_graph_export(ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MissingLayerError& e) {
    err << "error: " << e.what() << "\n";
    return kMissingLayer;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  err << app.help();
  return kUsage;
}

}  // namespace hanzi::cli
