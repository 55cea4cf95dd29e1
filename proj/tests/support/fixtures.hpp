#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hanzigraph/cdl.hpp"
#include "hanzigraph/cli.hpp"
#include "hanzigraph/corpus.hpp"
#include "hanzigraph/graph.hpp"
#include "hanzigraph/ids.hpp"
#include "hanzigraph/utf8.hpp"

namespace fixture {

inline std::filesystem::path data(const std::string& name) { return std::filesystem::path(HANZIGRAPH_TEST_DATA) / name; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::map<char32_t, hanzi::StrokeSet> load_cdl(const std::string& name) {
  std::map<char32_t, hanzi::StrokeSet> out;
  for (const auto& desc : hanzi::parse_cdl_document(slurp(data(name)))) out[desc.ch] = hanzi::flatten(desc);
  return out;
}

inline char32_t cp(const char* utf8) { return hanzi::utf8::single(utf8); }

/// The sample corpus with every layer merged, as the CLI ingests it.
inline hanzi::Corpus sample_corpus() {
  hanzi::Corpus c;
  std::vector<hanzi::StrokeSet> sets;
  for (const auto& [ch, s] : load_cdl("sample/sample.cdl")) sets.push_back(s);
  c.merge_strokes(sets);
  {
    std::ifstream in(data("sample/sample.ids"));
    c.merge_ids(hanzi::load_ids(in));
  }
  {
    std::ifstream in(data("sample/sample.unihan.txt"));
    c.merge_unihan(hanzi::parse_unihan(in));
  }
  for (const std::string res : {"wn", "cow"}) {
    const std::string prefix = res == "wn" ? "sample/sample" : "sample/cow";
    std::ifstream senses(data(prefix + ".senses.tsv"));
    c.merge_senses(hanzi::load_senses(senses, res).senses);
    std::ifstream rel(data(prefix + ".relations.tsv"));
    c.merge_relations(hanzi::load_relations(rel, res).relations);
  }
  return c;
}

/// Re-sorts the tokens inside each bracket of a hand-written sequence
/// by (abbreviation, primes, side l<r<t<b).
inline std::string canonicalize_brackets(const std::string& seq) {
  auto key = [](const std::string& tok) {
    const auto dot = tok.rfind('.');
    std::string base = tok.substr(0, dot);
    const auto primes = static_cast<std::size_t>(std::count(base.begin(), base.end(), '\''));
    base.erase(std::remove(base.begin(), base.end(), '\''), base.end());
    const std::string sides = "lrtb";
    return std::make_tuple(base, primes, sides.find(tok[dot + 1]));
  };
  std::string out;
  std::size_t i = 0;
  while (i < seq.size()) {
    if (seq[i] != '[') {
      out += seq[i++];
      continue;
    }
    const auto close = seq.find(']', i);
    std::istringstream group(seq.substr(i + 1, close - i - 1));
    std::vector<std::string> toks;
    for (std::string t; group >> t;) toks.push_back(t);
    std::sort(toks.begin(), toks.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    out += '[';
    for (std::size_t k = 0; k < toks.size(); ++k) out += (k ? " " : "") + toks[k];
    out += ']';
    i = close + 1;
  }
  return out;
}

/// Random undirected graph on `n` vertices starting at U+4E00 with
/// integer weights in [1, max_weight].
inline hanzi::WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double density, int max_weight,
                                         hanzi::GraphKind kind = hanzi::GraphKind::components) {
  hanzi::WeightedGraph g(kind);
  std::bernoulli_distribution edge(density);
  std::uniform_int_distribution<int> weight(1, max_weight);
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(static_cast<char32_t>(0x4E00 + i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) g.add_edge(static_cast<char32_t>(0x4E00 + i), static_cast<char32_t>(0x4E00 + j), weight(rng));
    }
  }
  return g;
}

/// Acyclic IDS database: entry i only references entries above i or
/// leaf components from a small pool. Returned both as a database and as
/// plain leaf lists for the oracles.
struct RandomIds {
  hanzi::IdsDatabase db;
  std::map<std::string, std::vector<std::string>> plain;
  std::vector<char32_t> chars;
};

inline RandomIds random_ids(std::mt19937_64& rng, std::size_t entries, std::size_t leaf_pool = 8) {
  RandomIds r;
  for (std::size_t i = 0; i < entries; ++i) r.chars.push_back(static_cast<char32_t>(0x5000 + i));
  std::vector<std::string> pool;
  for (std::size_t i = 0; i < leaf_pool; ++i) pool.push_back(hanzi::utf8::encode(static_cast<char32_t>(0x6000 + i)));
  const char32_t ops[] = {0x2FF0, 0x2FF1, 0x2FF2, 0x2FF3, 0x2FF4, 0x2FF8};
  std::uniform_int_distribution<std::size_t> op_pick(0, std::size(ops) - 1);
  std::bernoulli_distribution use_entry(0.5);
  std::bernoulli_distribution nest(0.25);
  for (std::size_t i = 0; i < entries; ++i) {
    auto component = [&]() -> std::string {
      if (i + 1 < entries && use_entry(rng)) {
        std::uniform_int_distribution<std::size_t> later(i + 1, entries - 1);
        return hanzi::utf8::encode(r.chars[later(rng)]);
      }
      std::uniform_int_distribution<std::size_t> leaf(0, pool.size() - 1);
      return pool[leaf(rng)];
    };
    std::function<hanzi::IdsNode(int)> tree = [&](int depth) {
      const char32_t op = ops[op_pick(rng)];
      std::vector<hanzi::IdsNode> kids;
      for (std::size_t k = 0; k < hanzi::ids_arity(op); ++k) {
        kids.push_back(depth < 2 && nest(rng) ? tree(depth + 1) : hanzi::IdsNode::leaf(component()));
      }
      return hanzi::IdsNode::compose(op, std::move(kids));
    };
    hanzi::IdsNode node = tree(0);
    r.plain[hanzi::utf8::encode(r.chars[i])] = hanzi::leaves(node);
    r.db.insert(r.chars[i], std::move(node));
  }
  return r;
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = hanzi::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

/// The report body without its timestamp header line.
inline std::string body_of(const std::string& report) {
  const auto nl = report.find('\n');
  return report.rfind("# hanzigraph", 0) == 0 && nl != std::string::npos ? report.substr(nl + 1) : report;
}

/// A fresh scratch directory under the build tree.
inline std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::current_path() / "scratch" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace fixture
