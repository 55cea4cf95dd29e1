#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hanzigraph/cdl.hpp"
#include "hanzigraph/error.hpp"
#include "hanzigraph/ids.hpp"
#include "hanzigraph/lexicon.hpp"

namespace hanzi {

/// Everything known about one character.
struct CharacterRecord {
  char32_t ch = 0;
  std::optional<StrokeSet> strokes;
  std::optional<std::string> ids;
  std::optional<RadicalInfo> radical;
  std::set<std::string> synsets;    // qualified synset ids
  std::vector<std::string> glosses;  // normalized Unihan glosses

  friend bool operator==(const CharacterRecord&, const CharacterRecord&) = default;
};

struct StoreConfig {
  double q = 1.0;
  double lambda_main = 2.0;
  std::size_t theta_s = 2;
  std::uint64_t seed = 0;

  friend bool operator==(const StoreConfig&, const StoreConfig&) = default;
};

struct MergeSummary {
  std::size_t added = 0;      // records created
  std::size_t updated = 0;    // existing records whose layer changed
  std::size_t unchanged = 0;  // items identical to what was stored
  std::size_t skipped = 0;    // rejected items
  std::vector<Warning> warnings;
};

/// The per-character store, serialized as one JSON object per line.
class Corpus {
 public:
  StoreConfig config;
  std::map<char32_t, CharacterRecord> records;
  std::map<std::string, std::set<std::string>> compounds;  // multi-character lemma -> synsets
  HypernymyIndex relations;

  MergeSummary merge_strokes(const std::vector<StrokeSet>& sets);
  MergeSummary merge_ids(const IdsLoadResult& ids);
  MergeSummary merge_unihan(const UnihanData& unihan);
  MergeSummary merge_senses(const SenseMap& senses);
  MergeSummary merge_relations(const HypernymyIndex& relations);

  IdsDatabase ids_database() const;
  SenseMap sense_map() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Records are written sorted by codepoint; writing an unchanged corpus is
/// byte-identical.
std::string write_store(const Corpus& corpus);
/// Throws ParseError (with line) on malformed records.
Corpus read_store(std::string_view text);

Corpus load_store(const std::filesystem::path& path);
void save_store(const Corpus& corpus, const std::filesystem::path& path);

}  // namespace hanzi
