#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hanzigraph/error.hpp"
#include "hanzigraph/ids.hpp"

namespace hanzi {

inline constexpr int kRadicalCount = 214;
inline constexpr char32_t kKangXiBase = 0x2F00;

/// KangXi radical codepoint for index 1..214. Throws std::out_of_range.
char32_t radical_index_to_char(int index);
/// Inverse of radical_index_to_char; 0 when `cp` is not a KangXi radical.
int radical_char_to_index(char32_t cp) noexcept;
/// The CJK unified ideograph the radical normalizes to (⽔ -> 水).
char32_t radical_unified_form(int index);
/// Every component spelling that counts as radical `index`: the KangXi
/// codepoint, its unified ideograph and common positional variants (氵, 扌, ...).
RadicalForms radical_forms(int index);

struct RadicalInfo {
  char32_t ch = 0;
  int radical_index = 0;
  int extra_strokes = 0;
  bool simplified = false;

  friend bool operator==(const RadicalInfo&, const RadicalInfo&) = default;
};

struct UnihanData {
  std::map<char32_t, RadicalInfo> radicals;
  std::map<char32_t, std::vector<std::string>> glosses;
  std::vector<Warning> warnings;
};

/// Parses a kRSUnicode value such as `85.4`, `85'.4` or `85.4 86.3`
/// (first alternative wins). Throws DataError when malformed.
RadicalInfo parse_rs_unicode(char32_t ch, std::string_view value);

/// Splits a kDefinition value on `;` and `,` into lowercased, trimmed glosses.
std::vector<std::string> split_glosses(std::string_view definition);

/// Reads `U+XXXX<TAB>kField<TAB>value` lines. Unknown fields are ignored;
/// malformed lines produce warnings and are skipped.
UnihanData parse_unihan(std::istream& in);

struct SenseMap {
  std::map<std::string, std::set<std::string>> lemma_to_synsets;
  std::map<std::string, std::set<std::string>> synset_to_lemmas;

  void add(const std::string& lemma, const std::string& synset);
};

/// Direct hypernymy over synset ids: parent -> children.
struct HypernymyIndex {
  std::map<std::string, std::set<std::string>> children;

  /// Self-loops are rejected (returns false).
  bool add(const std::string& parent, const std::string& child);
  std::size_t size() const;

  friend bool operator==(const HypernymyIndex&, const HypernymyIndex&) = default;
};

struct SenseLoad {
  SenseMap senses;
  std::vector<Warning> warnings;
};

struct RelationLoad {
  HypernymyIndex relations;
  std::vector<Warning> warnings;
};

/// Synset ids are namespaced as `resource:id` when `resource` is non-empty.
std::string qualify_synset(const std::string& resource, const std::string& id);
/// The resource part of a qualified synset id (empty if unqualified).
std::string synset_resource(const std::string& synset);

/// `synset_id<TAB>lemma` lines.
SenseLoad load_senses(std::istream& in, const std::string& resource = {});
/// `parent<TAB>hype<TAB>child` lines.
RelationLoad load_relations(std::istream& in, const std::string& resource = {});

struct MeaningOptions {
  bool use_glosses = false;
  int hypernym_depth = 1;  // 1 = direct hypernyms only

  friend bool operator==(const MeaningOptions&, const MeaningOptions&) = default;
};

/// Per-character meaning data: synsets of single-character lemmas and
/// normalized Unihan glosses.
struct CharacterMeaning {
  std::set<std::string> synsets;
  std::set<std::string> glosses;
};

struct MeaningEdge {
  char32_t u = 0;  // u < v
  char32_t v = 0;
  double weight = 0;  // shared synsets (+ shared glosses when enabled)

  friend bool operator==(const MeaningEdge&, const MeaningEdge&) = default;
};

struct HyperEdge {
  char32_t from = 0;  // hypernym side
  char32_t to = 0;
  std::string resource;

  friend auto operator<=>(const HyperEdge&, const HyperEdge&) = default;
};

struct MeaningEdges {
  std::vector<MeaningEdge> m;  // sorted by (u, v)
  std::vector<HyperEdge> h;    // sorted, deduplicated
};

double meaning_weight(const CharacterMeaning& a, const CharacterMeaning& b, const MeaningOptions& opts);

/// Synonymy and hypernymy edges among `chars`. Only single-character
/// lemmas participate; compounds stay in the sense map only.
MeaningEdges meaning_edges(const std::map<char32_t, CharacterMeaning>& chars, const HypernymyIndex& relations,
                           const MeaningOptions& opts);

/// Convenience: builds per-character meaning data from loaded resources.
std::map<char32_t, CharacterMeaning> character_meanings(const std::set<char32_t>& chars, const SenseMap& senses,
                                                        const std::map<char32_t, std::vector<std::string>>& glosses);

}  // namespace hanzi
