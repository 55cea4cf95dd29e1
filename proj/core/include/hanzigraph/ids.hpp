#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hanzigraph/error.hpp"

namespace hanzi {

/// A component token: one UTF-8 encoded character, or an opaque
/// placeholder such as `&CDP-8B7C;` for unencoded components.
using Component = std::string;

/// Ideographic description characters U+2FF0..U+2FFB.
bool is_ids_operator(char32_t cp) noexcept;
/// 3 for ⿲ and ⿳, 2 for the other operators.
std::size_t ids_arity(char32_t op);

struct IdsNode {
  Component component;  // set on leaves
  char32_t op = 0;      // set on operator nodes
  std::vector<IdsNode> children;

  bool is_leaf() const noexcept { return op == 0; }

  static IdsNode leaf(Component c);
  static IdsNode compose(char32_t op, std::vector<IdsNode> children);

  friend bool operator==(const IdsNode&, const IdsNode&) = default;
};

/// Prefix-notation parse of a whole IDS string. Throws ParseError whose
/// column is the 1-based character position of the problem.
IdsNode parse_ids(std::string_view text);

/// Serializes back to prefix notation.
std::string to_text(const IdsNode& node);

/// Leaf tokens in left-to-right order.
std::vector<Component> leaves(const IdsNode& node);

class IdsDatabase {
 public:
  /// Returns true when an existing entry was replaced.
  bool insert(char32_t ch, IdsNode node);

  const IdsNode* find(char32_t ch) const;
  /// Looks up a component token; placeholders never have entries.
  const IdsNode* find(std::string_view component) const;

  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<char32_t, IdsNode>& entries() const noexcept { return entries_; }

 private:
  std::map<char32_t, IdsNode> entries_;
};

struct IdsLoadResult {
  IdsDatabase db;
  std::map<char32_t, std::string> texts;  // the IDS string as read
  std::vector<Warning> warnings;
};

/// Reads `U+XXXX<TAB>char<TAB>ids` lines; `;`/`#` comments. Later
/// duplicates override earlier ones with a warning; malformed lines are
/// skipped with a warning.
IdsLoadResult load_ids(std::istream& in);

/// R(k): every component reachable from k's decomposition, intermediates
/// included, with the minimum number of productions needed to reach it.
struct ComponentBag {
  char32_t ch = 0;
  std::map<Component, int> components;  // component -> min depth (>= 1)

  friend bool operator==(const ComponentBag&, const ComponentBag&) = default;
};

/// Memoizing derivation over an immutable database. Thread-safe; results
/// do not depend on call order.
class Deriver {
 public:
  explicit Deriver(const IdsDatabase& db) : db_(db) {}

  /// Throws DataError when k has no entry or its derivation is cyclic.
  ComponentBag derive(char32_t k) const;

 private:
  using Bag = std::map<Component, int>;
  std::shared_ptr<const Bag> bag_of(char32_t ch, std::vector<char32_t>& stack) const;

  const IdsDatabase& db_;
  mutable std::mutex mutex_;
  mutable std::map<char32_t, std::shared_ptr<const Bag>> cache_;
};

ComponentBag derive(char32_t k, const IdsDatabase& db);

struct WeightConfig {
  double lambda_main = 2.0;  // boost for each character's main radical
  bool use_variant = false;  // 1/(|d-d'|+1) instead of 2/(d+d')
};

/// Components that count as a character's main radical (the radical and
/// its positional variants); empty when unknown.
using RadicalForms = std::vector<Component>;

/// Number of shared components (set intersection).
std::size_t component_weight(const ComponentBag& a, const ComponentBag& b);

/// Sum over shared components of λ(c)·λ'(c)·2/(d+d'), or of
/// λ(c)·λ'(c)/(|d-d'|+1) when cfg.use_variant is set. Throws
/// std::invalid_argument when lambda_main <= 0.
double generalized_component_weight(const ComponentBag& a, const RadicalForms& main_a, const ComponentBag& b,
                                    const RadicalForms& main_b, const WeightConfig& cfg);

}  // namespace hanzi
