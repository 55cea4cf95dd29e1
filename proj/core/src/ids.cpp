#include "hanzigraph/ids.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hanzigraph/utf8.hpp"

namespace hanzi {
namespace {

class IdsParser {
 public:
  explicit IdsParser(std::string_view text) : text_(text) {}

  IdsNode parse() {
    if (text_.empty()) throw ParseError("empty IDS", 1, 1);
    IdsNode root = node();
    if (pos_ != text_.size()) fail("trailing input after a complete IDS");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, index_ + 1); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t column) const {
    throw ParseError(message, 1, column);
  }

  char32_t take() {
    if (pos_ >= text_.size()) fail("IDS ends before the operator has all its operands");
    try {
      const char32_t cp = utf8::next(text_, pos_);
      ++index_;
      return cp;
    } catch (const DataError& e) {
      fail(e.what());
    }
  }

  IdsNode node() {
    const std::size_t start = pos_;
    const char32_t cp = take();
    if (is_ids_operator(cp)) {
      std::vector<IdsNode> children;
      for (std::size_t i = 0, n = ids_arity(cp); i < n; ++i) children.push_back(node());
      return IdsNode::compose(cp, std::move(children));
    }
    if (cp == U'&') {
      // Opaque placeholder for an unencoded component: &NAME;
      const std::size_t column = index_;
      while (true) {
        if (pos_ >= text_.size()) fail_at("unterminated component placeholder", column);
        const char32_t c = take();
        if (c == U';') break;
        if (c == U'&' || is_ids_operator(c)) fail_at("unterminated component placeholder", column);
      }
      return IdsNode::leaf(Component(text_.substr(start, pos_ - start)));
    }
    if (cp == U' ' || cp == U'\t') fail_at("whitespace inside IDS", index_);
    return IdsNode::leaf(utf8::encode(cp));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t index_ = 0;
};

void collect_leaves(const IdsNode& node, std::vector<Component>& out) {
  if (node.is_leaf()) {
    out.push_back(node.component);
    return;
  }
  for (const auto& child : node.children) collect_leaves(child, out);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool is_main(const Component& c, const RadicalForms& forms) {
  return std::find(forms.begin(), forms.end(), c) != forms.end();
}

}  // namespace

bool is_ids_operator(char32_t cp) noexcept { return cp >= 0x2FF0 && cp <= 0x2FFB; }

std::size_t ids_arity(char32_t op) {
  if (!is_ids_operator(op)) throw std::invalid_argument("not an IDS operator");
  return (op == 0x2FF2 || op == 0x2FF3) ? 3 : 2;
}

IdsNode IdsNode::leaf(Component c) {
  IdsNode n;
  n.component = std::move(c);
  return n;
}

IdsNode IdsNode::compose(char32_t op, std::vector<IdsNode> children) {
  if (children.size() != ids_arity(op)) throw std::invalid_argument("wrong number of IDS operands");
  IdsNode n;
  n.op = op;
  n.children = std::move(children);
  return n;
}

IdsNode parse_ids(std::string_view text) { return IdsParser(text).parse(); }

std::string to_text(const IdsNode& node) {
  if (node.is_leaf()) return node.component;
  std::string out = utf8::encode(node.op);
  for (const auto& child : node.children) out += to_text(child);
  return out;
}

std::vector<Component> leaves(const IdsNode& node) {
  std::vector<Component> out;
  collect_leaves(node, out);
  return out;
}

bool IdsDatabase::insert(char32_t ch, IdsNode node) {
  auto [it, inserted] = entries_.insert_or_assign(ch, std::move(node));
  return !inserted;
}

const IdsNode* IdsDatabase::find(char32_t ch) const {
  const auto it = entries_.find(ch);
  return it == entries_.end() ? nullptr : &it->second;
}

const IdsNode* IdsDatabase::find(std::string_view component) const {
  const char32_t cp = utf8::single(component);
  return cp ? find(cp) : nullptr;
}

IdsLoadResult load_ids(std::istream& in) {
  IdsLoadResult out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == ';' || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() < 3) {
      out.warnings.push_back({lineno, "expected U+XXXX<TAB>char<TAB>ids"});
      continue;
    }
    try {
      const char32_t cp = utf8::parse_hex(fields[0]);
      const char32_t listed = utf8::single(fields[1]);
      if (listed != cp) {
        out.warnings.push_back({lineno, "character column does not match " + std::string(fields[0])});
        continue;
      }
      IdsNode node = parse_ids(fields[2]);
      if (out.db.insert(cp, std::move(node))) {
        out.warnings.push_back({lineno, "duplicate entry for U+" + utf8::hex(cp) + " overrides the earlier one"});
      }
      out.texts[cp] = std::string(fields[2]);
    } catch (const Error& e) {
      out.warnings.push_back({lineno, e.what()});
    }
  }
  return out;
}

std::shared_ptr<const Deriver::Bag> Deriver::bag_of(char32_t ch, std::vector<char32_t>& stack) const {
  if (const auto it = cache_.find(ch); it != cache_.end()) return it->second;
  const IdsNode* node = db_.find(ch);
  if (!node) throw DataError("no IDS entry for U+" + utf8::hex(ch));
  const Component self = utf8::encode(ch);
  stack.push_back(ch);
  Bag bag;
  auto offer = [&bag](const Component& c, int depth) {
    auto [it, inserted] = bag.emplace(c, depth);
    if (!inserted) it->second = std::min(it->second, depth);
  };
  for (const Component& leaf : leaves(*node)) {
    if (leaf == self) continue;  // atomic entries decompose to themselves
    offer(leaf, 1);
    const char32_t cp = utf8::single(leaf);
    if (!cp || !db_.find(cp)) continue;
    if (std::find(stack.begin(), stack.end(), cp) != stack.end()) {
      std::string cycle;
      const auto from = std::find(stack.begin(), stack.end(), cp);
      for (auto it = from; it != stack.end(); ++it) cycle += utf8::encode(*it) + " -> ";
      throw DataError("IDS cycle: " + cycle + leaf);
    }
    for (const auto& [c, d] : *bag_of(cp, stack)) {
      if (c != self) offer(c, d + 1);
    }
  }
  stack.pop_back();
  auto shared = std::make_shared<const Bag>(std::move(bag));
  cache_.emplace(ch, shared);
  return shared;
}

ComponentBag Deriver::derive(char32_t k) const {
  std::lock_guard lock(mutex_);
  std::vector<char32_t> stack;
  return {k, *bag_of(k, stack)};
}

ComponentBag derive(char32_t k, const IdsDatabase& db) { return Deriver(db).derive(k); }

std::size_t component_weight(const ComponentBag& a, const ComponentBag& b) {
  std::size_t shared = 0;
  for (const auto& [c, d] : a.components) shared += b.components.count(c);
  return shared;
}

double generalized_component_weight(const ComponentBag& a, const RadicalForms& main_a, const ComponentBag& b,
                                    const RadicalForms& main_b, const WeightConfig& cfg) {
  if (!(cfg.lambda_main > 0)) throw std::invalid_argument("lambda_main must be positive");
  double total = 0;
  for (const auto& [c, da] : a.components) {
    const auto it = b.components.find(c);
    if (it == b.components.end()) continue;
    const int db = it->second;
    const double la = is_main(c, main_a) ? cfg.lambda_main : 1.0;
    const double lb = is_main(c, main_b) ? cfg.lambda_main : 1.0;
    const double depth_term = cfg.use_variant ? 1.0 / (std::abs(da - db) + 1) : 2.0 / (da + db);
    total += la * lb * depth_term;
  }
  return total;
}

}  // namespace hanzi
