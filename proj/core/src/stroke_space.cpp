#include "hanzigraph/stroke_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace hanzi {
namespace {

// Canonical in-group order: abbreviation text, then primes, then side.
bool canonical_less(const BoundaryToken& x, const BoundaryToken& y) {
  return std::make_tuple(abbreviation(x.label.type), x.label.primes, x.side) <
         std::make_tuple(abbreviation(y.label.type), y.label.primes, y.side);
}

struct Projected {
  long long key;
  BoundaryToken token;
};

std::vector<TieGroup> group_sequence(std::vector<Projected> items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const Projected& x, const Projected& y) { return x.key < y.key; });
  std::vector<TieGroup> groups;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == 0 || items[i].key != items[i - 1].key) groups.emplace_back();
    groups.back().push_back(items[i].token);
  }
  for (auto& g : groups) std::sort(g.begin(), g.end(), canonical_less);
  return groups;
}

// -1, 0, +1
int order(std::size_t x, std::size_t y) { return x < y ? -1 : (x > y ? 1 : 0); }

bool reversed(std::size_t ax, std::size_t ay, std::size_t bx, std::size_t by) {
  return order(ax, ay) * order(bx, by) < 0;
}

bool axis_consistent(const std::vector<std::size_t>& a_lo, const std::vector<std::size_t>& a_hi,
                     const std::vector<std::size_t>& b_lo, const std::vector<std::size_t>& b_hi,
                     const StrokePairing& p, const StrokePairing& q) {
  const std::size_t a_first[2] = {a_lo[p.a], a_hi[p.a]};
  const std::size_t a_second[2] = {a_lo[q.a], a_hi[q.a]};
  const std::size_t b_first[2] = {b_lo[p.b], b_hi[p.b]};
  const std::size_t b_second[2] = {b_lo[q.b], b_hi[q.b]};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      if (reversed(a_first[x], a_second[y], b_first[x], b_second[y])) return false;
    }
  }
  return true;
}

class PatternSearch {
 public:
  PatternSearch(const StrokeProfile& a, const StrokeProfile& b)
      : a_(a), b_(b),
        ra_(boundary_ranks(a.sig, a.strokes.strokes.size())),
        rb_(boundary_ranks(b.sig, b.strokes.strokes.size())) {
    const auto& sa = a.strokes.strokes;
    const auto& sb = b.strokes.strokes;
    for (std::size_t i = 0; i < sa.size(); ++i) {
      for (std::size_t j = 0; j < sb.size(); ++j) {
        if (sa[i].label.type == sb[j].label.type) candidates_.push_back({i, j});
      }
    }
    const std::size_t n = candidates_.size();
    compatible_.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const bool ok = compatible(candidates_[x], candidates_[y]);
        compatible_[x * n + y] = compatible_[y * n + x] = ok;
      }
    }
    seen_a_.assign(sa.size(), 0);
    seen_b_.assign(sb.size(), 0);
  }

  Pattern run() {
    std::vector<std::size_t> all(candidates_.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::size_t> chosen;
    expand(chosen, all);
    Pattern out;
    for (std::size_t c : best_) out.mapping.push_back(candidates_[c]);
    return out;
  }

 private:
  bool compatible(const StrokePairing& p, const StrokePairing& q) const {
    if (p.a == q.a || p.b == q.b) return false;
    return axis_consistent(ra_.left, ra_.right, rb_.left, rb_.right, p, q) &&
           axis_consistent(ra_.top, ra_.bottom, rb_.top, rb_.bottom, p, q);
  }

  // Per stroke type, a pattern uses at most min(#distinct a strokes,
  // #distinct b strokes) among the remaining candidates.
  std::size_t bound(std::span<const std::size_t> remaining) {
    std::size_t per_type_a[kStrokeTypeCount] = {};
    std::size_t per_type_b[kStrokeTypeCount] = {};
    for (std::size_t c : remaining) {
      const auto& p = candidates_[c];
      const auto t = static_cast<std::size_t>(a_.strokes.strokes[p.a].label.type);
      if (!seen_a_[p.a]) {
        seen_a_[p.a] = 1;
        ++per_type_a[t];
      }
      if (!seen_b_[p.b]) {
        seen_b_[p.b] = 1;
        ++per_type_b[t];
      }
    }
    for (std::size_t c : remaining) {
      seen_a_[candidates_[c].a] = 0;
      seen_b_[candidates_[c].b] = 0;
    }
    std::size_t total = 0;
    for (std::size_t t = 0; t < kStrokeTypeCount; ++t) total += std::min(per_type_a[t], per_type_b[t]);
    return total;
  }

  // Include-first over candidates sorted by (a, b): the first maximum
  // reached is the lexicographically least one.
  void expand(std::vector<std::size_t>& chosen, const std::vector<std::size_t>& allowed) {
    if (chosen.size() > best_.size()) best_ = chosen;
    const std::size_t n = candidates_.size();
    for (std::size_t k = 0; k < allowed.size(); ++k) {
      const std::span<const std::size_t> rest(allowed.data() + k, allowed.size() - k);
      if (chosen.size() + bound(rest) <= best_.size()) return;
      const std::size_t c = allowed[k];
      std::vector<std::size_t> next;
      for (std::size_t m = k + 1; m < allowed.size(); ++m) {
        if (compatible_[c * n + allowed[m]]) next.push_back(allowed[m]);
      }
      chosen.push_back(c);
      expand(chosen, next);
      chosen.pop_back();
    }
  }

  const StrokeProfile& a_;
  const StrokeProfile& b_;
  BoundaryRanks ra_;
  BoundaryRanks rb_;
  std::vector<StrokePairing> candidates_;
  std::vector<char> compatible_;
  std::vector<char> seen_a_;
  std::vector<char> seen_b_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::string StrokeLabel::text() const {
  return std::string(abbreviation(type)) + std::string(primes, '\'');
}

char side_letter(Side side) noexcept {
  switch (side) {
    case Side::left: return 'l';
    case Side::right: return 'r';
    case Side::top: return 't';
    case Side::bottom: return 'b';
  }
  return '?';
}

std::string BoundaryToken::text() const { return label.text() + '.' + side_letter(side); }

LabeledStrokeSet label_strokes(const StrokeSet& strokes) {
  LabeledStrokeSet out;
  out.ch = strokes.ch;
  std::vector<const StrokeInstance*> ordered;
  for (const auto& s : strokes.strokes) ordered.push_back(&s);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const StrokeInstance* x, const StrokeInstance* y) { return x->doc_index < y->doc_index; });
  std::uint32_t seen[kStrokeTypeCount] = {};
  for (const StrokeInstance* s : ordered) {
    auto& count = seen[static_cast<std::size_t>(s->type)];
    out.strokes.push_back({{s->type, count++}, *s});
  }
  return out;
}

Signature signature(const LabeledStrokeSet& strokes, double step) {
  if (!(step > 0)) throw std::invalid_argument("quantization step must be positive");
  auto quantize = [step](double v) { return std::llround(v / step); };
  std::vector<Projected> horizontal;
  std::vector<Projected> vertical;
  for (std::size_t i = 0; i < strokes.strokes.size(); ++i) {
    const auto& [label, stroke] = strokes.strokes[i];
    horizontal.push_back({quantize(stroke.box.left), {label, Side::left, i}});
    horizontal.push_back({quantize(stroke.box.right), {label, Side::right, i}});
    vertical.push_back({quantize(stroke.box.top), {label, Side::top, i}});
    vertical.push_back({quantize(stroke.box.bottom), {label, Side::bottom, i}});
  }
  return {group_sequence(std::move(horizontal)), group_sequence(std::move(vertical)), step};
}

std::string sequence_text(std::span<const TieGroup> sequence) {
  std::string out;
  for (const TieGroup& group : sequence) {
    if (!out.empty()) out += ' ';
    if (group.size() > 1) out += '[';
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i) out += ' ';
      out += group[i].text();
    }
    if (group.size() > 1) out += ']';
  }
  return out;
}

std::string canonical_text(const Signature& sig) {
  return "H: " + sequence_text(sig.horizontal) + " | V: " + sequence_text(sig.vertical);
}

boost::multiprecision::cpp_int linearization_count(std::span<const TieGroup> sequence) {
  boost::multiprecision::cpp_int total = 1;
  for (const TieGroup& g : sequence) {
    for (std::size_t k = 2; k <= g.size(); ++k) total *= k;
  }
  return total;
}

Linearizations linearizations(std::span<const TieGroup> sequence, std::size_t cap) {
  Linearizations out;
  out.total = linearization_count(sequence);
  if (cap == 0) return out;
  std::vector<std::vector<std::size_t>> perms;
  for (const TieGroup& g : sequence) {
    perms.emplace_back(g.size());
    std::iota(perms.back().begin(), perms.back().end(), 0);
  }
  while (out.words.size() < cap) {
    std::vector<BoundaryToken> word;
    for (std::size_t g = 0; g < sequence.size(); ++g) {
      for (std::size_t idx : perms[g]) word.push_back(sequence[g][idx]);
    }
    out.words.push_back(std::move(word));
    // Odometer over per-group permutations, last group fastest.
    std::size_t g = sequence.size();
    while (g > 0) {
      --g;
      if (std::next_permutation(perms[g].begin(), perms[g].end())) break;
      if (g == 0) return out;  // next_permutation reset the group; full cycle done
    }
    if (sequence.empty()) break;
  }
  return out;
}

BoundaryRanks boundary_ranks(const Signature& sig, std::size_t stroke_count) {
  BoundaryRanks r;
  r.left.assign(stroke_count, 0);
  r.right.assign(stroke_count, 0);
  r.top.assign(stroke_count, 0);
  r.bottom.assign(stroke_count, 0);
  for (std::size_t g = 0; g < sig.horizontal.size(); ++g) {
    for (const auto& tok : sig.horizontal[g]) (tok.side == Side::left ? r.left : r.right).at(tok.stroke) = g;
  }
  for (std::size_t g = 0; g < sig.vertical.size(); ++g) {
    for (const auto& tok : sig.vertical[g]) (tok.side == Side::top ? r.top : r.bottom).at(tok.stroke) = g;
  }
  return r;
}

StrokeProfile make_profile(const StrokeSet& strokes, double step) {
  StrokeProfile p{label_strokes(strokes), {}};
  p.sig = signature(p.strokes, step);
  return p;
}

Pattern common_pattern(const StrokeProfile& a, const StrokeProfile& b) {
  if (a.sig.quantization_step != b.sig.quantization_step) {
    throw std::invalid_argument("signatures use different quantization steps");
  }
  return PatternSearch(a, b).run();
}

std::size_t stroke_weight(const StrokeProfile& a, const StrokeProfile& b) { return common_pattern(a, b).size(); }

}  // namespace hanzi
