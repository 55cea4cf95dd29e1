#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hanzigraph/cdl.hpp"

namespace hanzi {

/// Stroke type plus a prime count distinguishing repeated types (h, h', h'').
struct StrokeLabel {
  StrokeType type = StrokeType::h;
  std::uint32_t primes = 0;

  std::string text() const;
  friend auto operator<=>(const StrokeLabel&, const StrokeLabel&) = default;
};

struct LabeledStroke {
  StrokeLabel label;
  StrokeInstance stroke;
};

struct LabeledStrokeSet {
  char32_t ch = 0;
  std::vector<LabeledStroke> strokes;
};

/// Primes are assigned per type in doc_index order.
LabeledStrokeSet label_strokes(const StrokeSet& strokes);

enum class Side : std::uint8_t { left, right, top, bottom };

char side_letter(Side side) noexcept;

struct BoundaryToken {
  StrokeLabel label;
  Side side = Side::left;
  std::size_t stroke = 0;  // index into the labeled set

  std::string text() const;
};

/// Tokens whose quantized coordinates coincide.
using TieGroup = std::vector<BoundaryToken>;

/// Bracketed boundary orders of a character: left/right projections
/// ascending in x, top/bottom projections ascending in y.
struct Signature {
  std::vector<TieGroup> horizontal;
  std::vector<TieGroup> vertical;
  double quantization_step = 1.0;
};

/// Coordinates are rounded to the nearest multiple of `step` (halves away
/// from zero) before comparison. Throws std::invalid_argument if step <= 0.
Signature signature(const LabeledStrokeSet& strokes, double step = 1.0);

/// Steps above this merge boundaries coarsely enough to risk changing a
/// character's reading (the 力/刀 case); callers surface a warning.
inline constexpr double kQuantizationHazardStep = 4.0;

/// `H: <seq> | V: <seq>`, groups of two or more bracketed and sorted.
std::string canonical_text(const Signature& sig);
std::string sequence_text(std::span<const TieGroup> sequence);

struct Linearizations {
  std::vector<std::vector<BoundaryToken>> words;  // at most `cap`
  boost::multiprecision::cpp_int total;           // product of group factorials
};

/// Expands every tie-group into each of its orderings.
Linearizations linearizations(std::span<const TieGroup> sequence, std::size_t cap);
boost::multiprecision::cpp_int linearization_count(std::span<const TieGroup> sequence);

/// Labeled strokes together with their signature; the unit of comparison.
struct StrokeProfile {
  LabeledStrokeSet strokes;
  Signature sig;
};

StrokeProfile make_profile(const StrokeSet& strokes, double step = 1.0);

struct StrokePairing {
  std::size_t a = 0;  // stroke index in the first character
  std::size_t b = 0;  // stroke index in the second character

  friend auto operator<=>(const StrokePairing&, const StrokePairing&) = default;
};

/// A type-preserving injective stroke pairing under which no boundary order
/// is reversed on either axis. `mapping` is sorted by (a, b).
struct Pattern {
  std::vector<StrokePairing> mapping;

  std::size_t size() const noexcept { return mapping.size(); }
};

/// Maximum common stroke pattern. Ties in one character may match strict
/// orders in the other. Among maximum patterns the lexicographically least
/// mapping is returned. Both profiles must use the same quantization step.
Pattern common_pattern(const StrokeProfile& a, const StrokeProfile& b);

/// Number of strokes in the maximum common pattern.
std::size_t stroke_weight(const StrokeProfile& a, const StrokeProfile& b);

/// Group index of each stroke's boundaries, per axis: [stroke] -> {l, r} / {t, b}.
struct BoundaryRanks {
  std::vector<std::size_t> left, right, top, bottom;
};

BoundaryRanks boundary_ranks(const Signature& sig, std::size_t stroke_count);

}  // namespace hanzi
