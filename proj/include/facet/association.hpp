#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "facet/ids.hpp"

namespace facet {

enum class Measure : std::uint8_t { Ppmi = 0, Appmi = 1 };
enum class Direction : std::uint8_t { WordToContext = 0, ContextToWord = 1 };

const char* measure_name(Measure measure);

inline constexpr double kDefaultShift = 5.0;

struct PairCount {
  WordId word;
  ContextId context;
  std::uint64_t count = 0;
};

/// The four counts every association measure is estimated from.
struct CellCounts {
  std::uint64_t pair = 0;
  std::uint64_t word = 0;
  std::uint64_t context = 0;
  std::uint64_t total = 0;
};

/// Aggregated (word, context) counts with their marginals. Immutable once
/// built; pairs are kept sorted by (word, context) and every stored count
/// is positive.
class CooccurrenceCounts {
 public:
  CooccurrenceCounts() = default;

  /// Sums duplicate cells, drops zero counts and recomputes the marginals.
  /// Throws OutOfRange if an id is not below the given dimensions.
  static CooccurrenceCounts from_pairs(std::uint32_t num_words, std::uint32_t num_contexts,
                                       std::vector<PairCount> pairs);

  std::uint32_t num_words() const noexcept { return static_cast<std::uint32_t>(word_marginals_.size()); }
  std::uint32_t num_contexts() const noexcept { return static_cast<std::uint32_t>(context_marginals_.size()); }
  std::span<const PairCount> pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }

  std::uint64_t count(WordId word, ContextId context) const;
  std::uint64_t word_marginal(WordId word) const { return word_marginals_.at(word.value); }
  std::uint64_t context_marginal(ContextId context) const { return context_marginals_.at(context.value); }
  std::uint64_t total() const noexcept { return total_; }

  CellCounts cell(WordId word, ContextId context) const;

 private:
  std::vector<PairCount> pairs_;
  std::vector<std::uint64_t> word_marginals_;
  std::vector<std::uint64_t> context_marginals_;
  std::uint64_t total_ = 0;
};

struct AssociationConfig {
  Measure measure = Measure::Appmi;
  double shift_k = kDefaultShift;
  Direction direction = Direction::WordToContext;
};

// Probabilities are maximum-likelihood estimates (count / total) and logs are
// natural. An absent pair has pmi and apmi of -infinity; the clipped measures
// map it to 0.

double pmi(const CellCounts& cell);
double ppmi(const CellCounts& cell);

/// Asymmetric PMI: log(P(w,c)^2 / (P(w)^2 P(c))) for WordToContext. The
/// ContextToWord direction squares P(c) instead.
double apmi(const CellCounts& cell, Direction direction = Direction::WordToContext);
double appmi(const CellCounts& cell, double shift_k, Direction direction = Direction::WordToContext);

double association(const CellCounts& cell, const AssociationConfig& config);

inline double pmi(const CooccurrenceCounts& counts, WordId w, ContextId c) { return pmi(counts.cell(w, c)); }
inline double ppmi(const CooccurrenceCounts& counts, WordId w, ContextId c) { return ppmi(counts.cell(w, c)); }
inline double apmi(const CooccurrenceCounts& counts, WordId w, ContextId c,
                   Direction direction = Direction::WordToContext) {
  return apmi(counts.cell(w, c), direction);
}
inline double appmi(const CooccurrenceCounts& counts, WordId w, ContextId c, double shift_k,
                    Direction direction = Direction::WordToContext) {
  return appmi(counts.cell(w, c), shift_k, direction);
}

}  // namespace facet
