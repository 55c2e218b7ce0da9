#include "facet/association.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "facet/error.hpp"

namespace facet {

const char* measure_name(Measure measure) {
  switch (measure) {
    case Measure::Ppmi:
      return "ppmi";
    case Measure::Appmi:
      return "appmi";
  }
  return "unknown";
}

const char* family_name(ContextFamily family) {
  switch (family) {
    case ContextFamily::Syntactic:
      return "syntactic";
    case ContextFamily::SentenceCooccurrence:
      return "sentence";
  }
  return "unknown";
}

CooccurrenceCounts CooccurrenceCounts::from_pairs(std::uint32_t num_words, std::uint32_t num_contexts,
                                                  std::vector<PairCount> pairs) {
  for (const auto& p : pairs) {
    if (p.word.value >= num_words || p.context.value >= num_contexts) {
      throw Error(ErrorKind::OutOfRange, "pair (" + std::to_string(p.word.value) + ", " +
                                             std::to_string(p.context.value) + ") outside " +
                                             std::to_string(num_words) + "x" + std::to_string(num_contexts));
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairCount& a, const PairCount& b) {
    return std::tie(a.word, a.context) < std::tie(b.word, b.context);
  });

  CooccurrenceCounts out;
  out.word_marginals_.assign(num_words, 0);
  out.context_marginals_.assign(num_contexts, 0);
  out.pairs_.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.count == 0) continue;
    if (!out.pairs_.empty() && out.pairs_.back().word == p.word && out.pairs_.back().context == p.context) {
      out.pairs_.back().count += p.count;
    } else {
      out.pairs_.push_back(p);
    }
  }
  for (const auto& p : out.pairs_) {
    out.word_marginals_[p.word.value] += p.count;
    out.context_marginals_[p.context.value] += p.count;
    out.total_ += p.count;
  }
  return out;
}

std::uint64_t CooccurrenceCounts::count(WordId word, ContextId context) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::pair{word, context},
                             [](const PairCount& p, const std::pair<WordId, ContextId>& key) {
                               return std::tie(p.word, p.context) < std::tie(key.first, key.second);
                             });
  if (it == pairs_.end() || it->word != word || it->context != context) return 0;
  return it->count;
}

CellCounts CooccurrenceCounts::cell(WordId word, ContextId context) const {
  return CellCounts{count(word, context), word_marginal(word), context_marginal(context), total_};
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool absent(const CellCounts& cell) { return cell.pair == 0 || cell.total == 0; }

}  // namespace

// The ratios are formed from exact integer products so that scaling every
// count by the same factor yields the same rounded quotient.
double pmi(const CellCounts& cell) {
  if (absent(cell)) return kNegInf;
  const double num = static_cast<double>(cell.pair) * static_cast<double>(cell.total);
  const double den = static_cast<double>(cell.word) * static_cast<double>(cell.context);
  return std::log(num / den);
}

double ppmi(const CellCounts& cell) {
  if (absent(cell)) return 0.0;
  return std::max(0.0, pmi(cell));
}

double apmi(const CellCounts& cell, Direction direction) {
  if (absent(cell)) return kNegInf;
  const double pair = static_cast<double>(cell.pair);
  const double word = static_cast<double>(cell.word);
  const double context = static_cast<double>(cell.context);
  const double num = pair * pair * static_cast<double>(cell.total);
  const double den = direction == Direction::WordToContext ? word * word * context : context * context * word;
  return std::log(num / den);
}

double appmi(const CellCounts& cell, double shift_k, Direction direction) {
  if (absent(cell)) return 0.0;
  return std::max(0.0, apmi(cell, direction) + shift_k);
}

double association(const CellCounts& cell, const AssociationConfig& config) {
  switch (config.measure) {
    case Measure::Ppmi:
      return ppmi(cell);
    case Measure::Appmi:
      return appmi(cell, config.shift_k, config.direction);
  }
  return 0.0;
}

}  // namespace facet
