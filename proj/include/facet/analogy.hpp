#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "facet/expansion.hpp"
#include "facet/sparse_matrix.hpp"
#include "facet/vocabulary.hpp"

namespace facet {

/// 100x / (99 + x): maps [0, inf) onto [0, 100).
double squash(double x);

/// squash(m) + squash(d).
double squash_combine(double m, double d);

using ScoreCombiner = std::function<double(double m, double d)>;

struct AnalogyParams {
  ExpansionParams like_side;    // expansion of {like} over the syntactic pair
  ExpansionParams domain_side;  // expansion of {of} over the domain pair
  std::uint32_t result_limit = 10;
  /// Per-side list depth used for intersection; 0 means result_limit * 10.
  std::uint32_t candidate_depth = 0;
  ScoreCombiner combiner = squash_combine;

  std::uint32_t effective_depth() const { return candidate_depth ? candidate_depth : result_limit * 10; }
};

struct AnalogyCandidate {
  WordId word;
  double combined = 0.0;
  double m_score = 0.0;
  double d_score = 0.0;
};

enum class AnalogyStatus : std::uint8_t { Ok, EmptyIntersection };

struct AnalogyResult {
  std::vector<AnalogyCandidate> candidates;  // combined descending, ties by lower word id
  Expansion like_side;
  Expansion domain_side;
  std::uint32_t depth = 0;
  AnalogyStatus status = AnalogyStatus::Ok;
};

/// "What is the `like` of `domain`?" Candidates must appear in both side
/// lists; the two query terms are never returned. Throws UnknownTerm naming
/// the side whose term is not in the vocabulary.
AnalogyResult solve_analogy(const Vocabulary& vocabulary, const MatrixPair& syntactic, const MatrixPair& domain,
                            std::string_view like, std::string_view of, const AnalogyParams& params = {});

}  // namespace facet
