#include "facet/analogy.hpp"

#include <algorithm>
#include <unordered_map>

#include "facet/error.hpp"

namespace facet {

// Rewritten for huge x so 100x cannot overflow to inf/inf.
double squash(double x) { return x < 1e300 ? 100.0 * x / (99.0 + x) : 100.0 - 9900.0 / (99.0 + x); }

double squash_combine(double m, double d) { return squash(m) + squash(d); }

AnalogyResult solve_analogy(const Vocabulary& vocabulary, const MatrixPair& syntactic, const MatrixPair& domain,
                            std::string_view like, std::string_view of, const AnalogyParams& params) {
  if (params.result_limit == 0) throw Error(ErrorKind::InvalidArgument, "result limit must be at least 1");
  const std::string like_term = to_lower(like);
  const std::string of_term = to_lower(of);
  if (like_term.empty() || of_term.empty()) throw Error(ErrorKind::InvalidArgument, "analogy terms must be non-empty");
  const auto like_id = vocabulary.find(like_term);
  if (!like_id) throw Error(ErrorKind::UnknownTerm, "like term '" + like_term + "' is not in the vocabulary");
  const auto of_id = vocabulary.find(of_term);
  if (!of_id) throw Error(ErrorKind::UnknownTerm, "of term '" + of_term + "' is not in the vocabulary");

  AnalogyResult result;
  result.depth = params.effective_depth();

  ExpansionParams like_params = params.like_side;
  like_params.result_limit = result.depth;
  ExpansionParams of_params = params.domain_side;
  of_params.result_limit = result.depth;

  result.like_side = expand(syntactic.context_rows, syntactic.word_rows, SeedSet{{*like_id}, {}}, like_params);
  result.domain_side = expand(domain.context_rows, domain.word_rows, SeedSet{{*of_id}, {}}, of_params);

  std::unordered_map<std::uint32_t, double> d_scores;
  for (const auto& t : result.domain_side.terms) d_scores.emplace(t.word.value, t.score);
  for (const auto& t : result.like_side.terms) {
    if (t.word == *like_id || t.word == *of_id) continue;
    auto it = d_scores.find(t.word.value);
    if (it == d_scores.end()) continue;
    result.candidates.push_back({t.word, params.combiner(t.score, it->second), t.score, it->second});
  }
  std::sort(result.candidates.begin(), result.candidates.end(), [](const auto& a, const auto& b) {
    if (a.combined != b.combined) return a.combined > b.combined;
    return a.word < b.word;
  });
  if (result.candidates.size() > params.result_limit) result.candidates.resize(params.result_limit);
  if (result.candidates.empty()) result.status = AnalogyStatus::EmptyIntersection;
  return result;
}

}  // namespace facet
