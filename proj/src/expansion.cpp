#include "facet/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "facet/error.hpp"

namespace facet {

void validate(const ExpansionParams& params) {
  if (!(params.rho >= 0.0) || !std::isfinite(params.rho)) {
    throw Error(ErrorKind::InvalidArgument, "rho must be finite and >= 0");
  }
  if (params.n == 0) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  if (params.result_limit == 0) throw Error(ErrorKind::InvalidArgument, "result limit must be at least 1");
}

SeedSet resolve_seeds(const Vocabulary& vocabulary, std::span<const std::string> terms, bool lowercase) {
  SeedSet seeds;
  for (const auto& raw : terms) {
    const std::string term = lowercase ? to_lower(raw) : raw;
    if (auto id = vocabulary.find(term)) {
      if (std::find(seeds.resolved.begin(), seeds.resolved.end(), *id) == seeds.resolved.end()) {
        seeds.resolved.push_back(*id);
      }
    } else {
      seeds.unresolved.push_back(raw);
    }
  }
  return seeds;
}

const char* status_reason(ExpansionStatus status) {
  switch (status) {
    case ExpansionStatus::Ok:
      return "ok";
    case ExpansionStatus::EmptyFocus:
      return "the seeds share no active context";
    case ExpansionStatus::NoCandidates:
      return "no term besides the seeds is reachable";
  }
  return "unknown";
}

namespace {

void require_seeds(const SeedSet& seeds) {
  if (seeds.resolved.empty()) throw Error(ErrorKind::NoSeeds, "no seed term is in the vocabulary");
}

}  // namespace

ContextFocus compute_focus(const SparseAssociationMatrix& word_rows, const SeedSet& seeds,
                           const ExpansionParams& params) {
  validate(params);
  require_seeds(seeds);
  if (word_rows.header().orientation != Orientation::WordRows) {
    throw Error(ErrorKind::InvalidArgument, "focus needs the word-rows matrix");
  }

  struct Hit {
    std::uint32_t context;
    float score;
  };
  std::vector<Hit> hits;
  for (const WordId seed : seeds.resolved) {
    const RowView row = word_rows.row(seed.value);
    for (std::size_t i = 0; i < row.size(); ++i) hits.push_back({row.columns[i], row.scores[i]});
  }
  // Stable: per-context sums run in seed order.
  std::stable_sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.context < b.context; });

  const double seed_count = static_cast<double>(seeds.resolved.size());
  ContextFocus focus;
  for (std::size_t i = 0; i < hits.size();) {
    FocusEntry entry;
    entry.context = ContextId{hits[i].context};
    std::size_t supporting = 0;
    for (; i < hits.size() && hits[i].context == entry.context.value; ++i) {
      entry.activation += hits[i].score;
      ++supporting;
    }
    entry.support = static_cast<double>(supporting) / seed_count;
    entry.weight = std::pow(entry.support, params.rho);
    entry.score = entry.weight * entry.activation;
    focus.entries.push_back(entry);
  }

  const auto better = [](const FocusEntry& a, const FocusEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.context < b.context;
  };
  const std::size_t keep = std::min<std::size_t>(params.n, focus.entries.size());
  std::partial_sort(focus.entries.begin(), focus.entries.begin() + static_cast<std::ptrdiff_t>(keep),
                    focus.entries.end(), better);
  focus.entries.resize(keep);
  return focus;
}

Expansion expand_with_focus(const SparseAssociationMatrix& context_rows, const SeedSet& seeds, ContextFocus focus,
                            const ExpansionParams& params) {
  validate(params);
  require_seeds(seeds);
  if (context_rows.header().orientation != Orientation::ContextRows) {
    throw Error(ErrorKind::InvalidArgument, "expansion needs the context-rows matrix");
  }

  Expansion result;
  result.focus = std::move(focus);
  if (result.focus.empty()) {
    result.status = ExpansionStatus::EmptyFocus;
    return result;
  }

  // Fixed reduction order: contexts by ascending id.
  std::vector<const FocusEntry*> order;
  order.reserve(result.focus.size());
  for (const auto& e : result.focus.entries) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const FocusEntry* a, const FocusEntry* b) { return a->context < b->context; });

  std::vector<double> acc(context_rows.cols(), 0.0);
  std::vector<std::uint32_t> touched;
  for (const FocusEntry* e : order) {
    const double coef = e->weight * e->activation;
    if (coef == 0.0) continue;
    const RowView row = context_rows.row(e->context.value);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto w = row.columns[i];
      if (acc[w] == 0.0) touched.push_back(w);
      acc[w] += coef * static_cast<double>(row.scores[i]);
    }
  }

  std::unordered_set<std::uint32_t> seed_ids;
  if (!params.include_seeds) {
    for (const auto s : seeds.resolved) seed_ids.insert(s.value);
  }
  for (const auto w : touched) {
    if (acc[w] > 0.0 && !seed_ids.contains(w)) result.terms.push_back({WordId{w}, acc[w]});
  }
  const auto better = [](const ScoredTerm& a, const ScoredTerm& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.word < b.word;
  };
  const std::size_t keep = std::min<std::size_t>(params.result_limit, result.terms.size());
  std::partial_sort(result.terms.begin(), result.terms.begin() + static_cast<std::ptrdiff_t>(keep),
                    result.terms.end(), better);
  result.terms.resize(keep);
  if (result.terms.empty()) result.status = ExpansionStatus::NoCandidates;
  return result;
}

Expansion expand(const SparseAssociationMatrix& context_rows, const SparseAssociationMatrix& word_rows,
                 const SeedSet& seeds, const ExpansionParams& params) {
  if (context_rows.rows() != word_rows.cols() || context_rows.cols() != word_rows.rows()) {
    throw Error(ErrorKind::MismatchedMatrices, "expansion matrices have incompatible shapes");
  }
  return expand_with_focus(context_rows, seeds, compute_focus(word_rows, seeds, params), params);
}

}  // namespace facet
