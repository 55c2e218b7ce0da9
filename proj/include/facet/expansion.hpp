#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "facet/ids.hpp"
#include "facet/sparse_matrix.hpp"
#include "facet/vocabulary.hpp"

namespace facet {

struct ExpansionParams {
  double rho = 3.0;             // limited support penalty
  std::uint32_t n = 100;        // context footprint
  std::uint32_t result_limit = 100;
  bool include_seeds = false;
};

/// Throws InvalidArgument for rho < 0, n == 0 or result_limit == 0.
void validate(const ExpansionParams& params);

struct SeedSet {
  std::vector<WordId> resolved;          // distinct, in input order
  std::vector<std::string> unresolved;   // input terms not in the vocabulary
};

/// Looks up each (lowercased) term. Duplicates resolve once.
SeedSet resolve_seeds(const Vocabulary& vocabulary, std::span<const std::string> terms, bool lowercase = true);

struct FocusEntry {
  ContextId context;
  double activation = 0.0;  // a(c): summed seed scores
  double support = 0.0;     // f(c): fraction of seeds with a positive score
  double score = 0.0;       // s(c) = f(c)^rho * a(c)
  double weight = 0.0;      // W[c] = f(c)^rho
};

/// The retained contexts, best score first (ties: lower context id first).
struct ContextFocus {
  std::vector<FocusEntry> entries;

  bool empty() const noexcept { return entries.empty(); }
  std::size_t size() const noexcept { return entries.size(); }
};

/// Scores every context touched by a seed row and keeps the n best.
/// Throws NoSeeds when `seeds.resolved` is empty.
ContextFocus compute_focus(const SparseAssociationMatrix& word_rows, const SeedSet& seeds,
                           const ExpansionParams& params);

enum class ExpansionStatus : std::uint8_t {
  Ok,
  EmptyFocus,    // the seeds activate no context
  NoCandidates,  // contexts were found but yield no non-seed term
};

const char* status_reason(ExpansionStatus status);

struct ScoredTerm {
  WordId word;
  double score = 0.0;
};

struct Expansion {
  std::vector<ScoredTerm> terms;  // score descending, ties by lower word id
  ContextFocus focus;
  ExpansionStatus status = ExpansionStatus::Ok;
};

/// Focused expansion: every term w is scored by
///   sum over focus contexts c of context_rows[c, w] * W[c] * a(c),
/// i.e. the sum of its focused similarity to each seed.
Expansion expand(const SparseAssociationMatrix& context_rows, const SparseAssociationMatrix& word_rows,
                 const SeedSet& seeds, const ExpansionParams& params);

/// Same accumulation with a caller-supplied focus.
Expansion expand_with_focus(const SparseAssociationMatrix& context_rows, const SeedSet& seeds, ContextFocus focus,
                            const ExpansionParams& params);

}  // namespace facet
