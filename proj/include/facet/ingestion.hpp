#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "facet/association.hpp"
#include "facet/sparse_matrix.hpp"
#include "facet/vocabulary.hpp"

namespace facet {

/// One raw (word, context) observation.
struct ObservationRecord {
  std::string word;
  std::string context_label;
  std::uint64_t count = 1;
  ContextFamily family = ContextFamily::Syntactic;

  friend bool operator==(const ObservationRecord&, const ObservationRecord&) = default;
};

/// Replaces every surface form in `terms` by `merged` (used to manufacture
/// synthetic polysemy, e.g. cat + denver -> catdenver).
struct SyntheticMerge {
  std::vector<std::string> terms;
  std::string merged;
};

/// Parses `a,b=merged`. Throws InvalidArgument on malformed input.
SyntheticMerge parse_merge(std::string_view text);

struct IngestionConfig {
  std::uint64_t min_word_frequency = 5;
  std::uint64_t min_pair_count = 2;
  bool lowercase = true;
  std::vector<SyntheticMerge> synthetic_merges;
};

struct IngestionResult {
  Vocabulary vocabulary;
  ContextInventory contexts;
  CooccurrenceCounts syntactic;
  CooccurrenceCounts sentence;
  std::uint64_t records = 0;
  std::uint64_t warnings = 0;

  const CooccurrenceCounts& counts(ContextFamily family) const {
    return family == ContextFamily::Syntactic ? syntactic : sentence;
  }
};

/// Streaming count aggregation. Records are normalized (lowercasing,
/// synthetic merges) on arrival and summed per (word, context); thresholds
/// are applied in finish(). Ids are assigned in lexicographic term order so
/// the result does not depend on record order.
class Aggregator {
 public:
  explicit Aggregator(IngestionConfig config = {});

  /// Malformed records (empty word or label, zero count) are skipped and
  /// counted as warnings.
  void add(const ObservationRecord& record);
  void add(std::span<const ObservationRecord> records);
  void note_warning() noexcept { ++warnings_; }

  /// Folds a shard aggregated under the same config into this one.
  void merge(const Aggregator& other);

  std::uint64_t records() const noexcept { return records_; }
  std::uint64_t warnings() const noexcept { return warnings_; }

  IngestionResult finish() const;

 private:
  struct FamilyTable {
    std::unordered_map<std::string, std::uint32_t> words;
    std::unordered_map<std::string, std::uint32_t> labels;
    std::vector<std::string> word_names;
    std::vector<std::string> label_names;
    std::unordered_map<std::uint64_t, std::uint64_t> pairs;

    void add(const std::string& word, const std::string& label, std::uint64_t count);
  };

  std::string normalize_term(std::string_view term) const;
  std::string normalize_label(std::string_view label, ContextFamily family) const;

  IngestionConfig config_;
  std::unordered_map<std::string, std::string> merge_map_;
  FamilyTable tables_[2];
  std::uint64_t records_ = 0;
  std::uint64_t warnings_ = 0;
};

/// Domain contexts: every ordered pair of distinct positions (i, j) yields
/// (tokens[i], context tokens[j]).
std::vector<ObservationRecord> extract_sentence_contexts(std::span<const std::string> tokens);

enum class Pos : std::uint8_t { Noun, Verb, Adjective, Determiner, Other };

struct TaggedToken {
  std::string text;
  Pos pos = Pos::Other;
};

/// Reduced syntactic extractor over adjacent coarse tags:
///   ADJ NOUN            -> (noun, ModifiedBy#adj), (adj, Modifies#noun)
///   VERB [DET|ADJ]* NOUN -> (noun, ObjectOf#verb)
///   NOUN VERB           -> (noun, SubjectOf#verb)
std::vector<ObservationRecord> extract_adjacency_contexts(std::span<const TaggedToken> tokens);

/// Maps Universal / Penn style tags (NOUN, NN*, PROPN, VERB, VB*, ADJ, JJ*,
/// DET, DT) to coarse tags.
Pos parse_pos(std::string_view tag);

using Lexicon = std::unordered_map<std::string, Pos>;

/// Reads `term<TAB>tag` lines.
Lexicon read_lexicon(std::istream& in);

/// Splits a corpus line into tokens. `word/TAG` tokens carry their tag;
/// untagged tokens are looked up in `lexicon`. Underscores join phrases
/// (`los_angeles` -> "los angeles"); surrounding punctuation is stripped.
std::vector<TaggedToken> tokenize_line(std::string_view line, const Lexicon& lexicon, bool lowercase);

/// Reads `word<TAB>context<TAB>count<TAB>family` lines (family is
/// `syntactic` or `sentence`). Bad lines become warnings.
void read_triples(std::istream& in, Aggregator& aggregator);

/// One sentence per line; emits both sentence and adjacency contexts.
void read_corpus(std::istream& in, Aggregator& aggregator, const Lexicon& lexicon);

/// True when the longest common prefix covers more than 80% of the longer
/// string, measured in Unicode scalar values.
bool shares_prefix_lemma(std::string_view a, std::string_view b);

/// Decodes UTF-8; invalid bytes decode as U+FFFD.
std::u32string decode_utf8(std::string_view text);

/// Domain matrices over sentence co-occurrence counts. The C->V side is built
/// like any other; the V->C side keeps only diagonal entries (word == context
/// term) and pairs that pass shares_prefix_lemma.
MatrixPair build_domain_matrices(const CooccurrenceCounts& counts, const Vocabulary& vocabulary,
                                 const ContextInventory& contexts, Measure measure, double shift_k);

}  // namespace facet

namespace facet {

/// Writes records in the triple TSV format read by read_triples.
void write_triples(std::ostream& out, std::span<const ObservationRecord> records);

}  // namespace facet
