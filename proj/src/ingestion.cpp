#include "facet/ingestion.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <map>
#include <optional>
#include <set>

#include "facet/error.hpp"

namespace facet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t pair_key(std::uint32_t word, std::uint32_t label) {
  return (static_cast<std::uint64_t>(word) << 32) | label;
}

}  // namespace

SyntheticMerge parse_merge(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "merge must look like a,b=merged");
  SyntheticMerge merge;
  merge.merged = std::string(trim(text.substr(eq + 1)));
  for (auto part : split(text.substr(0, eq), ',')) {
    part = trim(part);
    if (!part.empty()) merge.terms.emplace_back(part);
  }
  if (merge.merged.empty() || merge.terms.empty()) {
    throw Error(ErrorKind::InvalidArgument, "merge must look like a,b=merged");
  }
  return merge;
}

Aggregator::Aggregator(IngestionConfig config) : config_(std::move(config)) {
  for (const auto& merge : config_.synthetic_merges) {
    const std::string target = config_.lowercase ? to_lower(merge.merged) : merge.merged;
    for (const auto& term : merge.terms) merge_map_[config_.lowercase ? to_lower(term) : term] = target;
  }
}

std::string Aggregator::normalize_term(std::string_view term) const {
  std::string out = config_.lowercase ? to_lower(term) : std::string(term);
  if (auto it = merge_map_.find(out); it != merge_map_.end()) return it->second;
  return out;
}

std::string Aggregator::normalize_label(std::string_view label, ContextFamily family) const {
  if (family == ContextFamily::SentenceCooccurrence) return normalize_term(label);
  const auto hash = label.find('#');
  if (hash == std::string_view::npos) return normalize_term(label);
  return std::string(label.substr(0, hash + 1)) + normalize_term(label.substr(hash + 1));
}

void Aggregator::FamilyTable::add(const std::string& word, const std::string& label, std::uint64_t count) {
  auto [w, w_new] = words.try_emplace(word, static_cast<std::uint32_t>(word_names.size()));
  if (w_new) word_names.push_back(word);
  auto [l, l_new] = labels.try_emplace(label, static_cast<std::uint32_t>(label_names.size()));
  if (l_new) label_names.push_back(label);
  pairs[pair_key(w->second, l->second)] += count;
}

void Aggregator::add(const ObservationRecord& record) {
  ++records_;
  if (record.word.empty() || record.context_label.empty() || record.count == 0) {
    ++warnings_;
    return;
  }
  const std::string word = normalize_term(record.word);
  const std::string label = normalize_label(record.context_label, record.family);
  if (word.empty() || label.empty()) {
    ++warnings_;
    return;
  }
  tables_[static_cast<int>(record.family)].add(word, label, record.count);
}

void Aggregator::add(std::span<const ObservationRecord> records) {
  for (const auto& r : records) add(r);
}

void Aggregator::merge(const Aggregator& other) {
  for (int f = 0; f < 2; ++f) {
    const auto& src = other.tables_[f];
    for (const auto& [key, count] : src.pairs) {
      tables_[f].add(src.word_names[key >> 32], src.label_names[key & 0xffffffffU], count);
    }
  }
  records_ += other.records_;
  warnings_ += other.warnings_;
}

IngestionResult Aggregator::finish() const {
  IngestionResult result;
  result.records = records_;
  result.warnings = warnings_;

  struct Survivor {
    std::string word;
    std::string label;
    std::uint64_t count;
  };
  std::vector<Survivor> survivors[2];
  std::map<std::string, std::uint64_t> word_frequency;  // sorted: fixes id order
  std::set<std::string> labels[2];

  for (int f = 0; f < 2; ++f) {
    const auto& table = tables_[f];
    std::vector<std::uint64_t> freq(table.word_names.size(), 0);
    for (const auto& [key, count] : table.pairs) freq[key >> 32] += count;
    for (const auto& [key, count] : table.pairs) {
      const auto w = static_cast<std::uint32_t>(key >> 32);
      if (freq[w] < config_.min_word_frequency || count < config_.min_pair_count) continue;
      survivors[f].push_back({table.word_names[w], table.label_names[key & 0xffffffffU], count});
      word_frequency.try_emplace(table.word_names[w], 0);
      labels[f].insert(table.label_names[key & 0xffffffffU]);
    }
  }
  // Corpus frequency of a surviving term: its pre-threshold count summed over
  // both families.
  for (int f = 0; f < 2; ++f) {
    const auto& table = tables_[f];
    for (const auto& [key, count] : table.pairs) {
      if (auto it = word_frequency.find(table.word_names[key >> 32]); it != word_frequency.end()) it->second += count;
    }
  }
  for (const auto& [term, freq] : word_frequency) result.vocabulary.add(term, freq);
  for (int f = 0; f < 2; ++f) {
    for (const auto& label : labels[f]) result.contexts.add(static_cast<ContextFamily>(f), label);
  }

  for (int f = 0; f < 2; ++f) {
    std::vector<PairCount> pairs;
    pairs.reserve(survivors[f].size());
    for (const auto& s : survivors[f]) {
      pairs.push_back({*result.vocabulary.find(s.word), *result.contexts.find(static_cast<ContextFamily>(f), s.label),
                       s.count});
    }
    auto counts = CooccurrenceCounts::from_pairs(result.vocabulary.size(), result.contexts.size(), std::move(pairs));
    (f == 0 ? result.syntactic : result.sentence) = std::move(counts);
  }
  return result;
}

std::vector<ObservationRecord> extract_sentence_contexts(std::span<const std::string> tokens) {
  std::vector<ObservationRecord> out;
  if (tokens.size() < 2) return out;
  out.reserve(tokens.size() * (tokens.size() - 1));
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (std::size_t j = 0; j < tokens.size(); ++j) {
      if (i != j) out.push_back({tokens[i], tokens[j], 1, ContextFamily::SentenceCooccurrence});
    }
  }
  return out;
}

std::vector<ObservationRecord> extract_adjacency_contexts(std::span<const TaggedToken> tokens) {
  std::vector<ObservationRecord> out;
  const auto emit = [&out](const std::string& word, const char* relation, const std::string& head) {
    out.push_back({word, std::string(relation) + "#" + head, 1, ContextFamily::Syntactic});
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    const bool has_next = i + 1 < tokens.size();
    if (tok.pos == Pos::Adjective && has_next && tokens[i + 1].pos == Pos::Noun) {
      emit(tokens[i + 1].text, "ModifiedBy", tok.text);
      emit(tok.text, "Modifies", tokens[i + 1].text);
    } else if (tok.pos == Pos::Verb) {
      std::size_t j = i + 1;
      while (j < tokens.size() && (tokens[j].pos == Pos::Determiner || tokens[j].pos == Pos::Adjective)) ++j;
      if (j < tokens.size() && tokens[j].pos == Pos::Noun) emit(tokens[j].text, "ObjectOf", tok.text);
    } else if (tok.pos == Pos::Noun && has_next && tokens[i + 1].pos == Pos::Verb) {
      emit(tok.text, "SubjectOf", tokens[i + 1].text);
    }
  }
  return out;
}

Pos parse_pos(std::string_view tag) {
  const std::string t = to_lower(tag);
  if (t == "noun" || t == "propn" || t == "n" || t.starts_with("nn")) return Pos::Noun;
  if (t == "verb" || t == "v" || t.starts_with("vb")) return Pos::Verb;
  if (t == "adj" || t == "a" || t.starts_with("jj")) return Pos::Adjective;
  if (t == "det" || t == "dt") return Pos::Determiner;
  return Pos::Other;
}

Lexicon read_lexicon(std::istream& in) {
  Lexicon lexicon;
  std::string line;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    lexicon[to_lower(trim(std::string_view(line).substr(0, tab)))] = parse_pos(trim(std::string_view(line).substr(tab + 1)));
  }
  return lexicon;
}

std::vector<TaggedToken> tokenize_line(std::string_view line, const Lexicon& lexicon, bool lowercase) {
  constexpr std::string_view kPunct = ".,;:!?\"'()[]{}";
  std::vector<TaggedToken> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    std::string_view raw = line.substr(pos, end - pos);
    pos = end;
    if (raw.empty()) continue;

    std::optional<Pos> tag;
    if (const auto slash = raw.rfind('/'); slash != std::string_view::npos && slash > 0 && slash + 1 < raw.size()) {
      tag = parse_pos(raw.substr(slash + 1));
      raw = raw.substr(0, slash);
    }
    while (!raw.empty() && kPunct.find(raw.front()) != std::string_view::npos) raw.remove_prefix(1);
    while (!raw.empty() && kPunct.find(raw.back()) != std::string_view::npos) raw.remove_suffix(1);
    if (raw.empty()) continue;

    std::string text = lowercase ? to_lower(raw) : std::string(raw);
    std::replace(text.begin(), text.end(), '_', ' ');
    if (!tag) {
      auto it = lexicon.find(to_lower(text));
      tag = it == lexicon.end() ? Pos::Other : it->second;
    }
    tokens.push_back({std::move(text), *tag});
  }
  return tokens;
}

void read_triples(std::istream& in, Aggregator& aggregator) {
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    const auto fields = split(view, '\t');
    std::uint64_t count = 0;
    if (fields.size() != 4 ||
        std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), count).ec != std::errc{} ||
        (fields[3] != "syntactic" && fields[3] != "sentence")) {
      aggregator.note_warning();
      continue;
    }
    const auto family = fields[3] == "syntactic" ? ContextFamily::Syntactic : ContextFamily::SentenceCooccurrence;
    aggregator.add(ObservationRecord{std::string(fields[0]), std::string(fields[1]), count, family});
  }
}

void read_corpus(std::istream& in, Aggregator& aggregator, const Lexicon& lexicon) {
  std::string line;
  std::vector<std::string> words;
  while (std::getline(in, line)) {
    const auto tokens = tokenize_line(line, lexicon, /*lowercase=*/false);
    words.clear();
    for (const auto& t : tokens) words.push_back(t.text);
    aggregator.add(extract_sentence_contexts(words));
    aggregator.add(extract_adjacency_contexts(tokens));
  }
}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    int len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xe0) == 0xc0) {
      len = 2;
      cp = b0 & 0x1f;
    } else if ((b0 & 0xf0) == 0xe0) {
      len = 3;
      cp = b0 & 0x0f;
    } else if ((b0 & 0xf8) == 0xf0) {
      len = 4;
      cp = b0 & 0x07;
    }
    bool ok = len > 0 && i + len <= text.size();
    for (int k = 1; ok && k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xc0) != 0x80) ok = false;
      cp = (cp << 6) | (b & 0x3f);
    }
    if (!ok) {
      out.push_back(U'\uFFFD');
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

bool shares_prefix_lemma(std::string_view a, std::string_view b) {
  const auto ua = decode_utf8(a);
  const auto ub = decode_utf8(b);
  const std::size_t longer = std::max(ua.size(), ub.size());
  if (longer == 0) return false;
  const auto mismatch = std::mismatch(ua.begin(), ua.end(), ub.begin(), ub.end());
  const auto common = static_cast<std::size_t>(mismatch.first - ua.begin());
  // common / longer > 0.8, kept in integers
  return common * 5 > longer * 4;
}

MatrixPair build_domain_matrices(const CooccurrenceCounts& counts, const Vocabulary& vocabulary,
                                 const ContextInventory& contexts, Measure measure, double shift_k) {
  MatrixPair pair = build_matrices(counts, measure, shift_k, ContextFamily::SentenceCooccurrence);
  const auto& full = pair.word_rows;
  MatrixHeader header = full.header();
  header.prefix_masked = true;
  CsrBuilder masked(header);
  for (std::uint32_t w = 0; w < full.rows(); ++w) {
    const RowView row = full.row(w);
    const std::string& term = vocabulary.term(WordId{w});
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& label = contexts.label(ContextId{row.columns[i]});
      if (label == term || shares_prefix_lemma(term, label)) masked.push(row.columns[i], row.scores[i]);
    }
    masked.end_row();
  }
  pair.word_rows = std::move(masked).finish();
  return pair;
}

}  // namespace facet

namespace facet {

void write_triples(std::ostream& out, std::span<const ObservationRecord> records) {
  for (const auto& r : records) {
    out << r.word << '\t' << r.context_label << '\t' << r.count << '\t' << family_name(r.family) << '\n';
  }
}

}  // namespace facet
