#include "facet/vocabulary.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "facet/error.hpp"

namespace facet {

namespace {

// Splits `line` at its last tab.
bool split_last_tab(std::string_view line, std::string_view& head, std::string_view& tail) {
  const auto pos = line.rfind('\t');
  if (pos == std::string_view::npos) return false;
  head = line.substr(0, pos);
  tail = line.substr(pos + 1);
  return true;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (auto& ch : out) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return out;
}

WordId Vocabulary::add(std::string_view term, std::uint64_t frequency) {
  auto [it, inserted] = index_.try_emplace(std::string(term), size());
  if (inserted) {
    terms_.emplace_back(term);
    frequencies_.push_back(0);
  }
  frequencies_[it->second] += frequency;
  return WordId{it->second};
}

std::optional<WordId> Vocabulary::find(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return WordId{it->second};
}

const std::string& Vocabulary::term(WordId id) const {
  if (id.value >= size()) throw Error(ErrorKind::OutOfRange, "word id " + std::to_string(id.value) + " out of range");
  return terms_[id.value];
}

std::uint64_t Vocabulary::frequency(WordId id) const {
  if (id.value >= size()) throw Error(ErrorKind::OutOfRange, "word id " + std::to_string(id.value) + " out of range");
  return frequencies_[id.value];
}

void Vocabulary::save(std::ostream& out) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) out << terms_[i] << '\t' << frequencies_[i] << '\n';
}

Vocabulary Vocabulary::load(std::istream& in) {
  Vocabulary vocab;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(std::move(raw));
    std::string_view term, freq_text;
    std::uint64_t freq = 0;
    if (!split_last_tab(line, term, freq_text) || term.empty() ||
        std::from_chars(freq_text.data(), freq_text.data() + freq_text.size(), freq).ec != std::errc{}) {
      throw Error(ErrorKind::Corrupt, "vocabulary line " + std::to_string(line_no) + " is malformed");
    }
    if (vocab.find(term)) {
      throw Error(ErrorKind::Corrupt, "vocabulary line " + std::to_string(line_no) + " repeats a term");
    }
    vocab.add(term, freq);
  }
  return vocab;
}

std::string ContextInventory::key(ContextFamily family, std::string_view label) {
  std::string k;
  k.reserve(label.size() + 2);
  k.push_back(static_cast<char>('0' + static_cast<int>(family)));
  k.push_back('\t');
  k.append(label);
  return k;
}

ContextId ContextInventory::add(ContextFamily family, std::string_view label) {
  auto [it, inserted] = index_.try_emplace(key(family, label), size());
  if (inserted) {
    labels_.emplace_back(label);
    families_.push_back(family);
  }
  return ContextId{it->second};
}

std::optional<ContextId> ContextInventory::find(ContextFamily family, std::string_view label) const {
  auto it = index_.find(key(family, label));
  if (it == index_.end()) return std::nullopt;
  return ContextId{it->second};
}

const std::string& ContextInventory::label(ContextId id) const {
  if (id.value >= size()) throw Error(ErrorKind::OutOfRange, "context id " + std::to_string(id.value) + " out of range");
  return labels_[id.value];
}

ContextFamily ContextInventory::family(ContextId id) const {
  if (id.value >= size()) throw Error(ErrorKind::OutOfRange, "context id " + std::to_string(id.value) + " out of range");
  return families_[id.value];
}

void ContextInventory::save(std::ostream& out) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) out << labels_[i] << '\t' << family_name(families_[i]) << '\n';
}

ContextInventory ContextInventory::load(std::istream& in) {
  ContextInventory inventory;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(std::move(raw));
    std::string_view label, family_text;
    if (!split_last_tab(line, label, family_text) || label.empty()) {
      throw Error(ErrorKind::Corrupt, "context line " + std::to_string(line_no) + " is malformed");
    }
    ContextFamily family;
    if (family_text == "syntactic") {
      family = ContextFamily::Syntactic;
    } else if (family_text == "sentence") {
      family = ContextFamily::SentenceCooccurrence;
    } else {
      throw Error(ErrorKind::Corrupt, "context line " + std::to_string(line_no) + " has unknown family");
    }
    if (inventory.find(family, label)) {
      throw Error(ErrorKind::Corrupt, "context line " + std::to_string(line_no) + " repeats a label");
    }
    inventory.add(family, label);
  }
  return inventory;
}

}  // namespace facet
