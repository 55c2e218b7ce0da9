#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "facet/ids.hpp"

namespace facet {

/// Term <-> WordId bijection with dense ids and per-term corpus frequency.
class Vocabulary {
 public:
  /// Returns the id of `term`, inserting it if new. Frequency accumulates.
  WordId add(std::string_view term, std::uint64_t frequency = 0);

  std::optional<WordId> find(std::string_view term) const;
  const std::string& term(WordId id) const;
  std::uint64_t frequency(WordId id) const;
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(terms_.size()); }

  // One `term<TAB>frequency` line per id, in id order.
  void save(std::ostream& out) const;
  static Vocabulary load(std::istream& in);

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.terms_ == b.terms_ && a.frequencies_ == b.frequencies_;
  }

 private:
  std::vector<std::string> terms_;
  std::vector<std::uint64_t> frequencies_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Context label <-> ContextId bijection. Each context belongs to exactly one
/// family; the same label may exist once per family.
class ContextInventory {
 public:
  ContextId add(ContextFamily family, std::string_view label);

  std::optional<ContextId> find(ContextFamily family, std::string_view label) const;
  const std::string& label(ContextId id) const;
  ContextFamily family(ContextId id) const;
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(labels_.size()); }

  // One `label<TAB>family` line per id, in id order.
  void save(std::ostream& out) const;
  static ContextInventory load(std::istream& in);

  friend bool operator==(const ContextInventory& a, const ContextInventory& b) {
    return a.labels_ == b.labels_ && a.families_ == b.families_;
  }

 private:
  static std::string key(ContextFamily family, std::string_view label);

  std::vector<std::string> labels_;
  std::vector<ContextFamily> families_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// ASCII lowercasing; bytes of multi-byte UTF-8 sequences pass through.
std::string to_lower(std::string_view text);

}  // namespace facet
