#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace facet {

/// Dense integer id tagged by the table it indexes into.
template <typename Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}

  constexpr auto operator<=>(const Id&) const = default;
};

using WordId = Id<struct WordTag>;
using ContextId = Id<struct ContextTag>;

enum class ContextFamily : std::uint8_t { Syntactic = 0, SentenceCooccurrence = 1 };

const char* family_name(ContextFamily family);

}  // namespace facet

template <typename Tag>
struct std::hash<facet::Id<Tag>> {
  std::size_t operator()(facet::Id<Tag> id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
