#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace facet {

struct Synset {
  std::vector<std::string> variants;
};

enum class CategoryKind : std::uint8_t { Closed, Open };

/// Gold data for one category: pairwise disjoint synsets of lowercase
/// surface forms, the pool seeds are drawn from, and the n of MAP_n.
class GoldSynsetSet {
 public:
  GoldSynsetSet() = default;

  /// Throws InvalidArgument on an empty synset or a variant shared by two
  /// synsets. An empty seed pool defaults to each synset's first variant; an
  /// unset map_n defaults to the synset count.
  GoldSynsetSet(std::string name, std::vector<Synset> synsets, CategoryKind kind = CategoryKind::Closed,
                std::vector<std::string> seed_pool = {}, std::optional<std::uint32_t> map_n = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::span<const Synset> synsets() const noexcept { return synsets_; }
  CategoryKind kind() const noexcept { return kind_; }
  std::span<const std::string> seed_pool() const noexcept { return seed_pool_; }
  std::uint32_t map_n() const noexcept { return map_n_; }

  /// Index of the synset containing `term` (compared lowercase).
  std::optional<std::size_t> synset_of(std::string_view term) const;

 private:
  std::string name_;
  std::vector<Synset> synsets_;
  CategoryKind kind_ = CategoryKind::Closed;
  std::vector<std::string> seed_pool_;
  std::uint32_t map_n_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Gold file format: one synset per line, variants comma separated. Lines
/// starting with '#' are comments. Directives:
///   @name <name>   @kind closed|open   @map-n <n>   @seeds a, b, c
GoldSynsetSet parse_gold(std::istream& in, std::string default_name);
GoldSynsetSet load_gold_file(const std::filesystem::path& path);

/// Category names (file stems of *.txt) available in a gold directory, sorted.
std::vector<std::string> list_categories(const std::filesystem::path& gold_dir);

/// Fraction of the first i items that belong to some synset. Requires
/// 1 <= i <= list.size().
double precision_at(std::span<const std::string> list, const GoldSynsetSet& gold, std::size_t i);

/// Mean over all synsets of the precision at the synset's first hit (0 for
/// synsets never hit).
double mean_average_precision(std::span<const std::string> list, const GoldSynsetSet& gold);

/// Mean over the first n distinct synsets hit; missing ones count as 0.
/// Repeat hits of a seen synset count as gold items but add no sample.
double mean_average_precision_at(std::span<const std::string> list, const GoldSynsetSet& gold, std::uint32_t n);

struct TrialConfig {
  std::uint32_t trials = 50;
  std::uint32_t seeds_per_trial = 3;
  std::uint64_t rng_seed = 0;
};

struct TrialResult {
  std::vector<std::string> seeds;
  double map = 0.0;
  double map_n = 0.0;
};

struct TrialReport {
  std::string category;
  CategoryKind kind = CategoryKind::Closed;
  std::uint32_t map_n = 0;
  std::vector<TrialResult> trials;
  double mean_map = 0.0;
  double mean_map_n = 0.0;

  /// MAP for closed categories, MAP_n for open ones.
  double headline() const noexcept { return kind == CategoryKind::Closed ? mean_map : mean_map_n; }
};

/// Produces a ranked term list from seed terms.
using Expander = std::function<std::vector<std::string>(std::span<const std::string> seeds)>;

/// Draws `count` distinct items from `pool` (partial Fisher-Yates over
/// mt19937_64 output, so the draw is identical on every platform).
std::vector<std::string> sample_seeds(std::span<const std::string> pool, std::uint32_t count, std::mt19937_64& rng);

/// Runs config.trials expansions from random seed draws. Deterministic given
/// the rng seed. Throws InsufficientSeeds when the pool is too small.
TrialReport run_trials(const GoldSynsetSet& gold, const Expander& expander, const TrialConfig& config);

/// Columns: category, trial, seeds, map, map_n; then a `mean` row.
void write_report_tsv(std::ostream& out, const TrialReport& report);

}  // namespace facet
