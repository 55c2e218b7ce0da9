#include "facet/evaluation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "facet/error.hpp"
#include "facet/vocabulary.hpp"

namespace facet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_terms(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto pos = s.find(',', start);
    if (pos == std::string_view::npos) pos = s.size();
    const auto part = trim(s.substr(start, pos - start));
    if (!part.empty()) out.push_back(to_lower(part));
    start = pos + 1;
  }
  return out;
}

}  // namespace

GoldSynsetSet::GoldSynsetSet(std::string name, std::vector<Synset> synsets, CategoryKind kind,
                             std::vector<std::string> seed_pool, std::optional<std::uint32_t> map_n)
    : name_(std::move(name)), synsets_(std::move(synsets)), kind_(kind), seed_pool_(std::move(seed_pool)) {
  for (std::size_t i = 0; i < synsets_.size(); ++i) {
    auto& variants = synsets_[i].variants;
    if (variants.empty()) throw Error(ErrorKind::InvalidArgument, name_ + ": synset " + std::to_string(i) + " is empty");
    for (auto& v : variants) {
      v = to_lower(v);
      auto [it, inserted] = index_.emplace(v, i);
      if (!inserted && it->second != i) {
        throw Error(ErrorKind::InvalidArgument, name_ + ": '" + v + "' appears in two synsets");
      }
    }
  }
  if (seed_pool_.empty()) {
    for (const auto& s : synsets_) seed_pool_.push_back(s.variants.front());
  } else {
    for (auto& s : seed_pool_) s = to_lower(s);
  }
  map_n_ = map_n.value_or(static_cast<std::uint32_t>(synsets_.size()));
  if (map_n_ == 0) throw Error(ErrorKind::InvalidArgument, name_ + ": map-n must be at least 1");
}

std::optional<std::size_t> GoldSynsetSet::synset_of(std::string_view term) const {
  auto it = index_.find(to_lower(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GoldSynsetSet parse_gold(std::istream& in, std::string default_name) {
  std::string name = std::move(default_name);
  CategoryKind kind = CategoryKind::Closed;
  std::optional<std::uint32_t> map_n;
  std::vector<std::string> seeds;
  std::vector<Synset> synsets;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '@') {
      const auto space = line.find_first_of(" \t");
      const auto key = line.substr(1, space == std::string_view::npos ? std::string_view::npos : space - 1);
      const auto value = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
      if (key == "name") {
        name = std::string(value);
      } else if (key == "kind") {
        if (value == "closed") {
          kind = CategoryKind::Closed;
        } else if (value == "open") {
          kind = CategoryKind::Open;
        } else {
          throw Error(ErrorKind::Corrupt, "gold line " + std::to_string(line_no) + ": kind must be closed or open");
        }
      } else if (key == "map-n") {
        std::uint32_t n = 0;
        if (std::from_chars(value.data(), value.data() + value.size(), n).ec != std::errc{} || n == 0) {
          throw Error(ErrorKind::Corrupt, "gold line " + std::to_string(line_no) + ": bad map-n");
        }
        map_n = n;
      } else if (key == "seeds") {
        seeds = split_terms(value);
      } else {
        throw Error(ErrorKind::Corrupt, "gold line " + std::to_string(line_no) + ": unknown directive");
      }
      continue;
    }
    synsets.push_back(Synset{split_terms(line)});
  }
  return GoldSynsetSet(std::move(name), std::move(synsets), kind, std::move(seeds), map_n);
}

GoldSynsetSet load_gold_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open gold file " + path.string());
  return parse_gold(in, path.stem().string());
}

std::vector<std::string> list_categories(const std::filesystem::path& gold_dir) {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(gold_dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

double precision_at(std::span<const std::string> list, const GoldSynsetSet& gold, std::size_t i) {
  if (i == 0 || i > list.size()) {
    throw Error(ErrorKind::InvalidArgument, "precision index " + std::to_string(i) + " outside [1, " +
                                                std::to_string(list.size()) + "]");
  }
  std::size_t hits = 0;
  for (std::size_t k = 0; k < i; ++k) hits += gold.synset_of(list[k]).has_value();
  return static_cast<double>(hits) / static_cast<double>(i);
}

namespace {

// Precision at each synset's first hit, in order of first appearance.
std::vector<double> first_hit_precisions(std::span<const std::string> list, const GoldSynsetSet& gold,
                                         std::size_t limit) {
  std::vector<double> out;
  std::unordered_set<std::size_t> seen;
  std::size_t hits = 0;
  for (std::size_t k = 0; k < list.size() && out.size() < limit; ++k) {
    const auto synset = gold.synset_of(list[k]);
    if (!synset) continue;
    ++hits;
    if (seen.insert(*synset).second) out.push_back(static_cast<double>(hits) / static_cast<double>(k + 1));
  }
  return out;
}

double sum(const std::vector<double>& values) {
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

}  // namespace

double mean_average_precision(std::span<const std::string> list, const GoldSynsetSet& gold) {
  if (gold.synsets().empty()) return 0.0;
  return sum(first_hit_precisions(list, gold, gold.synsets().size())) / static_cast<double>(gold.synsets().size());
}

double mean_average_precision_at(std::span<const std::string> list, const GoldSynsetSet& gold, std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "MAP_n needs n >= 1");
  return sum(first_hit_precisions(list, gold, n)) / static_cast<double>(n);
}

std::vector<std::string> sample_seeds(std::span<const std::string> pool, std::uint32_t count, std::mt19937_64& rng) {
  if (count > pool.size()) {
    throw Error(ErrorKind::InsufficientSeeds, "seed pool has " + std::to_string(pool.size()) + " items, " +
                                                  std::to_string(count) + " requested");
  }
  std::vector<std::string> items(pool.begin(), pool.end());
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto span = items.size() - i;
    const auto pick = i + static_cast<std::size_t>(rng() % span);
    std::swap(items[i], items[pick]);
  }
  items.resize(count);
  return items;
}

TrialReport run_trials(const GoldSynsetSet& gold, const Expander& expander, const TrialConfig& config) {
  if (config.seeds_per_trial == 0) throw Error(ErrorKind::InvalidArgument, "seeds per trial must be at least 1");
  if (config.seeds_per_trial > gold.seed_pool().size()) {
    throw Error(ErrorKind::InsufficientSeeds, gold.name() + ": seed pool has " +
                                                  std::to_string(gold.seed_pool().size()) + " items, " +
                                                  std::to_string(config.seeds_per_trial) + " needed per trial");
  }
  TrialReport report;
  report.category = gold.name();
  report.kind = gold.kind();
  report.map_n = gold.map_n();
  std::mt19937_64 rng(config.rng_seed);
  for (std::uint32_t t = 0; t < config.trials; ++t) {
    TrialResult trial;
    trial.seeds = sample_seeds(gold.seed_pool(), config.seeds_per_trial, rng);
    const auto list = expander(trial.seeds);
    trial.map = mean_average_precision(list, gold);
    trial.map_n = mean_average_precision_at(list, gold, gold.map_n());
    report.trials.push_back(std::move(trial));
  }
  for (const auto& t : report.trials) {
    report.mean_map += t.map;
    report.mean_map_n += t.map_n;
  }
  if (!report.trials.empty()) {
    report.mean_map /= static_cast<double>(report.trials.size());
    report.mean_map_n /= static_cast<double>(report.trials.size());
  }
  return report;
}

void write_report_tsv(std::ostream& out, const TrialReport& report) {
  std::ostringstream buf;
  buf << std::fixed << std::setprecision(6);
  buf << "category\ttrial\tseeds\tmap\tmap_" << report.map_n << '\n';
  for (std::size_t i = 0; i < report.trials.size(); ++i) {
    const auto& t = report.trials[i];
    buf << report.category << '\t' << i + 1 << '\t';
    for (std::size_t k = 0; k < t.seeds.size(); ++k) buf << (k ? "," : "") << t.seeds[k];
    buf << '\t' << t.map << '\t' << t.map_n << '\n';
  }
  buf << report.category << "\tmean\t-\t" << report.mean_map << '\t' << report.mean_map_n << '\n';
  out << buf.str();
}

}  // namespace facet
