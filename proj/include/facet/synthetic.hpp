#pragma once

// Generated corpora with known structure: the multi-facet benchmark used to
// compare association measures and penalties, and small fixtures for
// polysemy, analogy and CLI demonstrations.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "facet/evaluation.hpp"
#include "facet/ingestion.hpp"

namespace facet::synthetic {

/// Three closed categories (star signs, US cities, fruits). Several members
/// of each also carry a much more frequent foreign sense (cancer the
/// disease, phoenix the bird, apple the company, ...), with the category
/// sense rare. Every word also has shared generic contexts and a sprinkling
/// of two-observation fluke contexts.
struct Benchmark {
  std::vector<ObservationRecord> records;
  std::vector<GoldSynsetSet> categories;
};

Benchmark polysemy_benchmark(std::uint64_t seed = 20180715);

/// Animals and cities with disjoint syntactic contexts. Merging cat and
/// denver into one token yields a term with two balanced senses.
std::vector<ObservationRecord> animals_cities_fixture();
std::vector<std::string> fixture_animals();
std::vector<std::string> fixture_cities();

/// Presidents and car makers; "ford" belongs to both.
std::vector<ObservationRecord> presidents_cars_fixture();
std::vector<std::string> fixture_presidents();
std::vector<std::string> fixture_car_makers();

/// Syntactic clusters (currencies, car models, rivers, countries, ...) plus
/// sentence co-occurrences tying each country or maker to its own currency,
/// model, river and so on.
std::vector<ObservationRecord> analogy_fixture();

/// Writes a gold file readable by parse_gold.
void write_gold(std::ostream& out, const GoldSynsetSet& gold);

}  // namespace facet::synthetic
