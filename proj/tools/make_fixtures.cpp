// Writes the generated fixture corpora and the benchmark (triples plus gold
// files) under the given data directory.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "facet/error.hpp"
#include "facet/ingestion.hpp"
#include "facet/synthetic.hpp"

namespace fs = std::filesystem;

namespace {

void write_records(const fs::path& path, const std::vector<facet::ObservationRecord>& records) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw facet::Error(facet::ErrorKind::Io, "cannot write " + path.string());
  facet::write_triples(out, records);
  std::cout << "wrote " << path.string() << " (" << records.size() << " records)\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <data-dir>\n";
    return 2;
  }
  try {
    const fs::path root = argv[1];
    write_records(root / "fixtures" / "animals_cities.tsv", facet::synthetic::animals_cities_fixture());
    write_records(root / "fixtures" / "presidents_cars.tsv", facet::synthetic::presidents_cars_fixture());
    write_records(root / "fixtures" / "analogy.tsv", facet::synthetic::analogy_fixture());

    const auto bench = facet::synthetic::polysemy_benchmark();
    write_records(root / "benchmark" / "triples.tsv", bench.records);
    fs::create_directories(root / "benchmark" / "gold");
    for (const auto& gold : bench.categories) {
      const auto path = root / "benchmark" / "gold" / (gold.name() + ".txt");
      std::ofstream out(path);
      facet::synthetic::write_gold(out, gold);
      std::cout << "wrote " << path.string() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
