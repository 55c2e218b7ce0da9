#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "facet/ingestion.hpp"
#include "facet/sparse_matrix.hpp"
#include "facet/vocabulary.hpp"

namespace facet {

/// Everything a query needs: the term tables, the syntactic pair M and,
/// optionally, the domain pair D.
struct Model {
  Vocabulary vocabulary;
  ContextInventory contexts;
  MatrixPair syntactic;
  std::optional<MatrixPair> domain;
};

struct ModelConfig {
  Measure measure = Measure::Appmi;
  double shift_k = kDefaultShift;
  bool build_domain = true;
};

Model build_model(const IngestionResult& ingested, const ModelConfig& config);

// Directory layout.
inline constexpr const char* kVocabularyFile = "vocab.tsv";
inline constexpr const char* kContextsFile = "contexts.tsv";
inline constexpr const char* kSyntacticWordRowsFile = "syntactic.vc.csr";
inline constexpr const char* kSyntacticContextRowsFile = "syntactic.cv.csr";
inline constexpr const char* kDomainWordRowsFile = "domain.vc.csr";
inline constexpr const char* kDomainContextRowsFile = "domain.cv.csr";

/// Writes the model into `dir`, creating it if needed.
void save_model(const Model& model, const std::filesystem::path& dir);

/// Loads and cross-checks a model directory. Throws MismatchedMatrices when
/// the pairs disagree with each other or with the term tables.
Model load_model(const std::filesystem::path& dir);

}  // namespace facet
