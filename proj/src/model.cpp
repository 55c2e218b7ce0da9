#include "facet/model.hpp"

#include <fstream>

#include "facet/error.hpp"

namespace facet {

Model build_model(const IngestionResult& ingested, const ModelConfig& config) {
  Model model;
  model.vocabulary = ingested.vocabulary;
  model.contexts = ingested.contexts;
  model.syntactic = build_matrices(ingested.syntactic, config.measure, config.shift_k, ContextFamily::Syntactic);
  if (config.build_domain) {
    model.domain =
        build_domain_matrices(ingested.sentence, model.vocabulary, model.contexts, config.measure, config.shift_k);
  }
  return model;
}

namespace {

template <typename Table>
void save_table(const Table& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  table.save(out);
  if (!out) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

template <typename Table>
Table load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return Table::load(in);
}

void check_against_tables(const MatrixPair& pair, const Model& model, const char* what) {
  check_pair(pair);
  if (pair.word_rows.rows() != model.vocabulary.size() || pair.word_rows.cols() != model.contexts.size()) {
    throw Error(ErrorKind::MismatchedMatrices, std::string(what) + " matrices do not match the term tables");
  }
}

}  // namespace

void save_model(const Model& model, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());
  save_table(model.vocabulary, dir / kVocabularyFile);
  save_table(model.contexts, dir / kContextsFile);
  save_matrix_file(model.syntactic.word_rows, dir / kSyntacticWordRowsFile);
  save_matrix_file(model.syntactic.context_rows, dir / kSyntacticContextRowsFile);
  if (model.domain) {
    save_matrix_file(model.domain->word_rows, dir / kDomainWordRowsFile);
    save_matrix_file(model.domain->context_rows, dir / kDomainContextRowsFile);
  } else {
    std::filesystem::remove(dir / kDomainWordRowsFile, ec);
    std::filesystem::remove(dir / kDomainContextRowsFile, ec);
  }
}

Model load_model(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorKind::Io, "model directory " + dir.string() + " not found");
  Model model;
  model.vocabulary = load_table<Vocabulary>(dir / kVocabularyFile);
  model.contexts = load_table<ContextInventory>(dir / kContextsFile);
  model.syntactic.word_rows = load_matrix_file(dir / kSyntacticWordRowsFile);
  model.syntactic.context_rows = load_matrix_file(dir / kSyntacticContextRowsFile);
  check_against_tables(model.syntactic, model, "syntactic");
  if (model.syntactic.word_rows.header().family != ContextFamily::Syntactic) {
    throw Error(ErrorKind::MismatchedMatrices, "syntactic matrices carry the wrong family");
  }

  const bool has_vc = std::filesystem::exists(dir / kDomainWordRowsFile);
  const bool has_cv = std::filesystem::exists(dir / kDomainContextRowsFile);
  if (has_vc != has_cv) throw Error(ErrorKind::MismatchedMatrices, "domain matrix pair is incomplete");
  if (has_vc) {
    MatrixPair domain{load_matrix_file(dir / kDomainWordRowsFile), load_matrix_file(dir / kDomainContextRowsFile)};
    check_against_tables(domain, model, "domain");
    const auto& h = domain.word_rows.header();
    if (h.family != ContextFamily::SentenceCooccurrence) {
      throw Error(ErrorKind::MismatchedMatrices, "domain matrices carry the wrong family");
    }
    if (h.measure != model.syntactic.word_rows.header().measure ||
        h.shift_k != model.syntactic.word_rows.header().shift_k) {
      throw Error(ErrorKind::MismatchedMatrices, "domain and syntactic matrices use different measures");
    }
    model.domain = std::move(domain);
  }
  return model;
}

}  // namespace facet
