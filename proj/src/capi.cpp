#include "facet/facet.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "facet/analogy.hpp"
#include "facet/error.hpp"
#include "facet/evaluation.hpp"
#include "facet/expansion.hpp"
#include "facet/ingestion.hpp"
#include "facet/model.hpp"

struct facet_model {
  facet::Model model;
};

struct facet_expansion {
  std::vector<std::string> terms;
  std::vector<double> scores;
  std::vector<std::string> unresolved;
  std::vector<std::string> focus_labels;
  std::vector<facet::FocusEntry> focus;
  facet::ExpansionStatus status = facet::ExpansionStatus::Ok;
};

struct facet_analogy {
  std::vector<std::string> terms;
  std::vector<facet::AnalogyCandidate> candidates;
  std::uint32_t depth = 0;
};

struct facet_report {
  facet::TrialReport report;
  std::vector<std::string> seeds;
  std::string tsv;
};

namespace {

thread_local std::string g_last_error;

facet_status to_status(facet::ErrorKind kind) {
  using facet::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::OutOfRange:
      return FACET_ERR_INVALID_ARGUMENT;
    case ErrorKind::Io:
      return FACET_ERR_IO;
    case ErrorKind::BadMagic:
      return FACET_ERR_BAD_MAGIC;
    case ErrorKind::VersionMismatch:
      return FACET_ERR_VERSION_MISMATCH;
    case ErrorKind::Truncated:
      return FACET_ERR_TRUNCATED;
    case ErrorKind::Corrupt:
      return FACET_ERR_CORRUPT;
    case ErrorKind::MismatchedMatrices:
      return FACET_ERR_MISMATCHED_MATRICES;
    case ErrorKind::UnknownTerm:
      return FACET_ERR_UNKNOWN_TERM;
    case ErrorKind::NoSeeds:
      return FACET_ERR_NO_SEEDS;
    case ErrorKind::UnknownCategory:
      return FACET_ERR_UNKNOWN_CATEGORY;
    case ErrorKind::InsufficientSeeds:
      return FACET_ERR_INSUFFICIENT_SEEDS;
  }
  return FACET_ERR_INTERNAL;
}

facet_status fail(facet_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
facet_status guarded(F&& body) {
  try {
    body();
    return FACET_OK;
  } catch (const facet::Error& e) {
    return fail(to_status(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FACET_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FACET_ERR_INTERNAL, e.what());
  }
}

facet::ExpansionParams to_params(const facet_expand_params& p) {
  facet::ExpansionParams out;
  out.rho = p.rho;
  out.n = p.n;
  out.result_limit = p.limit;
  out.include_seeds = p.include_seeds != 0;
  return out;
}

facet::TrialReport run_eval(const facet::Model& model, const facet::GoldSynsetSet& gold,
                            const facet_eval_params& params) {
  const auto expand_params = to_params(params.expand);
  facet::validate(expand_params);
  const facet::Expander expander = [&](std::span<const std::string> seeds) {
    const auto seed_set = facet::resolve_seeds(model.vocabulary, seeds);
    std::vector<std::string> list;
    if (seed_set.resolved.empty()) return list;
    const auto e = facet::expand(model.syntactic.context_rows, model.syntactic.word_rows, seed_set, expand_params);
    for (const auto& t : e.terms) list.push_back(model.vocabulary.term(t.word));
    return list;
  };
  facet::TrialConfig config;
  config.trials = params.trials;
  config.seeds_per_trial = params.seeds_per_trial;
  config.rng_seed = params.rng_seed;
  return facet::run_trials(gold, expander, config);
}

facet_report* make_report(facet::TrialReport report) {
  auto* out = new facet_report{std::move(report), {}, {}};
  for (const auto& t : out->report.trials) {
    std::string joined;
    for (std::size_t i = 0; i < t.seeds.size(); ++i) joined += (i ? "," : "") + t.seeds[i];
    out->seeds.push_back(std::move(joined));
  }
  std::ostringstream tsv;
  facet::write_report_tsv(tsv, out->report);
  out->tsv = tsv.str();
  return out;
}

}  // namespace

extern "C" {

const char* facet_status_name(facet_status status) {
  switch (status) {
    case FACET_OK:
      return "ok";
    case FACET_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case FACET_ERR_IO:
      return "i/o error";
    case FACET_ERR_BAD_MAGIC:
      return "bad magic";
    case FACET_ERR_VERSION_MISMATCH:
      return "version mismatch";
    case FACET_ERR_TRUNCATED:
      return "truncated";
    case FACET_ERR_CORRUPT:
      return "corrupt";
    case FACET_ERR_MISMATCHED_MATRICES:
      return "mismatched matrices";
    case FACET_ERR_UNKNOWN_TERM:
      return "unknown term";
    case FACET_ERR_NO_SEEDS:
      return "no seeds";
    case FACET_ERR_UNKNOWN_CATEGORY:
      return "unknown category";
    case FACET_ERR_INSUFFICIENT_SEEDS:
      return "insufficient seeds";
    case FACET_ERR_NO_DOMAIN:
      return "no domain matrices";
    case FACET_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* facet_last_error(void) { return g_last_error.c_str(); }

void facet_build_options_init(facet_build_options* options) {
  if (!options) return;
  *options = facet_build_options{};
  options->measure = FACET_MEASURE_APPMI;
  options->shift_k = facet::kDefaultShift;
  options->min_word_frequency = 5;
  options->min_pair_count = 2;
  options->lowercase = 1;
  options->build_domain = 1;
}

facet_status facet_build(const facet_build_options* options, facet_build_summary* summary) {
  if (!options || !options->output_dir) return fail(FACET_ERR_INVALID_ARGUMENT, "build needs an output directory");
  return guarded([&] {
    facet::IngestionConfig config;
    config.min_word_frequency = options->min_word_frequency;
    config.min_pair_count = options->min_pair_count;
    config.lowercase = options->lowercase != 0;
    for (std::size_t i = 0; i < options->merge_count; ++i) config.synthetic_merges.push_back(facet::parse_merge(options->merges[i]));

    facet::Lexicon lexicon;
    if (options->lexicon_path) {
      std::ifstream in(options->lexicon_path);
      if (!in) throw facet::Error(facet::ErrorKind::Io, std::string("cannot open lexicon ") + options->lexicon_path);
      lexicon = facet::read_lexicon(in);
    }
    facet::Aggregator aggregator(config);
    for (std::size_t i = 0; i < options->triple_path_count; ++i) {
      std::ifstream in(options->triple_paths[i]);
      if (!in) throw facet::Error(facet::ErrorKind::Io, std::string("cannot open ") + options->triple_paths[i]);
      facet::read_triples(in, aggregator);
    }
    for (std::size_t i = 0; i < options->corpus_path_count; ++i) {
      std::ifstream in(options->corpus_paths[i]);
      if (!in) throw facet::Error(facet::ErrorKind::Io, std::string("cannot open ") + options->corpus_paths[i]);
      facet::read_corpus(in, aggregator, lexicon);
    }
    const auto ingested = aggregator.finish();
    facet::ModelConfig model_config;
    model_config.measure = options->measure == FACET_MEASURE_PPMI ? facet::Measure::Ppmi : facet::Measure::Appmi;
    model_config.shift_k = options->shift_k;
    model_config.build_domain = options->build_domain != 0;
    const auto model = facet::build_model(ingested, model_config);
    facet::save_model(model, options->output_dir);

    if (summary) {
      *summary = facet_build_summary{};
      summary->vocabulary_size = model.vocabulary.size();
      summary->context_count = model.contexts.size();
      summary->records = ingested.records;
      summary->warnings = ingested.warnings;
      summary->syntactic_word_rows_nnz = model.syntactic.word_rows.nnz();
      summary->syntactic_context_rows_nnz = model.syntactic.context_rows.nnz();
      summary->has_domain = model.domain.has_value();
      if (model.domain) {
        summary->domain_word_rows_nnz = model.domain->word_rows.nnz();
        summary->domain_context_rows_nnz = model.domain->context_rows.nnz();
      }
    }
  });
}

facet_status facet_model_open(const char* dir, facet_model** out) {
  if (!dir || !out) return fail(FACET_ERR_INVALID_ARGUMENT, "model_open needs a directory and an output handle");
  *out = nullptr;
  return guarded([&] { *out = new facet_model{facet::load_model(dir)}; });
}

void facet_model_close(facet_model* model) { delete model; }

facet_status facet_model_get_info(const facet_model* model, facet_model_info* info) {
  if (!model || !info) return fail(FACET_ERR_INVALID_ARGUMENT, "model_get_info needs a model and an output");
  const auto& m = model->model;
  const auto& h = m.syntactic.word_rows.header();
  *info = facet_model_info{};
  info->vocabulary_size = m.vocabulary.size();
  info->context_count = m.contexts.size();
  info->measure = h.measure == facet::Measure::Ppmi ? FACET_MEASURE_PPMI : FACET_MEASURE_APPMI;
  info->shift_k = h.shift_k;
  info->syntactic_nnz = m.syntactic.word_rows.nnz();
  info->has_domain = m.domain.has_value();
  info->domain_word_rows_nnz = m.domain ? m.domain->word_rows.nnz() : 0;
  return FACET_OK;
}

void facet_expand_params_init(facet_expand_params* params) {
  if (!params) return;
  const facet::ExpansionParams defaults;
  params->rho = defaults.rho;
  params->n = defaults.n;
  params->limit = defaults.result_limit;
  params->include_seeds = defaults.include_seeds;
}

facet_status facet_expand(const facet_model* model, const char* const* seeds, size_t seed_count,
                          const facet_expand_params* params, facet_expansion** out) {
  if (!model || !params || !out || (seed_count && !seeds)) {
    return fail(FACET_ERR_INVALID_ARGUMENT, "expand needs a model, params and an output handle");
  }
  *out = nullptr;
  return guarded([&] {
    const auto& m = model->model;
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < seed_count; ++i) terms.emplace_back(seeds[i] ? seeds[i] : "");
    const auto seed_set = facet::resolve_seeds(m.vocabulary, terms);
    if (seed_set.resolved.empty()) {
      std::string message = "no seed term is in the vocabulary";
      if (!terms.empty()) {
        message += " (";
        for (std::size_t i = 0; i < terms.size(); ++i) message += (i ? ", " : "") + terms[i];
        message += ")";
      }
      throw facet::Error(facet::ErrorKind::NoSeeds, message);
    }
    const auto e = facet::expand(m.syntactic.context_rows, m.syntactic.word_rows, seed_set, to_params(*params));
    auto result = std::make_unique<facet_expansion>();
    for (const auto& t : e.terms) {
      result->terms.push_back(m.vocabulary.term(t.word));
      result->scores.push_back(t.score);
    }
    result->unresolved = seed_set.unresolved;
    result->focus = e.focus.entries;
    for (const auto& f : e.focus.entries) result->focus_labels.push_back(m.contexts.label(f.context));
    result->status = e.status;
    *out = result.release();
  });
}

void facet_expansion_free(facet_expansion* expansion) { delete expansion; }

size_t facet_expansion_size(const facet_expansion* e) { return e ? e->terms.size() : 0; }

const char* facet_expansion_term(const facet_expansion* e, size_t index) {
  return e && index < e->terms.size() ? e->terms[index].c_str() : nullptr;
}

double facet_expansion_score(const facet_expansion* e, size_t index) {
  return e && index < e->scores.size() ? e->scores[index] : 0.0;
}

facet_expansion_state facet_expansion_get_state(const facet_expansion* e) {
  if (!e) return FACET_EXPANSION_EMPTY_FOCUS;
  switch (e->status) {
    case facet::ExpansionStatus::Ok:
      return FACET_EXPANSION_OK;
    case facet::ExpansionStatus::EmptyFocus:
      return FACET_EXPANSION_EMPTY_FOCUS;
    case facet::ExpansionStatus::NoCandidates:
      return FACET_EXPANSION_NO_CANDIDATES;
  }
  return FACET_EXPANSION_OK;
}

const char* facet_expansion_reason(const facet_expansion* e) {
  return e ? facet::status_reason(e->status) : "";
}

size_t facet_expansion_unresolved_count(const facet_expansion* e) { return e ? e->unresolved.size() : 0; }

const char* facet_expansion_unresolved(const facet_expansion* e, size_t index) {
  return e && index < e->unresolved.size() ? e->unresolved[index].c_str() : nullptr;
}

size_t facet_expansion_focus_size(const facet_expansion* e) { return e ? e->focus.size() : 0; }

facet_status facet_expansion_focus_entry(const facet_expansion* e, size_t index, facet_focus_entry* entry) {
  if (!e || !entry || index >= e->focus.size()) return fail(FACET_ERR_INVALID_ARGUMENT, "focus index out of range");
  const auto& f = e->focus[index];
  *entry = facet_focus_entry{e->focus_labels[index].c_str(), f.activation, f.support, f.score, f.weight};
  return FACET_OK;
}

void facet_analogy_params_init(facet_analogy_params* params) {
  if (!params) return;
  facet_expand_params_init(&params->like_side);
  facet_expand_params_init(&params->domain_side);
  const facet::AnalogyParams defaults;
  params->limit = defaults.result_limit;
  params->depth = defaults.candidate_depth;
}

double facet_squash_combine(double m, double d) { return facet::squash_combine(m, d); }

facet_status facet_analogy_solve(const facet_model* model, const char* like, const char* of,
                                 const facet_analogy_params* params, facet_analogy** out) {
  if (!model || !like || !of || !params || !out) {
    return fail(FACET_ERR_INVALID_ARGUMENT, "analogy needs a model, both terms, params and an output handle");
  }
  *out = nullptr;
  const auto& m = model->model;
  if (!m.domain) return fail(FACET_ERR_NO_DOMAIN, "model has no domain matrices; rebuild with domain contexts");
  return guarded([&] {
    facet::AnalogyParams p;
    p.like_side = to_params(params->like_side);
    p.domain_side = to_params(params->domain_side);
    p.result_limit = params->limit;
    p.candidate_depth = params->depth;
    const auto r = facet::solve_analogy(m.vocabulary, m.syntactic, *m.domain, like, of, p);
    auto result = std::make_unique<facet_analogy>();
    result->candidates = r.candidates;
    for (const auto& c : r.candidates) result->terms.push_back(m.vocabulary.term(c.word));
    result->depth = r.depth;
    *out = result.release();
  });
}

void facet_analogy_free(facet_analogy* analogy) { delete analogy; }

size_t facet_analogy_size(const facet_analogy* a) { return a ? a->candidates.size() : 0; }

facet_status facet_analogy_candidate_at(const facet_analogy* a, size_t index, facet_analogy_candidate* candidate) {
  if (!a || !candidate || index >= a->candidates.size()) {
    return fail(FACET_ERR_INVALID_ARGUMENT, "candidate index out of range");
  }
  const auto& c = a->candidates[index];
  *candidate = facet_analogy_candidate{a->terms[index].c_str(), c.combined, c.m_score, c.d_score};
  return FACET_OK;
}

uint32_t facet_analogy_depth(const facet_analogy* a) { return a ? a->depth : 0; }

void facet_eval_params_init(facet_eval_params* params) {
  if (!params) return;
  facet_expand_params_init(&params->expand);
  params->expand.limit = 500;
  params->expand.include_seeds = 1;
  const facet::TrialConfig defaults;
  params->trials = defaults.trials;
  params->seeds_per_trial = defaults.seeds_per_trial;
  params->rng_seed = defaults.rng_seed;
}

facet_status facet_list_categories(const char* gold_dir, char** out) {
  if (!gold_dir || !out) return fail(FACET_ERR_INVALID_ARGUMENT, "list_categories needs a directory and an output");
  *out = nullptr;
  return guarded([&] {
    std::string joined;
    for (const auto& name : facet::list_categories(gold_dir)) joined += name + "\n";
    char* buffer = static_cast<char*>(std::malloc(joined.size() + 1));
    if (!buffer) throw std::bad_alloc();
    std::memcpy(buffer, joined.c_str(), joined.size() + 1);
    *out = buffer;
  });
}

void facet_string_free(char* text) { std::free(text); }

facet_status facet_eval_run_file(const facet_model* model, const char* gold_path, const facet_eval_params* params,
                                 facet_report** out) {
  if (!model || !gold_path || !params || !out) {
    return fail(FACET_ERR_INVALID_ARGUMENT, "eval needs a model, a gold file, params and an output handle");
  }
  *out = nullptr;
  return guarded([&] { *out = make_report(run_eval(model->model, facet::load_gold_file(gold_path), *params)); });
}

facet_status facet_eval_run(const facet_model* model, const char* gold_dir, const char* category,
                            const facet_eval_params* params, facet_report** out) {
  if (!model || !gold_dir || !category || !params || !out) {
    return fail(FACET_ERR_INVALID_ARGUMENT, "eval needs a model, a gold directory, a category, params and an output");
  }
  *out = nullptr;
  const auto available = facet::list_categories(gold_dir);
  if (std::find(available.begin(), available.end(), category) == available.end()) {
    std::string message = std::string("unknown category '") + category + "'; available:";
    if (available.empty()) message += " (none in " + std::string(gold_dir) + ")";
    for (const auto& name : available) message += " " + name;
    return fail(FACET_ERR_UNKNOWN_CATEGORY, message);
  }
  const auto path = std::filesystem::path(gold_dir) / (std::string(category) + ".txt");
  return facet_eval_run_file(model, path.string().c_str(), params, out);
}

void facet_report_free(facet_report* report) { delete report; }

const char* facet_report_category(const facet_report* r) { return r ? r->report.category.c_str() : ""; }

int facet_report_is_open(const facet_report* r) { return r && r->report.kind == facet::CategoryKind::Open; }

uint32_t facet_report_map_n(const facet_report* r) { return r ? r->report.map_n : 0; }

size_t facet_report_trial_count(const facet_report* r) { return r ? r->report.trials.size() : 0; }

const char* facet_report_trial_seeds(const facet_report* r, size_t index) {
  return r && index < r->seeds.size() ? r->seeds[index].c_str() : nullptr;
}

double facet_report_trial_map(const facet_report* r, size_t index) {
  return r && index < r->report.trials.size() ? r->report.trials[index].map : 0.0;
}

double facet_report_trial_map_n(const facet_report* r, size_t index) {
  return r && index < r->report.trials.size() ? r->report.trials[index].map_n : 0.0;
}

double facet_report_mean_map(const facet_report* r) { return r ? r->report.mean_map : 0.0; }

double facet_report_mean_map_n(const facet_report* r) { return r ? r->report.mean_map_n : 0.0; }

double facet_report_headline(const facet_report* r) { return r ? r->report.headline() : 0.0; }

const char* facet_report_tsv(const facet_report* r) { return r ? r->tsv.c_str() : ""; }

}  // extern "C"
