#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include "facet/facet.h"

#ifndef FACET_DEFAULT_GOLD_DIR
#define FACET_DEFAULT_GOLD_DIR "data/gold"
#endif

namespace facet::cli {

namespace {

enum class Format { Table, Tsv, Json };

struct ModelCloser {
  void operator()(facet_model* m) const { facet_model_close(m); }
};
struct ExpansionFree {
  void operator()(facet_expansion* e) const { facet_expansion_free(e); }
};
struct AnalogyFree {
  void operator()(facet_analogy* a) const { facet_analogy_free(a); }
};
struct ReportFree {
  void operator()(facet_report* r) const { facet_report_free(r); }
};
using ModelPtr = std::unique_ptr<facet_model, ModelCloser>;
using ExpansionPtr = std::unique_ptr<facet_expansion, ExpansionFree>;
using AnalogyPtr = std::unique_ptr<facet_analogy, AnalogyFree>;
using ReportPtr = std::unique_ptr<facet_report, ReportFree>;

/// Per-query knobs shared by the one-shot commands and the REPL.
struct Settings {
  facet_expand_params params{};
  bool explain = false;
  Format format = Format::Table;
  std::uint32_t depth = 0;

  Settings() { facet_expand_params_init(&params); }
};

std::string env_or(const char* name, const char* fallback) {
  const char* value = std::getenv(name);
  return value && *value ? value : fallback;
}

std::string default_model_dir() { return env_or("FACET_MATRIX_DIR", "facet-model"); }
std::string default_gold_dir() { return env_or("FACET_GOLD_DIR", FACET_DEFAULT_GOLD_DIR); }

const std::map<std::string, Format> kFormats = {{"table", Format::Table}, {"tsv", Format::Tsv}, {"json", Format::Json}};

int report_error(std::ostream& err, facet_status status) {
  err << "error: " << facet_last_error() << " (" << facet_status_name(status) << ")\n";
  return 1;
}

std::string fixed(double value, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << value;
  return s.str();
}

std::size_t widest(const std::vector<std::string>& items, std::size_t floor) {
  std::size_t w = floor;
  for (const auto& s : items) w = std::max(w, s.size());
  return w;
}

ModelPtr open_model(const std::string& dir, std::ostream& err, int& code) {
  facet_model* raw = nullptr;
  const auto status = facet_model_open(dir.c_str(), &raw);
  if (status != FACET_OK) {
    code = report_error(err, status);
    return nullptr;
  }
  code = 0;
  return ModelPtr(raw);
}

int print_expansion(const facet_model* model, const std::vector<std::string>& seeds, const Settings& settings,
                    std::ostream& out, std::ostream& err) {
  std::vector<const char*> raw;
  for (const auto& s : seeds) raw.push_back(s.c_str());
  facet_expansion* handle = nullptr;
  const auto status = facet_expand(model, raw.data(), raw.size(), &settings.params, &handle);
  if (status != FACET_OK) return report_error(err, status);
  ExpansionPtr e(handle);

  for (std::size_t i = 0; i < facet_expansion_unresolved_count(e.get()); ++i) {
    err << "warning: unknown seed '" << facet_expansion_unresolved(e.get(), i) << "'\n";
  }
  const std::size_t n = facet_expansion_size(e.get());
  const std::size_t focus_n = settings.explain ? facet_expansion_focus_size(e.get()) : 0;
  std::vector<facet_focus_entry> focus(focus_n);
  for (std::size_t i = 0; i < focus_n; ++i) facet_expansion_focus_entry(e.get(), i, &focus[i]);
  const bool empty = facet_expansion_get_state(e.get()) != FACET_EXPANSION_OK;

  switch (settings.format) {
    case Format::Json: {
      nlohmann::json j;
      j["seeds"] = seeds;
      j["status"] = empty ? "empty" : "ok";
      j["reason"] = facet_expansion_reason(e.get());
      j["results"] = nlohmann::json::array();
      for (std::size_t i = 0; i < n; ++i) {
        j["results"].push_back({{"rank", i + 1}, {"term", facet_expansion_term(e.get(), i)},
                                {"score", facet_expansion_score(e.get(), i)}});
      }
      if (settings.explain) {
        j["focus"] = nlohmann::json::array();
        for (const auto& f : focus) {
          j["focus"].push_back({{"context", f.label}, {"activation", f.activation}, {"support", f.support},
                                {"score", f.score}, {"weight", f.weight}});
        }
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::Tsv:
      if (empty) out << "status\tempty\t" << facet_expansion_reason(e.get()) << '\n';
      for (std::size_t i = 0; i < n; ++i) {
        out << "result\t" << i + 1 << '\t' << facet_expansion_term(e.get(), i) << '\t'
            << fixed(facet_expansion_score(e.get(), i), 6) << '\n';
      }
      for (const auto& f : focus) {
        out << "focus\t" << f.label << '\t' << fixed(f.activation, 6) << '\t' << fixed(f.support, 6) << '\t'
            << fixed(f.score, 6) << '\t' << fixed(f.weight, 6) << '\n';
      }
      break;
    case Format::Table: {
      if (empty) {
        out << "no expansion: " << facet_expansion_reason(e.get()) << '\n';
      } else {
        std::vector<std::string> terms;
        for (std::size_t i = 0; i < n; ++i) terms.emplace_back(facet_expansion_term(e.get(), i));
        const auto w = widest(terms, 4);
        out << std::right << std::setw(5) << "rank" << "  " << std::left << std::setw(static_cast<int>(w)) << "term"
            << "  score\n";
        for (std::size_t i = 0; i < n; ++i) {
          out << std::right << std::setw(5) << i + 1 << "  " << std::left << std::setw(static_cast<int>(w))
              << terms[i] << "  " << fixed(facet_expansion_score(e.get(), i)) << '\n';
        }
      }
      if (settings.explain) {
        std::vector<std::string> labels;
        for (const auto& f : focus) labels.emplace_back(f.label);
        const auto w = widest(labels, 7);
        out << "focus (" << focus.size() << " contexts)\n";
        out << "  " << std::left << std::setw(static_cast<int>(w)) << "context"
            << "  activation  support   score       weight\n";
        for (const auto& f : focus) {
          out << "  " << std::left << std::setw(static_cast<int>(w)) << f.label << "  " << std::setw(10)
              << fixed(f.activation) << "  " << std::setw(8) << fixed(f.support) << "  " << std::setw(10)
              << fixed(f.score) << "  " << fixed(f.weight) << '\n';
        }
      }
      out << std::right;
      break;
    }
  }
  return 0;
}

int print_analogy(const facet_model* model, const std::string& like, const std::string& of, const Settings& settings,
                  std::ostream& out, std::ostream& err) {
  facet_analogy_params params;
  facet_analogy_params_init(&params);
  params.like_side = settings.params;
  params.domain_side = settings.params;
  params.limit = settings.params.limit;
  params.depth = settings.depth;
  facet_analogy* handle = nullptr;
  const auto status = facet_analogy_solve(model, like.c_str(), of.c_str(), &params, &handle);
  if (status != FACET_OK) return report_error(err, status);
  AnalogyPtr a(handle);

  const std::size_t n = facet_analogy_size(a.get());
  std::vector<facet_analogy_candidate> rows(n);
  for (std::size_t i = 0; i < n; ++i) facet_analogy_candidate_at(a.get(), i, &rows[i]);
  const auto depth = facet_analogy_depth(a.get());

  switch (settings.format) {
    case Format::Json: {
      nlohmann::json j;
      j["like"] = like;
      j["of"] = of;
      j["depth"] = depth;
      j["status"] = n ? "ok" : "empty";
      j["results"] = nlohmann::json::array();
      for (std::size_t i = 0; i < n; ++i) {
        j["results"].push_back({{"rank", i + 1}, {"term", rows[i].term}, {"combined", rows[i].combined},
                                {"m", rows[i].m_score}, {"d", rows[i].d_score}});
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::Tsv:
      if (!n) out << "status\tempty\tno shared candidates\n";
      for (std::size_t i = 0; i < n; ++i) {
        out << "result\t" << i + 1 << '\t' << rows[i].term << '\t' << fixed(rows[i].combined, 6) << '\t'
            << fixed(rows[i].m_score, 6) << '\t' << fixed(rows[i].d_score, 6) << '\n';
      }
      break;
    case Format::Table: {
      if (!n) {
        out << "no shared candidates (depth " << depth << ")\n";
        break;
      }
      std::vector<std::string> terms;
      for (const auto& r : rows) terms.emplace_back(r.term);
      const auto w = widest(terms, 4);
      out << std::right << std::setw(5) << "rank" << "  " << std::left << std::setw(static_cast<int>(w)) << "term"
          << "  combined  m           d\n";
      for (std::size_t i = 0; i < n; ++i) {
        out << std::right << std::setw(5) << i + 1 << "  " << std::left << std::setw(static_cast<int>(w)) << terms[i]
            << "  " << std::setw(8) << fixed(rows[i].combined) << "  " << std::setw(10) << fixed(rows[i].m_score)
            << "  " << fixed(rows[i].d_score) << '\n';
      }
      out << std::right;
      break;
    }
  }
  return 0;
}

void add_query_options(CLI::App* cmd, Settings& s, std::string& format) {
  cmd->add_option("--rho", s.params.rho, "limited support penalty")->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", s.params.n, "context footprint")->check(CLI::PositiveNumber);
  cmd->add_option("--limit", s.params.limit, "maximum results")->check(CLI::PositiveNumber);
  cmd->add_option("--format", format, "table, tsv or json")->check(CLI::IsMember({"table", "tsv", "json"}));
}

std::vector<std::string> split_seeds(const std::string& line) {
  std::vector<std::string> seeds;
  const bool commas = line.find(',') != std::string::npos;
  std::string current;
  auto flush = [&] {
    const auto b = current.find_first_not_of(" \t");
    if (b != std::string::npos) seeds.push_back(current.substr(b, current.find_last_not_of(" \t") - b + 1));
    current.clear();
  };
  for (char ch : line) {
    if (commas ? ch == ',' : (ch == ' ' || ch == '\t')) {
      flush();
    } else {
      current.push_back(ch);
    }
  }
  flush();
  return seeds;
}

bool parse_flag(const std::string& text, bool& value) {
  if (text == "on" || text == "true" || text == "1") {
    value = true;
  } else if (text == "off" || text == "false" || text == "0") {
    value = false;
  } else {
    return false;
  }
  return true;
}

constexpr const char* kReplHelp =
    "  term1 term2 ...      expand seeds (use commas for multi-word terms)\n"
    "  ? like | of          analogy: what is the <like> of <of>?\n"
    "  :rho X  :n N  :limit N  :depth N\n"
    "  :explain on|off  :include-seeds on|off  :format table|tsv|json\n"
    "  :settings  :help  :quit\n";

int repl(const facet_model* model, Settings settings, std::istream& in, std::ostream& out, std::ostream& err,
         bool interactive) {
  std::string line;
  for (;;) {
    if (interactive) out << "facet> " << std::flush;
    if (!std::getline(in, line)) break;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line = line.substr(first);

    if (line[0] == ':') {
      std::istringstream words(line.substr(1));
      std::string cmd, arg, extra;
      words >> cmd >> arg;
      const bool trailing = static_cast<bool>(words >> extra);
      try {
        if (cmd == "quit" || cmd == "q" || cmd == "exit") break;
        if (cmd == "help") {
          out << kReplHelp;
        } else if (cmd == "settings") {
          out << "rho " << settings.params.rho << ", n " << settings.params.n << ", limit " << settings.params.limit
              << ", depth " << settings.depth << ", explain " << (settings.explain ? "on" : "off")
              << ", include-seeds " << (settings.params.include_seeds ? "on" : "off") << '\n';
        } else if (arg.empty() || trailing) {
          err << "error: ':" << cmd << "' expects one argument\n";
        } else if (cmd == "rho") {
          std::size_t used = 0;
          const double v = std::stod(arg, &used);
          if (used != arg.size() || !(v >= 0.0)) throw std::invalid_argument(arg);
          settings.params.rho = v;
        } else if (cmd == "n" || cmd == "limit" || cmd == "depth") {
          std::size_t used = 0;
          const long v = std::stol(arg, &used);
          if (used != arg.size() || v < (cmd == "depth" ? 0 : 1)) throw std::invalid_argument(arg);
          (cmd == "n" ? settings.params.n : cmd == "limit" ? settings.params.limit : settings.depth) =
              static_cast<std::uint32_t>(v);
        } else if (cmd == "explain") {
          if (!parse_flag(arg, settings.explain)) throw std::invalid_argument(arg);
        } else if (cmd == "include-seeds") {
          bool v = false;
          if (!parse_flag(arg, v)) throw std::invalid_argument(arg);
          settings.params.include_seeds = v;
        } else if (cmd == "format") {
          auto it = kFormats.find(arg);
          if (it == kFormats.end()) throw std::invalid_argument(arg);
          settings.format = it->second;
        } else {
          err << "error: unknown setting ':" << cmd << "' (try :help)\n";
        }
      } catch (const std::exception&) {
        err << "error: bad value '" << arg << "' for :" << cmd << '\n';
      }
      continue;
    }

    if (line[0] == '?') {
      const auto bar = line.find('|');
      const auto seeds_like = split_seeds(line.substr(1, bar == std::string::npos ? std::string::npos : bar - 1));
      const auto seeds_of = bar == std::string::npos ? std::vector<std::string>{} : split_seeds(line.substr(bar + 1));
      if (bar == std::string::npos || seeds_like.empty() || seeds_of.empty()) {
        err << "error: analogy syntax is '? like | of'\n";
        continue;
      }
      auto join = [](const std::vector<std::string>& parts) {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
        return s;
      };
      print_analogy(model, join(seeds_like), join(seeds_of), settings, out, err);
      continue;
    }

    print_expansion(model, split_seeds(line), settings, out, err);
  }
  return 0;
}

std::string technique_label(const facet_model* model, const Settings& s) {
  facet_model_info info;
  facet_model_get_info(model, &info);
  std::ostringstream label;
  label << (info.measure == FACET_MEASURE_PPMI ? "ppmi" : "appmi") << ";rho=" << s.params.rho << ";n=" << s.params.n;
  return label.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        bool interactive) {
  CLI::App app{"Sparse word/context association engine: set expansion, analogies and MAP evaluation", "facet"};
  app.require_subcommand(1);

  // build
  std::vector<std::string> triples, corpora, merges;
  std::string lexicon, out_dir = default_model_dir(), measure = "appmi";
  double shift_k = 5.0;
  std::uint64_t min_word_freq = 5, min_pair_count = 2;
  bool no_lowercase = false, no_domain = false;
  auto* build = app.add_subcommand("build", "aggregate observations and write the matrix directory");
  build->add_option("--triples", triples, "word<TAB>context<TAB>count<TAB>family files")->check(CLI::ExistingFile);
  build->add_option("--corpus", corpora, "plain-text files, one sentence per line")->check(CLI::ExistingFile);
  build->add_option("--lexicon", lexicon, "term<TAB>tag file for untagged corpus tokens")->check(CLI::ExistingFile);
  build->add_option("--out,--dir", out_dir, "output matrix directory (env FACET_MATRIX_DIR)");
  build->add_option("--measure", measure, "ppmi or appmi")->check(CLI::IsMember({"ppmi", "appmi"}));
  build->add_option("--k", shift_k, "APPMI shift constant")->check(CLI::NonNegativeNumber);
  build->add_option("--min-word-freq", min_word_freq, "drop words seen fewer times");
  build->add_option("--min-pair-count", min_pair_count, "drop (word, context) pairs seen fewer times");
  build->add_option("--merge", merges, "synthetic polysemy, e.g. cat,denver=catdenver");
  build->add_flag("--no-lowercase", no_lowercase, "keep input case");
  build->add_flag("--no-domain", no_domain, "skip the sentence co-occurrence matrices");

  // expand
  Settings expand_settings;
  std::string expand_format = "table", expand_dir = default_model_dir();
  std::vector<std::string> seeds;
  auto* expand = app.add_subcommand("expand", "expand a seed set");
  expand->add_option("seeds", seeds, "seed terms")->required();
  expand->add_option("--dir", expand_dir, "matrix directory (env FACET_MATRIX_DIR)");
  add_query_options(expand, expand_settings, expand_format);
  expand->add_flag("--include-seeds", expand_settings.params.include_seeds, "keep seeds in the output");
  expand->add_flag("--explain", expand_settings.explain, "print the context focus");

  // analogy
  Settings analogy_settings;
  analogy_settings.params.limit = 10;
  std::string analogy_format = "table", analogy_dir = default_model_dir(), like, of;
  auto* analogy = app.add_subcommand("analogy", "what is the <like> of <of>?");
  analogy->add_option("--like", like, "term whose role is sought")->required();
  analogy->add_option("--of", of, "term naming the domain")->required();
  analogy->add_option("--dir", analogy_dir, "matrix directory (env FACET_MATRIX_DIR)");
  analogy->add_option("--depth", analogy_settings.depth, "per-side candidate depth (default 10 x limit)");
  add_query_options(analogy, analogy_settings, analogy_format);

  // eval
  facet_eval_params eval_params;
  facet_eval_params_init(&eval_params);
  Settings eval_settings;
  eval_settings.params = eval_params.expand;
  std::string eval_format = "table", eval_dir = default_model_dir(), gold_dir = default_gold_dir();
  std::vector<std::string> categories;
  bool exclude_seeds = false;
  auto* eval = app.add_subcommand("eval", "MAP / MAP_n over randomized seed draws");
  eval->add_option("--category", categories, "gold category name(s)")->required();
  eval->add_option("--gold-dir", gold_dir, "directory of gold files (env FACET_GOLD_DIR)");
  eval->add_option("--dir", eval_dir, "matrix directory (env FACET_MATRIX_DIR)");
  eval->add_option("--trials", eval_params.trials, "expansions per category")->check(CLI::PositiveNumber);
  eval->add_option("--seeds-per-trial", eval_params.seeds_per_trial, "seeds per expansion")->check(CLI::PositiveNumber);
  eval->add_option("--rng-seed", eval_params.rng_seed, "seed for the seed sampler");
  eval->add_flag("--exclude-seeds", exclude_seeds, "drop seeds from the scored list");
  add_query_options(eval, eval_settings, eval_format);

  // repl
  Settings repl_settings;
  std::string repl_format = "table", repl_dir = default_model_dir();
  auto* repl_cmd = app.add_subcommand("repl", "interactive expansion and analogy queries");
  repl_cmd->add_option("--dir", repl_dir, "matrix directory (env FACET_MATRIX_DIR)");
  add_query_options(repl_cmd, repl_settings, repl_format);
  repl_cmd->add_flag("--include-seeds", repl_settings.params.include_seeds, "keep seeds in the output");
  repl_cmd->add_flag("--explain", repl_settings.explain, "print the context focus");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (*build) {
    facet_build_options options;
    facet_build_options_init(&options);
    std::vector<const char*> triple_ptrs, corpus_ptrs, merge_ptrs;
    for (const auto& t : triples) triple_ptrs.push_back(t.c_str());
    for (const auto& c : corpora) corpus_ptrs.push_back(c.c_str());
    for (const auto& m : merges) merge_ptrs.push_back(m.c_str());
    options.triple_paths = triple_ptrs.data();
    options.triple_path_count = triple_ptrs.size();
    options.corpus_paths = corpus_ptrs.data();
    options.corpus_path_count = corpus_ptrs.size();
    options.lexicon_path = lexicon.empty() ? nullptr : lexicon.c_str();
    options.output_dir = out_dir.c_str();
    options.measure = measure == "ppmi" ? FACET_MEASURE_PPMI : FACET_MEASURE_APPMI;
    options.shift_k = shift_k;
    options.min_word_frequency = min_word_freq;
    options.min_pair_count = min_pair_count;
    options.lowercase = !no_lowercase;
    options.build_domain = !no_domain;
    options.merges = merge_ptrs.data();
    options.merge_count = merge_ptrs.size();
    facet_build_summary summary;
    const auto status = facet_build(&options, &summary);
    if (status != FACET_OK) return report_error(err, status);
    out << "wrote " << out_dir << '\n';
    out << "  records          " << summary.records << " (" << summary.warnings << " skipped)\n";
    out << "  vocabulary       " << summary.vocabulary_size << '\n';
    out << "  contexts         " << summary.context_count << '\n';
    out << "  syntactic V->C   " << summary.syntactic_word_rows_nnz << " nnz\n";
    out << "  syntactic C->V   " << summary.syntactic_context_rows_nnz << " nnz\n";
    if (summary.has_domain) {
      out << "  domain V->C      " << summary.domain_word_rows_nnz << " nnz\n";
      out << "  domain C->V      " << summary.domain_context_rows_nnz << " nnz\n";
    }
    return 0;
  }

  if (*expand) {
    expand_settings.format = kFormats.at(expand_format);
    int code = 0;
    auto model = open_model(expand_dir, err, code);
    if (!model) return code;
    return print_expansion(model.get(), seeds, expand_settings, out, err);
  }

  if (*analogy) {
    analogy_settings.format = kFormats.at(analogy_format);
    int code = 0;
    auto model = open_model(analogy_dir, err, code);
    if (!model) return code;
    return print_analogy(model.get(), like, of, analogy_settings, out, err);
  }

  if (*eval) {
    eval_settings.format = kFormats.at(eval_format);
    eval_params.expand = eval_settings.params;
    eval_params.expand.include_seeds = !exclude_seeds;
    int code = 0;
    auto model = open_model(eval_dir, err, code);
    if (!model) return code;
    std::vector<ReportPtr> reports;
    for (const auto& category : categories) {
      facet_report* raw = nullptr;
      const auto status = facet_eval_run(model.get(), gold_dir.c_str(), category.c_str(), &eval_params, &raw);
      if (status != FACET_OK) return report_error(err, status);
      reports.emplace_back(raw);
    }
    const auto technique = technique_label(model.get(), eval_settings);
    switch (eval_settings.format) {
      case Format::Tsv:
        for (const auto& r : reports) out << facet_report_tsv(r.get());
        break;
      case Format::Json: {
        nlohmann::json j;
        j["technique"] = technique;
        j["rng_seed"] = eval_params.rng_seed;
        j["categories"] = nlohmann::json::array();
        for (const auto& r : reports) {
          nlohmann::json c{{"category", facet_report_category(r.get())},
                           {"kind", facet_report_is_open(r.get()) ? "open" : "closed"},
                           {"map_n", facet_report_map_n(r.get())},
                           {"mean_map", facet_report_mean_map(r.get())},
                           {"mean_map_n", facet_report_mean_map_n(r.get())},
                           {"headline", facet_report_headline(r.get())}};
          c["trials"] = nlohmann::json::array();
          for (std::size_t i = 0; i < facet_report_trial_count(r.get()); ++i) {
            c["trials"].push_back({{"seeds", facet_report_trial_seeds(r.get(), i)},
                                   {"map", facet_report_trial_map(r.get(), i)},
                                   {"map_n", facet_report_trial_map_n(r.get(), i)}});
          }
          j["categories"].push_back(std::move(c));
        }
        out << j.dump() << '\n';
        break;
      }
      case Format::Table: {
        // One row per technique, one column per category; closed categories
        // report MAP, open ones MAP_n.
        std::vector<std::string> headers;
        for (const auto& r : reports) {
          std::string h = facet_report_category(r.get());
          if (facet_report_is_open(r.get())) h += " (MAP_" + std::to_string(facet_report_map_n(r.get())) + ")";
          headers.push_back(std::move(h));
        }
        const auto w = std::max<std::size_t>(technique.size(), 9);
        out << std::left << std::setw(static_cast<int>(w)) << "technique";
        for (const auto& h : headers) out << "  " << std::setw(static_cast<int>(std::max<std::size_t>(h.size(), 5))) << h;
        out << '\n' << std::setw(static_cast<int>(w)) << technique;
        for (std::size_t i = 0; i < reports.size(); ++i) {
          out << "  " << std::setw(static_cast<int>(std::max<std::size_t>(headers[i].size(), 5)))
              << fixed(facet_report_headline(reports[i].get()), 3);
        }
        out << std::right << '\n';
        break;
      }
    }
    return 0;
  }

  if (*repl_cmd) {
    repl_settings.format = kFormats.at(repl_format);
    int code = 0;
    auto model = open_model(repl_dir, err, code);
    if (!model) return code;
    if (interactive) out << "loaded " << repl_dir << "; :help for commands\n";
    return repl(model.get(), repl_settings, in, out, err, interactive);
  }
  return 0;
}

}  // namespace facet::cli
