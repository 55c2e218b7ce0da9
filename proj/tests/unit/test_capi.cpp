#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <string>

#include "facet/facet.h"

namespace fs = std::filesystem;

namespace {

fs::path build_fixture(const std::string& name, const char* triples, bool domain = true) {
  const auto dir = fs::temp_directory_path() / ("facet_capi_" + name);
  fs::remove_all(dir);
  facet_build_options o;
  facet_build_options_init(&o);
  const char* paths[] = {triples};
  o.triple_paths = paths;
  o.triple_path_count = 1;
  const std::string out = dir.string();
  o.output_dir = out.c_str();
  o.min_word_frequency = 0;
  o.min_pair_count = 0;
  o.build_domain = domain;
  facet_build_summary s;
  REQUIRE(facet_build(&o, &s) == FACET_OK);
  CHECK(s.vocabulary_size > 0);
  CHECK(s.syntactic_word_rows_nnz == s.syntactic_context_rows_nnz);
  return dir;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("status names and defaults") {
    CHECK(std::string(facet_status_name(FACET_OK)) == "ok");
    CHECK(std::string(facet_status_name(FACET_ERR_UNKNOWN_TERM)) == "unknown term");
    facet_expand_params p;
    facet_expand_params_init(&p);
    CHECK(p.rho == 3.0);
    CHECK(p.n == 100);
    CHECK(p.include_seeds == 0);
    facet_build_options o;
    facet_build_options_init(&o);
    CHECK(o.shift_k == 5.0);
    CHECK(o.measure == FACET_MEASURE_APPMI);
    CHECK(o.min_word_frequency == 5);
    CHECK(o.min_pair_count == 2);
    CHECK(facet_squash_combine(99, 99) == 100.0);
  }

  TEST_CASE("expansion through handles") {
    const auto dir = build_fixture("expand", FACET_TEST_DATA_DIR "/fixtures/presidents_cars.tsv", false);
    facet_model* m = nullptr;
    REQUIRE(facet_model_open(dir.string().c_str(), &m) == FACET_OK);
    facet_model_info info;
    REQUIRE(facet_model_get_info(m, &info) == FACET_OK);
    CHECK(info.measure == FACET_MEASURE_APPMI);
    CHECK(info.has_domain == 0);

    const char* seeds[] = {"ford", "nixon", "nobody"};
    facet_expand_params p;
    facet_expand_params_init(&p);
    p.limit = 5;
    facet_expansion* e = nullptr;
    REQUIRE(facet_expand(m, seeds, 3, &p, &e) == FACET_OK);
    CHECK(facet_expansion_get_state(e) == FACET_EXPANSION_OK);
    CHECK(facet_expansion_size(e) == 5);
    CHECK(facet_expansion_unresolved_count(e) == 1);
    CHECK(std::string(facet_expansion_unresolved(e, 0)) == "nobody");
    CHECK(facet_expansion_focus_size(e) > 0);
    facet_focus_entry f;
    CHECK(facet_expansion_focus_entry(e, 0, &f) == FACET_OK);
    CHECK(f.weight > 0.0);
    CHECK(f.weight <= 1.0);
    CHECK(facet_expansion_focus_entry(e, 10000, &f) == FACET_ERR_INVALID_ARGUMENT);
    CHECK(facet_expansion_term(e, 1000) == nullptr);
    facet_expansion_free(e);

    const char* none[] = {"nobody"};
    CHECK(facet_expand(m, none, 1, &p, &e) == FACET_ERR_NO_SEEDS);
    CHECK(std::strlen(facet_last_error()) > 0);

    facet_analogy_params ap;
    facet_analogy_params_init(&ap);
    facet_analogy* a = nullptr;
    CHECK(facet_analogy_solve(m, "ford", "nixon", &ap, &a) == FACET_ERR_NO_DOMAIN);
    p.rho = -1;
    CHECK(facet_expand(m, seeds, 2, &p, &e) == FACET_ERR_INVALID_ARGUMENT);
    facet_model_close(m);
    fs::remove_all(dir);
  }

  TEST_CASE("analogy through handles") {
    const auto dir = build_fixture("analogy", FACET_TEST_DATA_DIR "/fixtures/analogy.tsv");
    facet_model* m = nullptr;
    REQUIRE(facet_model_open(dir.string().c_str(), &m) == FACET_OK);
    facet_analogy_params ap;
    facet_analogy_params_init(&ap);
    facet_analogy* a = nullptr;
    REQUIRE(facet_analogy_solve(m, "dollar", "india", &ap, &a) == FACET_OK);
    REQUIRE(facet_analogy_size(a) > 0);
    facet_analogy_candidate c;
    REQUIRE(facet_analogy_candidate_at(a, 0, &c) == FACET_OK);
    CHECK(std::string(c.term) == "rupee");
    CHECK(c.combined == facet_squash_combine(c.m_score, c.d_score));
    CHECK(facet_analogy_depth(a) == 100);
    facet_analogy_free(a);
    CHECK(facet_analogy_solve(m, "dollar", "atlantis", &ap, &a) == FACET_ERR_UNKNOWN_TERM);
    CHECK(std::string(facet_last_error()).find("of") != std::string::npos);
    facet_model_close(m);
    fs::remove_all(dir);
  }

  TEST_CASE("evaluation through handles") {
    const auto dir = build_fixture("eval", FACET_TEST_DATA_DIR "/fixtures/presidents_cars.tsv");
    facet_model* m = nullptr;
    REQUIRE(facet_model_open(dir.string().c_str(), &m) == FACET_OK);
    char* list = nullptr;
    REQUIRE(facet_list_categories(FACET_TEST_DATA_DIR "/gold", &list) == FACET_OK);
    CHECK(std::string(list) == "break_verbs\nnfl_teams\nus_states\n");
    facet_string_free(list);

    facet_eval_params ep;
    facet_eval_params_init(&ep);
    CHECK(ep.trials == 50);
    CHECK(ep.seeds_per_trial == 3);
    CHECK(ep.expand.include_seeds == 1);
    facet_report* r = nullptr;
    CHECK(facet_eval_run(m, FACET_TEST_DATA_DIR "/gold", "no_such", &ep, &r) == FACET_ERR_UNKNOWN_CATEGORY);
    CHECK(std::string(facet_last_error()).find("us_states") != std::string::npos);
    REQUIRE(facet_eval_run(m, FACET_TEST_DATA_DIR "/gold", "us_states", &ep, &r) == FACET_OK);
    CHECK(facet_report_trial_count(r) == 50);
    CHECK(facet_report_map_n(r) == 50);
    CHECK(facet_report_is_open(r) == 0);
    CHECK(facet_report_mean_map(r) >= 0.0);
    CHECK(std::string(facet_report_tsv(r)).find("us_states\tmean") != std::string::npos);
    facet_report_free(r);
    facet_model_close(m);
    fs::remove_all(dir);
  }

  TEST_CASE("damaged model directories") {
    facet_model* m = nullptr;
    CHECK(facet_model_open("/nonexistent/facet", &m) == FACET_ERR_IO);
    CHECK(m == nullptr);
    const auto dir = build_fixture("damaged", FACET_TEST_DATA_DIR "/fixtures/presidents_cars.tsv");
    fs::resize_file(dir / "syntactic.vc.csr", 20);
    CHECK(facet_model_open(dir.string().c_str(), &m) == FACET_ERR_TRUNCATED);
    fs::remove_all(dir);
    CHECK(facet_build(nullptr, nullptr) == FACET_ERR_INVALID_ARGUMENT);
  }
}
