#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "facet/association.hpp"
#include "facet/error.hpp"
#include "oracles.hpp"

using namespace facet;

namespace {

CellCounts cell_of(const oracle::Table& t, std::uint32_t w, std::uint32_t c) {
  return oracle::to_counts(t).cell(WordId{w}, ContextId{c});
}

}  // namespace

TEST_SUITE("association") {
  TEST_CASE("marginals and totals are recomputed from summed pairs") {
    auto counts = CooccurrenceCounts::from_pairs(
        3, 2, {{WordId{0}, ContextId{1}, 2}, {WordId{2}, ContextId{0}, 5}, {WordId{0}, ContextId{1}, 3},
               {WordId{1}, ContextId{0}, 0}});
    CHECK(counts.pairs().size() == 2);
    CHECK(counts.count(WordId{0}, ContextId{1}) == 5);
    CHECK(counts.count(WordId{1}, ContextId{0}) == 0);
    CHECK(counts.word_marginal(WordId{0}) == 5);
    CHECK(counts.word_marginal(WordId{1}) == 0);
    CHECK(counts.context_marginal(ContextId{0}) == 5);
    CHECK(counts.total() == 10);
    CHECK_THROWS_AS(CooccurrenceCounts::from_pairs(1, 1, {{WordId{1}, ContextId{0}, 1}}), Error);
  }

  TEST_CASE("pmi hand example matches the probability-table oracle") {
    // pair 2, word marginal 2, context marginal 2, total 8.
    const oracle::Table t = {{2, 0}, {0, 6}};
    const auto cell = cell_of(t, 0, 0);
    CHECK(cell.pair == 2);
    CHECK(cell.word == 2);
    CHECK(cell.context == 2);
    CHECK(cell.total == 8);
    CHECK(pmi(cell) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(pmi(cell) == doctest::Approx(1.3863).epsilon(1e-4));
    CHECK(pmi(cell) == doctest::Approx(oracle::pmi(oracle::probabilities(t, 0, 0))).epsilon(1e-12));
    CHECK(ppmi(cell) == doctest::Approx(1.3863).epsilon(1e-4));
  }

  TEST_CASE("negative pmi clips to zero") {
    // pair 1, word marginal 4, context marginal 4, total 8.
    const oracle::Table t = {{1, 3}, {3, 1}};
    const auto cell = cell_of(t, 0, 0);
    CHECK(cell.word == 4);
    CHECK(cell.context == 4);
    CHECK(pmi(cell) == doctest::Approx(std::log(0.5)).epsilon(1e-12));
    CHECK(pmi(cell) == doctest::Approx(oracle::pmi(oracle::probabilities(t, 0, 0))).epsilon(1e-12));
    CHECK(ppmi(cell) == 0.0);
  }

  TEST_CASE("apmi is asymmetric") {
    // pair 2, word marginal 2, context marginal 4, total 8.
    const oracle::Table t = {{2, 0}, {2, 4}};
    const auto cell = cell_of(t, 0, 0);
    CHECK(cell.word == 2);
    CHECK(cell.context == 4);
    const auto p = oracle::probabilities(t, 0, 0);
    CHECK(p.joint == 0.25);
    CHECK(p.word == 0.25);
    CHECK(p.context == 0.5);
    CHECK(apmi(cell, Direction::WordToContext) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(apmi(cell, Direction::WordToContext) == doctest::Approx(0.6931).epsilon(1e-4));
    CHECK(apmi(cell, Direction::WordToContext) ==
          doctest::Approx(oracle::apmi(p, Direction::WordToContext)).epsilon(1e-12));
    CHECK(apmi(cell, Direction::ContextToWord) == doctest::Approx(0.0));
    CHECK(std::abs(oracle::apmi(p, Direction::ContextToWord)) < 1e-12);
  }

  TEST_CASE("appmi shifts before clipping") {
    const oracle::Table t = {{2, 0}, {2, 4}};
    const auto cell = cell_of(t, 0, 0);
    CHECK(appmi(cell, 1.0) == doctest::Approx(1.6931).epsilon(1e-4));
    CHECK(appmi(cell, 1.0) == doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-12));

    // A negative apmi is rescued by a large enough shift: -0.5 + 2 = 1.5.
    const oracle::Table neg = {{1, 3}, {3, 1}};
    const auto n = cell_of(neg, 0, 0);
    const double raw = apmi(n);
    REQUIRE(raw < 0.0);
    CHECK(appmi(n, 2.0) == doctest::Approx(std::max(0.0, raw + 2.0)).epsilon(1e-12));
    CHECK(appmi(n, -raw - 0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(appmi(n, -raw + 1.5) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(appmi(n, 0.0) == 0.0);
  }

  TEST_CASE("absent pairs") {
    const CellCounts absent{0, 3, 4, 10};
    CHECK(pmi(absent) == -std::numeric_limits<double>::infinity());
    CHECK(apmi(absent) == -std::numeric_limits<double>::infinity());
    CHECK(ppmi(absent) == 0.0);
    CHECK(appmi(absent, 5.0) == 0.0);
  }

  TEST_CASE("association dispatches on config") {
    const CellCounts cell{2, 2, 4, 8};
    CHECK(association(cell, {Measure::Ppmi, 5.0, Direction::ContextToWord}) == ppmi(cell));
    CHECK(association(cell, {Measure::Appmi, 1.0, Direction::ContextToWord}) ==
          appmi(cell, 1.0, Direction::ContextToWord));
    CHECK(std::string(measure_name(Measure::Ppmi)) == "ppmi");
    CHECK(std::string(measure_name(Measure::Appmi)) == "appmi");
  }

  TEST_CASE("property: 1000 random tables against the oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 8);
    std::uniform_real_distribution<double> shift(0.0, 6.0);
    int cells = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const auto t = oracle::random_table(rng, dim(rng), dim(rng), 0.6, 40);
      const auto counts = oracle::to_counts(t);
      const double k = shift(rng);
      for (std::uint32_t w = 0; w < t.size(); ++w) {
        for (std::uint32_t c = 0; c < t[w].size(); ++c) {
          const auto cell = counts.cell(WordId{w}, ContextId{c});
          const double pp = ppmi(cell);
          const double ap_wc = appmi(cell, k, Direction::WordToContext);
          const double ap_cw = appmi(cell, k, Direction::ContextToWord);
          CHECK(pp >= 0.0);
          CHECK(ap_wc >= 0.0);
          CHECK(ap_cw >= 0.0);
          CHECK(ap_wc <= pp + k + 1e-12);
          CHECK(ap_cw <= pp + k + 1e-12);
          if (!t[w][c]) continue;
          ++cells;
          const auto p = oracle::probabilities(t, w, c);
          CHECK(pp == doctest::Approx(oracle::ppmi(p)).epsilon(1e-9).scale(1.0));
          CHECK(ap_wc == doctest::Approx(oracle::appmi(p, k, Direction::WordToContext)).epsilon(1e-9).scale(1.0));
          CHECK(ap_cw == doctest::Approx(oracle::appmi(p, k, Direction::ContextToWord)).epsilon(1e-9).scale(1.0));
        }
      }
    }
    CHECK(cells > 1000);
  }

  TEST_CASE("property: scaling every count leaves the measures unchanged") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(1, 7);
    std::uniform_int_distribution<std::uint64_t> factor(2, 9);
    for (int trial = 0; trial < 1000; ++trial) {
      auto t = oracle::random_table(rng, dim(rng), dim(rng), 0.7, 30);
      auto scaled = t;
      const auto s = factor(rng);
      for (auto& row : scaled) {
        for (auto& v : row) v *= s;
      }
      const auto a = oracle::to_counts(t);
      const auto b = oracle::to_counts(scaled);
      for (std::uint32_t w = 0; w < t.size(); ++w) {
        for (std::uint32_t c = 0; c < t[w].size(); ++c) {
          if (!t[w][c]) continue;
          const auto x = a.cell(WordId{w}, ContextId{c});
          const auto y = b.cell(WordId{w}, ContextId{c});
          CHECK(pmi(x) == pmi(y));
          CHECK(ppmi(x) == ppmi(y));
          CHECK(apmi(x, Direction::WordToContext) == apmi(y, Direction::WordToContext));
          CHECK(apmi(x, Direction::ContextToWord) == apmi(y, Direction::ContextToWord));
          CHECK(appmi(x, 5.0) == appmi(y, 5.0));
        }
      }
    }
  }

  TEST_CASE("property: raising a pair count with fixed marginals never lowers a measure") {
    // Moving one unit along a 2x2 cycle (+1 at (w,c) and (w2,c2), -1 at
    // (w,c2) and (w2,c)) keeps every marginal and the total fixed.
    std::mt19937_64 rng(13);
    int moves = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      auto t = oracle::random_table(rng, 4, 4, 1.0, 20);
      std::uniform_int_distribution<std::uint32_t> pick(0, 3);
      const auto w = pick(rng), c = pick(rng);
      auto w2 = pick(rng), c2 = pick(rng);
      if (w2 == w) w2 = (w + 1) % 4;
      if (c2 == c) c2 = (c + 1) % 4;
      if (t[w][c2] < 2 || t[w2][c] < 2) continue;
      const auto before = oracle::to_counts(t).cell(WordId{w}, ContextId{c});
      ++t[w][c];
      ++t[w2][c2];
      --t[w][c2];
      --t[w2][c];
      const auto after = oracle::to_counts(t).cell(WordId{w}, ContextId{c});
      REQUIRE(after.word == before.word);
      REQUIRE(after.context == before.context);
      REQUIRE(after.total == before.total);
      CHECK(pmi(after) >= pmi(before));
      CHECK(ppmi(after) >= ppmi(before));
      CHECK(apmi(after) >= apmi(before));
      CHECK(appmi(after, 2.0, Direction::ContextToWord) >= appmi(before, 2.0, Direction::ContextToWord));
      ++moves;
    }
    CHECK(moves > 500);
  }
}
