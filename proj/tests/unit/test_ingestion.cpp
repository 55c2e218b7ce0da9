#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "facet/error.hpp"
#include "facet/ingestion.hpp"

using namespace facet;

namespace {

using Cells = std::map<std::pair<std::string, std::string>, std::uint64_t>;

Cells cells(const IngestionResult& r, ContextFamily family) {
  Cells out;
  for (const auto& p : r.counts(family).pairs()) {
    out[{r.vocabulary.term(p.word), r.contexts.label(p.context)}] = p.count;
  }
  return out;
}

std::vector<ObservationRecord> random_stream(std::mt19937_64& rng, int n) {
  std::vector<ObservationRecord> out;
  std::uniform_int_distribution<int> word(0, 14), ctx(0, 9), count(1, 4), fam(0, 3);
  for (int i = 0; i < n; ++i) {
    const bool sentence = fam(rng) == 0;
    out.push_back({"w" + std::to_string(word(rng)), (sentence ? "s" : "ObjectOf#v") + std::to_string(ctx(rng)),
                   static_cast<std::uint64_t>(count(rng)),
                   sentence ? ContextFamily::SentenceCooccurrence : ContextFamily::Syntactic});
  }
  return out;
}

bool contains(const std::vector<ObservationRecord>& records, const std::string& w, const std::string& c) {
  return std::any_of(records.begin(), records.end(),
                     [&](const ObservationRecord& r) { return r.word == w && r.context_label == c; });
}

}  // namespace

TEST_SUITE("ingestion") {
  TEST_CASE("thresholds drop rare words and pairs; marginals follow the survivors") {
    Aggregator agg({.min_word_frequency = 5, .min_pair_count = 2});
    agg.add({"apple", "ObjectOf#eat", 3});
    agg.add({"apple", "ModifiedBy#red", 2});
    agg.add({"apple", "ModifiedBy#green", 1});  // pair below threshold
    agg.add({"pear", "ObjectOf#eat", 2});
    agg.add({"pear", "ObjectOf#eat", 2});
    agg.add({"pear", "ModifiedBy#ripe", 1});
    agg.add({"fig", "ObjectOf#eat", 4});  // word below threshold
    const auto r = agg.finish();
    CHECK(r.records == 7);
    CHECK_FALSE(r.vocabulary.find("fig"));
    REQUIRE(r.vocabulary.find("apple"));
    REQUIRE(r.vocabulary.find("pear"));
    CHECK_FALSE(r.contexts.find(ContextFamily::Syntactic, "ModifiedBy#green"));

    const auto c = cells(r, ContextFamily::Syntactic);
    CHECK(c.size() == 3);
    CHECK(c.at({"pear", "ObjectOf#eat"}) == 4);
    // Brute-force marginals over the surviving cells.
    const auto& counts = r.syntactic;
    std::uint64_t total = 0;
    for (const auto& [key, v] : c) total += v;
    CHECK(counts.total() == total);
    for (std::uint32_t w = 0; w < r.vocabulary.size(); ++w) {
      std::uint64_t sum = 0;
      for (const auto& [key, v] : c) sum += key.first == r.vocabulary.term(WordId{w}) ? v : 0;
      CHECK(counts.word_marginal(WordId{w}) == sum);
    }
    for (std::uint32_t k = 0; k < r.contexts.size(); ++k) {
      std::uint64_t sum = 0;
      for (const auto& [key, v] : c) sum += key.second == r.contexts.label(ContextId{k}) ? v : 0;
      CHECK(counts.context_marginal(ContextId{k}) == sum);
    }
    // Frequency is the pre-threshold corpus count.
    CHECK(r.vocabulary.frequency(*r.vocabulary.find("apple")) == 6);
  }

  TEST_CASE("malformed records become warnings") {
    Aggregator agg({.min_word_frequency = 0, .min_pair_count = 0});
    agg.add({"", "ObjectOf#eat", 3});
    agg.add({"apple", "", 3});
    agg.add({"apple", "ObjectOf#eat", 0});
    agg.add({"apple", "ObjectOf#eat", 1});
    const auto r = agg.finish();
    CHECK(r.warnings == 3);
    CHECK(r.syntactic.total() == 1);
  }

  TEST_CASE("aggregation is order-insensitive and shard merges agree") {
    std::mt19937_64 rng(17);
    const IngestionConfig cfg{.min_word_frequency = 3, .min_pair_count = 2};
    for (int trial = 0; trial < 20; ++trial) {
      auto stream = random_stream(rng, 300);
      Aggregator whole(cfg);
      whole.add(stream);
      const auto a = whole.finish();

      std::shuffle(stream.begin(), stream.end(), rng);
      Aggregator left(cfg), right(cfg);
      const auto half = stream.size() / 2;
      left.add(std::span(stream).first(half));
      right.add(std::span(stream).subspan(half));
      right.merge(left);
      const auto b = right.finish();

      CHECK(a.vocabulary == b.vocabulary);
      CHECK(a.contexts == b.contexts);
      for (auto fam : {ContextFamily::Syntactic, ContextFamily::SentenceCooccurrence}) {
        const auto pa = a.counts(fam).pairs();
        const auto pb = b.counts(fam).pairs();
        REQUIRE(pa.size() == pb.size());
        for (std::size_t i = 0; i < pa.size(); ++i) {
          CHECK(pa[i].word == pb[i].word);
          CHECK(pa[i].context == pb[i].context);
          CHECK(pa[i].count == pb[i].count);
        }
      }
    }
  }

  TEST_CASE("both families share one vocabulary and one dense context table") {
    Aggregator agg({.min_word_frequency = 0, .min_pair_count = 0});
    agg.add({"india", "rupee", 2, ContextFamily::SentenceCooccurrence});
    agg.add({"rupee", "ObjectOf#exchange", 2});
    const auto r = agg.finish();
    CHECK(r.vocabulary.size() == 2);
    CHECK(r.contexts.size() == 2);
    CHECK(r.syntactic.num_contexts() == 2);
    CHECK(r.sentence.num_contexts() == 2);
    CHECK(r.syntactic.num_words() == 2);
    const auto id = r.contexts.find(ContextFamily::SentenceCooccurrence, "rupee");
    REQUIRE(id);
    CHECK(r.contexts.family(*id) == ContextFamily::SentenceCooccurrence);
    CHECK_FALSE(r.contexts.find(ContextFamily::Syntactic, "rupee"));
  }

  TEST_CASE("lowercasing touches words and the headword after '#'") {
    Aggregator agg({.min_word_frequency = 0, .min_pair_count = 0});
    agg.add({"Paris", "ModifiedBy#Beautiful", 1});
    agg.add({"PARIS", "France", 1, ContextFamily::SentenceCooccurrence});
    const auto r = agg.finish();
    CHECK(r.vocabulary.find("paris"));
    CHECK(r.contexts.find(ContextFamily::Syntactic, "ModifiedBy#beautiful"));
    CHECK(r.contexts.find(ContextFamily::SentenceCooccurrence, "france"));

    Aggregator keep({.min_word_frequency = 0, .min_pair_count = 0, .lowercase = false});
    keep.add({"Paris", "ModifiedBy#Beautiful", 1});
    const auto k = keep.finish();
    CHECK(k.vocabulary.find("Paris"));
    CHECK(k.contexts.find(ContextFamily::Syntactic, "ModifiedBy#Beautiful"));
  }

  TEST_CASE("synthetic merge sums the merged rows") {
    std::mt19937_64 rng(23);
    auto stream = random_stream(rng, 400);
    const IngestionConfig plain{.min_word_frequency = 0, .min_pair_count = 0};
    IngestionConfig merged = plain;
    merged.synthetic_merges.push_back(parse_merge("w1,w2=w1w2"));

    Aggregator a(plain), b(merged);
    a.add(stream);
    b.add(stream);
    const auto ra = a.finish();
    const auto rb = b.finish();
    CHECK_FALSE(rb.vocabulary.find("w1"));
    CHECK_FALSE(rb.vocabulary.find("w2"));
    for (auto fam : {ContextFamily::Syntactic, ContextFamily::SentenceCooccurrence}) {
      const auto ca = cells(ra, fam);
      const auto cb = cells(rb, fam);
      std::map<std::string, std::uint64_t> expected, actual;
      for (const auto& [key, v] : ca) {
        if (key.first == "w1" || key.first == "w2") expected[key.second] += v;
      }
      for (const auto& [key, v] : cb) {
        if (key.first == "w1w2") actual[key.second] += v;
      }
      CHECK(expected == actual);
    }
    // Merges also rewrite sentence contexts and syntactic headwords.
    Aggregator c(merged);
    c.add({"x", "w1", 1, ContextFamily::SentenceCooccurrence});
    c.add({"x", "ObjectOf#w2", 1});
    const auto rc = c.finish();
    CHECK(rc.contexts.find(ContextFamily::SentenceCooccurrence, "w1w2"));
    CHECK(rc.contexts.find(ContextFamily::Syntactic, "ObjectOf#w1w2"));
  }

  TEST_CASE("parse_merge") {
    const auto m = parse_merge("cat, denver=catdenver");
    CHECK(m.merged == "catdenver");
    CHECK(m.terms == std::vector<std::string>{"cat", "denver"});
    CHECK_THROWS_AS(parse_merge("cat,denver"), Error);
    CHECK_THROWS_AS(parse_merge("=x"), Error);
    CHECK_THROWS_AS(parse_merge("a,b="), Error);
  }

  TEST_CASE("sentence contexts pair every two distinct positions") {
    const std::vector<std::string> tokens = {"a", "b", "a"};
    const auto out = extract_sentence_contexts(tokens);
    CHECK(out.size() == 6);
    CHECK(std::count_if(out.begin(), out.end(),
                        [](const ObservationRecord& r) { return r.word == "a" && r.context_label == "a"; }) == 2);
    CHECK(contains(out, "a", "b"));
    CHECK(contains(out, "b", "a"));
    for (const auto& r : out) CHECK(r.family == ContextFamily::SentenceCooccurrence);
    CHECK(extract_sentence_contexts(std::vector<std::string>{"solo"}).empty());
  }

  TEST_CASE("adjacency extractor") {
    const std::vector<TaggedToken> red_car = {{"red", Pos::Adjective}, {"car", Pos::Noun}};
    const auto a = extract_adjacency_contexts(red_car);
    CHECK(contains(a, "car", "ModifiedBy#red"));
    CHECK(contains(a, "red", "Modifies#car"));
    CHECK(a.size() == 2);

    const std::vector<TaggedToken> eat_apple = {{"eat", Pos::Verb}, {"apple", Pos::Noun}};
    const auto b = extract_adjacency_contexts(eat_apple);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == ObservationRecord{"apple", "ObjectOf#eat", 1, ContextFamily::Syntactic});

    const std::vector<TaggedToken> longer = {{"dogs", Pos::Noun}, {"chase", Pos::Verb}, {"the", Pos::Determiner},
                                             {"red", Pos::Adjective}, {"car", Pos::Noun}};
    const auto c = extract_adjacency_contexts(longer);
    CHECK(contains(c, "dogs", "SubjectOf#chase"));
    CHECK(contains(c, "car", "ObjectOf#chase"));
    CHECK(contains(c, "car", "ModifiedBy#red"));
  }

  TEST_CASE("tagging and tokenizing") {
    CHECK(parse_pos("NN") == Pos::Noun);
    CHECK(parse_pos("NNPS") == Pos::Noun);
    CHECK(parse_pos("PROPN") == Pos::Noun);
    CHECK(parse_pos("VBD") == Pos::Verb);
    CHECK(parse_pos("JJ") == Pos::Adjective);
    CHECK(parse_pos("DT") == Pos::Determiner);
    CHECK(parse_pos("IN") == Pos::Other);

    std::istringstream lex("car\tNOUN\ndrive\tVERB\n");
    const auto lexicon = read_lexicon(lex);
    const auto tokens = tokenize_line("They drive/VB the New_York car.", lexicon, true);
    REQUIRE(tokens.size() == 5);
    CHECK(tokens[1].text == "drive");
    CHECK(tokens[1].pos == Pos::Verb);
    CHECK(tokens[3].text == "new york");
    CHECK(tokens[4].text == "car");
    CHECK(tokens[4].pos == Pos::Noun);
  }

  TEST_CASE("triple reader") {
    std::istringstream in(
        "apple\tObjectOf#eat\t3\tsyntactic\n"
        "apple\tpie\t2\tsentence\n"
        "broken line\n"
        "apple\tx\tnotanumber\tsyntactic\n"
        "apple\tx\t1\tweird\n"
        "\n");
    Aggregator agg({.min_word_frequency = 0, .min_pair_count = 0});
    read_triples(in, agg);
    const auto r = agg.finish();
    CHECK(r.warnings == 3);
    CHECK(r.syntactic.total() == 3);
    CHECK(r.sentence.total() == 2);

    std::ostringstream out;
    const std::vector<ObservationRecord> recs = {{"a", "ObjectOf#b", 4, ContextFamily::Syntactic},
                                                 {"a", "c", 1, ContextFamily::SentenceCooccurrence}};
    write_triples(out, recs);
    CHECK(out.str() == "a\tObjectOf#b\t4\tsyntactic\na\tc\t1\tsentence\n");
  }

  TEST_CASE("corpus reader emits both families") {
    std::istringstream lex_in("rupee\tNOUN\n");
    const auto lexicon = read_lexicon(lex_in);
    std::istringstream corpus("the/DT strong/JJ rupee/NN rose/VBD\n\nindia rupee\n");
    Aggregator agg({.min_word_frequency = 0, .min_pair_count = 0});
    read_corpus(corpus, agg, lexicon);
    const auto r = agg.finish();
    CHECK(r.contexts.find(ContextFamily::Syntactic, "ModifiedBy#strong"));
    CHECK(r.contexts.find(ContextFamily::Syntactic, "SubjectOf#rose"));
    CHECK(r.contexts.find(ContextFamily::SentenceCooccurrence, "india"));
  }

  TEST_CASE("prefix lemma predicate") {
    CHECK(shares_prefix_lemma("india", "indian"));  // 5/6 > 0.8
    CHECK(shares_prefix_lemma("indian", "india"));
    CHECK_FALSE(shares_prefix_lemma("evolution", "number"));
    CHECK_FALSE(shares_prefix_lemma("cafe", "cafes"));  // 4/5 is not above 0.8
    CHECK(shares_prefix_lemma("rupee", "rupee"));
    CHECK_FALSE(shares_prefix_lemma("", "a"));
    // Measured in code points: 4/5, whereas a byte count would give 8/9.
    CHECK_FALSE(shares_prefix_lemma("\xc3\xa9\xc3\xa9\xc3\xa9\xc3\xa9" "a", "\xc3\xa9\xc3\xa9\xc3\xa9\xc3\xa9" "b"));
    CHECK(shares_prefix_lemma("\xc3\xb1" "and\xc3\xba", "\xc3\xb1" "and\xc3\xba" "s"));
    CHECK(decode_utf8("a\xc3\xa9") == U"aé");
    CHECK(decode_utf8("\xff") == U"\uFFFD");
  }

  TEST_CASE("domain masking keeps the diagonal and prefix matches only") {
    Aggregator agg({.min_word_frequency = 0, .min_pair_count = 0});
    const std::vector<std::vector<std::string>> sentences = {
        {"india", "indian", "rupee", "theory"}, {"evolution", "theory", "number"}, {"number", "theory", "india"},
        {"india", "india", "rupee"}};
    for (const auto& s : sentences) agg.add(extract_sentence_contexts(s));
    const auto r = agg.finish();
    const auto pair = build_domain_matrices(r.sentence, r.vocabulary, r.contexts, Measure::Appmi, 5.0);
    const auto& vc = pair.word_rows;
    CHECK(vc.header().prefix_masked);

    auto score = [&](const std::string& w, const std::string& c) {
      return vc.at(r.vocabulary.find(w)->value, r.contexts.find(ContextFamily::SentenceCooccurrence, c)->value);
    };
    CHECK(score("india", "indian") > 0.0f);
    CHECK(score("indian", "india") > 0.0f);
    CHECK(score("india", "india") > 0.0f);
    CHECK(score("evolution", "number") == 0.0f);
    CHECK(score("evolution", "theory") == 0.0f);
    CHECK(score("india", "rupee") == 0.0f);

    for (std::uint32_t w = 0; w < vc.rows(); ++w) {
      const auto row = vc.row(w);
      for (auto c : row.columns) {
        const auto& term = r.vocabulary.term(WordId{w});
        const auto& label = r.contexts.label(ContextId{c});
        CHECK((term == label || shares_prefix_lemma(term, label)));
      }
    }
    // The context side is not masked.
    const auto rupee = r.contexts.find(ContextFamily::SentenceCooccurrence, "rupee")->value;
    CHECK(pair.context_rows.at(rupee, r.vocabulary.find("india")->value) > 0.0f);
    CHECK_FALSE(pair.context_rows.header().prefix_masked);
  }
}
