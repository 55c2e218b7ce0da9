#include "facet/synthetic.hpp"

#include <map>
#include <ostream>
#include <random>

namespace facet::synthetic {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + engine_() % (hi - lo + 1); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

struct CountRange {
  std::uint64_t lo;
  std::uint64_t hi;
};

std::vector<std::string> labels(const std::string& cluster, int count) {
  static const char* relations[] = {"ObjectOf", "SubjectOf", "ModifiedBy", "Modifies"};
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(std::string(relations[i % 4]) + "#" + cluster + "." + std::to_string(i));
  return out;
}

void emit(std::vector<ObservationRecord>& out, const std::string& word, const std::string& label,
          std::uint64_t count, ContextFamily family = ContextFamily::Syntactic) {
  out.push_back({word, label, count, family});
}

// Each (member, context) cell is present with probability `density`.
void cluster(std::vector<ObservationRecord>& out, Rng& rng, const std::vector<std::string>& members,
             const std::vector<std::string>& contexts, double density, CountRange counts) {
  for (const auto& m : members) {
    for (const auto& c : contexts) {
      if (rng.chance(density)) emit(out, m, c, rng.between(counts.lo, counts.hi));
    }
  }
}

// Deterministic variant: every member sees every context.
void dense_cluster(std::vector<ObservationRecord>& out, const std::vector<std::string>& members,
                   const std::vector<std::string>& contexts, std::uint64_t base) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < contexts.size(); ++j) emit(out, members[i], contexts[j], base + (i * 7 + j * 3) % 5);
  }
}

void sentence(std::vector<ObservationRecord>& out, const std::vector<std::string>& tokens, std::uint64_t repeat) {
  for (auto r : extract_sentence_contexts(tokens)) {
    r.count = repeat;
    out.push_back(std::move(r));
  }
}

GoldSynsetSet singletons(const std::string& name, const std::vector<std::string>& members) {
  std::vector<Synset> synsets;
  for (const auto& m : members) synsets.push_back(Synset{{m}});
  return GoldSynsetSet(name, std::move(synsets), CategoryKind::Closed);
}

}  // namespace

Benchmark polysemy_benchmark(std::uint64_t seed) {
  constexpr int kStraysPerCategory = 8;
  Rng rng(seed);
  Benchmark bench;
  auto& out = bench.records;

  struct Category {
    std::string name;
    std::vector<std::string> members;
    std::map<std::string, std::string> foreign;  // member -> foreign cluster
  };
  const std::vector<Category> categories = {
      {"star_signs",
       {"aries", "taurus", "gemini", "cancer", "leo", "virgo", "libra", "scorpio", "sagittarius", "capricorn",
        "aquarius", "pisces"},
       {{"cancer", "diseases"}, {"scorpio", "cars"}, {"gemini", "missions"}}},
      {"us_cities",
       {"atlanta", "boston", "chicago", "dallas", "houston", "seattle", "portland", "austin", "denver", "phoenix",
        "mobile", "buffalo"},
       {{"phoenix", "birds"}, {"mobile", "phones"}, {"buffalo", "animals"}}},
      {"fruits",
       {"banana", "cherry", "grape", "lemon", "mango", "peach", "pear", "plum", "melon", "apple", "date",
        "orange"},
       {{"apple", "phones"}, {"date", "calendar"}, {"orange", "colors"}}},
  };
  const std::map<std::string, std::vector<std::string>> foreign_clusters = {
      {"diseases",
       {"diabetes", "asthma", "influenza", "malaria", "measles", "arthritis", "hepatitis", "anemia", "bronchitis",
        "tumor"}},
      {"cars", {"mustang", "corvette", "camaro", "civic", "corolla", "accord", "jetta", "sentra", "altima", "prius"}},
      {"birds", {"eagle", "hawk", "sparrow", "robin", "falcon", "owl", "crow", "parrot", "pigeon", "heron"}},
      {"phones", {"nokia", "samsung", "motorola", "iphone", "android", "pixel", "galaxy", "xperia", "lumia", "razr"}},
      {"animals", {"lion", "tiger", "zebra", "giraffe", "elephant", "bison", "moose", "wolf", "bear", "deer"}},
      {"missions",
       {"apollo", "mercury", "voyager", "skylab", "challenger", "discovery", "endeavour", "columbia", "atlantis",
        "pioneer"}},
      {"calendar",
       {"monday", "weekend", "deadline", "holiday", "birthday", "appointment", "anniversary", "schedule", "meeting",
        "vacation"}},
      {"colors", {"red", "blue", "green", "purple", "yellow", "pink", "violet", "brown", "gray", "teal"}},
  };

  std::vector<std::string> all_words;
  for (const auto& cat : categories) {
    const auto contexts = labels(cat.name, 20);
    for (const auto& m : cat.members) {
      all_words.push_back(m);
      // The category sense of a polysemous member is rare.
      const bool lopsided = cat.foreign.contains(m);
      cluster(out, rng, {m}, contexts, lopsided ? 0.5 : 0.8, lopsided ? CountRange{3, 6} : CountRange{3, 12});
    }
    bench.categories.push_back(singletons(cat.name, cat.members));
    // Rare strays: barely above the frequency threshold, seen only with a
    // few of the category's contexts.
    for (int i = 0; i < kStraysPerCategory; ++i) {
      const std::string stray = cat.name + ".stray" + std::to_string(i);
      all_words.push_back(stray);
      for (int j = 0; j < 3; ++j) emit(out, stray, contexts[rng.between(0, contexts.size() - 1)], 2);
    }
  }
  for (const auto& [name, members] : foreign_clusters) {
    const auto contexts = labels(name, 20);
    cluster(out, rng, members, contexts, 0.8, {5, 30});
    all_words.insert(all_words.end(), members.begin(), members.end());
    for (const auto& cat : categories) {
      for (const auto& [member, cluster_name] : cat.foreign) {
        if (cluster_name == name) cluster(out, rng, {member}, contexts, 0.8, {20, 50});
      }
    }
  }

  // Generic contexts, roughly proportional to each word's own frequency.
  std::map<std::string, std::uint64_t> word_mass;
  for (const auto& r : out) word_mass[r.word] += r.count;
  const auto generic = labels("generic", 8);
  for (const auto& w : all_words) {
    for (const auto& c : generic) {
      if (rng.chance(0.6)) emit(out, w, c, 2 + word_mass[w] / 50);
    }
  }

  // Fluke contexts: two random words, seen twice each.
  for (int i = 0; i < 300; ++i) {
    const std::string label = "Modifies#noise." + std::to_string(i);
    for (int k = 0; k < 2; ++k) emit(out, all_words[rng.between(0, all_words.size() - 1)], label, 2);
  }
  return bench;
}

std::vector<std::string> fixture_animals() {
  return {"cat", "dog", "kitten", "puppy", "rabbit", "horse", "hamster", "pony"};
}

std::vector<std::string> fixture_cities() {
  return {"denver", "phoenix", "chicago", "atlanta", "seattle", "dallas", "boston", "portland"};
}

std::vector<ObservationRecord> animals_cities_fixture() {
  std::vector<ObservationRecord> out;
  dense_cluster(out, fixture_animals(),
                {"ObjectOf#feed", "ObjectOf#pet", "ModifiedBy#furry", "ModifiedBy#hungry", "SubjectOf#sleep",
                 "SubjectOf#eat", "ObjectOf#adopt", "ModifiedBy#cute", "ObjectOf#groom", "SubjectOf#play"},
                4);
  dense_cluster(out, fixture_cities(),
                {"ObjectOf#visit", "ModifiedBy#downtown", "ObjectOf#fly to", "SubjectOf#host", "ModifiedBy#suburban",
                 "ObjectOf#move to", "SubjectOf#elect mayor", "ModifiedBy#greater", "ObjectOf#tour",
                 "SubjectOf#grow"},
                4);
  return out;
}

std::vector<std::string> fixture_presidents() {
  return {"nixon", "obama", "clinton", "bush", "reagan", "carter", "lincoln"};
}

std::vector<std::string> fixture_car_makers() {
  return {"chevy", "toyota", "honda", "bmw", "audi", "nissan", "chrysler"};
}

std::vector<ObservationRecord> presidents_cars_fixture() {
  std::vector<ObservationRecord> out;
  auto presidents = fixture_presidents();
  auto makers = fixture_car_makers();
  presidents.push_back("ford");
  makers.push_back("ford");
  dense_cluster(out, presidents,
                {"ObjectOf#elect", "ModifiedBy#former", "SubjectOf#veto", "ObjectOf#impeach", "SubjectOf#sign",
                 "ModifiedBy#presidential", "SubjectOf#campaign", "ObjectOf#inaugurate"},
                4);
  dense_cluster(out, makers,
                {"ObjectOf#drive", "ModifiedBy#used", "ObjectOf#park", "SubjectOf#stall", "ObjectOf#lease",
                 "ModifiedBy#reliable", "SubjectOf#recall", "ObjectOf#test drive"},
                4);
  return out;
}

std::vector<ObservationRecord> analogy_fixture() {
  std::vector<ObservationRecord> out;
  dense_cluster(out, {"dollar", "rupee", "euro", "yen", "peso", "pound"},
                {"ObjectOf#exchange", "ModifiedBy#strong", "ModifiedBy#weak", "ObjectOf#convert", "SubjectOf#fall",
                 "SubjectOf#rise", "ObjectOf#devalue"},
                4);
  dense_cluster(out, {"civic", "corolla", "accord", "mustang", "focus", "golf"},
                {"ObjectOf#drive", "ModifiedBy#used", "ModifiedBy#sporty", "ObjectOf#park", "ObjectOf#lease",
                 "SubjectOf#stall"},
                4);
  dense_cluster(out, {"ganga", "nile", "thames", "seine", "danube", "mississippi"},
                {"ObjectOf#cross", "ModifiedBy#muddy", "SubjectOf#flood", "SubjectOf#flow", "ObjectOf#dam",
                 "ModifiedBy#mighty"},
                4);
  dense_cluster(out, {"india", "egypt", "japan", "mexico", "usa", "france", "england", "germany"},
                {"ObjectOf#invade", "ModifiedBy#neighboring", "SubjectOf#export", "ObjectOf#govern",
                 "SubjectOf#sign treaty", "ObjectOf#visit"},
                4);
  dense_cluster(out, {"toyota", "honda", "ford", "volkswagen"},
                {"SubjectOf#manufacture", "ModifiedBy#automaker", "SubjectOf#recall", "ObjectOf#invest in"}, 4);
  dense_cluster(out, {"delhi", "cairo", "tokyo", "paris", "london", "berlin", "washington", "mexico city"},
                {"ObjectOf#tour", "ModifiedBy#downtown", "SubjectOf#host", "ObjectOf#fly to"}, 4);

  // Domain sentences: each country or maker with its own currency, city,
  // river and models. The term repeats so its diagonal cell is observed.
  sentence(out, {"india", "indian", "rupee", "delhi", "ganga", "india"}, 3);
  sentence(out, {"indian", "rupee", "cricket"}, 3);
  sentence(out, {"egypt", "egyptian", "pound", "cairo", "nile", "egypt"}, 3);
  sentence(out, {"japan", "japanese", "yen", "tokyo", "japan"}, 3);
  sentence(out, {"mexico", "mexican", "peso", "mexico city", "mexico"}, 3);
  sentence(out, {"usa", "american", "dollar", "washington", "mississippi", "usa"}, 3);
  sentence(out, {"france", "french", "euro", "paris", "seine", "france"}, 3);
  sentence(out, {"england", "english", "pound", "london", "thames", "england"}, 3);
  sentence(out, {"germany", "german", "euro", "berlin", "danube", "germany"}, 3);
  sentence(out, {"toyota", "corolla", "japan", "toyota"}, 3);
  sentence(out, {"honda", "civic", "accord", "japan", "honda"}, 3);
  sentence(out, {"ford", "mustang", "focus", "usa", "ford"}, 3);
  sentence(out, {"volkswagen", "golf", "germany", "volkswagen"}, 3);
  sentence(out, {"india", "egypt", "japan", "trade"}, 2);
  sentence(out, {"usa", "england", "france", "germany", "trade"}, 2);
  return out;
}

void write_gold(std::ostream& out, const GoldSynsetSet& gold) {
  out << "@name " << gold.name() << '\n';
  out << "@kind " << (gold.kind() == CategoryKind::Closed ? "closed" : "open") << '\n';
  if (gold.map_n() != gold.synsets().size()) out << "@map-n " << gold.map_n() << '\n';
  for (const auto& s : gold.synsets()) {
    for (std::size_t i = 0; i < s.variants.size(); ++i) out << (i ? ", " : "") << s.variants[i];
    out << '\n';
  }
}

}  // namespace facet::synthetic
