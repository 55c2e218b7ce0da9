#pragma once

// Brute-force reference implementations. They deliberately share no code
// with the library: probabilities come from dense tables, similarity from
// dense matrix products, and the focus and MAP computations are literal
// transcriptions of their definitions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "facet/association.hpp"
#include "facet/sparse_matrix.hpp"

namespace oracle {

using Table = std::vector<std::vector<std::uint64_t>>;  // [word][context]
using Dense = std::vector<std::vector<double>>;

struct Probabilities {
  double joint = 0.0;
  double word = 0.0;
  double context = 0.0;
};

inline Probabilities probabilities(const Table& t, std::size_t w, std::size_t c) {
  double total = 0.0, word = 0.0, context = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      const auto v = static_cast<double>(t[i][j]);
      total += v;
      if (i == w) word += v;
      if (j == c) context += v;
    }
  }
  return {static_cast<double>(t[w][c]) / total, word / total, context / total};
}

inline double pmi(const Probabilities& p) { return std::log(p.joint / (p.word * p.context)); }
inline double ppmi(const Probabilities& p) { return p.joint > 0 ? std::max(0.0, pmi(p)) : 0.0; }
// log P(w,c)/(P(w)P(c)) + log P(w,c)/P(w) for the word-to-context direction.
inline double apmi(const Probabilities& p, facet::Direction d) {
  const double given = d == facet::Direction::WordToContext ? p.word : p.context;
  return pmi(p) + std::log(p.joint / given);
}
inline double appmi(const Probabilities& p, double k, facet::Direction d) {
  return p.joint > 0 ? std::max(0.0, apmi(p, d) + k) : 0.0;
}

inline Table random_table(std::mt19937_64& rng, std::size_t words, std::size_t contexts, double density,
                          std::uint64_t max_count) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> count(1, max_count);
  Table t(words, std::vector<std::uint64_t>(contexts, 0));
  for (auto& row : t) {
    for (auto& v : row) {
      if (coin(rng) < density) v = count(rng);
    }
  }
  // Guarantee at least one observation.
  if (words && contexts) t[0][0] = std::max<std::uint64_t>(t[0][0], 1);
  return t;
}

inline facet::CooccurrenceCounts to_counts(const Table& t) {
  std::vector<facet::PairCount> pairs;
  for (std::uint32_t w = 0; w < t.size(); ++w) {
    for (std::uint32_t c = 0; c < t[w].size(); ++c) {
      if (t[w][c]) pairs.push_back({facet::WordId{w}, facet::ContextId{c}, t[w][c]});
    }
  }
  const auto nc = t.empty() ? 0 : t[0].size();
  return facet::CooccurrenceCounts::from_pairs(static_cast<std::uint32_t>(t.size()), static_cast<std::uint32_t>(nc),
                                                std::move(pairs));
}

/// Dense score matrix indexed [word][context] for the given measure.
inline Dense dense_scores(const Table& t, facet::Measure measure, double k, facet::Direction d) {
  Dense out(t.size(), std::vector<double>(t.empty() ? 0 : t[0].size(), 0.0));
  for (std::size_t w = 0; w < t.size(); ++w) {
    for (std::size_t c = 0; c < t[w].size(); ++c) {
      if (!t[w][c]) continue;
      const auto p = probabilities(t, w, c);
      out[w][c] = measure == facet::Measure::Ppmi ? ppmi(p) : appmi(p, k, d);
    }
  }
  return out;
}

inline Dense to_dense(const facet::SparseAssociationMatrix& m) {
  Dense out(m.rows(), std::vector<double>(m.cols(), 0.0));
  for (std::uint32_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    for (std::size_t i = 0; i < row.size(); ++i) out[r][row.columns[i]] = row.scores[i];
  }
  return out;
}

/// Sum over seeds of dot(vc[s], cv^T[w]) for every word, computed as the
/// product of the seed indicator, the V->C matrix and the C->V matrix.
inline std::vector<double> similarity_sum(const Dense& vc, const Dense& cv, const std::vector<std::uint32_t>& seeds) {
  const std::size_t contexts = cv.size();
  const std::size_t words = contexts ? cv[0].size() : 0;
  std::vector<double> profile(contexts, 0.0);
  for (auto s : seeds) {
    for (std::size_t c = 0; c < contexts; ++c) profile[c] += vc[s][c];
  }
  std::vector<double> out(words, 0.0);
  for (std::size_t w = 0; w < words; ++w) {
    for (std::size_t c = 0; c < contexts; ++c) out[w] += profile[c] * cv[c][w];
  }
  return out;
}

/// Indices sorted by score descending, ties (to 1e-12 relative) by lower
/// index; zero scores and
/// excluded indices dropped.
inline std::vector<std::uint32_t> ranking(const std::vector<double>& scores, const std::set<std::uint32_t>& excluded) {
  std::vector<std::uint32_t> order;
  for (std::uint32_t i = 0; i < scores.size(); ++i) {
    if (scores[i] > 0 && !excluded.contains(i)) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
  });
  // Scores equal up to double rounding of the summation are ties.
  for (std::size_t begin = 0; begin < order.size();) {
    std::size_t end = begin + 1;
    while (end < order.size() && scores[order[begin]] - scores[order[end]] <= 1e-12 * scores[order[begin]]) ++end;
    std::sort(order.begin() + begin, order.begin() + end);
    begin = end;
  }
  return order;
}

struct FocusRow {
  std::uint32_t context = 0;
  double activation = 0.0;
  double support = 0.0;
  double score = 0.0;
  double weight = 0.0;
};

/// Context focus, transcribed step by step: for every context sum the seed
/// scores and count supporting seeds, score by f^rho * a, sort, keep n.
inline std::vector<FocusRow> focus(const facet::SparseAssociationMatrix& word_rows,
                                   const std::vector<std::uint32_t>& seeds, double rho, std::uint32_t n) {
  std::vector<FocusRow> rows;
  for (std::uint32_t c = 0; c < word_rows.cols(); ++c) {
    double a = 0.0;
    int supporting = 0;
    for (auto s : seeds) {
      const double v = word_rows.at(s, c);
      a += v;
      if (v > 0) ++supporting;
    }
    if (supporting == 0) continue;
    const double f = static_cast<double>(supporting) / static_cast<double>(seeds.size());
    const double weight = std::pow(f, rho);
    rows.push_back({c, a, f, weight * a, weight});
  }
  std::sort(rows.begin(), rows.end(), [](const FocusRow& x, const FocusRow& y) {
    return x.score != y.score ? x.score > y.score : x.context < y.context;
  });
  if (rows.size() > n) rows.resize(n);
  return rows;
}

using Gold = std::vector<std::set<std::string>>;

inline int synset_of(const Gold& gold, const std::string& term) {
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].contains(term)) return static_cast<int>(i);
  }
  return -1;
}

inline double precision_at(const std::vector<std::string>& list, const Gold& gold, std::size_t i) {
  std::size_t hits = 0;
  for (std::size_t j = 0; j < i; ++j) hits += synset_of(gold, list[j]) >= 0;
  return static_cast<double>(hits) / static_cast<double>(i);
}

/// (synset, 1-based position of its first hit) in order of first appearance.
inline std::vector<std::pair<int, std::size_t>> first_hits(const std::vector<std::string>& list, const Gold& gold) {
  std::vector<std::pair<int, std::size_t>> out;
  std::set<int> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const int s = synset_of(gold, list[i]);
    if (s >= 0 && seen.insert(s).second) out.push_back({s, i + 1});
  }
  return out;
}

inline double map(const std::vector<std::string>& list, const Gold& gold) {
  double sum = 0.0;
  for (auto [s, pos] : first_hits(list, gold)) sum += precision_at(list, gold, pos);
  return gold.empty() ? 0.0 : sum / static_cast<double>(gold.size());
}

inline double map_n(const std::vector<std::string>& list, const Gold& gold, std::size_t n) {
  double sum = 0.0;
  const auto hits = first_hits(list, gold);
  for (std::size_t i = 0; i < hits.size() && i < n; ++i) sum += precision_at(list, gold, hits[i].second);
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

}  // namespace oracle
