#pragma once

// JSON forms of words, factorizations and braids (nlohmann::json).
//   word           [1, 2, 1]            canonical word, [] for e
//   factorization  [[1, 2, 1], [1]]     entries as canonical words
//   braid          [[2, 1], [1, -1]]    [index, sign] pairs, application order

#include <json.hpp>

#include "coxeter.hpp"
#include "hurwitz.hpp"

namespace coxhurwitz {

inline nlohmann::json word_json(const Word& w) { return nlohmann::json(w); }

inline nlohmann::json factorization_json(const Factorization& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : f.entries()) out.push_back(word_json(t.canonical_word()));
  return out;
}

inline Factorization factorization_from_json(const CoxeterSystem& sys, const nlohmann::json& j) {
  if (!j.is_array()) throw ContractError("factorization JSON must be an array of words");
  std::vector<Word> words;
  for (const auto& w : j) {
    if (!w.is_array()) throw ContractError("factorization entry must be an array of indices");
    words.push_back(w.get<Word>());
  }
  return Factorization::from_words(sys, words);
}

inline nlohmann::json braid_json(const BraidWord& b) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& l : b.application_order()) out.push_back({l.index, l.sign});
  return out;
}

inline BraidWord braid_from_json(const nlohmann::json& j) {
  std::vector<BraidLetter> applied;
  for (const auto& l : j) applied.push_back({l.at(0).get<std::size_t>(), l.at(1).get<int>()});
  return BraidWord::from_application_order(applied);
}

inline nlohmann::json coxeter_matrix_json(const CoxeterSystem& sys) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : sys.coxeter_matrix()) {
    nlohmann::json r = nlohmann::json::array();
    for (unsigned v : row) {
      if (v == infinity) r.push_back("inf"); else r.push_back(v);
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace coxhurwitz
