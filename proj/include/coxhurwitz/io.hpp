#pragma once

// Plain-text formats: group files, words, factorizations and braid words.
//
// Group file:
//   rank <m>
//   m <i> <j> <v>      1 <= i < j <= m, v >= 2 or "inf"; unlisted pairs are 2
// '#' starts a comment; blank lines are ignored.

#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bruhat.hpp"
#include "coxeter.hpp"
#include "errors.hpp"
#include "hurwitz.hpp"

namespace coxhurwitz {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::optional<unsigned long> parse_unsigned(const std::string& tok) {
  if (tok.empty() || tok.size() > 9) return std::nullopt;
  unsigned long v = 0;
  for (char ch : tok) {
    if (ch < '0' || ch > '9') return std::nullopt;
    v = v * 10 + static_cast<unsigned long>(ch - '0');
  }
  return v;
}

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r\n") - a + 1);
}

}  // namespace detail

inline CoxeterMatrix parse_group_matrix(std::istream& in) {
  std::optional<CoxeterMatrix> m;
  std::set<std::pair<unsigned long, unsigned long>> seen;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "rank") {
      if (m) throw ParseError(lineno, "duplicate rank line");
      if (tok.size() != 2) throw ParseError(lineno, "expected 'rank <m>'");
      auto r = detail::parse_unsigned(tok[1]);
      if (!r || *r < 1) throw ParseError(lineno, "malformed rank '" + tok[1] + "'");
      m = CoxeterMatrix(*r, std::vector<unsigned>(*r, 2));
      for (std::size_t k = 0; k < *r; ++k) (*m)[k][k] = 1;
    } else if (tok[0] == "m") {
      if (!m) throw ParseError(lineno, "'m' line before 'rank'");
      if (tok.size() != 4) throw ParseError(lineno, "expected 'm <i> <j> <v>'");
      auto i = detail::parse_unsigned(tok[1]);
      auto j = detail::parse_unsigned(tok[2]);
      if (!i) throw ParseError(lineno, "malformed index '" + tok[1] + "'");
      if (!j) throw ParseError(lineno, "malformed index '" + tok[2] + "'");
      const std::size_t rank = m->size();
      if (*i == *j) throw ParseError(lineno, "diagonal entry m " + tok[1] + " " + tok[2] + " cannot be set");
      if (*i < 1 || *j < 1 || *i > rank || *j > rank) throw ParseError(lineno, "index out of range 1.." + std::to_string(rank));
      if (*i > *j) throw ParseError(lineno, "expected i < j");
      unsigned v;
      if (tok[3] == "inf") {
        v = infinity;
      } else {
        auto parsed = detail::parse_unsigned(tok[3]);
        if (!parsed) throw ParseError(lineno, "malformed value '" + tok[3] + "'");
        if (*parsed < 2) throw ParseError(lineno, "entry must be at least 2 or inf");
        v = static_cast<unsigned>(*parsed);
      }
      if (!seen.emplace(*i, *j).second) throw ParseError(lineno, "duplicate pair " + tok[1] + " " + tok[2]);
      (*m)[*i - 1][*j - 1] = (*m)[*j - 1][*i - 1] = v;
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!m) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'rank' line");
  return *m;
}

inline CoxeterSystem parse_group_file(const std::string& text) {
  std::istringstream in(text);
  return CoxeterSystem::from_matrix(parse_group_matrix(in));
}

inline std::string format_group_file(const CoxeterSystem& sys) {
  std::ostringstream os;
  os << "rank " << sys.rank() << "\n";
  for (unsigned i = 1; i <= sys.rank(); ++i)
    for (unsigned j = i + 1; j <= sys.rank(); ++j) {
      unsigned v = sys.entry(static_cast<int>(i), static_cast<int>(j));
      if (v == 2) continue;
      os << "m " << i << " " << j << " ";
      if (v == infinity) os << "inf"; else os << v;
      os << "\n";
    }
  return os.str();
}

/// Space-separated generator indices; "e" or the empty string is the identity.
inline Word parse_word(const std::string& text) {
  Word w;
  for (const auto& tok : detail::split_ws(text)) {
    if (tok == "e") continue;
    auto v = detail::parse_unsigned(tok);
    if (!v || *v < 1) throw ContractError("malformed generator index '" + tok + "'");
    w.push_back(static_cast<int>(*v));
  }
  return w;
}

inline std::string format_word(const Word& w) { return word_key(w); }

/// ';'-separated words, each a reflection.
inline Factorization parse_factorization(const CoxeterSystem& sys, const std::string& text) {
  std::vector<Word> words;
  if (!detail::trim(text).empty()) {
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, ';')) {
      if (detail::trim(part).empty()) throw ContractError("empty entry in factorization '" + text + "'");
      words.push_back(parse_word(part));
    }
  }
  return Factorization::from_words(sys, words);
}

inline std::string format_factorization(const Factorization& f) {
  std::string s;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) s += " ; ";
    s += format_word(f[k].canonical_word());
  }
  return s;
}

/// Signed indices in application order: "2 -1" is sigma_2, then sigma_1^{-1}.
inline std::string format_braid(const BraidWord& b) {
  std::string s;
  for (const auto& l : b.application_order()) {
    if (!s.empty()) s += ' ';
    s += (l.sign < 0 ? "-" : "") + std::to_string(l.index);
  }
  return s;
}

inline BraidWord parse_braid(const std::string& text) {
  std::vector<BraidLetter> applied;
  for (const auto& tok : detail::split_ws(text)) {
    const bool neg = tok.front() == '-';
    auto v = detail::parse_unsigned(neg ? tok.substr(1) : tok);
    if (!v || *v < 1) throw ContractError("malformed braid letter '" + tok + "'");
    applied.push_back({*v, neg ? -1 : 1});
  }
  return BraidWord::from_application_order(applied);
}

}  // namespace coxhurwitz
