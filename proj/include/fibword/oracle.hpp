#pragma once

// Brute-force ground truth on explicit prefixes of f_inf,inf, and the
// cross-method verification report.

#include <cstddef>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fibword/conjugacy.hpp"
#include "fibword/dawg.hpp"
#include "fibword/error.hpp"
#include "fibword/frames.hpp"
#include "fibword/locator.hpp"
#include "fibword/word2d.hpp"

namespace fibword {

/// Distinct (k,l) windows of a given grid.
inline std::set<Word2D> windows(const Word2D& grid, std::size_t k, std::size_t l) {
  std::set<Word2D> out;
  for (std::size_t i = 1; i + k - 1 <= grid.rows(); ++i) {
    for (std::size_t j = 1; j + l - 1 <= grid.cols(); ++j) out.insert(subblock(grid, {i, j, i + k - 1, j + l - 1}));
  }
  return out;
}

/// All distinct (k,l) blocks of the (R,C) prefix.
inline std::set<Word2D> oracle_subwords(std::size_t k, std::size_t l, std::size_t R, std::size_t C) {
  if (k == 0 || l == 0 || R < k || C < l) {
    throw Error(ErrorKind::BadBounds, "prefix must be at least as large as the subword");
  }
  return windows(mu_prefix(R, C), k, l);
}

/// Every offset where w matches inside the (R,C) prefix, row-major.
inline std::vector<Occurrence2D> oracle_occurrences(const Word2D& w, std::size_t R, std::size_t C) {
  if (w.empty() || R < w.rows() || C < w.cols()) {
    throw Error(ErrorKind::BadBounds, "prefix must be at least as large as the word");
  }
  const Word2D grid = mu_prefix(R, C);
  std::vector<Occurrence2D> out;
  for (std::size_t i = 0; i + w.rows() <= R; ++i) {
    for (std::size_t j = 0; j + w.cols() <= C; ++j) {
      bool match = true;
      for (std::size_t r = 0; r < w.rows() && match; ++r) {
        match = grid.data().compare(
                    (i + r) * C + j, w.cols(), w.data(), r * w.cols(), w.cols()) == 0;
      }
      if (match) out.push_back({i, j});
    }
  }
  return out;
}

/// Prefix (F(m+2), F(n+2)) with m, n least such that k < F(m), l < F(n), F11.
inline std::pair<std::size_t, std::size_t> sufficient_prefix(std::size_t k, std::size_t l) {
  return {fib(covering_index(k) + 2, Numbering::F11), fib(covering_index(l) + 2, Numbering::F11)};
}

struct MethodResult {
  std::string name;
  std::set<Word2D> words;
};

struct VerifyReport {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t expected = 0;
  std::pair<std::size_t, std::size_t> prefix;
  bool oracle_stable = false;  // same count at the prefix and at twice the prefix
  std::vector<MethodResult> methods;
  std::vector<std::vector<bool>> agree;  // pairwise set equality

  bool counts_ok() const {
    for (const auto& m : methods) {
      if (m.words.size() != expected) return false;
    }
    return true;
  }

  bool all_agree() const {
    for (const auto& row : agree) {
      for (bool b : row) {
        if (!b) return false;
      }
    }
    return true;
  }

  bool passed() const { return oracle_stable && counts_ok() && all_agree(); }
};

inline VerifyReport verify(std::size_t k, std::size_t l) {
  if (k == 0 || l == 0) throw Error(ErrorKind::InvalidArgument, "subword sizes must be positive");
  VerifyReport r;
  r.k = k;
  r.l = l;
  r.expected = (k + 1) * (l + 1);
  r.prefix = sufficient_prefix(k, l);

  r.methods.push_back({"dawg", enumerate_dawg(k, l)});
  r.methods.push_back({"extend", enumerate_extension(k, l)});
  r.methods.push_back({"conjugate", enumerate_conjugation(k, l)});
  if (k >= 2 && l >= 2) r.methods.push_back({"prefix", enumerate_prefix_conjugates(k, l)});
  auto oracle = oracle_subwords(k, l, r.prefix.first, r.prefix.second);
  const auto doubled = oracle_subwords(k, l, 2 * r.prefix.first, 2 * r.prefix.second);
  r.oracle_stable = doubled == oracle;
  r.methods.push_back({"oracle", std::move(oracle)});

  for (const auto& a : r.methods) {
    std::vector<bool> row;
    for (const auto& b : r.methods) row.push_back(a.words == b.words);
    r.agree.push_back(std::move(row));
  }
  return r;
}

inline std::string to_text(const VerifyReport& r) {
  std::ostringstream out;
  out << "size (" << r.k << "," << r.l << "), expected " << r.expected << " subwords\n";
  out << "oracle prefix (" << r.prefix.first << "," << r.prefix.second << "), doubled-prefix check: "
      << (r.oracle_stable ? "stable" : "UNSTABLE") << "\n";
  for (const auto& m : r.methods) {
    out << "  " << m.name << ": " << m.words.size() << (m.words.size() == r.expected ? " ok" : " WRONG COUNT")
        << "\n";
  }
  out << "pairwise agreement:";
  for (const auto& m : r.methods) out << " " << m.name;
  out << "\n";
  for (std::size_t i = 0; i < r.methods.size(); ++i) {
    out << "  " << r.methods[i].name << ":";
    for (bool b : r.agree[i]) out << " " << (b ? "=" : "X");
    out << "\n";
  }
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["l"] = r.l;
  j["expected"] = r.expected;
  j["prefix"] = {r.prefix.first, r.prefix.second};
  j["oracle_stable"] = r.oracle_stable;
  j["methods"] = nlohmann::json::array();
  for (const auto& m : r.methods) j["methods"].push_back({{"name", m.name}, {"size", m.words.size()}});
  j["agree"] = r.agree;
  j["passed"] = r.passed();
  return j;
}

}  // namespace fibword
