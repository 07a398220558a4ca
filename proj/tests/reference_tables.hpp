#pragma once

// Published reference data for the size (2,2) and (3,3) subwords of the
// 2D infinite Fibonacci word, transcribed row by row.

#include <set>
#include <string>
#include <vector>

#include "fibword/word2d.hpp"

namespace fibword::reference {

inline Word2D W(std::vector<std::string> rows) { return Word2D::from_rows(rows); }

/// First row, last column and the resulting (2,2) block.
struct PathRow {
  std::string h;
  std::string v;
  Word2D subword;
};

inline std::vector<PathRow> size22_paths() {
  return {
      {"dc", "ca", W({"dc", "ba"})}, {"dc", "cc", W({"dc", "dc"})}, {"dd", "db", W({"dd", "bb"})},
      {"dd", "dd", W({"dd", "dd"})}, {"cd", "db", W({"cd", "ab"})}, {"cd", "dd", W({"cd", "cd"})},
      {"ba", "ac", W({"ba", "dc"})}, {"bb", "bd", W({"bb", "dd"})}, {"ab", "bd", W({"ab", "cd"})},
  };
}

inline std::set<Word2D> size22_set() {
  std::set<Word2D> out;
  for (const auto& r : size22_paths()) out.insert(r.subword);
  return out;
}

/// A (2,2) subword, its frame type and its (3,3) extensions.
struct ExtensionRow {
  Word2D base;
  const char* type;
  std::vector<Word2D> extended;
};

inline std::vector<ExtensionRow> size33_extensions() {
  return {
      {W({"dc", "ba"}), "I", {W({"dcd", "bab", "dcd"})}},
      {W({"dc", "dc"}), "I", {W({"dcd", "dcd", "bab"})}},
      {W({"dd", "bb"}), "I", {W({"ddc", "bba", "ddc"})}},
      {W({"dd", "dd"}), "I", {W({"ddc", "ddc", "bba"})}},
      {W({"cd", "ab"}), "III", {W({"cdc", "aba", "cdc"}), W({"cdd", "abb", "cdd"})}},
      {W({"cd", "cd"}), "III", {W({"cdc", "cdc", "aba"}), W({"cdd", "cdd", "abb"})}},
      {W({"ba", "dc"}), "II", {W({"bab", "dcd", "bab"}), W({"bab", "dcd", "dcd"})}},
      {W({"bb", "dd"}), "II", {W({"bba", "ddc", "bba"}), W({"bba", "ddc", "ddc"})}},
      {W({"ab", "cd"}),
       "IV",
       {W({"aba", "cdc", "aba"}), W({"aba", "cdc", "cdc"}), W({"abb", "cdd", "abb"}), W({"abb", "cdd", "cdd"})}},
  };
}

inline std::set<Word2D> size33_set() {
  std::set<Word2D> out;
  for (const auto& r : size33_extensions()) out.insert(r.extended.begin(), r.extended.end());
  return out;
}

/// (i, j) meaning T_row^-i T_col^-j of q_{3,3}, the conjugate, its (2,2) prefix.
struct ConjugateRow {
  int i;
  int j;
  Word2D conjugate;
  Word2D prefix;
};

inline std::vector<ConjugateRow> q33_conjugates() {
  return {
      {0, 0, W({"abb", "cdd", "cdd"}), W({"ab", "cd"})}, {0, 1, W({"bab", "dcd", "dcd"}), W({"ba", "dc"})},
      {0, 2, W({"bba", "ddc", "ddc"}), W({"bb", "dd"})}, {1, 0, W({"cdd", "abb", "cdd"}), W({"cd", "ab"})},
      {1, 1, W({"dcd", "bab", "dcd"}), W({"dc", "ba"})}, {1, 2, W({"ddc", "bba", "ddc"}), W({"dd", "bb"})},
      {2, 0, W({"cdd", "cdd", "abb"}), W({"cd", "cd"})}, {2, 1, W({"dcd", "dcd", "bab"}), W({"dc", "dc"})},
      {2, 2, W({"ddc", "ddc", "bba"}), W({"dd", "dd"})},
  };
}

}  // namespace fibword::reference
