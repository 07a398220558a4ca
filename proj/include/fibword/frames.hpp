#pragma once

// FRAME_TL (first row + first column) of subwords of f_inf,inf: extraction,
// reconstruction of the whole block, and the (k,l) -> (k+1,l+1) extension.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "fibword/dawg.hpp"
#include "fibword/error.hpp"
#include "fibword/word1d.hpp"
#include "fibword/word2d.hpp"

namespace fibword {

struct FrameTL {
  Word1D frame_t;  // first row
  Word1D frame_l;  // first column
  char s_joint;    // shared top-left letter

  bool operator==(const FrameTL&) const = default;
};

inline FrameTL frame_tl(const Word2D& w) {
  classify_lines(w);
  return {w.row(1), w.col(1), w.at(1, 1)};
}

inline Word1D frame_b(const Word2D& w) { return w.row(w.rows()); }
inline Word1D frame_r(const Word2D& w) { return w.col(w.cols()); }

/// Rebuilds the block: row i is FRAME_T when FRAME_L[i] is the joint letter,
/// otherwise FRAME_T with a<->c, b<->d swapped.
inline Word2D fill_from_frame(const FrameTL& f) {
  if (f.frame_t.empty() || f.frame_l.empty()) throw Error(ErrorKind::EmptyWord, "frame words must be non-empty");
  if (f.frame_t.front() != f.s_joint || f.frame_l.front() != f.s_joint) {
    throw Error(ErrorKind::InconsistentJoint, "frame words must both start with the joint letter");
  }
  Alphabet1D row_alphabet = kRowDC, col_alphabet = kColDB;
  try {
    row_alphabet = row_alphabet_of(f.frame_t);
    col_alphabet = col_alphabet_of(f.frame_l);
  } catch (const Error&) {
    throw Error(ErrorKind::NotAFactor, "frame word mixes alphabets");
  }
  if (!is_factor1d(f.frame_t, row_alphabet)) {
    throw Error(ErrorKind::NotAFactor, "FRAME_T '" + f.frame_t + "' is not a row factor");
  }
  if (!is_factor1d(f.frame_l, col_alphabet)) {
    throw Error(ErrorKind::NotAFactor, "FRAME_L '" + f.frame_l + "' is not a column factor");
  }
  Word1D swapped = f.frame_t;
  for (char& ch : swapped) ch = detail::swap_row_alphabet(ch);
  std::string data;
  for (char ch : f.frame_l) data += ch == f.s_joint ? f.frame_t : swapped;
  return {f.frame_l.size(), f.frame_t.size(), std::move(data)};
}

/// I: neither frame word special; II: only FRAME_L; III: only FRAME_T; IV: both.
enum class FrameType { I, II, III, IV };

inline const char* to_string(FrameType t) {
  switch (t) {
    case FrameType::I: return "I";
    case FrameType::II: return "II";
    case FrameType::III: return "III";
    case FrameType::IV: return "IV";
  }
  return "?";
}

inline FrameType classify_frame(const FrameTL& f) {
  const bool top = f.frame_t == special_factor(f.frame_t.size(), row_alphabet_of(f.frame_t));
  const bool left = f.frame_l == special_factor(f.frame_l.size(), col_alphabet_of(f.frame_l));
  if (top && left) return FrameType::IV;
  if (top) return FrameType::III;
  if (left) return FrameType::II;
  return FrameType::I;
}

/// The one, two or four (k+1,l+1) subwords whose top-left (k,l) block is w.
inline std::vector<Word2D> extend_frame(const Word2D& w) {
  const FrameTL f = frame_tl(w);
  const auto right = right_extensions(f.frame_t, row_alphabet_of(f.frame_t));
  const auto down = right_extensions(f.frame_l, col_alphabet_of(f.frame_l));
  std::vector<Word2D> out;
  for (char x : right) {
    for (char y : down) out.push_back(fill_from_frame({f.frame_t + x, f.frame_l + y, f.s_joint}));
  }
  return out;
}

/// Extends the complete set of (k,l) subwords to the complete (k+1,l+1) set.
inline std::set<Word2D> extend_diagonal(const std::set<Word2D>& words) {
  if (words.empty()) throw Error(ErrorKind::IncompleteInput, "no subwords to extend");
  const std::size_t k = words.begin()->rows();
  const std::size_t l = words.begin()->cols();
  for (const auto& w : words) {
    if (w.rows() != k || w.cols() != l) throw Error(ErrorKind::IncompleteInput, "subwords differ in size");
  }
  if (words.size() != (k + 1) * (l + 1)) {
    throw Error(ErrorKind::IncompleteInput, "expected " + std::to_string((k + 1) * (l + 1)) +
                                                " subwords of size (" + std::to_string(k) + "," +
                                                std::to_string(l) + "), got " + std::to_string(words.size()));
  }
  std::set<Word2D> out;
  for (const auto& w : words) {
    for (auto& e : extend_frame(w)) out.insert(std::move(e));
  }
  return out;
}

/// All (k,l) subwords: grow the (1,1) set diagonally to side max(k,l), then
/// keep the distinct top-left (k,l) blocks.
inline std::set<Word2D> enumerate_extension(std::size_t k, std::size_t l) {
  if (k == 0 || l == 0) throw Error(ErrorKind::InvalidArgument, "subword sizes must be positive");
  std::set<Word2D> square;
  for (char ch : {'a', 'b', 'c', 'd'}) square.insert(Word2D(1, 1, std::string(1, ch)));
  const std::size_t side = std::max(k, l);
  for (std::size_t s = 1; s < side; ++s) square = extend_diagonal(square);
  std::set<Word2D> out;
  for (const auto& w : square) out.insert(prefix2d(w, k, l));
  return out;
}

}  // namespace fibword
