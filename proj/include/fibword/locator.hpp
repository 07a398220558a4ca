#pragma once

// Occurrences of subwords of f_inf,inf. A subword is fixed by its FRAME_TL,
// so it occurs at (x, y) exactly when its first column occurs at offset x of
// the column word over that column's alphabet and its first row occurs at
// offset y of the matching row word. Both 1D sets are shifted Z_n sets.

#include <compare>
#include <vector>

#include "fibword/error.hpp"
#include "fibword/frames.hpp"
#include "fibword/word1d.hpp"
#include "fibword/word2d.hpp"

namespace fibword {

/// 0-based offsets: the block covers rows row_offset+1.. and columns col_offset+1..
struct Occurrence2D {
  Offset row_offset = 0;
  Offset col_offset = 0;
  auto operator<=>(const Occurrence2D&) const = default;
};

/// occ(w) = X x Y with X from FRAME_L and Y from FRAME_T.
struct OccDescriptor2D {
  OccDescriptor1D row_part;
  OccDescriptor1D col_part;
  Alphabet1D column_alphabet;  // alphabet FRAME_L is read in
  Alphabet1D row_alphabet;     // alphabet FRAME_T is read in

  Occurrence2D first() const { return {row_part.first_occ, col_part.first_occ}; }

  std::vector<Occurrence2D> members(Offset row_bound, Offset col_bound) const {
    const auto xs = row_part.members(row_bound);
    const auto ys = col_part.members(col_bound);
    std::vector<Occurrence2D> out;
    out.reserve(xs.size() * ys.size());
    for (Offset x : xs) {
      for (Offset y : ys) out.push_back({x, y});
    }
    return out;
  }
};

inline OccDescriptor2D describe_occ2d(const Word2D& w) {
  require_nonempty(w);
  const FrameTL f = frame_tl(w);
  if (fill_from_frame(f) != w) {
    throw Error(ErrorKind::NotAFactor, "block is not determined by its frame");
  }
  const Alphabet1D columns = col_alphabet_of(f.frame_l);  // {d,b} or {c,a}
  const Alphabet1D rows = row_alphabet_of(f.frame_t);     // {d,c} or {b,a}
  return {describe_occ1d(f.frame_l, columns), describe_occ1d(f.frame_t, rows), columns, rows};
}

inline Occurrence2D first_occ2d(const Word2D& w) { return describe_occ2d(w).first(); }

/// Occurrences with row_offset < row_bound and col_offset < col_bound,
/// row-major ascending.
inline std::vector<Occurrence2D> occ2d(const Word2D& w, Offset row_bound, Offset col_bound) {
  return describe_occ2d(w).members(row_bound, col_bound);
}

}  // namespace fibword
