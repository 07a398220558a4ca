#pragma once

// Rectangular words over {a,b,c,d}. Coordinates at this API are 1-based
// (row i, column j); storage is a dense row-major string.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fibword/error.hpp"
#include "fibword/word1d.hpp"

namespace fibword {

class Word2D {
 public:
  /// The empty array (0,0).
  Word2D() = default;

  Word2D(std::size_t rows, std::size_t cols, std::string data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if ((rows == 0) != (cols == 0)) {
      throw Error(ErrorKind::ShapeMismatch, "arrays of size (m,0) or (0,m) are not defined");
    }
    if (rows * cols != data_.size()) {
      throw Error(ErrorKind::ShapeMismatch, "grid data does not match rows*cols");
    }
    if (!std::all_of(data_.begin(), data_.end(), is_letter)) {
      throw Error(ErrorKind::InvalidArgument, "letters must come from {a,b,c,d}");
    }
  }

  static Word2D from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    std::string data;
    for (const auto& r : rows) {
      if (r.size() != rows.front().size()) {
        throw Error(ErrorKind::ShapeMismatch, "rows of unequal length");
      }
      data += r;
    }
    return {rows.size(), rows.front().size(), std::move(data)};
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }
  const std::string& data() const { return data_; }

  char at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      throw Error(ErrorKind::OutOfDomain, "coordinate outside the domain");
    }
    return data_[(i - 1) * cols_ + (j - 1)];
  }

  std::string row(std::size_t i) const {
    at(i, 1);
    return data_.substr((i - 1) * cols_, cols_);
  }

  std::string col(std::size_t j) const {
    at(1, j);
    std::string out;
    out.reserve(rows_);
    for (std::size_t i = 1; i <= rows_; ++i) out.push_back(data_[(i - 1) * cols_ + (j - 1)]);
    return out;
  }

  std::vector<std::string> row_strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= rows_; ++i) out.push_back(row(i));
    return out;
  }

  // Same-size words order by their row-major spelling.
  auto operator<=>(const Word2D&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::string data_;
};

inline void require_nonempty(const Word2D& w) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "operation undefined on the empty array");
}

/// Side-by-side juxtaposition; defined when row counts agree.
inline Word2D concat_col(const Word2D& u, const Word2D& v) {
  if (u.empty()) return v;
  if (v.empty()) return u;
  if (u.rows() != v.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "column concatenation needs equal row counts");
  }
  std::string data;
  data.reserve(u.data().size() + v.data().size());
  for (std::size_t i = 1; i <= u.rows(); ++i) data += u.row(i) + v.row(i);
  return {u.rows(), u.cols() + v.cols(), std::move(data)};
}

/// Stacking; defined when column counts agree.
inline Word2D concat_row(const Word2D& u, const Word2D& v) {
  if (u.empty()) return v;
  if (v.empty()) return u;
  if (u.cols() != v.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "row concatenation needs equal column counts");
  }
  return {u.rows() + v.rows(), u.cols(), u.data() + v.data()};
}

/// Corner letters f_{0,0}, f_{0,1}, f_{1,0}, f_{1,1}.
struct Seeds2D {
  char s00 = 'a';
  char s01 = 'b';
  char s10 = 'c';
  char s11 = 'd';

  void validate() const {
    for (char ch : {s00, s01, s10, s11}) {
      if (!is_letter(ch)) throw Error(ErrorKind::InvalidArgument, "seed letters must come from {a,b,c,d}");
    }
    if (s00 == s01 && s01 == s10 && s10 == s11) {
      throw Error(ErrorKind::InvalidArgument, "seeds must not all be identical");
    }
  }
};

enum class Expansion { RowsFirst, ColumnsFirst };

/// f_{m,n} of size (F(m), F(n)) in F11 numbering. RowsFirst grows the two
/// seed rows f_{0,*}, f_{1,*} to width first and then stacks; ColumnsFirst
/// does the transpose. Both give the same array.
inline Word2D fib_array(std::size_t m, std::size_t n, const Seeds2D& seeds = {},
                        Expansion expansion = Expansion::RowsFirst) {
  seeds.validate();
  const auto letter = [](char ch) { return Word2D(1, 1, std::string(1, ch)); };
  // grow(x0, x1, steps, join): x_{t+1} = join(x_t, x_{t-1})
  const auto grow = [](Word2D x0, Word2D x1, std::size_t steps, auto join) {
    if (steps == 0) return x0;
    for (std::size_t t = 1; t < steps; ++t) {
      Word2D next = join(x1, x0);
      x0 = std::move(x1);
      x1 = std::move(next);
    }
    return x1;
  };
  if (expansion == Expansion::RowsFirst) {
    Word2D r0 = grow(letter(seeds.s00), letter(seeds.s01), n, concat_col);
    Word2D r1 = grow(letter(seeds.s10), letter(seeds.s11), n, concat_col);
    return grow(std::move(r0), std::move(r1), m, concat_row);
  }
  Word2D c0 = grow(letter(seeds.s00), letter(seeds.s10), m, concat_row);
  Word2D c1 = grow(letter(seeds.s01), letter(seeds.s11), m, concat_row);
  return grow(std::move(c0), std::move(c1), n, concat_col);
}

/// One application of the 2D morphism:
/// d -> [dc/ba], c -> [d/b], b -> [dc], a -> [d].
/// Rows over {d,c} become two rows, rows over {b,a} one.
inline Word2D apply_mu(const Word2D& w) {
  require_nonempty(w);
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= w.rows(); ++i) {
    std::string top, bottom;
    for (char ch : w.row(i)) {
      switch (ch) {
        case 'd': top += "dc"; bottom += "ba"; break;
        case 'c': top += "d"; bottom += "b"; break;
        case 'b': top += "dc"; break;
        case 'a': top += "d"; break;
      }
    }
    if (!bottom.empty() && bottom.size() != top.size()) {
      throw Error(ErrorKind::NotFibStructured, "morphism images do not tile");
    }
    out.push_back(std::move(top));
    if (!bottom.empty()) out.push_back(std::move(bottom));
  }
  return Word2D::from_rows(out);
}

/// Top-left (rows, cols) block of the fixed point of the morphism on d.
inline Word2D mu_prefix(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::InvalidArgument, "prefix sizes must be positive");
  }
  Word2D w(1, 1, "d");
  while (w.rows() < rows || w.cols() < cols) w = apply_mu(w);
  std::string data;
  data.reserve(rows * cols);
  for (std::size_t i = 1; i <= rows; ++i) data += w.row(i).substr(0, cols);
  return {rows, cols, std::move(data)};
}

/// Inclusive 1-based region [(i, j), (i2, j2)].
struct Domain2D {
  std::size_t i, j, i2, j2;
};

inline Word2D subblock(const Word2D& w, const Domain2D& dom) {
  if (dom.i < 1 || dom.j < 1 || dom.i > dom.i2 || dom.j > dom.j2 || dom.i2 > w.rows() ||
      dom.j2 > w.cols()) {
    throw Error(ErrorKind::OutOfDomain, "region is not inside the word's domain");
  }
  std::string data;
  const std::size_t width = dom.j2 - dom.j + 1;
  for (std::size_t r = dom.i; r <= dom.i2; ++r) data += w.data().substr((r - 1) * w.cols() + dom.j - 1, width);
  return {dom.i2 - dom.i + 1, width, std::move(data)};
}

/// Top-left (k, l) block.
inline Word2D prefix2d(const Word2D& w, std::size_t k, std::size_t l) {
  return subblock(w, {1, 1, k, l});
}

// Seed orders of the four line words of f_inf,inf.
inline constexpr Alphabet1D kRowDC{'d', 'c'};
inline constexpr Alphabet1D kRowBA{'b', 'a'};
inline constexpr Alphabet1D kColDB{'d', 'b'};
inline constexpr Alphabet1D kColCA{'c', 'a'};

/// Row alphabet ({d,c} or {b,a}) a horizontal line belongs to.
inline Alphabet1D row_alphabet_of(const std::string& line) {
  if (!line.empty() && std::all_of(line.begin(), line.end(), [](char ch) { return ch == 'c' || ch == 'd'; })) {
    return kRowDC;
  }
  if (!line.empty() && std::all_of(line.begin(), line.end(), [](char ch) { return ch == 'a' || ch == 'b'; })) {
    return kRowBA;
  }
  throw Error(ErrorKind::NotFibStructured, "row '" + line + "' mixes alphabets");
}

/// Column alphabet ({d,b} or {c,a}) a vertical line belongs to.
inline Alphabet1D col_alphabet_of(const std::string& line) {
  if (!line.empty() && std::all_of(line.begin(), line.end(), [](char ch) { return ch == 'b' || ch == 'd'; })) {
    return kColDB;
  }
  if (!line.empty() && std::all_of(line.begin(), line.end(), [](char ch) { return ch == 'a' || ch == 'c'; })) {
    return kColCA;
  }
  throw Error(ErrorKind::NotFibStructured, "column '" + line + "' mixes alphabets");
}

struct LineClasses {
  std::vector<Alphabet1D> rows;
  std::vector<Alphabet1D> cols;
};

/// Tags every row and column with its alphabet and checks that lines sharing
/// a tag are identical.
inline LineClasses classify_lines(const Word2D& w) {
  require_nonempty(w);
  LineClasses out;
  const auto check = [](const std::vector<std::string>& lines, auto alphabet_of,
                        std::vector<Alphabet1D>& tags) {
    std::vector<std::pair<Alphabet1D, std::string>> seen;
    for (const auto& line : lines) {
      const Alphabet1D tag = alphabet_of(line);
      for (const auto& [t, l] : seen) {
        if (t == tag && l != line) {
          throw Error(ErrorKind::NotFibStructured, "lines over " + tag.name() + " differ");
        }
      }
      seen.emplace_back(tag, line);
      tags.push_back(tag);
    }
  };
  std::vector<std::string> cols;
  for (std::size_t j = 1; j <= w.cols(); ++j) cols.push_back(w.col(j));
  check(w.row_strings(), row_alphabet_of, out.rows);
  check(cols, col_alphabet_of, out.cols);
  return out;
}

/// True iff w is not a k1 x k2 tiling of a smaller block.
inline bool is_primitive2d(const Word2D& w) {
  require_nonempty(w);
  for (std::size_t p = 1; p <= w.rows(); ++p) {
    if (w.rows() % p != 0) continue;
    for (std::size_t q = 1; q <= w.cols(); ++q) {
      if (w.cols() % q != 0 || (p == w.rows() && q == w.cols())) continue;
      bool tiles = true;
      for (std::size_t i = 0; i < w.rows() && tiles; ++i) {
        for (std::size_t j = 0; j < w.cols() && tiles; ++j) {
          tiles = w.data()[i * w.cols() + j] == w.data()[(i % p) * w.cols() + (j % q)];
        }
      }
      if (tiles) return false;
    }
  }
  return true;
}

}  // namespace fibword
