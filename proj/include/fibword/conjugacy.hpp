#pragma once

// Cyclic row/column rotations of 2D words, conjugacy classes, and the two
// conjugation-based enumerations of (k,l) subwords.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fibword/error.hpp"
#include "fibword/word1d.hpp"
#include "fibword/word2d.hpp"

namespace fibword {

/// Exponents of T_row and T_col. T_col moves the first column to the end,
/// T_row the first row to the bottom; negative exponents invert.
struct Rotation2D {
  long long i = 0;
  long long j = 0;
};

/// T_row^i(T_col^j(w)). The two rotations commute.
inline Word2D rotate2d(const Word2D& w, Rotation2D r) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "cannot rotate the empty array");
  const auto norm = [](long long p, std::size_t n) {
    const auto m = static_cast<long long>(n);
    return static_cast<std::size_t>(((p % m) + m) % m);
  };
  const std::size_t di = norm(r.i, w.rows());
  const std::size_t dj = norm(r.j, w.cols());
  std::string data(w.data().size(), ' ');
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      data[i * w.cols() + j] = w.data()[((i + di) % w.rows()) * w.cols() + (j + dj) % w.cols()];
    }
  }
  return {w.rows(), w.cols(), std::move(data)};
}

inline std::set<Word2D> conjugacy_class(const Word2D& w) {
  require_nonempty(w);
  std::set<Word2D> out;
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      out.insert(rotate2d(w, {static_cast<long long>(i), static_cast<long long>(j)}));
    }
  }
  return out;
}

/// Rotation taking f_{m,n} to q_{m,n}: per axis, F(m)-1 when the index is
/// even and F(m-1)-1 when odd (F11 numbering).
inline Rotation2D special_rotation(std::size_t m, std::size_t n) {
  if (m < 2 || n < 2) throw Error(ErrorKind::OutOfRange, "special conjugate needs m, n >= 2");
  const auto exponent = [](std::size_t x) {
    return static_cast<long long>((x % 2 == 0 ? fib(x, Numbering::F11) : fib(x - 1, Numbering::F11)) - 1);
  };
  return {exponent(m), exponent(n)};
}

inline Word2D special_conjugate2d(std::size_t m, std::size_t n) {
  return rotate2d(fib_array(m, n), special_rotation(m, n));
}

/// Least x >= 2 with k < F(x), F11 numbering.
inline std::size_t covering_index(std::size_t k) {
  std::size_t x = 2;
  while (fib(x, Numbering::F11) <= k) ++x;
  return x;
}

/// (k,l) prefixes of T_row^-i T_col^-j (q_{m,n}) for 0<=i<=k, 0<=j<=l.
inline std::set<Word2D> enumerate_conjugation(std::size_t k, std::size_t l) {
  if (k == 0 || l == 0) throw Error(ErrorKind::InvalidArgument, "subword sizes must be positive");
  const Word2D q = special_conjugate2d(covering_index(k), covering_index(l));
  std::set<Word2D> out;
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = 0; j <= l; ++j) {
      out.insert(prefix2d(rotate2d(q, {-static_cast<long long>(i), -static_cast<long long>(j)}), k, l));
    }
  }
  return out;
}

/// Rotation exponents {0..F(m)-1} U {F(m+2)-k-1..F(m+1)-1} for F(m) <= k < F(m+1).
inline std::vector<std::size_t> prefix_rotation_indices(std::size_t m, std::size_t k) {
  const auto F = [](std::size_t x) { return fib(x, Numbering::F11); };
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < F(m); ++i) out.insert(i);
  for (std::size_t i = F(m + 2) - k - 1; i <= F(m + 1) - 1; ++i) out.insert(i);
  return {out.begin(), out.end()};
}

/// Greatest m >= 2 with F(m) <= k, F11 numbering; requires k >= 2.
inline std::size_t bracket_index(std::size_t k) {
  if (k < 2) throw Error(ErrorKind::OutOfRange, "prefix-conjugate enumeration needs sizes >= 2");
  std::size_t m = 2;
  while (fib(m + 1, Numbering::F11) <= k) ++m;
  return m;
}

/// (k,l) prefixes of T_row^i T_col^j (f_{m+1,n+1}) over the bracket index sets.
inline std::set<Word2D> enumerate_prefix_conjugates(std::size_t k, std::size_t l) {
  const std::size_t m = bracket_index(k);
  const std::size_t n = bracket_index(l);
  const Word2D f = fib_array(m + 1, n + 1);
  std::set<Word2D> out;
  for (std::size_t i : prefix_rotation_indices(m, k)) {
    for (std::size_t j : prefix_rotation_indices(n, l)) {
      out.insert(prefix2d(rotate2d(f, {static_cast<long long>(i), static_cast<long long>(j)}), k, l));
    }
  }
  return out;
}

}  // namespace fibword
