#pragma once

// One-dimensional Fibonacci words over a binary alphabet, their factors and
// conjugates, and occurrence arithmetic in the Fibonacci number system.
//
// A 1D word is a plain std::string of letters from {a,b,c,d}. Offsets are
// 0-based: u occurs at i when f_inf[i .. i+|u|) == u.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fibword/error.hpp"

namespace fibword {

using Word1D = std::string;
using Offset = std::uint64_t;

constexpr bool is_letter(char ch) { return ch >= 'a' && ch <= 'd'; }

/// Ordered pair of distinct letters. The infinite word over it starts with
/// `first` and is the fixed point of first -> first.second, second -> first.
struct Alphabet1D {
  char first;
  char second;

  constexpr Alphabet1D(char f, char s) : first(f), second(s) {
    if (!is_letter(f) || !is_letter(s) || f == s) {
      throw Error(ErrorKind::InvalidArgument,
                  "alphabet needs two distinct letters from {a,b,c,d}");
    }
  }

  /// Parses a two-letter spelling such as "ba".
  static Alphabet1D parse(std::string_view text) {
    if (text.size() != 2) {
      throw Error(ErrorKind::InvalidArgument,
                  "alphabet must be spelled with two letters, got '" + std::string(text) + "'");
    }
    return Alphabet1D(text[0], text[1]);
  }

  constexpr bool contains(char ch) const { return ch == first || ch == second; }
  constexpr char other(char ch) const { return ch == first ? second : first; }
  /// 0 for `first`, 1 for `second`; the canonical order of letters.
  constexpr int rank(char ch) const { return ch == first ? 0 : 1; }
  std::string name() const { return {first, second}; }

  constexpr bool operator==(const Alphabet1D&) const = default;
};

/// F11 counts 1,1,2,3,5,..; F12 counts 1,2,3,5,8,..
enum class Numbering { F11, F12 };

/// AbStandard: f_0 = second, f_1 = first, f_n = f_{n-1} f_{n-2}.
/// Loc:        f_0 = first,  f_1 = first.second, f_{n+1} = f_n f_{n-1}.
enum class Seeds { AbStandard, Loc };

struct FibConvention {
  Numbering numbering;
  Seeds seeds;
  constexpr bool operator==(const FibConvention&) const = default;
};

inline constexpr FibConvention kAbStandard{Numbering::F11, Seeds::AbStandard};
inline constexpr FibConvention kLoc{Numbering::F12, Seeds::Loc};

/// n-th Fibonacci number. Throws OutOfRange past 64-bit capacity.
inline std::uint64_t fib(std::size_t n, Numbering numbering) {
  std::uint64_t prev = 1;
  std::uint64_t cur = numbering == Numbering::F11 ? 1 : 2;
  if (n == 0) return prev;
  for (std::size_t i = 1; i < n; ++i) {
    if (cur > UINT64_MAX - prev) {
      throw Error(ErrorKind::OutOfRange, "Fibonacci number overflows 64 bits");
    }
    std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Finite Fibonacci word f_n. The convention's seeds fix the recursion and
/// its numbering must be the one those seeds produce (|f_n| == fib(n)).
inline Word1D fib_word(std::size_t n, Alphabet1D alphabet, FibConvention conv) {
  if (conv != kAbStandard && conv != kLoc) {
    throw Error(ErrorKind::InvalidArgument,
                "AbStandard seeds pair with F11 numbering, Loc seeds with F12");
  }
  Word1D older, newer;
  if (conv.seeds == Seeds::AbStandard) {
    older = Word1D(1, alphabet.second);
    newer = Word1D(1, alphabet.first);
  } else {
    older = Word1D(1, alphabet.first);
    newer = Word1D{alphabet.first, alphabet.second};
  }
  if (n == 0) return older;
  for (std::size_t i = 1; i < n; ++i) {
    Word1D next = newer + older;
    older = std::move(newer);
    newer = std::move(next);
  }
  return newer;
}

/// Length-`len` prefix of the infinite Fibonacci word over `alphabet`,
/// obtained by iterating the morphism on `first` until long enough.
inline Word1D fib_prefix(Alphabet1D alphabet, std::size_t len) {
  Word1D w(1, alphabet.first);
  while (w.size() < len) {
    Word1D next;
    next.reserve(w.size() * 2);
    for (char ch : w) {
      next.push_back(alphabet.first);
      if (ch == alphabet.first) next.push_back(alphabet.second);
    }
    w = std::move(next);
  }
  w.resize(len);
  return w;
}

/// Lexicographic comparison with alphabet.first < alphabet.second.
inline bool canonical_less(const Word1D& lhs, const Word1D& rhs, Alphabet1D alphabet) {
  return std::lexicographical_compare(
      lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
      [alphabet](char x, char y) { return alphabet.rank(x) < alphabet.rank(y); });
}

/// The k+1 distinct length-k factors of f_inf, canonically ordered.
inline std::vector<Word1D> factors1d(std::size_t k, Alphabet1D alphabet) {
  if (k == 0) return {Word1D{}};
  // Every factor appears in a long enough prefix; grow until the complexity
  // count k+1 is reached.
  std::size_t len = std::max<std::size_t>(16, 4 * k);
  std::set<Word1D> seen;
  while (true) {
    const Word1D prefix = fib_prefix(alphabet, len);
    seen.clear();
    for (std::size_t i = 0; i + k <= prefix.size(); ++i) seen.insert(prefix.substr(i, k));
    if (seen.size() >= k + 1) break;
    len *= 2;
  }
  std::vector<Word1D> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [alphabet](const Word1D& x, const Word1D& y) { return canonical_less(x, y, alphabet); });
  return out;
}

inline bool is_factor1d(const Word1D& u, Alphabet1D alphabet) {
  if (!std::all_of(u.begin(), u.end(), [alphabet](char ch) { return alphabet.contains(ch); })) {
    return false;
  }
  const auto fs = factors1d(u.size(), alphabet);
  return std::find(fs.begin(), fs.end(), u) != fs.end();
}

/// The unique length-k factor w with both w.first and w.second factors.
inline Word1D special_factor(std::size_t k, Alphabet1D alphabet) {
  const auto longer = factors1d(k + 1, alphabet);
  std::set<Word1D> seen;
  std::vector<Word1D> doubled;
  for (const auto& f : longer) {
    if (!seen.insert(f.substr(0, k)).second) doubled.push_back(f.substr(0, k));
  }
  if (doubled.size() != 1) {
    throw Error(ErrorKind::InvalidArgument, "special factor is not unique");
  }
  return doubled.front();
}

/// Letters x with u.x a factor, in alphabet order.
inline std::vector<char> right_extensions(const Word1D& u, Alphabet1D alphabet) {
  if (!is_factor1d(u, alphabet)) {
    throw Error(ErrorKind::NotAFactor,
                "'" + u + "' is not a factor over " + alphabet.name());
  }
  const auto longer = factors1d(u.size() + 1, alphabet);
  std::vector<char> out;
  for (char x : {alphabet.first, alphabet.second}) {
    if (std::find(longer.begin(), longer.end(), u + x) != longer.end()) out.push_back(x);
  }
  return out;
}

/// T^p(w): T moves the first letter to the end; negative p rotates back.
inline Word1D rotate1d(Word1D w, long long p) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "cannot rotate the empty word");
  const auto n = static_cast<long long>(w.size());
  const long long shift = ((p % n) + n) % n;
  std::rotate(w.begin(), w.begin() + shift, w.end());
  return w;
}

/// q_n, the conjugate of f_n (AbStandard seeds) whose inverse rotations have
/// prefixes running through every factor of length < F(n).
inline Word1D special_conjugate1d(std::size_t n, Alphabet1D alphabet) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "special conjugate needs n >= 2");
  const Word1D f = fib_word(n, alphabet, kAbStandard);
  const std::uint64_t shift =
      (n % 2 == 0 ? fib(n, Numbering::F11) : fib(n - 1, Numbering::F11)) - 1;
  return rotate1d(f, static_cast<long long>(shift));
}

/// g_n: f_n (Loc seeds) with its last two letters removed.
inline Word1D truncated(std::size_t n, Alphabet1D alphabet) {
  if (n < 2) throw Error(ErrorKind::TooShort, "truncated words start at n = 2");
  Word1D f = fib_word(n, alphabet, kLoc);
  f.resize(f.size() - 2);
  return f;
}

/// Zeckendorf representation: ascending Fibonacci indices, no two
/// consecutive, summing to x. Under F11 the duplicate F(0) is never used.
inline std::vector<std::size_t> zeck_repr(std::uint64_t x, Numbering numbering = Numbering::F12) {
  std::vector<std::uint64_t> fibs;  // F12 numbering: 1,2,3,5,..
  for (std::size_t i = 0; fib(i, Numbering::F12) <= x; ++i) fibs.push_back(fib(i, Numbering::F12));
  std::vector<std::size_t> out;
  for (std::size_t i = fibs.size(); i-- > 0;) {
    if (fibs[i] <= x) {
      x -= fibs[i];
      out.push_back(numbering == Numbering::F12 ? i : i + 1);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Members of Z_n below `bound`: integers whose representation avoids
/// F(0..n-1) (F12 numbering), ascending.
inline std::vector<Offset> z_stream(std::size_t n, Offset bound) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "Z_n is defined for n >= 1");
  std::vector<Offset> out;
  for (Offset x = 0; x < bound; ++x) {
    const auto repr = zeck_repr(x);
    if (repr.empty() || repr.front() >= n) out.push_back(x);
  }
  return out;
}

/// Least n >= 2 with u a factor of g_n over `alphabet`.
inline std::size_t shortest_truncated_index(const Word1D& u, Alphabet1D alphabet) {
  if (u.empty()) throw Error(ErrorKind::EmptyWord, "occurrence queries need a non-empty word");
  if (!is_factor1d(u, alphabet)) {
    throw Error(ErrorKind::NotAFactor, "'" + u + "' is not a factor over " + alphabet.name());
  }
  for (std::size_t n = 2;; ++n) {
    if (truncated(n, alphabet).find(u) != Word1D::npos) return n;
  }
}

/// occ(u) = Z_{z_index - 1} shifted by first_occ.
struct OccDescriptor1D {
  std::size_t z_index;
  Offset first_occ;

  std::vector<Offset> members(Offset bound) const {
    std::vector<Offset> out;
    if (bound <= first_occ) return out;
    for (Offset z : z_stream(z_index - 1, bound - first_occ)) out.push_back(z + first_occ);
    return out;
  }

  bool operator==(const OccDescriptor1D&) const = default;
};

inline OccDescriptor1D describe_occ1d(const Word1D& u, Alphabet1D alphabet) {
  const std::size_t n = shortest_truncated_index(u, alphabet);
  // u sits inside g_n, so its first occurrence lies within f_{n+2}.
  const Word1D prefix = fib_prefix(alphabet, fib(n + 2, Numbering::F12));
  const auto pos = prefix.find(u);
  if (pos == Word1D::npos) {
    throw Error(ErrorKind::NotAFactor, "'" + u + "' not found within its scan bound");
  }
  return {n, static_cast<Offset>(pos)};
}

inline Offset first_occ1d(const Word1D& u, Alphabet1D alphabet) {
  return describe_occ1d(u, alphabet).first_occ;
}

/// All occurrences of u below `bound`, ascending.
inline std::vector<Offset> occ1d(const Word1D& u, Alphabet1D alphabet, Offset bound) {
  return describe_occ1d(u, alphabet).members(bound);
}

}  // namespace fibword
