// Prints the (2,2) subwords with the path that spells each one, their frame
// types and (3,3) extensions, and the conjugates of q_{3,3}.

#include <iostream>
#include <set>

#include "fibword/fibword.hpp"

using namespace fibword;

namespace {

std::string inline_text(const Word2D& w) {
  std::string out;
  for (std::size_t i = 1; i <= w.rows(); ++i) out += (i > 1 ? "/" : "") + w.row(i);
  return out;
}

}  // namespace

int main() {
  std::cout << "Subwords of size (2,2), first row H and last column V:\n";
  const auto product = subword_graph(2, 2);
  for (const auto& p : path_pairs(product, 2, 2)) {
    for (const auto& w : subword_from_path(p)) {
      std::cout << "  H=" << w.row(1) << " V=" << w.col(2) << "  ->  " << inline_text(w) << "\n";
    }
  }

  std::cout << "\nExtension to size (3,3):\n";
  for (const auto& w : enumerate_dawg(2, 2)) {
    std::cout << "  " << inline_text(w) << "  type " << to_string(classify_frame(frame_tl(w))) << "  ->";
    for (const auto& e : extend_frame(w)) std::cout << " " << inline_text(e);
    std::cout << "\n";
  }

  const Word2D q = special_conjugate2d(3, 3);
  std::cout << "\nConjugates of q_{3,3} = " << inline_text(q) << " and their (2,2) prefixes:\n";
  for (long long i = 0; i < 3; ++i) {
    for (long long j = 0; j < 3; ++j) {
      const Word2D c = rotate2d(q, {-i, -j});
      std::cout << "  T_row^-" << i << " T_col^-" << j << ": " << inline_text(c) << "  ->  "
                << inline_text(prefix2d(c, 2, 2)) << "\n";
    }
  }
  return 0;
}
