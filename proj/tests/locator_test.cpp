#include <gtest/gtest.h>

#include <random>

#include "fibword/dawg.hpp"
#include "fibword/io.hpp"
#include "fibword/locator.hpp"
#include "fibword/oracle.hpp"
#include "reference_tables.hpp"

using namespace fibword;
using reference::W;

namespace {

template <class F>
void expect_error(F&& f, ErrorKind kind) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

std::vector<Occurrence2D> product(const std::vector<Offset>& xs, const std::vector<Offset>& ys) {
  std::vector<Occurrence2D> out;
  for (Offset x : xs) {
    for (Offset y : ys) out.push_back({x, y});
  }
  return out;
}

/// Oracle occurrences restricted to offsets below the bounds.
std::vector<Occurrence2D> scanned(const Word2D& w, Offset rb, Offset cb) {
  std::vector<Occurrence2D> out;
  for (const auto& o : oracle_occurrences(w, rb + w.rows(), cb + w.cols())) {
    if (o.row_offset < rb && o.col_offset < cb) out.push_back(o);
  }
  return out;
}

}  // namespace

TEST(FirstOcc2D, Examples) {
  EXPECT_EQ(first_occ2d(W({"ddc", "ddc", "bba"})), (Occurrence2D{2, 2}));
  EXPECT_EQ(first_occ2d(W({"d"})), (Occurrence2D{0, 0}));
  EXPECT_EQ(first_occ2d(W({"cd", "ab"})), (Occurrence2D{0, 1}));
}

TEST(Occ2D, PublishedExample) {
  const Word2D w = W({"ddc", "ddc", "bba"});
  const std::vector<Offset> axis{2, 7, 10, 15, 20};
  EXPECT_EQ(occ2d(w, 21, 21), product(axis, axis));
  EXPECT_EQ(occ2d(w, 21, 21), scanned(w, 21, 21));
  const auto d = describe_occ2d(w);
  EXPECT_EQ(d.row_part.z_index, 4u);
  EXPECT_EQ(d.col_part.z_index, 4u);
  EXPECT_EQ(d.column_alphabet, kColDB);
  EXPECT_EQ(d.row_alphabet, kRowDC);
}

TEST(Occ2D, SingleLetter) {
  EXPECT_EQ(occ2d(W({"d"}), 4, 4), scanned(W({"d"}), 4, 4));
}

TEST(Occ2D, Errors) {
  expect_error([] { occ2d(Word2D(), 5, 5); }, ErrorKind::EmptyWord);
  expect_error([] { occ2d(W({"ab", "ab"}), 5, 5); }, ErrorKind::NotAFactor);
  expect_error([] { occ2d(W({"dd", "cc"}), 5, 5); }, ErrorKind::NotFibStructured);
  // Frame is fine but the interior disagrees with it.
  expect_error([] { occ2d(W({"dc", "bb"}), 5, 5); }, ErrorKind::NotFibStructured);
}

TEST(Occ2D, EmptyBelowFirstOccurrence) {
  EXPECT_TRUE(occ2d(W({"ddc", "ddc", "bba"}), 2, 40).empty());
}

TEST(Occ2D, EverySmallSubwordMatchesScan) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t l = 1; l <= 4; ++l) {
      for (const auto& w : enumerate_dawg(k, l)) {
        EXPECT_EQ(occ2d(w, 40, 40), scanned(w, 40, 40)) << to_text(w);
      }
    }
  }
}

TEST(Occ2D, RandomLargerSubwordsMatchScan) {
  std::mt19937 rng(42);
  const Word2D grid = mu_prefix(55, 55);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + rng() % 8;
    const std::size_t l = 1 + rng() % 8;
    const std::size_t i = 1 + rng() % 20;
    const std::size_t j = 1 + rng() % 20;
    const Word2D w = subblock(grid, {i, j, i + k - 1, j + l - 1});
    EXPECT_EQ(occ2d(w, 60, 60), scanned(w, 60, 60)) << to_text(w);
  }
}
