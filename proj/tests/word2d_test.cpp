#include <gtest/gtest.h>

#include "fibword/io.hpp"
#include "fibword/word2d.hpp"

using namespace fibword;

namespace {

Word2D W(std::vector<std::string> rows) { return Word2D::from_rows(rows); }

template <class F>
void expect_error(F&& f, ErrorKind kind) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Word2D, ShapeAndLettersValidated) {
  expect_error([] { Word2D(2, 2, "abc"); }, ErrorKind::ShapeMismatch);
  expect_error([] { W({"ab", "c"}); }, ErrorKind::ShapeMismatch);
  expect_error([] { W({"ax"}); }, ErrorKind::InvalidArgument);
  EXPECT_TRUE(Word2D().empty());
}

TEST(Word2D, OneBasedAccess) {
  const Word2D w = W({"dcd", "bab"});
  EXPECT_EQ(w.at(1, 1), 'd');
  EXPECT_EQ(w.at(2, 2), 'a');
  EXPECT_EQ(w.row(2), "bab");
  EXPECT_EQ(w.col(3), "db");
  expect_error([&] { w.at(0, 1); }, ErrorKind::OutOfDomain);
  expect_error([&] { w.at(3, 1); }, ErrorKind::OutOfDomain);
}

TEST(Concat, Examples) {
  EXPECT_EQ(concat_col(W({"d", "b"}), W({"c", "a"})), W({"dc", "ba"}));
  EXPECT_EQ(concat_col(W({"dc"}), Word2D()), W({"dc"}));
  EXPECT_EQ(concat_row(Word2D(), W({"dc"})), W({"dc"}));
  EXPECT_EQ(concat_row(W({"dc"}), W({"ba"})), W({"dc", "ba"}));
  expect_error([] { concat_col(W({"d", "b"}), W({"c", "a", "c"})); }, ErrorKind::ShapeMismatch);
  expect_error([] { concat_row(W({"dc"}), W({"a"})); }, ErrorKind::ShapeMismatch);
}

TEST(FibArray, Examples) {
  EXPECT_EQ(fib_array(2, 2), W({"dc", "ba"}));
  EXPECT_EQ(fib_array(3, 3), W({"dcd", "bab", "dcd"}));
  EXPECT_EQ(fib_array(0, 0), W({"a"}));
  EXPECT_EQ(fib_array(1, 1), W({"d"}));
}

TEST(FibArray, SizesAndExpansionOrder) {
  for (std::size_t m = 0; m <= 8; ++m) {
    for (std::size_t n = 0; n <= 8; ++n) {
      const Word2D rows_first = fib_array(m, n);
      EXPECT_EQ(rows_first.rows(), fib(m, Numbering::F11));
      EXPECT_EQ(rows_first.cols(), fib(n, Numbering::F11));
      EXPECT_EQ(rows_first, fib_array(m, n, {}, Expansion::ColumnsFirst));
    }
  }
}

TEST(FibArray, IsPrefixOfInfiniteWord) {
  for (std::size_t m = 1; m <= 8; ++m) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const Word2D f = fib_array(m, n);
      if (m >= 2 && n >= 2) {
        EXPECT_EQ(f, mu_prefix(f.rows(), f.cols())) << m << "," << n;
      }
    }
  }
}

TEST(FibArray, RowsAreFibonacciWords) {
  const Word2D f = fib_array(7, 7);
  const auto cls = classify_lines(f);
  for (std::size_t i = 1; i <= f.rows(); ++i) {
    EXPECT_EQ(f.row(i), fib_prefix(cls.rows[i - 1], f.cols()));
  }
}

TEST(FibArray, SeedsValidated) {
  expect_error([] { fib_array(2, 2, {'a', 'a', 'a', 'a'}); }, ErrorKind::InvalidArgument);
  expect_error([] { fib_array(2, 2, {'x', 'b', 'c', 'd'}); }, ErrorKind::InvalidArgument);
}

TEST(MuPrefix, Iterations) {
  EXPECT_EQ(mu_prefix(2, 2), W({"dc", "ba"}));
  EXPECT_EQ(mu_prefix(3, 3), W({"dcd", "bab", "dcd"}));
  EXPECT_EQ(mu_prefix(5, 5), W({"dcddc", "babba", "dcddc", "dcddc", "babba"}));
  expect_error([] { mu_prefix(0, 3); }, ErrorKind::InvalidArgument);
}

TEST(MuPrefix, ConsistentAcrossSizes) {
  const Word2D big = mu_prefix(60, 45);
  EXPECT_EQ(prefix2d(big, 13, 21), mu_prefix(13, 21));
  EXPECT_EQ(prefix2d(big, 40, 7), mu_prefix(40, 7));
}

TEST(MuPrefix, LinesFollowOneDWords) {
  const Word2D w = mu_prefix(34, 34);
  EXPECT_EQ(w.row(1), fib_prefix(kRowDC, 34));
  EXPECT_EQ(w.col(1), fib_prefix(kColDB, 34));
  EXPECT_NO_THROW(classify_lines(w));
}

TEST(Subblock, Examples) {
  EXPECT_EQ(subblock(mu_prefix(3, 3), {1, 1, 2, 2}), W({"dc", "ba"}));
  EXPECT_EQ(subblock(mu_prefix(5, 5), {3, 3, 4, 4}), W({"dd", "dd"}));
  const Word2D w = mu_prefix(4, 6);
  EXPECT_EQ(subblock(w, {1, 1, 4, 6}), w);
  expect_error([&] { subblock(w, {1, 1, 5, 6}); }, ErrorKind::OutOfDomain);
  expect_error([&] { subblock(w, {2, 1, 1, 6}); }, ErrorKind::OutOfDomain);
  expect_error([&] { subblock(w, {0, 1, 1, 6}); }, ErrorKind::OutOfDomain);
}

TEST(ClassifyLines, Examples) {
  const auto cls = classify_lines(mu_prefix(3, 3));
  EXPECT_EQ(cls.rows, (std::vector<Alphabet1D>{kRowDC, kRowBA, kRowDC}));
  EXPECT_EQ(cls.cols, (std::vector<Alphabet1D>{kColDB, kColCA, kColDB}));
  EXPECT_EQ(classify_lines(fib_array(2, 2)).rows, (std::vector<Alphabet1D>{kRowDC, kRowBA}));
  expect_error([] { classify_lines(W({"dcda"})); }, ErrorKind::NotFibStructured);
  expect_error([] { classify_lines(W({"dc", "cd"})); }, ErrorKind::NotFibStructured);
}

TEST(Primitive, Examples) {
  EXPECT_FALSE(is_primitive2d(W({"dd", "dd"})));
  EXPECT_TRUE(is_primitive2d(fib_array(3, 3)));
  EXPECT_FALSE(is_primitive2d(W({"dc", "dc"})));
  EXPECT_TRUE(is_primitive2d(W({"d"})));
}

TEST(Io, TextRoundTrip) {
  const Word2D w = mu_prefix(3, 3);
  EXPECT_EQ(to_text(w), "dcd\nbab\ndcd\n");
  EXPECT_EQ(parse_text(to_text(w)), w);
  EXPECT_EQ(parse_text("\r\ndc\r\nba\r\n\r\nzz\n"), W({"dc", "ba"}));
  expect_error([] { parse_text("\n\n"); }, ErrorKind::InvalidArgument);
}

TEST(Io, JsonRoundTrip) {
  const Word2D w = mu_prefix(4, 5);
  EXPECT_EQ(word_from_json(to_json(w)), w);
  EXPECT_EQ(parse_word2d(to_json(w).dump()), w);
  EXPECT_EQ(parse_word2d("dc\nba\n"), W({"dc", "ba"}));
  expect_error([] { parse_word2d("{\"rows\": 3, \"cols\": 2, \"data\": [\"dc\", \"ba\"]}"); },
               ErrorKind::ShapeMismatch);
  expect_error([] { parse_word2d("{\"rows\": 1"); }, ErrorKind::InvalidArgument);
  expect_error([] { parse_word2d("{\"rows\": 1}"); }, ErrorKind::InvalidArgument);
}
