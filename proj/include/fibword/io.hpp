#pragma once

// Text and JSON forms of 2D words.
//   text: one row per line, letters unseparated, each line newline-terminated
//   json: {"rows": R, "cols": C, "data": ["dcd", "bab", "dcd"]}

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fibword/error.hpp"
#include "fibword/word2d.hpp"

namespace fibword {

inline std::string to_text(const Word2D& w) {
  std::string out;
  for (std::size_t i = 1; i <= w.rows(); ++i) out += w.row(i) + '\n';
  return out;
}

inline Word2D parse_text(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (!rows.empty()) break;  // a blank line ends the block
      continue;
    }
    rows.push_back(line);
  }
  if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "no rows in 2D text");
  return Word2D::from_rows(rows);
}

inline nlohmann::json to_json(const Word2D& w) {
  return {{"rows", w.rows()}, {"cols", w.cols()}, {"data", w.row_strings()}};
}

inline Word2D word_from_json(const nlohmann::json& j) {
  try {
    const auto rows = j.at("data").get<std::vector<std::string>>();
    Word2D w = Word2D::from_rows(rows);
    if (w.rows() != j.at("rows").get<std::size_t>() || w.cols() != j.at("cols").get<std::size_t>()) {
      throw Error(ErrorKind::ShapeMismatch, "declared size disagrees with data");
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed 2D word JSON: ") + e.what());
  }
}

/// Accepts either form; JSON is recognised by a leading '{'.
inline Word2D parse_word2d(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("malformed 2D word JSON: ") + e.what());
    }
    return word_from_json(j);
  }
  return parse_text(text);
}

/// Blank-line separated text blocks.
inline std::string to_text(const std::set<Word2D>& words) {
  std::string out;
  bool first = true;
  for (const auto& w : words) {
    if (!first) out += '\n';
    out += to_text(w);
    first = false;
  }
  return out;
}

inline nlohmann::json to_json(const std::set<Word2D>& words) {
  auto out = nlohmann::json::array();
  for (const auto& w : words) out.push_back(to_json(w));
  return out;
}

}  // namespace fibword
