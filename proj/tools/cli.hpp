#pragma once

// fibword command line. Exit codes:
//   0   success
//   1   verify ran but some check failed
//   2   usage error
//   10+ data error; 10 + the ErrorKind index (e.g. NotAFactor -> 14)

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibword/fibword.hpp"

namespace fibword::cli {

inline constexpr int kUsageError = 2;
inline constexpr int kVerifyFailed = 1;

inline int exit_code(ErrorKind kind) { return 10 + static_cast<int>(kind); }

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// "ddc/ddc/bba" -> 2D text.
inline std::string inline_word(const std::string& text) {
  std::string out;
  for (char ch : text) out += (ch == '/' || ch == ',') ? '\n' : ch;
  return out + '\n';
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonacci words in one and two dimensions: generation, subword enumeration, location"};
  app.require_subcommand(1);

  std::string alphabet = "ba";
  std::size_t len = 0;
  auto* gen1d = app.add_subcommand("gen1d", "Prefix of the infinite 1D Fibonacci word");
  gen1d->add_option("--alphabet", alphabet, "Two letters, leading letter first")->capture_default_str();
  gen1d->add_option("--len", len, "Prefix length")->required();

  std::size_t rows = 0, cols = 0;
  bool json = false;
  auto* gen2d = app.add_subcommand("gen2d", "Prefix of the infinite 2D Fibonacci word");
  gen2d->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
  gen2d->add_option("--cols", cols)->required()->check(CLI::PositiveNumber);
  gen2d->add_flag("--json", json, "Emit the JSON grid form");

  std::size_t k = 0, l = 0;
  std::string method = "dawg";
  auto* enumerate = app.add_subcommand("enum", "All subwords of size (k,l)");
  enumerate->add_option("--k", k, "Rows")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--l", l, "Columns")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--method", method)
      ->check(CLI::IsMember({"dawg", "extend", "conjugate", "prefix", "oracle"}))
      ->capture_default_str();
  enumerate->add_flag("--json", json, "Emit a JSON array of grids");

  std::string file, word;
  Offset row_bound = 0, col_bound = 0;
  auto* locate = app.add_subcommand("locate", "Occurrences of a subword");
  auto* file_opt = locate->add_option("--file", file, "2D word in text or JSON form ('-' for stdin)");
  auto* word_opt = locate->add_option("--word", word, "Inline word, rows separated by '/'");
  file_opt->excludes(word_opt);
  locate->add_option("--row-bound", row_bound)->required();
  locate->add_option("--col-bound", col_bound)->required();

  std::size_t m = 0, n = 0;
  bool special = false;
  auto* conjugates = app.add_subcommand("conjugates", "Conjugacy class of f_{m,n}, or its special conjugate");
  conjugates->add_option("--m", m)->required();
  conjugates->add_option("--n", n)->required();
  conjugates->add_flag("--special", special, "Print q_{m,n} only");
  conjugates->add_flag("--json", json);

  std::string orientation = "rows";
  std::size_t max_len = 0;
  auto* dot = app.add_subcommand("dawg-dot", "Subword graph in DOT form");
  dot->add_option("--orientation", orientation)
      ->check(CLI::IsMember({"rows", "cols", "product"}))
      ->capture_default_str();
  dot->add_option("--max-len", max_len)->required()->check(CLI::PositiveNumber);
  dot->add_flag("--json", json, "Emit the JSON graph dump instead");

  auto* check = app.add_subcommand("verify", "Cross-check every enumeration method");
  check->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  check->add_option("--l", l)->required()->check(CLI::PositiveNumber);
  check->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*gen1d) {
      out << fib_prefix(Alphabet1D::parse(alphabet), len) << "\n";
    } else if (*gen2d) {
      const Word2D w = mu_prefix(rows, cols);
      if (json) {
        out << to_json(w).dump() << "\n";
      } else {
        out << to_text(w);
      }
    } else if (*enumerate) {
      std::set<Word2D> words;
      if (method == "dawg") {
        words = enumerate_dawg(k, l);
      } else if (method == "extend") {
        words = enumerate_extension(k, l);
      } else if (method == "conjugate") {
        words = enumerate_conjugation(k, l);
      } else if (method == "prefix") {
        words = enumerate_prefix_conjugates(k, l);
      } else {
        const auto [R, C] = sufficient_prefix(k, l);
        words = oracle_subwords(k, l, R, C);
      }
      if (json) {
        out << to_json(words).dump() << "\n";
      } else {
        out << to_text(words);
      }
    } else if (*locate) {
      if (file.empty() && word.empty()) {
        err << "error: locate needs --file or --word\n";
        return kUsageError;
      }
      const Word2D w = parse_word2d(file.empty() ? detail::inline_word(word) : detail::read_input(file));
      const auto desc = describe_occ2d(w);
      nlohmann::json j;
      j["first"] = {desc.first().row_offset, desc.first().col_offset};
      j["occurrences"] = nlohmann::json::array();
      for (const auto& o : desc.members(row_bound, col_bound)) j["occurrences"].push_back({o.row_offset, o.col_offset});
      j["row_bound"] = row_bound;
      j["col_bound"] = col_bound;
      out << j.dump() << "\n";
    } else if (*conjugates) {
      std::set<Word2D> words;
      if (special) {
        words.insert(special_conjugate2d(m, n));
      } else {
        words = conjugacy_class(fib_array(m, n));
      }
      if (json) {
        out << to_json(words).dump() << "\n";
      } else {
        out << to_text(words);
      }
    } else if (*dot) {
      LabeledDigraph g;
      if (orientation == "rows") {
        g = build_line_dawg(Orientation::Rows, max_len);
      } else if (orientation == "cols") {
        g = build_line_dawg(Orientation::Cols, max_len);
      } else {
        g = subword_graph(max_len, max_len);
      }
      out << (json ? graph_to_json(g).dump() + "\n" : export_dot(g));
    } else if (*check) {
      const VerifyReport r = verify(k, l);
      out << (json ? to_json(r).dump() + "\n" : to_text(r));
      return r.passed() ? 0 : kVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}

}  // namespace fibword::cli
