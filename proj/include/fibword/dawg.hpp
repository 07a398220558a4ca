#pragma once

// Subword graphs of f_inf,inf.
//
// The line DAWG of the Fibonacci word X Y X X Y ... has nodes 0, 1, 2, ...
// with a spine edge (i-1) -> i carrying the i-th symbol and a shortcut
// F(i)-2 -> F(i+1)-1 (F12 numbering) carrying X for even i and Y for odd i.
// Edge labels are letter sets: for rows X = {d,b}, Y = {c,a}; for columns
// X = {d,c}, Y = {b,a}. A row path is read with either d/c or b/a, a column
// path with either d/b or c/a.
//
// The rooted product rows o cols grafts a copy of the column DAWG onto every
// node of the row DAWG. A horizontal path of length l from the root followed
// by a vertical path of length k spells the first row and the last column of
// one (k,l) subword.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "fibword/error.hpp"
#include "fibword/word1d.hpp"
#include "fibword/word2d.hpp"

namespace fibword {

using NodeKey = std::vector<std::size_t>;

/// A letter-set label, e.g. "db" for {d,b}.
using LetterSet = std::string;

struct LabeledEdge {
  std::size_t from;
  std::size_t to;
  LetterSet label;
  /// Which factor graph the edge came from in a product (0 or 1).
  std::size_t factor = 0;
};

class LabeledDigraph {
 public:
  std::size_t add_node(NodeKey key) {
    const auto [it, inserted] = index_.emplace(key, nodes_.size());
    if (!inserted) throw Error(ErrorKind::InvalidArgument, "duplicate node " + name_of(key));
    nodes_.push_back(std::move(key));
    out_.emplace_back();
    return it->second;
  }

  void add_edge(std::size_t from, std::size_t to, LetterSet label, std::size_t factor = 0) {
    if (from >= nodes_.size() || to >= nodes_.size()) {
      throw Error(ErrorKind::OutOfRange, "edge endpoint is not a node");
    }
    out_[from].push_back(edges_.size());
    edges_.push_back({from, to, std::move(label), factor});
  }

  void set_root(std::size_t v) { root_ = v; }
  std::size_t root() const { return root_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<NodeKey>& nodes() const { return nodes_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }

  std::optional<std::size_t> find(const NodeKey& key) const {
    const auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::string node_name(std::size_t v) const { return name_of(nodes_.at(v)); }

  static std::string name_of(const NodeKey& key) {
    if (key.size() == 1) return std::to_string(key.front());
    std::string out = "(";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(key[i]);
    }
    return out + ")";
  }

  bool is_acyclic() const {
    std::vector<std::size_t> indegree(nodes_.size(), 0);
    for (const auto& e : edges_) ++indegree[e.to];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
      if (indegree[v] == 0) ready.push_back(v);
    }
    std::size_t visited = 0;
    while (!ready.empty()) {
      const std::size_t v = ready.back();
      ready.pop_back();
      ++visited;
      for (std::size_t e : out_[v]) {
        if (--indegree[edges_[e].to] == 0) ready.push_back(edges_[e].to);
      }
    }
    return visited == nodes_.size();
  }

  bool all_reachable_from_root() const {
    if (nodes_.empty()) return true;
    std::vector<bool> seen(nodes_.size(), false);
    std::vector<std::size_t> stack{root_};
    seen[root_] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : out_[v]) {
        if (!seen[edges_[e].to]) {
          seen[edges_[e].to] = true;
          stack.push_back(edges_[e].to);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

 private:
  std::vector<NodeKey> nodes_;
  std::map<NodeKey, std::size_t> index_;
  std::vector<LabeledEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::size_t root_ = 0;
};

enum class Orientation { Rows, Cols };

/// The two label sets of a line DAWG, leading symbol first.
struct LineLabels {
  LetterSet lead;
  LetterSet follow;
};

inline LineLabels line_labels(Orientation o) {
  return o == Orientation::Rows ? LineLabels{"db", "ca"} : LineLabels{"dc", "ba"};
}

/// Truncated line DAWG keeping every root path of length <= max_len.
/// Nodes 0..max_len+F-1 with F the least Fibonacci number (F12) above
/// max_len: that prefix is the shortest one holding every factor of length
/// max_len.
inline LabeledDigraph build_line_dawg(Orientation orientation, std::size_t max_len) {
  if (max_len == 0) throw Error(ErrorKind::InvalidArgument, "max_len must be positive");
  const auto F = [](std::size_t i) { return fib(i, Numbering::F12); };
  std::size_t n = 0;
  while (F(n) <= max_len) ++n;
  const std::size_t last = max_len + F(n) - 1;

  const LineLabels labels = line_labels(orientation);
  // Spine spelled over the placeholder alphabet (a = lead, b = follow).
  const Word1D spine = fib_prefix(Alphabet1D('a', 'b'), last);

  LabeledDigraph g;
  for (std::size_t v = 0; v <= last; ++v) g.add_node({v});
  g.set_root(0);
  for (std::size_t i = 1; i <= last; ++i) {
    g.add_edge(i - 1, i, spine[i - 1] == 'a' ? labels.lead : labels.follow);
  }
  for (std::size_t i = 1; F(i + 1) - 1 <= last; ++i) {
    g.add_edge(F(i) - 2, F(i + 1) - 1, i % 2 == 0 ? labels.lead : labels.follow);
  }
  return g;
}

/// Label sequences of all root paths of exactly `len` edges, restricted to
/// edges of the given product factor.
inline std::vector<std::vector<LetterSet>> root_paths(const LabeledDigraph& g, std::size_t len,
                                                      std::size_t factor = 0) {
  std::vector<std::vector<LetterSet>> out;
  std::vector<LetterSet> path;
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (path.size() == len) {
      out.push_back(path);
      return;
    }
    for (std::size_t e : g.out_edges(v)) {
      const auto& edge = g.edges()[e];
      if (edge.factor != factor) continue;
      path.push_back(edge.label);
      self(self, edge.to);
      path.pop_back();
    }
  };
  walk(walk, g.root());
  return out;
}

/// G [] H: (u,v) -> (u',v) for uu' in E(G), (u,v) -> (u,v') for vv' in E(H).
inline LabeledDigraph cartesian_product(const LabeledDigraph& g, const LabeledDigraph& h) {
  LabeledDigraph out;
  const auto key = [&](std::size_t gv, std::size_t hv) {
    NodeKey k = g.nodes()[gv];
    k.insert(k.end(), h.nodes()[hv].begin(), h.nodes()[hv].end());
    return k;
  };
  for (std::size_t gv = 0; gv < g.node_count(); ++gv) {
    for (std::size_t hv = 0; hv < h.node_count(); ++hv) out.add_node(key(gv, hv));
  }
  const auto id = [&](std::size_t gv, std::size_t hv) { return gv * h.node_count() + hv; };
  for (const auto& e : g.edges()) {
    for (std::size_t hv = 0; hv < h.node_count(); ++hv) out.add_edge(id(e.from, hv), id(e.to, hv), e.label, 0);
  }
  for (const auto& e : h.edges()) {
    for (std::size_t gv = 0; gv < g.node_count(); ++gv) out.add_edge(id(gv, e.from), id(gv, e.to), e.label, 1);
  }
  out.set_root(id(g.root(), h.root()));
  return out;
}

enum class RootCopy { Keep, Prune };

/// G o H: one copy of H hung at every node of G. With RootCopy::Prune the
/// copy at G's root is dropped (a path always starts with a G edge).
inline LabeledDigraph rooted_product(const LabeledDigraph& g, const LabeledDigraph& h,
                                     RootCopy root_copy = RootCopy::Prune) {
  LabeledDigraph out;
  const auto key = [&](std::size_t gv, std::size_t hv) {
    NodeKey k = g.nodes()[gv];
    k.insert(k.end(), h.nodes()[hv].begin(), h.nodes()[hv].end());
    return k;
  };
  const auto kept = [&](std::size_t gv, std::size_t hv) {
    return root_copy == RootCopy::Keep || gv != g.root() || hv == h.root();
  };
  std::vector<std::size_t> id(g.node_count() * h.node_count(), SIZE_MAX);
  for (std::size_t gv = 0; gv < g.node_count(); ++gv) {
    for (std::size_t hv = 0; hv < h.node_count(); ++hv) {
      if (kept(gv, hv)) id[gv * h.node_count() + hv] = out.add_node(key(gv, hv));
    }
  }
  const auto at = [&](std::size_t gv, std::size_t hv) { return id[gv * h.node_count() + hv]; };
  for (const auto& e : g.edges()) out.add_edge(at(e.from, h.root()), at(e.to, h.root()), e.label, 0);
  for (std::size_t gv = 0; gv < g.node_count(); ++gv) {
    for (const auto& e : h.edges()) {
      if (kept(gv, e.from) && kept(gv, e.to)) out.add_edge(at(gv, e.from), at(gv, e.to), e.label, 1);
    }
  }
  out.set_root(at(g.root(), h.root()));
  return out;
}

enum class ProductOrder {
  RowsThenCols,  // first row, then last column
  ColsThenRows,  // first column, then last row
};

/// A root path of a product: `h_labels` along the row DAWG, `v_labels`
/// along the column DAWG, traversed in `order`.
struct PathPair {
  std::vector<LetterSet> h_labels;
  std::vector<LetterSet> v_labels;
  ProductOrder order = ProductOrder::RowsThenCols;
};

/// Every root path made of `first_len` factor-0 edges then `second_len`
/// factor-1 edges.
inline std::vector<PathPair> path_pairs(const LabeledDigraph& product, std::size_t first_len,
                                        std::size_t second_len,
                                        ProductOrder order = ProductOrder::RowsThenCols) {
  std::vector<PathPair> out;
  std::vector<LetterSet> path;
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (path.size() == first_len + second_len) {
      std::vector<LetterSet> first(path.begin(), path.begin() + first_len);
      std::vector<LetterSet> second(path.begin() + first_len, path.end());
      if (order == ProductOrder::RowsThenCols) {
        out.push_back({std::move(first), std::move(second), order});
      } else {
        out.push_back({std::move(second), std::move(first), order});
      }
      return;
    }
    const std::size_t factor = path.size() < first_len ? 0 : 1;
    for (std::size_t e : product.out_edges(v)) {
      const auto& edge = product.edges()[e];
      if (edge.factor != factor) continue;
      path.push_back(edge.label);
      self(self, edge.to);
      path.pop_back();
    }
  };
  walk(walk, product.root());
  return out;
}

namespace detail {

/// The letter in label-set ∩ alphabet.
inline char instantiate(const LetterSet& label, Alphabet1D alphabet) {
  for (char ch : label) {
    if (alphabet.contains(ch)) return ch;
  }
  throw Error(ErrorKind::InvalidArgument, "label {" + label + "} misses alphabet " + alphabet.name());
}

inline Word1D instantiate(const std::vector<LetterSet>& labels, Alphabet1D alphabet) {
  Word1D out;
  for (const auto& l : labels) out.push_back(instantiate(l, alphabet));
  return out;
}

/// Swaps the two row alphabets: a<->c, b<->d.
inline char swap_row_alphabet(char ch) {
  switch (ch) {
    case 'a': return 'c';
    case 'b': return 'd';
    case 'c': return 'a';
    default: return 'b';
  }
}

/// Swaps the two column alphabets: b<->a, d<->c.
inline char swap_col_alphabet(char ch) {
  switch (ch) {
    case 'a': return 'b';
    case 'b': return 'a';
    case 'c': return 'd';
    default: return 'c';
  }
}

}  // namespace detail

/// Builds the (k,l) subword whose first row is `first_row` and last column
/// is `last_col`. The column must start with the row's last letter; row i
/// repeats the first row when last_col[i] equals that letter and is its
/// image under a<->c, b<->d otherwise.
inline Word2D subword_from_row_and_last_col(const Word1D& first_row, const Word1D& last_col) {
  if (first_row.empty() || last_col.empty()) throw Error(ErrorKind::EmptyWord, "paths must be non-empty");
  row_alphabet_of(first_row);
  col_alphabet_of(last_col);
  const char joint = first_row.back();
  if (last_col.front() != joint) {
    throw Error(ErrorKind::InconsistentJoint, "column does not start with the row's last letter");
  }
  Word1D swapped = first_row;
  for (char& ch : swapped) ch = detail::swap_row_alphabet(ch);
  std::string data;
  for (char ch : last_col) data += ch == joint ? first_row : swapped;
  return {last_col.size(), first_row.size(), std::move(data)};
}

/// Builds the (k,l) subword whose first column is `first_col` and last row is
/// `last_row`; the transpose of subword_from_row_and_last_col.
inline Word2D subword_from_col_and_last_row(const Word1D& first_col, const Word1D& last_row) {
  if (first_col.empty() || last_row.empty()) throw Error(ErrorKind::EmptyWord, "paths must be non-empty");
  col_alphabet_of(first_col);
  row_alphabet_of(last_row);
  const char joint = first_col.back();
  if (last_row.front() != joint) {
    throw Error(ErrorKind::InconsistentJoint, "row does not start with the column's last letter");
  }
  Word1D swapped = first_col;
  for (char& ch : swapped) ch = detail::swap_col_alphabet(ch);
  std::string data(first_col.size() * last_row.size(), ' ');
  for (std::size_t j = 0; j < last_row.size(); ++j) {
    const Word1D& column = last_row[j] == joint ? first_col : swapped;
    for (std::size_t i = 0; i < first_col.size(); ++i) data[i * last_row.size() + j] = column[i];
  }
  return {first_col.size(), last_row.size(), std::move(data)};
}

/// Every concrete subword a labelled path pair spells. The first path is
/// read over both of its alphabets; the second path's alphabet is forced by
/// the joint letter and kept only if it starts with it.
inline std::set<Word2D> subword_from_path(const PathPair& p) {
  std::set<Word2D> out;
  if (p.order == ProductOrder::RowsThenCols) {
    for (Alphabet1D row_alphabet : {kRowDC, kRowBA}) {
      const Word1D h = detail::instantiate(p.h_labels, row_alphabet);
      const Alphabet1D col_alphabet = kColDB.contains(h.back()) ? kColDB : kColCA;
      const Word1D v = detail::instantiate(p.v_labels, col_alphabet);
      if (v.front() == h.back()) out.insert(subword_from_row_and_last_col(h, v));
    }
  } else {
    for (Alphabet1D col_alphabet : {kColDB, kColCA}) {
      const Word1D v = detail::instantiate(p.v_labels, col_alphabet);
      const Alphabet1D row_alphabet = kRowDC.contains(v.back()) ? kRowDC : kRowBA;
      const Word1D h = detail::instantiate(p.h_labels, row_alphabet);
      if (h.front() == v.back()) out.insert(subword_from_col_and_last_row(v, h));
    }
  }
  if (out.empty()) throw Error(ErrorKind::InconsistentJoint, "no instantiation agrees at the joint");
  return out;
}

/// Rooted product for (k,l) enumeration in the given traversal order.
inline LabeledDigraph subword_graph(std::size_t k, std::size_t l,
                                    ProductOrder order = ProductOrder::RowsThenCols,
                                    RootCopy root_copy = RootCopy::Prune) {
  if (order == ProductOrder::RowsThenCols) {
    return rooted_product(build_line_dawg(Orientation::Rows, l), build_line_dawg(Orientation::Cols, k),
                          root_copy);
  }
  return rooted_product(build_line_dawg(Orientation::Cols, k), build_line_dawg(Orientation::Rows, l),
                        root_copy);
}

/// All (k,l) subwords of f_inf,inf read off root paths of the subword graph.
inline std::set<Word2D> enumerate_dawg(std::size_t k, std::size_t l,
                                       ProductOrder order = ProductOrder::RowsThenCols,
                                       RootCopy root_copy = RootCopy::Prune) {
  if (k == 0 || l == 0) throw Error(ErrorKind::InvalidArgument, "subword sizes must be positive");
  const LabeledDigraph g = subword_graph(k, l, order, root_copy);
  const auto pairs = order == ProductOrder::RowsThenCols ? path_pairs(g, l, k, order)
                                                         : path_pairs(g, k, l, order);
  std::set<Word2D> out;
  for (const auto& p : pairs) out.merge(subword_from_path(p));
  return out;
}

/// Labels print as comma-joined letters, e.g. "d,b".
inline std::string label_text(const LetterSet& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += ',';
    out += label[i];
  }
  return out;
}

inline std::string export_dot(const LabeledDigraph& g) {
  std::string out = "digraph G {\n  rankdir=LR;\n";
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    out += "  \"" + g.node_name(v) + "\"";
    if (v == g.root()) out += " [shape=doublecircle]";
    out += ";\n";
  }
  for (const auto& e : g.edges()) {
    out += "  \"" + g.node_name(e.from) + "\" -> \"" + g.node_name(e.to) + "\" [label=\"" +
           label_text(e.label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

inline nlohmann::json graph_to_json(const LabeledDigraph& g) {
  nlohmann::json j;
  j["root"] = g.node_name(g.root());
  j["nodes"] = nlohmann::json::array();
  for (std::size_t v = 0; v < g.node_count(); ++v) j["nodes"].push_back(g.node_name(v));
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    j["edges"].push_back({{"from", g.node_name(e.from)}, {"to", g.node_name(e.to)}, {"label", label_text(e.label)}});
  }
  return j;
}

}  // namespace fibword
