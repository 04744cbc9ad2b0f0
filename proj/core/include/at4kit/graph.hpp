#ifndef AT4KIT_GRAPH_HPP
#define AT4KIT_GRAPH_HPP

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace at4kit::graphcheck {

using Vertex = std::uint32_t;

/// Finite simple undirected graph. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  bool adjacent(Vertex a, Vertex b) const { return adj_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  const std::vector<Vertex>& neighbours(Vertex a) const { return nbrs_[a]; }
  std::size_t degree(Vertex a) const { return nbrs_[a].size(); }

  bool connected() const;

  /// Subgraph induced on the given vertices, relabelled 0.. in the given order.
  Graph induced(const std::vector<Vertex>& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.nbrs_ == b.nbrs_; }

 private:
  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
};

/// Bijection on 0..n-1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection on 0..n-1.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  Vertex operator()(Vertex x) const { return images_[x]; }
  const std::vector<Vertex>& images() const { return images_; }

  /// (a * b)(x) = b(a(x)): apply a first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  bool is_identity() const;
  /// lcm of the cycle lengths.
  std::uint64_t order() const;
  std::vector<Vertex> fixed_points() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
  {
  }
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadedGraph {
  Graph graph;
  /// One entry per neighbour listing that had no reverse listing; the
  /// undirected closure was applied.
  std::vector<std::string> asymmetries;
};

/// Adjacency text: "n <count>" then lines "i: j k l". Blank lines and '#'
/// comments are ignored. Throws ParseError.
LoadedGraph load_graph(std::istream& in);
LoadedGraph load_graph(std::string_view text);

std::string write_graph(const Graph& g);

/// One permutation per non-blank, non-comment line. Throws ParseError.
std::vector<Permutation> load_permutations(std::istream& in, std::size_t n);
std::vector<Permutation> load_permutations(std::string_view text, std::size_t n);

std::string write_permutation(const Permutation& p);
std::string write_permutations(const std::vector<Permutation>& perms);

}  // namespace at4kit::graphcheck

#endif  // AT4KIT_GRAPH_HPP
