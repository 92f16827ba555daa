#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unfoldium {

/// Raised when a textual edge, edge set or permutation cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a graph exceeds the 64-edge bit-vector capacity.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Vertex labels are 1-based (1..n).
using VertexId = int;

/// Undirected edge, always stored with the smaller label first.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of a graph's edges, bit i set iff edge index i is present.
struct EdgeSet {
  std::uint64_t mask = 0;

  static EdgeSet single(std::size_t index) { return EdgeSet{std::uint64_t{1} << index}; }

  [[nodiscard]] bool contains(std::size_t index) const { return (mask >> index) & 1U; }
  [[nodiscard]] int size() const { return std::popcount(mask); }
  [[nodiscard]] bool empty() const { return mask == 0; }

  void insert(std::size_t index) { mask |= std::uint64_t{1} << index; }
  void erase(std::size_t index) { mask &= ~(std::uint64_t{1} << index); }

  /// Edge indices in ascending order.
  [[nodiscard]] std::vector<std::size_t> indices() const;

  friend EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet{a.mask & b.mask}; }
  friend EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet{a.mask | b.mask}; }
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;
};

inline constexpr std::size_t kMaxEdges = 64;

/// Simple undirected graph on vertices 1..vertex_count. The position of an
/// edge in edges() is its canonical index.
class Graph {
 public:
  /// Validates labels, rejects self-loops and duplicates, keeps the given order.
  Graph(int vertex_count, std::vector<Edge> edges);

  [[nodiscard]] int vertex_count() const { return vertex_count_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(std::size_t index) const { return edges_.at(index); }

  [[nodiscard]] std::optional<std::size_t> edge_index(Edge e) const;
  [[nodiscard]] int degree(VertexId v) const;

  /// Every edge of the graph as one set.
  [[nodiscard]] EdgeSet all_edges() const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
};

/// The cube graph. Vertex i sits at cube_coordinates(i); edges are sorted
/// lexicographically: 1-2, 1-4, 1-5, 2-3, 2-6, 3-4, 3-7, 4-8, 5-6, 5-8, 6-7, 7-8.
[[nodiscard]] const Graph& cube_graph();

/// Unit-cube coordinates {x, y, z} of a cube vertex label.
[[nodiscard]] std::array<int, 3> cube_coordinates(VertexId v);

[[nodiscard]] Graph complete_graph(int n);
[[nodiscard]] Graph path_graph(int n);

/// Number of spanning trees via the Matrix-Tree theorem: the determinant of the
/// Laplacian with row/column `deleted_vertex` removed (defaults to the last
/// vertex). Exact fraction-free elimination; throws std::overflow_error if an
/// intermediate minor leaves the int64 range.
[[nodiscard]] std::uint64_t count_spanning_trees_matrix_tree(const Graph& g,
                                                            std::optional<VertexId> deleted_vertex = {});

/// Why a candidate edge set is not a spanning tree.
enum class TreeViolation { WrongCardinality, Circuit, Disconnected, ForeignEdge };

[[nodiscard]] std::string_view describe(TreeViolation v);

[[nodiscard]] std::optional<TreeViolation> spanning_tree_violation(const Graph& g, EdgeSet s);
[[nodiscard]] bool is_spanning_tree(const Graph& g, EdgeSet s);

/// All spanning trees, ascending by mask.
[[nodiscard]] std::vector<EdgeSet> enumerate_spanning_trees(const Graph& g);

[[nodiscard]] EdgeSet complement(const Graph& g, EdgeSet s);

// Text forms: "u-v" and comma-separated lists in canonical index order.
[[nodiscard]] std::string format_edge(Edge e);
[[nodiscard]] std::string format_edge_set(const Graph& g, EdgeSet s);
[[nodiscard]] Edge parse_edge(std::string_view text);
[[nodiscard]] EdgeSet parse_edge_set(const Graph& g, std::string_view text);

}  // namespace unfoldium
