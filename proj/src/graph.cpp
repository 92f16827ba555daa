#include "unfoldium/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace unfoldium {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // false if a and b were already joined
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("matrix-tree determinant overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("matrix-tree determinant overflow");
  return r;
}

// Bareiss elimination; every division is exact.
std::int64_t bareiss_determinant(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Graph make_cube() {
  std::vector<Edge> edges;
  for (VertexId a = 1; a <= 8; ++a) {
    for (VertexId b = a + 1; b <= 8; ++b) {
      const auto ca = cube_coordinates(a);
      const auto cb = cube_coordinates(b);
      int differing = 0;
      for (int axis = 0; axis < 3; ++axis) differing += ca[axis] != cb[axis];
      if (differing == 1) edges.emplace_back(a, b);
    }
  }
  return Graph(8, std::move(edges));
}

}  // namespace

std::vector<std::size_t> EdgeSet::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::set<Edge> seen;
  for (const Edge& e : edges_) {
    if (e.u < 1 || e.v > vertex_count_) throw std::invalid_argument("edge " + format_edge(e) + " out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge " + format_edge(e));
  }
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  const auto it = std::find(edges_.begin(), edges_.end(), e);
  if (it == edges_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

int Graph::degree(VertexId v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
}

EdgeSet Graph::all_edges() const {
  if (edges_.size() >= kMaxEdges) return EdgeSet{~std::uint64_t{0}};
  return EdgeSet{(std::uint64_t{1} << edges_.size()) - 1};
}

std::array<int, 3> cube_coordinates(VertexId v) {
  static constexpr std::array<std::array<int, 3>, 8> kCoords{{
      {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
      {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
  }};
  if (v < 1 || v > 8) throw std::out_of_range("cube vertex label " + std::to_string(v));
  return kCoords[static_cast<std::size_t>(v - 1)];
}

const Graph& cube_graph() {
  static const Graph cube = make_cube();
  return cube;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (VertexId a = 1; a < n; ++a) edges.emplace_back(a, a + 1);
  return Graph(n, std::move(edges));
}

std::uint64_t count_spanning_trees_matrix_tree(const Graph& g, std::optional<VertexId> deleted_vertex) {
  const int n = g.vertex_count();
  const VertexId drop = deleted_vertex.value_or(n);
  if (drop < 1 || drop > n) throw std::out_of_range("deleted vertex " + std::to_string(drop));

  std::vector<std::vector<std::int64_t>> laplacian(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    const auto a = static_cast<std::size_t>(e.u - 1);
    const auto b = static_cast<std::size_t>(e.v - 1);
    ++laplacian[a][a];
    ++laplacian[b][b];
    --laplacian[a][b];
    --laplacian[b][a];
  }

  std::vector<std::vector<std::int64_t>> minor;
  for (int r = 0; r < n; ++r) {
    if (r == drop - 1) continue;
    auto& row = minor.emplace_back();
    for (int c = 0; c < n; ++c)
      if (c != drop - 1) row.push_back(laplacian[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  const std::int64_t det = bareiss_determinant(std::move(minor));
  if (det < 0) throw std::logic_error("negative Laplacian minor");
  return static_cast<std::uint64_t>(det);
}

std::string_view describe(TreeViolation v) {
  switch (v) {
    case TreeViolation::WrongCardinality: return "wrong number of edges";
    case TreeViolation::Circuit: return "contains a circuit";
    case TreeViolation::Disconnected: return "does not connect all vertices";
    case TreeViolation::ForeignEdge: return "references an edge outside the graph";
  }
  return "unknown";
}

std::optional<TreeViolation> spanning_tree_violation(const Graph& g, EdgeSet s) {
  if ((s.mask & ~g.all_edges().mask) != 0) return TreeViolation::ForeignEdge;
  const int n = g.vertex_count();
  if (s.size() != n - 1) return TreeViolation::WrongCardinality;
  DisjointSets components(n);
  for (std::size_t i : s.indices()) {
    const Edge& e = g.edge(i);
    if (!components.unite(e.u - 1, e.v - 1)) return TreeViolation::Circuit;
  }
  const int root = components.find(0);
  for (int v = 1; v < n; ++v)
    if (components.find(v) != root) return TreeViolation::Disconnected;
  return std::nullopt;
}

bool is_spanning_tree(const Graph& g, EdgeSet s) { return !spanning_tree_violation(g, s).has_value(); }

std::vector<EdgeSet> enumerate_spanning_trees(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m > kMaxEdges) throw CapacityError("graph has " + std::to_string(m) + " edges; at most 64 supported");
  const int k = g.vertex_count() - 1;
  std::vector<EdgeSet> trees;
  if (k == 0) {
    trees.push_back(EdgeSet{});
    return trees;
  }
  if (static_cast<std::size_t>(k) > m) return trees;

  // Gosper's hack walks k-subsets in ascending mask order.
  const std::uint64_t limit = g.all_edges().mask;
  std::uint64_t subset = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    if (is_spanning_tree(g, EdgeSet{subset})) trees.push_back(EdgeSet{subset});
    const std::uint64_t low = subset & (~subset + 1);
    const std::uint64_t ripple = subset + low;
    if (ripple == 0) break;  // carried past bit 63
    const std::uint64_t next = (((ripple ^ subset) >> 2) / low) | ripple;
    if ((next & ~limit) != 0) break;
    subset = next;
  }
  return trees;
}

EdgeSet complement(const Graph& g, EdgeSet s) { return EdgeSet{g.all_edges().mask & ~s.mask}; }

std::string format_edge(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string format_edge_set(const Graph& g, EdgeSet s) {
  std::string out;
  for (std::size_t i : s.indices()) {
    if (!out.empty()) out += ',';
    out += format_edge(g.edge(i));
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_label(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ParseError("bad vertex label in '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Edge parse_edge(std::string_view text) {
  const std::string_view t = trim(text);
  const auto dash = t.find('-');
  if (dash == std::string_view::npos) throw ParseError("expected 'u-v', got '" + std::string(t) + "'");
  const int a = parse_label(trim(t.substr(0, dash)), t);
  const int b = parse_label(trim(t.substr(dash + 1)), t);
  if (a == b) throw ParseError("self-loop '" + std::string(t) + "'");
  return Edge(a, b);
}

EdgeSet parse_edge_set(const Graph& g, std::string_view text) {
  EdgeSet out;
  const std::string_view t = trim(text);
  if (t.empty()) return out;
  std::size_t start = 0;
  while (start <= t.size()) {
    const auto comma = t.find(',', start);
    const auto piece = t.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const Edge e = parse_edge(piece);
    const auto index = g.edge_index(e);
    if (!index) throw ParseError("'" + format_edge(e) + "' is not an edge of the graph");
    if (out.contains(*index)) throw ParseError("edge '" + format_edge(e) + "' listed twice");
    out.insert(*index);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace unfoldium
