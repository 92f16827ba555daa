#include "unfoldium/unfold.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace unfoldium {

namespace {

constexpr int kSvgUnit = 32;

std::size_t face_index(Face f) { return static_cast<std::size_t>(f); }

int cycle_position(const std::array<VertexId, 4>& cycle, VertexId v) {
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (cycle[i] == v) return static_cast<int>(i);
  return -1;
}

std::optional<VertexId> vertex_at(Face f, const Placement& p, Point corner) {
  for (std::size_t i = 0; i < 4; ++i)
    if (p.corners[i] == corner) return face_vertices(f)[i];
  return std::nullopt;
}

bool neighbours(Cell a, Cell b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1; }

// The two lattice points bounding the side shared by neighbouring cells a and b.
std::array<Point, 2> shared_side(Cell a, Cell b) {
  if (a.x == b.x) {
    const int y = std::max(a.y, b.y);
    return {Point{a.x, y}, Point{a.x + 1, y}};
  }
  const int x = std::max(a.x, b.x);
  return {Point{x, a.y}, Point{x, a.y + 1}};
}

std::array<Cell, kFaceCount> normalized(std::array<Cell, kFaceCount> cells) {
  int min_x = cells[0].x;
  int min_y = cells[0].y;
  for (const Cell& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  for (Cell& c : cells) c = c - Point{min_x, min_y};
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::array<Cell, kFaceCount> to_hexomino(std::span<const Cell> cells) {
  if (cells.size() != kFaceCount) throw std::invalid_argument("a cube net has exactly six cells");
  std::array<Cell, kFaceCount> out{};
  std::copy(cells.begin(), cells.end(), out.begin());
  return out;
}

}  // namespace

std::string_view to_string(Face f) {
  switch (f) {
    case Face::Bottom: return "Bottom";
    case Face::Top: return "Top";
    case Face::Front: return "Front";
    case Face::Right: return "Right";
    case Face::Back: return "Back";
    case Face::Left: return "Left";
  }
  return "?";
}

const std::array<VertexId, 4>& face_vertices(Face f) {
  static constexpr std::array<std::array<VertexId, 4>, kFaceCount> kCycles{{
      {1, 2, 3, 4},
      {5, 6, 7, 8},
      {1, 2, 6, 5},
      {2, 3, 7, 6},
      {3, 4, 8, 7},
      {4, 1, 5, 8},
  }};
  return kCycles[face_index(f)];
}

std::array<Face, 2> faces_of_edge(Edge e) {
  std::array<Face, 2> out{};
  std::size_t found = 0;
  for (Face f : kAllFaces) {
    const auto& cycle = face_vertices(f);
    const int a = cycle_position(cycle, e.u);
    const int b = cycle_position(cycle, e.v);
    if (a < 0 || b < 0 || (std::abs(a - b) != 1 && std::abs(a - b) != 3)) continue;
    if (found == 2) throw std::logic_error("edge borders more than two faces");
    out[found++] = f;
  }
  if (found != 2) throw std::invalid_argument(format_edge(e) + " is not a cube edge");
  return out;
}

bool HingeTree::is_tree() const {
  if (links.size() != kFaceCount - 1) return false;
  std::array<std::size_t, kFaceCount> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const HingeLink& l : links) {
    const std::size_t a = find(face_index(l.a));
    const std::size_t b = find(face_index(l.b));
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

HingeTree hinge_tree(EdgeSet cut) {
  const Graph& cube = cube_graph();
  if (const auto violation = spanning_tree_violation(cube, cut))
    throw NotACutTree(*violation, "cut " + format_edge_set(cube, cut) + " " + std::string(describe(*violation)));
  HingeTree tree;
  for (std::size_t i : complement(cube, cut).indices()) {
    const Edge& e = cube.edge(i);
    const auto [a, b] = faces_of_edge(e);
    tree.links.push_back(HingeLink{a, b, e});
  }
  if (!tree.is_tree()) throw std::logic_error("uncut edges of a spanning tree do not form a tree on the faces");
  return tree;
}

std::array<Cell, kFaceCount> Net::cells() const {
  std::array<Cell, kFaceCount> out{};
  for (std::size_t i = 0; i < kFaceCount; ++i) out[i] = placements[i].cell;
  return out;
}

Net layout(EdgeSet cut) {
  const HingeTree hinges = hinge_tree(cut);
  Net net;
  std::array<bool, kFaceCount> placed{};

  Placement& root = net.placements[face_index(Face::Bottom)];
  root.cell = {0, 0};
  root.corners = {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}};
  placed[face_index(Face::Bottom)] = true;

  std::deque<Face> queue{Face::Bottom};
  while (!queue.empty()) {
    const Face parent = queue.front();
    queue.pop_front();
    const Placement& from = net.at(parent);
    for (const HingeLink& link : hinges.links) {
      if (link.a != parent && link.b != parent) continue;
      const Face child = link.a == parent ? link.b : link.a;
      if (placed[face_index(child)]) continue;

      const VertexId u = link.edge.u;
      const VertexId v = link.edge.v;
      const Point pu = from.corners[static_cast<std::size_t>(cycle_position(face_vertices(parent), u))];
      const Point pv = from.corners[static_cast<std::size_t>(cycle_position(face_vertices(parent), v))];
      Point outward{};
      if (pu.y == pv.y) {
        outward = pu.y == from.cell.y ? Point{0, -1} : Point{0, 1};
      } else {
        outward = pu.x == from.cell.x ? Point{-1, 0} : Point{1, 0};
      }

      Placement& to = net.placements[face_index(child)];
      to.cell = from.cell + outward;
      const auto& cycle = face_vertices(child);
      const int iu = cycle_position(cycle, u);
      const int iv = cycle_position(cycle, v);
      // Walking away from the hinge along the face boundary.
      const int step = (iv - iu + 4) % 4 == 1 ? -1 : 1;
      const auto far_u = static_cast<std::size_t>((iu + step + 4) % 4);
      const auto far_v = static_cast<std::size_t>((iv - step + 4) % 4);
      to.corners[static_cast<std::size_t>(iu)] = pu;
      to.corners[static_cast<std::size_t>(iv)] = pv;
      to.corners[far_u] = pu + outward;
      to.corners[far_v] = pv + outward;

      placed[face_index(child)] = true;
      net.hinges.push_back(link);
      queue.push_back(child);
    }
  }

  const auto cells = net.cells();
  const std::set<Cell> distinct(cells.begin(), cells.end());
  if (distinct.size() != kFaceCount) throw OverlapError("layout of " + format_edge_set(cube_graph(), cut) + " overlaps");
  return net;
}

EdgeSet fold_back_hinges(const Net& net) {
  EdgeSet hinges;
  for (std::size_t i = 0; i < kFaceCount; ++i) {
    for (std::size_t j = i + 1; j < kFaceCount; ++j) {
      const Placement& a = net.placements[i];
      const Placement& b = net.placements[j];
      if (!neighbours(a.cell, b.cell)) continue;
      const auto side = shared_side(a.cell, b.cell);
      const auto a0 = vertex_at(kAllFaces[i], a, side[0]);
      const auto a1 = vertex_at(kAllFaces[i], a, side[1]);
      const auto b0 = vertex_at(kAllFaces[j], b, side[0]);
      const auto b1 = vertex_at(kAllFaces[j], b, side[1]);
      if (!a0 || !a1 || !b0 || !b1 || *a0 != *b0 || *a1 != *b1) continue;
      if (const auto index = cube_graph().edge_index(Edge(*a0, *a1))) hinges.insert(*index);
    }
  }
  return hinges;
}

EdgeSet fold_back(const Net& net) { return complement(cube_graph(), fold_back_hinges(net)); }

bool is_polyomino(std::span<const Cell> cells) {
  const std::set<Cell> distinct(cells.begin(), cells.end());
  if (distinct.size() != cells.size()) return false;
  if (cells.empty()) return true;
  std::set<Cell> reached{cells.front()};
  std::deque<Cell> queue{cells.front()};
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop_front();
    for (const Point step : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
      const Cell n = c + step;
      if (distinct.contains(n) && reached.insert(n).second) queue.push_back(n);
    }
  }
  return reached.size() == cells.size();
}

Point transform(Point p, int quarter_turns, bool mirror) {
  if (mirror) p.x = -p.x;
  for (int k = 0; k < ((quarter_turns % 4) + 4) % 4; ++k) p = Point{-p.y, p.x};
  return p;
}

CanonicalShape canonical_form(std::span<const Cell> cells, Congruence mode) {
  const auto input = to_hexomino(cells);
  CanonicalShape best{normalized(input)};
  for (int mirror = 0; mirror < (mode == Congruence::WithMirror ? 2 : 1); ++mirror) {
    for (int turns = 0; turns < 4; ++turns) {
      std::array<Cell, kFaceCount> image{};
      std::transform(input.begin(), input.end(), image.begin(),
                     [&](Cell c) { return transform(c, turns, mirror == 1); });
      best = std::min(best, CanonicalShape{normalized(image)});
    }
  }
  return best;
}

CanonicalShape canonical_form(const Net& net, Congruence mode) {
  const auto cells = net.cells();
  return canonical_form(cells, mode);
}

ShapeClasses classify_shapes(std::span<const EdgeSet> trees, Congruence mode) {
  ShapeClasses classes;
  for (EdgeSet t : trees) classes[canonical_form(layout(t), mode)].push_back(t);
  return classes;
}

std::string format_shape(const CanonicalShape& shape) {
  std::string out;
  for (const Cell& c : shape.cells) out += std::to_string(c.x) + " " + std::to_string(c.y) + "\n";
  return out;
}

std::string render_ascii(std::span<const Cell> cells) {
  if (cells.empty()) return {};
  const std::set<Cell> occupied(cells.begin(), cells.end());
  int min_x = cells[0].x, max_x = cells[0].x, min_y = cells[0].y, max_y = cells[0].y;
  for (const Cell& c : cells) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  std::string out;
  for (int y = max_y; y >= min_y; --y) {
    for (int x = min_x; x <= max_x; ++x) out += occupied.contains(Cell{x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

std::string render_ascii(const CanonicalShape& shape) { return render_ascii(std::span<const Cell>(shape.cells)); }

namespace {

struct Frame {
  int min_x = 0, max_x = 0, min_y = 0, max_y = 0;

  explicit Frame(std::span<const Cell> cells) : min_x(cells[0].x), max_x(cells[0].x), min_y(cells[0].y), max_y(cells[0].y) {
    for (const Cell& c : cells) {
      min_x = std::min(min_x, c.x);
      max_x = std::max(max_x, c.x);
      min_y = std::min(min_y, c.y);
      max_y = std::max(max_y, c.y);
    }
  }
  [[nodiscard]] int width() const { return (max_x - min_x + 1) * kSvgUnit; }
  [[nodiscard]] int height() const { return (max_y - min_y + 1) * kSvgUnit; }
  // SVG y grows downward.
  [[nodiscard]] int px(int x) const { return (x - min_x) * kSvgUnit; }
  [[nodiscard]] int py(int y) const { return (max_y + 1 - y) * kSvgUnit; }
};

void svg_header(std::ostringstream& out, const Frame& f) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width() << "\" height=\"" << f.height()
      << "\" viewBox=\"0 0 " << f.width() << ' ' << f.height() << "\">\n";
}

void svg_cell(std::ostringstream& out, const Frame& f, Cell c) {
  out << "  <rect x=\"" << f.px(c.x) << "\" y=\"" << f.py(c.y + 1) << "\" width=\"" << kSvgUnit << "\" height=\""
      << kSvgUnit << "\" fill=\"#dfe8f2\" stroke=\"#1f2d3d\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string render_svg(const CanonicalShape& shape) {
  const Frame frame(shape.cells);
  std::ostringstream out;
  svg_header(out, frame);
  for (const Cell& c : shape.cells) svg_cell(out, frame, c);
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const Net& net) {
  const auto cells = net.cells();
  const Frame frame(cells);
  std::ostringstream out;
  svg_header(out, frame);
  for (Face f : kAllFaces) {
    const Placement& p = net.at(f);
    svg_cell(out, frame, p.cell);
    out << "  <text x=\"" << frame.px(p.cell.x) + kSvgUnit / 2 << "\" y=\"" << frame.py(p.cell.y) - kSvgUnit / 2 + 4
        << "\" font-size=\"9\" text-anchor=\"middle\">" << to_string(f) << "</text>\n";
  }
  for (const HingeLink& h : net.hinges) {
    const Placement& p = net.at(h.a);
    const auto& cycle = face_vertices(h.a);
    const Point a = p.corners[static_cast<std::size_t>(cycle_position(cycle, h.edge.u))];
    const Point b = p.corners[static_cast<std::size_t>(cycle_position(cycle, h.edge.v))];
    out << "  <line class=\"hinge\" data-edge=\"" << format_edge(h.edge) << "\" x1=\"" << frame.px(a.x) << "\" y1=\""
        << frame.py(a.y) << "\" x2=\"" << frame.px(b.x) << "\" y2=\"" << frame.py(b.y)
        << "\" stroke=\"#c0392b\" stroke-width=\"2\" stroke-dasharray=\"4 3\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace unfoldium
