#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unfoldium/graph.hpp"

namespace unfoldium {

enum class Face { Bottom, Top, Front, Right, Back, Left };

inline constexpr std::size_t kFaceCount = 6;
inline constexpr std::array<Face, kFaceCount> kAllFaces{Face::Bottom, Face::Top, Face::Front,
                                                        Face::Right,  Face::Back, Face::Left};

[[nodiscard]] std::string_view to_string(Face f);
/// The face's boundary cycle, e.g. Bottom = (1,2,3,4), Front = (1,2,6,5).
[[nodiscard]] const std::array<VertexId, 4>& face_vertices(Face f);
/// The two faces bordering a cube edge, in kAllFaces order.
[[nodiscard]] std::array<Face, 2> faces_of_edge(Edge e);

/// Raised when an edge set handed to the unfolder is not a cut tree.
class NotACutTree : public std::invalid_argument {
 public:
  NotACutTree(TreeViolation violation, const std::string& what)
      : std::invalid_argument(what), violation_(violation) {}
  [[nodiscard]] TreeViolation violation() const { return violation_; }

 private:
  TreeViolation violation_;
};

/// Raised when two faces of a layout land on the same cell.
class OverlapError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct HingeLink {
  Face a;
  Face b;
  Edge edge;
};

/// The uncut edges seen as attachments between faces.
struct HingeTree {
  std::vector<HingeLink> links;  // canonical edge order

  /// Connected and acyclic on the six faces.
  [[nodiscard]] bool is_tree() const;
};

[[nodiscard]] HingeTree hinge_tree(EdgeSet cut);

/// Lattice point; cells are named by their lower-left corner.
struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

using Cell = Point;

struct Placement {
  Cell cell;
  /// corners[i] is where face_vertices(face)[i] lands.
  std::array<Point, 4> corners{};
};

/// A planar unfolding. Placements are indexed by Face.
struct Net {
  std::array<Placement, kFaceCount> placements{};
  std::vector<HingeLink> hinges;  // breadth-first order from Bottom

  [[nodiscard]] const Placement& at(Face f) const { return placements[static_cast<std::size_t>(f)]; }
  [[nodiscard]] std::array<Cell, kFaceCount> cells() const;
};

/// Lays out a cut tree. Bottom sits at (0,0) with 1,2,3,4 at (0,0),(1,0),(1,1),(0,1);
/// every other face is unfolded across its hinge in breadth-first order.
[[nodiscard]] Net layout(EdgeSet cut);

/// Hinges recovered from a net's geometry alone: neighbouring cells whose
/// shared side carries the same cube vertices in both corner maps.
[[nodiscard]] EdgeSet fold_back_hinges(const Net& net);
/// The cut tree a net was produced from (complement of the recovered hinges).
[[nodiscard]] EdgeSet fold_back(const Net& net);

/// True iff the cells are pairwise distinct and edge-connected.
[[nodiscard]] bool is_polyomino(std::span<const Cell> cells);

/// Congruence-class representative of a hexomino: translated so the minimum
/// cell is (0,0), lexicographically minimal over the lattice congruences.
struct CanonicalShape {
  std::array<Cell, kFaceCount> cells{};
  friend auto operator<=>(const CanonicalShape&, const CanonicalShape&) = default;
};

enum class Congruence { WithMirror, RotationsOnly };

/// One of the 8 symmetries of the square lattice: rotation by k quarter turns,
/// preceded by the mirror x -> -x when `mirror` is set.
[[nodiscard]] Point transform(Point p, int quarter_turns, bool mirror);

[[nodiscard]] CanonicalShape canonical_form(std::span<const Cell> cells, Congruence mode = Congruence::WithMirror);
[[nodiscard]] CanonicalShape canonical_form(const Net& net, Congruence mode = Congruence::WithMirror);

using ShapeClasses = std::map<CanonicalShape, std::vector<EdgeSet>>;

[[nodiscard]] ShapeClasses classify_shapes(std::span<const EdgeSet> trees, Congruence mode = Congruence::WithMirror);

// Rendering.
[[nodiscard]] std::string format_shape(const CanonicalShape& shape);
[[nodiscard]] std::string render_ascii(std::span<const Cell> cells);
[[nodiscard]] std::string render_ascii(const CanonicalShape& shape);
[[nodiscard]] std::string render_svg(const CanonicalShape& shape);
[[nodiscard]] std::string render_svg(const Net& net);

}  // namespace unfoldium
