#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unfoldium/graph.hpp"

namespace unfoldium {

inline constexpr std::size_t kCubeVertices = 8;
inline constexpr std::size_t kCubeEdges = 12;

/// Raised when a permutation is not a bijection or does not preserve cube adjacency.
class NotAnIsometry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a generated group does not have the expected structure.
class GroupError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Conjugacy-class taxonomy of the 48 cube isometries.
enum class IsometryClass {
  Identity,
  Rot1_90,    // quarter turn about a face axis
  Rot1_180,   // half turn about a face axis
  Rot2_180,   // half turn about an edge-midpoint axis
  Rot3_120,   // third turn about a space diagonal
  Antipodal,  // central inversion
  Ref1,       // mirror containing two opposite edges
  Ref2,       // mirror through the midpoints of four parallel edges
  RotoRef90,
  RotoRef60,
};

inline constexpr std::array<IsometryClass, 10> kAllClasses{
    IsometryClass::Identity,  IsometryClass::Rot1_90, IsometryClass::Rot1_180, IsometryClass::Rot2_180,
    IsometryClass::Rot3_120,  IsometryClass::Antipodal, IsometryClass::Ref1,   IsometryClass::Ref2,
    IsometryClass::RotoRef90, IsometryClass::RotoRef60,
};

[[nodiscard]] std::string_view to_string(IsometryClass c);

/// Image of label i stored at position i-1.
using VertexPerm = std::array<VertexId, kCubeVertices>;

/// Integer 3x3 matrix of the linear map an isometry induces about the cube centre.
using Matrix3 = std::array<std::array<int, 3>, 3>;

/// Cube isometry as a permutation of the vertex labels 1..8. Acts on the
/// right: x^(gh) = (x^g)^h.
class Isometry {
 public:
  /// Throws NotAnIsometry unless `perm` is a bijection preserving adjacency.
  explicit Isometry(const VertexPerm& perm);

  static Isometry identity();
  /// Parses disjoint-cycle notation such as "(1234)(5678)"; "()" is the identity.
  static Isometry parse(std::string_view cycles);

  [[nodiscard]] VertexId image(VertexId v) const { return perm_[static_cast<std::size_t>(v - 1)]; }
  [[nodiscard]] const VertexPerm& vertex_perm() const { return perm_; }
  /// Edge index i maps to edge_image(i).
  [[nodiscard]] std::size_t edge_image(std::size_t edge) const { return edge_perm_[edge]; }
  [[nodiscard]] const std::array<std::size_t, kCubeEdges>& edge_perm() const { return edge_perm_; }
  [[nodiscard]] IsometryClass klass() const { return klass_; }

  [[nodiscard]] Matrix3 matrix() const;
  [[nodiscard]] int determinant() const;
  [[nodiscard]] bool is_rotation() const { return determinant() == 1; }
  [[nodiscard]] int order() const;
  [[nodiscard]] int fixed_vertex_count() const;

  [[nodiscard]] Isometry inverse() const;
  [[nodiscard]] std::string to_cycle_string() const;

  /// Apply `this` first, then `then`.
  [[nodiscard]] Isometry then(const Isometry& next) const;
  friend Isometry operator*(const Isometry& first, const Isometry& second) { return first.then(second); }

  friend bool operator==(const Isometry& a, const Isometry& b) { return a.perm_ == b.perm_; }
  friend bool operator<(const Isometry& a, const Isometry& b) { return a.perm_ < b.perm_; }

 private:
  VertexPerm perm_;
  std::array<std::size_t, kCubeEdges> edge_perm_{};
  IsometryClass klass_ = IsometryClass::Identity;
};

/// Classifies from the (determinant, trace) signature of the induced
/// orthogonal map, split further by fixed vertices and invariant edges.
[[nodiscard]] IsometryClass classify(const Isometry& iso);

/// Named generators with the vertex labelling of cube_graph().
namespace generators {
Isometry quarter_turn();    // (1234)(5678)
Isometry third_turn();      // (136)(475)
Isometry antipodal();       // (17)(28)(35)(46)
Isometry edge_half_turn();  // (12)(35)(46)(78)
Isometry edge_mirror();     // (15)(26)(37)(48)
}  // namespace generators

/// Finite group of cube isometries listed identity-first in breadth-first
/// closure order.
class SymmetryGroup {
 public:
  /// Closure of `gens` under composition. Breadth-first: each dequeued element
  /// is multiplied on the right by every generator, in the order given.
  static SymmetryGroup closure(std::span<const Isometry> gens);

  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] const std::vector<Isometry>& elements() const { return elements_; }
  [[nodiscard]] const Isometry& operator[](std::size_t i) const { return elements_[i]; }
  [[nodiscard]] std::optional<std::size_t> index_of(const Isometry& g) const;
  [[nodiscard]] bool contains(const Isometry& g) const { return index_of(g).has_value(); }

  [[nodiscard]] std::vector<Isometry> center() const;
  [[nodiscard]] std::vector<Isometry> rotations() const;
  [[nodiscard]] std::vector<Isometry> of_class(IsometryClass c) const;
  [[nodiscard]] bool is_closed() const;

 private:
  std::vector<Isometry> elements_;
  std::map<VertexPerm, std::size_t> index_;
};

/// The full isometry group from ρ1 = (1234)(5678), ρ3 = (136)(475) and the
/// antipodal map. Throws GroupError unless the closure has 48 elements.
[[nodiscard]] SymmetryGroup generate_full_group();
/// Same, with caller-supplied generators (used to exercise the order check).
[[nodiscard]] SymmetryGroup generate_full_group(std::span<const Isometry> gens);
/// Closure of the two rotation generators only.
[[nodiscard]] SymmetryGroup generate_rotation_group();

[[nodiscard]] EdgeSet act_on_tree(const Isometry& iso, EdgeSet s);
/// Edges carried to themselves, whether pointwise fixed or reversed.
[[nodiscard]] EdgeSet invariant_edges(const Isometry& iso);
[[nodiscard]] std::vector<EdgeSet> fixed_trees(const Isometry& iso, std::span<const EdgeSet> trees);
[[nodiscard]] std::vector<Isometry> edge_stabilizer(const SymmetryGroup& group, Edge e);

struct ClassFixedCount {
  IsometryClass klass;
  int elements = 0;
  /// Fixed-tree count per element (constant within the class, else -1).
  long long fixed_per_element = 0;
  long long fixed_total = 0;
};

struct BurnsideResult {
  long long group_order = 0;
  long long fixed_sum = 0;
  long long orbit_count = 0;
  std::vector<ClassFixedCount> by_class;  // in kAllClasses order, only present classes
};

/// Raised when the Burnside sum is not divisible by the group order.
class BurnsideError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[nodiscard]] BurnsideResult burnside(const SymmetryGroup& group, std::span<const EdgeSet> trees);
[[nodiscard]] long long burnside_orbit_count(const SymmetryGroup& group, std::span<const EdgeSet> trees);

/// Orbit count from one representative per class: sum of |class| * fix(rep),
/// divided by |G|. Only valid when fixed counts are constant on classes.
[[nodiscard]] long long burnside_by_class_representatives(const SymmetryGroup& group, std::span<const EdgeSet> trees);

struct Orbit {
  EdgeSet representative;      // smallest mask
  std::vector<EdgeSet> trees;  // ascending mask
};

struct OrbitReport {
  std::vector<Orbit> orbits;  // ordered by representative
  std::vector<std::size_t> sizes;
  BurnsideResult burnside;

  [[nodiscard]] std::size_t orbit_of(EdgeSet tree) const;
};

[[nodiscard]] OrbitReport compute_orbits(const SymmetryGroup& group, std::span<const EdgeSet> trees);

/// Every spanning tree invariant under `iso` whose only invariant edge is
/// `seed`, grown symmetrically from the seed. `iso` must be a Rot2_180 or Ref2
/// element and `seed` one of its invariant edges; std::invalid_argument otherwise.
[[nodiscard]] std::vector<EdgeSet> grow_invariant_trees(const Isometry& iso, Edge seed);

}  // namespace unfoldium
