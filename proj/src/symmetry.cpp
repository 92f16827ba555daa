#include "unfoldium/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace unfoldium {

namespace {

constexpr VertexPerm kIdentityPerm{1, 2, 3, 4, 5, 6, 7, 8};

bool has_circuit(EdgeSet s) {
  std::array<int, kCubeVertices> parent{};
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  const auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (std::size_t i : s.indices()) {
    const Edge& e = cube_graph().edge(i);
    const int a = find(e.u - 1);
    const int b = find(e.v - 1);
    if (a == b) return true;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return false;
}

int trace(const Matrix3& m) { return m[0][0] + m[1][1] + m[2][2]; }

int det3(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::string_view to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::Identity: return "Identity";
    case IsometryClass::Rot1_90: return "Rot1_90";
    case IsometryClass::Rot1_180: return "Rot1_180";
    case IsometryClass::Rot2_180: return "Rot2_180";
    case IsometryClass::Rot3_120: return "Rot3_120";
    case IsometryClass::Antipodal: return "Antipodal";
    case IsometryClass::Ref1: return "Ref1";
    case IsometryClass::Ref2: return "Ref2";
    case IsometryClass::RotoRef90: return "RotoRef90";
    case IsometryClass::RotoRef60: return "RotoRef60";
  }
  return "?";
}

Isometry::Isometry(const VertexPerm& perm) : perm_(perm) {
  std::array<bool, kCubeVertices> hit{};
  for (VertexId v : perm_) {
    if (v < 1 || v > static_cast<VertexId>(kCubeVertices)) throw NotAnIsometry("label out of range in vertex permutation");
    if (hit[static_cast<std::size_t>(v - 1)]) throw NotAnIsometry("vertex permutation is not a bijection");
    hit[static_cast<std::size_t>(v - 1)] = true;
  }
  const Graph& cube = cube_graph();
  for (std::size_t i = 0; i < kCubeEdges; ++i) {
    const Edge& e = cube.edge(i);
    const auto image = cube.edge_index(Edge(this->image(e.u), this->image(e.v)));
    if (!image) throw NotAnIsometry("permutation sends edge " + format_edge(e) + " to a non-edge");
    edge_perm_[i] = *image;
  }
  klass_ = classify(*this);
}

Isometry Isometry::identity() { return Isometry(kIdentityPerm); }

Isometry Isometry::parse(std::string_view cycles) {
  VertexPerm perm = kIdentityPerm;
  std::array<bool, kCubeVertices> seen{};
  std::vector<VertexId> cycle;
  bool open = false;
  const auto close_cycle = [&] {
    for (std::size_t i = 0; i < cycle.size(); ++i) perm[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
    cycle.clear();
  };
  for (char ch : cycles) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == '(') {
      if (open) throw ParseError("nested '(' in cycle notation");
      open = true;
    } else if (ch == ')') {
      if (!open) throw ParseError("unmatched ')' in cycle notation");
      open = false;
      close_cycle();
    } else if (ch >= '1' && ch <= '8') {
      if (!open) throw ParseError("label outside parentheses in cycle notation");
      const VertexId v = ch - '0';
      if (seen[static_cast<std::size_t>(v - 1)]) throw ParseError(std::string("label ") + ch + " repeated in cycle notation");
      seen[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' in cycle notation");
    }
  }
  if (open) throw ParseError("unterminated cycle");
  return Isometry(perm);
}

Matrix3 Isometry::matrix() const {
  // Columns are the images of the unit axes 1->2, 1->4, 1->5.
  Matrix3 m{};
  const auto origin = cube_coordinates(image(1));
  const std::array<VertexId, 3> axis_ends{2, 4, 5};
  for (std::size_t col = 0; col < 3; ++col) {
    const auto end = cube_coordinates(image(axis_ends[col]));
    for (std::size_t row = 0; row < 3; ++row) m[row][col] = end[row] - origin[row];
  }
  return m;
}

int Isometry::determinant() const { return det3(matrix()); }

int Isometry::order() const {
  int n = 1;
  for (VertexPerm p = perm_; p != kIdentityPerm; ++n) {
    VertexPerm next{};
    for (std::size_t i = 0; i < kCubeVertices; ++i) next[i] = perm_[static_cast<std::size_t>(p[i] - 1)];
    p = next;
  }
  return n;
}

int Isometry::fixed_vertex_count() const {
  int n = 0;
  for (std::size_t i = 0; i < kCubeVertices; ++i) n += perm_[i] == static_cast<VertexId>(i + 1);
  return n;
}

Isometry Isometry::inverse() const {
  VertexPerm inv{};
  for (std::size_t i = 0; i < kCubeVertices; ++i) inv[static_cast<std::size_t>(perm_[i] - 1)] = static_cast<VertexId>(i + 1);
  return Isometry(inv);
}

Isometry Isometry::then(const Isometry& next) const {
  VertexPerm out{};
  for (std::size_t i = 0; i < kCubeVertices; ++i) out[i] = next.image(perm_[i]);
  return Isometry(out);
}

std::string Isometry::to_cycle_string() const {
  std::string out;
  std::array<bool, kCubeVertices> done{};
  for (VertexId start = 1; start <= static_cast<VertexId>(kCubeVertices); ++start) {
    if (done[static_cast<std::size_t>(start - 1)] || image(start) == start) continue;
    out += '(';
    for (VertexId v = start; !done[static_cast<std::size_t>(v - 1)]; v = image(v)) {
      done[static_cast<std::size_t>(v - 1)] = true;
      out += static_cast<char>('0' + v);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

IsometryClass classify(const Isometry& iso) {
  const Matrix3 m = iso.matrix();
  const int det = det3(m);
  const int tr = trace(m);
  if (det == 1) {
    switch (tr) {
      case 3: return IsometryClass::Identity;
      case 1: return IsometryClass::Rot1_90;
      case 0: return IsometryClass::Rot3_120;
      case -1: {
        const int invariant = invariant_edges(iso).size();
        if (invariant == 2) return IsometryClass::Rot2_180;
        if (invariant == 0) return IsometryClass::Rot1_180;
        break;
      }
      default: break;
    }
  } else if (det == -1) {
    switch (tr) {
      case -3: return IsometryClass::Antipodal;
      case -1: return IsometryClass::RotoRef90;
      case 0: return IsometryClass::RotoRef60;
      case 1: {
        const int fixed = iso.fixed_vertex_count();
        if (fixed == 4) return IsometryClass::Ref1;
        if (fixed == 0) return IsometryClass::Ref2;
        break;
      }
      default: break;
    }
  }
  throw NotAnIsometry("cannot classify " + iso.to_cycle_string());
}

namespace generators {
Isometry quarter_turn() { return Isometry::parse("(1234)(5678)"); }
Isometry third_turn() { return Isometry::parse("(136)(475)"); }
Isometry antipodal() { return Isometry::parse("(17)(28)(35)(46)"); }
Isometry edge_half_turn() { return Isometry::parse("(12)(35)(46)(78)"); }
Isometry edge_mirror() { return Isometry::parse("(15)(26)(37)(48)"); }
}  // namespace generators

SymmetryGroup SymmetryGroup::closure(std::span<const Isometry> gens) {
  SymmetryGroup group;
  std::deque<std::size_t> queue;
  const auto add = [&](const Isometry& g) {
    if (group.index_.contains(g.vertex_perm())) return;
    group.index_.emplace(g.vertex_perm(), group.elements_.size());
    queue.push_back(group.elements_.size());
    group.elements_.push_back(g);
  };
  add(Isometry::identity());
  while (!queue.empty()) {
    const Isometry current = group.elements_[queue.front()];
    queue.pop_front();
    for (const Isometry& g : gens) add(current * g);
  }
  return group;
}

std::optional<std::size_t> SymmetryGroup::index_of(const Isometry& g) const {
  const auto it = index_.find(g.vertex_perm());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Isometry> SymmetryGroup::center() const {
  std::vector<Isometry> out;
  for (const Isometry& z : elements_) {
    const bool commutes = std::all_of(elements_.begin(), elements_.end(), [&z](const Isometry& g) { return z * g == g * z; });
    if (commutes) out.push_back(z);
  }
  return out;
}

std::vector<Isometry> SymmetryGroup::rotations() const {
  std::vector<Isometry> out;
  std::copy_if(elements_.begin(), elements_.end(), std::back_inserter(out), [](const Isometry& g) { return g.is_rotation(); });
  return out;
}

std::vector<Isometry> SymmetryGroup::of_class(IsometryClass c) const {
  std::vector<Isometry> out;
  std::copy_if(elements_.begin(), elements_.end(), std::back_inserter(out), [c](const Isometry& g) { return g.klass() == c; });
  return out;
}

bool SymmetryGroup::is_closed() const {
  for (const Isometry& a : elements_) {
    if (!contains(a.inverse())) return false;
    for (const Isometry& b : elements_)
      if (!contains(a * b)) return false;
  }
  return true;
}

SymmetryGroup generate_full_group(std::span<const Isometry> gens) {
  SymmetryGroup group = SymmetryGroup::closure(gens);
  if (group.order() != 48)
    throw GroupError("generator closure has order " + std::to_string(group.order()) + ", expected 48");
  return group;
}

SymmetryGroup generate_full_group() {
  const std::array gens{generators::quarter_turn(), generators::third_turn(), generators::antipodal()};
  return generate_full_group(gens);
}

SymmetryGroup generate_rotation_group() {
  const std::array gens{generators::quarter_turn(), generators::third_turn()};
  return SymmetryGroup::closure(gens);
}

EdgeSet act_on_tree(const Isometry& iso, EdgeSet s) {
  EdgeSet out;
  for (std::size_t i : s.indices()) out.insert(iso.edge_image(i));
  return out;
}

EdgeSet invariant_edges(const Isometry& iso) {
  EdgeSet out;
  for (std::size_t i = 0; i < kCubeEdges; ++i)
    if (iso.edge_image(i) == i) out.insert(i);
  return out;
}

std::vector<EdgeSet> fixed_trees(const Isometry& iso, std::span<const EdgeSet> trees) {
  std::vector<EdgeSet> out;
  std::copy_if(trees.begin(), trees.end(), std::back_inserter(out), [&iso](EdgeSet t) { return act_on_tree(iso, t) == t; });
  return out;
}

std::vector<Isometry> edge_stabilizer(const SymmetryGroup& group, Edge e) {
  const auto index = cube_graph().edge_index(e);
  if (!index) throw std::invalid_argument(format_edge(e) + " is not a cube edge");
  std::vector<Isometry> out;
  for (const Isometry& g : group.elements())
    if (g.edge_image(*index) == *index) out.push_back(g);
  return out;
}

BurnsideResult burnside(const SymmetryGroup& group, std::span<const EdgeSet> trees) {
  BurnsideResult result;
  result.group_order = static_cast<long long>(group.order());
  std::map<IsometryClass, ClassFixedCount> by_class;
  for (const Isometry& g : group.elements()) {
    const auto fixed = static_cast<long long>(fixed_trees(g, trees).size());
    result.fixed_sum += fixed;
    auto [it, fresh] = by_class.try_emplace(g.klass(), ClassFixedCount{g.klass(), 0, fixed, 0});
    ClassFixedCount& entry = it->second;
    if (entry.fixed_per_element != fixed) entry.fixed_per_element = -1;
    ++entry.elements;
    entry.fixed_total += fixed;
  }
  for (IsometryClass c : kAllClasses)
    if (const auto it = by_class.find(c); it != by_class.end()) result.by_class.push_back(it->second);

  if (result.group_order == 0 || result.fixed_sum % result.group_order != 0)
    throw BurnsideError("Burnside sum " + std::to_string(result.fixed_sum) + " not divisible by group order " +
                        std::to_string(result.group_order));
  result.orbit_count = result.fixed_sum / result.group_order;
  return result;
}

long long burnside_orbit_count(const SymmetryGroup& group, std::span<const EdgeSet> trees) {
  return burnside(group, trees).orbit_count;
}

long long burnside_by_class_representatives(const SymmetryGroup& group, std::span<const EdgeSet> trees) {
  long long sum = 0;
  for (IsometryClass c : kAllClasses) {
    const auto members = group.of_class(c);
    if (members.empty()) continue;
    sum += static_cast<long long>(members.size()) * static_cast<long long>(fixed_trees(members.front(), trees).size());
  }
  const auto order = static_cast<long long>(group.order());
  if (sum % order != 0) throw BurnsideError("class-representative Burnside sum not divisible by group order");
  return sum / order;
}

std::size_t OrbitReport::orbit_of(EdgeSet tree) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (std::binary_search(orbits[i].trees.begin(), orbits[i].trees.end(), tree)) return i;
  throw std::out_of_range("tree not in any orbit");
}

OrbitReport compute_orbits(const SymmetryGroup& group, std::span<const EdgeSet> trees) {
  OrbitReport report;
  std::set<EdgeSet> pending(trees.begin(), trees.end());
  while (!pending.empty()) {
    const EdgeSet start = *pending.begin();
    std::set<EdgeSet> orbit;
    for (const Isometry& g : group.elements()) orbit.insert(act_on_tree(g, start));
    for (EdgeSet t : orbit)
      if (pending.erase(t) == 0) throw std::logic_error("orbit leaves the supplied tree list");
    report.orbits.push_back(Orbit{*orbit.begin(), std::vector<EdgeSet>(orbit.begin(), orbit.end())});
  }
  for (const Orbit& o : report.orbits) report.sizes.push_back(o.trees.size());
  report.burnside = burnside(group, trees);
  return report;
}

std::vector<EdgeSet> grow_invariant_trees(const Isometry& iso, Edge seed) {
  if (iso.klass() != IsometryClass::Rot2_180 && iso.klass() != IsometryClass::Ref2)
    throw std::invalid_argument("symmetric growth needs a Rot2_180 or Ref2 isometry, got " + std::string(to_string(iso.klass())));
  const Graph& cube = cube_graph();
  const auto seed_index = cube.edge_index(seed);
  const EdgeSet invariant = invariant_edges(iso);
  if (!seed_index || !invariant.contains(*seed_index))
    throw std::invalid_argument("seed " + format_edge(seed) + " is not invariant under " + iso.to_cycle_string());

  const auto touched = [&cube](EdgeSet s) {
    std::uint32_t vertices = 0;
    for (std::size_t i : s.indices()) vertices |= (1U << cube.edge(i).u) | (1U << cube.edge(i).v);
    return vertices;
  };

  std::set<EdgeSet> complete;
  std::set<EdgeSet> visited;
  const std::function<void(EdgeSet)> grow = [&](EdgeSet partial) {
    if (!visited.insert(partial).second) return;
    if (partial.size() == cube.vertex_count() - 1) {
      if (is_spanning_tree(cube, partial)) complete.insert(partial);
      return;
    }
    const std::uint32_t reached = touched(partial);
    for (std::size_t i = 0; i < kCubeEdges; ++i) {
      if (partial.contains(i) || invariant.contains(i)) continue;
      const Edge& e = cube.edge(i);
      const bool sprouts = ((reached >> e.u) & 1U) != ((reached >> e.v) & 1U);
      if (!sprouts) continue;
      EdgeSet next = partial;
      next.insert(i);
      next.insert(iso.edge_image(i));
      if (has_circuit(next)) continue;
      grow(next);
    }
  };
  grow(EdgeSet::single(*seed_index));
  return {complete.begin(), complete.end()};
}

}  // namespace unfoldium
