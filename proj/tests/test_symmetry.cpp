#include <map>
#include <set>

#include "doctest.h"
#include "unfoldium/graph.hpp"
#include "unfoldium/symmetry.hpp"

using namespace unfoldium;

namespace {

const SymmetryGroup& full_group() {
  static const SymmetryGroup g = generate_full_group();
  return g;
}

const std::vector<EdgeSet>& cube_trees() {
  static const std::vector<EdgeSet> t = enumerate_spanning_trees(cube_graph());
  return t;
}

EdgeSet edges(std::string_view text) { return parse_edge_set(cube_graph(), text); }

}  // namespace

TEST_SUITE("symmetry") {
  TEST_CASE("cycle notation round trip") {
    for (const Isometry& g : full_group().elements()) CHECK(Isometry::parse(g.to_cycle_string()) == g);
    CHECK(Isometry::identity().to_cycle_string() == "()");
    CHECK(Isometry::parse("()") == Isometry::identity());
    CHECK(Isometry::parse("(1234)(5678)").image(4) == 1);
    CHECK_THROWS_AS((void)Isometry::parse("(12"), ParseError);
    CHECK_THROWS_AS((void)Isometry::parse("(1231)"), ParseError);
    CHECK_THROWS_AS((void)Isometry::parse("(19)"), ParseError);
    CHECK_THROWS_AS((void)Isometry::parse("1(23)"), ParseError);
  }

  TEST_CASE("permutations that break adjacency are rejected") {
    CHECK_THROWS_AS((void)Isometry::parse("(12)"), NotAnIsometry);
    CHECK_THROWS_AS((void)Isometry::parse("(17)"), NotAnIsometry);
    CHECK_THROWS_AS(Isometry(VertexPerm{1, 1, 3, 4, 5, 6, 7, 8}), NotAnIsometry);
  }

  TEST_CASE("composition follows the right-action convention") {
    const Isometry rho1 = generators::quarter_turn();
    const Isometry alpha = generators::antipodal();
    CHECK((rho1 * alpha).to_cycle_string() == "(1836)(2547)");
    CHECK((rho1 * rho1 * alpha).to_cycle_string() == "(15)(26)(37)(48)");
    CHECK((generators::edge_half_turn() * alpha).to_cycle_string() == "(18)(27)");
    CHECK((generators::third_turn() * alpha).to_cycle_string() == "(156734)(28)");
    // x^(gh) = (x^g)^h on trees as well as on vertices.
    const Isometry g = generators::third_turn();
    const Isometry h = rho1;
    for (EdgeSet t : cube_trees()) REQUIRE(act_on_tree(g * h, t) == act_on_tree(h, act_on_tree(g, t)));
  }

  TEST_CASE("group generation") {
    const SymmetryGroup& g = full_group();
    CHECK(g.order() == 48);
    CHECK(g[0] == Isometry::identity());
    CHECK(g.is_closed());
    CHECK(g.rotations().size() == 24);
    CHECK(generate_rotation_group().order() == 24);
    for (const Isometry& r : generate_rotation_group().elements()) CHECK(r.is_rotation());

    const auto centre = g.center();
    REQUIRE(centre.size() == 2);
    CHECK(centre[0] == Isometry::identity());
    CHECK(centre[1] == generators::antipodal());

    // Breadth-first order is reproducible.
    const SymmetryGroup again = generate_full_group();
    for (std::size_t i = 0; i < g.order(); ++i) CHECK(g[i] == again[i]);
  }

  TEST_CASE("a wrong generator fails the order check") {
    const std::array bad{generators::quarter_turn(), generators::quarter_turn() * generators::quarter_turn(),
                         generators::antipodal()};
    CHECK(SymmetryGroup::closure(bad).order() == 8);
    CHECK_THROWS_AS((void)generate_full_group(bad), GroupError);
  }

  TEST_CASE("classification against the published cycle forms") {
    CHECK(classify(Isometry::parse("(1234)(5678)")) == IsometryClass::Rot1_90);
    CHECK(classify(Isometry::parse("(13)(24)(57)(68)")) == IsometryClass::Rot1_180);
    CHECK(classify(Isometry::parse("(12)(35)(46)(78)")) == IsometryClass::Rot2_180);
    CHECK(classify(Isometry::parse("(136)(475)")) == IsometryClass::Rot3_120);
    CHECK(classify(Isometry::parse("(17)(28)(35)(46)")) == IsometryClass::Antipodal);
    CHECK(classify(Isometry::parse("(18)(27)")) == IsometryClass::Ref1);
    CHECK(classify(Isometry::parse("(15)(26)(37)(48)")) == IsometryClass::Ref2);
    CHECK(classify(Isometry::parse("(1836)(2547)")) == IsometryClass::RotoRef90);
    CHECK(classify(Isometry::parse("(156734)(28)")) == IsometryClass::RotoRef60);
    CHECK(classify(Isometry::identity()) == IsometryClass::Identity);
    // The two reflection forms that appear in the Ref 1 exclusion argument.
    CHECK((Isometry::parse("(17)(28)(34)(56)") * generators::antipodal()).klass() == IsometryClass::Ref1);
    CHECK((Isometry::parse("(18)(45)(27)(36)") * generators::antipodal()).klass() == IsometryClass::Ref2);
  }

  TEST_CASE("class census") {
    std::map<IsometryClass, int> census;
    for (const Isometry& g : full_group().elements()) ++census[g.klass()];
    const std::vector<int> want{1, 6, 3, 6, 8, 1, 6, 3, 6, 8};
    for (std::size_t i = 0; i < kAllClasses.size(); ++i) {
      CAPTURE(to_string(kAllClasses[i]));
      CHECK(census[kAllClasses[i]] == want[i]);
    }
  }

  TEST_CASE("classes coincide with brute-force conjugacy classes") {
    const auto& elements = full_group().elements();
    std::set<std::set<Isometry>> conjugacy;
    for (const Isometry& x : elements) {
      std::set<Isometry> cls;
      for (const Isometry& g : elements) cls.insert(g.inverse() * x * g);
      conjugacy.insert(cls);
    }
    CHECK(conjugacy.size() == 10);
    for (const auto& cls : conjugacy) {
      std::set<IsometryClass> labels;
      for (const Isometry& x : cls) labels.insert(x.klass());
      CHECK(labels.size() == 1);
    }
  }

  TEST_CASE("element orders") {
    for (const Isometry& g : full_group().elements()) {
      const int o = g.order();
      CHECK((o == 1 || o == 2 || o == 3 || o == 4 || o == 6));
      if (o % 3 == 0) CHECK((o == 3 || o == 6));
      if (o == 3) CHECK(g.is_rotation());
      if (o == 6) CHECK_FALSE(g.is_rotation());
    }
  }

  TEST_CASE("invariant edges") {
    CHECK(invariant_edges(Isometry::identity()).size() == 12);
    CHECK(format_edge_set(cube_graph(), invariant_edges(generators::edge_half_turn())) == "1-2,7-8");
    CHECK(format_edge_set(cube_graph(), invariant_edges(generators::edge_mirror())) == "1-5,2-6,3-7,4-8");
    // Only Rot2_180, Ref1 and Ref2 leave any edge in place.
    for (const Isometry& g : full_group().elements()) {
      if (g.klass() == IsometryClass::Identity) continue;
      const bool expect = g.klass() == IsometryClass::Rot2_180 || g.klass() == IsometryClass::Ref1 ||
                          g.klass() == IsometryClass::Ref2;
      CAPTURE(g.to_cycle_string());
      CHECK(!invariant_edges(g).empty() == expect);
    }
  }

  TEST_CASE("action on trees") {
    const Isometry alpha = generators::antipodal();
    CHECK(act_on_tree(alpha, edges("1-2")) == edges("7-8"));
    for (EdgeSet t : cube_trees()) {
      REQUIRE(act_on_tree(Isometry::identity(), t) == t);
      for (const Isometry& g : full_group().elements()) REQUIRE(is_spanning_tree(cube_graph(), act_on_tree(g, t)));
    }
  }

  TEST_CASE("edge stabilizers") {
    const auto stab = edge_stabilizer(full_group(), Edge(1, 2));
    REQUIRE(stab.size() == 4);
    std::multiset<IsometryClass> classes;
    for (const Isometry& g : stab) classes.insert(g.klass());
    CHECK(classes == std::multiset<IsometryClass>{IsometryClass::Identity, IsometryClass::Rot2_180,
                                                  IsometryClass::Ref1, IsometryClass::Ref2});
    for (const Edge& e : cube_graph().edges()) CHECK(edge_stabilizer(full_group(), e).size() == 4);
    std::set<std::size_t> orbit;
    for (const Isometry& g : full_group().elements()) orbit.insert(g.edge_image(0));
    CHECK(orbit.size() == 12);
    CHECK_THROWS_AS((void)edge_stabilizer(full_group(), Edge(1, 7)), std::invalid_argument);
  }

  TEST_CASE("fixed trees") {
    CHECK(fixed_trees(Isometry::identity(), cube_trees()).size() == 384);
    for (const Isometry& g : full_group().elements()) {
      const auto fixed = fixed_trees(g, cube_trees());
      CAPTURE(g.to_cycle_string());
      switch (g.klass()) {
        case IsometryClass::Identity: CHECK(fixed.size() == 384); break;
        case IsometryClass::Rot2_180:
        case IsometryClass::Ref2: CHECK(fixed.size() == 16); break;
        default: CHECK(fixed.empty()); break;
      }
      CHECK(std::is_sorted(fixed.begin(), fixed.end()));
    }
  }

  TEST_CASE("a fixed tree contains exactly one invariant edge") {
    for (const Isometry& g : full_group().elements()) {
      if (g.klass() == IsometryClass::Identity) continue;
      const EdgeSet inv = invariant_edges(g);
      for (EdgeSet t : fixed_trees(g, cube_trees())) REQUIRE((t & inv).size() == 1);
    }
  }

  TEST_CASE("burnside") {
    const BurnsideResult r = burnside(full_group(), cube_trees());
    CHECK(r.fixed_sum == 384 + 6 * 16 + 3 * 16);
    CHECK(r.fixed_sum == 528);
    CHECK(r.orbit_count == 11);
    CHECK(burnside_orbit_count(full_group(), cube_trees()) == 11);
    CHECK(burnside_by_class_representatives(full_group(), cube_trees()) == 11);
    for (const ClassFixedCount& c : r.by_class) CHECK(c.fixed_per_element >= 0);

    const SymmetryGroup trivial = SymmetryGroup::closure({});
    CHECK(trivial.order() == 1);
    CHECK(burnside_orbit_count(trivial, cube_trees()) == 384);
  }

  TEST_CASE("burnside rejects a set that is not closed under the action") {
    // A lone tree from an orbit of 24 is fixed by the identity and one other
    // element, so the fixed-point sum is 2.
    const auto report = compute_orbits(full_group(), cube_trees());
    const Orbit* small = nullptr;
    for (const Orbit& o : report.orbits)
      if (o.trees.size() == 24) small = &o;
    REQUIRE(small != nullptr);
    const std::vector<EdgeSet> one{small->representative};
    CHECK_THROWS_AS((void)burnside(full_group(), one), BurnsideError);
  }

  TEST_CASE("orbits agree with an orbit-stabilizer oracle") {
    const OrbitReport report = compute_orbits(full_group(), cube_trees());
    CHECK(report.orbits.size() == 11);

    // Oracle: sum over trees of |Stab|/|G| counts each orbit exactly once.
    long long stab_sum = 0;
    std::multiset<std::size_t> oracle_sizes;
    for (EdgeSet t : cube_trees()) {
      std::size_t stab = 0;
      for (const Isometry& g : full_group().elements()) stab += act_on_tree(g, t) == t;
      stab_sum += static_cast<long long>(stab);
      if (std::all_of(report.orbits.begin(), report.orbits.end(), [t](const Orbit& o) { return o.representative != t; }))
        continue;
      oracle_sizes.insert(48 / stab);
    }
    CHECK(stab_sum % 48 == 0);
    CHECK(stab_sum / 48 == 11);
    CHECK(oracle_sizes == std::multiset<std::size_t>(report.sizes.begin(), report.sizes.end()));
    CHECK(oracle_sizes == std::multiset<std::size_t>{48, 48, 48, 48, 48, 24, 24, 24, 24, 24, 24});

    std::size_t total = 0;
    for (const Orbit& o : report.orbits) {
      total += o.trees.size();
      CHECK(48 % o.trees.size() == 0);
      CHECK(o.representative == o.trees.front());
      CHECK(std::is_sorted(o.trees.begin(), o.trees.end()));
      for (EdgeSet t : o.trees) CHECK(report.orbit_of(t) == report.orbit_of(o.representative));
    }
    CHECK(total == 384);
  }

  TEST_CASE("symmetric growth") {
    const Isometry phi0 = generators::edge_mirror();
    const Isometry rho0 = generators::edge_half_turn();
    CHECK(grow_invariant_trees(phi0, Edge(1, 5)).size() == 4);
    CHECK(grow_invariant_trees(rho0, Edge(1, 2)).size() == 8);

    std::set<EdgeSet> union_rho;
    for (std::size_t i : invariant_edges(rho0).indices()) {
      const auto grown = grow_invariant_trees(rho0, cube_graph().edge(i));
      union_rho.insert(grown.begin(), grown.end());
    }
    const auto fixed = fixed_trees(rho0, cube_trees());
    CHECK(union_rho == std::set<EdgeSet>(fixed.begin(), fixed.end()));
    CHECK(union_rho.size() == 16);
  }

  TEST_CASE("growth equals the brute-force filter for every valid isometry and seed") {
    for (const Isometry& g : full_group().elements()) {
      if (g.klass() != IsometryClass::Rot2_180 && g.klass() != IsometryClass::Ref2) continue;
      const auto fixed = fixed_trees(g, cube_trees());
      for (std::size_t seed : invariant_edges(g).indices()) {
        std::vector<EdgeSet> want;
        for (EdgeSet t : fixed)
          if ((t & invariant_edges(g)) == EdgeSet::single(seed)) want.push_back(t);
        CAPTURE(g.to_cycle_string());
        CHECK(grow_invariant_trees(g, cube_graph().edge(seed)) == want);
      }
    }
  }

  TEST_CASE("growth preconditions") {
    CHECK_THROWS_AS((void)grow_invariant_trees(Isometry::parse("(18)(27)"), Edge(3, 4)), std::invalid_argument);
    CHECK_THROWS_AS((void)grow_invariant_trees(generators::quarter_turn(), Edge(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS((void)grow_invariant_trees(generators::edge_half_turn(), Edge(1, 4)), std::invalid_argument);
  }
}
