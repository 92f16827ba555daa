// Acceptance suite: one line per criterion, exact comparisons throughout.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "unfoldium/graph.hpp"
#include "unfoldium/symmetry.hpp"
#include "unfoldium/unfold.hpp"
#include "unfoldium/verify.hpp"

using namespace unfoldium;

namespace {

int failures = 0;

void criterion(const char* id, const char* title, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  failures += !pass;
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << "  " << title << "  (" << detail.str() << ")\n";
}

}  // namespace

int main() {
  const auto started = std::chrono::steady_clock::now();
  const Graph& cube = cube_graph();
  const std::vector<EdgeSet> trees = enumerate_spanning_trees(cube);
  const SymmetryGroup group = generate_full_group();

  criterion("AC01", "Matrix-Tree count 384 for all 8 minors, equal to enumeration", [&](auto& d) {
    bool ok = trees.size() == 384;
    for (VertexId v = 1; v <= 8; ++v) {
      const auto count = count_spanning_trees_matrix_tree(cube, v);
      d << count << (v < 8 ? "," : "");
      ok = ok && count == 384 && count == trees.size();
    }
    d << "; enumerated " << trees.size();
    return ok;
  });

  criterion("AC02", "|G|=48, rotations 24, centre {id, alpha}, rho1*alpha=(1836)(2547)", [&](auto& d) {
    const auto rotations = generate_rotation_group();
    const auto centre = group.center();
    const auto product = generators::quarter_turn() * generators::antipodal();
    d << "|G|=" << group.order() << " rot=" << rotations.order() << " centre=" << centre.size()
      << " product=" << product.to_cycle_string();
    return group.order() == 48 && group.is_closed() && rotations.order() == 24 && centre.size() == 2 &&
           centre[0] == Isometry::identity() && centre[1] == generators::antipodal() &&
           product == Isometry::parse("(1836)(2547)");
  });

  criterion("AC03", "class census (1,6,3,6,8,1,6,3,6,8), |R|=6, |F|=3", [&](auto& d) {
    std::vector<std::size_t> sizes;
    for (IsometryClass c : kAllClasses) {
      sizes.push_back(group.of_class(c).size());
      d << sizes.back() << ' ';
    }
    return sizes == std::vector<std::size_t>{1, 6, 3, 6, 8, 1, 6, 3, 6, 8} &&
           group.of_class(IsometryClass::Rot2_180).size() == 6 && group.of_class(IsometryClass::Ref2).size() == 3;
  });

  criterion("AC04", "orders within {1,2,3,4,6}; multiples of 3 are 3 or 6", [&](auto& d) {
    std::map<int, int> histogram;
    for (const Isometry& g : group.elements()) ++histogram[g.order()];
    bool ok = true;
    for (const auto& [order, count] : histogram) {
      d << order << ":" << count << ' ';
      ok = ok && (order == 1 || order == 2 || order == 3 || order == 4 || order == 6);
      if (order % 3 == 0) ok = ok && (order == 3 || order == 6);
    }
    return ok;
  });

  criterion("AC05", "every edge stabilizer has order 4; edges form one orbit of 12", [&](auto& d) {
    bool ok = true;
    for (const Edge& e : cube.edges()) ok = ok && edge_stabilizer(group, e).size() == 4;
    std::set<std::size_t> orbit;
    for (const Isometry& g : group.elements()) orbit.insert(g.edge_image(0));
    d << "edge orbit " << orbit.size();
    return ok && orbit.size() == 12;
  });

  criterion("AC06", "fixed trees: identity 384, Rot2 16, Ref2 16, others (incl. Ref1) 0", [&](auto& d) {
    bool ok = true;
    for (const Isometry& g : group.elements()) {
      const auto fixed = fixed_trees(g, trees).size();
      std::size_t want = 0;
      if (g.klass() == IsometryClass::Identity) want = 384;
      if (g.klass() == IsometryClass::Rot2_180 || g.klass() == IsometryClass::Ref2) want = 16;
      ok = ok && fixed == want;
    }
    d << "Ref1 elements " << group.of_class(IsometryClass::Ref1).size();
    return ok;
  });

  criterion("AC07", "Burnside 528/48 = 11 = 8 + 16/8 + 16/16; orbits 48x5, 24x6", [&](auto& d) {
    const auto report = compute_orbits(group, trees);
    const long long rho0 = static_cast<long long>(fixed_trees(generators::edge_half_turn(), trees).size());
    const long long phi0 = static_cast<long long>(fixed_trees(generators::edge_mirror(), trees).size());
    const bool closed_form = rho0 % 8 == 0 && phi0 % 16 == 0 && 8 + rho0 / 8 + phi0 / 16 == 11;
    std::multiset<std::size_t> sizes(report.sizes.begin(), report.sizes.end());
    std::size_t total = 0;
    bool divides = true;
    for (std::size_t s : report.sizes) {
      total += s;
      divides = divides && 48 % s == 0;
    }
    d << "sum " << report.burnside.fixed_sum << " orbits " << report.orbits.size();
    return report.burnside.fixed_sum == 528 && report.burnside.orbit_count == 11 && closed_form &&
           burnside_by_class_representatives(group, trees) == 11 && report.orbits.size() == 11 && total == 384 &&
           divides && sizes == std::multiset<std::size_t>{48, 48, 48, 48, 48, 24, 24, 24, 24, 24, 24};
  });

  criterion("AC08", "each g-fixed tree (g != id) has exactly one invariant edge", [&](auto& d) {
    std::size_t pairs = 0;
    bool ok = true;
    for (const Isometry& g : group.elements()) {
      if (g == Isometry::identity()) continue;
      for (EdgeSet t : fixed_trees(g, trees)) {
        ++pairs;
        ok = ok && (t & invariant_edges(g)).size() == 1;
      }
    }
    d << pairs << " pairs";
    return ok && pairs == 144;
  });

  criterion("AC09", "growth: 4 per phi0 seed, 8 per rho0 seed; unions equal the 16-tree fixed sets", [&](auto& d) {
    const Isometry phi0 = generators::edge_mirror();
    const Isometry rho0 = generators::edge_half_turn();
    bool ok = true;
    for (const auto& [iso, per_seed] : {std::pair{phi0, std::size_t{4}}, std::pair{rho0, std::size_t{8}}}) {
      std::set<EdgeSet> grown;
      for (std::size_t i : invariant_edges(iso).indices()) {
        const auto part = grow_invariant_trees(iso, cube.edge(i));
        ok = ok && part.size() == per_seed;
        grown.insert(part.begin(), part.end());
      }
      const auto brute = fixed_trees(iso, trees);
      ok = ok && grown.size() == 16 && grown == std::set<EdgeSet>(brute.begin(), brute.end());
      d << iso.to_cycle_string() << ":" << grown.size() << ' ';
    }
    return ok;
  });

  criterion("AC10", "all 384 layouts are overlap-free hexominoes; fold-back recovers each cut", [&](auto& d) {
    std::size_t good = 0;
    for (EdgeSet t : trees) {
      const Net net = layout(t);
      const auto cells = net.cells();
      good += is_polyomino(cells) && fold_back(net) == t;
    }
    d << good << "/384";
    return good == 384 && trees.size() == 384;
  });

  criterion("AC11", "exactly 11 incongruent shapes, constant on orbits and distinct across them", [&](auto& d) {
    const auto shapes = classify_shapes(trees);
    const auto report = compute_orbits(group, trees);
    std::set<CanonicalShape> per_orbit;
    bool constant = true;
    for (const Orbit& o : report.orbits) {
      const CanonicalShape first = canonical_form(layout(o.trees.front()));
      for (EdgeSet t : o.trees) constant = constant && canonical_form(layout(t)) == first;
      per_orbit.insert(first);
    }
    std::size_t total = 0;
    for (const auto& [shape, members] : shapes) total += members.size();
    d << shapes.size() << " shapes, " << per_orbit.size() << " orbit shapes, total " << total;
    return shapes.size() == 11 && constant && per_orbit.size() == report.orbits.size() && total == 384;
  });

  criterion("AC12", "circuit / cardinality inputs rejected with diagnostics; bad generator fails order check",
            [&](auto& d) {
              std::ostringstream out, err_circuit, err_short, vout, verr;
              const cli::Output circuit_io{out, err_circuit, false, false};
              const cli::Output short_io{out, err_short, false, false};
              const int circuit = cli::unfold("1-2,2-3,3-4,1-4,5-6,6-7,7-8", std::nullopt, circuit_io);
              const int short_cut = cli::unfold("1-2", std::nullopt, short_io);

              VerifyOptions bad;
              bad.inject_bad_generator = true;
              const VerificationReport report = run_verification(bad);
              bool order_check_failed = false;
              for (const Check& c : report.checks)
                if (c.id == "AC02") order_check_failed = !c.pass;
              const int verify_exit = cli::verify(bad, cli::Output{vout, verr, true, false});

              d << "circuit exit " << circuit << ", single edge exit " << short_cut << ", bad generator exit "
                << verify_exit;
              return circuit == cli::kFailure && err_circuit.str().find("contains a circuit") != std::string::npos &&
                     short_cut == cli::kFailure && err_short.str().find("expected 7 edges") != std::string::npos &&
                     order_check_failed && verify_exit == cli::kFailure;
            });

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
            << elapsed.count() << " ms\n";
  return failures == 0 ? 0 : 1;
}
