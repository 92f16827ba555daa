#include "unfoldium/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "unfoldium/graph.hpp"
#include "unfoldium/symmetry.hpp"
#include "unfoldium/unfold.hpp"

namespace unfoldium {

namespace {

struct Outcome {
  std::string actual;
  bool pass = false;
};

template <typename Range>
std::string join(const Range& values) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  return out.str();
}

class Runner {
 public:
  void add(std::string id, std::string description, std::string expected, const std::function<Outcome()>& body) {
    Check check{std::move(id), std::move(description), std::move(expected), {}, false};
    try {
      const Outcome o = body();
      check.actual = o.actual;
      check.pass = o.pass;
    } catch (const std::exception& e) {
      check.actual = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(check));
  }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

}  // namespace

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

VerificationReport run_verification(const VerifyOptions& options) {
  const Graph& cube = cube_graph();
  const std::vector<EdgeSet> trees = enumerate_spanning_trees(cube);

  std::vector<Isometry> gens{generators::quarter_turn(), generators::third_turn(), generators::antipodal()};
  if (options.inject_bad_generator) gens[1] = generators::quarter_turn() * generators::quarter_turn();
  const SymmetryGroup group = SymmetryGroup::closure(gens);

  Runner run;

  run.add("AC01", "Matrix-Tree count of the cube for every deleted vertex, and exhaustive enumeration",
          "384 for each of 8 minors; enumerated 384", [&] {
            std::vector<std::uint64_t> counts;
            for (VertexId v = 1; v <= cube.vertex_count(); ++v) counts.push_back(count_spanning_trees_matrix_tree(cube, v));
            const bool minors_ok = std::all_of(counts.begin(), counts.end(), [](std::uint64_t c) { return c == 384; });
            const bool trees_ok = std::all_of(trees.begin(), trees.end(), [&](EdgeSet t) { return t.size() == 7 && is_spanning_tree(cube, t); });
            return Outcome{"minors " + join(counts) + "; enumerated " + std::to_string(trees.size()),
                           minors_ok && trees.size() == 384 && trees_ok};
          });

  run.add("AC02", "Group order, rotation subgroup, centre, and the quarter-turn/antipodal product",
          "|G|=48; rotations 24; centre {(),(17)(28)(35)(46)}; rho1*alpha=(1836)(2547)", [&] {
            const SymmetryGroup rotations = generate_rotation_group();
            const auto centre = group.center();
            std::set<std::string> centre_names;
            for (const Isometry& z : centre) centre_names.insert(z.to_cycle_string());
            const std::string product = (generators::quarter_turn() * generators::antipodal()).to_cycle_string();
            const bool pass = group.order() == 48 && group.is_closed() && rotations.order() == 24 &&
                              group.rotations().size() == 24 &&
                              centre_names == std::set<std::string>{"()", "(17)(28)(35)(46)"} && product == "(1836)(2547)";
            return Outcome{"|G|=" + std::to_string(group.order()) + "; rotations " + std::to_string(rotations.order()) +
                               "; centre {" + join(centre_names) + "}; rho1*alpha=" + product,
                           pass};
          });

  run.add("AC03", "Class census over the ten isometry classes", "1,6,3,6,8,1,6,3,6,8; |R|=6; |F|=3", [&] {
    std::vector<std::size_t> sizes;
    for (IsometryClass c : kAllClasses) sizes.push_back(group.of_class(c).size());
    const std::vector<std::size_t> want{1, 6, 3, 6, 8, 1, 6, 3, 6, 8};
    const auto r = group.of_class(IsometryClass::Rot2_180).size();
    const auto f = group.of_class(IsometryClass::Ref2).size();
    return Outcome{join(sizes) + "; |R|=" + std::to_string(r) + "; |F|=" + std::to_string(f), sizes == want && r == 6 && f == 3};
  });

  run.add("AC04", "Element orders; orders divisible by 3 are 3 or 6", "orders within {1,2,3,4,6}", [&] {
    std::set<int> orders;
    bool multiples_ok = true;
    for (const Isometry& g : group.elements()) {
      const int o = g.order();
      orders.insert(o);
      if (o % 3 == 0 && o != 3 && o != 6) multiples_ok = false;
    }
    const std::set<int> allowed{1, 2, 3, 4, 6};
    const bool subset = std::includes(allowed.begin(), allowed.end(), orders.begin(), orders.end());
    return Outcome{"orders {" + join(orders) + "}", subset && multiples_ok && group.order() == 48};
  });

  run.add("AC05", "Edge stabilizers and transitivity on edges", "every |Stab(e)|=4; orbit of 1-2 has 12 edges", [&] {
    std::set<std::size_t> stabilizer_orders;
    for (const Edge& e : cube.edges()) stabilizer_orders.insert(edge_stabilizer(group, e).size());
    std::set<std::size_t> orbit;
    for (const Isometry& g : group.elements()) orbit.insert(g.edge_image(0));
    return Outcome{"stabilizer orders {" + join(stabilizer_orders) + "}; edge orbit " + std::to_string(orbit.size()),
                   stabilizer_orders == std::set<std::size_t>{4} && orbit.size() == 12};
  });

  run.add("AC06", "Fixed spanning trees per element",
          "identity 384; each Rot2_180 16; each Ref2 16; all others 0", [&] {
            bool pass = group.order() == 48;
            std::map<IsometryClass, std::set<std::size_t>> seen;
            for (const Isometry& g : group.elements()) {
              const std::size_t fixed = fixed_trees(g, trees).size();
              seen[g.klass()].insert(fixed);
              std::size_t want = 0;
              if (g.klass() == IsometryClass::Identity) want = 384;
              if (g.klass() == IsometryClass::Rot2_180 || g.klass() == IsometryClass::Ref2) want = 16;
              pass = pass && fixed == want;
            }
            std::string actual;
            for (const auto& [klass, counts] : seen) {
              if (!actual.empty()) actual += "; ";
              actual += std::string(to_string(klass)) + " {" + join(counts) + "}";
            }
            return Outcome{actual, pass};
          });

  run.add("AC07", "Burnside count and explicit orbit partition",
          "sum 528; 528/48 = 11 = 8 + 16/8 + 16/16; 11 orbits sized 48x5, 24x6", [&] {
            const OrbitReport report = compute_orbits(group, trees);
            const long long shortcut = burnside_by_class_representatives(group, trees);
            std::multiset<std::size_t> sizes(report.sizes.begin(), report.sizes.end());
            const std::multiset<std::size_t> want{48, 48, 48, 48, 48, 24, 24, 24, 24, 24, 24};
            std::size_t total = 0;
            bool divides = true;
            for (std::size_t s : report.sizes) {
              total += s;
              divides = divides && group.order() % s == 0;
            }
            const long long closed_form = 8 + 16 / 8 + 16 / 16;
            const bool pass = report.burnside.fixed_sum == 528 && report.burnside.orbit_count == 11 && shortcut == 11 &&
                              closed_form == 11 && report.orbits.size() == 11 && total == 384 && divides && sizes == want;
            std::vector<std::size_t> sorted(sizes.rbegin(), sizes.rend());
            return Outcome{"sum " + std::to_string(report.burnside.fixed_sum) + "; burnside " +
                               std::to_string(report.burnside.orbit_count) + "; by class " + std::to_string(shortcut) +
                               "; orbits " + std::to_string(report.orbits.size()) + " sized " + join(sorted),
                           pass};
          });

  run.add("AC08", "Every tree fixed by a non-identity isometry has exactly one invariant edge",
          "exactly 1 for all fixed (g, T) pairs", [&] {
            std::set<int> counts;
            std::size_t pairs = 0;
            for (const Isometry& g : group.elements()) {
              if (g.klass() == IsometryClass::Identity) continue;
              const EdgeSet inv = invariant_edges(g);
              for (EdgeSet t : fixed_trees(g, trees)) {
                counts.insert((t & inv).size());
                ++pairs;
              }
            }
            return Outcome{std::to_string(pairs) + " pairs; invariant-edge counts {" + join(counts) + "}",
                           pairs > 0 && counts == std::set<int>{1}};
          });

  run.add("AC09", "Symmetric growth from a seed edge versus brute-force filtering",
          "phi0: 4 per seed, union 16; rho0: 8 per seed, union 16; unions equal fixed sets", [&] {
            bool pass = true;
            std::string actual;
            for (const Isometry& iso : {generators::edge_mirror(), generators::edge_half_turn()}) {
              std::set<EdgeSet> grown;
              std::vector<std::size_t> per_seed;
              for (std::size_t i : invariant_edges(iso).indices()) {
                const auto part = grow_invariant_trees(iso, cube.edge(i));
                per_seed.push_back(part.size());
                grown.insert(part.begin(), part.end());
              }
              const auto brute = fixed_trees(iso, trees);
              const std::size_t want = iso.klass() == IsometryClass::Ref2 ? 4 : 8;
              pass = pass && grown == std::set<EdgeSet>(brute.begin(), brute.end()) && grown.size() == 16 &&
                     std::all_of(per_seed.begin(), per_seed.end(), [want](std::size_t n) { return n == want; });
              if (!actual.empty()) actual += "; ";
              actual += iso.to_cycle_string() + " per seed " + join(per_seed) + " union " + std::to_string(grown.size()) +
                        " brute " + std::to_string(brute.size());
            }
            return Outcome{actual, pass};
          });

  run.add("AC10", "Layouts are overlap-free hexominoes and fold back to their cut tree",
          "384 valid hexominoes; 384 recovered", [&] {
            std::size_t valid = 0;
            std::size_t recovered = 0;
            for (EdgeSet t : trees) {
              const Net net = layout(t);
              const auto cells = net.cells();
              valid += is_polyomino(cells);
              recovered += fold_back(net) == t;
            }
            return Outcome{std::to_string(valid) + " valid hexominoes; " + std::to_string(recovered) + " recovered",
                           valid == 384 && recovered == 384 && trees.size() == 384};
          });

  run.add("AC11", "Incongruent unfoldings", "11 shapes; one shape per orbit; counts sum to 384", [&] {
    const ShapeClasses shapes = classify_shapes(trees);
    const OrbitReport report = compute_orbits(group, trees);
    std::map<CanonicalShape, std::size_t> shape_to_orbit;
    bool constant = true;
    for (std::size_t o = 0; o < report.orbits.size(); ++o) {
      std::set<CanonicalShape> in_orbit;
      for (EdgeSet t : report.orbits[o].trees) in_orbit.insert(canonical_form(layout(t)));
      constant = constant && in_orbit.size() == 1;
      shape_to_orbit.emplace(*in_orbit.begin(), o);
    }
    std::size_t total = 0;
    for (const auto& [shape, members] : shapes) total += members.size();
    const bool distinct = shape_to_orbit.size() == report.orbits.size();
    return Outcome{std::to_string(shapes.size()) + " shapes; constant on orbits " + (constant ? "yes" : "no") +
                       "; distinct across orbits " + (distinct ? "yes" : "no") + "; total " + std::to_string(total),
                   shapes.size() == 11 && constant && distinct && total == 384 && report.orbits.size() == 11};
  });

  run.add("AC12", "Rejection paths", "circuit and cardinality rejected; bad generator fails the order check", [&] {
    const auto circuit = spanning_tree_violation(cube, parse_edge_set(cube, "1-2,2-3,3-4,1-4,5-6,6-7,7-8"));
    const auto short_set = spanning_tree_violation(cube, parse_edge_set(cube, "1-2"));
    bool bad_rejected = false;
    try {
      const std::array bad{generators::quarter_turn(), generators::quarter_turn() * generators::quarter_turn(),
                           generators::antipodal()};
      (void)generate_full_group(bad);
    } catch (const GroupError&) {
      bad_rejected = true;
    }
    const bool pass = circuit == TreeViolation::Circuit && short_set == TreeViolation::WrongCardinality && bad_rejected;
    return Outcome{std::string("circuit: ") + (circuit ? std::string(describe(*circuit)) : "accepted") +
                       "; single edge: " + (short_set ? std::string(describe(*short_set)) : "accepted") +
                       "; bad generator " + (bad_rejected ? "rejected" : "accepted"),
                   pass};
  });

  return run.take();
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  }
  return {{"schema", 1},
          {"command", "verify"},
          {"checks", checks},
          {"summary", {{"passed", report.passed()}, {"total", report.total()}}}};
}

}  // namespace unfoldium
