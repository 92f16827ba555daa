#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "unfoldium/graph.hpp"
#include "unfoldium/symmetry.hpp"
#include "unfoldium/unfold.hpp"

namespace unfoldium::cli {

namespace {

using nlohmann::json;

json json_cells(std::span<const Cell> cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back({c.x, c.y});
  return out;
}

std::string two_digits(std::size_t n) {
  std::ostringstream s;
  s << std::setw(2) << std::setfill('0') << n;
  return s.str();
}

void emit(const Output& io, const json& document) { io.out << document.dump(2) << '\n'; }

std::string paint(const Output& io, const std::string& text, const char* ansi) {
  if (!io.color) return text;
  return std::string("\x1b[") + ansi + "m" + text + "\x1b[0m";
}

std::size_t stabilizer_order(const SymmetryGroup& group, EdgeSet tree) {
  return static_cast<std::size_t>(std::count_if(group.elements().begin(), group.elements().end(),
                                                [tree](const Isometry& g) { return act_on_tree(g, tree) == tree; }));
}

bool write_file(const std::filesystem::path& path, const std::string& contents, const Output& io) {
  std::ofstream file(path);
  file << contents;
  file.close();
  if (!file) {
    io.err << "error: cannot write " << path.string() << '\n';
    return false;
  }
  return true;
}

}  // namespace

int count_trees(const std::string& graph_name, const Output& io) {
  std::optional<Graph> graph;
  if (graph_name == "cube") graph = cube_graph();
  else if (graph_name == "k4") graph = complete_graph(4);
  else if (graph_name == "path2") graph = path_graph(2);
  else {
    io.err << "error: unknown graph '" << graph_name << "' (expected cube, k4 or path2)\n";
    return kUsage;
  }

  const std::uint64_t matrix_tree = count_spanning_trees_matrix_tree(*graph);
  const std::size_t enumerated = enumerate_spanning_trees(*graph).size();
  const bool agree = matrix_tree == enumerated;
  if (io.json) {
    emit(io, {{"schema", 1},
              {"command", "count-trees"},
              {"graph", graph_name},
              {"matrix_tree", matrix_tree},
              {"enumerated", enumerated},
              {"agree", agree}});
  } else {
    io.out << "matrix_tree=" << matrix_tree << " enumerated=" << enumerated << '\n';
  }
  if (!agree) {
    io.err << "error: Matrix-Tree count and enumeration disagree\n";
    return kFailure;
  }
  return kOk;
}

int burnside_table(const Output& io) {
  const SymmetryGroup group = generate_full_group();
  const auto trees = enumerate_spanning_trees(cube_graph());
  BurnsideResult result;
  long long shortcut = 0;
  try {
    result = burnside(group, trees);
    shortcut = burnside_by_class_representatives(group, trees);
  } catch (const BurnsideError& e) {
    io.err << "error: " << e.what() << '\n';
    return kFailure;
  }

  if (io.json) {
    json classes = json::array();
    for (const ClassFixedCount& c : result.by_class) {
      classes.push_back({{"class", to_string(c.klass)},
                         {"elements", c.elements},
                         {"fixed_per_element", c.fixed_per_element},
                         {"fixed_total", c.fixed_total}});
    }
    emit(io, {{"schema", 1},
              {"command", "burnside"},
              {"classes", classes},
              {"burnside_sum", result.fixed_sum},
              {"group_order", result.group_order},
              {"orbit_count", result.orbit_count},
              {"class_representative_count", shortcut}});
  } else {
    io.out << std::left << std::setw(12) << "class" << std::right << std::setw(10) << "elements" << std::setw(8)
           << "fixed" << std::setw(8) << "total" << '\n';
    for (const ClassFixedCount& c : result.by_class) {
      io.out << std::left << std::setw(12) << to_string(c.klass) << std::right << std::setw(10) << c.elements
             << std::setw(8) << c.fixed_per_element << std::setw(8) << c.fixed_total << '\n';
    }
    io.out << "burnside_sum=" << result.fixed_sum << " group_order=" << result.group_order
           << " orbits=" << result.orbit_count << '\n';
  }
  if (shortcut != result.orbit_count) {
    io.err << "error: class-representative count " << shortcut << " differs from the full sum\n";
    return kFailure;
  }
  return kOk;
}

int orbits(const Output& io) {
  const Graph& cube = cube_graph();
  const SymmetryGroup group = generate_full_group();
  const auto trees = enumerate_spanning_trees(cube);
  const OrbitReport report = compute_orbits(group, trees);

  json list = json::array();
  for (std::size_t i = 0; i < report.orbits.size(); ++i) {
    const Orbit& orbit = report.orbits[i];
    const CanonicalShape shape = canonical_form(layout(orbit.representative));
    const std::size_t stabilizer = stabilizer_order(group, orbit.representative);
    if (io.json) {
      list.push_back({{"index", i + 1},
                      {"size", orbit.trees.size()},
                      {"stabilizer_order", stabilizer},
                      {"representative", format_edge_set(cube, orbit.representative)},
                      {"shape", json_cells(shape.cells)}});
    } else {
      io.out << "orbit " << two_digits(i + 1) << "  size=" << orbit.trees.size() << " stabilizer=" << stabilizer
             << "  representative=" << format_edge_set(cube, orbit.representative) << '\n'
             << render_ascii(shape) << '\n';
    }
  }
  if (io.json) {
    emit(io, {{"schema", 1},
              {"command", "orbits"},
              {"orbit_count", report.orbits.size()},
              {"burnside_count", report.burnside.orbit_count},
              {"orbits", list}});
  } else {
    io.out << "orbits=" << report.orbits.size() << " burnside=" << report.burnside.orbit_count << '\n';
  }
  return report.orbits.size() == static_cast<std::size_t>(report.burnside.orbit_count) ? kOk : kFailure;
}

int unfold(const std::string& tree_text, const std::optional<std::filesystem::path>& svg, const Output& io) {
  const Graph& cube = cube_graph();
  EdgeSet cut;
  try {
    cut = parse_edge_set(cube, tree_text);
  } catch (const ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (const auto violation = spanning_tree_violation(cube, cut)) {
    io.err << "error: not a spanning tree: ";
    if (*violation == TreeViolation::WrongCardinality)
      io.err << "expected " << cube.vertex_count() - 1 << " edges, got " << cut.size() << '\n';
    else
      io.err << describe(*violation) << '\n';
    return kFailure;
  }

  const Net net = layout(cut);
  const CanonicalShape shape = canonical_form(net);
  const SymmetryGroup group = generate_full_group();
  const auto trees = enumerate_spanning_trees(cube);
  const OrbitReport report = compute_orbits(group, trees);
  const std::size_t orbit = report.orbit_of(cut);
  const auto cells = net.cells();

  if (svg && !write_file(*svg, render_svg(net), io)) return kIoError;

  if (io.json) {
    json placements = json::array();
    for (Face f : kAllFaces) {
      const Placement& p = net.at(f);
      json corners = json::object();
      for (std::size_t i = 0; i < 4; ++i)
        corners[std::to_string(face_vertices(f)[i])] = {p.corners[i].x, p.corners[i].y};
      placements.push_back({{"face", to_string(f)}, {"cell", {p.cell.x, p.cell.y}}, {"corners", corners}});
    }
    json hinges = json::array();
    for (const HingeLink& h : net.hinges) hinges.push_back({{"edge", format_edge(h.edge)}, {"faces", {to_string(h.a), to_string(h.b)}}});
    emit(io, {{"schema", 1},
              {"command", "unfold"},
              {"cut", format_edge_set(cube, cut)},
              {"placements", placements},
              {"hinges", hinges},
              {"shape", json_cells(shape.cells)},
              {"orbit", {{"index", orbit + 1},
                         {"size", report.orbits[orbit].trees.size()},
                         {"representative", format_edge_set(cube, report.orbits[orbit].representative)}}}});
    return kOk;
  }

  io.out << "cut: " << format_edge_set(cube, cut) << '\n';
  io.out << "placements:\n";
  for (Face f : kAllFaces) {
    const Placement& p = net.at(f);
    io.out << "  " << std::left << std::setw(7) << to_string(f) << std::right << "(" << p.cell.x << "," << p.cell.y << ")";
    for (std::size_t i = 0; i < 4; ++i)
      io.out << "  " << face_vertices(f)[i] << "->(" << p.corners[i].x << "," << p.corners[i].y << ")";
    io.out << '\n';
  }
  io.out << "hinges:";
  for (const HingeLink& h : net.hinges) io.out << ' ' << format_edge(h.edge) << " [" << to_string(h.a) << "/" << to_string(h.b) << "]";
  io.out << '\n';
  io.out << "shape:\n" << format_shape(shape);
  io.out << "orbit: " << orbit + 1 << " of " << report.orbits.size() << " (size " << report.orbits[orbit].trees.size()
         << ", representative " << format_edge_set(cube, report.orbits[orbit].representative) << ")\n";
  io.out << render_ascii(cells);
  return kOk;
}

int shapes(const ShapesOptions& options, const Output& io) {
  const Graph& cube = cube_graph();
  const auto trees = enumerate_spanning_trees(cube);
  const ShapeClasses classes = classify_shapes(trees);
  const std::size_t one_sided = classify_shapes(trees, Congruence::RotationsOnly).size();

  json index = json::array();
  std::size_t n = 0;
  for (const auto& [shape, members] : classes) {
    ++n;
    index.push_back({{"index", n},
                     {"file", "shape_" + two_digits(n) + ".svg"},
                     {"cells", json_cells(shape.cells)},
                     {"tree_count", members.size()},
                     {"representative", format_edge_set(cube, members.front())}});
  }
  json document{{"schema", 1}, {"command", "shapes"}, {"shape_count", classes.size()}, {"shapes", index}};
  if (options.one_sided) document["one_sided_shape_count"] = one_sided;

  if (options.render == Render::Svg) {
    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec) {
      io.err << "error: cannot create " << options.out_dir.string() << ": " << ec.message() << '\n';
      return kIoError;
    }
    n = 0;
    for (const auto& [shape, members] : classes) {
      if (!write_file(options.out_dir / ("shape_" + two_digits(++n) + ".svg"), render_svg(shape), io)) return kIoError;
    }
    if (!write_file(options.out_dir / "index.json", document.dump(2) + "\n", io)) return kIoError;
  }

  if (io.json) {
    emit(io, document);
    return kOk;
  }
  if (options.render == Render::Ascii) {
    n = 0;
    for (const auto& [shape, members] : classes) {
      io.out << "shape " << two_digits(++n) << "  trees=" << members.size()
             << "  representative=" << format_edge_set(cube, members.front()) << '\n'
             << render_ascii(shape) << '\n';
    }
  } else {
    io.out << "wrote " << classes.size() << " SVG files and index.json to " << options.out_dir.string() << '\n';
  }
  io.out << "shapes=" << classes.size() << '\n';
  if (options.one_sided) io.out << "one_sided_shapes=" << one_sided << '\n';
  return kOk;
}

int verify(const VerifyOptions& options, const Output& io) {
  const VerificationReport report = run_verification(options);
  if (io.json) {
    emit(io, to_json(report));
  } else {
    for (const Check& c : report.checks) {
      io.out << (c.pass ? paint(io, "PASS", "32") : paint(io, "FAIL", "31")) << ' ' << c.id << "  " << c.description
             << '\n'
             << "     expected: " << c.expected << '\n'
             << "     actual:   " << c.actual << '\n';
    }
    io.out << "summary: " << report.passed() << "/" << report.total() << " passed\n";
  }
  return report.all_passed() ? kOk : kFailure;
}

}  // namespace unfoldium::cli
