// unfoldium: edge unfoldings of the cube, counted and classified.

#include <cstdlib>
#include <iostream>
#include <unistd.h>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = unfoldium::cli;

int main(int argc, char** argv) {
  CLI::App app{"Spanning trees, symmetry and edge unfoldings of the cube", "unfoldium"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON on stdout");

  std::string graph = "cube";
  auto* count = app.add_subcommand("count-trees", "Matrix-Tree count versus exhaustive enumeration");
  count->add_option("--graph", graph, "Bundled graph")->check(CLI::IsMember({"cube", "k4", "path2"}));
  count->add_flag("--json", json);

  auto* burnside = app.add_subcommand("burnside", "Per-class fixed-tree table and Burnside orbit count");
  burnside->add_flag("--json", json);

  auto* orbits = app.add_subcommand("orbits", "Orbit partition of the spanning trees");
  orbits->add_flag("--json", json);

  std::string tree;
  std::string svg_path;
  auto* unfold = app.add_subcommand("unfold", "Lay out the net of one cut tree");
  unfold->add_option("tree", tree, "Cut tree, e.g. 1-5,2-6,3-7,4-8,5-6,6-7,7-8")->required();
  unfold->add_option("--svg", svg_path, "Also write the net as SVG");
  unfold->add_flag("--json", json);

  cli::ShapesOptions shape_options;
  std::string render = "ascii";
  std::string out_dir = "shapes";
  auto* shapes = app.add_subcommand("shapes", "The incongruent unfoldings");
  shapes->add_option("--render", render, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  shapes->add_option("--out-dir", out_dir, "Directory for SVG files and index.json");
  shapes->add_flag("--one-sided", shape_options.one_sided, "Also report the count without mirror identification");
  shapes->add_flag("--json", json);

  unfoldium::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Run every replication check");
  verify->add_flag("--inject-bad-generator", verify_options.inject_bad_generator,
                   "Corrupt one group generator (negative-path test)");
  verify->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return cli::kUsage;
  }

  const cli::Output io{std::cout, std::cerr, json, !json && std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO)};

  try {
    if (*count) return cli::count_trees(graph, io);
    if (*burnside) return cli::burnside_table(io);
    if (*orbits) return cli::orbits(io);
    if (*unfold) {
      std::optional<std::filesystem::path> svg;
      if (!svg_path.empty()) svg = svg_path;
      return cli::unfold(tree, svg, io);
    }
    if (*shapes) {
      shape_options.render = render == "svg" ? cli::Render::Svg : cli::Render::Ascii;
      shape_options.out_dir = out_dir;
      return cli::shapes(shape_options, io);
    }
    if (*verify) return cli::verify(verify_options, io);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kFailure;
  }
  return cli::kUsage;
}
