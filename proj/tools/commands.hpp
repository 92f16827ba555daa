#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "unfoldium/verify.hpp"

namespace unfoldium::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFailure = 2, kIoError = 3 };

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  bool color = false;
};

enum class Render { Ascii, Svg };

struct ShapesOptions {
  Render render = Render::Ascii;
  std::filesystem::path out_dir = "shapes";
  bool one_sided = false;
};

/// `graph` is one of cube, k4, path2.
int count_trees(const std::string& graph, const Output& io);
int burnside_table(const Output& io);
int orbits(const Output& io);
int unfold(const std::string& tree, const std::optional<std::filesystem::path>& svg, const Output& io);
int shapes(const ShapesOptions& options, const Output& io);
int verify(const VerifyOptions& options, const Output& io);

}  // namespace unfoldium::cli
