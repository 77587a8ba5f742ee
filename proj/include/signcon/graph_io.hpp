#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "signcon/core.hpp"

namespace signcon {

/// Reads the text format:
///
///   signed-graph n=<int>
///   <u> <v> <+|->
///
/// Lines starting with '#' and blank lines are skipped. Edge ids follow line
/// order. Throws ParseError.
SignedGraph parse_graph(std::string_view text);

/// Canonical text: header, one line per edge, trailing newline.
std::string emit_graph(const SignedGraph& g);

SignedGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const SignedGraph& g);

/// Named graphs used throughout the tests and docs.
SignedGraph fixture(std::string_view name);
/// Names accepted by fixture(), in a fixed order.
const std::vector<std::string>& fixture_names();

/// File name for a fixture, e.g. "T-.sg".
std::string fixture_file_name(std::string_view name);

}  // namespace signcon
