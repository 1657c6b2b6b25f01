#pragma once

#include "tabula/svg_renderer.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace tabula {

inline constexpr std::string_view kVersion = "0.1.0";

struct RunOptions
{
	std::filesystem::path inputPath;
	std::optional<std::filesystem::path> xmlOutDir;
	std::optional<std::filesystem::path> svgOutDir;
	bool emitDtd = false;
	std::optional<std::string> parsFilter;
	bool checkOnly = false;
	RenderConfig render;

	/// At least one of xml, svg, dtd or check is requested.
	bool hasAction() const { return xmlOutDir || svgOutDir || emitDtd || checkOnly; }
};

/// Exit codes: 0 success, 1 compile or output error, 2 usage error or
/// unreadable input.
int run(RunOptions const& options, std::ostream& out, std::ostream& err);

/// Parses command-line flags and calls run().
int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

} // namespace tabula
