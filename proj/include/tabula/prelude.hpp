#pragma once

#include "tabula/diagnostics.hpp"
#include "tabula/scanner.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tabula {

/// Largest string, fret and ypos index the DTD enumerates.
inline constexpr int kMaxDtdIndex = 12;

/// Name of the parameter that selects the grip table of a PARS.
inline constexpr std::string_view kGripTableParameter = "bünde";

struct Parameters
{
	bool duratioManet = false;   ///< `-` may repeat the previous duration
	bool duratioCadens = false;  ///< duration signs drop to the lowest free row
	std::map<std::string, std::string> extra;
};

struct ScalarAssignment
{
	std::string name;
	std::string value;
	SourceLocation location;   ///< of the name
	std::string excerpt;
};

/// User-defined table: row i lists the symbols for string i, the symbol in
/// column j stops that string at fret j.
struct GripTable
{
	std::string name;
	std::vector<std::vector<Token>> rows;
	SourceLocation location;

	std::size_t symbolCount() const;
};

using Assignment = std::variant<ScalarAssignment, GripTable>;

/// Parses an assignment line together with its continuation lines (blank
/// lines among them are ignored). Accepts `name = word` and
/// `name = ( (a b ...) (c d ...) ... )`, where `name` may stand alone on the
/// first line with `=` starting the next one.
Assignment parse_assignment(SourceLine const& line, std::span<SourceLine const> followers);

/// Number of lines after `start` that continue the assignment at `start`.
std::size_t continuation_extent(std::span<SourceLine const> lines, std::size_t start);

/// Parameters and tables visible at some point of a file. PARS scopes start
/// as a copy of the file scope.
struct Scope
{
	Parameters parameters;
	std::map<std::string, GripTable> tables;
	std::optional<ScalarAssignment> gripSelection;
};

/// Applies an assignment; last one wins. Unknown scalar names land in
/// `Parameters::extra` with a warning.
void apply_assignment(Scope& scope, Assignment const& assignment, std::vector<Warning>& warnings);

struct Grip
{
	int stringIndex = 0;
	int fret = 0;

	friend bool operator==(Grip const&, Grip const&) = default;
};

struct SymbolMap
{
	std::string tableName;
	std::map<std::string, Grip, std::less<>> entries;
};

SymbolMap build_symbol_map(GripTable const& table);

/// Throws CompileError (model) naming the symbol, its position and the table.
Grip lookup_grip(SymbolMap const& map, std::string_view symbol, SourceLocation where,
                 std::string_view excerpt = {});
std::optional<Grip> find_grip(SymbolMap const& map, std::string_view symbol);

} // namespace tabula
