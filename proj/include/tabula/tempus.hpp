#pragma once

#include "tabula/prelude.hpp"
#include "tabula/rational.hpp"
#include "tabula/scanner.hpp"

#include <span>
#include <string>
#include <vector>

namespace tabula {

/// Stems with zero to three flags, standalone dots, and the carry `-`.
enum class DurationClass
{
	I,
	T,
	F,
	E,
	Dots,
	Carry,
};

std::string_view to_string(DurationClass klass);

/// Flags drawn on a stem of this class; 0 for dots and carry.
int flag_count(DurationClass klass);

struct DurationToken
{
	std::string sourceText;
	DurationClass klass = DurationClass::I;
	int dotCount = 0;
	bool beamBegin = false;  ///< trailing `_`
	bool beamEnd = false;    ///< leading `_`
	Rational value;
	int startColumn = 0;
	int lineNumber = 0;
};

/// Parses one symbol of a T line:
///   '_'? (I|T|F|E) '.'? '_'?   |   '.' | '..' | '...'   |   '-'
/// Stems read as 1/4, 1/8, 1/16, 1/32 (a dot multiplies by 3/2); standalone
/// dots read as 1/2, 3/4, 1/1; `-` repeats `previous` and needs duratioManet.
DurationToken parse_duration_token(Token const& token, Parameters const& params,
                                   DurationToken const* previous, std::string_view excerpt = {});

/// Parses every symbol after the leading `T`. `previous` is the last
/// duration of the preceding system in the same PARS, if any.
std::vector<DurationToken> parse_tempus_line(SourceLine const& line, Parameters const& params,
                                             DurationToken const* previous = nullptr);

/// Checks that beam markers pair up within one system. Throws CompileError
/// (model) pointing at the offending column.
void validate_beams(std::span<DurationToken const> tokens, std::string_view excerpt = {});

} // namespace tabula
