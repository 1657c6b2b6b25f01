#pragma once

#include "tabula/scanner.hpp"

#include <span>
#include <string>
#include <vector>

namespace tabula {

/// Suffix marking a grip that rings on (laissez vibrer).
inline constexpr char kProlongateSuffix = '+';

/// A value from a parameter track line such as `edit "..."`.
struct Annotation
{
	std::string trackName;
	std::string text;  ///< quoted content plus anything glued after the closing quote
	int startColumn = 0;
	int lineNumber = 0;
};

struct GripToken
{
	std::string sourceSymbol;  ///< without the prolongate suffix
	bool prolongate = false;
	int startColumn = 0;
	int lineNumber = 0;
	std::string voiceName;
	std::vector<Annotation> annotations;

	std::string sourceText() const;
};

struct VoxLine
{
	std::string voiceName;
	std::vector<GripToken> grips;
	int lineNumber = 0;
	std::string excerpt;
};

VoxLine parse_vox_line(SourceLine const& line);

/// Parses `name "text" ... [\\]` under `voice`. Every annotation must start
/// in the same column as one grip of that voice line.
std::vector<Annotation> parse_param_track(SourceLine const& line, VoxLine const& voice);

/// Hangs annotations on the grips they are aligned with. Throws on a second
/// annotation of the same track for one grip.
void attach_annotations(VoxLine& voice, std::span<Annotation const> annotations);

} // namespace tabula
