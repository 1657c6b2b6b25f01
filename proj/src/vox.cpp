#include "tabula/vox.hpp"

#include "tabula/diagnostics.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace tabula {

std::string GripToken::sourceText() const
{
	return prolongate ? sourceSymbol + kProlongateSuffix : sourceSymbol;
}

VoxLine parse_vox_line(SourceLine const& line)
{
	auto const tokens = tokenize_columns(line);
	if (tokens.empty() || tokens.front().text != "VOX")
		throw CompileError(ErrorKind::Parse, "a voice line must start with 'VOX'",
		                   SourceLocation{line.lineNumber, 0}, line.text);
	if (tokens.size() < 2)
		throw CompileError(ErrorKind::Parse, "missing voice name after 'VOX'",
		                   SourceLocation{line.lineNumber, tokens.front().endColumn()}, line.text);

	VoxLine out{tokens[1].text, {}, line.lineNumber, line.text};
	for (std::size_t i = 2; i < tokens.size(); ++i) {
		auto const& tok = tokens[i];
		GripToken grip{tok.text, false, tok.startColumn, tok.line, out.voiceName, {}};
		if (grip.sourceSymbol.back() == kProlongateSuffix) {
			grip.sourceSymbol.pop_back();
			grip.prolongate = true;
		}
		if (grip.sourceSymbol.empty())
			throw CompileError(ErrorKind::Parse, "'+' must follow a grip symbol",
			                   SourceLocation{tok.line, tok.startColumn}, line.text);
		if (grip.sourceSymbol.find(kProlongateSuffix) != std::string::npos)
			throw CompileError(ErrorKind::Parse,
			                   fmt::format("'{}': '+' may only appear once, at the end of a grip", tok.text),
			                   SourceLocation{tok.line, tok.startColumn}, line.text);
		out.grips.push_back(std::move(grip));
	}
	return out;
}

std::vector<Annotation> parse_param_track(SourceLine const& line, VoxLine const& voice)
{
	auto tokens = tokenize_columns(line);
	if (tokens.empty())
		return {};
	auto const track = tokens.front().text;
	if (tokens.size() > 1 && tokens.back().text == "\\\\")
		tokens.pop_back();

	std::vector<Annotation> out;
	for (std::size_t i = 1; i < tokens.size(); ++i) {
		auto const& tok = tokens[i];
		SourceLocation const at{tok.line, tok.startColumn};
		if (tok.text.front() != '"')
			throw CompileError(ErrorKind::Parse,
			                   fmt::format("value '{}' of track '{}' must be double-quoted", tok.text, track),
			                   at, line.text);
		auto const close = tok.text.find('"', 1);
		auto text = tok.text.substr(1, close - 1) + tok.text.substr(close + 1);

		auto const aligned = std::any_of(voice.grips.begin(), voice.grips.end(),
		                                 [&](GripToken const& g) { return g.startColumn == tok.startColumn; });
		if (!aligned)
			throw CompileError(ErrorKind::Alignment,
			                   fmt::format("'{}' value at column {} is not aligned with any grip of voice {}"
			                               " (line {})",
			                               track, tok.startColumn, voice.voiceName, voice.lineNumber),
			                   at, line.text);
		out.push_back(Annotation{track, std::move(text), tok.startColumn, tok.line});
	}
	return out;
}

void attach_annotations(VoxLine& voice, std::span<Annotation const> annotations)
{
	for (auto const& a : annotations) {
		auto grip = std::find_if(voice.grips.begin(), voice.grips.end(),
		                         [&](GripToken const& g) { return g.startColumn == a.startColumn; });
		if (grip == voice.grips.end())
			throw CompileError(ErrorKind::Alignment,
			                   fmt::format("'{}' value at column {} is not aligned with any grip of voice {}",
			                               a.trackName, a.startColumn, voice.voiceName),
			                   SourceLocation{a.lineNumber, a.startColumn});
		auto const duplicate = std::any_of(grip->annotations.begin(), grip->annotations.end(),
		                                   [&](Annotation const& b) { return b.trackName == a.trackName; });
		if (duplicate)
			throw CompileError(ErrorKind::Model,
			                   fmt::format("grip '{}' already has a '{}' value", grip->sourceText(), a.trackName),
			                   SourceLocation{a.lineNumber, a.startColumn});
		grip->annotations.push_back(a);
	}
}

} // namespace tabula
