#include "tabula/tempus.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace tabula {

std::string_view to_string(DurationClass klass)
{
	switch (klass) {
	case DurationClass::I:     return "I";
	case DurationClass::T:     return "T";
	case DurationClass::F:     return "F";
	case DurationClass::E:     return "E";
	case DurationClass::Dots:  return "dots";
	case DurationClass::Carry: return "carry";
	}
	return "?";
}

int flag_count(DurationClass klass)
{
	switch (klass) {
	case DurationClass::T: return 1;
	case DurationClass::F: return 2;
	case DurationClass::E: return 3;
	default:               return 0;
	}
}

namespace {

Rational stem_value(DurationClass klass, int dots)
{
	auto value = Rational::make(1, 4LL << flag_count(klass));
	if (dots == 1)
		value *= Rational::make(3, 2);
	return value;
}

Rational dots_value(int dots)
{
	switch (dots) {
	case 1:  return Rational::make(1, 2);
	case 2:  return Rational::make(3, 4);
	default: return Rational::make(1, 1);
	}
}

} // namespace

DurationToken parse_duration_token(Token const& token, Parameters const& params,
                                   DurationToken const* previous, std::string_view excerpt)
{
	std::string_view text = token.text;
	DurationToken out;
	out.sourceText = token.text;
	out.startColumn = token.startColumn;
	out.lineNumber = token.line;

	auto const fail = [&](std::string message) -> DurationToken {
		throw CompileError(ErrorKind::Parse, std::move(message),
		                   SourceLocation{token.line, token.startColumn}, std::string(excerpt));
	};

	if (text == "-") {
		if (!params.duratioManet)
			return fail("carry '-' requires 'duratioManet = est'");
		if (previous == nullptr)
			return fail("carry '-' has no preceding duration to repeat");
		out.klass = DurationClass::Carry;
		out.value = previous->value;
		return out;
	}
	if (text.find('-') != std::string_view::npos)
		return fail(fmt::format("'{}': the carry '-' stands alone and takes no beam markers", text));

	if (!text.empty() && text.size() <= 3 && std::all_of(text.begin(), text.end(), [](char c) { return c == '.'; })) {
		out.klass = DurationClass::Dots;
		out.dotCount = static_cast<int>(text.size());
		out.value = dots_value(out.dotCount);
		return out;
	}

	auto const malformed = [&] {
		return fail(fmt::format("malformed duration symbol '{}' (expected I, T, F or E with optional"
		                        " '_' prefix, '.' and '_' suffix; '.', '..', '...'; or '-')",
		                        text));
	};

	std::size_t i = 0;
	if (i < text.size() && text[i] == '_') {
		out.beamEnd = true;
		++i;
	}
	if (i >= text.size())
		return malformed();
	switch (text[i]) {
	case 'I': out.klass = DurationClass::I; break;
	case 'T': out.klass = DurationClass::T; break;
	case 'F': out.klass = DurationClass::F; break;
	case 'E': out.klass = DurationClass::E; break;
	default:  return malformed();
	}
	++i;
	while (i < text.size() && text[i] == '.') {
		++out.dotCount;
		++i;
	}
	if (out.dotCount > 1)
		return fail(fmt::format("'{}': at most one dot is allowed after a stem", text));
	if (i < text.size() && text[i] == '_') {
		out.beamBegin = true;
		++i;
	}
	if (i != text.size())
		return malformed();
	out.value = stem_value(out.klass, out.dotCount);
	return out;
}

std::vector<DurationToken> parse_tempus_line(SourceLine const& line, Parameters const& params,
                                             DurationToken const* previous)
{
	auto const tokens = tokenize_columns(line);
	if (tokens.empty() || tokens.front().text != "T")
		throw CompileError(ErrorKind::Parse, "a time line must start with 'T'",
		                   SourceLocation{line.lineNumber, 0}, line.text);
	if (tokens.size() == 1)
		throw CompileError(ErrorKind::Parse, "time line has no duration symbols",
		                   SourceLocation{line.lineNumber, tokens.front().startColumn}, line.text);

	std::vector<DurationToken> out;
	out.reserve(tokens.size() - 1);
	for (std::size_t i = 1; i < tokens.size(); ++i) {
		auto const* prev = out.empty() ? previous : &out.back();
		out.push_back(parse_duration_token(tokens[i], params, prev, line.text));
	}
	return out;
}

void validate_beams(std::span<DurationToken const> tokens, std::string_view excerpt)
{
	DurationToken const* open = nullptr;
	auto const fail = [&](DurationToken const& at, std::string message) {
		throw CompileError(ErrorKind::Model, std::move(message),
		                   SourceLocation{at.lineNumber, at.startColumn}, std::string(excerpt));
	};
	for (auto const& token : tokens) {
		if (token.beamEnd) {
			if (open == nullptr)
				fail(token, fmt::format("beam end without begin at '{}'", token.sourceText));
			open = nullptr;
		}
		if (token.beamBegin) {
			if (open != nullptr)
				fail(token, fmt::format("beam begins at '{}' while the beam opened at column {} is still open",
				                        token.sourceText, open->startColumn));
			open = &token;
		}
	}
	if (open != nullptr)
		fail(*open, fmt::format("unclosed beam starting at '{}'", open->sourceText));
}

} // namespace tabula
