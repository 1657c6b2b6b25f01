#include "tabula/scanner.hpp"

#include "tabula/diagnostics.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace tabula {

std::string_view to_string(LineKind kind)
{
	switch (kind) {
	case LineKind::Blank:             return "blank";
	case LineKind::Assignment:        return "assignment";
	case LineKind::TableContinuation: return "table continuation";
	case LineKind::ParsHeader:        return "PARS header";
	case LineKind::TempusLine:        return "T line";
	case LineKind::VoxLine:           return "VOX line";
	case LineKind::ParamTrackLine:    return "parameter track";
	}
	return "?";
}

namespace {

bool is_blank_char(char c)
{
	return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r';
}

bool is_continuation_byte(char c)
{
	return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

/// Length of the UTF-8 sequence starting with `lead`, 0 if `lead` is invalid.
int sequence_length(unsigned char lead)
{
	if (lead < 0x80) return 1;
	if ((lead & 0xE0) == 0xC0) return lead >= 0xC2 ? 2 : 0;
	if ((lead & 0xF0) == 0xE0) return 3;
	if ((lead & 0xF8) == 0xF0) return lead <= 0xF4 ? 4 : 0;
	return 0;
}

void validate_line(std::string_view raw, int lineNumber)
{
	int column = 0;
	for (std::size_t i = 0; i < raw.size();) {
		auto const c = static_cast<unsigned char>(raw[i]);
		if (c == '\t')
			throw CompileError(ErrorKind::Scan,
			                   "TAB character; column alignment requires spaces",
			                   SourceLocation{lineNumber, column}, std::string(raw));
		auto const len = sequence_length(c);
		bool ok = len > 0 && i + static_cast<std::size_t>(len) <= raw.size();
		for (int k = 1; ok && k < len; ++k)
			ok = is_continuation_byte(raw[i + static_cast<std::size_t>(k)]);
		if (!ok)
			throw CompileError(ErrorKind::Scan, "malformed UTF-8",
			                   SourceLocation{lineNumber, column});
		i += static_cast<std::size_t>(len);
		++column;
	}
}

std::vector<std::string_view> words(std::string_view line)
{
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < line.size()) {
		while (i < line.size() && is_blank_char(line[i]))
			++i;
		auto const start = i;
		while (i < line.size() && !is_blank_char(line[i]))
			++i;
		if (i > start)
			out.push_back(line.substr(start, i - start));
	}
	return out;
}

bool has_assignment_shape(std::string_view line)
{
	auto const eq = line.find('=');
	if (eq == std::string_view::npos)
		return false;
	auto const head = words(line.substr(0, eq));
	return head.size() == 1 && is_identifier(head.front());
}

int paren_balance(std::string_view line)
{
	return static_cast<int>(std::count(line.begin(), line.end(), '('))
	     - static_cast<int>(std::count(line.begin(), line.end(), ')'));
}

} // namespace

int Token::endColumn() const
{
	return startColumn + scalar_count(text);
}

int scalar_count(std::string_view text)
{
	return static_cast<int>(std::count_if(text.begin(), text.end(),
	                                      [](char c) { return !is_continuation_byte(c); }));
}

bool is_identifier(std::string_view text)
{
	if (text.empty())
		return false;
	auto const ident_char = [](char c) {
		auto const u = static_cast<unsigned char>(c);
		return u >= 0x80 || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')
		    || (c >= '0' && c <= '9') || c == '_';
	};
	if (text.front() >= '0' && text.front() <= '9')
		return false;
	return std::all_of(text.begin(), text.end(), ident_char);
}

std::string strip_comments(std::string_view rawLine)
{
	for (std::size_t i = 0; i < rawLine.size(); ++i) {
		if (rawLine[i] == '"') {
			auto const close = rawLine.find('"', i + 1);
			if (close != std::string_view::npos) {
				i = close;
				continue;
			}
		}
		if (rawLine.compare(i, 2, "//") == 0)
			return std::string(rawLine.substr(0, i));
	}
	return std::string(rawLine);
}

LineKind classify_line(std::string_view line, ScannerState const& state)
{
	auto const w = words(line);
	if (w.empty())
		return LineKind::Blank;
	if (state.parenDepth > 0)
		return LineKind::TableContinuation;
	if (state.awaitingEquals && w.front().front() == '=')
		return LineKind::TableContinuation;

	auto const first = w.front();
	if (first == "T")
		return LineKind::TempusLine;
	if (first == "VOX")
		return LineKind::VoxLine;
	if (first == "PARS")
		return LineKind::ParsHeader;
	if (has_assignment_shape(line))
		return LineKind::Assignment;
	if (w.size() == 1 && is_identifier(first) && state.nextStartsWithEquals)
		return LineKind::Assignment;

	bool const indented = is_blank_char(line.front());
	bool const afterVoice = state.previous == LineKind::VoxLine
	                     || state.previous == LineKind::ParamTrackLine;
	if (indented && afterVoice && is_identifier(first))
		return LineKind::ParamTrackLine;

	auto const column = scalar_count(line.substr(0, static_cast<std::size_t>(first.data() - line.data())));
	throw CompileError(ErrorKind::Scan,
	                   fmt::format("cannot classify line starting with '{}'"
	                               " (expected T, VOX, PARS, an assignment or a parameter track)",
	                               first),
	                   SourceLocation{state.lineNumber, column}, std::string(line));
}

std::vector<Token> tokenize_columns(SourceLine const& line)
{
	return tokenize_columns(line.text, line.lineNumber, line.kind == LineKind::ParamTrackLine);
}

std::vector<Token> tokenize_columns(std::string_view text, int lineNumber, bool quoted)
{
	std::vector<Token> out;
	int column = 0;
	std::size_t i = 0;
	auto const step = [&] {
		++i;
		while (i < text.size() && is_continuation_byte(text[i]))
			++i;
		++column;
	};
	while (i < text.size()) {
		if (is_blank_char(text[i])) {
			step();
			continue;
		}
		auto const start = i;
		auto const startColumn = column;
		if (quoted && text[i] == '"') {
			auto const close = text.find('"', i + 1);
			if (close == std::string_view::npos)
				throw CompileError(ErrorKind::Scan, "unterminated quoted annotation",
				                   SourceLocation{lineNumber, startColumn}, std::string(text));
			while (i <= close)
				step();
		}
		while (i < text.size() && !is_blank_char(text[i]))
			step();
		out.push_back(Token{std::string(text.substr(start, i - start)), startColumn, lineNumber});
	}
	return out;
}

std::vector<SourceLine> scan(std::string_view source)
{
	std::vector<std::string> texts;
	std::size_t pos = 0;
	while (pos < source.size()) {
		auto nl = source.find('\n', pos);
		if (nl == std::string_view::npos)
			nl = source.size();
		auto raw = source.substr(pos, nl - pos);
		if (!raw.empty() && raw.back() == '\r')
			raw.remove_suffix(1);
		validate_line(raw, static_cast<int>(texts.size()) + 1);
		texts.push_back(strip_comments(raw));
		pos = nl + 1;
	}

	std::vector<SourceLine> lines;
	lines.reserve(texts.size());
	ScannerState state;
	for (std::size_t i = 0; i < texts.size(); ++i) {
		state.lineNumber = static_cast<int>(i) + 1;
		state.nextStartsWithEquals = false;
		for (std::size_t j = i + 1; j < texts.size(); ++j) {
			auto const w = words(texts[j]);
			if (w.empty())
				continue;
			state.nextStartsWithEquals = w.front().front() == '=';
			break;
		}

		auto const kind = classify_line(texts[i], state);
		lines.push_back(SourceLine{state.lineNumber, texts[i], kind});

		switch (kind) {
		case LineKind::Blank:
			state.previous = LineKind::Blank;
			break;
		case LineKind::Assignment:
		case LineKind::TableContinuation: {
			state.parenDepth = std::max(0, state.parenDepth + paren_balance(texts[i]));
			auto const w = words(texts[i]);
			state.awaitingEquals = kind == LineKind::Assignment && w.size() == 1
			                    && texts[i].find('=') == std::string::npos;
			state.previous = kind;
			break;
		}
		default:
			state.awaitingEquals = false;
			state.previous = kind;
			break;
		}
	}
	return lines;
}

} // namespace tabula
