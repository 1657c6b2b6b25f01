#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tabula {

enum class LineKind
{
	Blank,
	Assignment,
	TableContinuation,
	ParsHeader,
	TempusLine,
	VoxLine,
	ParamTrackLine,
};

std::string_view to_string(LineKind kind);

struct SourceLine
{
	int lineNumber = 0;  ///< 1-based
	std::string text;    ///< comments stripped, CR removed
	LineKind kind = LineKind::Blank;
};

/// A maximal run of non-blank characters and the column where it starts.
struct Token
{
	std::string text;
	int startColumn = 0;  ///< 0-based, counted in Unicode scalars
	int line = 0;

	int endColumn() const;  ///< one past the last scalar
};

/// Context carried from one line to the next while classifying.
struct ScannerState
{
	int lineNumber = 0;
	int parenDepth = 0;
	LineKind previous = LineKind::Blank;   ///< kind of the line directly above
	bool awaitingEquals = false;           ///< previous nonblank line was a bare assignment name
	bool nextStartsWithEquals = false;     ///< lookahead: next nonblank line begins with '='
};

/// Removes `//` and everything after it. A `//` inside a closed
/// double-quoted region does not start a comment.
std::string strip_comments(std::string_view rawLine);

/// Classifies a comment-stripped line. Throws CompileError (scan) for a
/// nonblank line that fits no kind.
LineKind classify_line(std::string_view line, ScannerState const& state);

/// Splits a line into tokens. On param-track lines a double-quoted region
/// (plus anything glued to its closing quote) is a single token.
std::vector<Token> tokenize_columns(SourceLine const& line);
std::vector<Token> tokenize_columns(std::string_view text, int lineNumber, bool quoted = false);

/// Number of Unicode scalars in `text`.
int scalar_count(std::string_view text);

/// Reads a whole source text into classified lines. Rejects TAB characters
/// and malformed UTF-8.
std::vector<SourceLine> scan(std::string_view source);

bool is_identifier(std::string_view text);

} // namespace tabula
