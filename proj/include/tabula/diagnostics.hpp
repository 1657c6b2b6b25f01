#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tabula {

/// 1-based line, 0-based column counted in Unicode scalars.
struct SourceLocation
{
	int line = 0;
	int column = 0;

	friend bool operator==(SourceLocation const&, SourceLocation const&) = default;
};

enum class ErrorKind
{
	Scan,
	Parse,
	Model,
	Alignment,
	Emit,
};

std::string_view to_string(ErrorKind kind);

/// Any failure raised while compiling a source file.
///
/// `excerpt` holds the offending source line (comments stripped) so the
/// driver can print a caret under `location->column`.
class CompileError : public std::runtime_error
{
public:
	CompileError(ErrorKind kind, std::string message,
	             std::optional<SourceLocation> location = std::nullopt,
	             std::string excerpt = {});

	ErrorKind kind() const noexcept { return kind_; }
	std::string const& message() const noexcept { return message_; }
	std::optional<SourceLocation> const& location() const noexcept { return location_; }
	std::string const& excerpt() const noexcept { return excerpt_; }

private:
	ErrorKind kind_;
	std::string message_;
	std::optional<SourceLocation> location_;
	std::string excerpt_;
};

struct Warning
{
	std::string message;
	std::optional<SourceLocation> location;
};

/// Renders `file:line:col: error: kind: message` followed by a caret excerpt.
std::string format_diagnostic(std::string_view file, CompileError const& error);
std::string format_warning(std::string_view file, Warning const& warning);

} // namespace tabula
