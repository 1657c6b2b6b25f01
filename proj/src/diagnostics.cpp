#include "tabula/diagnostics.hpp"

#include <fmt/format.h>

namespace tabula {

std::string_view to_string(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::Scan:      return "scan error";
	case ErrorKind::Parse:     return "parse error";
	case ErrorKind::Model:     return "model error";
	case ErrorKind::Alignment: return "alignment error";
	case ErrorKind::Emit:      return "emit error";
	}
	return "error";
}

CompileError::CompileError(ErrorKind kind, std::string message,
                           std::optional<SourceLocation> location, std::string excerpt)
	: std::runtime_error(message)
	, kind_(kind)
	, message_(std::move(message))
	, location_(location)
	, excerpt_(std::move(excerpt))
{
}

namespace {

std::string prefix(std::string_view file, std::optional<SourceLocation> const& loc)
{
	if (!loc)
		return fmt::format("{}", file);
	return fmt::format("{}:{}:{}", file, loc->line, loc->column);
}

} // namespace

std::string format_diagnostic(std::string_view file, CompileError const& error)
{
	auto out = fmt::format("{}: error: {}: {}\n", prefix(file, error.location()),
	                       to_string(error.kind()), error.message());
	if (error.location() && !error.excerpt().empty()) {
		auto const gutter = fmt::format("{:>5}", error.location()->line);
		out += fmt::format("{} | {}\n", gutter, error.excerpt());
		out += fmt::format("{} | {}^\n", std::string(gutter.size(), ' '),
		                   std::string(static_cast<std::size_t>(error.location()->column), ' '));
	}
	return out;
}

std::string format_warning(std::string_view file, Warning const& warning)
{
	return fmt::format("{}: warning: {}\n", prefix(file, warning.location), warning.message);
}

} // namespace tabula
