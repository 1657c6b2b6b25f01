#pragma once

#include "tabula/model.hpp"

#include <string>

namespace tabula {

/// File name the CLI uses for the companion DTD.
inline constexpr std::string_view kDtdFileName = "tabulatura.dtd";

/// Serializes one PARS as a `tabulatura` document: single-quoted
/// attributes, two-space indentation, one element per line. Throws
/// CompileError (emit) if a value falls outside the DTD enumerations.
std::string emit_pars(ParsModel const& model);

/// The document type of emitted files, with `edit` added to `sonum`.
std::string emit_dtd();

/// Escapes a value for a single-quoted XML attribute.
std::string escape_attribute(std::string_view value);

} // namespace tabula
