#pragma once

#include "tabula/diagnostics.hpp"
#include "tabula/prelude.hpp"
#include "tabula/rational.hpp"
#include "tabula/scanner.hpp"
#include "tabula/tempus.hpp"
#include "tabula/vox.hpp"

#include <span>
#include <string>
#include <vector>

namespace tabula {

enum class Trabes
{
	None,
	Initialis,   ///< a beam starts at this stem
	Terminalis,  ///< a beam ends at this stem
};

std::string_view to_string(Trabes trabes);

/// One grip of a column.
struct Sonum
{
	std::string source;
	int stringIndex = 0;
	int fret = 0;
	bool prolongate = false;
	int ypos = 0;  ///< 1 + index of the VOX line within its system
	std::vector<Annotation> annotations;
	SourceLocation location;
};

/// One vertical column: a duration sign and the grips aligned under it.
struct Columna
{
	int numerus = 0;
	DurationToken duration;
	int durationYpos = 0;
	Trabes trabes = Trabes::None;
	Rational summaPraecedentium;
	std::vector<Sonum> sona;
	int system = 0;  ///< index of the source system within the PARS
};

struct ParsModel
{
	std::string name;
	std::vector<Columna> columns;
	Parameters parameters;
	std::string tableName;
	int systemCount = 0;
};

struct ScoreModel
{
	std::vector<ParsModel> partes;

	ParsModel const* find(std::string_view name) const;
};

struct CompileResult
{
	ScoreModel score;
	std::vector<Warning> warnings;
};

/// Pairs every grip with the duration sign starting in the same column.
/// Numbering starts at `firstNumerus`; summa and duration ypos are left for
/// compute_summa / assign_duration_ypos.
std::vector<Columna> build_system(std::span<DurationToken const> tempus, std::span<VoxLine const> voices,
                                  SymbolMap const& grips, int firstNumerus = 0, int system = 0);

/// Running sum of the preceding durations, starting at 0.
std::vector<Columna> compute_summa(std::vector<Columna> columns);

/// Row of the duration sign: 0, or with duratioCadens directly above the
/// topmost grip of the column.
std::vector<Columna> assign_duration_ypos(std::vector<Columna> columns, Parameters const& params);

/// Throws CompileError (model) for `_X_`, which the single-valued DTD
/// attribute cannot express.
Trabes assign_trabes(Columna const& column);

CompileResult build_score(std::span<SourceLine const> lines);

/// scan + build_score.
CompileResult compile(std::string_view source);

} // namespace tabula
