#include "tabula/model.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace tabula {

std::string_view to_string(Trabes trabes)
{
	switch (trabes) {
	case Trabes::None:       return "";
	case Trabes::Initialis:  return "initialis";
	case Trabes::Terminalis: return "terminalis";
	}
	return "";
}

ParsModel const* ScoreModel::find(std::string_view name) const
{
	auto const it = std::find_if(partes.begin(), partes.end(), [&](ParsModel const& p) { return p.name == name; });
	return it == partes.end() ? nullptr : &*it;
}

Trabes assign_trabes(Columna const& column)
{
	auto const& d = column.duration;
	if (d.beamBegin && d.beamEnd)
		throw CompileError(ErrorKind::Model,
		                   fmt::format("'{}' both ends and begins a beam; the XML model holds only one"
		                               " trabes value per column, split the groups",
		                               d.sourceText),
		                   SourceLocation{d.lineNumber, d.startColumn});
	if (d.beamBegin)
		return Trabes::Initialis;
	if (d.beamEnd)
		return Trabes::Terminalis;
	return Trabes::None;
}

std::vector<Columna> build_system(std::span<DurationToken const> tempus, std::span<VoxLine const> voices,
                                  SymbolMap const& grips, int firstNumerus, int system)
{
	std::vector<Columna> columns;
	columns.reserve(tempus.size());
	std::map<int, std::size_t> byColumn;
	for (auto const& d : tempus) {
		byColumn.emplace(d.startColumn, columns.size());
		Columna c;
		c.numerus = firstNumerus + static_cast<int>(columns.size());
		c.duration = d;
		c.system = system;
		c.trabes = assign_trabes(c);
		columns.push_back(std::move(c));
	}

	for (std::size_t v = 0; v < voices.size(); ++v) {
		auto const& voice = voices[v];
		auto const ypos = static_cast<int>(v) + 1;
		if (ypos > kMaxDtdIndex)
			throw CompileError(ErrorKind::Model,
			                   fmt::format("voice {} is line {} of its system; at most {} voices are allowed",
			                               voice.voiceName, ypos, kMaxDtdIndex),
			                   SourceLocation{voice.lineNumber, 0}, voice.excerpt);
		for (auto const& g : voice.grips) {
			SourceLocation const at{g.lineNumber, g.startColumn};
			auto const it = byColumn.find(g.startColumn);
			if (it == byColumn.end())
				throw CompileError(ErrorKind::Alignment,
				                   fmt::format("grip '{}' of voice {} starts at column {}, where no duration"
				                               " symbol starts",
				                               g.sourceText(), voice.voiceName, g.startColumn),
				                   at, voice.excerpt);
			auto const grip = lookup_grip(grips, g.sourceSymbol, at, voice.excerpt);
			columns[it->second].sona.push_back(
			    Sonum{g.sourceSymbol, grip.stringIndex, grip.fret, g.prolongate, ypos, g.annotations, at});
		}
	}

	for (auto const& c : columns)
		if (c.sona.empty())
			throw CompileError(ErrorKind::Model,
			                   fmt::format("duration '{}' has no grip below it; every column needs at least one",
			                               c.duration.sourceText),
			                   SourceLocation{c.duration.lineNumber, c.duration.startColumn});
	return columns;
}

std::vector<Columna> compute_summa(std::vector<Columna> columns)
{
	Rational sum;
	for (auto& c : columns) {
		c.summaPraecedentium = sum;
		sum += c.duration.value;
	}
	return columns;
}

std::vector<Columna> assign_duration_ypos(std::vector<Columna> columns, Parameters const& params)
{
	for (auto& c : columns) {
		c.durationYpos = 0;
		if (params.duratioCadens && !c.sona.empty()) {
			auto const top = std::min_element(c.sona.begin(), c.sona.end(),
			                                  [](Sonum const& a, Sonum const& b) { return a.ypos < b.ypos; });
			c.durationYpos = std::max(0, top->ypos - 1);
		}
	}
	return columns;
}

namespace {

struct SystemSource
{
	SourceLine const* tempus = nullptr;
	struct Voice
	{
		SourceLine const* line = nullptr;
		std::vector<SourceLine const*> tracks;
	};
	std::vector<Voice> voices;
};

struct ParsSource
{
	std::string name;
	SourceLine const* header = nullptr;
	Scope scope;
	std::vector<SystemSource> systems;
};

ParsModel finish_pars(ParsSource const& src, std::vector<Warning>& warnings)
{
	SourceLocation const headerAt{src.header->lineNumber, 0};
	if (src.systems.empty())
		throw CompileError(ErrorKind::Model, fmt::format("PARS {} contains no T line", src.name),
		                   headerAt, src.header->text);
	auto const& selection = src.scope.gripSelection;
	if (!selection)
		throw CompileError(ErrorKind::Model,
		                   fmt::format("PARS {} has no '{}' assignment selecting a grip table",
		                               src.name, kGripTableParameter),
		                   headerAt, src.header->text);
	auto const table = src.scope.tables.find(selection->value);
	if (table == src.scope.tables.end())
		throw CompileError(ErrorKind::Model,
		                   fmt::format("'{}' of PARS {} names an undefined grip table '{}'",
		                               kGripTableParameter, src.name, selection->value),
		                   selection->location, selection->excerpt);

	ParsModel pars{src.name, {}, src.scope.parameters, table->first, static_cast<int>(src.systems.size())};
	auto const map = build_symbol_map(table->second);

	std::optional<DurationToken> last;
	for (std::size_t s = 0; s < src.systems.size(); ++s) {
		auto const& sys = src.systems[s];
		auto const tempus = parse_tempus_line(*sys.tempus, pars.parameters, last ? &*last : nullptr);
		validate_beams(tempus, sys.tempus->text);
		last = tempus.back();

		std::vector<VoxLine> voices;
		for (auto const& v : sys.voices) {
			auto voice = parse_vox_line(*v.line);
			for (auto const* track : v.tracks) {
				auto const annotations = parse_param_track(*track, voice);
				if (!annotations.empty() && annotations.front().trackName != "edit")
					warnings.push_back(Warning{
					    fmt::format("track '{}' is kept in the model but not written to XML",
					                annotations.front().trackName),
					    SourceLocation{track->lineNumber, annotations.front().startColumn}});
				attach_annotations(voice, annotations);
			}
			voices.push_back(std::move(voice));
		}

		auto columns = build_system(tempus, voices, map, static_cast<int>(pars.columns.size()), static_cast<int>(s));
		std::move(columns.begin(), columns.end(), std::back_inserter(pars.columns));
	}

	pars.columns = assign_duration_ypos(compute_summa(std::move(pars.columns)), pars.parameters);
	return pars;
}

[[noreturn]] void misplaced(SourceLine const& line, std::string message)
{
	throw CompileError(ErrorKind::Parse, std::move(message), SourceLocation{line.lineNumber, 0}, line.text);
}

} // namespace

CompileResult build_score(std::span<SourceLine const> lines)
{
	CompileResult result;
	Scope fileScope;
	std::optional<ParsSource> pars;
	std::set<std::string> names;

	auto finish = [&] {
		if (pars)
			result.score.partes.push_back(finish_pars(*pars, result.warnings));
		pars.reset();
	};

	for (std::size_t i = 0; i < lines.size(); ++i) {
		auto const& line = lines[i];
		switch (line.kind) {
		case LineKind::Blank:
			break;
		case LineKind::Assignment: {
			auto const extent = continuation_extent(lines, i);
			auto const assignment = parse_assignment(line, lines.subspan(i + 1, extent));
			apply_assignment(pars ? pars->scope : fileScope, assignment, result.warnings);
			i += extent;
			break;
		}
		case LineKind::TableContinuation:
			misplaced(line, "continuation line without an assignment");
		case LineKind::ParsHeader: {
			finish();
			auto const tokens = tokenize_columns(line);
			if (tokens.size() != 2 || !is_identifier(tokens[1].text))
				misplaced(line, "expected 'PARS <name>'");
			if (!names.insert(tokens[1].text).second)
				throw CompileError(ErrorKind::Model, fmt::format("duplicate PARS name '{}'", tokens[1].text),
				                   SourceLocation{line.lineNumber, tokens[1].startColumn}, line.text);
			pars = ParsSource{tokens[1].text, &line, fileScope, {}};
			break;
		}
		case LineKind::TempusLine:
			if (!pars)
				misplaced(line, "T line outside of any PARS");
			pars->systems.push_back(SystemSource{&line, {}});
			break;
		case LineKind::VoxLine:
			if (!pars || pars->systems.empty())
				misplaced(line, "VOX line before the T line of its system");
			pars->systems.back().voices.push_back(SystemSource::Voice{&line, {}});
			break;
		case LineKind::ParamTrackLine:
			// The scanner only yields these directly below a VOX line.
			if (!pars || pars->systems.empty() || pars->systems.back().voices.empty())
				misplaced(line, "parameter track without a preceding VOX line");
			pars->systems.back().voices.back().tracks.push_back(&line);
			break;
		}
	}
	finish();
	return result;
}

CompileResult compile(std::string_view source)
{
	auto const lines = scan(source);
	return build_score(lines);
}

} // namespace tabula
