#include "tabula/cli.hpp"

#include "tabula/model.hpp"
#include "tabula/xml_emitter.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>
#include <vector>

namespace fs = std::filesystem;

namespace tabula {

namespace {

struct PendingFile
{
	fs::path target;
	std::string content;
};

fs::path temporary_for(fs::path const& target)
{
	auto tmp = target;
	tmp += ".tmp";
	return tmp;
}

/// Writes every file to a temporary name first and renames only when all
/// of them were written.
bool commit(std::vector<PendingFile> const& files, std::ostream& err)
{
	std::vector<fs::path> written;
	auto rollback = [&] {
		std::error_code ec;
		for (auto const& p : written)
			fs::remove(p, ec);
	};
	for (auto const& f : files) {
		std::error_code ec;
		if (f.target.has_parent_path())
			fs::create_directories(f.target.parent_path(), ec);
		auto const tmp = temporary_for(f.target);
		std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
		if (os)
			written.push_back(tmp);
		os << f.content;
		os.close();
		if (!os) {
			err << fmt::format("error: cannot write {}\n", f.target.string());
			rollback();
			return false;
		}
	}
	for (auto const& f : files) {
		std::error_code ec;
		fs::rename(temporary_for(f.target), f.target, ec);
		if (ec) {
			err << fmt::format("error: cannot write {}: {}\n", f.target.string(), ec.message());
			rollback();
			return false;
		}
	}
	return true;
}

} // namespace

int run(RunOptions const& options, std::ostream& out, std::ostream& err)
{
	auto const file = options.inputPath.string();
	if (!options.hasAction()) {
		err << "error: nothing to do; pass --xml, --svg, --dtd or --check\n";
		return 2;
	}

	std::ifstream in(options.inputPath, std::ios::binary);
	if (!in) {
		err << fmt::format("error: cannot read {}\n", file);
		return 2;
	}
	std::stringstream buffer;
	buffer << in.rdbuf();

	std::vector<PendingFile> files;
	try {
		auto const result = compile(buffer.str());
		for (auto const& w : result.warnings)
			err << format_warning(file, w);

		std::vector<ParsModel const*> selected;
		if (options.parsFilter) {
			auto const* pars = result.score.find(*options.parsFilter);
			if (pars == nullptr) {
				std::string available;
				for (auto const& p : result.score.partes)
					available += (available.empty() ? "" : ", ") + p.name;
				err << fmt::format("{}: error: no PARS named '{}' (available: {})\n", file, *options.parsFilter,
				                   available.empty() ? "none" : available);
				return 1;
			}
			selected.push_back(pars);
		} else {
			for (auto const& p : result.score.partes)
				selected.push_back(&p);
		}

		auto const stem = options.inputPath.stem().string();
		for (auto const* pars : selected) {
			if (options.checkOnly)
				out << fmt::format("PARS {}: {} columns in {} system(s), ok\n", pars->name, pars->columns.size(),
				                   pars->systemCount);
			if (options.xmlOutDir)
				files.push_back({*options.xmlOutDir / fmt::format("{}.{}.xml", stem, pars->name), emit_pars(*pars)});
			if (options.svgOutDir)
				files.push_back({*options.svgOutDir / fmt::format("{}.{}.svg", stem, pars->name),
				                 render_pars(*pars, options.render)});
		}
	} catch (CompileError const& e) {
		err << format_diagnostic(file, e);
		return 1;
	}

	if (options.emitDtd)
		files.push_back({options.xmlOutDir.value_or(fs::path{}) / kDtdFileName, emit_dtd()});
	if (options.checkOnly)
		return 0;
	return commit(files, err) ? 0 : 1;
}

int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Compile column-aligned German lute tablature into XML and SVG control graphics", "tabulac"};
	RunOptions options;
	std::string input;
	std::string xml;
	std::string svg;
	std::string pars;

	app.add_option("input", input, "tablature source file")->required();
	app.add_option("--xml", xml, "write one <input>.<pars>.xml per PARS into this directory");
	app.add_option("--svg", svg, "write one <input>.<pars>.svg control graphic per PARS into this directory");
	app.add_flag("--dtd", options.emitDtd, "write tabulatura.dtd (into the --xml directory if given)");
	app.add_option("--pars", pars, "only process the PARS with this name");
	app.add_flag("--check", options.checkOnly, "validate only, write nothing");
	app.add_option("--column-spacing", options.render.columnSpacing, "SVG column spacing")->check(CLI::PositiveNumber);
	app.add_option("--row-spacing", options.render.rowSpacing, "SVG row spacing")->check(CLI::PositiveNumber);
	app.add_option("--stem-height", options.render.stemHeight, "SVG stem height")->check(CLI::PositiveNumber);
	app.add_option("--font-size", options.render.fontSize, "SVG font size")->check(CLI::PositiveNumber);
	app.add_option("--margin", options.render.margin, "SVG margin")->check(CLI::PositiveNumber);
	app.set_version_flag("--version", std::string(kVersion));

	try {
		app.parse(argc, argv);
	} catch (CLI::CallForHelp const&) {
		out << app.help();
		return 0;
	} catch (CLI::CallForVersion const&) {
		out << "tabulac " << kVersion << "\n";
		return 0;
	} catch (CLI::ParseError const& e) {
		err << "error: " << e.what() << "\n\n" << app.help();
		return 2;
	}

	options.inputPath = input;
	if (!xml.empty())
		options.xmlOutDir = xml;
	if (!svg.empty())
		options.svgOutDir = svg;
	if (!pars.empty())
		options.parsFilter = pars;
	if (!options.hasAction()) {
		err << "error: nothing to do; pass --xml, --svg, --dtd or --check\n\n" << app.help();
		return 2;
	}
	return run(options, out, err);
}

} // namespace tabula
