#include "tabula/svg_renderer.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace tabula {

void RenderConfig::validate() const
{
	for (double v : {columnSpacing, rowSpacing, stemHeight, fontSize, margin})
		if (!(v > 0))
			throw std::invalid_argument("render geometry must be strictly positive");
}

namespace {

std::string escape_text(std::string_view text)
{
	std::string out;
	for (char c : text) {
		switch (c) {
		case '&': out += "&amp;"; break;
		case '<': out += "&lt;"; break;
		case '>': out += "&gt;"; break;
		default:  out += c; break;
		}
	}
	return out;
}

struct Band
{
	std::size_t first = 0;  ///< index into the column list
	std::size_t count = 0;
	int rows = 1;           ///< duration row plus voice rows
	double top = 0;
};

class Painter
{
public:
	void line(double x1, double y1, double x2, double y2, std::string_view extra = {})
	{
		body_ += fmt::format("    <line x1='{:g}' y1='{:g}' x2='{:g}' y2='{:g}' stroke='black'{}{} />\n", x1, y1, x2,
		                     y2, extra.empty() ? "" : " ", extra);
	}

	void dot(double x, double y)
	{
		body_ += fmt::format("    <circle cx='{:g}' cy='{:g}' r='1.5' fill='black' />\n", x, y);
	}

	void text(double x, double y, std::string_view content, double size, std::string_view fill)
	{
		body_ += fmt::format("    <text x='{:g}' y='{:g}' font-size='{:g}' fill='{}' text-anchor='middle'>{}</text>\n",
		                     x, y, size, fill, escape_text(content));
	}

	void raw(std::string_view s) { body_ += s; }

	std::string const& body() const { return body_; }

private:
	std::string body_;
};

} // namespace

std::string render_pars(ParsModel const& model, RenderConfig const& cfg)
{
	cfg.validate();
	auto const& cols = model.columns;

	std::vector<Band> bands;
	for (std::size_t i = 0; i < cols.size(); ++i) {
		if (bands.empty() || cols[i].system != cols[bands.back().first].system)
			bands.push_back(Band{i, 0, 1, 0});
		auto& band = bands.back();
		++band.count;
		for (auto const& s : cols[i].sona)
			band.rows = std::max(band.rows, s.ypos + 1);
		band.rows = std::max(band.rows, cols[i].durationYpos + 1);
	}

	// Band layout: stem space, one row per ypos, one row of column numbers.
	double y = cfg.margin;
	std::size_t widest = 0;
	for (auto& band : bands) {
		band.top = y;
		y += cfg.stemHeight + band.rows * cfg.rowSpacing + cfg.rowSpacing;
		widest = std::max(widest, band.count);
	}
	double const width = 2 * cfg.margin + (widest > 0 ? static_cast<double>(widest - 1) * cfg.columnSpacing : 0);
	double const height = bands.empty() ? 2 * cfg.margin : y - cfg.rowSpacing + cfg.margin;

	Painter paint;
	for (std::size_t b = 0; b < bands.size(); ++b) {
		auto const& band = bands[b];
		auto const rowBase = [&](int row) { return band.top + cfg.stemHeight + row * cfg.rowSpacing; };

		paint.raw(fmt::format("  <g class='system' id='system-{}'>\n", b));
		bool beamOpen = false;
		double beamX = 0;
		double beamY = 0;
		int beamCount = 1;
		for (std::size_t k = 0; k < band.count; ++k) {
			auto const& c = cols[band.first + k];
			auto const& d = c.duration;
			double const x = cfg.margin + static_cast<double>(k) * cfg.columnSpacing;
			double const base = rowBase(c.durationYpos) - cfg.rowSpacing * 0.25;
			double const top = base - cfg.stemHeight * 0.75;

			switch (d.klass) {
			case DurationClass::Carry:
				paint.line(x, base, x, top, "stroke-dasharray='2,2' opacity='0.35'");
				break;
			case DurationClass::Dots:
				for (int i = 0; i < d.dotCount; ++i)
					paint.dot(x + (i - (d.dotCount - 1) / 2.0) * 4, base - 3);
				break;
			default: {
				paint.line(x, base, x, top);
				bool const beamed = beamOpen || c.trabes == Trabes::Initialis;
				if (!beamed) {
					for (int f = 0; f < flag_count(d.klass); ++f)
						paint.line(x, top + f * 4, x + 6, top + f * 4 + 5);
				}
				if (d.dotCount > 0)
					paint.dot(x + 5, base - 3);
				if (c.trabes == Trabes::Initialis) {
					beamOpen = true;
					beamX = x;
					beamY = top;
					beamCount = std::max(1, flag_count(d.klass));
				} else if (c.trabes == Trabes::Terminalis && beamOpen) {
					for (int i = 0; i < beamCount; ++i)
						paint.line(beamX, beamY + i * 4, x, top + i * 4, "stroke-width='2'");
					beamOpen = false;
				}
				break;
			}
			}

			for (auto const& s : c.sona)
				paint.text(x, rowBase(s.ypos), s.prolongate ? s.source + kProlongateSuffix : s.source, cfg.fontSize,
				           "black");
			paint.text(x, rowBase(band.rows - 1) + cfg.rowSpacing, std::to_string(c.numerus), cfg.fontSize * 0.6,
			           "gray");
		}
		paint.raw("  </g>\n");
	}

	return fmt::format("<?xml version='1.0' encoding='UTF-8'?>\n"
	                   "<svg xmlns='http://www.w3.org/2000/svg' width='{0:g}' height='{1:g}' viewBox='0 0 {0:g} {1:g}'"
	                   " font-family='serif'>\n"
	                   "  <title>{2}</title>\n"
	                   "{3}"
	                   "</svg>\n",
	                   width, height, escape_text(model.name), paint.body());
}

} // namespace tabula
