#pragma once

#include "tabula/model.hpp"

#include <string>

namespace tabula {

/// Geometry of the control graphic, in SVG user units.
struct RenderConfig
{
	double columnSpacing = 28;
	double rowSpacing = 18;
	double stemHeight = 24;
	double fontSize = 12;
	double margin = 20;

	/// Throws std::invalid_argument unless every length is positive.
	void validate() const;
};

/// Draws a PARS as a control graphic: one band per source system, duration
/// signs as stems with flags or beams, grips as text at their source rows,
/// column numbers underneath. The only `<text>` elements are the grips and
/// the column numbers.
std::string render_pars(ParsModel const& model, RenderConfig const& config = {});

} // namespace tabula
