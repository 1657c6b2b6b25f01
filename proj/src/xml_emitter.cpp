#include "tabula/xml_emitter.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>

namespace tabula {

namespace {

constexpr std::array<Rational::Int, 7> kDenominators{1, 2, 4, 8, 16, 32, 64};

void check_index(int value, std::string_view what, SourceLocation at)
{
	if (value < 0 || value > kMaxDtdIndex)
		throw CompileError(ErrorKind::Emit, fmt::format("{} {} is outside 0..{}", what, value, kMaxDtdIndex), at);
}

void check_den(Rational r, std::string_view what, SourceLocation at)
{
	if (std::find(kDenominators.begin(), kDenominators.end(), r.den()) == kDenominators.end())
		throw CompileError(ErrorKind::Emit,
		                   fmt::format("{} {} has a denominator outside (1|2|4|8|16|32|64)", what, r.str()), at);
}

} // namespace

std::string escape_attribute(std::string_view value)
{
	std::string out;
	out.reserve(value.size());
	for (char c : value) {
		switch (c) {
		case '&':  out += "&amp;"; break;
		case '<':  out += "&lt;"; break;
		case '>':  out += "&gt;"; break;
		case '\'': out += "&apos;"; break;
		case '"':  out += "&quot;"; break;
		default:   out += c; break;
		}
	}
	return out;
}

std::string emit_pars(ParsModel const& model)
{
	std::string out = "<?xml version='1.0' encoding='UTF-8'?>\n<tabulatura>\n";
	for (auto const& c : model.columns) {
		auto const& d = c.duration;
		SourceLocation const at{d.lineNumber, d.startColumn};
		check_index(c.durationYpos, "duration ypos", at);
		check_den(c.summaPraecedentium, "summaPraecedentium", at);
		check_den(d.value, "duratio", at);

		out += "  <columna>\n";
		out += fmt::format("    <duratio source='{}' numerus='{}' ypos='{}'", escape_attribute(d.sourceText),
		                   c.numerus, c.durationYpos);
		if (c.trabes != Trabes::None)
			out += fmt::format(" trabes='{}'", to_string(c.trabes));
		out += fmt::format(" summaPraecedentium.num='{}' summaPraecedentium.den='{}'"
		                   " duratio.num='{}' duratio.den='{}' />\n",
		                   c.summaPraecedentium.num(), c.summaPraecedentium.den(), d.value.num(), d.value.den());

		for (auto const& s : c.sona) {
			check_index(s.fret, "fret", s.location);
			check_index(s.stringIndex, "string", s.location);
			check_index(s.ypos, "ypos", s.location);
			out += fmt::format("    <sonum source='{}' fret='{}' string='{}'", escape_attribute(s.source), s.fret,
			                   s.stringIndex);
			if (s.prolongate)
				out += " prolongate='yes'";
			out += fmt::format(" ypos='{}'", s.ypos);
			for (auto const& a : s.annotations)
				if (a.trackName == "edit")
					out += fmt::format(" edit='{}'", escape_attribute(a.text));
			out += " />\n";
		}
		out += "  </columna>\n";
	}
	out += "</tabulatura>\n";
	return out;
}

std::string emit_dtd()
{
	return R"dtd(<!ELEMENT tabulatura (columna)*  >

<!ELEMENT columna (duratio, sonum+) >

<!ELEMENT duratio EMPTY>
<!ATTLIST duratio source CDATA                          #REQUIRED
                  numerus CDATA                         #REQUIRED
                  ypos   (0|1|2|3|4|5|6|7|8|9|10|11|12) #REQUIRED
                  trabes (initialis|terminalis)         #IMPLIED 
                  duratio.num    CDATA                  #REQUIRED
                  duratio.den    (1|2|4|8|16|32|64)     #REQUIRED
                  summaPraecedentium.num  CDATA         #REQUIRED
                  summaPraecedentium.den  (1|2|4|8|16|32|64) #REQUIRED
>

<!ELEMENT sonum EMPTY>
<!ATTLIST sonum source CDATA  #REQUIRED
                  fret   (0|1|2|3|4|5|6|7|8|9|10|11|12) #REQUIRED
                  string (0|1|2|3|4|5|6|7|8|9|10|11|12) #REQUIRED
                  prolongate (yes)                      #IMPLIED
                  ypos   (0|1|2|3|4|5|6|7|8|9|10|11|12) #REQUIRED
                  finger  (p|i|m|a|o)                   #IMPLIED
                  edit    CDATA                         #IMPLIED
>
)dtd";
}

} // namespace tabula
