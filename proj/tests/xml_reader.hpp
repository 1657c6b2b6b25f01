#pragma once

// Reads emitted tabulatura documents back through Boost.PropertyTree, which
// shares no code with the emitter.

#include "tabula/model.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace tabula::test {

using Attributes = std::map<std::string, std::string>;

struct ReadColumn
{
	Attributes duratio;
	std::vector<Attributes> sona;
};

inline Attributes attributes_of(boost::property_tree::ptree const& node)
{
	Attributes out;
	if (auto const attrs = node.get_child_optional("<xmlattr>"))
		for (auto const& [k, v] : *attrs)
			out.emplace(k, v.data());
	return out;
}

/// Throws boost::property_tree::xml_parser_error on malformed input.
inline std::vector<ReadColumn> read_tabulatura(std::string const& xml)
{
	std::istringstream in(xml);
	boost::property_tree::ptree doc;
	boost::property_tree::read_xml(in, doc);
	std::vector<ReadColumn> out;
	for (auto const& [name, col] : doc.get_child("tabulatura")) {
		if (name != "columna")
			continue;
		ReadColumn rc;
		for (auto const& [child, node] : col) {
			if (child == "duratio")
				rc.duratio = attributes_of(node);
			else if (child == "sonum")
				rc.sona.push_back(attributes_of(node));
		}
		out.push_back(std::move(rc));
	}
	return out;
}

inline std::string ratio_attr(Attributes const& a, std::string const& stem)
{
	return a.at(stem + ".num") + "/" + a.at(stem + ".den");
}

/// Empty string when the document matches the model field for field,
/// otherwise a description of the first mismatch.
inline std::string compare_with_model(std::vector<ReadColumn> const& read, ParsModel const& model)
{
	auto const mismatch = [](std::size_t col, std::string const& what, std::string const& got,
	                         std::string const& want) {
		return "column " + std::to_string(col) + " " + what + ": read '" + got + "', model '" + want + "'";
	};
	if (read.size() != model.columns.size())
		return "column count " + std::to_string(read.size()) + " vs " + std::to_string(model.columns.size());
	for (std::size_t i = 0; i < read.size(); ++i) {
		auto const& r = read[i];
		auto const& c = model.columns[i];
		auto const check = [&](std::string const& what, std::string const& got, std::string const& want) {
			return got == want ? std::string{} : mismatch(i, what, got, want);
		};
		std::string trabes = r.duratio.count("trabes") ? r.duratio.at("trabes") : "";
		for (auto const& diff : {
		         check("numerus", r.duratio.at("numerus"), std::to_string(c.numerus)),
		         check("source", r.duratio.at("source"), c.duration.sourceText),
		         check("ypos", r.duratio.at("ypos"), std::to_string(c.durationYpos)),
		         check("duratio", ratio_attr(r.duratio, "duratio"), c.duration.value.str()),
		         check("summa", ratio_attr(r.duratio, "summaPraecedentium"), c.summaPraecedentium.str()),
		         check("trabes", trabes, std::string(to_string(c.trabes))),
		         check("sonum count", std::to_string(r.sona.size()), std::to_string(c.sona.size())),
		     })
			if (!diff.empty())
				return diff;
		for (std::size_t k = 0; k < r.sona.size(); ++k) {
			auto const& rs = r.sona[k];
			auto const& s = c.sona[k];
			std::string edit;
			for (auto const& a : s.annotations)
				if (a.trackName == "edit")
					edit = a.text;
			for (auto const& diff : {
			         check("sonum source", rs.at("source"), s.source),
			         check("fret", rs.at("fret"), std::to_string(s.fret)),
			         check("string", rs.at("string"), std::to_string(s.stringIndex)),
			         check("sonum ypos", rs.at("ypos"), std::to_string(s.ypos)),
			         check("prolongate", rs.count("prolongate") ? rs.at("prolongate") : "", s.prolongate ? "yes" : ""),
			         check("edit", rs.count("edit") ? rs.at("edit") : "", edit),
			     })
				if (!diff.empty())
					return diff;
		}
	}
	return {};
}

} // namespace tabula::test
