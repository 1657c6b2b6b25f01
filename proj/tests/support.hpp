#pragma once

#include "tabula/model.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace tabula::test {

inline std::string read_fixture(std::string const& name)
{
	std::ifstream in(std::string(TABULA_TEST_DATA) + "/" + name, std::ios::binary);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

inline SourceLine line_of(std::string text, LineKind kind, int number = 1)
{
	return SourceLine{number, std::move(text), kind};
}

/// Unreduced fraction used as an independent oracle for Rational.
struct RawFraction
{
	long long num;
	long long den;
};

inline RawFraction raw_add(RawFraction a, RawFraction b)
{
	return {a.num * b.den + b.num * a.den, a.den * b.den};
}

inline RawFraction raw_mul(RawFraction a, RawFraction b)
{
	return {a.num * b.num, a.den * b.den};
}

inline bool same_value(RawFraction a, Rational b)
{
	return a.num * b.den() == b.num() * a.den;
}

/// The grip table shared by both golden fixtures.
inline char const* const kStandardTable = R"(
  Standard_1531_Newsidler_etAlii
   = ( (1 a  f  l  q  x  aa)
       (2 b  g  m  r  y  bb)
       (3 c  h  n  s  z  cc)
       (4 d  i  o  t  &  dd)
       (5 e  k  p  v  C  ee) )
)";

/// Random duration symbols of one system with balanced beam groups.
/// `-` only appears when `carry` is set and never first in the PARS.
inline std::vector<std::string> random_tempus(std::mt19937& rng, std::size_t count, bool carry, bool first)
{
	std::vector<std::string> const stems{"I", "T", "F", "E"};
	std::uniform_int_distribution<int> percent(0, 99);
	std::uniform_int_distribution<std::size_t> stem(0, stems.size() - 1);
	std::uniform_int_distribution<int> dots(1, 3);
	std::vector<std::string> out;
	bool open = false;
	for (std::size_t i = 0; i < count; ++i) {
		bool const last = i + 1 == count;
		if (!open && carry && !(first && i == 0) && percent(rng) < 15) {
			out.emplace_back("-");
			continue;
		}
		if (!open && percent(rng) < 10) {
			out.emplace_back(static_cast<std::size_t>(dots(rng)), '.');
			continue;
		}
		std::string s;
		if (open && (last || percent(rng) < 40)) {
			s += '_';
			open = false;
		}
		s += stems[stem(rng)];
		if (percent(rng) < 15)
			s += '.';
		if (!open && s.front() != '_' && !last && percent(rng) < 25) {
			s += '_';
			open = true;
		}
		out.push_back(std::move(s));
	}
	return out;
}

/// A complete random source file using the standard table, with every
/// column carrying at least one grip.
inline std::string random_source(std::mt19937& rng)
{
	std::vector<std::string> const symbols{"1", "a", "f", "l", "q", "x", "aa", "2", "g", "&", "C", "ee", "k", "4"};
	std::uniform_int_distribution<int> percent(0, 99);
	std::uniform_int_distribution<std::size_t> symbol(0, symbols.size() - 1);
	std::uniform_int_distribution<int> systems(1, 3);
	std::uniform_int_distribution<int> voices(1, 3);
	std::uniform_int_distribution<std::size_t> columns(1, 25);

	bool const manet = percent(rng) < 50;
	std::string src = kStandardTable;
	src += manet ? "duratioManet = est\n" : "duratioManet = nonEst\n";
	src += percent(rng) < 50 ? "duratioCadens = est\n" : "duratioCadens = nonEst\n";
	src += "PARS rnd\n  bünde = Standard_1531_Newsidler_etAlii\n";
	for (int s = systems(rng); s > 0; --s) {
		auto const tempus = random_tempus(rng, columns(rng), manet, src.find("\nT ") == std::string::npos);
		std::vector<std::size_t> widths;
		std::string tline = "T      ";
		for (auto const& t : tempus) {
			widths.push_back(std::max<std::size_t>(t.size(), 3) + 1);
			tline += t + std::string(widths.back() - t.size(), ' ');
		}
		src += tline + "\n";
		auto const nvoices = voices(rng);
		std::vector<std::string> lines(static_cast<std::size_t>(nvoices), "VOX v  ");
		for (std::size_t c = 0; c < tempus.size(); ++c) {
			std::uniform_int_distribution<int> who(0, nvoices - 1);
			auto const forced = who(rng);
			for (int v = 0; v < nvoices; ++v) {
				std::string cell;
				if (v == forced || percent(rng) < 30) {
					cell = symbols[symbol(rng)];
					if (percent(rng) < 10)
						cell += '+';
				}
				cell.resize(widths[c], ' ');
				lines[static_cast<std::size_t>(v)] += cell;
			}
		}
		for (auto const& l : lines)
			src += l + "\n";
	}
	return src;
}

} // namespace tabula::test
