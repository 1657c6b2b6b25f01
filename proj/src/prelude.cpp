#include "tabula/prelude.hpp"

#include <fmt/format.h>

#include <numeric>

namespace tabula {

namespace {

struct Piece
{
	std::string text;
	SourceLocation at;
	std::string const* excerpt;
};

/// Splits whitespace tokens further at parentheses and at the first '='.
std::vector<Piece> split_pieces(std::span<SourceLine const* const> lines)
{
	std::vector<Piece> out;
	bool seenEquals = false;
	for (auto const* line : lines) {
		for (auto const& tok : tokenize_columns(line->text, line->lineNumber)) {
			std::string current;
			int currentColumn = tok.startColumn;
			int column = tok.startColumn;
			auto flush = [&] {
				if (!current.empty())
					out.push_back(Piece{current, {line->lineNumber, currentColumn}, &line->text});
				current.clear();
			};
			for (std::size_t i = 0; i < tok.text.size(); ++column) {
				auto len = std::size_t{1};
				while (i + len < tok.text.size() && (static_cast<unsigned char>(tok.text[i + len]) & 0xC0) == 0x80)
					++len;
				char const c = tok.text[i];
				bool const separator = len == 1 && (c == '(' || c == ')' || (c == '=' && !seenEquals));
				if (separator) {
					flush();
					seenEquals = seenEquals || c == '=';
					out.push_back(Piece{std::string(1, c), {line->lineNumber, column}, &line->text});
				} else {
					if (current.empty())
						currentColumn = column;
					current.append(tok.text, i, len);
				}
				i += len;
			}
			flush();
		}
	}
	return out;
}

[[noreturn]] void fail(Piece const& at, std::string message)
{
	throw CompileError(ErrorKind::Parse, std::move(message), at.at, *at.excerpt);
}

GripTable parse_table(std::string name, SourceLocation nameAt, std::vector<Piece> const& p, std::size_t i)
{
	GripTable table{std::move(name), {}, nameAt};
	auto const& open = p[i++];
	std::map<std::string, SourceLocation> seen;
	while (true) {
		if (i >= p.size())
			fail(open, fmt::format("unbalanced parentheses: table '{}' opened here is never closed", table.name));
		if (p[i].text == ")") {
			++i;
			break;
		}
		if (p[i].text != "(")
			fail(p[i], fmt::format("expected '(' starting a table row, found '{}'", p[i].text));
		auto const& rowOpen = p[i++];
		std::vector<Token> row;
		while (true) {
			if (i >= p.size())
				fail(rowOpen, "unbalanced parentheses: table row opened here is never closed");
			auto const& s = p[i++];
			if (s.text == ")")
				break;
			if (s.text == "(")
				fail(s, "nested '(' inside a table row");
			auto const [it, inserted] = seen.emplace(s.text, s.at);
			if (!inserted)
				fail(s, fmt::format("duplicate grip symbol '{}' (first defined at {}:{}, again at {}:{})",
				                    s.text, it->second.line, it->second.column, s.at.line, s.at.column));
			row.push_back(Token{s.text, s.at.column, s.at.line});
		}
		if (row.empty())
			fail(rowOpen, "empty table row");
		table.rows.push_back(std::move(row));
	}
	if (i < p.size())
		fail(p[i], fmt::format("unexpected '{}' after table '{}'", p[i].text, table.name));
	if (table.rows.empty())
		fail(open, fmt::format("table '{}' has no rows", table.name));
	return table;
}

} // namespace

std::size_t GripTable::symbolCount() const
{
	return std::accumulate(rows.begin(), rows.end(), std::size_t{0},
	                       [](std::size_t n, auto const& row) { return n + row.size(); });
}

std::size_t continuation_extent(std::span<SourceLine const> lines, std::size_t start)
{
	std::size_t extent = 0;
	for (auto i = start + 1; i < lines.size(); ++i) {
		if (lines[i].kind == LineKind::TableContinuation)
			extent = i - start;
		else if (lines[i].kind != LineKind::Blank)
			break;
	}
	return extent;
}

Assignment parse_assignment(SourceLine const& line, std::span<SourceLine const> followers)
{
	std::vector<SourceLine const*> group{&line};
	for (auto const& f : followers)
		if (f.kind == LineKind::TableContinuation)
			group.push_back(&f);

	auto const p = split_pieces(group);
	if (p.empty() || !is_identifier(p[0].text))
		throw CompileError(ErrorKind::Parse, "assignment must start with a name",
		                   SourceLocation{line.lineNumber, 0}, line.text);
	if (p.size() < 2 || p[1].text != "=")
		fail(p[0], fmt::format("expected '=' after '{}'", p[0].text));
	if (p.size() < 3)
		fail(p[1], fmt::format("missing value for '{}'", p[0].text));

	if (p[2].text == "(")
		return parse_table(p[0].text, p[0].at, p, 2);
	if (p[2].text == ")")
		fail(p[2], "unbalanced parentheses: ')' without '('");
	if (p.size() > 3)
		fail(p[3], fmt::format("unexpected '{}' after the value of '{}'", p[3].text, p[0].text));
	return ScalarAssignment{p[0].text, p[2].text, p[0].at, *p[0].excerpt};
}

void apply_assignment(Scope& scope, Assignment const& assignment, std::vector<Warning>& warnings)
{
	if (auto const* table = std::get_if<GripTable>(&assignment)) {
		if (table->name == "duratioManet" || table->name == "duratioCadens" || table->name == kGripTableParameter)
			throw CompileError(ErrorKind::Parse,
			                   fmt::format("'{}' expects a single value, not a table", table->name),
			                   table->location);
		scope.tables.insert_or_assign(table->name, *table);
		return;
	}

	auto const& a = std::get<ScalarAssignment>(assignment);
	auto boolean = [&]() {
		if (a.value == "est")
			return true;
		if (a.value == "nonEst")
			return false;
		throw CompileError(ErrorKind::Parse,
		                   fmt::format("'{}' must be 'est' or 'nonEst', not '{}'", a.name, a.value),
		                   a.location, a.excerpt);
	};
	if (a.name == "duratioManet")
		scope.parameters.duratioManet = boolean();
	else if (a.name == "duratioCadens")
		scope.parameters.duratioCadens = boolean();
	else if (a.name == kGripTableParameter)
		scope.gripSelection = a;
	else {
		scope.parameters.extra.insert_or_assign(a.name, a.value);
		warnings.push_back(Warning{fmt::format("unknown parameter '{}' kept as extra value", a.name), a.location});
	}
}

SymbolMap build_symbol_map(GripTable const& table)
{
	SymbolMap map{table.name, {}};
	for (std::size_t row = 0; row < table.rows.size(); ++row) {
		for (std::size_t col = 0; col < table.rows[row].size(); ++col) {
			auto const& sym = table.rows[row][col];
			if (row > kMaxDtdIndex || col > kMaxDtdIndex)
				throw CompileError(ErrorKind::Model,
				                   fmt::format("grip '{}' in table '{}' maps to string {} fret {};"
				                               " both must be at most {}",
				                               sym.text, table.name, row, col, kMaxDtdIndex),
				                   SourceLocation{sym.line, sym.startColumn});
			map.entries.emplace(sym.text, Grip{static_cast<int>(row), static_cast<int>(col)});
		}
	}
	return map;
}

std::optional<Grip> find_grip(SymbolMap const& map, std::string_view symbol)
{
	auto const it = map.entries.find(symbol);
	if (it == map.entries.end())
		return std::nullopt;
	return it->second;
}

Grip lookup_grip(SymbolMap const& map, std::string_view symbol, SourceLocation where, std::string_view excerpt)
{
	if (auto grip = find_grip(map, symbol))
		return *grip;
	throw CompileError(ErrorKind::Model,
	                   fmt::format("unknown grip symbol '{}' (not in table '{}')", symbol, map.tableName),
	                   where, std::string(excerpt));
}

} // namespace tabula
