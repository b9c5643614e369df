#include "latinext/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace latinext {

SyntaxError::SyntaxError(int line_, std::string token_, const std::string& what)
  : Error("line " + std::to_string(line_) + ": " + what +
          (token_.empty() ? std::string() : " (token '" + token_ + "')")),
    line(line_), token(std::move(token_))
{
}

std::vector<TokenLine> tokenize(std::string_view text)
{
    std::vector<TokenLine> out;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        ++line_no;
        std::string line(text.substr(pos, eol - pos));
        pos = eol + 1;

        std::istringstream in(line);
        TokenLine tl{line_no, {}};
        std::string tok;
        while (in >> tok) tl.tokens.push_back(tok);
        if (!tl.tokens.empty() && tl.tokens.front().front() != '#') out.push_back(std::move(tl));
        if (eol == text.size()) break;
    }
    return out;
}

int parse_int_token(const std::string& token, int line)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
        throw SyntaxError(line, token, "expected a nonnegative integer");
    return value;
}

PartialLatinRectangle parse_rectangle(std::string_view text)
{
    auto lines = tokenize(text);
    if (lines.empty()) throw SyntaxError(0, "", "missing header line 'r s t'");

    const auto& header = lines.front();
    if (header.tokens.size() != 3)
        throw SyntaxError(header.line, header.tokens.size() > 3 ? header.tokens[3] : "",
                          "header must contain exactly three integers 'r s t'");
    const int r = parse_int_token(header.tokens[0], header.line);
    const int s = parse_int_token(header.tokens[1], header.line);
    const int t = parse_int_token(header.tokens[2], header.line);
    if (r < 1 || s < 1 || t < 1)
        throw SyntaxError(header.line, "", "r, s and t must be positive");

    if (static_cast<int>(lines.size()) - 1 < r)
        throw SyntaxError(lines.back().line, "", "expected " + std::to_string(r) + " grid rows");
    if (static_cast<int>(lines.size()) - 1 > r) {
        const auto& extra = lines[static_cast<size_t>(r) + 1];
        throw SyntaxError(extra.line, extra.tokens.front(), "unexpected content after the grid");
    }

    std::vector<std::vector<std::optional<int>>> grid;
    for (int i = 0; i < r; ++i) {
        const auto& tl = lines[static_cast<size_t>(i) + 1];
        if (static_cast<int>(tl.tokens.size()) != s)
            throw SyntaxError(tl.line, "", "expected " + std::to_string(s) + " cells, found " +
                                               std::to_string(tl.tokens.size()));
        auto& row = grid.emplace_back();
        for (const auto& tok : tl.tokens) {
            if (tok == ".") {
                row.emplace_back();
                continue;
            }
            int v = parse_int_token(tok, tl.line);
            if (v < 1 || v > t) throw SyntaxError(tl.line, tok, "symbol outside 1.." + std::to_string(t));
            row.emplace_back(v);
        }
    }
    return validate(grid, t);
}

std::string format_grid(const Grid<int>& cells)
{
    std::string out;
    for (int i = 0; i < cells.rows(); ++i) {
        for (int j = 0; j < cells.cols(); ++j) {
            if (j) out += ' ';
            int v = cells(i, j);
            out += v == kEmpty ? std::string(".") : std::to_string(v + 1);
        }
        out += '\n';
    }
    return out;
}

std::string serialize(const PartialLatinRectangle& p)
{
    return std::to_string(p.rows()) + ' ' + std::to_string(p.cols()) + ' ' +
           std::to_string(p.symbols()) + '\n' + format_grid(p.cells());
}

std::string serialize(const LatinSquare& l)
{
    return serialize(l.as_partial());
}

nlohmann::json to_json(const PartialLatinRectangle& p)
{
    nlohmann::json grid = nlohmann::json::array();
    for (int i = 0; i < p.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < p.cols(); ++j)
            row.push_back(p.filled(i, j) ? nlohmann::json(p.at(i, j) + 1) : nlohmann::json(nullptr));
        grid.push_back(std::move(row));
    }
    return {{"rows", p.rows()}, {"cols", p.cols()}, {"symbols", p.symbols()}, {"grid", grid}};
}

nlohmann::json to_json(const LatinSquare& l)
{
    return to_json(l.as_partial());
}

nlohmann::json to_json(const ConditionReport& report)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : report.items) {
        out.push_back({{"id", c.id},
                       {"kind", c.kind == BoundKind::AtLeast ? "at_least" : "at_most"},
                       {"attained", c.attained},
                       {"bound", c.bound},
                       {"margin", c.margin()},
                       {"satisfied", c.satisfied()},
                       {"index", c.index < 0 ? nlohmann::json(nullptr) : nlohmann::json(c.index + 1)}});
    }
    return out;
}

PartialLatinRectangle rectangle_from_json(const nlohmann::json& j)
{
    try {
        const int r = j.at("rows").get<int>();
        const int s = j.at("cols").get<int>();
        const int t = j.at("symbols").get<int>();
        const auto& g = j.at("grid");
        if (!g.is_array() || static_cast<int>(g.size()) != r)
            throw ShapeError("grid must have " + std::to_string(r) + " rows");
        std::vector<std::vector<std::optional<int>>> grid;
        for (const auto& row : g) {
            if (!row.is_array() || static_cast<int>(row.size()) != s)
                throw ShapeError("grid rows must have " + std::to_string(s) + " cells");
            auto& out = grid.emplace_back();
            for (const auto& v : row)
                out.push_back(v.is_null() ? std::nullopt : std::optional<int>(v.get<int>()));
        }
        return validate(grid, t);
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(0, "", std::string("malformed JSON rectangle: ") + e.what());
    }
}

} // namespace latinext
