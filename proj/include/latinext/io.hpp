// io.hpp -- text and JSON forms of partial latin rectangles
//
// Text form:
//
//     r s t
//     <r lines of s tokens, each a symbol in 1..t or ".">
//
// Blank lines and lines starting with '#' are ignored. The normalized form
// uses single spaces and ends with a newline.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "latinext/core.hpp"

namespace latinext {

class SyntaxError : public Error
{
public:
    SyntaxError(int line, std::string token, const std::string& what);
    int line;  ///< 1-based; 0 when the input ended early
    std::string token;
};

/// Splits `text` into significant lines (comments and blanks dropped), each
/// tokenized on whitespace. Line numbers are preserved for diagnostics.
struct TokenLine
{
    int line;
    std::vector<std::string> tokens;
};
std::vector<TokenLine> tokenize(std::string_view text);

/// Parses a nonnegative integer token, throwing `SyntaxError` otherwise.
int parse_int_token(const std::string& token, int line);

PartialLatinRectangle parse_rectangle(std::string_view text);
std::string serialize(const PartialLatinRectangle& p);
std::string serialize(const LatinSquare& l);

/// Grid body only (no header), "." for empty cells, 1-based symbols.
std::string format_grid(const Grid<int>& cells);

nlohmann::json to_json(const PartialLatinRectangle& p);
nlohmann::json to_json(const LatinSquare& l);
nlohmann::json to_json(const ConditionReport& report);
PartialLatinRectangle rectangle_from_json(const nlohmann::json& j);

} // namespace latinext
