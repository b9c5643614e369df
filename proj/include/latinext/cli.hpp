// cli.hpp -- the `latinext` command line, callable in-process.
//
// Every command produces an outcome with a status (yes, no, completed or
// error), an optional payload and optional condition diagnostics. The text
// form is line oriented:
//
//     status <status>
//     condition <id> <at_least|at_most> attained=<a> bound=<b> margin=<m> satisfied=<yes|no> index=<i|->
//     note <key> <integer>
//     payload <kind> [key=value ...]
//     <payload body>
//
// and `text_to_json` maps it back to the JSON form printed with --json.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "latinext/core.hpp"

namespace latinext::cli {

/// Exit codes.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

struct Outcome
{
    std::string status;
    std::optional<nlohmann::json> payload;  ///< object with a "kind" member
    std::optional<ConditionReport> diagnostics;
    std::map<std::string, std::int64_t> notes;
};

nlohmann::json to_json(const Outcome& outcome);
std::string to_text(const Outcome& outcome);

/// Parses the text form back into the JSON form.
nlohmann::json text_to_json(std::string_view text);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace latinext::cli
