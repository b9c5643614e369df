#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../fixtures.hpp"
#include "latinext/cli.hpp"

using namespace latinext;
using nlohmann::json;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text)
{
    auto path = std::filesystem::temp_directory_path() / ("latinext_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

// Runs a command in both output modes and checks the text form parses
// back to the JSON form.
Run round_trip(std::vector<std::string> args)
{
    auto text = run(args);
    args.push_back("--json");
    auto as_json = run(args);
    CHECK(text.code == as_json.code);
    auto parsed = cli::text_to_json(text.out);
    CHECK(parsed == json::parse(as_json.out));
    return text;
}

} // namespace

TEST_CASE("square A at order 7 fails on symbol 1")
{
    auto a = write_temp("a", fixtures::kSquareA);
    auto r = round_trip({"complete", a, "--n", "7"});
    CHECK(r.code == cli::kExitNo);
    CHECK(r.out.find("status no") == 0);
    CHECK(r.out.find("condition A3 at_least attained=2 bound=3 margin=-1 satisfied=no index=1") !=
          std::string::npos);
}

TEST_CASE("completion and checks print validated payloads")
{
    auto a = write_temp("a", fixtures::kSquareA);
    auto r = round_trip({"complete", a, "--n", "8"});
    CHECK(r.code == cli::kExitYes);
    auto j = cli::text_to_json(r.out);
    CHECK(j["status"] == "completed");
    auto sq = rectangle_from_json(j["payload"]);
    CHECK(sq.rows() == 8);
    CHECK(is_saturated(sq));
    CHECK(fixtures::rect(fixtures::kSquareA).is_extended_by(sq));

    CHECK(round_trip({"check", "cruse", a, "--n", "8"}).code == cli::kExitYes);
    CHECK(round_trip({"check", "sat", a, "--target", "6,6,7"}).code == cli::kExitYes);
    CHECK(round_trip({"check", "sat", a, "--target", "5,5,5"}).code == cli::kExitNo);
    CHECK(round_trip({"saturate", a, "--target", "6,6,7"}).code == cli::kExitYes);
    CHECK(round_trip({"sat", "types", a, "--caps", "6,6,7", "--jobs", "2"}).code == cli::kExitYes);
    CHECK(round_trip({"oracle", "complete", a, "--n", "7"}).code == cli::kExitNo);
}

TEST_CASE("frequency commands")
{
    auto f = write_temp("f", fixtures::kFreq);
    CHECK(round_trip({"check", "freq", f, "--n", "5"}).code == cli::kExitYes);
    auto r = round_trip({"freq", "complete", f, "--n", "5"});
    CHECK(r.code == cli::kExitYes);
    CHECK(r.out.find("payload frequency_square") != std::string::npos);
    CHECK(round_trip({"oracle", "freq", f, "--n", "5"}).code == cli::kExitYes);
    CHECK(run({"freq", "complete", f, "--n", "5", "--lambda", "1,4"}).code == cli::kExitInput);

    auto block = write_temp("block", "2 2 1\n2\n3\n1 1\n1 1\n");
    CHECK(round_trip({"freq", "complete", block, "--n", "3"}).code == cli::kExitNo);
    CHECK(round_trip({"freq", "complete", block, "--n", "3", "--relaxed"}).code == cli::kExitYes);
}

TEST_CASE("k-plex and enumeration commands")
{
    auto sq = run({"gen", "square", "--order", "5", "--seed", "7"});
    REQUIRE(sq.code == cli::kExitYes);
    auto l = write_temp("l", sq.out);
    auto found = round_trip({"kplex", "find", l, "--k", "2"});
    CHECK(found.code == cli::kExitYes);
    CHECK(found.out.find("payload cells k=2") != std::string::npos);
    CHECK(round_trip({"kplex", "find", l, "--k", "1", "--m", "6"}).code == cli::kExitNo);
    CHECK(round_trip({"kplex", "embed", l, "--k", "2"}).code == cli::kExitYes);
    auto scan = round_trip({"kplex", "scan", "--order", "4", "--k", "1,2", "--jobs", "2"});
    CHECK(scan.code == cli::kExitYes);
    CHECK(scan.out.find("payload plex_reports order=4") != std::string::npos);
    CHECK(round_trip({"oracle", "enum", "--order", "3", "--list"}).out.find("note count 12") != std::string::npos);
    auto count = round_trip({"oracle", "enum", "--order", "4", "--reduced"});
    CHECK(cli::text_to_json(count.out)["payload"]["count"] == 4);
    auto ways = round_trip({"oracle", "complete", write_temp("e", "1 1 1\n.\n"), "--n", "3", "--count"});
    CHECK(cli::text_to_json(ways.out)["payload"]["count"] == 12);
}

TEST_CASE("the same seed gives the same square")
{
    CHECK(run({"gen", "square", "--order", "6", "--seed", "3"}).out ==
          run({"gen", "square", "--order", "6", "--seed", "3"}).out);
}

TEST_CASE("exit codes for bad input")
{
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == cli::kExitInput);
    CHECK(run({"complete"}).code == cli::kExitInput);
    CHECK(run({"complete", "/nonexistent/file", "--n", "3"}).code == cli::kExitInput);
    auto bad = write_temp("bad", "2 2 2\n1 1\n. .\n");
    auto r = run({"complete", bad, "--n", "3"});
    CHECK(r.code == cli::kExitInput);
    CHECK(r.err.find("error") != std::string::npos);
    auto a = write_temp("a", fixtures::kSquareA);
    CHECK(run({"complete", a, "--n", "4"}).code == cli::kExitInput);
    CHECK(run({"check", "sat", a, "--target", "6,6"}).code == cli::kExitInput);
    CHECK(run({"complete", a, "--n", "x"}).code == cli::kExitInput);
}

TEST_CASE("command output is accepted as input")
{
    auto a = write_temp("a", fixtures::kSquareA);
    auto w = run({"check", "cruse", a, "--n", "8"});
    auto again = run({"complete", write_temp("w", w.out), "--n", "8"});
    CHECK(again.code == cli::kExitYes);
}

TEST_CASE("outcome rendering")
{
    cli::Outcome o{"yes", json{{"kind", "count"}, {"count", 3}}, std::nullopt, {{"z", 1}, {"a", 2}}};
    CHECK(cli::to_text(o) == "status yes\nnote a 2\nnote z 1\npayload count\n3\n");
    CHECK(cli::text_to_json(cli::to_text(o)) == cli::to_json(o));
    CHECK_THROWS_AS(cli::text_to_json("bogus line\n"), SyntaxError);
}
