#include "latinext/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "latinext/cruse.hpp"
#include "latinext/frequency.hpp"
#include "latinext/io.hpp"
#include "latinext/kplex.hpp"
#include "latinext/oracle.hpp"
#include "latinext/saturated.hpp"

namespace latinext::cli {

using nlohmann::json;

// ============================================================================
// Outcome rendering
// ============================================================================

namespace {

const char* kind_name(BoundKind k) { return k == BoundKind::AtLeast ? "at_least" : "at_most"; }

json with_kind(json j, const std::string& kind)
{
    j["kind"] = kind;
    return j;
}

json rectangle_payload(const PartialLatinRectangle& p, const std::string& kind = "rectangle")
{
    return with_kind(latinext::to_json(p), kind);
}

json freq_rect_payload(const FrequencyRectangle& r, const Partition& lambda)
{
    auto j = with_kind(latinext::to_json(r), "frequency_rectangle");
    j["lambda"] = lambda.parts();
    return j;
}

json freq_square_payload(const FrequencySquare& f)
{
    return with_kind(latinext::to_json(f), "frequency_square");
}

Grid<int> grid_from_json(const json& g, int rows, int cols)
{
    Grid<int> out(rows, cols, kEmpty);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const auto& v = g.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
            out(i, j) = v.is_null() ? kEmpty : v.get<int>() - 1;
        }
    return out;
}

/// Payload body in the text form.
std::string payload_body(const json& p)
{
    const auto kind = p.at("kind").get<std::string>();
    if (kind == "rectangle" || kind == "square") return serialize(rectangle_from_json(p));
    if (kind == "frequency_rectangle") {
        Partition mu(p.at("mu").get<std::vector<int>>());
        const int r = p.at("rows").get<int>(), s = p.at("cols").get<int>();
        FrequencyRectangle rect(mu, grid_from_json(p.at("grid"), r, s));
        return serialize(rect, Partition(p.at("lambda").get<std::vector<int>>()));
    }
    if (kind == "frequency_square") {
        const int n = p.at("order").get<int>();
        return serialize(FrequencySquare(Partition(p.at("lambda").get<std::vector<int>>()),
                                         grid_from_json(p.at("grid"), n, n)));
    }
    std::ostringstream o;
    if (kind == "types") {
        for (const auto& t : p.at("types")) o << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    } else if (kind == "plex_reports") {
        for (const auto& r : p.at("reports")) {
            o << r.at("square_index") << ' ' << r.at("k") << ' ' << r.at("m") << ' '
              << (r.at("found").get<bool>() ? "yes" : "no");
            if (!r.at("cells").is_null())
                for (const auto& c : r.at("cells")) o << ' ' << c[0] << ',' << c[1];
            o << '\n';
        }
    } else if (kind == "cells") {
        bool first = true;
        for (const auto& c : p.at("cells")) {
            o << (first ? "" : " ") << c[0] << ',' << c[1];
            first = false;
        }
        o << '\n';
    } else if (kind == "count") {
        o << p.at("count") << '\n';
    } else if (kind == "squares") {
        for (const auto& q : p.at("squares")) o << serialize(rectangle_from_json(q));
    } else {
        throw std::logic_error("unknown payload kind " + kind);
    }
    return o.str();
}

/// Scalar members other than kind, printed on the payload header line.
std::vector<std::string> header_keys(const std::string& kind)
{
    if (kind == "plex_reports") return {"order"};
    if (kind == "cells") return {"k"};
    return {};
}

} // namespace

json to_json(const Outcome& outcome)
{
    json out;
    out["status"] = outcome.status;
    out["payload"] = outcome.payload ? *outcome.payload : json(nullptr);
    out["diagnostics"] = outcome.diagnostics ? latinext::to_json(*outcome.diagnostics) : json(nullptr);
    out["notes"] = json::object();
    for (const auto& [k, v] : outcome.notes) out["notes"][k] = v;
    return out;
}

std::string to_text(const Outcome& outcome)
{
    std::ostringstream o;
    o << "status " << outcome.status << '\n';
    if (outcome.diagnostics)
        for (const auto& c : outcome.diagnostics->items) {
            o << "condition " << c.id << ' ' << kind_name(c.kind) << " attained=" << c.attained
              << " bound=" << c.bound << " margin=" << c.margin()
              << " satisfied=" << (c.satisfied() ? "yes" : "no") << " index=";
            if (c.index < 0) o << '-';
            else o << c.index + 1;
            o << '\n';
        }
    for (const auto& [k, v] : outcome.notes) o << "note " << k << ' ' << v << '\n';
    if (outcome.payload) {
        const auto& p = *outcome.payload;
        const auto kind = p.at("kind").get<std::string>();
        o << "payload " << kind;
        for (const auto& key : header_keys(kind)) o << ' ' << key << '=' << p.at(key);
        o << '\n' << payload_body(p);
    }
    return o.str();
}

// ----------------------------------------------------------------------------

namespace {

std::int64_t parse_i64(const std::string& s)
{
    size_t used = 0;
    auto v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
}

std::string after_eq(const std::string& token, const std::string& key)
{
    if (token.rfind(key + "=", 0) != 0) throw SyntaxError(0, token, "expected " + key + "=...");
    return token.substr(key.size() + 1);
}

json body_to_json(const std::string& kind, const json& header, const std::string& body)
{
    if (kind == "rectangle" || kind == "square") return rectangle_payload(parse_rectangle(body), kind);
    if (kind == "frequency_rectangle") {
        auto in = parse_frequency(body);
        return freq_rect_payload(in.rect, in.lambda);
    }
    if (kind == "frequency_square") {
        auto in = parse_frequency(body);
        return freq_square_payload(FrequencySquare(in.lambda, in.rect.cells()));
    }

    json p = header;
    p["kind"] = kind;
    auto lines = tokenize(body);
    if (kind == "types") {
        p["types"] = json::array();
        for (const auto& l : lines)
            p["types"].push_back({parse_i64(l.tokens.at(0)), parse_i64(l.tokens.at(1)), parse_i64(l.tokens.at(2))});
    } else if (kind == "plex_reports") {
        p["reports"] = json::array();
        for (const auto& l : lines) {
            json r;
            r["square_index"] = parse_i64(l.tokens.at(0));
            r["n"] = header.at("order");
            r["k"] = parse_i64(l.tokens.at(1));
            r["m"] = parse_i64(l.tokens.at(2));
            const bool found = l.tokens.at(3) == "yes";
            r["found"] = found;
            json cells = found ? json::array() : json(nullptr);
            for (size_t i = 4; i < l.tokens.size(); ++i) {
                auto comma = l.tokens[i].find(',');
                cells.push_back({parse_i64(l.tokens[i].substr(0, comma)), parse_i64(l.tokens[i].substr(comma + 1))});
            }
            r["cells"] = cells;
            p["reports"].push_back(r);
        }
    } else if (kind == "cells") {
        p["cells"] = json::array();
        for (const auto& l : lines)
            for (const auto& tok : l.tokens) {
                auto comma = tok.find(',');
                p["cells"].push_back({parse_i64(tok.substr(0, comma)), parse_i64(tok.substr(comma + 1))});
            }
    } else if (kind == "count") {
        p["count"] = parse_i64(lines.at(0).tokens.at(0));
    } else if (kind == "squares") {
        p["squares"] = json::array();
        size_t i = 0;
        while (i < lines.size()) {
            const int rows = static_cast<int>(parse_i64(lines[i].tokens.at(0)));
            std::string block;
            for (int q = 0; q <= rows; ++q, ++i) {
                for (const auto& tok : lines.at(i).tokens) block += tok + ' ';
                block += '\n';
            }
            p["squares"].push_back(latinext::to_json(parse_rectangle(block)));
        }
    } else {
        throw SyntaxError(0, kind, "unknown payload kind");
    }
    return p;
}

} // namespace

json text_to_json(std::string_view text)
{
    json out;
    out["payload"] = nullptr;
    out["diagnostics"] = nullptr;
    out["notes"] = json::object();

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        std::vector<std::string> tok{std::istream_iterator<std::string>(ls), {}};
        if (head == "status") {
            out["status"] = tok.at(0);
        } else if (head == "condition") {
            if (out["diagnostics"].is_null()) out["diagnostics"] = json::array();
            auto idx = after_eq(tok.at(6), "index");
            out["diagnostics"].push_back({{"id", tok.at(0)},
                                          {"kind", tok.at(1)},
                                          {"attained", parse_i64(after_eq(tok.at(2), "attained"))},
                                          {"bound", parse_i64(after_eq(tok.at(3), "bound"))},
                                          {"margin", parse_i64(after_eq(tok.at(4), "margin"))},
                                          {"satisfied", after_eq(tok.at(5), "satisfied") == "yes"},
                                          {"index", idx == "-" ? json(nullptr) : json(parse_i64(idx))}});
        } else if (head == "note") {
            out["notes"][tok.at(0)] = parse_i64(tok.at(1));
        } else if (head == "payload") {
            json header = json::object();
            for (size_t i = 1; i < tok.size(); ++i) {
                auto eq = tok[i].find('=');
                header[tok[i].substr(0, eq)] = parse_i64(tok[i].substr(eq + 1));
            }
            std::string body{std::istreambuf_iterator<char>(in), {}};
            out["payload"] = body_to_json(tok.at(0), header, body);
            break;
        } else {
            throw SyntaxError(0, head, "unexpected line in command output");
        }
    }
    return out;
}

// ============================================================================
// Commands
// ============================================================================

namespace {

/// Thrown when a computed payload fails its own re-validation.
class InternalCheckFailed : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

void ensure(bool ok, const std::string& what)
{
    if (!ok) throw InternalCheckFailed("re-validation failed: " + what);
}

// Output of another command is accepted as input: its payload body is used.
std::string strip_outcome(std::string text)
{
    if (text.rfind("status ", 0) != 0) return text;
    auto at = text.find("\npayload ");
    if (at == std::string::npos) throw SyntaxError(1, "status", "command output without a payload");
    auto body = text.find('\n', at + 1);
    return body == std::string::npos ? std::string() : text.substr(body + 1);
}

std::string read_input(const std::string& path)
{
    if (path == "-") return strip_outcome({std::istreambuf_iterator<char>(std::cin), {}});
    std::ifstream f(path);
    if (!f) throw Error("cannot read " + path);
    return strip_outcome({std::istreambuf_iterator<char>(f), {}});
}

FrequencyInput read_frequency(const std::string& path, const std::vector<int>& lambda_override)
{
    auto in = parse_frequency(read_input(path));
    if (lambda_override.empty()) return in;
    return {in.rect, Partition(lambda_override)};
}

SaturationTarget as_target(const std::vector<int>& v, const char* flag)
{
    if (v.size() != 3) throw Error(std::string(flag) + " expects three integers R,S,T");
    return {v[0], v[1], v[2]};
}

LatinSquare read_square(const std::string& path)
{
    auto p = parse_rectangle(read_input(path));
    if (p.rows() != p.cols() || p.cols() != p.symbols() || p.entry_count() != p.rows() * p.cols())
        throw ValidationError("expected a full latin square of type (n,n,n)");
    return LatinSquare(p.cells());
}

Outcome cmd_check_cruse(const std::string& file, int n)
{
    auto p = parse_rectangle(read_input(file));
    auto report = check_conditions(p, n);
    auto witness = find_witness(p, n);
    if (!witness) return {"no", std::nullopt, report, {}};
    auto wr = check_conditions(*witness, n);
    ensure(wr.all_satisfied() && p.is_extended_by(*witness), "witness");
    return {"yes", rectangle_payload(*witness), wr, {}};
}

Outcome cmd_complete(const std::string& file, int n)
{
    auto p = parse_rectangle(read_input(file));
    auto report = check_conditions(p, n);
    auto l = complete(p, n);
    if (!l) return {"no", std::nullopt, report, {}};
    ensure(l->order() == n && p.is_extended_by(l->as_partial()), "completion");
    return {"completed", rectangle_payload(l->as_partial(), "square"), report, {}};
}

Outcome cmd_check_freq(const std::string& file, int n, const std::vector<int>& lambda)
{
    auto in = read_frequency(file, lambda);
    auto report = check_freq_conditions(in.rect, in.lambda, n);
    auto witness = find_freq_witness(in.rect, in.lambda, n);
    if (!witness) return {"no", std::nullopt, report, {}};
    auto wr = check_freq_conditions(*witness, in.lambda, n);
    ensure(wr.all_satisfied() && in.rect.is_extended_by(witness->cells()), "frequency witness");
    return {"yes", freq_rect_payload(*witness, in.lambda), wr, {}};
}

Outcome cmd_freq_complete(const std::string& file, int n, const std::vector<int>& lambda, bool relaxed)
{
    auto in = read_frequency(file, lambda);
    auto report = check_freq_conditions(in.rect, in.lambda, n);
    auto f = relaxed ? complete_frequency_relaxed(in.rect, in.lambda, n)
                     : complete_frequency(in.rect, in.lambda, n);
    if (!f) return {"no", std::nullopt, report, {}};
    ensure(f->order() == n && in.rect.is_extended_by(f->cells()), "frequency completion");
    return {"completed", freq_square_payload(*f), report, {}};
}

Outcome cmd_check_sat(const std::string& file, const SaturationTarget& target)
{
    auto p = parse_rectangle(read_input(file));
    require_target(p, target);
    auto witness = find_sat_witness(p, target);
    if (witness) {
        auto fg = find_fg(*witness, target);
        ensure(fg.has_value(), "f,g-representatives");
        auto report = check_sat_conditions(*witness, target, *fg);
        ensure(report.all_satisfied() && p.is_extended_by(*witness), "saturation witness");
        return {"yes", rectangle_payload(*witness), report, {}};
    }
    Grid<int> padded(target.R, p.cols(), kEmpty);
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) padded(i, j) = p.at(i, j);
    PartialLatinRectangle base(p.symbols(), std::move(padded));
    auto fg = find_fg(base, target);
    if (!fg) fg = FGAssignment::from_chosen(p.symbols(), std::vector<std::vector<int>>(static_cast<size_t>(target.R)));
    return {"no", std::nullopt, check_sat_conditions(base, target, *fg), {}};
}

Outcome cmd_saturate(const std::string& file, const SaturationTarget& target)
{
    auto p = parse_rectangle(read_input(file));
    auto z = saturate_any(p, target);
    if (!z) return {"no", std::nullopt, std::nullopt, {}};
    ensure(is_saturated(*z) && p.is_extended_by(*z) && z->rows() == target.R && z->cols() == target.S &&
               z->symbols() == target.T,
           "saturated rectangle");
    return {"completed", rectangle_payload(*z), std::nullopt, {{"entries", z->entry_count()}}};
}

Outcome cmd_sat_types(const std::string& file, const SaturationTarget& caps, int jobs)
{
    auto p = parse_rectangle(read_input(file));
    auto types = saturable_types(p, caps, jobs);
    json list = json::array();
    for (auto t : types) list.push_back({t.R, t.S, t.T});
    return {"yes", json{{"kind", "types"}, {"types", list}}, std::nullopt,
            {{"count", static_cast<std::int64_t>(types.size())}}};
}

Outcome cmd_kplex_find(const std::string& file, int k, std::optional<int> m)
{
    auto l = read_square(file);
    const int n = l.order();
    const int size = m ? *m : k * (n - k);
    auto cells = find_partial_kplex(l, k, size);
    if (!cells) return {"no", std::nullopt, std::nullopt, {{"m", size}}};
    ensure(is_partial_kplex(l, *cells, k) && static_cast<int>(cells->size()) == size, "partial k-plex");
    json list = json::array();
    for (auto c : *cells) list.push_back({c.row + 1, c.col + 1});
    return {"yes", json{{"kind", "cells"}, {"k", k}, {"cells", list}}, std::nullopt, {{"m", size}}};
}

Outcome cmd_kplex_scan(int order, std::vector<int> ks, int jobs)
{
    if (ks.empty())
        for (int k = 1; k <= order; ++k) ks.push_back(k);
    for (int k : ks)
        if (k < 1 || k > order) throw Error("--k values must lie in 1..order");
    auto reports = conjecture_scan(order, ks, jobs);
    auto squares = reduced_squares(order);
    json list = json::array();
    std::int64_t missing = 0;
    for (const auto& r : reports) {
        if (r.found)
            ensure(is_partial_kplex(squares[static_cast<size_t>(r.square_index)], *r.cells, r.k), "scan report");
        missing += !r.found;
        list.push_back(latinext::to_json(r));
    }
    return {missing ? "no" : "yes", json{{"kind", "plex_reports"}, {"order", order}, {"reports", list}},
            std::nullopt,
            {{"squares", static_cast<std::int64_t>(squares.size())}, {"not_found", missing}}};
}

Outcome cmd_kplex_embed(const std::string& file, int k)
{
    auto l = read_square(file);
    const int n = l.order();
    auto big = quasi_embed(l, k);
    const std::int64_t bound = n * n - k * (n - k);
    if (!big) return {"no", std::nullopt, std::nullopt, {{"agreement_bound", bound}}};
    const int agree = agreement(l, *big);
    ensure(big->order() == n + k && agree >= bound, "quasi-embedding");
    return {"completed", rectangle_payload(big->as_partial(), "square"), std::nullopt,
            {{"agreement", agree}, {"agreement_bound", bound}}};
}

Outcome cmd_oracle_complete(const std::string& file, int n, bool count)
{
    auto p = parse_rectangle(read_input(file));
    if (count) {
        auto c = oracle::count_completions(p, n);
        return {c ? "yes" : "no", json{{"kind", "count"}, {"count", c}}, std::nullopt, {}};
    }
    return {oracle::brute_complete(p, n) ? "yes" : "no", std::nullopt, std::nullopt, {}};
}

Outcome cmd_oracle_freq(const std::string& file, int n, const std::vector<int>& lambda)
{
    auto in = read_frequency(file, lambda);
    require_compatible(in.rect, in.lambda, n);
    return {oracle::brute_freq_complete(in.rect, in.lambda, n) ? "yes" : "no", std::nullopt, std::nullopt, {}};
}

Outcome cmd_oracle_enum(int order, bool reduced, bool list)
{
    oracle::EnumerationStream stream(order, reduced);
    json squares = json::array();
    while (auto l = stream.next())
        if (list) squares.push_back(latinext::to_json(*l));
    const auto count = static_cast<std::int64_t>(stream.yielded());
    if (list) return {"yes", json{{"kind", "squares"}, {"squares", squares}}, std::nullopt, {{"count", count}}};
    return {"yes", json{{"kind", "count"}, {"count", count}}, std::nullopt, {}};
}

Outcome cmd_gen_square(int order, std::uint64_t seed)
{
    if (order < 1 || order > 64) throw Error("--order must lie in 1..64");
    std::mt19937_64 rng(seed);
    auto base = cyclic_square(order);
    std::vector<int> pr(static_cast<size_t>(order)), pc(pr), ps(pr);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::iota(ps.begin(), ps.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    std::shuffle(ps.begin(), ps.end(), rng);
    Grid<int> g(order, order, kEmpty);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            g(pr[static_cast<size_t>(i)], pc[static_cast<size_t>(j)]) = ps[static_cast<size_t>(base.at(i, j))];
    return {"completed", rectangle_payload(LatinSquare(std::move(g)).as_partial(), "square"), std::nullopt, {}};
}

int exit_code(const std::string& status)
{
    return status == "no" ? kExitNo : kExitYes;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Completion and embedding of partial latin rectangles, frequency squares and k-plexes.",
                 "latinext"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::uint64_t seed = 1;
    int jobs = 1;
    app.add_flag("--json", as_json, "Print the outcome as JSON");
    app.add_option("--seed", seed, "Seed for randomized generators");
    app.add_option("--jobs", jobs, "Worker threads for scans")->check(CLI::PositiveNumber);

    std::string file;
    int n = 0, k = 0, order = 0;
    std::optional<int> m;
    std::vector<int> lambda, target, caps, ks;
    bool count = false, reduced = false, list = false, relaxed = false;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        auto* sub = parent->add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Input file, '-' for stdin")->required(); };
    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "Order of the square")->required()->check(CLI::PositiveNumber); };
    auto add_lambda = [&](CLI::App* sub) {
        sub->add_option("--lambda", lambda, "Target partition, overriding the file")->delimiter(',');
    };

    auto* check = leaf(&app, "check", "Decide a completion condition and print a witness");
    check->require_subcommand(1);
    auto* check_cruse = leaf(check, "cruse", "Completion to a latin square of order n");
    add_file(check_cruse);
    add_n(check_cruse);
    auto* check_freq = leaf(check, "freq", "Completion to a frequency square");
    add_file(check_freq);
    add_n(check_freq);
    add_lambda(check_freq);
    auto* check_sat = leaf(check, "sat", "Extension to a saturated rectangle");
    add_file(check_sat);
    check_sat->add_option("--target", target, "Target type R,S,T with R,S <= T")->delimiter(',')->required();

    auto* complete_cmd = leaf(&app, "complete", "Complete a partial latin rectangle to order n");
    add_file(complete_cmd);
    add_n(complete_cmd);

    auto* freq = leaf(&app, "freq", "Frequency squares");
    freq->require_subcommand(1);
    auto* freq_complete = leaf(freq, "complete", "Complete a partial F-rectangle");
    add_file(freq_complete);
    add_n(freq_complete);
    add_lambda(freq_complete);
    freq_complete->add_flag("--relaxed", relaxed, "Retry with mu raised to lambda");

    auto* saturate_cmd = leaf(&app, "saturate", "Extend to a saturated rectangle of type R,S,T");
    add_file(saturate_cmd);
    saturate_cmd->add_option("--target", target, "Target type R,S,T")->delimiter(',')->required();

    auto* sat = leaf(&app, "sat", "Saturation scans");
    sat->require_subcommand(1);
    auto* sat_types = leaf(sat, "types", "List saturable types up to the caps");
    add_file(sat_types);
    sat_types->add_option("--caps", caps, "Largest R,S,T to scan")->delimiter(',')->required();

    auto* kplex = leaf(&app, "kplex", "Partial k-plexes");
    kplex->require_subcommand(1);
    auto* kplex_find = leaf(kplex, "find", "Find a partial k-plex in a latin square");
    add_file(kplex_find);
    kplex_find->add_option("--k", k, "Multiplicity bound")->required();
    kplex_find->add_option("--m", m, "Number of cells (default k(n-k))");
    auto* kplex_scan = leaf(kplex, "scan", "Scan reduced squares for partial k-plexes of order k(n-k)");
    kplex_scan->add_option("--order", order, "Order of the squares")->required()->check(CLI::Range(1, 7));
    kplex_scan->add_option("--k", ks, "Values of k (default 1..order)")->delimiter(',');
    auto* kplex_embed = leaf(kplex, "embed", "Quasi-embed a latin square in order n+k");
    add_file(kplex_embed);
    kplex_embed->add_option("--k", k, "Order increase")->required();

    auto* orc = leaf(&app, "oracle", "Brute-force reference answers");
    orc->require_subcommand(1);
    auto* orc_complete = leaf(orc, "complete", "Backtracking completion to order n");
    add_file(orc_complete);
    add_n(orc_complete);
    orc_complete->add_flag("--count", count, "Count all completions");
    auto* orc_freq = leaf(orc, "freq", "Backtracking frequency completion");
    add_file(orc_freq);
    add_n(orc_freq);
    add_lambda(orc_freq);
    auto* orc_enum = leaf(orc, "enum", "Enumerate latin squares");
    orc_enum->add_option("--order", order, "Order")->required()->check(CLI::Range(1, 6));
    orc_enum->add_flag("--reduced", reduced, "Only reduced squares");
    orc_enum->add_flag("--list", list, "Print the squares, not just the count");

    auto* gen = leaf(&app, "gen", "Random test data (uses --seed)");
    gen->require_subcommand(1);
    auto* gen_square = leaf(gen, "square", "Random latin square");
    gen_square->add_option("--order", order, "Order")->required();

    std::vector<std::string> argv_store{"latinext"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    Outcome outcome;
    try {
        if (check_cruse->parsed()) outcome = cmd_check_cruse(file, n);
        else if (check_freq->parsed()) outcome = cmd_check_freq(file, n, lambda);
        else if (check_sat->parsed()) outcome = cmd_check_sat(file, as_target(target, "--target"));
        else if (complete_cmd->parsed()) outcome = cmd_complete(file, n);
        else if (freq_complete->parsed()) outcome = cmd_freq_complete(file, n, lambda, relaxed);
        else if (saturate_cmd->parsed()) outcome = cmd_saturate(file, as_target(target, "--target"));
        else if (sat_types->parsed()) outcome = cmd_sat_types(file, as_target(caps, "--caps"), jobs);
        else if (kplex_find->parsed()) outcome = cmd_kplex_find(file, k, m);
        else if (kplex_scan->parsed()) outcome = cmd_kplex_scan(order, ks, jobs);
        else if (kplex_embed->parsed()) outcome = cmd_kplex_embed(file, k);
        else if (orc_complete->parsed()) outcome = cmd_oracle_complete(file, n, count);
        else if (orc_freq->parsed()) outcome = cmd_oracle_freq(file, n, lambda);
        else if (orc_enum->parsed()) outcome = cmd_oracle_enum(order, reduced, list);
        else if (gen_square->parsed()) outcome = cmd_gen_square(order, seed);
        else throw Error("no command given");
    } catch (const InternalCheckFailed& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Error& e) {
        if (as_json) out << json{{"status", "error"}, {"message", e.what()}}.dump() << '\n';
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    if (as_json) out << to_json(outcome).dump(2) << '\n';
    else out << to_text(outcome);
    return exit_code(outcome.status);
}

} // namespace latinext::cli
