#include "wedgematch/cli.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wedgematch/bijections.hpp"
#include "wedgematch/enumeration.hpp"
#include "wedgematch/error.hpp"
#include "wedgematch/io.hpp"
#include "wedgematch/render.hpp"

namespace wedgematch::cli {

namespace {

// Unwritable output file.
class IoFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    int max_n = 0;  // 0: not given on the command line
};

int resolve_max_n(const Globals& g)
{
    if (g.max_n > 0)
        return g.max_n;
    if (const char* env = std::getenv("WEDGEMATCH_MAX_N"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (*end != '\0' || value < 1)
            throw ParseError(std::string("WEDGEMATCH_MAX_N must be a positive integer, got '") + env + "'");
        return static_cast<int>(value);
    }
    return kDefaultMaxN;
}

// [kind] input
Object read_operand(const std::vector<std::string>& operands)
{
    if (operands.size() == 1)
        return parse_object(operands[0]);
    if (operands.size() == 2)
        return parse_object(operands[1], parse_input_kind(operands[0]));
    throw ParseError("expected [kind] <input>");
}

std::string join_sizes(const std::vector<int>& sizes)
{
    std::string out;
    for (int s : sizes)
        out += (out.empty() ? "" : ",") + std::to_string(s);
    return out;
}

struct ConvertArgs {
    bool to_matching = false;
    bool to_path = false;
    std::string via = "Phi";
    std::vector<std::string> operands;
};

void write_object(std::ostream& out, const Object& object, bool json)
{
    if (const auto* m = std::get_if<Matching>(&object))
        out << (json ? matching_to_json(*m).dump() : format_matching(*m)) << '\n';
    else {
        const auto& p = std::get<WedgePath>(object);
        out << (json ? path_to_json(p).dump() : p.step_string()) << '\n';
    }
}

int cmd_convert(const ConvertArgs& args, const Globals& g, std::ostream& out)
{
    if (args.to_matching && args.to_path)
        throw ParseError("--to-matching and --to-path are exclusive");
    const Object input = read_operand(args.operands);
    const bool is_path = std::holds_alternative<WedgePath>(input);

    if (args.via == "phi") {
        if (is_path)
            throw ParseError("--via phi maps matchings to matchings; got a path");
        const auto& m = std::get<Matching>(input);
        write_object(out, args.to_path ? phi_inv(m) : phi(m), g.json);
        return kOk;
    }
    if (args.via != "psi" && args.via != "Phi")
        throw ParseError("--via must be psi, phi or Phi");
    const bool forward = args.to_matching || (!args.to_path && is_path);
    if (forward != is_path)
        throw ParseError(forward ? "--to-matching expects a path" : "--to-path expects a matching");
    const bool use_psi = args.via == "psi";
    if (forward) {
        const auto& p = std::get<WedgePath>(input);
        write_object(out, use_psi ? psi(p) : big_phi(p), g.json);
    } else {
        const auto& m = std::get<Matching>(input);
        write_object(out, use_psi ? psi_inv(m) : big_phi_inv(m), g.json);
    }
    return kOk;
}

int cmd_stats(const std::vector<std::string>& operands, const Globals& g, std::ostream& out)
{
    const Object input = read_operand(operands);
    nlohmann::ordered_json doc;
    if (const auto* m = std::get_if<Matching>(&input)) {
        std::vector<int> sizes;
        for (const auto& c : irreducible_components(*m))
            sizes.push_back(c.matching.size());
        doc = {{"kind", "matching"},
               {"n", m->size()},
               {"crossings", crossings(*m)},
               {"nestings", nestings(*m)},
               {"alignments", alignments(*m)},
               {"st", st_total(*m)},
               {"components", sizes}};
    } else {
        const auto& p = std::get<WedgePath>(input);
        std::vector<int> sizes;
        for (const WedgePath& c : components(p))
            sizes.push_back(c.size());
        doc = {{"kind", "path"},
               {"steps", p.step_string()},
               {"heights", path_to_json(p)},
               {"east", p.size()},
               {"north", north_steps(p)},
               {"south", south_steps(p)},
               {"final_south_run", final_south_run(p)},
               {"dyck", is_dyck(p)},
               {"components", sizes}};
    }
    if (g.json) {
        out << doc.dump() << '\n';
        return kOk;
    }
    for (const auto& [key, value] : doc.items()) {
        if (key == "kind")
            continue;
        out << key << ": ";
        if (value.is_array()) {
            std::vector<int> items;
            for (const auto& v : value)
                items.push_back(v.get<int>());
            out << join_sizes(items);
        } else if (value.is_string()) {
            out << value.get<std::string>();
        } else {
            out << value.dump();
        }
        out << '\n';
    }
    return kOk;
}

struct EnumerateArgs {
    int n = 0;
    std::string statistic;
    bool csv = false;
    bool triangle = false;
};

std::string row_text(const DistributionTable& t)
{
    std::string out;
    for (const auto& [k, c] : t.counts)
        out += (out.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(c);
    return out;
}

int cmd_enumerate(const EnumerateArgs& args, const Globals& g, std::ostream& out)
{
    const Statistic stat = parse_statistic(args.statistic);
    const int cap = resolve_max_n(g);
    if (args.n < 1)
        throw ParseError("enumerate needs n >= 1");
    std::vector<DistributionTable> tables;
    for (int n = args.triangle ? 1 : args.n; n <= args.n; ++n)
        tables.push_back(distribution(n, stat, cap));

    if (g.json) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& t : tables) {
            nlohmann::ordered_json counts = nlohmann::ordered_json::object();
            for (const auto& [k, c] : t.counts)
                counts[std::to_string(k)] = c;
            doc.push_back({{"n", t.n}, {"statistic", to_string(t.statistic)}, {"counts", counts}});
        }
        out << (args.triangle ? doc.dump() : doc.front().dump()) << '\n';
    } else if (args.csv) {
        out << (args.triangle ? "n,k,count\n" : "k,count\n");
        for (const auto& t : tables)
            for (const auto& [k, c] : t.counts)
                out << (args.triangle ? std::to_string(t.n) + "," : "") << k << ',' << c << '\n';
    } else if (args.triangle) {
        int max_k = 0;
        for (const auto& t : tables)
            max_k = std::max(max_k, t.counts.rbegin()->first);
        std::size_t width = 1;
        for (const auto& t : tables)
            for (const auto& [k, c] : t.counts)
                width = std::max(width, std::to_string(c).size());
        const int w = static_cast<int>(width) + 1;
        out << std::setw(3) << "n\\k";
        for (int k = 0; k <= max_k; ++k)
            out << std::setw(w) << k;
        out << '\n';
        for (const auto& t : tables) {
            out << std::setw(3) << t.n;
            for (const auto& [k, c] : t.counts)
                out << std::setw(w) << c;
            out << '\n';
        }
    } else {
        out << row_text(tables.front()) << '\n';
    }
    return kOk;
}

struct VerifyArgs {
    int n = 0;
    std::vector<std::string> claims;
    unsigned jobs = 0;
    std::size_t limit = 10;
    bool timing = false;
};

int cmd_verify(const VerifyArgs& args, const Globals& g, std::ostream& out)
{
    if (args.n < 1)
        throw ParseError("verify needs n >= 1");
    VerifyOptions options;
    options.max_n = resolve_max_n(g);
    options.jobs = args.jobs != 0 ? args.jobs : std::max(1u, std::thread::hardware_concurrency());
    options.counterexample_limit = args.limit;
    options.claims = args.claims;
    if (args.n > options.max_n)
        throw CapExceeded("size " + std::to_string(args.n) + " exceeds the enumeration cap "
                          + std::to_string(options.max_n));

    bool passed = true;
    nlohmann::ordered_json docs = nlohmann::ordered_json::array();
    for (int n = 1; n <= args.n; ++n) {
        const VerificationReport report = verify_all(n, options);
        passed = passed && report.passed();
        if (g.json)
            docs.push_back(nlohmann::ordered_json::parse(report_to_json(report)));
        else
            out << report_to_text(report, args.timing);
    }
    if (g.json)
        out << docs.dump(2) << '\n';
    return passed ? kOk : kCounterexample;
}

struct RenderArgs {
    std::vector<std::string> operands;  // target [kind] input
    std::string output;
};

int cmd_render(const RenderArgs& args, std::ostream& out)
{
    if (args.operands.size() < 2)
        throw ParseError("render expects <ascii|svg> [kind] <input>");
    const std::string& target = args.operands.front();
    if (target != "ascii" && target != "svg")
        throw ParseError("render target must be ascii or svg, got '" + target + "'");
    const Object object =
        read_operand(std::vector<std::string>(args.operands.begin() + 1, args.operands.end()));
    const std::string text = std::visit(
        [&](const auto& value) { return target == "svg" ? render_svg(value) : render_ascii(value); },
        object);
    if (args.output.empty() || args.output == "-") {
        out << text;
        return kOk;
    }
    std::ofstream file(args.output, std::ios::binary);
    if (!file || !(file << text) || !file.flush())
        throw IoFailure("cannot write '" + args.output + "'");
    return kOk;
}

// Scalar positionals, so CLI11 never splits a bracketed JSON operand.
struct OperandSlots {
    std::array<std::string, 3> slots;

    void attach(CLI::App* cmd, std::size_t count, const std::string& help)
    {
        for (std::size_t i = 0; i < count; ++i)
            cmd->add_option("operand" + std::to_string(i + 1), slots[i], i == 0 ? help : "")
                ->required(i == 0);
    }

    std::vector<std::string> values() const
    {
        std::vector<std::string> out;
        for (const auto& slot : slots)
            if (!slot.empty())
                out.push_back(slot);
        return out;
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Wedge paths and perfect matchings: conversion, statistics, enumeration, verification",
                 "wedgematch"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_option("--max-n", g.max_n, "Enumeration cap (default 7, or WEDGEMATCH_MAX_N)")
        ->check(CLI::PositiveNumber);

    ConvertArgs convert;
    auto* convert_cmd = app.add_subcommand("convert", "Map a path to a matching or back");
    convert_cmd->add_flag("--to-matching", convert.to_matching, "Path -> matching");
    convert_cmd->add_flag("--to-path", convert.to_path, "Matching -> path (phi: apply the inverse)");
    convert_cmd->add_option("--via", convert.via, "Map to apply: psi, phi or Phi (default)")
        ->check(CLI::IsMember({"psi", "phi", "Phi"}));
    OperandSlots convert_slots;
    convert_slots.attach(convert_cmd, 2, "[kind] input");

    OperandSlots stats_slots;
    auto* stats_cmd = app.add_subcommand("stats", "Statistics of a path or matching");
    stats_slots.attach(stats_cmd, 2, "[kind] input");

    EnumerateArgs enumerate;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Exact distribution of a statistic");
    enumerate_cmd->add_option("n", enumerate.n, "Size")->required();
    enumerate_cmd->add_option("statistic", enumerate.statistic,
                              "north_steps, nestings, crossings or st_total")
        ->required();
    enumerate_cmd->add_flag("--csv", enumerate.csv, "CSV with columns k,count");
    enumerate_cmd->add_flag("--triangle", enumerate.triangle, "All sizes 1..n as an aligned table");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check every claim for sizes 1..n");
    verify_cmd->add_option("n", verify.n, "Largest size")->required();
    verify_cmd->add_option("--claims", verify.claims, "Claim label prefixes")->delimiter(',');
    verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (default: all cores)");
    verify_cmd->add_option("--limit", verify.limit, "Counterexamples kept per claim");
    verify_cmd->add_flag("--timing", verify.timing, "Print elapsed time");

    RenderArgs render;
    auto* render_cmd = app.add_subcommand("render", "Draw a matching or path");
    OperandSlots render_slots;
    render_slots.attach(render_cmd, 3, "<ascii|svg> [kind] input");
    render_cmd->add_option("-o,--output", render.output, "Output file (default stdout)");

    for (auto* sub : {convert_cmd, stats_cmd, enumerate_cmd, verify_cmd, render_cmd})
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseFailure;
    }

    try {
        convert.operands = convert_slots.values();
        render.operands = render_slots.values();
        if (*convert_cmd)
            return cmd_convert(convert, g, out);
        if (*stats_cmd)
            return cmd_stats(stats_slots.values(), g, out);
        if (*enumerate_cmd)
            return cmd_enumerate(enumerate, g, out);
        if (*verify_cmd)
            return cmd_verify(verify, g, out);
        return cmd_render(render, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseFailure;
    } catch (const InvalidObject& e) {
        err << "invalid object: " << e.what() << '\n';
        return kInvalidObject;
    } catch (const CapExceeded& e) {
        err << "over cap: " << e.what() << '\n';
        return kOverCap;
    } catch (const IoFailure& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIoFailure;
    }
}

} // namespace wedgematch::cli
