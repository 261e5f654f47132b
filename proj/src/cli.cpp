#include "sclab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "sclab/combinatorics.hpp"
#include "sclab/io.hpp"
#include "sclab/witness.hpp"

namespace sclab::cli {

namespace {

unsigned parse_size(const std::string& text)
{
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &used);
    } catch (const std::exception&) {
        throw UsageError("expected a size, got \"" + text + "\"");
    }
    if (used != text.size() || v > 64)
        throw UsageError("expected a size between 0 and 64, got \"" + text + "\"");
    return static_cast<unsigned>(v);
}

std::uint64_t parse_budget(const std::string& text)
{
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || v == 0)
        throw UsageError("state budget must be a positive integer, got \"" + text + "\"");
    return v;
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void print_numbers(std::ostream& out, const std::vector<BigInt>& values, Format format)
{
    if (format == Format::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& v : values)
            arr.push_back(v.str());
        out << arr.dump() << '\n';
        return;
    }
    const char* sep = format == Format::csv ? "," : " ";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? sep : "") << values[i];
    out << '\n';
}

int run_count(const CliConfig& c, std::ostream& out)
{
    if (c.poly) {
        print_numbers(out, alpha_poly(c.n, c.p).coeffs(), c.format);
        return exit_code::ok;
    }
    print_numbers(out, {c.origin ? alpha_prime(c.n, c.p) : alpha(c.n, c.p)}, c.format);
    return exit_code::ok;
}

int run_enumerate(const CliConfig& c, std::ostream& out, std::ostream& err)
{
    std::uint64_t count = 0;
    bool first = true;
    enumerate_saturated(
        c.n, c.p,
        [&](const Tableau& t) {
            if (c.origin && !t.marked(0, 0))
                return;
            ++count;
            if (c.list) {
                if (!first)
                    out << '\n';
                out << to_text(t);
                first = false;
            }
        },
        c.guard);
    if (c.list)
        out << '\n';
    out << count << '\n';

    if (c.cross_check) {
        const BigInt expected = c.origin ? alpha_prime(c.n, c.p) : alpha(c.n, c.p);
        if (expected != count) {
            err << "cross-check failed: formula gives " << expected << '\n';
            return exit_code::verification_failed;
        }
        err << "cross-check: formula agrees\n";
    }
    return exit_code::ok;
}

int run_witness(const CliConfig& c, std::ostream& out)
{
    const WitnessTriple w = witness_triple(c.m, c.n, c.p);
    const std::pair<const char*, const Dfa*> parts[] = {{"A", &w.a}, {"B", &w.b}, {"C", &w.c}};
    if (c.to_stdout) {
        nlohmann::ordered_json doc;
        for (const auto& [name, dfa] : parts)
            doc[name] = io::to_json(*dfa);
        out << doc.dump(2) << '\n';
        return exit_code::ok;
    }
    std::filesystem::create_directories(c.out_dir);
    for (const auto& [name, dfa] : parts) {
        const auto path = std::filesystem::path(c.out_dir) / (std::string(name) + ".json");
        std::ofstream file(path);
        if (!file)
            throw UsageError("cannot write " + path.string());
        file << io::to_json(*dfa).dump(2) << '\n';
        out << path.string() << '\n';
    }
    return exit_code::ok;
}

void write_report(std::ostream& out, const VerificationReport& r, const CliConfig& c)
{
    switch (c.format) {
    case Format::csv:
        out << io::to_csv_row(r) << '\n';
        break;
    case Format::json:
        out << io::to_json(r, c.timing).dump() << '\n';
        break;
    case Format::table:
        out << "m=" << r.m << " n=" << r.n << " p=" << r.p << " op=" << r.op.name()
            << " computed=" << r.computed_sc << " predicted=" << r.predicted << ' '
            << (r.bound_only ? "bound" : "exact") << " accessible=" << r.accessible_count
            << " saturated=" << r.saturated_state_count;
        if (c.timing)
            out << " elapsed_ms=" << r.elapsed.count();
        out << ' ' << io::status_of(r) << '\n';
        break;
    }
}

int run_verify(const CliConfig& c, std::ostream& out, std::ostream& err)
{
    std::ofstream file;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file)
            throw UsageError("cannot write " + c.output);
    }
    std::ostream& sink = c.output.empty() ? out : file;

    if (c.format == Format::csv)
        sink << io::report_csv_header << '\n';
    bool all_passed = true;
    for (unsigned m : c.ms)
        for (unsigned n : c.ns)
            for (unsigned p : c.ps)
                for (BooleanOp op : c.ops) {
                    VerificationReport r = verify(m, n, p, op, c.budget);
                    write_report(sink, r, c);
                    sink.flush();
                    all_passed &= r.passed();
                }
    if (!all_passed)
        err << "verification FAILED\n";
    return all_passed ? exit_code::ok : exit_code::verification_failed;
}

int run_sequences(const CliConfig& c, std::ostream& out)
{
    std::vector<BigInt> values;
    if (c.sequence == "bell")
        values = bell(c.terms);
    else if (c.sequence == "rao")
        values = rao(c.terms);
    else if (c.sequence == "a296")
        values = a296(c.terms);
    else
        throw UsageError("unknown sequence \"" + c.sequence + "\" (bell, rao, a296)");
    print_numbers(out, values, c.format);
    return exit_code::ok;
}

int run_saturate(const CliConfig& c, std::ostream& out)
{
    out << to_text(saturate(parse_tableau(read_input(c.input))));
    return exit_code::ok;
}

int run_minimize(const CliConfig& c, std::ostream& out)
{
    const auto doc = io::parse_document(read_input(c.input));
    const Dfa dfa = io::is_nfa_document(doc) ? determinize(io::nfa_from_json(doc))
                                              : io::dfa_from_json(doc);
    const Dfa minimal = minimize(dfa);
    if (c.states_only)
        out << minimal.state_count() << '\n';
    else
        out << io::to_json(minimal).dump(2) << '\n';
    return exit_code::ok;
}

} // namespace

std::vector<unsigned> parse_range(const std::string& text)
{
    std::vector<unsigned> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_size(item));
            continue;
        }
        unsigned lo = parse_size(item.substr(0, dots));
        unsigned hi = parse_size(item.substr(dots + 2));
        if (lo > hi)
            throw UsageError("empty range \"" + item + "\"");
        for (unsigned v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    if (out.empty())
        throw UsageError("empty size list");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BooleanOp> parse_ops(const std::string& text)
{
    std::vector<BooleanOp> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (item == "nondegenerate") {
            for (auto op : non_degenerate_ops())
                out.push_back(op);
            continue;
        }
        auto op = BooleanOp::parse(item);
        if (!op)
            throw UsageError("unknown boolean operation \"" + item + "\"");
        out.push_back(*op);
    }
    if (out.empty())
        throw UsageError("empty operation list");
    return out;
}

std::optional<CliConfig> parse(const std::vector<std::string>& args, std::ostream& out,
                               const std::optional<std::string>& env_budget)
{
    CliConfig c;
    std::string format = "table";
    std::string m_text, n_text, p_text, op_text = "xor", budget_text;

    CLI::App app{"State complexity lab: saturated tableaux and catenation combined with "
                 "boolean operations",
                 "sc_lab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    auto* count = app.add_subcommand("count", "number of saturated n x p tableaux");
    count->add_option("n", c.n)->required();
    count->add_option("p", c.p)->required();
    count->add_flag("--poly", c.poly, "print the generating polynomial, lowest degree first");
    count->add_flag("--origin", c.origin, "count only tableaux with cell (0,0) marked");

    auto* enumerate = app.add_subcommand("enumerate", "brute-force count of saturated tableaux");
    enumerate->add_option("n", c.n)->required();
    enumerate->add_option("p", c.p)->required();
    enumerate->add_flag("--origin", c.origin, "only tableaux with cell (0,0) marked");
    enumerate->add_flag("--list", c.list, "print every tableau");
    enumerate->add_flag("--cross-check", c.cross_check, "compare with the closed formula");
    enumerate->add_option("--guard", c.guard, "maximum number of cells");

    auto* witness = app.add_subcommand("witness", "write the witness automata A, B, C");
    witness->add_option("m", c.m)->required();
    witness->add_option("n", c.n)->required();
    witness->add_option("p", c.p)->required();
    witness->add_option("--out-dir", c.out_dir, "directory receiving A.json, B.json, C.json");
    witness->add_flag("--stdout", c.to_stdout, "print one document instead of writing files");

    auto* verify_cmd = app.add_subcommand("verify", "confront computed and predicted complexities");
    verify_cmd->add_option("--m", m_text, "sizes of A: 3, 3..4 or 3,5")->required();
    verify_cmd->add_option("--n", n_text, "sizes of B")->required();
    verify_cmd->add_option("--p", p_text, "sizes of C")->required();
    verify_cmd->add_option("--op", op_text, "comma-separated operations, or nondegenerate");
    verify_cmd->add_option("--budget", budget_text, "state budget (default 2^22)");
    verify_cmd->add_option("--output", c.output, "write reports to this file");
    verify_cmd->add_flag("--timing", c.timing, "include elapsed time in reports");

    auto* sequences = app.add_subcommand("sequences", "print B_0..B_k, r_0..r_k or a_0..a_k");
    sequences->add_option("name", c.sequence, "bell, rao or a296")->required();
    sequences->add_option("k", c.terms)->required();

    auto* saturate_cmd = app.add_subcommand("saturate", "saturate a tableau given as X/. text");
    saturate_cmd->add_option("file", c.input, "input file, - for stdin");

    auto* minimize_cmd = app.add_subcommand("minimize", "minimize a DFA or NFA document");
    minimize_cmd->add_option("file", c.input, "input file, - for stdin");
    minimize_cmd->add_flag("--states", c.states_only, "print only the state count");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    c.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::table;
    if (count->parsed())
        c.command = Command::count;
    else if (enumerate->parsed())
        c.command = Command::enumerate;
    else if (witness->parsed())
        c.command = Command::witness;
    else if (sequences->parsed())
        c.command = Command::sequences;
    else if (saturate_cmd->parsed())
        c.command = Command::saturate;
    else if (minimize_cmd->parsed())
        c.command = Command::minimize;
    else {
        c.command = Command::verify;
        c.ms = parse_range(m_text);
        c.ns = parse_range(n_text);
        c.ps = parse_range(p_text);
        c.ops = parse_ops(op_text);
        if (!budget_text.empty())
            c.budget = parse_budget(budget_text);
        else if (env_budget && !env_budget->empty())
            c.budget = parse_budget(*env_budget);
    }
    return c;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    switch (config.command) {
    case Command::count:
        return run_count(config, out);
    case Command::enumerate:
        return run_enumerate(config, out, err);
    case Command::witness:
        return run_witness(config, out);
    case Command::verify:
        return run_verify(config, out, err);
    case Command::sequences:
        return run_sequences(config, out);
    case Command::saturate:
        return run_saturate(config, out);
    case Command::minimize:
        return run_minimize(config, out);
    }
    return exit_code::usage;
}

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_budget)
{
    try {
        auto config = parse(args, out, env_budget);
        if (!config)
            return exit_code::ok;
        return run(*config, out, err);
    } catch (const SizeError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::size;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
}

} // namespace sclab::cli
