#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lns/cli_commands.hpp"

namespace {

lns::Int parse_int_arg(const std::string& s, const char* what) {
    try {
        return lns::Int(s, 10);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a decimal integer: '" + s + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact logarithmic number system toolkit over rational bases"};
    app.require_subcommand(1);

    std::string p, q;
    auto add_base = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "base numerator P")->required();
        cmd->add_option("--q", q, "base denominator Q")->required();
    };

    std::optional<std::string> out_path;
    auto* gen = app.add_subcommand(
        "gen-table", "Build the quantized-addition table and emit it as a file");
    add_base(gen);
    gen->add_option("--out", out_path, "write the table here instead of stdout");

    std::string conv_n, conv_d;
    auto* conv = app.add_subcommand("convert", "Floor-log conversion of a rational n/d");
    conv->add_option("n", conv_n, "numerator")->required();
    conv->add_option("d", conv_d, "denominator")->required();
    add_base(conv);

    std::uint64_t seed = 0;
    auto* ver = app.add_subcommand(
        "verify", "Build the table, re-check axioms (1)-(5) and run property sweeps");
    add_base(ver);
    ver->add_option("--seed", seed, "seed for the randomized op spot-check");

    std::string expr, mode = "tight";
    std::optional<std::string> min_s, max_s;
    auto* ev = app.add_subcommand(
        "eval", "Certify an expression (literals, + * /) with tolerance tracking");
    ev->add_option("expr", expr, "expression, e.g. \"3/2*3/2+1\"")->required();
    add_base(ev);
    ev->add_option("--mode", mode, "addition tolerance rule")
        ->check(CLI::IsMember({"tight", "loose"}));
    ev->add_option("--min", min_s, "smallest in-range representation (enables clipping)");
    ev->add_option("--max", max_s, "largest in-range representation (enables clipping)");

    std::string xn, xd;
    auto* demo = app.add_subcommand(
        "demo-exp", "Certify the cubic Taylor polynomial of e^x in both association orders");
    demo->add_option("x_num", xn, "input numerator")->required();
    demo->add_option("x_den", xd, "input denominator")->required();
    add_base(demo);

    bool force = false;
    auto* bench = app.add_subcommand(
        "bench-table", "Time fast table construction against the naive conversion loop");
    add_base(bench);
    bench->add_flag("--force", force, "run the naive loop even past its work budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return lns::cli::kUsageError;
    }

    try {
        using namespace lns::cli;
        if (*gen)
            return cmd_gen_table({parse_int_arg(p, "--p"), parse_int_arg(q, "--q"), out_path},
                                 std::cout, std::cerr);
        if (*conv)
            return cmd_convert({parse_int_arg(conv_n, "n"), parse_int_arg(conv_d, "d"),
                                parse_int_arg(p, "--p"), parse_int_arg(q, "--q")},
                               std::cout, std::cerr);
        if (*ver)
            return cmd_verify({parse_int_arg(p, "--p"), parse_int_arg(q, "--q"), seed},
                              std::cout, std::cerr);
        if (*ev) {
            EvalOptions o{expr, parse_int_arg(p, "--p"), parse_int_arg(q, "--q"),
                          mode == "loose" ? lns::AddMode::Loose : lns::AddMode::Tight,
                          std::nullopt, std::nullopt};
            if (min_s) o.min = parse_int_arg(*min_s, "--min");
            if (max_s) o.max = parse_int_arg(*max_s, "--max");
            return cmd_eval(o, std::cout, std::cerr);
        }
        if (*demo)
            return cmd_demo_exp({parse_int_arg(xn, "x_num"), parse_int_arg(xd, "x_den"),
                                 parse_int_arg(p, "--p"), parse_int_arg(q, "--q")},
                                std::cout, std::cerr);
        if (*bench)
            return cmd_bench_table({parse_int_arg(p, "--p"), parse_int_arg(q, "--q"), force},
                                   std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return lns::cli::kUsageError;
    }
    return lns::cli::kUsageError;  // unreachable: a subcommand is required
}
