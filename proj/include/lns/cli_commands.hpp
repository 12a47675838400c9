#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lns/tolerance.hpp"

namespace lns::cli {

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;  // an axiom or certified property failed
constexpr int kUsageError = 2;

struct GenTableOptions {
    Int p, q;
    std::optional<std::string> out;  // table goes to stdout when absent
};

struct ConvertOptions {
    Int n, d, p, q;
};

struct VerifyOptions {
    Int p, q;
    std::uint64_t seed = 0;
};

struct EvalOptions {
    std::string expr;
    Int p, q;
    AddMode mode = AddMode::Tight;
    std::optional<Int> min, max;  // both present enables Level-2 clipping
};

struct DemoExpOptions {
    Int x_num, x_den, p, q;
};

struct BenchTableOptions {
    Int p, q;
    bool force = false;
};

int cmd_gen_table(const GenTableOptions& opt, std::ostream& out, std::ostream& err);
int cmd_convert(const ConvertOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_demo_exp(const DemoExpOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bench_table(const BenchTableOptions& opt, std::ostream& out, std::ostream& err);

// The Taylor polynomial 1 + x + x^2/2 + x^3/6 as a Level-1 expression tree in
// the association order whose loose certificate is (-1,4):
//   add(div(x*x*x, 6), add(div(x*x, 2), add(x, 1)))
// and, when reversed, the order whose certificate is (-1,6):
//   add(1, add(x, add(div(x*x, 2), div(x*x*x, 6)))).
ExprPtr taylor_exp_tree(const PosRational& x, bool reversed);

}  // namespace lns::cli
