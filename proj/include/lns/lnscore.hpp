#pragma once

#include <string>
#include <vector>

#include "lns/exactq.hpp"
#include "lns/logconv.hpp"

namespace lns {

// Level-1 representation: the integer floor(log_b(value)). Unbounded; Level 1
// has neither zero, underflow nor overflow.
struct Rep {
    Int z;
    friend bool operator==(const Rep& a, const Rep& b) { return a.z == b.z; }
    friend bool operator!=(const Rep& a, const Rep& b) { return a.z != b.z; }
};

// The quantized-addition table: st[z] = floor(log_b(b^z + 1)) for 0 <= z <= sez.
// A valid table satisfies:
//   axiom (1): 1 < q < p < 2q
//   axiom (2): 0 < sez
//   axiom (3): b^(sez+1) + 1 < b^(sez+2)
//   axiom (4): st(z) > 0 for 0 <= z <= sez
//   axiom (5): b^st(z) <= b^z + 1 < b^(st(z)+1) for 0 <= z <= sez
// Fields are plain so tests can materialize deliberately broken tables;
// build_table only returns tables that pass verify_axioms.
struct SumTable {
    Base base;
    Int sez;
    std::vector<Int> st;
};

struct AxiomReport {
    struct Item {
        bool pass = true;
        std::string detail;  // first counterexample on failure
    };
    Item axiom1, axiom2, axiom3, axiom4, axiom5;

    bool all_pass() const {
        return axiom1.pass && axiom2.pass && axiom3.pass && axiom4.pass && axiom5.pass;
    }
    std::string summary() const;
};

// Thrown by build_table and the table reader when a table fails verification.
struct AxiomError : std::runtime_error {
    explicit AxiomError(const std::string& what) : std::runtime_error(what) {}
};

// floor(log_b(q / (p - q))), the largest z with b^z + 1 distinguishable from
// b^z. Requires axiom (1); p - q < q then guarantees the argument exceeds 1.
Int sez_pq(const Base& base);

// floor(log_b(b^z + 1)) for one index, via floor_log_fast on (p^z + q^z) / q^z.
// Requires 0 <= z <= sez_pq(base).
Int st_pq(const Int& z, const Base& base);

// Builds the full table for a base and verifies all axioms before returning;
// throws AxiomError naming the violated axiom and witness index otherwise.
SumTable build_table(const Base& base);

// Re-checks axioms (1)-(5) exactly, independent of how the table was made.
// Failures are report content, not errors.
AxiomReport verify_axioms(const SumTable& table);

// The quantized addition logarithm S over all integers:
//   z < -sez       -> 0
//   -sez <= z < 0  -> z + st(-z)
//   0 <= z <= sez  -> st(z)
//   z > sez        -> z
// Satisfies b^S(z) <= b^z + 1 < b^(S(z)+1) and S(z) = S(-z) + z.
Int s_quantized(const SumTable& table, const Int& z);

// z exactly represents value iff value == b^z.
bool exact_rep(const Rep& z, const PosRational& value, const Base& base);

// Level-1 operations. Multiplication and division are exact on exact inputs;
// addition of exact inputs lands on floor(log_b) of the exact sum.
Rep mult_level_1(const Rep& x, const Rep& y);
Rep div_level_1(const Rep& x, const Rep& y);
Rep add_level_1(const SumTable& table, const Rep& x, const Rep& y);

// Property sweeps shared by the verify command and the acceptance suite.
// Each checks every z in [z_lo, z_hi], or an evenly spaced selection of at
// most cap values (always including the range ends, 0, +-1 and +-sez) when
// the range is larger than cap.
struct SweepReport {
    bool pass = true;
    unsigned long checked = 0;
    std::string first_failure;
};

// b^S(z) <= b^z + 1 < b^(S(z)+1), by exact comparison.
SweepReport check_sum_bound(const SumTable& table, const Int& z_lo, const Int& z_hi,
                            unsigned long cap);
// S(z) = S(-z) + z.
SweepReport check_reflection(const SumTable& table, const Int& z_lo, const Int& z_hi,
                             unsigned long cap);
// 0 <= S(z+1) - S(z) <= 1.
SweepReport check_first_difference(const SumTable& table, const Int& z_lo, const Int& z_hi,
                                   unsigned long cap);

}  // namespace lns
