#pragma once

#include "lns/expr.hpp"
#include "lns/lnscore.hpp"

namespace lns {

// Integer relative-error bounds. A (lo, hi) tolerance attached to rep z and a
// tracked value v certifies b^(z+lo) <= v <= b^(z+hi), closed on both ends
// (the exact case is exactly tolerance (0,0)).
struct Tolerance {
    Int lo;
    Int hi;

    Tolerance(Int lo_, Int hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo > hi) throw std::invalid_argument("Tolerance: requires lo <= hi");
    }

    friend bool operator==(const Tolerance& a, const Tolerance& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

struct TolRep {
    Rep rep;
    Tolerance tol;
};

// b^(z+lo) <= value <= b^(z+hi), exactly.
bool tol_holds(const Base& base, const TolRep& tr, const PosRational& value);

// Propagation rules. Soundness: if tol_holds for the operands against their
// tracked values, it holds for the result against the exact product /
// reciprocal / quotient / sum.
Tolerance tol_mult(const Tolerance& x, const Tolerance& y);
Tolerance tol_recip(const Tolerance& x);
Tolerance tol_div(const Tolerance& x, const Tolerance& y);

// Tight addition, anchored at the first operand:
//   z    = x.z + S(y.z - x.z)
//   T_LA = T_LX + S(y.z + T_LY - x.z - T_LX) - S(y.z - x.z)
//   T_HA = T_HX + S(y.z + T_HY - x.z - T_HX) - S(y.z - x.z) + 1
// Sound for all integer operand tolerances.
TolRep tol_add_tight(const SumTable& table, const TolRep& x, const TolRep& y);

// Loose addition bounds, usable with no knowledge of the representations:
//   (min(T_LX, T_LY), max(T_HX, T_HY + 1)), x being the first operand.
// Note the rule is order-sensitive, and its upper bound does NOT always
// contain the tight bound (see the documented counterexamples in the tests).
Tolerance tol_add_loose(const Tolerance& x, const Tolerance& y);

enum class AddMode { Tight, Loose };

// How literals receive their initial tolerance:
//   ByExactness: (0,0) when the literal is an exact power of b, else (0,1)
//                (floor conversion gives b^z <= v < b^(z+1)).
//   AlwaysUnit:  (0,1) on every leaf, matching certification of programs
//                whose inputs are all treated as floor-converted.
enum class LeafTolerance { ByExactness, AlwaysUnit };

// Per-addition observations for sweeps that compare the two addition rules.
struct CertifyStats {
    unsigned long add_nodes = 0;
    unsigned long containment_violations = 0;  // loose interval fails to contain tight
    std::string first_violation;
};

struct Certificate {
    TolRep rep;
    PosRational value;  // the exact rational value of the tree
    bool holds;         // tol_holds(rep, value); a loud FAIL at the CLI surface
};

// Bottom-up certified evaluation: literals convert via floor_log_fast with
// the leaf policy's tolerance; internal nodes apply the Level-1 op and the
// matching propagation rule; the exact rational value rides along and the
// final interval claim is checked exactly.
Certificate certify_expression(const SumTable& table, const Expr& expr, AddMode mode,
                               LeafTolerance leaf = LeafTolerance::ByExactness,
                               CertifyStats* stats = nullptr);

}  // namespace lns
