#include "lns/tolerance.hpp"

namespace lns {

bool tol_holds(const Base& base, const TolRep& tr, const PosRational& value) {
    return in_closed_interval(value, base, tr.rep.z + tr.tol.lo, tr.rep.z + tr.tol.hi);
}

Tolerance tol_mult(const Tolerance& x, const Tolerance& y) {
    return Tolerance(x.lo + y.lo, x.hi + y.hi);
}

Tolerance tol_recip(const Tolerance& x) { return Tolerance(-x.hi, -x.lo); }

Tolerance tol_div(const Tolerance& x, const Tolerance& y) {
    return Tolerance(x.lo - y.hi, x.hi - y.lo);
}

TolRep tol_add_tight(const SumTable& table, const TolRep& x, const TolRep& y) {
    Int d = y.rep.z - x.rep.z;
    Int s_d = s_quantized(table, d);
    Int t_la = x.tol.lo + s_quantized(table, d + y.tol.lo - x.tol.lo) - s_d;
    Int t_ha = x.tol.hi + s_quantized(table, d + y.tol.hi - x.tol.hi) - s_d + 1;
    return TolRep{Rep{x.rep.z + s_d}, Tolerance(std::move(t_la), std::move(t_ha))};
}

Tolerance tol_add_loose(const Tolerance& x, const Tolerance& y) {
    Int hi_y = y.hi + 1;
    return Tolerance(std::min(x.lo, y.lo), std::max(x.hi, hi_y));
}

namespace {

struct Evaluated {
    TolRep tr;
    mpq_class value;
};

mpq_class to_mpq(const PosRational& v) {
    mpq_class q(v.num, v.den);
    q.canonicalize();
    return q;
}

Evaluated eval(const SumTable& table, const Expr& e, AddMode mode, LeafTolerance leaf,
               CertifyStats* stats) {
    switch (e.kind) {
        case Expr::Kind::Literal: {
            const PosRational& lit = *e.literal;
            Rep z{floor_log_fast(lit, table.base)};
            bool exact = exact_rep(z, lit, table.base);
            Tolerance tol = (leaf == LeafTolerance::ByExactness && exact) ? Tolerance(0, 0)
                                                                          : Tolerance(0, 1);
            return Evaluated{TolRep{z, std::move(tol)}, to_mpq(lit)};
        }
        case Expr::Kind::Mul: {
            Evaluated a = eval(table, *e.lhs, mode, leaf, stats);
            Evaluated b = eval(table, *e.rhs, mode, leaf, stats);
            return Evaluated{TolRep{mult_level_1(a.tr.rep, b.tr.rep),
                                    tol_mult(a.tr.tol, b.tr.tol)},
                             a.value * b.value};
        }
        case Expr::Kind::Div: {
            Evaluated a = eval(table, *e.lhs, mode, leaf, stats);
            Evaluated b = eval(table, *e.rhs, mode, leaf, stats);
            return Evaluated{TolRep{div_level_1(a.tr.rep, b.tr.rep),
                                    tol_div(a.tr.tol, b.tr.tol)},
                             a.value / b.value};
        }
        case Expr::Kind::Add: {
            Evaluated a = eval(table, *e.lhs, mode, leaf, stats);
            Evaluated b = eval(table, *e.rhs, mode, leaf, stats);
            TolRep tight = tol_add_tight(table, a.tr, b.tr);
            Tolerance loose = tol_add_loose(a.tr.tol, b.tr.tol);
            if (stats) {
                ++stats->add_nodes;
                if (loose.lo > tight.tol.lo || loose.hi < tight.tol.hi) {
                    ++stats->containment_violations;
                    if (stats->first_violation.empty())
                        stats->first_violation =
                            "x=(z=" + a.tr.rep.z.get_str() + ",(" + a.tr.tol.lo.get_str() + "," +
                            a.tr.tol.hi.get_str() + ")) y=(z=" + b.tr.rep.z.get_str() + ",(" +
                            b.tr.tol.lo.get_str() + "," + b.tr.tol.hi.get_str() + ")): tight (" +
                            tight.tol.lo.get_str() + "," + tight.tol.hi.get_str() + ") vs loose (" +
                            loose.lo.get_str() + "," + loose.hi.get_str() + ")";
                }
            }
            TolRep out = (mode == AddMode::Tight)
                             ? std::move(tight)
                             : TolRep{tight.rep, std::move(loose)};  // same anchor either way
            return Evaluated{std::move(out), a.value + b.value};
        }
    }
    throw std::logic_error("certify_expression: corrupt expression node");
}

}  // namespace

Certificate certify_expression(const SumTable& table, const Expr& expr, AddMode mode,
                               LeafTolerance leaf, CertifyStats* stats) {
    Evaluated ev = eval(table, expr, mode, leaf, stats);
    PosRational value(ev.value.get_num(), ev.value.get_den());
    bool holds = tol_holds(table.base, ev.tr, value);
    return Certificate{std::move(ev.tr), std::move(value), holds};
}

}  // namespace lns
