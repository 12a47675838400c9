#include "lns/logconv.hpp"

#include <cmath>

namespace lns {

namespace {

void require_ge1(const PosRational& value, const Base& base, const char* who) {
    (void)base;
    if (value.num < value.den)
        throw std::domain_error(std::string(who) + ": requires value >= 1");
}

// Exact doubling-then-bisect floor log; correct for every positive value.
Int doubling_bisect(const PosRational& v, const Base& b) {
    Int lo, hi;
    if (cmp_pow(v, b, 0) != Ordering::Less) {
        lo = 0;  // v >= b^0
        hi = 1;
        while (cmp_pow(v, b, hi) != Ordering::Less) {
            lo = hi;
            hi *= 2;
        }
    } else {
        hi = 0;  // v < b^0
        lo = -1;
        while (cmp_pow(v, b, lo) == Ordering::Less) {
            hi = lo;
            lo *= 2;
        }
    }
    // invariant: b^lo <= v < b^hi
    while (hi - lo > 1) {
        Int mid = lo + (hi - lo) / 2;
        if (cmp_pow(v, b, mid) != Ordering::Less)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// Certified walk for v > 1 with a nonnegative candidate exponent. Maintains
// lhs/rhs such that sign(lhs - rhs) == sign(v - b^e) for the current e, and
// returns only once b^e <= v < b^(e+1) has been confirmed exactly.
bool certified_walk_ge0(const PosRational& v, const Base& b, Int cand, Int& out) {
    if (cand < 0) cand = 0;
    Int lhs = v.num * detail::pow_int(b.q, cand);
    Int rhs = v.den * detail::pow_int(b.p, cand);
    for (int steps = 0; steps <= 64; ++steps) {
        if (lhs < rhs) {  // v < b^cand: move down
            if (cand == 0) return false;
            --cand;
            lhs *= b.p;
            rhs *= b.q;
            continue;
        }
        // v >= b^cand; test the upper bracket v < b^(cand+1)
        Int up_l = lhs * b.q;
        Int up_r = rhs * b.p;
        if (up_l < up_r) {
            out = cand;
            return true;
        }
        ++cand;
        lhs = std::move(up_l);
        rhs = std::move(up_r);
    }
    return false;  // estimate was off; caller falls back to pure bisect
}

}  // namespace

Int ceiling_log_ge1(const PosRational& value, const Base& base) {
    require_ge1(value, base, "ceiling_log_ge1");
    Int budget = value.num * base.q;  // proven strict upper bound on the answer
    Int i = 1, j = 1, l = 0;
    for (;;) {
        if (i * value.den >= value.num * j) return l;  // b^l >= value: done
        if (budget == 0)
            throw std::logic_error("ceiling_log_ge1: loop budget exhausted (internal bug)");
        i *= base.p;
        j *= base.q;
        ++l;
        --budget;
    }
}

Int floor_log_ge1(const PosRational& value, const Base& base) {
    require_ge1(value, base, "floor_log_ge1");
    Int budget = value.num * base.q;
    Int i = 1, j = 1, l = 0;
    for (;;) {
        // continue while b^(l+1) <= value, i.e. i*p*den <= num*j*q
        if (i * base.p * value.den > value.num * j * base.q) return l;
        if (budget == 0)
            throw std::logic_error("floor_log_ge1: loop budget exhausted (internal bug)");
        i *= base.p;
        j *= base.q;
        ++l;
        --budget;
    }
}

Int floor_log(const PosRational& value, const Base& base) {
    if (value.num < value.den)  // value < 1
        return -ceiling_log_ge1(value.reciprocal(), base);
    return floor_log_ge1(value, base);
}

Int floor_log_fast(const PosRational& value, const Base& base) {
    Ordering at0 = cmp_pow(value, base, 0);
    if (at0 == Ordering::Equal) return 0;

    if (at0 == Ordering::Less) {
        // value < 1: floor log = -Lw - 1 for Lw = floor(log(1/value)),
        // except when value is exactly b^(-Lw).
        PosRational w = value.reciprocal();
        Int lw = floor_log_fast(w, base);
        if (cmp_pow(value, base, -lw) == Ordering::Equal) return -lw;
        return -lw - 1;
    }

    double est = detail::log_ratio_estimate(value.num, value.den) /
                 detail::log_ratio_estimate(base.p, base.q);
    if (!std::isfinite(est) || est <= 4096.0) return doubling_bisect(value, base);

    Int cand;
    mpz_set_d(cand.get_mpz_t(), std::floor(est));
    Int result;
    if (certified_walk_ge0(value, base, cand, result)) return result;
    return doubling_bisect(value, base);
}

Int precision_of_base(const Base& base) {
    base.require_axiom1("precision_of_base");
    PosRational two(2, 1);
    Int g = floor_log_fast(two, base);  // >= 1 since b < 2
    size_t f = mpz_sizeinbase(g.get_mpz_t(), 2) - 1;
    Int pow_f = Int(1) << f;
    if (cmp_pow(two, base, pow_f) == Ordering::Less ||
        cmp_pow(two, base, pow_f * 2) != Ordering::Less)
        throw std::logic_error("precision_of_base: defining inequality failed (internal bug)");
    return Int(static_cast<unsigned long>(f));
}

}  // namespace lns
