#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lns {

using Int = mpz_class;

enum class Ordering { Less, Equal, Greater };

// N/D with num >= 1 and den >= 1. Zero and negatives are unrepresentable.
// Values are deliberately kept unreduced; every predicate in this kit is
// reduction-invariant, i.e. P(N, D) == P(kN, kD) for k >= 1.
struct PosRational {
    Int num;
    Int den;

    PosRational(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
        if (num < 1 || den < 1)
            throw std::invalid_argument("PosRational: numerator and denominator must be >= 1");
    }

    PosRational reciprocal() const { return PosRational(den, num); }
};

// Rational base p/q. The constructed invariant is 0 < q < p, i.e. b > 1;
// the stricter axiom (1), 1 < q < p < 2q, is required only by table
// construction and precision queries and is checked there on demand.
struct Base {
    Int p;
    Int q;

    Base(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
        if (q < 1 || p <= q)
            throw std::invalid_argument("Base: requires 0 < q < p (base greater than 1)");
    }

    bool satisfies_axiom1() const { return q > 1 && p < 2 * q; }

    void require_axiom1(const char* who) const {
        if (!satisfies_axiom1())
            throw std::domain_error(std::string(who) +
                                    ": base must satisfy axiom (1): 1 < q < p < 2q");
    }
};

// Three-way comparison of num/den against (p/q)^e, exact by cross-multiplication:
// for e >= 0 compare num*q^e with den*p^e, for e < 0 compare num*p^|e| with den*q^|e|.
Ordering cmp_pow(const PosRational& value, const Base& base, const Int& e);

// b^lo <= value <= b^hi, both ends closed. Requires lo <= hi.
bool in_closed_interval(const PosRational& value, const Base& base, const Int& lo,
                        const Int& hi);

// Materializes (p/q)^e as a rational: (p^e, q^e) for e >= 0, (q^|e|, p^|e|) for e < 0.
PosRational pow_rational(const Base& base, const Int& e);

// The four binary comparison predicates, named for which side of the relation
// the arbitrary rational sits on. All are thin derived forms of cmp_pow.
inline bool l_lessp(const PosRational& v, const Base& b, const Int& e) {
    return cmp_pow(v, b, e) == Ordering::Less;  // v < b^e
}
inline bool l_geq(const PosRational& v, const Base& b, const Int& e) {
    return cmp_pow(v, b, e) != Ordering::Less;  // v >= b^e
}
inline bool r_lessp(const PosRational& v, const Base& b, const Int& e) {
    return cmp_pow(v, b, e) == Ordering::Greater;  // b^e < v
}
inline bool r_geq(const PosRational& v, const Base& b, const Int& e) {
    return cmp_pow(v, b, e) != Ordering::Greater;  // b^e >= v
}

namespace detail {

// base^e for e >= 0. Refuses powers whose result would not fit in memory;
// the bound is far above anything the test suite certifies (~4.8e9 bits).
Int pow_int(const Int& base, const Int& e);

unsigned long to_ulong(const Int& v, const char* who);

// ln(n/d) in double precision with high relative accuracy even when n/d is
// close to 1 (log1p on the exact integer difference). Estimation only; every
// consumer certifies its final answer with exact comparisons.
double log_ratio_estimate(const Int& n, const Int& d);

}  // namespace detail

}  // namespace lns
