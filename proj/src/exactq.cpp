#include "lns/exactq.hpp"

#include <cmath>

namespace lns {

namespace detail {

// Hard cap on the bit size of a single computed power (~1 GiB of limbs).
// Certified large-exponent runs stay under it; anything bigger is infeasible
// on this machine class and fails loudly instead of thrashing.
constexpr unsigned long kMaxPowBits = 1ul << 33;

unsigned long to_ulong(const Int& v, const char* who) {
    if (v < 0 || !v.fits_ulong_p())
        throw std::overflow_error(std::string(who) + ": exponent does not fit in unsigned long");
    return v.get_ui();
}

Int pow_int(const Int& base, const Int& e) {
    unsigned long ue = to_ulong(e, "pow_int");
    size_t base_bits = mpz_sizeinbase(base.get_mpz_t(), 2);
    if (ue != 0 && base_bits > kMaxPowBits / ue)
        throw std::runtime_error("pow_int: power exceeds the memory budget");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), ue);
    return r;
}

double log_ratio_estimate(const Int& n, const Int& d) {
    if (n == d) return 0.0;
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, n.get_mpz_t());
    double md = mpz_get_d_2exp(&ed, d.get_mpz_t());
    if (en - ed >= -1 && en - ed <= 1) {
        // Near 1 the naive log(n) - log(d) cancels; log1p on the exact integer
        // difference keeps full relative accuracy.
        Int diff = n - d;
        long e1 = 0;
        double m1 = mpz_get_d_2exp(&e1, diff.get_mpz_t());
        long shift = e1 - ed;
        if (shift < -1060) return diff > 0 ? 1e-320 : -1e-320;  // underflow guard, sign only
        double r = std::ldexp(m1 / md, static_cast<int>(shift));
        return std::log1p(r);
    }
    return (static_cast<double>(en - ed)) * std::log(2.0) + std::log(mn) - std::log(md);
}

}  // namespace detail

Ordering cmp_pow(const PosRational& value, const Base& base, const Int& e) {
    Int lhs, rhs;
    if (e >= 0) {
        lhs = value.num * detail::pow_int(base.q, e);
        rhs = value.den * detail::pow_int(base.p, e);
    } else {
        Int a = -e;
        lhs = value.num * detail::pow_int(base.p, a);
        rhs = value.den * detail::pow_int(base.q, a);
    }
    int c = cmp(lhs, rhs);
    if (c < 0) return Ordering::Less;
    if (c > 0) return Ordering::Greater;
    return Ordering::Equal;
}

bool in_closed_interval(const PosRational& value, const Base& base, const Int& lo,
                        const Int& hi) {
    if (lo > hi) throw std::invalid_argument("in_closed_interval: requires lo <= hi");
    return cmp_pow(value, base, lo) != Ordering::Less &&
           cmp_pow(value, base, hi) != Ordering::Greater;
}

PosRational pow_rational(const Base& base, const Int& e) {
    if (e >= 0) return PosRational(detail::pow_int(base.p, e), detail::pow_int(base.q, e));
    Int a = -e;
    return PosRational(detail::pow_int(base.q, a), detail::pow_int(base.p, a));
}

}  // namespace lns
