#pragma once

#include "lns/exactq.hpp"

namespace lns {

// Reference search loops. Both accumulate (p/q)^L in a pair of integer
// products and are deliberately naive: they are the executable definition
// the fast path is tested against. The loop budget N*q provably exceeds the
// answer; exhausting it means a bug, not an input problem.

// Least L >= 0 with value <= (p/q)^L. Requires value >= 1 and base > 1.
Int ceiling_log_ge1(const PosRational& value, const Base& base);

// Greatest L >= 0 with (p/q)^L <= value. Requires value >= 1 and base > 1.
Int floor_log_ge1(const PosRational& value, const Base& base);

// floor(log_b(value)) for any positive value: values below one go through
// the ceiling of the reciprocal, negated.
Int floor_log(const PosRational& value, const Base& base);

// Same result as floor_log on every input, computed fast. Small results use
// exact exponent doubling plus binary search; large results use a floating
// point estimate followed by an exact certified walk. Either way the returned
// L satisfies b^L <= value < b^(L+1) by exact comparison before returning.
Int floor_log_fast(const PosRational& value, const Base& base);

// Relative precision F = floor(log2(log_b 2)), computed exactly via
// G = floor_log_fast(2) and the bit length of G, then re-certified by checking
// b^(2^F) <= 2 < b^(2^(F+1)). Requires axiom (1), which gives 1 < b < 2.
//
// Bit length is enough: floor(log2 floor(x)) == floor(log2 x) unless some
// power of two lies in (floor(x), x], which would be an integer strictly
// between consecutive integers; and log_b 2 itself is never an integer for a
// rational base b != 2 (p^m = 2*q^m has no solutions with 1 < q < p < 2q).
Int precision_of_base(const Base& base);

}  // namespace lns
