#pragma once

#include "lns/lnscore.hpp"

namespace lns {

// Bounded-exponent configuration. Out-of-range results are signalled with the
// sentinel max_rep + 1, which is itself out of range, so a signal poisons any
// chain of Level-2 operations it enters.
struct RangeConfig {
    Int min_rep;
    Int max_rep;

    RangeConfig(Int min_, Int max_) : min_rep(std::move(min_)), max_rep(std::move(max_)) {
        if (min_rep >= max_rep) throw std::invalid_argument("RangeConfig: requires min < max");
    }

    Int sentinel() const { return max_rep + 1; }
};

struct Level2Value {
    bool in_range;
    Int z;  // the result when in range, the sentinel otherwise

    friend bool operator==(const Level2Value& a, const Level2Value& b) {
        return a.in_range == b.in_range && a.z == b.z;
    }
};

bool in_range(const RangeConfig& cfg, const Int& z);

// InRange(result) iff x, y and result are all in range, else the sentinel.
Level2Value clip(const RangeConfig& cfg, const Int& x, const Int& y, const Int& result);

// clip over the corresponding Level-1 op. Whenever the result is in range it
// equals the Level-1 result and both operands were in range.
Level2Value mult_level_2(const RangeConfig& cfg, const Int& x, const Int& y);
Level2Value div_level_2(const RangeConfig& cfg, const Int& x, const Int& y);
Level2Value add_level_2(const RangeConfig& cfg, const SumTable& table, const Int& x,
                        const Int& y);

}  // namespace lns
