#include "lns/level2.hpp"

namespace lns {

bool in_range(const RangeConfig& cfg, const Int& z) {
    return cfg.min_rep <= z && z <= cfg.max_rep;
}

Level2Value clip(const RangeConfig& cfg, const Int& x, const Int& y, const Int& result) {
    if (in_range(cfg, x) && in_range(cfg, y) && in_range(cfg, result))
        return Level2Value{true, result};
    return Level2Value{false, cfg.sentinel()};
}

Level2Value mult_level_2(const RangeConfig& cfg, const Int& x, const Int& y) {
    return clip(cfg, x, y, mult_level_1(Rep{x}, Rep{y}).z);
}

Level2Value div_level_2(const RangeConfig& cfg, const Int& x, const Int& y) {
    return clip(cfg, x, y, div_level_1(Rep{x}, Rep{y}).z);
}

Level2Value add_level_2(const RangeConfig& cfg, const SumTable& table, const Int& x,
                        const Int& y) {
    return clip(cfg, x, y, add_level_1(table, Rep{x}, Rep{y}).z);
}

}  // namespace lns
