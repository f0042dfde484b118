#include "hcube/bounds.hpp"

#include <stdexcept>

namespace hcube {

BoundReport chromatic_bounds(int n, int k, std::int64_t a_value) {
    if (a_value < 1) throw std::invalid_argument("chromatic_bounds: A value must be positive");
    if (n < 1 || n > 62) throw std::invalid_argument("chromatic_bounds: n out of range");
    BoundReport r;
    r.n = n;
    r.k = k;
    r.a_value = a_value;
    const std::int64_t space = std::int64_t(1) << n;
    r.lower = (space + a_value - 1) / a_value;
    if (k == 2) {
        std::int64_t up = 1;
        while (up < n + 1) up <<= 1;
        r.upper = up;
    }
    return r;
}

std::optional<std::int64_t> known_a_n3(int n) {
    switch (n) {
        case 4: return 2;
        case 5: return 4;
        case 6: return 8;
        case 7: return 16;
        case 8: return 20;
        case 9: return 40;
        case 10: return 72;
        case 11: return 144;
        default: return std::nullopt;
    }
}

}  // namespace hcube
