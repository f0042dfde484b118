#pragma once

#include <cstdint>
#include <optional>

namespace hcube {

// chi_k(n) >= ceil(2^n / A(n,k+1)); for k = 2 also
// chi_2(n) <= 2^ceil(log2(n+1)).
struct BoundReport {
    int n = 0;
    int k = 0;
    std::int64_t a_value = 0;  // A(n, k+1)
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;
};

BoundReport chromatic_bounds(int n, int k, std::int64_t a_value);

// Known A(n,3) values used by the verifier's bound statements.
std::optional<std::int64_t> known_a_n3(int n);

}  // namespace hcube
