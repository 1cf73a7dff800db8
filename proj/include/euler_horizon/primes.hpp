#pragma once

#include <cstdint>
#include <vector>

namespace eh {

// Primes p <= bound in increasing order (sieve of Eratosthenes).
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

}  // namespace eh
