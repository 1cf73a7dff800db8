#include "euler_horizon/primes.hpp"

#include "euler_horizon/error.hpp"

namespace eh {

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  if (bound > 2'000'000'000) throw Error(ErrorCode::InvalidArgument, "prime bound too large");
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

}  // namespace eh
