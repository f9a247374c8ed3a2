#include "fex/random.hpp"

#include <algorithm>
#include <numeric>

#include "fex/error.hpp"

namespace fex {

std::vector<std::uint64_t> Rng::sample_without_replacement(std::uint64_t population,
                                                           std::uint64_t count) {
  if (count > population) {
    throw Error(ErrorKind::config, "cannot sample more points than the population holds");
  }
  // Partial Fisher-Yates over the enumeration order.
  std::vector<std::uint64_t> pool(population);
  std::iota(pool.begin(), pool.end(), std::uint64_t{0});
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto j = i + below(population - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace fex
