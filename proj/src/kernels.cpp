#include "klein/kernels.hpp"

#include <random>

namespace klein {

std::vector<Triple> sampled_triples(int dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Triple> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Triple t;
    for (auto& x : t) x = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
    out.push_back(t);
  }
  return out;
}

}  // namespace klein
