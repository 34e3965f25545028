#include "sidlab/random.hpp"

namespace sidlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ (index * 0xd1342543de82ef95ULL + 1));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - Rng::max() % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

}  // namespace sidlab
