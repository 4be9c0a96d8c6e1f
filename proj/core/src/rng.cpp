#include "secgraph/rng.hpp"

namespace secgraph {

Engine make_engine(const SeedSpec& seed, Stream stream) {
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed.master_seed), hi(seed.master_seed), lo(seed.run_index),
                    hi(seed.run_index), static_cast<std::uint32_t>(stream), 0x5ec6a9u};
  return Engine(seq);
}

}  // namespace secgraph
