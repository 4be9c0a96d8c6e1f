#pragma once

#include <cstdint>
#include <random>

namespace secgraph {

/// Identifies one Monte Carlo run. Equal specs produce bit-identical samples.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t run_index = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

/// Independent random streams used inside a single run.
enum class Stream : std::uint32_t {
  goods = 0,
  eaves = 1,
  marks = 2,
  lattice = 3,
  bootstrap = 4,
};

using Engine = std::mt19937_64;

/// Engine keyed by (master_seed, run_index, stream). Distinct keys give
/// statistically independent streams, so runs can execute in any order
/// or on any thread.
Engine make_engine(const SeedSpec& seed, Stream stream);

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace secgraph
