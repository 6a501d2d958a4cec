#pragma once

#include <cstdint>

namespace radstein {

// Counter-based generator: output i of stream (seed, chunk) is a stateless
// mix of (seed, chunk, i). Identical draws regardless of execution order,
// which is what makes chunked parallel Monte Carlo bit-reproducible.
// Identifier reported in artifacts: "splitmix64-counter".
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t chunk)
        : base_(mix(mix(seed ^ 0x9e3779b97f4a7c15ull) ^ chunk)), counter_(0) {}

    static constexpr const char* name() { return "splitmix64-counter"; }

    std::uint64_t next_u64() { return mix(base_ + 0x9e3779b97f4a7c15ull * ++counter_); }

    // uniform in [0,1)
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    int next_sign() { return (next_u64() >> 63) ? 1 : -1; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t base_;
    std::uint64_t counter_;
};

}  // namespace radstein
