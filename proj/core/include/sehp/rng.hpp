#pragma once

#include <cstdint>
#include <string_view>

namespace sehp {

// SplitMix64: tiny deterministic generator producing the same stream on every
// platform. Used wherever reproducibility is part of the contract (simulation,
// fit restarts), so results do not depend on the standard library's
// distribution implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;

    double uniform01() noexcept;       // [0, 1)
    double uniform_open01() noexcept;  // (0, 1]
    double exponential(double rate) noexcept;

private:
    std::uint64_t state_;
};

// SplitMix64 finalizer, usable as a standalone 64-bit mixer.
std::uint64_t mix64(std::uint64_t x) noexcept;

std::uint64_t fnv1a64(std::string_view s) noexcept;

// Stable sub-stream seed derived from (seed, label, index).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                          std::uint64_t index) noexcept;

}  // namespace sehp
