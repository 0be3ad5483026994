#include "sehp/rng.hpp"

#include <cmath>

namespace sehp {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t SplitMix64::next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
}

double SplitMix64::uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform_open01() noexcept {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

double SplitMix64::exponential(double rate) noexcept {
    return -std::log(uniform_open01()) / rate;
}

std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                          std::uint64_t index) noexcept {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ fnv1a64(label));
    h = mix64(h ^ index);
    return h;
}

}  // namespace sehp
