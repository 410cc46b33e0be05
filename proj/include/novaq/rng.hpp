// rng.hpp
// Deterministic random streams. All randomness in a run flows from one
// master seed through named sub-streams so paired experiments share
// structure and any run can be replayed exactly.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace novaq::rng {

using Engine = std::mt19937_64;

// splitmix64 finalizer; good avalanche for seed derivation.
constexpr std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t hash_name(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Sub-stream seed derived from (master, stream name, index).
constexpr std::uint64_t derive(std::uint64_t master, std::string_view stream,
                               std::uint64_t index = 0) {
    return mix(master ^ mix(hash_name(stream)) ^ mix(index * 0xd6e8feb86659fd93ULL + 1));
}

inline Engine make_stream(std::uint64_t master, std::string_view stream,
                          std::uint64_t index = 0) {
    return Engine(derive(master, stream, index));
}

}  // namespace novaq::rng
