// Random instance generation and the HDEC / HDEC-CERT text formats.

#ifndef HDEC_INSTANCES_HPP
#define HDEC_INSTANCES_HPP

#include <cstdint>
#include <string>

#include "hdec/multigraph.hpp"

namespace hdec {

struct FormatError : std::runtime_error {
    int line;
    FormatError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct TooSmall : std::runtime_error {
    explicit TooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

/// splitmix64. Update: s += 0x9E3779B97F4A7C15; the output is the mixed
/// state (z ^= z>>30, z *= 0xBF58476D1CE4E5B9, z ^= z>>27,
/// z *= 0x94D049BB133111EB, z ^= z>>31). Fixed here so that seeded runs
/// reproduce bit-for-bit across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound). bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

struct Instance {
    Kind kind = Kind::Undirected;
    int n = 0;
    HamCycle x;
    HamCycle y;
    UnionMultigraph uni;
};

/// Fisher-Yates from index n-1 down to 1, swapping with a uniform index in
/// [0, i]. Throws TooSmall for n < 3.
HamCycle random_hamiltonian_cycle(int n, Kind kind, SplitMix64& rng);

Instance make_instance(HamCycle x, HamCycle y);
Instance generate_instance(int n, Kind kind, SplitMix64& rng);

std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

}  // namespace hdec

#endif
