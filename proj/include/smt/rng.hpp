#ifndef SMT_RNG_HPP
#define SMT_RNG_HPP

#include <cstdint>

#include "smt/normal.hpp"

namespace smt {

/// splitmix64 stream. Each Monte-Carlo replication gets its own stream
/// derived from (master seed, replication index), so serial and parallel
/// runs produce identical draws.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    static Rng for_replication(std::uint64_t master_seed, std::uint64_t rep_index) {
        // One mixing round separates the streams.
        return Rng(mix(master_seed + 0x9e3779b97f4a7c15ULL * (rep_index + 1)));
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw strictly inside (0,1); safe input to the normal quantile.
    double uniform_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    /// Standard normal via inverse-CDF; fully deterministic across platforms.
    double standard_normal() { return normal_quantile(uniform_open()); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace smt

#endif // SMT_RNG_HPP
