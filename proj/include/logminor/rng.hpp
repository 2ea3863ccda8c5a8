#ifndef LOGMINOR_RNG_HPP
#define LOGMINOR_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace logminor {

// Mixes (seed, tag, index) into a stream seed. Tag bytes go through FNV-1a,
// then a splitmix64 finalizer. Serial and parallel callers derive the same
// streams from the same root seed.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

/// Seedable 64-bit generator (mt19937_64) with the distributions this project
/// needs. Gaussians use the Marsaglia polar method so streams are portable
/// across standard-library implementations.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    static RngStream derived(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0) {
        return RngStream(derive_stream_seed(seed, tag, index));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double next_unit();

    /// Uniform integer in [0, bound), unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound);

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Standard normal via the polar method.
    double next_gaussian();

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace logminor

#endif
