#ifndef COARSE_RNG_HPP
#define COARSE_RNG_HPP

#include <cstdint>
#include <random>

namespace coarse
{

// Seeded generator whose draws are identical on every platform.
// std::uniform_int_distribution is implementation-defined, so bounded draws
// are done here by rejection on the raw mt19937_64 stream.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    // Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // True with probability num / den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  private:
    std::mt19937_64 engine_;
};

} // namespace coarse

#endif
