#pragma once

#include <cstdint>
#include <random>

namespace qpest {

// Seeded random stream. Monte Carlo drivers hand one independently seeded
// stream to each worker (seed = base seed + worker index) so results do not
// depend on the number of threads.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return unit_(engine_); }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return unit_(engine_) < p;
    }

    double gaussian() { return normal_(engine_); }

    // uniform integer in [0, bound)
    std::uint64_t integer(std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qpest
