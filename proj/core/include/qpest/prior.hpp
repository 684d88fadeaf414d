#pragma once

#include <cstddef>
#include <vector>

namespace qpest {

class RandomStream;

// Discretized probability distribution over scaled eigenvalues in [0, 1/2].
// Support points are strictly increasing; weights are nonnegative and
// normalized to one.
class PriorDistribution {
  public:
    PriorDistribution(std::vector<double> support, std::vector<double> weights);

    // Uniform distribution over grid_size cell midpoints in [0, 1/2].
    static PriorDistribution uniform(std::size_t grid_size = kDefaultGridSize);

    // All mass on a single eigenvalue.
    static PriorDistribution point_mass(double s);

    static constexpr std::size_t kDefaultGridSize = 4096;

    std::size_t size() const { return support_.size(); }
    const std::vector<double>& support() const { return support_; }
    const std::vector<double>& weights() const { return weights_; }

    double mean() const;
    double variance() const;
    double std_dev() const;

    // Draw one support point with probability equal to its weight.
    double sample(RandomStream& rng) const;

  private:
    std::vector<double> support_;
    std::vector<double> weights_;
    std::vector<double> cumulative_;  // for sampling
};

}  // namespace qpest
