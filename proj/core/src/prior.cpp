#include "qpest/prior.hpp"

#include <algorithm>
#include <cmath>

#include "qpest/errors.hpp"
#include "qpest/rng.hpp"

namespace qpest {

namespace {
constexpr double kNormTolerance = 1e-12;
}

PriorDistribution::PriorDistribution(std::vector<double> support, std::vector<double> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
    if (support_.empty() || support_.size() != weights_.size())
        throw ArgumentError("PriorDistribution: support and weights must be non-empty and equal-sized");
    double total = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (!(support_[i] >= 0.0 && support_[i] <= 0.5))
            throw ArgumentError("PriorDistribution: support points must lie in [0, 1/2]");
        if (i > 0 && !(support_[i] > support_[i - 1]))
            throw ArgumentError("PriorDistribution: support must be strictly increasing");
        if (weights_[i] < 0.0)
            throw ArgumentError("PriorDistribution: weights must be nonnegative");
        total += weights_[i];
    }
    if (std::abs(total - 1.0) > kNormTolerance) {
        if (total <= 0.0) throw ArgumentError("PriorDistribution: weights sum to zero");
        for (auto& w : weights_) w /= total;
    }
    cumulative_.resize(weights_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        acc += weights_[i];
        cumulative_[i] = acc;
    }
    cumulative_.back() = 1.0;
}

PriorDistribution PriorDistribution::uniform(std::size_t grid_size) {
    if (grid_size == 0) throw ArgumentError("PriorDistribution: grid_size must be positive");
    std::vector<double> support(grid_size), weights(grid_size, 1.0 / static_cast<double>(grid_size));
    const double cell = 0.5 / static_cast<double>(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i)
        support[i] = (static_cast<double>(i) + 0.5) * cell;
    return PriorDistribution(std::move(support), std::move(weights));
}

PriorDistribution PriorDistribution::point_mass(double s) {
    return PriorDistribution({s}, {1.0});
}

double PriorDistribution::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) m += support_[i] * weights_[i];
    return m;
}

double PriorDistribution::variance() const {
    const double m = mean();
    double v = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        const double d = support_[i] - m;
        v += d * d * weights_[i];
    }
    return v;
}

double PriorDistribution::std_dev() const { return std::sqrt(variance()); }

double PriorDistribution::sample(RandomStream& rng) const {
    const double u = rng.uniform();
    auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    return support_[static_cast<std::size_t>(it - cumulative_.begin())];
}

}  // namespace qpest
