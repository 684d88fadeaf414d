#pragma once

#include "qpest/errors.hpp"

namespace qpest {

// Mapping between physical field values (angular frequency, rad/s) and the
// dimensionless eigenvalues s = field / alpha measured by the digit ladder.
// alpha is chosen as twice the effective maximal eigenvalue a_max so that all
// field values of interest map into s in [0, 1/2]. With a_max = f * delta0
// (prior mean plus f standard deviations, in the shifted frame where the
// smallest eigenvalue is zero) this gives alpha = 2 f delta0.
struct ScaleMap {
    double alpha = 0.0;   // rad/s, = 2 * a_max
    double a_max = 0.0;   // rad/s, largest effective eigenvalue
    double f = 1.0;       // dimensionless safety factor
    double delta0 = 0.0;  // rad/s, prior standard deviation of the field

    ScaleMap() = default;
    ScaleMap(double a_max_, double f_, double delta0_)
        : alpha(2.0 * a_max_), a_max(a_max_), f(f_), delta0(delta0_) {
        validate();
    }

    // Standard construction: window the field to f prior standard deviations.
    static ScaleMap from_prior(double delta0, double f = 1.0) {
        return ScaleMap(f * delta0, f, delta0);
    }

    void validate() const {
        if (!(a_max > 0.0) || !(f > 0.0) || !(delta0 > 0.0))
            throw ArgumentError("ScaleMap: a_max, f and delta0 must be positive");
    }

    double to_physical(double s) const { return alpha * s; }
    double to_scaled(double physical) const { return physical / alpha; }

    // Prior standard deviation in scaled units: delta0 / alpha = 1 / (2 f).
    double scaled_delta0() const { return delta0 / alpha; }
};

}  // namespace qpest
