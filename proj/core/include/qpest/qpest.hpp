#pragma once

// Convenience umbrella for the whole library.

#include "qpest/bath.hpp"
#include "qpest/digit_string.hpp"
#include "qpest/ec_strategy.hpp"
#include "qpest/errors.hpp"
#include "qpest/likelihood.hpp"
#include "qpest/metrics.hpp"
#include "qpest/monte_carlo.hpp"
#include "qpest/posterior.hpp"
#include "qpest/prior.hpp"
#include "qpest/protocol.hpp"
#include "qpest/quantum_dot.hpp"
#include "qpest/ramsey.hpp"
#include "qpest/rng.hpp"
#include "qpest/scale_map.hpp"
