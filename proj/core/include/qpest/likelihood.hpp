#pragma once

#include <cstdint>
#include <span>

#include "qpest/digit_string.hpp"

namespace qpest {

// Outcome model for the adaptive digit ladder. The conditional probability of
// decoding result R given eigenvalue s factorizes over steps into
// cos^2(pi (s - R) 2^k) terms; the closed form collapses the product into a
// squared Dirichlet-kernel ratio. Both routes are kept: the product form is
// the step-by-step truth, the closed form is O(1) per evaluation and is what
// the enumeration metrics use.

// prod_{k=0}^{M-1} cos^2(pi (s - R) 2^k); s in [0, 1].
double likelihood_product(double s, const DigitString& result);

// (sin(2^M pi (s-R)) / (2^M sin(pi (s-R))))^2 with the removable singularity
// at integer s-R evaluated by branch, never NaN.
double likelihood_closed_form(double s, const DigitString& result);

// Basis rotation angle accumulated from already-decoded digits:
// phi_j = (pi/2) sum_{l=1}^{j-1} h_l 2^{l-j}, where h_l is the bit decoded in
// step l (history in measurement order, least significant digit first).
double basis_angle(int step, std::span<const std::uint8_t> history);

// Probability that step j of an M-digit run yields `outcome`, given the bits
// decoded so far: cos^2(pi s 2^{M-j} - phi_j - outcome pi/2).
// history must hold exactly j-1 bits. The product over j = 1..M reproduces
// likelihood_product for the decoded result.
double step_outcome_probability(double s, int digit_count, int step,
                                std::span<const std::uint8_t> history, int outcome);

// min(R, 1 - R): the ladder cannot distinguish s from 1 - s, so results above
// 1/2 are interpreted as their mirror image.
double folded_result(const DigitString& result);

}  // namespace qpest
