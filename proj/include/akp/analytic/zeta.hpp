#pragma once

#include <vector>

#include "akp/analytic/dirichlet.hpp"

namespace akp {

inline constexpr double kZetaMaxT = 1e7;

// Euler-Maclaurin: partial sum to N = ceil(3(|t| + 10)) plus four Bernoulli
// corrections. Valid for Re s > -1, s != 1.
Complex zeta(Complex s);

// zeta(1/2 + it).
Complex zeta_critical(double t);

// max over the grid of |zeta(1/2 + it)| / (1 + |t|)^(13/84).
double bourgain_envelope(const std::vector<double>& t_grid);

}  // namespace akp
