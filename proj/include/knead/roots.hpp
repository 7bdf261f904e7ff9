#pragma once

#include "knead/kernels.hpp"

#include <span>
#include <vector>

namespace knead {

/// All roots of the complex polynomial c[0] + c[1] z + ... + c[d] z^d,
/// found simultaneously by Aberth-Ehrlich iteration with Bini-style
/// starting points on Newton-polygon radii. Leading coefficients below
/// 1e-14 * max|c| are treated as zero (truncated entire series carry
/// meaningless tiny tails whose spurious roots sit far outside every
/// disk this library looks at). Multiple roots come back as tight
/// clusters of simple ones; resolving them is the caller's job.
std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs);

} // namespace knead
