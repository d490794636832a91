#pragma once

#include <vector>

#include "plcwt/common.hpp"

namespace plcwt {

/// In-place 2D DFT, sign = -1 (forward) or +1 (backward), unnormalized.
/// Plans are cached per (n1, n2, sign) and safe to use concurrently.
void fft2_inplace(std::vector<Complex>& data, int n1, int n2, int sign);

}  // namespace plcwt
