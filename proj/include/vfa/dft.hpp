#pragma once

#include <cstddef>

#include "vfa/types.hpp"

namespace vfa {

/// In-place unnormalized forward DFT: X_k = sum_j x_j e^{-2*pi*i*j*k/n}.
void dft_forward(cplx* data, std::size_t n);

/// In-place inverse of dft_forward (includes the 1/n factor).
void dft_inverse(cplx* data, std::size_t n);

void dft_forward(cvec& v);
void dft_inverse(cvec& v);

}  // namespace vfa
