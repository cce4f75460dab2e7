#pragma once

#include <cstdint>

#include "vfa/hdvector.hpp"

namespace vfa {

/// Component-wise sum. Never normalizes; normalization is a caller decision.
HDVector bundle(const HDVector& x, const HDVector& y);

/// Binding: component-wise product (hadamard), circular convolution
/// (circular), or per-block circular convolution (block). Implemented for
/// the convolutional families by multiplying DFT spectra.
HDVector bind(const HDVector& x, const HDVector& y);

/// Exact binding inverse of a family-unitary vector. Throws NotUnitary if
/// x is not unitary within 1e-6.
HDVector inverse(const HDVector& x);

/// bind(inverse(x), z) without the unitarity check on intermediate storage:
/// conjugates x in the (per-block) Fourier domain.
HDVector unbind(const HDVector& x, const HDVector& z);

/// Normalized inner product (1/B) sum_j x_j conj(y_j) with B the block
/// count, so family-unitary self-similarity is exactly 1 in every family.
cplx inner(const HDVector& x, const HDVector& y);

/// Same inner product evaluated in the Fourier domain (Parseval route).
cplx inner_fourier(const HDVector& x, const HDVector& y);

/// True iff all (per-block) Fourier magnitudes are within tol of 1.
/// For hadamard this reduces to component magnitudes.
bool is_unitary(const HDVector& x, double tol = 1e-8);

/// Family-unitary random vector with uniform phases; deterministic in seed.
HDVector random_symbol(std::size_t n, Family family, std::uint64_t seed,
                       std::size_t block_count = 0);

double l1_norm(const HDVector& x);
double l2_norm(const HDVector& x);

}  // namespace vfa
