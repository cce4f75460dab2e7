#include "vfa/core.hpp"

#include <cmath>

#include "vfa/dft.hpp"
#include "vfa/rng.hpp"

namespace vfa {
namespace {

void check_dyadic(const HDVector& x, const HDVector& y) {
    if (x.size() != y.size())
        throw DimensionMismatch("operand dimensions differ");
    if (x.family() != y.family() || x.blocks() != y.blocks())
        throw FamilyMismatch("operand binding families differ");
}

// Forward DFT applied independently to each block.
cvec to_spectrum(const HDVector& x) {
    cvec s = x.data();
    std::size_t bs = x.block_size();
    for (std::size_t b = 0; b < x.blocks(); ++b)
        dft_forward(s.data() + b * bs, bs);
    return s;
}

HDVector from_spectrum(cvec s, const HDVector& like) {
    std::size_t bs = like.block_size();
    for (std::size_t b = 0; b < like.blocks(); ++b)
        dft_inverse(s.data() + b * bs, bs);
    return HDVector(std::move(s), like.family(), like.blocks());
}

}  // namespace

HDVector bundle(const HDVector& x, const HDVector& y) {
    check_dyadic(x, y);
    cvec d(x.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = x[i] + y[i];
    return HDVector(std::move(d), x.family(), x.blocks());
}

HDVector bind(const HDVector& x, const HDVector& y) {
    check_dyadic(x, y);
    if (x.family() == Family::hadamard) {
        cvec d(x.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = x[i] * y[i];
        return HDVector(std::move(d), x.family());
    }
    cvec xs = to_spectrum(x);
    cvec ys = to_spectrum(y);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] *= ys[i];
    return from_spectrum(std::move(xs), x);
}

HDVector inverse(const HDVector& x) {
    if (!is_unitary(x, 1e-6))
        throw NotUnitary("exact inversion requires a family-unitary vector");
    if (x.family() == Family::hadamard) {
        cvec d(x.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::conj(x[i]);
        return HDVector(std::move(d), x.family());
    }
    cvec s = to_spectrum(x);
    for (auto& v : s) v = std::conj(v);
    return from_spectrum(std::move(s), x);
}

HDVector unbind(const HDVector& x, const HDVector& z) {
    check_dyadic(x, z);
    if (x.family() == Family::hadamard) {
        cvec d(x.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = std::conj(x[i]) * z[i];
        return HDVector(std::move(d), x.family());
    }
    cvec xs = to_spectrum(x);
    cvec zs = to_spectrum(z);
    for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = std::conj(xs[i]) * zs[i];
    return from_spectrum(std::move(xs), x);
}

cplx inner(const HDVector& x, const HDVector& y) {
    if (x.size() != y.size())
        throw DimensionMismatch("operand dimensions differ");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += x[i] * std::conj(y[i]);
    return acc / static_cast<double>(x.blocks());
}

cplx inner_fourier(const HDVector& x, const HDVector& y) {
    check_dyadic(x, y);
    cvec xs = to_spectrum(x);
    cvec ys = to_spectrum(y);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < xs.size(); ++i)
        acc += xs[i] * std::conj(ys[i]);
    // Unnormalized per-block DFT scales inner products by the block size.
    return acc / static_cast<double>(x.blocks() * x.block_size());
}

bool is_unitary(const HDVector& x, double tol) {
    cvec s = x.family() == Family::hadamard ? x.data() : to_spectrum(x);
    for (const auto& v : s)
        if (std::abs(std::abs(v) - 1.0) > tol) return false;
    return true;
}

HDVector random_symbol(std::size_t n, Family family, std::uint64_t seed,
                       std::size_t block_count) {
    Rng rng(seed);
    if (family == Family::hadamard) {
        cvec d(n);
        for (auto& v : d) v = std::polar(1.0, rng.uniform_phase());
        return HDVector(std::move(d), family);
    }
    if (family == Family::circular) {
        cvec s(n);
        for (auto& v : s) v = std::polar(1.0, rng.uniform_phase());
        dft_inverse(s.data(), n);
        return HDVector(std::move(s), family);
    }
    if (block_count == 0 || n % block_count != 0)
        throw DimensionMismatch("block family requires a block count dividing n");
    std::size_t bs = n / block_count;
    cvec d(n, cplx{0.0, 0.0});
    for (std::size_t b = 0; b < block_count; ++b) {
        std::size_t hot = rng.uniform_index(bs);
        d[b * bs + hot] = std::polar(1.0, rng.uniform_phase());
    }
    return HDVector(std::move(d), family, block_count);
}

double l1_norm(const HDVector& x) {
    double acc = 0.0;
    for (const auto& v : x.data()) acc += std::abs(v);
    return acc;
}

double l2_norm(const HDVector& x) {
    double acc = 0.0;
    for (const auto& v : x.data()) acc += std::norm(v);
    return std::sqrt(acc);
}

}  // namespace vfa
