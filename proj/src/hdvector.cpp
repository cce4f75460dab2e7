#include "vfa/hdvector.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace vfa {

std::string family_name(Family f) {
    switch (f) {
        case Family::hadamard: return "hadamard";
        case Family::circular: return "circular";
        case Family::block: return "block";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "hadamard" || s == "hp") return Family::hadamard;
    if (s == "circular" || s == "cc") return Family::circular;
    if (s == "block" || s == "lcc") return Family::block;
    throw std::invalid_argument("unknown binding family: " + s);
}

double PhaseVector::wrap(double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(phi + std::numbers::pi, two_pi);
    if (w < 0.0) w += two_pi;
    return w - std::numbers::pi;
}

PhaseVector::PhaseVector(std::vector<double> phases)
    : phases_(std::move(phases)) {
    for (double& p : phases_) p = wrap(p);
}

namespace {

std::size_t resolve_blocks(Family family, std::size_t n,
                           std::size_t block_count) {
    switch (family) {
        case Family::hadamard: return n;
        case Family::circular: return 1;
        case Family::block:
            if (block_count == 0 || n % block_count != 0)
                throw DimensionMismatch(
                    "block family requires a block count dividing n");
            return block_count;
    }
    return n;
}

}  // namespace

HDVector::HDVector(cvec data, Family family, std::size_t block_count)
    : data_(std::move(data)), family_(family) {
    if (data_.empty()) throw DimensionMismatch("vector dimension must be >= 1");
    blocks_ = resolve_blocks(family_, data_.size(), block_count);
}

HDVector HDVector::zero(Family family, std::size_t n, std::size_t block_count) {
    return HDVector(cvec(n, cplx{0.0, 0.0}), family, block_count);
}

HDVector HDVector::identity(Family family, std::size_t n,
                            std::size_t block_count) {
    if (family == Family::hadamard)
        return HDVector(cvec(n, cplx{1.0, 0.0}), family);
    std::size_t blocks = resolve_blocks(family, n, block_count);
    cvec d(n, cplx{0.0, 0.0});
    std::size_t bs = n / blocks;
    for (std::size_t b = 0; b < blocks; ++b) d[b * bs] = cplx{1.0, 0.0};
    return HDVector(std::move(d), family, block_count);
}

}  // namespace vfa
