#pragma once

#include <cstddef>
#include <cstdint>

#include "vfa/types.hpp"

namespace vfa {

/// Array of phase angles, each wrapped into [-pi, pi) on construction.
class PhaseVector {
  public:
    PhaseVector() = default;
    explicit PhaseVector(std::vector<double> phases);

    std::size_t size() const { return phases_.size(); }
    double operator[](std::size_t i) const { return phases_[i]; }
    const std::vector<double>& values() const { return phases_; }

    static double wrap(double phi);

  private:
    std::vector<double> phases_;
};

/// Complex hypervector tagged with its binding family. Immutable after
/// construction; all operations on it are pure.
class HDVector {
  public:
    /// block_count is required for Family::block and must divide n; it is
    /// ignored (and normalized to n resp. 1) for hadamard and circular.
    HDVector(cvec data, Family family, std::size_t block_count = 0);

    std::size_t size() const { return data_.size(); }
    Family family() const { return family_; }
    /// Number of independent DFT blocks: n for hadamard, 1 for circular,
    /// k for block(k). Doubles as the inner-product normalizer that makes
    /// family-unitary self-similarity exactly 1.
    std::size_t blocks() const { return blocks_; }
    std::size_t block_size() const { return data_.size() / blocks_; }

    const cvec& data() const { return data_; }
    const cplx& operator[](std::size_t i) const { return data_[i]; }

    static HDVector zero(Family family, std::size_t n,
                         std::size_t block_count = 0);
    /// Binding identity: all-ones for hadamard; first entry of each block
    /// equal to 1 for circular/block.
    static HDVector identity(Family family, std::size_t n,
                             std::size_t block_count = 0);

  private:
    cvec data_;
    Family family_;
    std::size_t blocks_;
};

}  // namespace vfa
