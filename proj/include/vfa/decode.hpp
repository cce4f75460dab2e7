#pragma once

#include "vfa/function_vector.hpp"

namespace vfa {

/// Discrete anchors z(k*beta), k = 1..k_max, for coarse nearest-match
/// decoding along the encoding path.
class AnchorCodebook {
  public:
    struct Anchor {
        double value;
        HDVector vec;
    };

    const FpeEncoder& encoder() const { return enc_; }
    double beta() const { return beta_; }
    const std::vector<Anchor>& anchors() const { return anchors_; }

  private:
    friend AnchorCodebook build_anchors(const FpeEncoder&, double,
                                        std::size_t);
    AnchorCodebook(FpeEncoder enc, double beta, std::vector<Anchor> anchors)
        : enc_(std::move(enc)), beta_(beta), anchors_(std::move(anchors)) {}

    FpeEncoder enc_;
    double beta_;
    std::vector<Anchor> anchors_;
};

/// Spacing must sit inside the kernel main lobe: 0 < beta < 2.
AnchorCodebook build_anchors(const FpeEncoder& enc, double beta,
                             std::size_t k_max);

struct DecodeResult {
    double r_hat = 0.0;
    double alpha_hat = 0.0;
    double confidence = 0.0;
};

/// Normalized readout c(s) = Re(inner(encode(s), x)); 1 at s = r for a clean
/// encoding of r.
double readout(const FpeEncoder& enc, const HDVector& x, double s);

/// Analytic derivative of the readout in s (for gradient checks).
double readout_derivative(const FpeEncoder& enc, const HDVector& x, double s);

/// Index of the anchor with the largest readout; ties break low.
std::size_t coarse_match(const AnchorCodebook& cb, const HDVector& x);

/// Bounded derivative-free maximization of the readout around anchor
/// `coarse_index`, to an interval below 1e-6. Throws OptimizerDidNotBracket
/// when the maximum sits at the bracket edge (coarse mis-match).
double fine_match(const AnchorCodebook& cb, const HDVector& x,
                  std::size_t coarse_index);

DecodeResult decode_point(const AnchorCodebook& cb, const HDVector& x);

/// False-accept rate on random unitary vectors is ~1% at this threshold.
double default_detect_threshold(std::size_t n);

bool detect(const AnchorCodebook& cb, const HDVector& x,
            double threshold = 0.0);

/// Greedy peeling: repeatedly decode the largest-|readout| term and subtract
/// it, until |alpha| < stop_threshold or max_terms found. Results sorted by
/// decreasing |alpha|.
std::vector<std::pair<double, double>> decode_function(
    const AnchorCodebook& cb, const HDVector& y, std::size_t max_terms,
    double stop_threshold);
std::vector<std::pair<double, double>> decode_function(
    const AnchorCodebook& cb, const FunctionVector& y, std::size_t max_terms,
    double stop_threshold);

/// Additive i.i.d. complex Gaussian noise; SNR in dB against the vector's
/// mean per-component power.
HDVector add_noise(const HDVector& x, double snr_db, Rng& rng);

struct PointSweepRow {
    double snr_db;
    std::size_t n;
    double rmse;
    double detect_rate;
};

std::vector<PointSweepRow> decode_point_sweep(
    const std::vector<double>& snr_db_list,
    const std::vector<std::size_t>& n_list, std::size_t trials,
    std::uint64_t seed, double beta = 1.6, std::size_t k_max = 20,
    bool parallel = true);

struct FunctionSweepRow {
    std::size_t terms;
    std::size_t n;
    double cosine_sim;
};

std::vector<FunctionSweepRow> decode_function_sweep(
    const std::vector<std::size_t>& term_list,
    const std::vector<std::size_t>& n_list, std::size_t trials,
    std::uint64_t seed, double beta = 1.6, std::size_t k_max = 20,
    bool parallel = true);

/// Fraction of trials in which all `terms` well-separated supports are
/// recovered within 1e-2 in position and 0.1 in coefficient.
double peel_success_rate(std::size_t terms, std::size_t n, std::size_t trials,
                         std::uint64_t seed, double beta = 1.6,
                         std::size_t k_max = 20, bool parallel = true);

double cosine_similarity(const HDVector& a, const HDVector& b);

}  // namespace vfa
