#pragma once

#include <iosfwd>
#include <variant>

#include "vfa/shaping.hpp"

namespace vfa {

/// Support point with its coefficient. r has the arity of the encoder.
struct Term {
    std::vector<double> r;
    double alpha;
};

using AnyEncoder = std::variant<FpeEncoder, MultiEncoder>;

/// True when both encoders would produce identical encodings (same kind,
/// configuration, and base phases).
bool same_encoder(const AnyEncoder& a, const AnyEncoder& b);

HDVector encode_point(const AnyEncoder& enc, const std::vector<double>& point);
std::size_t encoder_arity(const AnyEncoder& enc);

/// Vector representing f(x) = sum_k alpha_k K(r_k - x). Stored scaled by the
/// reciprocal block count so inner products stay normalized; eval undoes the
/// scale. The originating terms are kept alongside when known.
class FunctionVector {
  public:
    FunctionVector(HDVector vec, AnyEncoder enc,
                   std::vector<Term> terms = {});

    const HDVector& vec() const { return vec_; }
    const AnyEncoder& encoder() const { return enc_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool has_terms() const { return !terms_.empty(); }

    void save(std::ostream& out) const;
    /// Reads a record written by save. Only encoders with a parseable
    /// distribution spec round-trip; others throw InvalidDensity.
    static FunctionVector load(std::istream& in);

  private:
    HDVector vec_;
    AnyEncoder enc_;
    std::vector<Term> terms_;
};

FunctionVector from_samples(const AnyEncoder& enc,
                            const std::vector<std::vector<double>>& points,
                            const std::vector<double>& coeffs);
/// 1-D convenience overload.
FunctionVector from_samples(const FpeEncoder& enc,
                            const std::vector<double>& points,
                            const std::vector<double>& coeffs);

double eval(const FunctionVector& f, const std::vector<double>& s);
double eval(const FunctionVector& f, double s);

FunctionVector add(const FunctionVector& f, const FunctionVector& g);

/// g with g(x) = f(x + r): binds with the encoding of -r, which moves every
/// support point of f by -r. Exact by the exponent-addition identity.
FunctionVector shift(const FunctionVector& f, const std::vector<double>& r);
FunctionVector shift(const FunctionVector& f, double r);

/// eval(convolve(f, g), u) = sum_{k,l} alpha_k beta_l K(r_k + r_l - u).
FunctionVector convolve(const FunctionVector& f, const FunctionVector& g);

/// Estimates sum_{k,l} alpha_k beta_l K(r_k - r_l).
double f_inner(const FunctionVector& f, const FunctionVector& g);

/// Exact kernel-space readout sum_k alpha_k kernel(r_k - s) for 1-D terms.
double oracle_eval(const std::function<double(double)>& kernel,
                   const std::vector<Term>& terms, double s);

}  // namespace vfa
