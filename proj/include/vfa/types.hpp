#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace vfa {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Binding algebra a vector belongs to. Block count: hadamard acts as n
/// blocks of size 1, circular as one block of size n, block(k) as k blocks
/// of size n/k.
enum class Family { hadamard, circular, block };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct FamilyMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotUnitary : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidDensity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GridMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ArityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EncoderMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidSpacing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OptimizerDidNotBracket : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyLattice : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPositiveGram : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace vfa
