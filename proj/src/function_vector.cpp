#include "vfa/function_vector.hpp"

#include <cstring>
#include <istream>
#include <ostream>

namespace vfa {

namespace {

// Combined terms are dropped past this point; the vector stays authoritative.
constexpr std::size_t kMaxTrackedTerms = 64;

bool same_fpe(const FpeEncoder& a, const FpeEncoder& b) {
    return a.same_config(b) && a.seed() == b.seed() &&
           a.distribution().name() == b.distribution().name() &&
           a.real_valued() == b.real_valued();
}

HDVector scaled(const HDVector& x, double s) {
    cvec d = x.data();
    for (auto& v : d) v *= s;
    return HDVector(std::move(d), x.family(),
                    x.family() == Family::block ? x.blocks() : 0);
}

}  // namespace

bool same_encoder(const AnyEncoder& a, const AnyEncoder& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<FpeEncoder>(a))
        return same_fpe(std::get<FpeEncoder>(a), std::get<FpeEncoder>(b));
    const auto& ma = std::get<MultiEncoder>(a);
    const auto& mb = std::get<MultiEncoder>(b);
    if (ma.mode() != mb.mode() || ma.dim() != mb.dim()) return false;
    if (ma.mode() == MultiEncoder::Mode::joint2d) {
        const auto& pa = ma.joint_phases();
        const auto& pb = mb.joint_phases();
        if (pa.x.size() != pb.x.size()) return false;
        for (std::size_t i = 0; i < pa.x.size(); ++i)
            if (pa.x[i] != pb.x[i] || pa.y[i] != pb.y[i]) return false;
        return true;
    }
    if (ma.parts().size() != mb.parts().size()) return false;
    for (std::size_t i = 0; i < ma.parts().size(); ++i)
        if (!same_fpe(ma.parts()[i], mb.parts()[i])) return false;
    return true;
}

HDVector encode_point(const AnyEncoder& enc, const std::vector<double>& point) {
    if (std::holds_alternative<FpeEncoder>(enc)) {
        if (point.size() != 1)
            throw ArityMismatch("scalar encoder given a tuple");
        return std::get<FpeEncoder>(enc).encode(point[0]);
    }
    return std::get<MultiEncoder>(enc).encode(point);
}

std::size_t encoder_arity(const AnyEncoder& enc) {
    return std::holds_alternative<FpeEncoder>(enc)
               ? 1
               : std::get<MultiEncoder>(enc).arity();
}

FunctionVector::FunctionVector(HDVector vec, AnyEncoder enc,
                               std::vector<Term> terms)
    : vec_(std::move(vec)), enc_(std::move(enc)), terms_(std::move(terms)) {}

FunctionVector from_samples(const AnyEncoder& enc,
                            const std::vector<std::vector<double>>& points,
                            const std::vector<double>& coeffs) {
    if (points.size() != coeffs.size())
        throw LengthMismatch("points and coefficients differ in length");
    if (points.empty()) throw EmptyInput("a function needs at least one term");
    HDVector acc = scaled(encode_point(enc, points[0]), coeffs[0]);
    for (std::size_t k = 1; k < points.size(); ++k)
        acc = bundle(acc, scaled(encode_point(enc, points[k]), coeffs[k]));
    acc = scaled(acc, 1.0 / double(acc.blocks()));
    std::vector<Term> terms;
    terms.reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k)
        terms.push_back({points[k], coeffs[k]});
    return FunctionVector(std::move(acc), enc, std::move(terms));
}

FunctionVector from_samples(const FpeEncoder& enc,
                            const std::vector<double>& points,
                            const std::vector<double>& coeffs) {
    std::vector<std::vector<double>> pts;
    pts.reserve(points.size());
    for (double p : points) pts.push_back({p});
    return from_samples(AnyEncoder{enc}, pts, coeffs);
}

double eval(const FunctionVector& f, const std::vector<double>& s) {
    HDVector z = encode_point(f.encoder(), s);
    return (double(f.vec().blocks()) * inner(f.vec(), z)).real();
}

double eval(const FunctionVector& f, double s) {
    return eval(f, std::vector<double>{s});
}

FunctionVector add(const FunctionVector& f, const FunctionVector& g) {
    if (!same_encoder(f.encoder(), g.encoder()))
        throw EncoderMismatch("functions live in different encoders");
    std::vector<Term> terms;
    if (f.has_terms() && g.has_terms() &&
        f.terms().size() + g.terms().size() <= kMaxTrackedTerms) {
        terms = f.terms();
        terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    }
    return FunctionVector(bundle(f.vec(), g.vec()), f.encoder(),
                          std::move(terms));
}

FunctionVector shift(const FunctionVector& f, const std::vector<double>& r) {
    if (r.size() != encoder_arity(f.encoder()))
        throw ArityMismatch("shift arity does not match the encoder");
    for (double v : r)
        if (!std::isfinite(v))
            throw std::invalid_argument("shift must be finite");
    std::vector<double> neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    HDVector v = bind(f.vec(), encode_point(f.encoder(), neg));
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
        Term moved = t;
        for (std::size_t i = 0; i < r.size(); ++i) moved.r[i] -= r[i];
        terms.push_back(std::move(moved));
    }
    return FunctionVector(std::move(v), f.encoder(), std::move(terms));
}

FunctionVector shift(const FunctionVector& f, double r) {
    return shift(f, std::vector<double>{r});
}

FunctionVector convolve(const FunctionVector& f, const FunctionVector& g) {
    if (!same_encoder(f.encoder(), g.encoder()))
        throw EncoderMismatch("functions live in different encoders");
    HDVector v =
        scaled(bind(f.vec(), g.vec()), double(f.vec().blocks()));
    std::vector<Term> terms;
    if (f.has_terms() && g.has_terms() &&
        f.terms().size() * g.terms().size() <= kMaxTrackedTerms) {
        for (const Term& a : f.terms())
            for (const Term& b : g.terms()) {
                Term t;
                t.r.resize(a.r.size());
                for (std::size_t i = 0; i < a.r.size(); ++i)
                    t.r[i] = a.r[i] + b.r[i];
                t.alpha = a.alpha * b.alpha;
                terms.push_back(std::move(t));
            }
    }
    return FunctionVector(std::move(v), f.encoder(), std::move(terms));
}

double f_inner(const FunctionVector& f, const FunctionVector& g) {
    if (!same_encoder(f.encoder(), g.encoder()))
        throw EncoderMismatch("functions live in different encoders");
    double b = double(f.vec().blocks());
    return (b * b * inner(f.vec(), g.vec())).real();
}

double oracle_eval(const std::function<double(double)>& kernel,
                   const std::vector<Term>& terms, double s) {
    double acc = 0.0;
    for (const Term& t : terms) acc += t.alpha * kernel(t.r[0] - s);
    return acc;
}

// ---- serialization ---------------------------------------------------------
// Record layout (little-endian, version 1):
//   "VFV1" | n:u64 | family:u8 | blocks:u64 | n complex doubles |
//   encoder record | term count:u64 | terms (arity:u32, doubles, alpha)
// Encoder records hold the distribution spec string plus the sampling
// configuration, so loading re-derives the identical base deterministically.

namespace {

template <typename T>
void put(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("truncated function record");
    return v;
}

void put_string(std::ostream& out, const std::string& s) {
    put<std::uint32_t>(out, std::uint32_t(s.size()));
    out.write(s.data(), std::streamsize(s.size()));
}

std::string get_string(std::istream& in) {
    auto len = get<std::uint32_t>(in);
    std::string s(len, '\0');
    in.read(s.data(), len);
    if (!in) throw std::runtime_error("truncated function record");
    return s;
}

void put_fpe(std::ostream& out, const FpeEncoder& e) {
    put_string(out, e.distribution().name());
    put<std::uint8_t>(out, std::uint8_t(e.family()));
    put<std::uint64_t>(out, e.dim());
    put<std::uint64_t>(out, e.block_count());
    put<std::uint64_t>(out, e.seed());
    put<std::uint8_t>(out, e.real_valued() ? 1 : 0);
}

FpeEncoder get_fpe(std::istream& in) {
    std::string dist = get_string(in);
    auto family = Family(get<std::uint8_t>(in));
    auto n = get<std::uint64_t>(in);
    auto blocks = get<std::uint64_t>(in);
    auto seed = get<std::uint64_t>(in);
    bool real_valued = get<std::uint8_t>(in) != 0;
    return FpeEncoder::sample_base(PhaseDistribution::parse(dist), family, n,
                                   seed, family == Family::block ? blocks : 0,
                                   real_valued);
}

}  // namespace

void FunctionVector::save(std::ostream& out) const {
    out.write("VFV1", 4);
    put<std::uint64_t>(out, vec_.size());
    put<std::uint8_t>(out, std::uint8_t(vec_.family()));
    put<std::uint64_t>(out, vec_.blocks());
    for (const auto& v : vec_.data()) {
        put<double>(out, v.real());
        put<double>(out, v.imag());
    }
    if (std::holds_alternative<FpeEncoder>(enc_)) {
        put<std::uint8_t>(out, 0);
        put_fpe(out, std::get<FpeEncoder>(enc_));
    } else {
        const auto& m = std::get<MultiEncoder>(enc_);
        if (m.mode() == MultiEncoder::Mode::joint2d)
            throw std::runtime_error(
                "joint2d encoders are sampler-backed and not serializable");
        put<std::uint8_t>(out, 1);
        put<std::uint8_t>(out, std::uint8_t(m.mode()));
        put<std::uint32_t>(out, std::uint32_t(m.parts().size()));
        for (const auto& p : m.parts()) put_fpe(out, p);
    }
    put<std::uint64_t>(out, terms_.size());
    for (const Term& t : terms_) {
        put<std::uint32_t>(out, std::uint32_t(t.r.size()));
        for (double v : t.r) put<double>(out, v);
        put<double>(out, t.alpha);
    }
}

FunctionVector FunctionVector::load(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "VFV1", 4) != 0)
        throw std::runtime_error("not a version-1 function record");
    auto n = get<std::uint64_t>(in);
    auto family = Family(get<std::uint8_t>(in));
    auto blocks = get<std::uint64_t>(in);
    cvec data(n);
    for (auto& v : data) {
        double re = get<double>(in);
        double im = get<double>(in);
        v = cplx{re, im};
    }
    HDVector vec(std::move(data), family,
                 family == Family::block ? blocks : 0);
    auto kind = get<std::uint8_t>(in);
    AnyEncoder enc = [&]() -> AnyEncoder {
        if (kind == 0) return get_fpe(in);
        auto mode = MultiEncoder::Mode(get<std::uint8_t>(in));
        auto count = get<std::uint32_t>(in);
        std::vector<FpeEncoder> parts;
        parts.reserve(count);
        for (std::uint32_t i = 0; i < count; ++i) parts.push_back(get_fpe(in));
        switch (mode) {
            case MultiEncoder::Mode::cartesian:
                return MultiEncoder::cartesian(std::move(parts));
            case MultiEncoder::Mode::hex_concat:
                return MultiEncoder::hex_concat(std::move(parts[0]),
                                                std::move(parts[1]));
            case MultiEncoder::Mode::hex_cc_projection:
                return MultiEncoder::hex_cc_projection(std::move(parts[0]),
                                                       std::move(parts[1]),
                                                       std::move(parts[2]));
            default:
                throw std::runtime_error("unknown encoder mode in record");
        }
    }();
    auto term_count = get<std::uint64_t>(in);
    std::vector<Term> terms;
    terms.reserve(term_count);
    for (std::uint64_t k = 0; k < term_count; ++k) {
        Term t;
        auto arity = get<std::uint32_t>(in);
        t.r.resize(arity);
        for (auto& v : t.r) v = get<double>(in);
        t.alpha = get<double>(in);
        terms.push_back(std::move(t));
    }
    return FunctionVector(std::move(vec), std::move(enc), std::move(terms));
}

}  // namespace vfa
