#include "vfa/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "vfa/core.hpp"

namespace vfa {

namespace {

void check_image_encoder(const FpeEncoder& enc, std::size_t size,
                         const char* axis) {
    if (!enc.period() || std::llround(*enc.period()) != (long long)size)
        throw SizeMismatch(std::string("encoder period does not match the ") +
                           axis + " extent");
}

bool same_base(const FpeEncoder& a, const FpeEncoder& b) {
    return a.same_config(b) && a.seed() == b.seed() &&
           a.distribution().name() == b.distribution().name();
}

}  // namespace

FpeEncoder make_image_encoder(std::size_t size, std::size_t n,
                              std::uint64_t seed) {
    return FpeEncoder::sample_base(PhaseDistribution::discrete_roots(int(size)),
                                   Family::hadamard, n, seed);
}

ImageScene image_encode(const Image& im, const FpeEncoder& encX,
                        const FpeEncoder& encY) {
    if (im.pix.size() != im.width * im.height)
        throw SizeMismatch("pixel buffer does not match width*height");
    check_image_encoder(encX, im.width, "x");
    check_image_encoder(encY, im.height, "y");
    std::vector<HDVector> zx, zy;
    zx.reserve(im.width);
    zy.reserve(im.height);
    for (std::size_t x = 0; x < im.width; ++x)
        zx.push_back(encX.encode(double(x)));
    for (std::size_t y = 0; y < im.height; ++y)
        zy.push_back(encY.encode(double(y)));
    cvec d(zx[0].size(), cplx{0.0, 0.0});
    for (std::size_t y = 0; y < im.height; ++y)
        for (std::size_t x = 0; x < im.width; ++x) {
            double w = im.at(x, y);
            if (w == 0.0) continue;
            HDVector b = bind(zx[x], zy[y]);
            for (std::size_t i = 0; i < d.size(); ++i) d[i] += w * b[i];
        }
    for (auto& v : d) v /= double(zx[0].blocks());
    HDVector vec(std::move(d), zx[0].family(),
                 zx[0].family() == Family::block ? zx[0].blocks() : 0);
    return {std::move(vec), im.width, im.height, encX, encY};
}

Image image_decode(const ImageScene& scene) {
    Image out = Image::zeros(scene.width, scene.height);
    double B = double(scene.vec.blocks());
    std::vector<HDVector> zx, zy;
    zx.reserve(scene.width);
    zy.reserve(scene.height);
    for (std::size_t x = 0; x < scene.width; ++x)
        zx.push_back(scene.encX.encode(double(x)));
    for (std::size_t y = 0; y < scene.height; ++y)
        zy.push_back(scene.encY.encode(double(y)));
    for (std::size_t y = 0; y < scene.height; ++y)
        for (std::size_t x = 0; x < scene.width; ++x)
            out.at(x, y) =
                (B * inner(scene.vec, bind(zx[x], zy[y]))).real();
    return out;
}

ImageScene image_translate(const ImageScene& scene, double dx, double dy) {
    HDVector shift =
        bind(scene.encX.encode(dx), scene.encY.encode(dy));
    return {bind(scene.vec, shift), scene.width, scene.height, scene.encX,
            scene.encY};
}

ImageScene scene_add(const ImageScene& a, const ImageScene& b) {
    if (a.width != b.width || a.height != b.height)
        throw SizeMismatch("scene extents differ");
    if (!same_base(a.encX, b.encX) || !same_base(a.encY, b.encY))
        throw EncoderMismatch("scenes use different encoders");
    return {bundle(a.vec, b.vec), a.width, a.height, a.encX, a.encY};
}

// ---- text rendering --------------------------------------------------------

namespace {

// 5x7 font, one glyph per entry, column-major bytes, bit 0 = top row.
struct Glyph {
    char ch;
    unsigned char col[5];
};

constexpr Glyph kFont[] = {
    {' ', {0x00, 0x00, 0x00, 0x00, 0x00}},
    {'0', {0x3E, 0x51, 0x49, 0x45, 0x3E}},
    {'1', {0x00, 0x42, 0x7F, 0x40, 0x00}},
    {'2', {0x42, 0x61, 0x51, 0x49, 0x46}},
    {'3', {0x21, 0x41, 0x45, 0x4B, 0x31}},
    {'4', {0x18, 0x14, 0x12, 0x7F, 0x10}},
    {'5', {0x27, 0x45, 0x45, 0x45, 0x39}},
    {'6', {0x3C, 0x4A, 0x49, 0x49, 0x30}},
    {'7', {0x01, 0x71, 0x09, 0x05, 0x03}},
    {'8', {0x36, 0x49, 0x49, 0x49, 0x36}},
    {'9', {0x06, 0x49, 0x49, 0x29, 0x1E}},
    {'A', {0x7E, 0x11, 0x11, 0x11, 0x7E}},
    {'B', {0x7F, 0x49, 0x49, 0x49, 0x36}},
    {'C', {0x3E, 0x41, 0x41, 0x41, 0x22}},
    {'D', {0x7F, 0x41, 0x41, 0x22, 0x1C}},
    {'E', {0x7F, 0x49, 0x49, 0x49, 0x41}},
    {'F', {0x7F, 0x09, 0x09, 0x09, 0x01}},
    {'G', {0x3E, 0x41, 0x49, 0x49, 0x7A}},
    {'H', {0x7F, 0x08, 0x08, 0x08, 0x7F}},
    {'I', {0x00, 0x41, 0x7F, 0x41, 0x00}},
    {'J', {0x20, 0x40, 0x41, 0x3F, 0x01}},
    {'K', {0x7F, 0x08, 0x14, 0x22, 0x41}},
    {'L', {0x7F, 0x40, 0x40, 0x40, 0x40}},
    {'M', {0x7F, 0x02, 0x0C, 0x02, 0x7F}},
    {'N', {0x7F, 0x04, 0x08, 0x10, 0x7F}},
    {'O', {0x3E, 0x41, 0x41, 0x41, 0x3E}},
    {'P', {0x7F, 0x09, 0x09, 0x09, 0x06}},
    {'Q', {0x3E, 0x41, 0x51, 0x21, 0x5E}},
    {'R', {0x7F, 0x09, 0x19, 0x29, 0x46}},
    {'S', {0x46, 0x49, 0x49, 0x49, 0x31}},
    {'T', {0x01, 0x01, 0x7F, 0x01, 0x01}},
    {'U', {0x3F, 0x40, 0x40, 0x40, 0x3F}},
    {'V', {0x1F, 0x20, 0x40, 0x20, 0x1F}},
    {'W', {0x3F, 0x40, 0x38, 0x40, 0x3F}},
    {'X', {0x63, 0x14, 0x08, 0x14, 0x63}},
    {'Y', {0x07, 0x08, 0x70, 0x08, 0x07}},
    {'Z', {0x61, 0x51, 0x49, 0x45, 0x43}},
};

const unsigned char* glyph_for(char c) {
    char up = char(std::toupper(static_cast<unsigned char>(c)));
    for (const auto& g : kFont)
        if (g.ch == up) return g.col;
    return kFont[0].col;  // unknown characters render as space
}

}  // namespace

Image render_text(const std::string& text, std::size_t width,
                  std::size_t height) {
    if (text.empty()) return Image::zeros(width, height);
    // Lay the glyphs out on a small canvas, then scale with nearest neighbor.
    std::size_t cw = text.size() * 6 - 1;
    std::size_t ch = 7;
    Image small = Image::zeros(cw, ch);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char* cols = glyph_for(text[i]);
        for (std::size_t cx = 0; cx < 5; ++cx)
            for (std::size_t cy = 0; cy < 7; ++cy)
                if (cols[cx] >> cy & 1) small.at(i * 6 + cx, cy) = 1.0;
    }
    Image out = Image::zeros(width, height);
    // Fit preserving aspect ratio, centered.
    double scale =
        std::min(double(width) / double(cw), double(height) / double(ch));
    double ox = (double(width) - scale * double(cw)) / 2.0;
    double oy = (double(height) - scale * double(ch)) / 2.0;
    for (std::size_t y = 0; y < height; ++y)
        for (std::size_t x = 0; x < width; ++x) {
            double sx = (double(x) - ox) / scale;
            double sy = (double(y) - oy) / scale;
            if (sx < 0.0 || sy < 0.0 || sx >= double(cw) || sy >= double(ch))
                continue;
            out.at(x, y) = small.at(std::size_t(sx), std::size_t(sy));
        }
    return out;
}

// ---- PGM I/O ---------------------------------------------------------------

Image load_pgm(std::istream& in) {
    std::string magic;
    in >> magic;
    if (magic != "P2" && magic != "P5")
        throw std::runtime_error("not a P2/P5 PGM stream");
    auto next_token = [&in]() {
        std::string tok;
        for (;;) {
            if (!(in >> tok)) throw std::runtime_error("truncated PGM header");
            if (tok[0] == '#') {
                std::string rest;
                std::getline(in, rest);
                continue;
            }
            return tok;
        }
    };
    std::size_t w = std::stoul(next_token());
    std::size_t h = std::stoul(next_token());
    double maxval = std::stod(next_token());
    if (maxval <= 0.0) throw std::runtime_error("bad PGM maxval");
    Image im = Image::zeros(w, h);
    if (magic == "P2") {
        for (auto& v : im.pix) {
            double raw;
            if (!(in >> raw)) throw std::runtime_error("truncated PGM data");
            v = raw / maxval;
        }
    } else {
        in.get();  // single whitespace after maxval
        std::vector<unsigned char> buf(w * h);
        in.read(reinterpret_cast<char*>(buf.data()),
                std::streamsize(buf.size()));
        if (!in) throw std::runtime_error("truncated PGM data");
        for (std::size_t i = 0; i < buf.size(); ++i)
            im.pix[i] = double(buf[i]) / maxval;
    }
    return im;
}

Image load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_pgm(in);
}

void save_pgm(std::ostream& out, const Image& im, bool binary) {
    out << (binary ? "P5" : "P2") << "\n"
        << im.width << " " << im.height << "\n255\n";
    auto quantize = [](double v) {
        return static_cast<unsigned char>(
            std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
    };
    if (binary) {
        std::vector<unsigned char> buf(im.pix.size());
        for (std::size_t i = 0; i < buf.size(); ++i)
            buf[i] = quantize(im.pix[i]);
        out.write(reinterpret_cast<const char*>(buf.data()),
                  std::streamsize(buf.size()));
    } else {
        for (std::size_t y = 0; y < im.height; ++y) {
            for (std::size_t x = 0; x < im.width; ++x)
                out << int(quantize(im.at(x, y))) << (x + 1 < im.width ? " "
                                                                       : "");
            out << "\n";
        }
    }
}

void save_pgm(const std::string& path, const Image& im, bool binary) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    save_pgm(out, im, binary);
}

double image_correlation(const Image& a, const Image& b) {
    if (a.width != b.width || a.height != b.height)
        throw SizeMismatch("image extents differ");
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.pix.size(); ++i) {
        ma += a.pix[i];
        mb += b.pix[i];
    }
    ma /= double(a.pix.size());
    mb /= double(b.pix.size());
    double num = 0.0, da = 0.0, db = 0.0;
    for (std::size_t i = 0; i < a.pix.size(); ++i) {
        double xa = a.pix[i] - ma, xb = b.pix[i] - mb;
        num += xa * xb;
        da += xa * xa;
        db += xb * xb;
    }
    if (da == 0.0 || db == 0.0) return 0.0;
    return num / std::sqrt(da * db);
}

}  // namespace vfa
