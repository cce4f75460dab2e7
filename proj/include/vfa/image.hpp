#pragma once

#include <iosfwd>
#include <string>

#include "vfa/fpe.hpp"

namespace vfa {

/// Grayscale raster, intensities in [0, 1], row-major (pix[y * width + x]).
struct Image {
    std::size_t width = 0, height = 0;
    std::vector<double> pix;

    double& at(std::size_t x, std::size_t y) { return pix[y * width + x]; }
    double at(std::size_t x, std::size_t y) const {
        return pix[y * width + x];
    }
    static Image zeros(std::size_t w, std::size_t h) {
        return {w, h, std::vector<double>(w * h, 0.0)};
    }
};

/// Image held as one vector over a torus: pixel (x, y) contributes
/// I(x,y) * bind(encX(x), encY(y)), scaled by the reciprocal block count.
/// The encoders use discrete roots matching width/height, so translations
/// wrap around.
struct ImageScene {
    HDVector vec;
    std::size_t width, height;
    FpeEncoder encX, encY;
};

/// Hadamard encoder with discrete_roots(size) phases.
FpeEncoder make_image_encoder(std::size_t size, std::size_t n,
                              std::uint64_t seed);

ImageScene image_encode(const Image& im, const FpeEncoder& encX,
                        const FpeEncoder& encY);

/// Readout at every integer pixel.
Image image_decode(const ImageScene& scene);

/// Binds with the encodings of (dx, dy); exact circular shift for integers.
ImageScene image_translate(const ImageScene& scene, double dx, double dy);

/// Superposition of two scenes over the same encoders.
ImageScene scene_add(const ImageScene& a, const ImageScene& b);

/// Text rendered from a built-in 5x7 font, scaled to fill the raster.
Image render_text(const std::string& text, std::size_t width,
                  std::size_t height);

Image load_pgm(std::istream& in);
Image load_pgm(const std::string& path);
/// binary selects P5 over P2; intensities clamp to [0, 1] at maxval 255.
void save_pgm(std::ostream& out, const Image& im, bool binary = false);
void save_pgm(const std::string& path, const Image& im, bool binary = false);

double image_correlation(const Image& a, const Image& b);

}  // namespace vfa
