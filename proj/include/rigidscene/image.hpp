#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rigidscene/errors.hpp"

namespace rigidscene {

// Row-major float image, samples in [0,1], 1 or 3 channels.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<float> v;

    ImageBuffer() = default;
    ImageBuffer(int w, int h, int c, float fill = 0.0f);

    float& at(int x, int y, int c) { return v[(static_cast<size_t>(y) * width + x) * channels + c]; }
    float at(int x, int y, int c) const { return v[(static_cast<size_t>(y) * width + x) * channels + c]; }

    size_t size() const { return v.size(); }
    void validate() const;
};

// Row-major float raster with per-pixel validity.
struct FloatRaster {
    int width = 0;
    int height = 0;
    std::vector<float> v;
    std::vector<uint8_t> valid;

    FloatRaster() = default;
    FloatRaster(int w, int h, float fill = 0.0f, bool valid_fill = true);

    float& at(int x, int y) { return v[static_cast<size_t>(y) * width + x]; }
    float at(int x, int y) const { return v[static_cast<size_t>(y) * width + x]; }
    bool is_valid(int x, int y) const { return valid[static_cast<size_t>(y) * width + x] != 0; }
    void set_valid(int x, int y, bool b) { valid[static_cast<size_t>(y) * width + x] = b ? 1 : 0; }

    size_t size() const { return v.size(); }
};

// Level 0 = full resolution, each level half the previous (rounded down).
using Pyramid = std::vector<ImageBuffer>;

struct SampleResult {
    float value[3] = {0.0f, 0.0f, 0.0f};
    bool valid = false;
};

// Bilinear interpolation of the four neighbors. Out-of-bounds queries
// ([0, W-1] x [0, H-1]) return valid = false, never a clamped sample.
SampleResult bilinear_sample(const ImageBuffer& img, double qx, double qy);

// 2x2 box-filtered pyramid. Throws ConfigError when the image cannot
// support n_levels halvings.
Pyramid build_pyramid(const ImageBuffer& img, int n_levels);

// Per-pixel SSIM with 3x3 mean-filter local statistics, C1 = 0.01^2,
// C2 = 0.03^2, averaged over channels; windows are clipped at image
// borders and restricted to valid pixels when validity rasters are given.
// Output valid where the window contains at least one valid pixel.
FloatRaster ssim_map(const ImageBuffer& a, const ImageBuffer& b);
FloatRaster ssim_map(const ImageBuffer& a, const ImageBuffer& b,
                     const std::vector<uint8_t>* valid_mask);

// Forward differences; last column/row zero. Multi-channel images reduce
// to the mean absolute channel gradient. Throws ConfigError for W or H < 2.
std::pair<FloatRaster, FloatRaster> image_gradients(const ImageBuffer& img);

} // namespace rigidscene
