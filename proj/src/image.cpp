#include "rigidscene/image.hpp"

#include <algorithm>
#include <cmath>

namespace rigidscene {

namespace {
constexpr double kSsimC1 = 0.01 * 0.01;
constexpr double kSsimC2 = 0.03 * 0.03;
} // namespace

ImageBuffer::ImageBuffer(int w, int h, int c, float fill)
    : width(w), height(h), channels(c),
      v(static_cast<size_t>(w) * h * c, fill) {
    if (w <= 0 || h <= 0 || (c != 1 && c != 3))
        throw DataError("image: invalid dimensions");
}

void ImageBuffer::validate() const {
    if (width <= 0 || height <= 0 || (channels != 1 && channels != 3))
        throw DataError("image: invalid dimensions");
    if (v.size() != static_cast<size_t>(width) * height * channels)
        throw DataError("image: storage length mismatch");
    for (float s : v)
        if (!(s >= 0.0f && s <= 1.0f))
            throw DataError("image: sample outside [0,1]");
}

FloatRaster::FloatRaster(int w, int h, float fill, bool valid_fill)
    : width(w), height(h),
      v(static_cast<size_t>(w) * h, fill),
      valid(static_cast<size_t>(w) * h, valid_fill ? 1 : 0) {
    if (w <= 0 || h <= 0) throw DataError("raster: invalid dimensions");
}

SampleResult bilinear_sample(const ImageBuffer& img, double qx, double qy) {
    SampleResult r;
    if (!(qx >= 0.0) || !(qy >= 0.0) || !(qx <= img.width - 1) || !(qy <= img.height - 1))
        return r;

    const int x0 = static_cast<int>(qx);
    const int y0 = static_cast<int>(qy);
    const int x1 = std::min(x0 + 1, img.width - 1);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const float fx = static_cast<float>(qx - x0);
    const float fy = static_cast<float>(qy - y0);

    for (int c = 0; c < img.channels; ++c) {
        const float top = (1.0f - fx) * img.at(x0, y0, c) + fx * img.at(x1, y0, c);
        const float bot = (1.0f - fx) * img.at(x0, y1, c) + fx * img.at(x1, y1, c);
        r.value[c] = (1.0f - fy) * top + fy * bot;
    }
    r.valid = true;
    return r;
}

Pyramid build_pyramid(const ImageBuffer& img, int n_levels) {
    if (n_levels < 1) throw ConfigError("pyramid: need at least one level");
    if ((img.width >> (n_levels - 1)) < 1 || (img.height >> (n_levels - 1)) < 1)
        throw ConfigError("pyramid: too many levels for image size");

    Pyramid pyr;
    pyr.reserve(n_levels);
    pyr.push_back(img);
    for (int l = 1; l < n_levels; ++l) {
        const ImageBuffer& prev = pyr.back();
        ImageBuffer next(prev.width / 2, prev.height / 2, prev.channels);
#pragma omp parallel for
        for (int y = 0; y < next.height; ++y) {
            for (int x = 0; x < next.width; ++x) {
                for (int c = 0; c < next.channels; ++c) {
                    const float s = prev.at(2 * x, 2 * y, c) + prev.at(2 * x + 1, 2 * y, c) +
                                    prev.at(2 * x, 2 * y + 1, c) + prev.at(2 * x + 1, 2 * y + 1, c);
                    next.at(x, y, c) = 0.25f * s;
                }
            }
        }
        pyr.push_back(std::move(next));
    }
    return pyr;
}

FloatRaster ssim_map(const ImageBuffer& a, const ImageBuffer& b) {
    return ssim_map(a, b, nullptr);
}

FloatRaster ssim_map(const ImageBuffer& a, const ImageBuffer& b,
                     const std::vector<uint8_t>* valid_mask) {
    if (a.width != b.width || a.height != b.height || a.channels != b.channels)
        throw DataError("ssim: dimension mismatch");

    const int w = a.width, h = a.height, ch = a.channels;
    FloatRaster out(w, h, 0.0f, false);

#pragma omp parallel for
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double ssim_sum = 0.0;
            int n = 0;
            double ma = 0, mb = 0, maa = 0, mbb = 0, mab = 0;
            for (int c = 0; c < ch; ++c) {
                ma = mb = maa = mbb = mab = 0.0;
                n = 0;
                for (int dy = -1; dy <= 1; ++dy) {
                    const int yy = y + dy;
                    if (yy < 0 || yy >= h) continue;
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int xx = x + dx;
                        if (xx < 0 || xx >= w) continue;
                        if (valid_mask && !(*valid_mask)[static_cast<size_t>(yy) * w + xx]) continue;
                        const double va = a.at(xx, yy, c);
                        const double vb = b.at(xx, yy, c);
                        ma += va;
                        mb += vb;
                        maa += va * va;
                        mbb += vb * vb;
                        mab += va * vb;
                        ++n;
                    }
                }
                if (n == 0) break;
                ma /= n; mb /= n; maa /= n; mbb /= n; mab /= n;
                const double var_a = maa - ma * ma;
                const double var_b = mbb - mb * mb;
                const double cov = mab - ma * mb;
                const double num = (2.0 * ma * mb + kSsimC1) * (2.0 * cov + kSsimC2);
                const double den = (ma * ma + mb * mb + kSsimC1) * (var_a + var_b + kSsimC2);
                ssim_sum += std::clamp(num / den, -1.0, 1.0);
            }
            if (n > 0) {
                out.at(x, y) = static_cast<float>(ssim_sum / ch);
                out.set_valid(x, y, true);
            }
        }
    }
    return out;
}

std::pair<FloatRaster, FloatRaster> image_gradients(const ImageBuffer& img) {
    if (img.width < 2 || img.height < 2)
        throw ConfigError("gradients: image must be at least 2x2");

    FloatRaster gx(img.width, img.height, 0.0f, true);
    FloatRaster gy(img.width, img.height, 0.0f, true);

#pragma omp parallel for
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            if (img.channels == 1) {
                if (x + 1 < img.width) gx.at(x, y) = img.at(x + 1, y, 0) - img.at(x, y, 0);
                if (y + 1 < img.height) gy.at(x, y) = img.at(x, y + 1, 0) - img.at(x, y, 0);
            } else {
                // Mean absolute channel gradient (the norm used by the
                // edge-aware smoothness weight).
                float sx = 0.0f, sy = 0.0f;
                for (int c = 0; c < img.channels; ++c) {
                    if (x + 1 < img.width) sx += std::abs(img.at(x + 1, y, c) - img.at(x, y, c));
                    if (y + 1 < img.height) sy += std::abs(img.at(x, y + 1, c) - img.at(x, y, c));
                }
                if (x + 1 < img.width) gx.at(x, y) = sx / img.channels;
                if (y + 1 < img.height) gy.at(x, y) = sy / img.channels;
            }
        }
    }
    return {std::move(gx), std::move(gy)};
}

} // namespace rigidscene
