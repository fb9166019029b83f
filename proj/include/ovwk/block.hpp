#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ovwk {

using Sample = int16_t;
using Coeff = int16_t;

inline constexpr int kMinBlockSize = 4;

inline Sample clip_sample(int v, int bitdepth) {
  const int hi = (1 << bitdepth) - 1;
  return static_cast<Sample>(v < 0 ? 0 : (v > hi ? hi : v));
}

inline int16_t clip_int16(int32_t v) {
  if (v < INT16_MIN) return INT16_MIN;
  if (v > INT16_MAX) return INT16_MAX;
  return static_cast<int16_t>(v);
}

/// Non-owning view of a row-major 2-D sample region.
struct PlaneView {
  Sample* data = nullptr;
  int width = 0;
  int height = 0;
  ptrdiff_t stride = 0;

  Sample* row(int y) { return data + static_cast<ptrdiff_t>(y) * stride; }
  const Sample* row(int y) const { return data + static_cast<ptrdiff_t>(y) * stride; }
  Sample& at(int x, int y) { return row(y)[x]; }
  Sample at(int x, int y) const { return row(y)[x]; }

  PlaneView sub(int x, int y, int w, int h) const {
    return {data + static_cast<ptrdiff_t>(y) * stride + x, w, h, stride};
  }
};

/// Owning w×h block of samples. Residuals use the full int16 range; picture
/// samples stay within [0, 2^bitdepth - 1].
struct SampleBlock {
  int width = 0;
  int height = 0;
  int bitdepth = 10;
  std::vector<Sample> samples;

  SampleBlock() = default;
  SampleBlock(int w, int h, int bd = 10) : width(w), height(h), bitdepth(bd), samples(static_cast<size_t>(w) * h, 0) {}

  Sample* row(int y) { return samples.data() + static_cast<size_t>(y) * width; }
  const Sample* row(int y) const { return samples.data() + static_cast<size_t>(y) * width; }
  Sample& at(int x, int y) { return row(y)[x]; }
  Sample at(int x, int y) const { return row(y)[x]; }
  PlaneView view() { return {samples.data(), width, height, width}; }

  bool operator==(const SampleBlock&) const = default;
};

/// Transform coefficients with the bounding box of the nonzero region.
/// Entries outside [0,sig_cols)×[0,sig_rows) must be zero; inverse transforms
/// bound their loops by it (last-significant-position shortcut).
struct CoeffBlock {
  int width = 0;
  int height = 0;
  int sig_cols = 0;
  int sig_rows = 0;
  std::vector<Coeff> coeffs;

  CoeffBlock() = default;
  CoeffBlock(int w, int h) : width(w), height(h), coeffs(static_cast<size_t>(w) * h, 0) {}

  Coeff* row(int y) { return coeffs.data() + static_cast<size_t>(y) * width; }
  const Coeff* row(int y) const { return coeffs.data() + static_cast<size_t>(y) * width; }
  Coeff& at(int x, int y) { return row(y)[x]; }
  Coeff at(int x, int y) const { return row(y)[x]; }

  /// Recompute sig_cols/sig_rows by scanning for the nonzero bounding box.
  void compute_sig() {
    sig_cols = 0;
    sig_rows = 0;
    for (int y = 0; y < height; ++y) {
      const Coeff* r = row(y);
      for (int x = 0; x < width; ++x) {
        if (r[x] != 0) {
          if (x >= sig_cols) sig_cols = x + 1;
          if (y >= sig_rows) sig_rows = y + 1;
        }
      }
    }
  }

  bool operator==(const CoeffBlock&) const = default;
};

} // namespace ovwk
