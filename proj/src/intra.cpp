#include "ovwk/intra.hpp"

#include <bit>
#include <cassert>

namespace ovwk {

void intra_dc_scalar(const Sample* top, const Sample* left, int w, int h, int bitdepth,
                     Sample* dst, ptrdiff_t dst_stride) {
  assert(w >= kMinBlockSize && h >= kMinBlockSize);
  int32_t sum = 0;
  for (int x = 0; x < w; ++x) sum += top[x];
  for (int y = 0; y < h; ++y) sum += left[y];
  const Sample dc = clip_sample((sum + (w + h) / 2) / (w + h), bitdepth);
  for (int y = 0; y < h; ++y) {
    Sample* d = dst + y * dst_stride;
    for (int x = 0; x < w; ++x) d[x] = dc;
  }
}

void intra_planar_scalar(const Sample* top, const Sample* left, Sample top_ext, Sample left_ext,
                         int w, int h, int bitdepth, Sample* dst, ptrdiff_t dst_stride) {
  assert(w >= kMinBlockSize && h >= kMinBlockSize);
  assert((w & (w - 1)) == 0 && (h & (h - 1)) == 0);
  const int shift = std::countr_zero(static_cast<unsigned>(w)) +
                    std::countr_zero(static_cast<unsigned>(h)) + 1;
  const int32_t rnd = w * h;
  for (int y = 0; y < h; ++y) {
    Sample* d = dst + y * dst_stride;
    const int32_t ver_base = w * ((y + 1) * left_ext);
    for (int x = 0; x < w; ++x) {
      const int32_t hor = h * ((w - 1 - x) * left[y] + (x + 1) * top_ext);
      const int32_t ver = w * ((h - 1 - y) * top[x]) + ver_base;
      d[x] = clip_sample((hor + ver + rnd) >> shift, bitdepth);
    }
  }
}

} // namespace ovwk
