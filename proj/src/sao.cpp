#include "ovwk/sao.hpp"

#include <cassert>

namespace ovwk {

namespace {
inline int sign3(int v) { return (v > 0) - (v < 0); }
} // namespace

void sao_apply_scalar(const Sample* src, ptrdiff_t src_stride, Sample* dst, ptrdiff_t dst_stride,
                      int w, int h, const SaoParams& p, int bitdepth) {
  switch (p.mode) {
    case SaoMode::Off:
      for (int y = 0; y < h; ++y) {
        const Sample* s = src + y * src_stride;
        Sample* d = dst + y * dst_stride;
        for (int x = 0; x < w; ++x) d[x] = s[x];
      }
      return;

    case SaoMode::Band: {
      const int shift = bitdepth - 5;
      const int base = p.dir_or_band;
      for (int y = 0; y < h; ++y) {
        const Sample* s = src + y * src_stride;
        Sample* d = dst + y * dst_stride;
        for (int x = 0; x < w; ++x) {
          const int band = s[x] >> shift;
          const int idx = band - base;
          d[x] = (idx >= 0 && idx < 4) ? clip_sample(s[x] + p.offsets[idx], bitdepth) : s[x];
        }
      }
      return;
    }

    case SaoMode::Edge: {
      assert(p.dir_or_band < 4);
      static constexpr int dx[4] = {-1, 0, -1, 1};
      static constexpr int dy[4] = {0, -1, -1, -1};
      const ptrdiff_t na = dy[p.dir_or_band] * src_stride + dx[p.dir_or_band];
      const ptrdiff_t nb = -na;
      for (int y = 0; y < h; ++y) {
        const Sample* s = src + y * src_stride;
        Sample* d = dst + y * dst_stride;
        for (int x = 0; x < w; ++x) {
          const int c = s[x];
          const int idx = 2 + sign3(c - s[x + na]) + sign3(c - s[x + nb]);
          // idx 0,1,3,4 -> offsets 0..3; idx 2 passes through
          if (idx == 2) {
            d[x] = s[x];
          } else {
            const int oi = idx < 2 ? idx : idx - 1;
            d[x] = clip_sample(c + p.offsets[oi], bitdepth);
          }
        }
      }
      return;
    }
  }
}

} // namespace ovwk
