#include "ovwk/interp.hpp"

#include <cassert>
#include <numeric>

namespace ovwk {

const FilterSet& FilterSet::defaults() {
  static const FilterSet fs = [] {
    FilterSet s;
    s.luma[0] = {8, {0, 0, 0, 64, 0, 0, 0, 0}};
    s.luma[1] = {8, {-1, 4, -10, 58, 17, -5, 1, 0}};
    s.luma[2] = {8, {-1, 4, -11, 40, 40, -11, 4, -1}};
    s.luma[3] = {8, {0, 1, -5, 17, 58, -10, 4, -1}};
    s.chroma[0] = {4, {0, 64, 0, 0}};
    s.chroma[1] = {4, {-2, 58, 10, -2}};
    s.chroma[2] = {4, {-4, 54, 16, -2}};
    s.chroma[3] = {4, {-2, 10, 58, -2}};
    return s;
  }();
  return fs;
}

bool filter_set_valid(const FilterSet& fs) {
  auto ok = [](const InterpFilter& f) {
    return std::accumulate(f.taps.begin(), f.taps.begin() + f.len, 0) == 64;
  };
  for (int p = 0; p < 4; ++p) {
    if (!ok(fs.luma[p]) || !ok(fs.chroma[p])) return false;
  }
  return true;
}

namespace {

void copy_block(const Sample* src, ptrdiff_t ss, Sample* dst, ptrdiff_t ds, int w, int h) {
  for (int y = 0; y < h; ++y) {
    const Sample* s = src + y * ss;
    Sample* d = dst + y * ds;
    for (int x = 0; x < w; ++x) d[x] = s[x];
  }
}

void filter_1d(const Sample* src, ptrdiff_t ss, ptrdiff_t step, const InterpFilter& f,
               Sample* dst, ptrdiff_t ds, int w, int h, int bitdepth) {
  const int off = f.reach_before();
  for (int y = 0; y < h; ++y) {
    const Sample* s = src + y * ss;
    Sample* d = dst + y * ds;
    for (int x = 0; x < w; ++x) {
      int32_t acc = 0;
      for (int i = 0; i < f.len; ++i) acc += f.taps[i] * s[x + (i - off) * step];
      d[x] = clip_sample((acc + 32) >> 6, bitdepth);
    }
  }
}

} // namespace

void interp_2d_scalar(const Sample* ref, ptrdiff_t ref_stride, int frac_x, int frac_y,
                      const FilterSet& fs, bool chroma_plane, int w, int h, int bitdepth,
                      Sample* dst, ptrdiff_t dst_stride) {
  assert(frac_x >= 0 && frac_x < 4 && frac_y >= 0 && frac_y < 4);
  if (frac_x == 0 && frac_y == 0) {
    copy_block(ref, ref_stride, dst, dst_stride, w, h);
    return;
  }
  if (frac_y == 0) {
    filter_1d(ref, ref_stride, 1, fs.pick(chroma_plane, frac_x), dst, dst_stride, w, h, bitdepth);
    return;
  }
  if (frac_x == 0) {
    filter_1d(ref, ref_stride, ref_stride, fs.pick(chroma_plane, frac_y), dst, dst_stride, w, h, bitdepth);
    return;
  }

  const InterpFilter& fx = fs.pick(chroma_plane, frac_x);
  const InterpFilter& fy = fs.pick(chroma_plane, frac_y);
  const int off_x = fx.reach_before();
  const int off_y = fy.reach_before();

  // Horizontal pass over h + len-1 rows into 16-bit intermediates.
  int16_t tmp[(128 + 7) * 128];
  const int rows = h + fy.len - 1;
  for (int y = 0; y < rows; ++y) {
    const Sample* s = ref + (y - off_y) * ref_stride;
    int16_t* t = tmp + static_cast<size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      int32_t acc = 0;
      for (int i = 0; i < fx.len; ++i) acc += fx.taps[i] * s[x + i - off_x];
      t[x] = clip_int16(acc >> 2);
    }
  }
  for (int y = 0; y < h; ++y) {
    Sample* d = dst + y * dst_stride;
    for (int x = 0; x < w; ++x) {
      int32_t acc = 0;
      for (int i = 0; i < fy.len; ++i) acc += fy.taps[i] * tmp[static_cast<size_t>(y + i) * w + x];
      d[x] = clip_sample((acc + 512) >> 10, bitdepth);
    }
  }
}

} // namespace ovwk
