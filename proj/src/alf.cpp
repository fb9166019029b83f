#include "ovwk/alf.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>

namespace ovwk {

const std::array<std::pair<int8_t, int8_t>, 12>& alf_luma_offsets() {
  // |dy|+|dx| <= 3, upper half in raster order.
  static const std::array<std::pair<int8_t, int8_t>, 12> k = {{
      {-3, 0},
      {-2, -1}, {-2, 0}, {-2, 1},
      {-1, -2}, {-1, -1}, {-1, 0}, {-1, 1}, {-1, 2},
      {0, -3}, {0, -2}, {0, -1},
  }};
  return k;
}

const std::array<std::pair<int8_t, int8_t>, 6>& alf_chroma_offsets() {
  static const std::array<std::pair<int8_t, int8_t>, 6> k = {{
      {-2, 0},
      {-1, -1}, {-1, 0}, {-1, 1},
      {0, -2}, {0, -1},
  }};
  return k;
}

void AlfFilterBank::normalize_centers() {
  for (auto& f : luma) {
    int s = std::accumulate(f.begin(), f.end() - 1, 0);
    f[kAlfLumaCoeffs - 1] = static_cast<int16_t>(128 - 2 * s);
  }
  int s = std::accumulate(chroma.begin(), chroma.end() - 1, 0);
  chroma[kAlfChromaCoeffs - 1] = static_cast<int16_t>(128 - 2 * s);
}

bool AlfFilterBank::valid() const {
  auto sum_ok = [](const auto& f) {
    int s = std::accumulate(f.begin(), f.end() - 1, 0);
    return 2 * s + f.back() == 128;
  };
  for (const auto& f : luma) {
    if (!sum_ok(f)) return false;
  }
  return sum_ok(chroma);
}

uint8_t alf_classify_scalar(const Sample* blk, ptrdiff_t stride, int bitdepth) {
  int32_t gh = 0, gv = 0, gd0 = 0, gd1 = 0;
  for (int y = 0; y < 4; ++y) {
    const Sample* r = blk + y * stride;
    for (int x = 0; x < 4; ++x) {
      const int c2 = 2 * r[x];
      gh += std::abs(c2 - r[x - 1] - r[x + 1]);
      gv += std::abs(c2 - r[x - stride] - r[x + stride]);
      gd0 += std::abs(c2 - r[x - stride - 1] - r[x + stride + 1]);
      gd1 += std::abs(c2 - r[x - stride + 1] - r[x + stride - 1]);
    }
  }

  const int32_t hv_max = std::max(gh, gv), hv_min = std::min(gh, gv);
  const int32_t d_max = std::max(gd0, gd1), d_min = std::min(gd0, gd1);

  // Dominant axis by cross multiplication, then ratio tests at 2 and 4.5
  // (a > 2b, 2a > 9b in integer form).
  const bool hv = static_cast<int64_t>(hv_max) * d_min >= static_cast<int64_t>(d_max) * hv_min;
  const int32_t a = hv ? hv_max : d_max;
  const int32_t b = hv ? hv_min : d_min;
  int dir = 0;
  if (a > 2 * b) dir = (2 * a > 9 * b) ? (hv ? 2 : 4) : (hv ? 1 : 3);

  const int32_t act = (gh + gv) >> (bitdepth - 6);
  int activity = 0;
  for (int32_t t : {16, 96, 512, 2048}) activity += act >= t;

  return static_cast<uint8_t>(5 * dir + activity);
}

namespace {

template <int NPairs>
inline Sample alf_filter_sample(const Sample* s, ptrdiff_t stride, const int16_t* coeff,
                                const std::array<std::pair<int8_t, int8_t>, NPairs>& offs,
                                int bitdepth) {
  const int c = *s;
  int32_t acc = 0;
  for (int i = 0; i < NPairs; ++i) {
    const ptrdiff_t o = offs[i].first * stride + offs[i].second;
    acc += coeff[i] * ((s[o] - c) + (s[-o] - c));
  }
  return clip_sample(c + ((acc + 64) >> kAlfShift), bitdepth);
}

} // namespace

void alf_filter_luma_scalar(const Sample* src, ptrdiff_t src_stride, Sample* dst,
                            ptrdiff_t dst_stride, int w, int h, const AlfFilterBank& bank,
                            const uint8_t* classes, ptrdiff_t class_stride, int bitdepth) {
  assert(w % 4 == 0 && h % 4 == 0);
  const auto& offs = alf_luma_offsets();
  for (int y = 0; y < h; ++y) {
    const Sample* s = src + y * src_stride;
    Sample* d = dst + y * dst_stride;
    const uint8_t* cls_row = classes + (y / 4) * class_stride;
    for (int x = 0; x < w; ++x) {
      const int16_t* coeff = bank.luma[cls_row[x / 4]].data();
      d[x] = alf_filter_sample<12>(s + x, src_stride, coeff, offs, bitdepth);
    }
  }
}

void alf_filter_chroma_scalar(const Sample* src, ptrdiff_t src_stride, Sample* dst,
                              ptrdiff_t dst_stride, int w, int h, const AlfFilterBank& bank,
                              int bitdepth) {
  const auto& offs = alf_chroma_offsets();
  for (int y = 0; y < h; ++y) {
    const Sample* s = src + y * src_stride;
    Sample* d = dst + y * dst_stride;
    for (int x = 0; x < w; ++x) {
      d[x] = alf_filter_sample<6>(s + x, src_stride, bank.chroma.data(), offs, bitdepth);
    }
  }
}

} // namespace ovwk
