// 128-bit vector variants (8 lanes of 16-bit samples), SSE2 baseline on
// x86-64. Every routine must match its scalar twin bit for bit; saturating
// int32->int16 packs implement the same clip as the scalar clip_int16.

#include "ovwk/kernels.hpp"

#if defined(__SSE2__)

#include <emmintrin.h>

#include <cassert>
#include <cstring>

namespace ovwk::vec {

namespace {

inline void mul_accum(__m128i a, __m128i b, __m128i& lo, __m128i& hi) {
  const __m128i l = _mm_mullo_epi16(a, b);
  const __m128i h = _mm_mulhi_epi16(a, b);
  lo = _mm_add_epi32(lo, _mm_unpacklo_epi16(l, h));
  hi = _mm_add_epi32(hi, _mm_unpackhi_epi16(l, h));
}

inline __m128i shift_round_pack(__m128i lo, __m128i hi, int32_t rnd, int shift) {
  const __m128i r = _mm_set1_epi32(rnd);
  lo = _mm_srai_epi32(_mm_add_epi32(lo, r), shift);
  hi = _mm_srai_epi32(_mm_add_epi32(hi, r), shift);
  return _mm_packs_epi32(lo, hi);
}

inline __m128i clamp_bd(__m128i v, int bitdepth) {
  const __m128i lo = _mm_setzero_si128();
  const __m128i hi = _mm_set1_epi16(static_cast<int16_t>((1 << bitdepth) - 1));
  return _mm_min_epi16(_mm_max_epi16(v, lo), hi);
}

inline __m128i abs16(__m128i v) {
  return _mm_max_epi16(v, _mm_sub_epi16(_mm_setzero_si128(), v));
}

} // namespace

void inverse_transform(const CoeffBlock& c, TrKind kind_h, TrKind kind_v, int bitdepth,
                       Sample* dst, ptrdiff_t dst_stride) {
  const int w = c.width;
  const int h = c.height;
  const TransformMatrix& th = transform_matrix(kind_h, w);
  const TransformMatrix& tv = transform_matrix(kind_v, h);
  const int nz_cols = std::min(c.sig_cols, tr_nonzero_limit(kind_h, w));
  const int nz_rows = std::min(c.sig_rows, tr_nonzero_limit(kind_v, h));

  alignas(16) int16_t tmp[64 * 64];
  const int shift2 = 20 - bitdepth;
  const int32_t rnd2 = 1 << (shift2 - 1);

  if (w == 4) {
    // 4-wide: single low half of the register.
    for (int y = 0; y < nz_rows; ++y) {
      const Coeff* cr = c.row(y);
      __m128i acc = _mm_setzero_si128();
      __m128i unused = _mm_setzero_si128();
      for (int x = 0; x < nz_cols; ++x) {
        const __m128i bv = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(th.row(x)));
        mul_accum(_mm_set1_epi16(cr[x]), bv, acc, unused);
      }
      const __m128i packed = shift_round_pack(acc, acc, 64, kInvStage1Shift);
      _mm_storel_epi64(reinterpret_cast<__m128i*>(tmp + 4 * y), packed);
    }
    for (int m = 0; m < h; ++m) {
      __m128i acc = _mm_setzero_si128();
      __m128i unused = _mm_setzero_si128();
      for (int y = 0; y < nz_rows; ++y) {
        const __m128i row = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(tmp + 4 * y));
        mul_accum(_mm_set1_epi16(tv.row(y)[m]), row, acc, unused);
      }
      const __m128i packed = shift_round_pack(acc, acc, rnd2, shift2);
      _mm_storel_epi64(reinterpret_cast<__m128i*>(dst + m * dst_stride), packed);
    }
    return;
  }

  for (int y = 0; y < nz_rows; ++y) {
    const Coeff* cr = c.row(y);
    int16_t* tr = tmp + static_cast<size_t>(y) * w;
    for (int n = 0; n < w; n += 8) {
      __m128i lo = _mm_setzero_si128(), hi = _mm_setzero_si128();
      for (int x = 0; x < nz_cols; ++x) {
        const __m128i bv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(th.row(x) + n));
        mul_accum(_mm_set1_epi16(cr[x]), bv, lo, hi);
      }
      _mm_storeu_si128(reinterpret_cast<__m128i*>(tr + n), shift_round_pack(lo, hi, 64, kInvStage1Shift));
    }
  }
  for (int m = 0; m < h; ++m) {
    Sample* out = dst + m * dst_stride;
    for (int n = 0; n < w; n += 8) {
      __m128i lo = _mm_setzero_si128(), hi = _mm_setzero_si128();
      for (int y = 0; y < nz_rows; ++y) {
        const __m128i row = _mm_loadu_si128(reinterpret_cast<const __m128i*>(tmp + static_cast<size_t>(y) * w + n));
        mul_accum(_mm_set1_epi16(tv.row(y)[m]), row, lo, hi);
      }
      _mm_storeu_si128(reinterpret_cast<__m128i*>(out + n), shift_round_pack(lo, hi, rnd2, shift2));
    }
  }
}

namespace {

inline void interp_pass_1d(const Sample* src, ptrdiff_t sstride, ptrdiff_t step,
                           const InterpFilter& f, Sample* dst, ptrdiff_t dstride, int w, int h,
                           int bitdepth) {
  const int off = f.reach_before();
  for (int y = 0; y < h; ++y) {
    const Sample* s = src + y * sstride;
    Sample* d = dst + y * dstride;
    int x = 0;
    for (; x + 8 <= w; x += 8) {
      __m128i lo = _mm_setzero_si128(), hi = _mm_setzero_si128();
      for (int i = 0; i < f.len; ++i) {
        const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(s + x + (i - off) * step));
        mul_accum(_mm_set1_epi16(f.taps[i]), v, lo, hi);
      }
      const __m128i packed = shift_round_pack(lo, hi, 32, 6);
      _mm_storeu_si128(reinterpret_cast<__m128i*>(d + x), clamp_bd(packed, bitdepth));
    }
    for (; x < w; ++x) {
      int32_t acc = 0;
      for (int i = 0; i < f.len; ++i) acc += f.taps[i] * s[x + (i - off) * step];
      d[x] = clip_sample((acc + 32) >> 6, bitdepth);
    }
  }
}

} // namespace

void interp_2d(const Sample* ref, ptrdiff_t ref_stride, int frac_x, int frac_y,
               const FilterSet& fs, bool chroma_plane, int w, int h, int bitdepth, Sample* dst,
               ptrdiff_t dst_stride) {
  if (frac_x == 0 && frac_y == 0) {
    for (int y = 0; y < h; ++y) {
      std::memcpy(dst + y * dst_stride, ref + y * ref_stride, sizeof(Sample) * w);
    }
    return;
  }
  if (frac_y == 0) {
    interp_pass_1d(ref, ref_stride, 1, fs.pick(chroma_plane, frac_x), dst, dst_stride, w, h, bitdepth);
    return;
  }
  if (frac_x == 0) {
    interp_pass_1d(ref, ref_stride, ref_stride, fs.pick(chroma_plane, frac_y), dst, dst_stride, w, h, bitdepth);
    return;
  }

  const InterpFilter& fx = fs.pick(chroma_plane, frac_x);
  const InterpFilter& fy = fs.pick(chroma_plane, frac_y);
  const int off_x = fx.reach_before();
  const int off_y = fy.reach_before();

  alignas(16) int16_t tmp[(128 + 7) * 128];
  const int rows = h + fy.len - 1;
  for (int y = 0; y < rows; ++y) {
    const Sample* s = ref + (y - off_y) * ref_stride;
    int16_t* t = tmp + static_cast<size_t>(y) * w;
    int x = 0;
    for (; x + 8 <= w; x += 8) {
      __m128i lo = _mm_setzero_si128(), hi = _mm_setzero_si128();
      for (int i = 0; i < fx.len; ++i) {
        const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(s + x + i - off_x));
        mul_accum(_mm_set1_epi16(fx.taps[i]), v, lo, hi);
      }
      lo = _mm_srai_epi32(lo, 2);
      hi = _mm_srai_epi32(hi, 2);
      _mm_storeu_si128(reinterpret_cast<__m128i*>(t + x), _mm_packs_epi32(lo, hi));
    }
    for (; x < w; ++x) {
      int32_t acc = 0;
      for (int i = 0; i < fx.len; ++i) acc += fx.taps[i] * s[x + i - off_x];
      t[x] = clip_int16(acc >> 2);
    }
  }
  for (int y = 0; y < h; ++y) {
    Sample* d = dst + y * dst_stride;
    int x = 0;
    for (; x + 8 <= w; x += 8) {
      __m128i lo = _mm_setzero_si128(), hi = _mm_setzero_si128();
      for (int i = 0; i < fy.len; ++i) {
        const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(tmp + static_cast<size_t>(y + i) * w + x));
        mul_accum(_mm_set1_epi16(fy.taps[i]), v, lo, hi);
      }
      const __m128i packed = shift_round_pack(lo, hi, 512, 10);
      _mm_storeu_si128(reinterpret_cast<__m128i*>(d + x), clamp_bd(packed, bitdepth));
    }
    for (; x < w; ++x) {
      int32_t acc = 0;
      for (int i = 0; i < fy.len; ++i) acc += fy.taps[i] * tmp[static_cast<size_t>(y + i) * w + x];
      d[x] = clip_sample((acc + 512) >> 10, bitdepth);
    }
  }
}

void intra_dc(const Sample* top, const Sample* left, int w, int h, int bitdepth, Sample* dst,
              ptrdiff_t dst_stride) {
  int32_t sum = 0;
  for (int x = 0; x < w; ++x) sum += top[x];
  for (int y = 0; y < h; ++y) sum += left[y];
  const Sample dc = clip_sample((sum + (w + h) / 2) / (w + h), bitdepth);
  const __m128i v = _mm_set1_epi16(dc);
  for (int y = 0; y < h; ++y) {
    Sample* d = dst + y * dst_stride;
    int x = 0;
    for (; x + 8 <= w; x += 8) _mm_storeu_si128(reinterpret_cast<__m128i*>(d + x), v);
    for (; x < w; ++x) d[x] = dc;
  }
}

void intra_planar(const Sample* top, const Sample* left, Sample top_ext, Sample left_ext, int w,
                  int h, int bitdepth, Sample* dst, ptrdiff_t dst_stride) {
  assert((w & (w - 1)) == 0 && (h & (h - 1)) == 0);
  int log2w = 0, log2h = 0;
  while ((1 << log2w) < w) ++log2w;
  while ((1 << log2h) < h) ++log2h;
  const int shift = log2w + log2h + 1;
  const int32_t rnd = w * h;

  alignas(16) int16_t xp1[128], wm1x[128];
  for (int x = 0; x < w; ++x) {
    xp1[x] = static_cast<int16_t>(x + 1);
    wm1x[x] = static_cast<int16_t>(w - 1 - x);
  }
  const __m128i tev = _mm_set1_epi16(top_ext);

  for (int y = 0; y < h; ++y) {
    Sample* d = dst + y * dst_stride;
    const __m128i lv = _mm_set1_epi16(left[y]);
    const __m128i hr = _mm_set1_epi16(static_cast<int16_t>(h - 1 - y));
    const __m128i ver_c = _mm_set1_epi32((y + 1) * left_ext);
    const __m128i rndv = _mm_set1_epi32(rnd);
    int x = 0;
    for (; x + 8 <= w; x += 8) {
      __m128i hlo = _mm_setzero_si128(), hhi = _mm_setzero_si128();
      mul_accum(_mm_loadu_si128(reinterpret_cast<const __m128i*>(wm1x + x)), lv, hlo, hhi);
      mul_accum(_mm_loadu_si128(reinterpret_cast<const __m128i*>(xp1 + x)), tev, hlo, hhi);
      hlo = _mm_slli_epi32(hlo, log2h);
      hhi = _mm_slli_epi32(hhi, log2h);

      __m128i vlo = _mm_setzero_si128(), vhi = _mm_setzero_si128();
      mul_accum(_mm_loadu_si128(reinterpret_cast<const __m128i*>(top + x)), hr, vlo, vhi);
      vlo = _mm_slli_epi32(_mm_add_epi32(vlo, ver_c), log2w);
      vhi = _mm_slli_epi32(_mm_add_epi32(vhi, ver_c), log2w);

      __m128i lo = _mm_srai_epi32(_mm_add_epi32(_mm_add_epi32(hlo, vlo), rndv), shift);
      __m128i hi = _mm_srai_epi32(_mm_add_epi32(_mm_add_epi32(hhi, vhi), rndv), shift);
      _mm_storeu_si128(reinterpret_cast<__m128i*>(d + x), clamp_bd(_mm_packs_epi32(lo, hi), bitdepth));
    }
    for (; x < w; ++x) {
      const int32_t hor = h * ((w - 1 - x) * left[y] + (x + 1) * top_ext);
      const int32_t ver = w * ((h - 1 - y) * top[x] + (y + 1) * left_ext);
      d[x] = clip_sample((hor + ver + rnd) >> shift, bitdepth);
    }
  }
}

void sao_apply(const Sample* src, ptrdiff_t src_stride, Sample* dst, ptrdiff_t dst_stride, int w,
               int h, const SaoParams& p, int bitdepth) {
  if (p.mode == SaoMode::Off) {
    for (int y = 0; y < h; ++y) std::memcpy(dst + y * dst_stride, src + y * src_stride, sizeof(Sample) * w);
    return;
  }

  if (p.mode == SaoMode::Band) {
    const int shift = bitdepth - 5;
    const int base = p.dir_or_band;
    const __m128i basev = _mm_set1_epi16(static_cast<int16_t>(base));
    __m128i offv[4];
    for (int k = 0; k < 4; ++k) offv[k] = _mm_set1_epi16(p.offsets[k]);
    for (int y = 0; y < h; ++y) {
      const Sample* s = src + y * src_stride;
      Sample* d = dst + y * dst_stride;
      int x = 0;
      for (; x + 8 <= w; x += 8) {
        const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(s + x));
        const __m128i idx = _mm_sub_epi16(_mm_srai_epi16(v, shift), basev);
        __m128i delta = _mm_setzero_si128();
        for (int k = 0; k < 4; ++k) {
          delta = _mm_add_epi16(delta, _mm_and_si128(_mm_cmpeq_epi16(idx, _mm_set1_epi16(static_cast<int16_t>(k))), offv[k]));
        }
        _mm_storeu_si128(reinterpret_cast<__m128i*>(d + x), clamp_bd(_mm_add_epi16(v, delta), bitdepth));
      }
      for (; x < w; ++x) {
        const int band = s[x] >> shift;
        const int idx = band - base;
        d[x] = (idx >= 0 && idx < 4) ? clip_sample(s[x] + p.offsets[idx], bitdepth) : s[x];
      }
    }
    return;
  }

  static constexpr int dxs[4] = {-1, 0, -1, 1};
  static constexpr int dys[4] = {0, -1, -1, -1};
  const ptrdiff_t na = dys[p.dir_or_band] * src_stride + dxs[p.dir_or_band];
  const ptrdiff_t nb = -na;
  const __m128i off0 = _mm_set1_epi16(p.offsets[0]);
  const __m128i off1 = _mm_set1_epi16(p.offsets[1]);
  const __m128i off2 = _mm_set1_epi16(p.offsets[2]);
  const __m128i off3 = _mm_set1_epi16(p.offsets[3]);
  const __m128i two = _mm_set1_epi16(2);
  for (int y = 0; y < h; ++y) {
    const Sample* s = src + y * src_stride;
    Sample* d = dst + y * dst_stride;
    int x = 0;
    for (; x + 8 <= w; x += 8) {
      const __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(s + x));
      const __m128i a = _mm_loadu_si128(reinterpret_cast<const __m128i*>(s + x + na));
      const __m128i b = _mm_loadu_si128(reinterpret_cast<const __m128i*>(s + x + nb));
      // cmpgt yields -1 on true, so sa = [c>a] - [a>c] = sign(c-a)
      const __m128i sa = _mm_sub_epi16(_mm_cmpgt_epi16(a, c), _mm_cmpgt_epi16(c, a));
      const __m128i sb = _mm_sub_epi16(_mm_cmpgt_epi16(b, c), _mm_cmpgt_epi16(c, b));
      const __m128i idx = _mm_add_epi16(two, _mm_add_epi16(sa, sb));
      __m128i delta = _mm_and_si128(_mm_cmpeq_epi16(idx, _mm_setzero_si128()), off0);
      delta = _mm_add_epi16(delta, _mm_and_si128(_mm_cmpeq_epi16(idx, _mm_set1_epi16(1)), off1));
      delta = _mm_add_epi16(delta, _mm_and_si128(_mm_cmpeq_epi16(idx, _mm_set1_epi16(3)), off2));
      delta = _mm_add_epi16(delta, _mm_and_si128(_mm_cmpeq_epi16(idx, _mm_set1_epi16(4)), off3));
      _mm_storeu_si128(reinterpret_cast<__m128i*>(d + x), clamp_bd(_mm_add_epi16(c, delta), bitdepth));
    }
    for (; x < w; ++x) {
      const int c = s[x];
      const int sgn1 = (c > s[x + na]) - (s[x + na] > c);
      const int sgn2 = (c > s[x + nb]) - (s[x + nb] > c);
      const int idx = 2 + sgn1 + sgn2;
      if (idx == 2) {
        d[x] = s[x];
      } else {
        const int oi = idx < 2 ? idx : idx - 1;
        d[x] = clip_sample(c + p.offsets[oi], bitdepth);
      }
    }
  }
}

uint8_t alf_classify(const Sample* blk, ptrdiff_t stride, int bitdepth) {
  // hv accumulator lanes: {gh pair, gh pair, gv pair, gv pair} as i32;
  // diag accumulator likewise for d0/d1. 64-bit loads keep reads inside the
  // 2-sample window.
  const __m128i ones = _mm_set1_epi16(1);
  __m128i acc_hv = _mm_setzero_si128();
  __m128i acc_d = _mm_setzero_si128();
  for (int y = 0; y < 4; ++y) {
    const Sample* r = blk + y * stride;
    const __m128i c = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(r));
    const __m128i c2 = _mm_add_epi16(c, c);
    const __m128i cc = _mm_unpacklo_epi64(c2, c2);

    const __m128i l = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(r - 1));
    const __m128i rr = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(r + 1));
    const __m128i u = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(r - stride));
    const __m128i dn = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(r + stride));
    const __m128i ul = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(r - stride - 1));
    const __m128i dr = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(r + stride + 1));
    const __m128i ur = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(r - stride + 1));
    const __m128i dl = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(r + stride - 1));

    const __m128i g_hv = abs16(_mm_sub_epi16(_mm_sub_epi16(cc, _mm_unpacklo_epi64(l, u)),
                                             _mm_unpacklo_epi64(rr, dn)));
    const __m128i g_d = abs16(_mm_sub_epi16(_mm_sub_epi16(cc, _mm_unpacklo_epi64(ul, ur)),
                                            _mm_unpacklo_epi64(dr, dl)));
    acc_hv = _mm_add_epi32(acc_hv, _mm_madd_epi16(g_hv, ones));
    acc_d = _mm_add_epi32(acc_d, _mm_madd_epi16(g_d, ones));
  }
  alignas(16) int32_t hv[4], dd[4];
  _mm_storeu_si128(reinterpret_cast<__m128i*>(hv), acc_hv);
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dd), acc_d);
  const int32_t gh = hv[0] + hv[1], gv = hv[2] + hv[3];
  const int32_t gd0 = dd[0] + dd[1], gd1 = dd[2] + dd[3];

  const int32_t hv_max = std::max(gh, gv), hv_min = std::min(gh, gv);
  const int32_t d_max = std::max(gd0, gd1), d_min = std::min(gd0, gd1);
  const bool is_hv = static_cast<int64_t>(hv_max) * d_min >= static_cast<int64_t>(d_max) * hv_min;
  const int32_t a = is_hv ? hv_max : d_max;
  const int32_t b = is_hv ? hv_min : d_min;
  int dir = 0;
  if (a > 2 * b) dir = (2 * a > 9 * b) ? (is_hv ? 2 : 4) : (is_hv ? 1 : 3);

  const int32_t act = (gh + gv) >> (bitdepth - 6);
  int activity = 0;
  for (int32_t t : {16, 96, 512, 2048}) activity += act >= t;
  return static_cast<uint8_t>(5 * dir + activity);
}

namespace {

template <int NPairs, typename CoeffVecFn>
inline void alf_filter_row_chunk(const Sample* s, ptrdiff_t stride, Sample* d, int x,
                                 const std::array<std::pair<int8_t, int8_t>, NPairs>& offs,
                                 CoeffVecFn coeff_vec, int bitdepth) {
  const __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(s + x));
  __m128i lo = _mm_setzero_si128(), hi = _mm_setzero_si128();
  for (int i = 0; i < NPairs; ++i) {
    const ptrdiff_t o = offs[i].first * stride + offs[i].second;
    const __m128i p0 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(s + x + o));
    const __m128i p1 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(s + x - o));
    const __m128i diff = _mm_add_epi16(_mm_sub_epi16(p0, c), _mm_sub_epi16(p1, c));
    mul_accum(diff, coeff_vec(i), lo, hi);
  }
  const __m128i czero = _mm_setzero_si128();
  const __m128i c_lo = _mm_unpacklo_epi16(c, czero);
  const __m128i c_hi = _mm_unpackhi_epi16(c, czero);
  const __m128i rnd = _mm_set1_epi32(64);
  lo = _mm_add_epi32(c_lo, _mm_srai_epi32(_mm_add_epi32(lo, rnd), kAlfShift));
  hi = _mm_add_epi32(c_hi, _mm_srai_epi32(_mm_add_epi32(hi, rnd), kAlfShift));
  _mm_storeu_si128(reinterpret_cast<__m128i*>(d + x), clamp_bd(_mm_packs_epi32(lo, hi), bitdepth));
}

template <int NPairs>
inline Sample alf_filter_sample_scalar(const Sample* s, ptrdiff_t stride, const int16_t* coeff,
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

void alf_filter_luma(const Sample* src, ptrdiff_t src_stride, Sample* dst, ptrdiff_t dst_stride,
                     int w, int h, const AlfFilterBank& bank, const uint8_t* classes,
                     ptrdiff_t class_stride, int bitdepth) {
  const auto& offs = alf_luma_offsets();
  for (int y = 0; y < h; ++y) {
    const Sample* s = src + y * src_stride;
    Sample* d = dst + y * dst_stride;
    const uint8_t* cls_row = classes + (y / 4) * class_stride;
    int x = 0;
    for (; x + 8 <= w; x += 8) {
      const int16_t* ca = bank.luma[cls_row[x / 4]].data();
      const int16_t* cb = bank.luma[cls_row[x / 4 + 1]].data();
      alf_filter_row_chunk<12>(s, src_stride, d, x, offs,
                               [&](int i) { return _mm_set_epi16(cb[i], cb[i], cb[i], cb[i], ca[i], ca[i], ca[i], ca[i]); },
                               bitdepth);
    }
    for (; x < w; ++x) {
      d[x] = alf_filter_sample_scalar<12>(s + x, src_stride, bank.luma[cls_row[x / 4]].data(), offs, bitdepth);
    }
  }
}

void alf_filter_chroma(const Sample* src, ptrdiff_t src_stride, Sample* dst, ptrdiff_t dst_stride,
                       int w, int h, const AlfFilterBank& bank, int bitdepth) {
  const auto& offs = alf_chroma_offsets();
  __m128i cv[6];
  for (int i = 0; i < 6; ++i) cv[i] = _mm_set1_epi16(bank.chroma[i]);
  for (int y = 0; y < h; ++y) {
    const Sample* s = src + y * src_stride;
    Sample* d = dst + y * dst_stride;
    int x = 0;
    for (; x + 8 <= w; x += 8) {
      alf_filter_row_chunk<6>(s, src_stride, d, x, offs, [&](int i) { return cv[i]; }, bitdepth);
    }
    for (; x < w; ++x) {
      d[x] = alf_filter_sample_scalar<6>(s + x, src_stride, bank.chroma.data(), offs, bitdepth);
    }
  }
}

} // namespace ovwk::vec

#endif // __SSE2__
