#include "ovwk/transform.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ovwk {

const char* tr_kind_name(TrKind k) {
  switch (k) {
    case TrKind::Dct2: return "DCT2";
    case TrKind::Dst7: return "DST7";
    case TrKind::Dct8: return "DCT8";
  }
  return "?";
}

bool tr_size_valid(TrKind kind, int n) {
  if (n < 4 || (n & (n - 1)) != 0) return false;
  return kind == TrKind::Dct2 ? n <= 64 : n <= 32;
}

int tr_nonzero_limit(TrKind kind, int n) {
  if (kind == TrKind::Dct2) return n == 64 ? 32 : n;
  return n == 32 ? 16 : n;
}

TransformMatrix build_transform_matrix(TrKind kind, int n) {
  if (!tr_size_valid(kind, n)) {
    throw std::invalid_argument(std::string("unsupported transform: ") + tr_kind_name(kind) +
                                " size " + std::to_string(n));
  }
  TransformMatrix t;
  t.kind = kind;
  t.size = n;
  t.m.resize(static_cast<size_t>(n) * n);

  const double pi = std::numbers::pi;
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      double v = 0.0;
      switch (kind) {
        case TrKind::Dct2: {
          const double ck = k == 0 ? 1.0 / std::sqrt(2.0) : 1.0;
          v = 64.0 * std::sqrt(2.0) * ck * std::cos(pi * (2 * x + 1) * k / (2.0 * n));
          break;
        }
        case TrKind::Dst7:
          v = 128.0 * std::sqrt(n / (2.0 * n + 1.0)) * std::sin(pi * (2 * x + 1) * (k + 1) / (2.0 * n + 1.0));
          break;
        case TrKind::Dct8:
          v = 128.0 * std::sqrt(n / (2.0 * n + 1.0)) * std::cos(pi * (2 * k + 1) * (2 * x + 1) / (4.0 * n + 2.0));
          break;
      }
      t.m[static_cast<size_t>(k) * n + x] = static_cast<int16_t>(std::lround(v));
    }
  }
  return t;
}

const TransformMatrix& transform_matrix(TrKind kind, int n) {
  static std::map<int, TransformMatrix> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  const int key = static_cast<int>(kind) * 256 + n;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_transform_matrix(kind, n)).first;
  return it->second;
}

void inverse_transform_scalar(const CoeffBlock& c, TrKind kind_h, TrKind kind_v,
                              int bitdepth, Sample* dst, ptrdiff_t dst_stride) {
  const int w = c.width;
  const int h = c.height;
  const TransformMatrix& th = transform_matrix(kind_h, w);
  const TransformMatrix& tv = transform_matrix(kind_v, h);
  const int nz_cols = std::min(c.sig_cols, tr_nonzero_limit(kind_h, w));
  const int nz_rows = std::min(c.sig_rows, tr_nonzero_limit(kind_v, h));

  int16_t tmp[64 * 64];

  // Stage 1, horizontal: rows of coefficients against the transpose of th.
  for (int y = 0; y < nz_rows; ++y) {
    const Coeff* cr = c.row(y);
    int16_t* tr = tmp + static_cast<size_t>(y) * w;
    for (int n = 0; n < w; ++n) {
      int32_t acc = 0;
      for (int x = 0; x < nz_cols; ++x) acc += cr[x] * th.row(x)[n];
      tr[n] = clip_int16((acc + 64) >> kInvStage1Shift);
    }
  }

  // Stage 2, vertical.
  const int shift2 = 20 - bitdepth;
  const int32_t rnd2 = 1 << (shift2 - 1);
  for (int m = 0; m < h; ++m) {
    Sample* out = dst + m * dst_stride;
    for (int n = 0; n < w; ++n) {
      int32_t acc = 0;
      for (int y = 0; y < nz_rows; ++y) acc += tmp[static_cast<size_t>(y) * w + n] * tv.row(y)[m];
      out[n] = clip_int16((acc + rnd2) >> shift2);
    }
  }
}

CoeffBlock forward_transform(const Sample* src, ptrdiff_t src_stride, int w, int h,
                             TrKind kind_h, TrKind kind_v, int bitdepth) {
  if (!tr_size_valid(kind_h, w) || !tr_size_valid(kind_v, h)) {
    throw std::invalid_argument("unsupported transform size for forward_transform");
  }
  const TransformMatrix& th = transform_matrix(kind_h, w);
  const TransformMatrix& tv = transform_matrix(kind_v, h);
  const int s1 = std::countr_zero(static_cast<unsigned>(w)) + bitdepth - 9;
  const int s2 = std::countr_zero(static_cast<unsigned>(h)) + 6;
  const int32_t rnd1 = 1 << (s1 - 1);
  const int32_t rnd2 = 1 << (s2 - 1);

  std::vector<int16_t> tmp(static_cast<size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    const Sample* sr = src + y * src_stride;
    for (int k = 0; k < w; ++k) {
      int32_t acc = 0;
      const int16_t* bk = th.row(k);
      for (int n = 0; n < w; ++n) acc += sr[n] * bk[n];
      tmp[static_cast<size_t>(y) * w + k] = clip_int16((acc + rnd1) >> s1);
    }
  }

  CoeffBlock out(w, h);
  const int lim_c = tr_nonzero_limit(kind_h, w);
  const int lim_r = tr_nonzero_limit(kind_v, h);
  for (int ky = 0; ky < h; ++ky) {
    const int16_t* bk = tv.row(ky);
    for (int k = 0; k < w; ++k) {
      int32_t acc = 0;
      for (int y = 0; y < h; ++y) acc += tmp[static_cast<size_t>(y) * w + k] * bk[y];
      const int16_t v = clip_int16((acc + rnd2) >> s2);
      out.at(k, ky) = (k < lim_c && ky < lim_r) ? v : 0;
    }
  }
  out.compute_sig();
  return out;
}

} // namespace ovwk
