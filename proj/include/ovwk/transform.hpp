#pragma once

#include <cstdint>

#include "ovwk/block.hpp"

namespace ovwk {

enum class TrKind : uint8_t { Dct2 = 0, Dst7 = 1, Dct8 = 2 };

const char* tr_kind_name(TrKind k);

/// Integer transform basis, entries = round(scale * closed-form basis) with
/// row norms ~ 64^2*N. Generated, not copied from the standard's tables:
/// near-VVC by construction, not conformant.
struct TransformMatrix {
  TrKind kind;
  int size = 0;
  std::vector<int16_t> m; // m[k*size + n], k = frequency, n = spatial

  const int16_t* row(int k) const { return m.data() + static_cast<size_t>(k) * size; }
};

bool tr_size_valid(TrKind kind, int n);

/// Number of coefficient rows/cols that may be nonzero at this size: high
/// frequencies are zeroed at the maximum size of each kind (32 of 64 for
/// DCT-II, 16 of 32 for DST-VII/DCT-VIII).
int tr_nonzero_limit(TrKind kind, int n);

/// Builds the integer matrix from the closed-form basis. Throws
/// std::invalid_argument for an unsupported (kind, size).
TransformMatrix build_transform_matrix(TrKind kind, int n);

/// Cached matrices (built on first use, immutable after).
const TransformMatrix& transform_matrix(TrKind kind, int n);

inline constexpr int kInvStage1Shift = 7; // stage 2 shifts 20 - bitdepth

/// Scalar separable inverse transform: horizontal stage (shift 7) then
/// vertical stage (shift 20 - bitdepth), int16 clip after each stage.
/// Loops are bounded by the coefficient significance box and the zeroing
/// limit, so stored values beyond either never contribute.
void inverse_transform_scalar(const CoeffBlock& c, TrKind kind_h, TrKind kind_v,
                              int bitdepth, Sample* dst, ptrdiff_t dst_stride);

/// Adjoint of the inverse path with matching scaling (stage shifts
/// log2(w)+bitdepth-9 and log2(h)+6); test oracle for round-trip checks.
CoeffBlock forward_transform(const Sample* src, ptrdiff_t src_stride, int w, int h,
                             TrKind kind_h, TrKind kind_v, int bitdepth);

} // namespace ovwk
