#pragma once

#include <array>
#include <cstdint>

#include "ovwk/block.hpp"

namespace ovwk {

inline constexpr int kAlfNumClasses = 25;
inline constexpr int kAlfLumaCoeffs = 13;  // 12 symmetric pairs + center
inline constexpr int kAlfChromaCoeffs = 7; // 6 symmetric pairs + center
inline constexpr int kAlfShift = 7;

/// 7x7 (luma) / 5x5 (chroma) diamond filters in center-symmetric form.
/// Coefficients of each filter sum to 128: the center entry is implied by
/// the pairs and kept explicitly so table files round-trip.
struct AlfFilterBank {
  std::array<std::array<int16_t, kAlfLumaCoeffs>, kAlfNumClasses> luma{};
  std::array<int16_t, kAlfChromaCoeffs> chroma{};

  /// Fill center entries so that every filter sums to 128.
  void normalize_centers();
  bool valid() const;

  bool operator==(const AlfFilterBank&) const = default;
};

/// Upper-half diamond offsets (dy, dx); the mirrored offset completes each
/// pair. Luma pair i uses coefficient i, i < 12.
const std::array<std::pair<int8_t, int8_t>, 12>& alf_luma_offsets();
const std::array<std::pair<int8_t, int8_t>, 6>& alf_chroma_offsets();

/// Classifies the 4x4 luma block at `blk` (2-sample border readable) into
/// 5*directionality + activity. Gradients are sums over the block of
/// |2c - left - right| and the vertical / diagonal analogues; direction
/// ratio thresholds are 2 and 4.5 (exact integer form), activity thresholds
/// {16, 96, 512, 2048} applied to (g_h+g_v) >> (bitdepth-6).
uint8_t alf_classify_scalar(const Sample* blk, ptrdiff_t stride, int bitdepth);

/// Applies the class-selected 7x7 diamond to a w×h luma region (w, h
/// multiples of 4; 3-sample border readable; src/dst must not alias).
/// classes holds one entry per 4x4 block, class_stride entries per block row.
void alf_filter_luma_scalar(const Sample* src, ptrdiff_t src_stride, Sample* dst,
                            ptrdiff_t dst_stride, int w, int h, const AlfFilterBank& bank,
                            const uint8_t* classes, ptrdiff_t class_stride, int bitdepth);

/// Single 5x5 diamond for chroma (2-sample border readable).
void alf_filter_chroma_scalar(const Sample* src, ptrdiff_t src_stride, Sample* dst,
                              ptrdiff_t dst_stride, int w, int h, const AlfFilterBank& bank,
                              int bitdepth);

} // namespace ovwk
