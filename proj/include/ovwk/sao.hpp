#pragma once

#include <array>
#include <cstdint>

#include "ovwk/block.hpp"

namespace ovwk {

enum class SaoMode : uint8_t { Off = 0, Edge = 1, Band = 2 };

/// Edge directions: 0 = 0 deg (left/right), 1 = 90 deg (up/down),
/// 2 = 135 deg (up-left/down-right), 3 = 45 deg (up-right/down-left).
struct SaoParams {
  SaoMode mode = SaoMode::Off;
  uint8_t dir_or_band = 0; // edge direction 0..3, or band position 0..31
  std::array<int8_t, 4> offsets{};

  bool operator==(const SaoParams&) const = default;
};

/// Sample-adaptive offset over a w×h region, src and dst must not alias.
/// Edge mode reads a 1-sample border around the region in the chosen
/// direction. Band: band = sample >> (bitdepth-5), offset applied to the
/// four bands starting at dir_or_band. Category indices 0,1,3,4 map to
/// offsets[0..3]; index 2 leaves the sample unchanged.
void sao_apply_scalar(const Sample* src, ptrdiff_t src_stride, Sample* dst, ptrdiff_t dst_stride,
                      int w, int h, const SaoParams& p, int bitdepth);

} // namespace ovwk
