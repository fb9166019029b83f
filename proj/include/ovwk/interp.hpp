#pragma once

#include <array>

#include "ovwk/block.hpp"

namespace ovwk {

/// Fractional-sample filter taps, normalization shift 6 (taps sum to 64).
struct InterpFilter {
  int len = 0; // 8 for luma, 4 for chroma
  std::array<int16_t, 8> taps{};

  int reach_before() const { return len / 2 - 1; }
  int reach_after() const { return len / 2; }
};

/// Quarter-pel phase table for one plane kind; phase 0 is the copy path.
struct FilterSet {
  std::array<InterpFilter, 4> luma;
  std::array<InterpFilter, 4> chroma;

  /// Default near-VVC tap values. Any set with sum 64 per phase works; these
  /// are data, loadable from a table file.
  static const FilterSet& defaults();

  const InterpFilter& pick(bool chroma_plane, int frac) const {
    return chroma_plane ? chroma[frac] : luma[frac];
  }
};

/// Sum of taps of every non-zero phase must be 64.
bool filter_set_valid(const FilterSet& fs);

/// Separable fractional interpolation. frac 0 in a dimension means no
/// filtering in that dimension. Two-dimensional case: horizontal pass into
/// int16 intermediates (shift 2, no rounding), vertical pass (shift 10,
/// rounded), clip to the sample range. Single-dimension case: one pass,
/// shift 6 rounded. Caller guarantees the reference region is readable
/// (len/2-1) samples before and len/2 after in each filtered dimension.
void interp_2d_scalar(const Sample* ref, ptrdiff_t ref_stride, int frac_x, int frac_y,
                      const FilterSet& fs, bool chroma_plane, int w, int h, int bitdepth,
                      Sample* dst, ptrdiff_t dst_stride);

} // namespace ovwk
