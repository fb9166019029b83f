#pragma once

#include "ovwk/block.hpp"

namespace ovwk {

/// DC prediction: every output sample is the rounded mean of the w top and
/// h left neighbors. Blocks of at least 4x4.
void intra_dc_scalar(const Sample* top, const Sample* left, int w, int h, int bitdepth,
                     Sample* dst, ptrdiff_t dst_stride);

/// Bilinear plane blended from the neighbor rows/columns and the two
/// extension corners (top-right, bottom-left):
///   pred(x,y) = (h*((w-1-x)*left[y] + (x+1)*top_ext)
///             +  w*((h-1-y)*top[x]  + (y+1)*left_ext) + w*h) / (2*w*h)
/// w and h must be powers of two (the division is a shift).
void intra_planar_scalar(const Sample* top, const Sample* left, Sample top_ext, Sample left_ext,
                         int w, int h, int bitdepth, Sample* dst, ptrdiff_t dst_stride);

} // namespace ovwk
