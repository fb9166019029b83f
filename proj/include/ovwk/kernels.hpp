#pragma once

#include <cstdint>
#include <string>

#include "ovwk/alf.hpp"
#include "ovwk/block.hpp"
#include "ovwk/interp.hpp"
#include "ovwk/intra.hpp"
#include "ovwk/sao.hpp"
#include "ovwk/transform.hpp"

namespace ovwk {

enum class KernelVariant : uint8_t { Scalar = 0, Vector = 1 };

const char* variant_name(KernelVariant v);
KernelVariant parse_variant(const std::string& s); // "scalar" | "vector"

/// One entry per compute kernel; scalar and vector tables share signatures
/// and must be bit-exact over the full input domain.
struct KernelOps {
  const char* name;

  void (*inverse_transform)(const CoeffBlock&, TrKind, TrKind, int, Sample*, ptrdiff_t);
  void (*interp_2d)(const Sample*, ptrdiff_t, int, int, const FilterSet&, bool, int, int, int,
                    Sample*, ptrdiff_t);
  void (*intra_dc)(const Sample*, const Sample*, int, int, int, Sample*, ptrdiff_t);
  void (*intra_planar)(const Sample*, const Sample*, Sample, Sample, int, int, int, Sample*,
                       ptrdiff_t);
  void (*sao_apply)(const Sample*, ptrdiff_t, Sample*, ptrdiff_t, int, int, const SaoParams&, int);
  uint8_t (*alf_classify)(const Sample*, ptrdiff_t, int);
  void (*alf_filter_luma)(const Sample*, ptrdiff_t, Sample*, ptrdiff_t, int, int,
                          const AlfFilterBank&, const uint8_t*, ptrdiff_t, int);
  void (*alf_filter_chroma)(const Sample*, ptrdiff_t, Sample*, ptrdiff_t, int, int,
                            const AlfFilterBank&, int);
};

const KernelOps& kernel_ops(KernelVariant v);

/// True when the vector table is backed by 128-bit lanes rather than the
/// scalar fallback.
bool vector_lanes_available();

enum class KernelId : uint8_t {
  InverseTransform,
  Interp,
  IntraDc,
  IntraPlanar,
  Sao,
  AlfClassify,
  AlfFilterLuma,
  AlfFilterChroma,
};
inline constexpr int kKernelCount = 8;
const char* kernel_name(KernelId id);

struct PairCheckResult {
  bool pass = true;
  uint64_t trials = 0;
  std::string counterexample; // empty when pass
};

/// Runs `trials` random inputs spanning the kernel's sizes and modes through
/// both variants and compares outputs bit for bit. `vector_override`
/// substitutes the vector table (test fixtures).
PairCheckResult kernel_pair_check(KernelId id, uint64_t trials, uint64_t seed = 1,
                                  const KernelOps* vector_override = nullptr);

} // namespace ovwk
