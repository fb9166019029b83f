#include "ovwk/kernels.hpp"

#include <sstream>
#include <stdexcept>

#include "ovwk/rng.hpp"

namespace ovwk {

const char* variant_name(KernelVariant v) { return v == KernelVariant::Scalar ? "scalar" : "vector"; }

KernelVariant parse_variant(const std::string& s) {
  if (s == "scalar") return KernelVariant::Scalar;
  if (s == "vector") return KernelVariant::Vector;
  throw std::invalid_argument("unknown kernel variant: " + s);
}

#if defined(__SSE2__)
namespace vec {
void inverse_transform(const CoeffBlock&, TrKind, TrKind, int, Sample*, ptrdiff_t);
void interp_2d(const Sample*, ptrdiff_t, int, int, const FilterSet&, bool, int, int, int, Sample*, ptrdiff_t);
void intra_dc(const Sample*, const Sample*, int, int, int, Sample*, ptrdiff_t);
void intra_planar(const Sample*, const Sample*, Sample, Sample, int, int, int, Sample*, ptrdiff_t);
void sao_apply(const Sample*, ptrdiff_t, Sample*, ptrdiff_t, int, int, const SaoParams&, int);
uint8_t alf_classify(const Sample*, ptrdiff_t, int);
void alf_filter_luma(const Sample*, ptrdiff_t, Sample*, ptrdiff_t, int, int, const AlfFilterBank&, const uint8_t*, ptrdiff_t, int);
void alf_filter_chroma(const Sample*, ptrdiff_t, Sample*, ptrdiff_t, int, int, const AlfFilterBank&, int);
} // namespace vec
#endif

static const KernelOps kScalarOps = {
    "scalar",
    &inverse_transform_scalar,
    &interp_2d_scalar,
    &intra_dc_scalar,
    &intra_planar_scalar,
    &sao_apply_scalar,
    &alf_classify_scalar,
    &alf_filter_luma_scalar,
    &alf_filter_chroma_scalar,
};

#if defined(__SSE2__)
static const KernelOps kVectorOps = {
    "vector",
    &vec::inverse_transform,
    &vec::interp_2d,
    &vec::intra_dc,
    &vec::intra_planar,
    &vec::sao_apply,
    &vec::alf_classify,
    &vec::alf_filter_luma,
    &vec::alf_filter_chroma,
};
bool vector_lanes_available() { return true; }
#else
// No 128-bit path on this target: the vector table keeps the dual-variant
// structure but is backed by the scalar routines.
static const KernelOps kVectorOps = {
    "vector",
    &inverse_transform_scalar,
    &interp_2d_scalar,
    &intra_dc_scalar,
    &intra_planar_scalar,
    &sao_apply_scalar,
    &alf_classify_scalar,
    &alf_filter_luma_scalar,
    &alf_filter_chroma_scalar,
};
bool vector_lanes_available() { return false; }
#endif

const KernelOps& kernel_ops(KernelVariant v) {
  return v == KernelVariant::Scalar ? kScalarOps : kVectorOps;
}

const char* kernel_name(KernelId id) {
  switch (id) {
    case KernelId::InverseTransform: return "inverse_transform";
    case KernelId::Interp: return "interp_2d";
    case KernelId::IntraDc: return "intra_dc";
    case KernelId::IntraPlanar: return "intra_planar";
    case KernelId::Sao: return "sao_apply";
    case KernelId::AlfClassify: return "alf_classify";
    case KernelId::AlfFilterLuma: return "alf_filter_luma";
    case KernelId::AlfFilterChroma: return "alf_filter_chroma";
  }
  return "?";
}

namespace {

constexpr int kBd = 10;

std::vector<Sample> random_samples(Rng& rng, size_t n, int bitdepth = kBd) {
  std::vector<Sample> v(n);
  for (auto& s : v) s = static_cast<Sample>(rng.next_below(1u << bitdepth));
  return v;
}

std::string mismatch_at(const char* what, int trial, const std::string& params, int x, int y,
                        int got, int want) {
  std::ostringstream os;
  os << what << " trial " << trial << " [" << params << "] at (" << x << "," << y << "): vector "
     << got << " != scalar " << want;
  return os.str();
}

bool compare_blocks(const std::vector<Sample>& a, const std::vector<Sample>& b, int w, int h,
                    const char* what, int trial, const std::string& params, std::string& err) {
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const size_t i = static_cast<size_t>(y) * w + x;
      if (a[i] != b[i]) {
        err = mismatch_at(what, trial, params, x, y, b[i], a[i]);
        return false;
      }
    }
  }
  return true;
}

int pick_size(Rng& rng, int lo_log2, int hi_log2) {
  return 1 << (lo_log2 + static_cast<int>(rng.next_below(hi_log2 - lo_log2 + 1)));
}

} // namespace

PairCheckResult kernel_pair_check(KernelId id, uint64_t trials, uint64_t seed,
                                  const KernelOps* vector_override) {
  const KernelOps& sc = kernel_ops(KernelVariant::Scalar);
  const KernelOps& ve = vector_override ? *vector_override : kernel_ops(KernelVariant::Vector);
  Rng rng(seed ^ (static_cast<uint64_t>(id) << 32));
  PairCheckResult res;
  res.trials = trials;

  for (uint64_t t = 0; t < trials; ++t) {
    const int trial = static_cast<int>(t);
    std::ostringstream ps;
    switch (id) {
      case KernelId::InverseTransform: {
        const int w = pick_size(rng, 2, 6);
        const int h = pick_size(rng, 2, 6);
        const TrKind kh = w <= 32 ? static_cast<TrKind>(rng.next_below(3)) : TrKind::Dct2;
        const TrKind kv = h <= 32 ? static_cast<TrKind>(rng.next_below(3)) : TrKind::Dct2;
        CoeffBlock c(w, h);
        const int nnz = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(w) * h));
        for (int i = 0; i < nnz; ++i) {
          const int x = static_cast<int>(rng.next_below(w));
          const int y = static_cast<int>(rng.next_below(h));
          c.at(x, y) = static_cast<Coeff>(rng.next_signed(1 << 13));
        }
        c.compute_sig();
        std::vector<Sample> a(static_cast<size_t>(w) * h), b(a);
        sc.inverse_transform(c, kh, kv, kBd, a.data(), w);
        ve.inverse_transform(c, kh, kv, kBd, b.data(), w);
        ps << w << "x" << h << " " << tr_kind_name(kh) << "/" << tr_kind_name(kv);
        if (!compare_blocks(a, b, w, h, "inverse_transform", trial, ps.str(), res.counterexample)) {
          res.pass = false;
          return res;
        }
        break;
      }
      case KernelId::Interp: {
        const bool chroma = rng.next_below(2) != 0;
        const int w = 4 * (1 + static_cast<int>(rng.next_below(16)));
        const int h = 4 * (1 + static_cast<int>(rng.next_below(16)));
        const int fx = static_cast<int>(rng.next_below(4));
        const int fy = static_cast<int>(rng.next_below(4));
        const int pad = 4;
        const int rw = w + 2 * pad, rh = h + 2 * pad;
        auto ref = random_samples(rng, static_cast<size_t>(rw) * rh);
        std::vector<Sample> a(static_cast<size_t>(w) * h), b(a);
        const Sample* base = ref.data() + pad * rw + pad;
        sc.interp_2d(base, rw, fx, fy, FilterSet::defaults(), chroma, w, h, kBd, a.data(), w);
        ve.interp_2d(base, rw, fx, fy, FilterSet::defaults(), chroma, w, h, kBd, b.data(), w);
        ps << (chroma ? "chroma " : "luma ") << w << "x" << h << " frac " << fx << "," << fy;
        if (!compare_blocks(a, b, w, h, "interp_2d", trial, ps.str(), res.counterexample)) {
          res.pass = false;
          return res;
        }
        break;
      }
      case KernelId::IntraDc:
      case KernelId::IntraPlanar: {
        const int w = pick_size(rng, 2, 7);
        const int h = pick_size(rng, 2, 7);
        auto top = random_samples(rng, static_cast<size_t>(w));
        auto left = random_samples(rng, static_cast<size_t>(h));
        const Sample te = static_cast<Sample>(rng.next_below(1 << kBd));
        const Sample le = static_cast<Sample>(rng.next_below(1 << kBd));
        std::vector<Sample> a(static_cast<size_t>(w) * h), b(a);
        if (id == KernelId::IntraDc) {
          sc.intra_dc(top.data(), left.data(), w, h, kBd, a.data(), w);
          ve.intra_dc(top.data(), left.data(), w, h, kBd, b.data(), w);
        } else {
          sc.intra_planar(top.data(), left.data(), te, le, w, h, kBd, a.data(), w);
          ve.intra_planar(top.data(), left.data(), te, le, w, h, kBd, b.data(), w);
        }
        ps << w << "x" << h;
        if (!compare_blocks(a, b, w, h, kernel_name(id), trial, ps.str(), res.counterexample)) {
          res.pass = false;
          return res;
        }
        break;
      }
      case KernelId::Sao: {
        SaoParams p;
        p.mode = static_cast<SaoMode>(rng.next_below(3));
        p.dir_or_band = static_cast<uint8_t>(p.mode == SaoMode::Band ? rng.next_below(32) : rng.next_below(4));
        for (auto& o : p.offsets) o = static_cast<int8_t>(rng.next_signed(31));
        const int w = 4 + static_cast<int>(rng.next_below(61));
        const int h = 4 + static_cast<int>(rng.next_below(29));
        const int pad = 1;
        const int rw = w + 2 * pad, rh = h + 2 * pad;
        auto src = random_samples(rng, static_cast<size_t>(rw) * rh);
        std::vector<Sample> a(static_cast<size_t>(w) * h), b(a);
        const Sample* base = src.data() + pad * rw + pad;
        sc.sao_apply(base, rw, a.data(), w, w, h, p, kBd);
        ve.sao_apply(base, rw, b.data(), w, w, h, p, kBd);
        ps << "mode " << static_cast<int>(p.mode) << " dir/band " << static_cast<int>(p.dir_or_band);
        if (!compare_blocks(a, b, w, h, "sao_apply", trial, ps.str(), res.counterexample)) {
          res.pass = false;
          return res;
        }
        break;
      }
      case KernelId::AlfClassify: {
        const int stride = 8;
        auto win = random_samples(rng, 8 * 8);
        const Sample* blk = win.data() + 2 * stride + 2;
        const uint8_t a = sc.alf_classify(blk, stride, kBd);
        const uint8_t b = ve.alf_classify(blk, stride, kBd);
        if (a != b) {
          res.pass = false;
          res.counterexample = mismatch_at("alf_classify", trial, "8x8 window", 0, 0, b, a);
          return res;
        }
        break;
      }
      case KernelId::AlfFilterLuma:
      case KernelId::AlfFilterChroma: {
        AlfFilterBank bank;
        for (auto& f : bank.luma) {
          for (int i = 0; i < kAlfLumaCoeffs - 1; ++i) f[i] = static_cast<int16_t>(rng.next_signed(10));
        }
        for (int i = 0; i < kAlfChromaCoeffs - 1; ++i) bank.chroma[i] = static_cast<int16_t>(rng.next_signed(10));
        bank.normalize_centers();
        const int w = 4 * (1 + static_cast<int>(rng.next_below(12)));
        const int h = 4 * (1 + static_cast<int>(rng.next_below(8)));
        const int pad = 3;
        const int rw = w + 2 * pad, rh = h + 2 * pad;
        auto src = random_samples(rng, static_cast<size_t>(rw) * rh);
        std::vector<Sample> a(static_cast<size_t>(w) * h), b(a);
        const Sample* base = src.data() + pad * rw + pad;
        if (id == KernelId::AlfFilterLuma) {
          std::vector<uint8_t> classes(static_cast<size_t>(w / 4) * (h / 4));
          for (auto& cl : classes) cl = static_cast<uint8_t>(rng.next_below(kAlfNumClasses));
          sc.alf_filter_luma(base, rw, a.data(), w, w, h, bank, classes.data(), w / 4, kBd);
          ve.alf_filter_luma(base, rw, b.data(), w, w, h, bank, classes.data(), w / 4, kBd);
        } else {
          sc.alf_filter_chroma(base, rw, a.data(), w, w, h, bank, kBd);
          ve.alf_filter_chroma(base, rw, b.data(), w, w, h, bank, kBd);
        }
        ps << w << "x" << h;
        if (!compare_blocks(a, b, w, h, kernel_name(id), trial, ps.str(), res.counterexample)) {
          res.pass = false;
          return res;
        }
        break;
      }
    }
  }
  return res;
}

} // namespace ovwk
