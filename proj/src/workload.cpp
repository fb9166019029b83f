#include "ovwk/workload.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "ovwk/rng.hpp"

namespace ovwk {

MotionProfile parse_motion_profile(const std::string& s) {
  if (s == "static") return MotionProfile::Static;
  if (s == "moderate") return MotionProfile::Moderate;
  if (s == "heavy") return MotionProfile::Heavy;
  throw ValidationError("unknown motion profile: " + s);
}

const char* motion_profile_name(MotionProfile p) {
  switch (p) {
    case MotionProfile::Static: return "static";
    case MotionProfile::Moderate: return "moderate";
    case MotionProfile::Heavy: return "heavy";
  }
  return "?";
}

TileRect Geometry::tile(int index) const {
  const int c = index % tile_cols;
  const int r = index / tile_cols;
  TileRect t;
  t.ctu_x0 = tile_col_start(c);
  t.ctu_y0 = tile_row_start(r);
  t.ctu_w = tile_col_start(c + 1) - t.ctu_x0;
  t.ctu_h = tile_row_start(r + 1) - t.ctu_y0;
  return t;
}

int Geometry::tile_row_of_line(int ctu_line) const {
  for (int r = tile_rows - 1; r >= 0; --r) {
    if (ctu_line >= tile_row_start(r)) return r;
  }
  return 0;
}

Geometry geometry(const WorkloadHeader& h) {
  Geometry g;
  g.width = static_cast<int>(h.width);
  g.height = static_cast<int>(h.height);
  g.ctu = static_cast<int>(h.ctu_size);
  g.ctu_cols = (g.width + g.ctu - 1) / g.ctu;
  g.ctu_rows = (g.height + g.ctu - 1) / g.ctu;
  g.tile_cols = static_cast<int>(h.tile_cols);
  g.tile_rows = static_cast<int>(h.tile_rows);
  return g;
}

uint32_t qp_coeff_range(int qp) {
  // 2^(-b/8) in 32.32 fixed point for b = 0..7.
  static constexpr uint64_t kFrac32[8] = {
      4294967296ull, 3938502375ull, 3611622602ull, 3311872529ull,
      3037000499ull, 2784941737ull, 2553802833ull, 2341847523ull,
  };
  const int a = qp / 8;
  const int b = qp % 8;
  const uint64_t base = 1ull << (13 - a);
  const uint64_t r = (base * kFrac32[b]) >> 32;
  return static_cast<uint32_t>(std::max<uint64_t>(1, r));
}

int qp_sig_size(int qp, int n) {
  const int sig = 1 + static_cast<int>((static_cast<uint64_t>(qp_coeff_range(qp)) * n) / 1024);
  return std::clamp(sig, 1, n);
}

void validate_header(const WorkloadHeader& h) {
  auto fail = [](const std::string& m) { throw ValidationError("invalid header: " + m); };
  if (h.width == 0 || h.height == 0) fail("width and height must be > 0");
  if (h.width % 2 != 0 || h.height % 2 != 0) fail("4:2:0 requires even width and height");
  if (h.bitdepth != 10) fail("bitdepth must be 10");
  if (h.ctu_size != 32 && h.ctu_size != 64 && h.ctu_size != 128) fail("ctu_size must be 32, 64 or 128");
  if (h.tile_cols == 0 || h.tile_rows == 0) fail("tile_cols and tile_rows must be >= 1");
  if (h.framerate == 0) fail("framerate must be >= 1");
  const Geometry g = geometry(h);
  if (static_cast<int>(h.tile_cols) > g.ctu_cols || static_cast<int>(h.tile_rows) > g.ctu_rows) {
    fail("each tile needs at least one CTU column and row (grid " + std::to_string(g.ctu_cols) +
         "x" + std::to_string(g.ctu_rows) + ", tiles " + std::to_string(h.tile_cols) + "x" +
         std::to_string(h.tile_rows) + ")");
  }
}

namespace {

struct MvBounds {
  int lo_x, hi_x, lo_y, hi_y; // quarter-pel inclusive bounds
};

// The referenced region inflated by 4 samples per side must stay inside the
// padded (8-sample) aligned reference picture.
MvBounds mv_bounds(const Geometry& g, int ctu_x0, int ctu_y0) {
  const int w = g.ctu, h = g.ctu;
  const int dx_min = -ctu_x0 - 4;
  const int dx_max = g.aligned_w() - ctu_x0 - w + 4;
  const int dy_min = -ctu_y0 - 4;
  const int dy_max = g.aligned_h() - ctu_y0 - h + 4;
  return {4 * dx_min, 4 * dx_max + 3, 4 * dy_min, 4 * dy_max + 3};
}

int16_t clamp_mv(int64_t v, int lo, int hi) {
  return static_cast<int16_t>(std::clamp<int64_t>(v, lo, hi));
}

} // namespace

void validate_workload(const WorkloadFile& w) {
  validate_header(w.header);
  auto fail = [](const std::string& m) { throw ValidationError("invalid workload: " + m); };
  const Geometry g = geometry(w.header);

  if (w.frames.size() != w.header.frame_count) fail("frame list does not match frame_count");
  if (w.ctus.size() != w.frames.size()) fail("ctu list count does not match frame count");

  for (size_t i = 0; i < w.frames.size(); ++i) {
    const FrameSpec& f = w.frames[i];
    const std::string tag = "frame " + std::to_string(i) + ": ";
    if (f.poc != i) fail(tag + "poc must equal frame index");
    if (f.qp > 63) fail(tag + "qp out of range");
    if (i == 0 && f.type != FrameType::Intra) fail(tag + "poc 0 must be INTRA");
    if (f.type == FrameType::Inter && f.ref_poc >= f.poc) fail(tag + "INTER must reference a smaller poc");
    if (f.sao.size() != static_cast<size_t>(g.tile_count())) fail(tag + "needs one SaoParams per tile");
    for (const SaoParams& p : f.sao) {
      if (p.mode == SaoMode::Edge && p.dir_or_band > 3) fail(tag + "edge direction out of range");
      if (p.mode == SaoMode::Band && p.dir_or_band > 31) fail(tag + "band position out of range");
      for (int8_t o : p.offsets) {
        if (o < -31 || o > 31) fail(tag + "SAO offset out of range");
      }
    }
    if (!f.alf.valid()) fail(tag + "ALF filter coefficients must sum to 128");

    const auto& ctus = w.ctus[i];
    if (ctus.size() != static_cast<size_t>(g.ctu_count())) {
      fail(tag + "expected " + std::to_string(g.ctu_count()) + " CTUs, got " + std::to_string(ctus.size()));
    }
    for (size_t c = 0; c < ctus.size(); ++c) {
      const CtuSpec& cs = ctus[c];
      const std::string ct = tag + "ctu " + std::to_string(c) + ": ";
      if (cs.mode == CtuMode::Inter && f.type != FrameType::Inter) fail(ct + "INTER CTU in non-INTER frame");
      const int ts = cs.tr_size;
      if (ts < 4 || ts > 64 || (ts & (ts - 1)) != 0 || ts > g.ctu) fail(ct + "bad tr_size");
      if (cs.tr_kind != TrKind::Dct2 && ts > 32) fail(ct + "DST7/DCT8 require tr_size <= 32");
      if (cs.mode == CtuMode::Inter) {
        const int x0 = static_cast<int>(c) % g.ctu_cols * g.ctu;
        const int y0 = static_cast<int>(c) / g.ctu_cols * g.ctu;
        const MvBounds b = mv_bounds(g, x0, y0);
        if (cs.mv_x < b.lo_x || cs.mv_x > b.hi_x || cs.mv_y < b.lo_y || cs.mv_y > b.hi_y) {
          fail(ct + "motion vector leaves the padded reference");
        }
      } else if (cs.mv_x != 0 || cs.mv_y != 0) {
        fail(ct + "intra CTU with nonzero motion vector");
      }
    }
  }
}

WorkloadFile generate_workload(const WorkloadHeader& header, MotionProfile profile, int qp) {
  validate_header(header);
  if (qp < 0 || qp > 63) throw ValidationError("invalid header: qp out of range");

  const Geometry g = geometry(header);
  WorkloadFile w;
  w.header = header;
  w.frames.reserve(header.frame_count);
  w.ctus.reserve(header.frame_count);

  const uint64_t mv_mag = profile == MotionProfile::Static   ? 0
                          : profile == MotionProfile::Moderate ? 16
                                                               : 128;
  Rng rng(header.master_seed);

  for (uint32_t poc = 0; poc < header.frame_count; ++poc) {
    FrameSpec f;
    f.poc = poc;
    f.type = poc == 0 ? FrameType::Intra : FrameType::Inter;
    f.ref_poc = poc == 0 ? 0 : poc - 1;
    f.qp = static_cast<uint8_t>(qp);
    f.sao.resize(g.tile_count());
    for (SaoParams& p : f.sao) {
      p.mode = static_cast<SaoMode>(rng.next_below(3));
      p.dir_or_band = static_cast<uint8_t>(p.mode == SaoMode::Band ? rng.next_below(29) : rng.next_below(4));
      for (auto& o : p.offsets) o = static_cast<int8_t>(rng.next_signed(7));
    }
    for (auto& filt : f.alf.luma) {
      for (int i = 0; i < kAlfLumaCoeffs - 1; ++i) filt[i] = static_cast<int16_t>(rng.next_signed(8));
    }
    for (int i = 0; i < kAlfChromaCoeffs - 1; ++i) f.alf.chroma[i] = static_cast<int16_t>(rng.next_signed(8));
    f.alf.normalize_centers();

    std::vector<CtuSpec> ctus(g.ctu_count());
    for (int cy = 0; cy < g.ctu_rows; ++cy) {
      for (int cx = 0; cx < g.ctu_cols; ++cx) {
        CtuSpec& cs = ctus[static_cast<size_t>(cy) * g.ctu_cols + cx];
        if (f.type == FrameType::Intra) {
          cs.mode = rng.next_below(2) ? CtuMode::IntraPlanar : CtuMode::IntraDc;
        } else {
          const uint64_t m = rng.next_below(8);
          cs.mode = m == 0 ? CtuMode::IntraDc : m == 1 ? CtuMode::IntraPlanar : CtuMode::Inter;
        }
        if (cs.mode == CtuMode::Inter) {
          const MvBounds b = mv_bounds(g, cx * g.ctu, cy * g.ctu);
          cs.mv_x = clamp_mv(rng.next_signed(mv_mag), b.lo_x, b.hi_x);
          cs.mv_y = clamp_mv(rng.next_signed(mv_mag), b.lo_y, b.hi_y);
        }
        // Two draws, keep the larger: biases residual blocks big so the
        // transform stage carries realistic weight.
        static constexpr int kSizes[5] = {4, 8, 16, 32, 64};
        int nsizes = 1;
        while (nsizes < 5 && kSizes[nsizes] <= std::min(g.ctu, 64)) ++nsizes;
        const int s1 = static_cast<int>(rng.next_below(nsizes));
        const int s2 = static_cast<int>(rng.next_below(nsizes));
        cs.tr_size = static_cast<uint8_t>(kSizes[std::max(s1, s2)]);
        cs.tr_kind = static_cast<TrKind>(rng.next_below(3));
        if (cs.tr_kind != TrKind::Dct2 && cs.tr_size > 32) cs.tr_size = 32;
        cs.coeff_seed = rng.next();
      }
    }
    w.frames.push_back(std::move(f));
    w.ctus.push_back(std::move(ctus));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Serialization: little-endian, no padding, fixed field widths.

namespace {

class ByteWriter {
 public:
  explicit ByteWriter(std::ostream& out) : out_(out) {}
  uint64_t written() const { return n_; }

  void u8(uint8_t v) { put(&v, 1); }
  void i8(int8_t v) { u8(static_cast<uint8_t>(v)); }
  void u16(uint16_t v) {
    uint8_t b[2] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8)};
    put(b, 2);
  }
  void i16(int16_t v) { u16(static_cast<uint16_t>(v)); }
  void u32(uint32_t v) {
    uint8_t b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<uint8_t>(v >> (8 * i));
    put(b, 4);
  }
  void u64(uint64_t v) {
    uint8_t b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<uint8_t>(v >> (8 * i));
    put(b, 8);
  }

 private:
  void put(const uint8_t* p, size_t n) {
    out_.write(reinterpret_cast<const char*>(p), static_cast<std::streamsize>(n));
    if (!out_) throw std::runtime_error("workload write failed at byte " + std::to_string(n_));
    n_ += n;
  }
  std::ostream& out_;
  uint64_t n_ = 0;
};

class ByteReader {
 public:
  explicit ByteReader(std::istream& in) : in_(in) {}
  uint64_t offset() const { return n_; }

  uint8_t u8() {
    uint8_t v;
    get(&v, 1);
    return v;
  }
  int8_t i8() { return static_cast<int8_t>(u8()); }
  uint16_t u16() {
    uint8_t b[2];
    get(b, 2);
    return static_cast<uint16_t>(b[0] | (b[1] << 8));
  }
  int16_t i16() { return static_cast<int16_t>(u16()); }
  uint32_t u32() {
    uint8_t b[4];
    get(b, 4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
    return v;
  }
  uint64_t u64() {
    uint8_t b[8];
    get(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
  }

 private:
  void get(uint8_t* p, size_t n) {
    in_.read(reinterpret_cast<char*>(p), static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in_.gcount()) != n) throw ParseError(n_, "truncated stream");
    n_ += n;
  }
  std::istream& in_;
  uint64_t n_ = 0;
};

constexpr char kMagic[4] = {'O', 'V', 'W', 'K'};
constexpr uint16_t kVersion = 1;

} // namespace

uint64_t write_workload(const WorkloadFile& w, std::ostream& out) {
  validate_workload(w);
  ByteWriter bw(out);
  for (char c : kMagic) bw.u8(static_cast<uint8_t>(c));
  bw.u16(kVersion);
  const WorkloadHeader& h = w.header;
  bw.u32(h.width);
  bw.u32(h.height);
  bw.u32(h.bitdepth);
  bw.u32(h.ctu_size);
  bw.u32(h.tile_cols);
  bw.u32(h.tile_rows);
  bw.u32(h.frame_count);
  bw.u16(h.framerate);
  bw.u64(h.master_seed);

  for (size_t i = 0; i < w.frames.size(); ++i) {
    const FrameSpec& f = w.frames[i];
    bw.u32(f.poc);
    bw.u8(static_cast<uint8_t>(f.type));
    bw.u32(f.type == FrameType::Inter ? f.ref_poc : 0);
    bw.u8(f.qp);
    for (const SaoParams& p : f.sao) {
      bw.u8(static_cast<uint8_t>(p.mode));
      bw.u8(p.dir_or_band);
      for (int8_t o : p.offsets) bw.i8(o);
    }
    for (const auto& filt : f.alf.luma) {
      for (int16_t c : filt) bw.i16(c);
    }
    for (int16_t c : f.alf.chroma) bw.i16(c);

    for (const CtuSpec& cs : w.ctus[i]) {
      bw.u8(static_cast<uint8_t>(cs.mode));
      bw.i16(cs.mv_x);
      bw.i16(cs.mv_y);
      bw.u8(static_cast<uint8_t>(cs.tr_kind));
      bw.u8(cs.tr_size);
      bw.u64(cs.coeff_seed);
    }
  }
  out.flush();
  return bw.written();
}

WorkloadFile read_workload(std::istream& in) {
  ByteReader br(in);
  char magic[4];
  for (char& c : magic) c = static_cast<char>(br.u8());
  if (!std::equal(magic, magic + 4, kMagic)) throw ParseError(0, "bad magic");
  const uint16_t version = br.u16();
  if (version != kVersion) throw ParseError(4, "unsupported version " + std::to_string(version));

  WorkloadFile w;
  WorkloadHeader& h = w.header;
  h.width = br.u32();
  h.height = br.u32();
  h.bitdepth = br.u32();
  h.ctu_size = br.u32();
  h.tile_cols = br.u32();
  h.tile_rows = br.u32();
  h.frame_count = br.u32();
  h.framerate = br.u16();
  h.master_seed = br.u64();
  validate_header(h);

  const Geometry g = geometry(h);
  w.frames.reserve(h.frame_count);
  w.ctus.reserve(h.frame_count);
  for (uint32_t i = 0; i < h.frame_count; ++i) {
    FrameSpec f;
    f.poc = br.u32();
    f.type = static_cast<FrameType>(br.u8());
    f.ref_poc = br.u32();
    f.qp = br.u8();
    f.sao.resize(g.tile_count());
    for (SaoParams& p : f.sao) {
      p.mode = static_cast<SaoMode>(br.u8());
      p.dir_or_band = br.u8();
      for (auto& o : p.offsets) o = br.i8();
    }
    for (auto& filt : f.alf.luma) {
      for (auto& c : filt) c = br.i16();
    }
    for (auto& c : f.alf.chroma) c = br.i16();

    std::vector<CtuSpec> ctus(g.ctu_count());
    for (CtuSpec& cs : ctus) {
      cs.mode = static_cast<CtuMode>(br.u8());
      cs.mv_x = br.i16();
      cs.mv_y = br.i16();
      cs.tr_kind = static_cast<TrKind>(br.u8());
      cs.tr_size = br.u8();
      cs.coeff_seed = br.u64();
    }
    w.frames.push_back(std::move(f));
    w.ctus.push_back(std::move(ctus));
  }
  validate_workload(w);
  return w;
}

void save_workload(const WorkloadFile& w, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_workload(w, out);
}

WorkloadFile load_workload(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_workload(in);
}

} // namespace ovwk
