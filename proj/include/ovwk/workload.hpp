#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovwk/alf.hpp"
#include "ovwk/sao.hpp"
#include "ovwk/transform.hpp"

namespace ovwk {

/// Header / structural invariant violation.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed byte stream; carries the offset of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(uint64_t offset, const std::string& what)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  uint64_t offset() const { return offset_; }

 private:
  uint64_t offset_;
};

enum class MotionProfile : uint8_t { Static = 0, Moderate = 1, Heavy = 2 };
enum class FrameType : uint8_t { Intra = 0, Inter = 1 };
enum class CtuMode : uint8_t { IntraDc = 0, IntraPlanar = 1, Inter = 2 };

MotionProfile parse_motion_profile(const std::string& s);
const char* motion_profile_name(MotionProfile p);

struct WorkloadHeader {
  uint32_t width = 0;
  uint32_t height = 0;
  uint32_t bitdepth = 10;
  uint32_t ctu_size = 128;
  uint32_t tile_cols = 1;
  uint32_t tile_rows = 1;
  uint32_t frame_count = 0;
  uint16_t framerate = 60;
  uint64_t master_seed = 0;

  bool operator==(const WorkloadHeader&) const = default;
};

struct CtuSpec {
  CtuMode mode = CtuMode::IntraDc;
  int16_t mv_x = 0;
  int16_t mv_y = 0;
  TrKind tr_kind = TrKind::Dct2;
  uint8_t tr_size = 4;
  uint64_t coeff_seed = 0;

  bool operator==(const CtuSpec&) const = default;
};

struct FrameSpec {
  uint32_t poc = 0;
  FrameType type = FrameType::Intra;
  uint32_t ref_poc = 0; // meaningful for Inter only; serialized as 0 otherwise
  uint8_t qp = 27;
  std::vector<SaoParams> sao; // one per tile, row-major
  AlfFilterBank alf;

  bool operator==(const FrameSpec&) const = default;
};

struct WorkloadFile {
  WorkloadHeader header;
  std::vector<FrameSpec> frames;
  std::vector<std::vector<CtuSpec>> ctus; // per frame, row-major CTU grid

  bool operator==(const WorkloadFile&) const = default;
};

/// CTU-grid / tile geometry derived from a header. Pictures are decoded at
/// the CTU-aligned size and cropped to width×height at emission.
struct TileRect {
  int ctu_x0 = 0, ctu_y0 = 0, ctu_w = 0, ctu_h = 0;
};

struct Geometry {
  int width = 0, height = 0, ctu = 0;
  int ctu_cols = 0, ctu_rows = 0;
  int tile_cols = 0, tile_rows = 0;

  int aligned_w() const { return ctu_cols * ctu; }
  int aligned_h() const { return ctu_rows * ctu; }
  int tile_count() const { return tile_cols * tile_rows; }
  int ctu_count() const { return ctu_cols * ctu_rows; }

  int tile_col_start(int c) const { return c * ctu_cols / tile_cols; }
  int tile_row_start(int r) const { return r * ctu_rows / tile_rows; }
  TileRect tile(int index) const;
  int tile_row_of_line(int ctu_line) const;
};

Geometry geometry(const WorkloadHeader& h);

/// Peak coefficient magnitude for a QP: floor(2^(13 - qp/8)), at least 1.
/// Integer fixed-point evaluation so every platform agrees on the value.
uint32_t qp_coeff_range(int qp);

/// Significant coefficient rows/cols of an n-point block at this QP
/// (monotone: higher QP, smaller residual, less transform work).
int qp_sig_size(int qp, int n);

void validate_header(const WorkloadHeader& h);
void validate_workload(const WorkloadFile& w);

/// Deterministic content synthesis: same (header, profile, qp) in, byte
/// identical file out. Motion magnitude by profile (quarter-pel): STATIC 0,
/// MODERATE <=16, HEAVY <=128, clamped so every reference read stays inside
/// the padded reference picture.
WorkloadFile generate_workload(const WorkloadHeader& header, MotionProfile profile, int qp = 27);

uint64_t write_workload(const WorkloadFile& w, std::ostream& out);
WorkloadFile read_workload(std::istream& in);

void save_workload(const WorkloadFile& w, const std::string& path);
WorkloadFile load_workload(const std::string& path);

inline constexpr size_t kWorkloadHeaderBytes = 44; // magic+version+fields
inline constexpr size_t kCtuRecordBytes = 15;

} // namespace ovwk
