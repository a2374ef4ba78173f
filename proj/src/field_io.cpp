#include "wilsoncg/field_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <vector>

namespace wilsoncg {

namespace {

constexpr std::array<char, 4> kMagic{'W', 'Q', 'C', 'D'};

template <typename Real>
constexpr std::uint32_t precision_tag() {
  return sizeof(Real) * 8;
}

class ByteWriter {
 public:
  void u32(std::uint32_t v) { put_le(v, 4); }
  void real(double v) { put_le(std::bit_cast<std::uint64_t>(v), 8); }
  void real(float v) { put_le(std::bit_cast<std::uint32_t>(v), 4); }
  void raw(const char* p, std::size_t n) { bytes_.insert(bytes_.end(), p, p + n); }
  const std::vector<char>& bytes() const { return bytes_; }

 private:
  void put_le(std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) bytes_.push_back(static_cast<char>((v >> (8 * i)) & 0xffU));
  }
  std::vector<char> bytes_;
};

class ByteReader {
 public:
  explicit ByteReader(const std::vector<char>& bytes, std::size_t offset = 0) : bytes_(bytes), pos_(offset) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(get_le(4)); }
  template <typename Real>
  Real real() {
    if constexpr (sizeof(Real) == 8) {
      return std::bit_cast<double>(get_le(8));
    } else {
      return std::bit_cast<float>(static_cast<std::uint32_t>(get_le(4)));
    }
  }

 private:
  std::uint64_t get_le(int width) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    pos_ += static_cast<std::size_t>(width);
    return v;
  }
  const std::vector<char>& bytes_;
  std::size_t pos_;
};

void write_file(const std::filesystem::path& path, const std::vector<char>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileAccessError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FileAccessError("write to " + path.string() + " failed");
}

std::vector<char> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileAccessError("cannot open " + path.string() + " for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_header(ByteWriter& w, const LatticeGeometry& geom, std::uint32_t precision, PayloadKind kind) {
  w.raw(kMagic.data(), kMagic.size());
  w.u32(kFieldFormatVersion);
  for (int mu = 0; mu < kDimensions; ++mu) w.u32(static_cast<std::uint32_t>(geom.dim(mu)));
  w.u32(precision);
  w.u32(static_cast<std::uint32_t>(kind));
}

std::string kind_name(std::uint32_t kind) {
  if (kind == static_cast<std::uint32_t>(PayloadKind::gauge)) return "gauge";
  if (kind == static_cast<std::uint32_t>(PayloadKind::spinor)) return "spinor";
  return "unknown(" + std::to_string(kind) + ")";
}

// Validates the header against the requested precision and kind, checks the
// payload length, and returns the stored geometry.
LatticeGeometry parse_header(const std::vector<char>& bytes, std::uint32_t precision, PayloadKind kind,
                             std::size_t payload_bytes_per_site, const std::optional<LatticeGeometry>& expected) {
  if (bytes.size() < kMagic.size() || std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
    throw BadMagicError("bad magic: not a WQCD field file");
  }
  if (bytes.size() < kFieldHeaderBytes) throw TruncatedFileError(kFieldHeaderBytes, bytes.size());

  ByteReader r(bytes, kMagic.size());
  const std::uint32_t version = r.u32();
  if (version != kFieldFormatVersion) {
    throw HeaderMismatchError("unsupported format version " + std::to_string(version));
  }
  Coords dims{};
  for (auto& d : dims) {
    const std::uint32_t v = r.u32();
    if (v < 2 || v > (1U << 16)) throw HeaderMismatchError("invalid lattice dimension " + std::to_string(v));
    d = static_cast<int>(v);
  }
  const std::uint32_t stored_precision = r.u32();
  const std::uint32_t stored_kind = r.u32();
  if (stored_kind != static_cast<std::uint32_t>(kind)) {
    throw HeaderMismatchError("payload kind is " + kind_name(stored_kind) + ", expected " +
                              kind_name(static_cast<std::uint32_t>(kind)));
  }
  if (stored_precision != precision) {
    throw HeaderMismatchError("precision tag is " + std::to_string(stored_precision) + ", expected " +
                              std::to_string(precision));
  }
  const LatticeGeometry geom(dims);
  if (expected && !(*expected == geom)) {
    throw HeaderMismatchError("dimension mismatch: file has " + geom.to_string() + ", expected " +
                              expected->to_string());
  }
  const std::size_t want = kFieldHeaderBytes + geom.volume() * payload_bytes_per_site;
  if (bytes.size() < want) throw TruncatedFileError(want, bytes.size());
  if (bytes.size() > want) {
    throw HeaderMismatchError("field file has " + std::to_string(bytes.size() - want) + " trailing bytes");
  }
  return geom;
}

constexpr std::size_t kGaugeRealsPerSite = kDimensions * kColors * kColors * 2;
constexpr std::size_t kSpinorRealsPerSite = kSpinorComponents * 2;

GaugeField<double> read_gauge_impl(const std::filesystem::path& path, const std::optional<LatticeGeometry>& expected) {
  const auto bytes = read_file(path);
  const auto geom =
      parse_header(bytes, precision_tag<double>(), PayloadKind::gauge, kGaugeRealsPerSite * sizeof(double), expected);
  GaugeField<double> field(geom);
  ByteReader r(bytes, kFieldHeaderBytes);
  for (auto& link : field.links()) {
    for (auto& z : link.e) {
      z.re = r.real<double>();
      z.im = r.real<double>();
    }
  }
  return field;
}

template <typename Real>
SpinorField<Real> read_spinor_impl(const std::filesystem::path& path, const std::optional<LatticeGeometry>& expected) {
  const auto bytes = read_file(path);
  const auto geom =
      parse_header(bytes, precision_tag<Real>(), PayloadKind::spinor, kSpinorRealsPerSite * sizeof(Real), expected);
  SpinorField<Real> field(geom);
  ByteReader r(bytes, kFieldHeaderBytes);
  for (auto& spinor : field.sites()) {
    for (auto& z : spinor.c) {
      z.re = r.template real<Real>();
      z.im = r.template real<Real>();
    }
  }
  return field;
}

}  // namespace

void write_gauge(const std::filesystem::path& path, const GaugeField<double>& field) {
  ByteWriter w;
  write_header(w, field.geometry(), precision_tag<double>(), PayloadKind::gauge);
  for (const auto& link : field.links()) {
    for (const auto& z : link.e) {
      w.real(z.re);
      w.real(z.im);
    }
  }
  write_file(path, w.bytes());
}

GaugeField<double> read_gauge(const std::filesystem::path& path) { return read_gauge_impl(path, std::nullopt); }

GaugeField<double> read_gauge(const std::filesystem::path& path, const LatticeGeometry& expected) {
  return read_gauge_impl(path, expected);
}

template <typename Real>
void write_spinor(const std::filesystem::path& path, const SpinorField<Real>& field) {
  ByteWriter w;
  write_header(w, field.geometry(), precision_tag<Real>(), PayloadKind::spinor);
  for (const auto& spinor : field.sites()) {
    for (const auto& z : spinor.c) {
      w.real(z.re);
      w.real(z.im);
    }
  }
  write_file(path, w.bytes());
}

template <typename Real>
SpinorField<Real> read_spinor(const std::filesystem::path& path) {
  return read_spinor_impl<Real>(path, std::nullopt);
}

template <typename Real>
SpinorField<Real> read_spinor(const std::filesystem::path& path, const LatticeGeometry& expected) {
  return read_spinor_impl<Real>(path, expected);
}

template void write_spinor<double>(const std::filesystem::path&, const SpinorField<double>&);
template void write_spinor<float>(const std::filesystem::path&, const SpinorField<float>&);
template SpinorField<double> read_spinor<double>(const std::filesystem::path&);
template SpinorField<float> read_spinor<float>(const std::filesystem::path&);
template SpinorField<double> read_spinor<double>(const std::filesystem::path&, const LatticeGeometry&);
template SpinorField<float> read_spinor<float>(const std::filesystem::path&, const LatticeGeometry&);

}  // namespace wilsoncg
