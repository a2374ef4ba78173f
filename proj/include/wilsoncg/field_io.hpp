#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "wilsoncg/fields.hpp"

namespace wilsoncg {

// Binary field files, little-endian throughout.
//
//   offset  size  content
//        0     4  magic "WQCD"
//        4     4  u32 format version (1)
//        8    16  u32 Lx, Ly, Lz, Lt
//       24     4  u32 precision tag: 64 (binary64) or 32 (binary32)
//       28     4  u32 payload kind: 1 gauge, 2 spinor
//       32     -  payload, sites in lexicographic order (x fastest)
//
// Gauge payload per site: mu = 0..3, each 3x3 row-major (re, im) pairs.
// Spinor payload per site: 12 spin-major (re, im) pairs.

inline constexpr std::uint32_t kFieldFormatVersion = 1;
inline constexpr std::size_t kFieldHeaderBytes = 32;

enum class PayloadKind : std::uint32_t { gauge = 1, spinor = 2 };

class FieldIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
class FileAccessError : public FieldIoError {
 public:
  using FieldIoError::FieldIoError;
};

class BadMagicError : public FieldIoError {
 public:
  using FieldIoError::FieldIoError;
};

// Version, precision, payload kind or dimensions disagree with what the
// caller asked for, or the header itself is invalid.
class HeaderMismatchError : public FieldIoError {
 public:
  using FieldIoError::FieldIoError;
};

class TruncatedFileError : public FieldIoError {
 public:
  TruncatedFileError(std::size_t expected, std::size_t actual)
      : FieldIoError("truncated field file: expected " + std::to_string(expected) + " bytes, got " +
                     std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

void write_gauge(const std::filesystem::path& path, const GaugeField<double>& field);
GaugeField<double> read_gauge(const std::filesystem::path& path);
// Additionally requires the stored dimensions to equal `expected`.
GaugeField<double> read_gauge(const std::filesystem::path& path, const LatticeGeometry& expected);

template <typename Real>
void write_spinor(const std::filesystem::path& path, const SpinorField<Real>& field);
template <typename Real>
SpinorField<Real> read_spinor(const std::filesystem::path& path);
template <typename Real>
SpinorField<Real> read_spinor(const std::filesystem::path& path, const LatticeGeometry& expected);

extern template void write_spinor<double>(const std::filesystem::path&, const SpinorField<double>&);
extern template void write_spinor<float>(const std::filesystem::path&, const SpinorField<float>&);
extern template SpinorField<double> read_spinor<double>(const std::filesystem::path&);
extern template SpinorField<float> read_spinor<float>(const std::filesystem::path&);
extern template SpinorField<double> read_spinor<double>(const std::filesystem::path&, const LatticeGeometry&);
extern template SpinorField<float> read_spinor<float>(const std::filesystem::path&, const LatticeGeometry&);

}  // namespace wilsoncg
