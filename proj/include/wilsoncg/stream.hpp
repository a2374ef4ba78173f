#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wilsoncg/errors.hpp"
#include "wilsoncg/fields.hpp"
#include "wilsoncg/stencil.hpp"

namespace wilsoncg {

// Slots needed so that, with the loader running one time-slice ahead of the
// site being computed, all eight neighbors and the center are still resident:
// 2*spatial_volume + 2*Lx*Ly + 2*Lx + 3.
inline std::size_t buffer_capacity(const LatticeGeometry& geom) {
  const auto lx = static_cast<std::size_t>(geom.dim(0));
  const auto ly = static_cast<std::size_t>(geom.dim(1));
  return 2 * geom.spatial_volume() + 2 * lx * ly + 2 * lx + 3;
}

// Fixed-capacity window over a stream of sites. Stream positions are
// consecutive integers (negative positions are the wrap-around prefetch);
// position p lives in slot p mod capacity, so the buffer always holds the
// most recent `capacity` positions pushed.
template <typename Real>
class CyclicBuffer {
 public:
  explicit CyclicBuffer(std::size_t capacity) : slots_(capacity) {
    if (capacity == 0) throw DomainError("cyclic buffer capacity must be positive");
  }

  std::size_t capacity() const { return slots_.size(); }
  std::int64_t head() const { return head_; }

  void push(std::int64_t position, std::size_t site, const Spinor<Real>& value) {
    if (filled_ && position != head_ + 1) throw std::logic_error("cyclic buffer: positions must be consecutive");
    auto& slot = slots_[slot_of(position)];
    slot.site = site;
    slot.value = value;
    head_ = position;
    filled_ = true;
  }

  bool holds(std::int64_t position) const {
    return filled_ && position <= head_ && position > head_ - static_cast<std::int64_t>(slots_.size());
  }

  const Spinor<Real>& fetch(std::int64_t position, std::size_t site) const {
    if (!holds(position) || slots_[slot_of(position)].site != site) {
      throw std::logic_error("cyclic buffer miss: position " + std::to_string(position) + " site " +
                             std::to_string(site));
    }
    return slots_[slot_of(position)].value;
  }

 private:
  struct Slot {
    std::size_t site = 0;
    Spinor<Real> value;
  };

  std::size_t slot_of(std::int64_t position) const {
    const auto cap = static_cast<std::int64_t>(slots_.size());
    return static_cast<std::size_t>(((position % cap) + cap) % cap);
  }

  std::vector<Slot> slots_;
  std::int64_t head_ = 0;
  bool filled_ = false;
};

// Counts every spinor read from the main field.
template <typename Real>
class SpinorReader {
 public:
  explicit SpinorReader(const SpinorField<Real>& field) : field_(field) {}

  const Spinor<Real>& read(std::size_t site) {
    ++reads_;
    return field_[site];
  }
  std::size_t reads() const { return reads_; }

 private:
  const SpinorField<Real>& field_;
  std::size_t reads_ = 0;
};

template <typename Real>
struct StreamResult {
  SpinorField<Real> field;
  std::size_t load_count = 0;
};

// Single-pass D psi. Sites are consumed in lexicographic order while a loader
// runs spatial_volume positions ahead, pushing each spinor into a cyclic
// buffer exactly once. The loader starts (capacity - spatial_volume)
// positions before the origin so that the periodic -t neighbors of the first
// time-slice are resident, and it runs spatial_volume positions past the end
// for the +t neighbors of the last one. Reads: volume + capacity.
// Requires every dimension >= 4.
template <typename Real>
StreamResult<Real> stream_apply(const GaugeField<Real>& gauge, const SpinorField<Real>& psi,
                                const WilsonParams& params, Orientation orientation = Orientation::normal) {
  require_same_geometry(gauge.geometry(), psi.geometry());
  const auto& geom = psi.geometry();
  for (int mu = 0; mu < kDimensions; ++mu) {
    if (geom.dim(mu) < 4) {
      throw RefusalError("stream_apply needs every dimension >= 4, lattice is " + geom.to_string());
    }
  }

  const auto volume = static_cast<std::int64_t>(geom.volume());
  const auto lead = static_cast<std::int64_t>(geom.spatial_volume());
  const std::size_t capacity = buffer_capacity(geom);
  CyclicBuffer<Real> buffer(capacity);
  SpinorReader<Real> reader(psi);

  auto wrap = [volume](std::int64_t p) { return static_cast<std::size_t>(((p % volume) + volume) % volume); };

  // Every neighbor sits within `lead` positions of the site being computed,
  // modulo the volume.
  auto position_of = [&](std::size_t site, std::int64_t current) {
    std::int64_t offset = static_cast<std::int64_t>(site) - current;
    if (offset > lead) offset -= volume;
    if (offset < -lead) offset += volume;
    return current + offset;
  };

  StreamResult<Real> result{SpinorField<Real>(geom), 0};
  std::int64_t next = lead - static_cast<std::int64_t>(capacity);
  for (std::int64_t current = 0; current < volume; ++current) {
    while (next <= current + lead) {
      const std::size_t site = wrap(next);
      buffer.push(next, site, reader.read(site));
      ++next;
    }

    const auto site = static_cast<std::size_t>(current);
    StencilInputs<Real> in;
    in.center = buffer.fetch(current, site);
    for (int mu = 0; mu < kDimensions; ++mu) {
      const auto leg = static_cast<std::size_t>(2 * mu);
      const std::size_t fwd = neighbor(site, mu, +1, geom);
      const std::size_t bwd = neighbor(site, mu, -1, geom);
      in.neighbors[leg] =
          with_sign(buffer.fetch(position_of(fwd, current), fwd), boundary_sign(site, mu, +1, geom, params));
      in.neighbors[leg + 1] =
          with_sign(buffer.fetch(position_of(bwd, current), bwd), boundary_sign(site, mu, -1, geom, params));
    }
    gather_links(gauge, site, in);
    result.field[site] = stencil_kernel(in, params, orientation);
  }
  result.load_count = reader.reads();
  return result;
}

}  // namespace wilsoncg
