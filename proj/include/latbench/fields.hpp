#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "latbench/geometry.hpp"
#include "latbench/group.hpp"
#include "latbench/matrix.hpp"

namespace latbench {

/// Per-site spinor storage: 4 spin components x dr colors, complex double,
/// spin-major within a site. Sites run over interior then halo slabs.
struct SpinorField {
  const Geometry* geo = nullptr;
  int dr = 0;
  std::vector<Cplx> data;
  std::vector<Cplx> comm;  // halo-exchange pack scratch, sized on first use

  int vals_per_site() const { return 4 * dr; }
  Cplx* site(int s) { return data.data() + static_cast<size_t>(s) * vals_per_site(); }
  const Cplx* site(int s) const { return data.data() + static_cast<size_t>(s) * vals_per_site(); }
};

SpinorField make_spinor(const Geometry& geo, int dr);

/// Random spinor field, every component keyed by
/// (seed, field_index, global site, spin, color) so the assembled global
/// field does not depend on the decomposition. Halo slots are zeroed; they
/// only become meaningful after an exchange.
SpinorField init_spinor_random(const Geometry& geo, int dr, uint64_t seed, uint64_t field_index);

/// Per-site, per-direction represented links. Adjoint links are real and are
/// stored as doubles; other representations store complex entries. Row-major
/// dr x dr blocks, direction-major within a site.
struct GaugeField {
  const Geometry* geo = nullptr;
  Representation rep = Representation::Fundamental;
  int group_rank = 0;
  int dr = 0;
  bool real_links = false;
  std::vector<Cplx> cdata;
  std::vector<double> rdata;
  std::vector<Cplx> ccomm;
  std::vector<double> rcomm;

  size_t vals_per_site() const { return static_cast<size_t>(4) * dr * dr; }
  const Cplx* clink(int s, int mu) const {
    return cdata.data() + (static_cast<size_t>(s) * 4 + mu) * dr * dr;
  }
  const double* rlink(int s, int mu) const {
    return rdata.data() + (static_cast<size_t>(s) * 4 + mu) * dr * dr;
  }
  /// Link as a matrix, for tests and invariant scans.
  Mat link(int s, int mu) const;
};

GaugeField make_gauge(const Geometry& geo, int group_rank, Representation rep);

/// All links identity, halos included. Used by the constant-spinor mass test.
GaugeField make_unit_gauge(const Geometry& geo, int group_rank, Representation rep);

/// Fill interior links from keys (seed, global site, direction): a fundamental
/// group element is drawn and mapped through represent(). Halos stay zero;
/// exchange them before use (see transport).
void randomize_gauge_interior(GaugeField& g, uint64_t seed);

}  // namespace latbench
