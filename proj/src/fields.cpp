#include "latbench/fields.hpp"

#include "latbench/errors.hpp"
#include "latbench/rng.hpp"

namespace latbench {

namespace {
// key domains keep spinor, gauge and re-randomization streams disjoint
constexpr uint64_t kDomainSpinor = 0x53u;
constexpr uint64_t kDomainGauge = 0x47u;
}  // namespace

SpinorField make_spinor(const Geometry& geo, int dr) {
  SpinorField f;
  f.geo = &geo;
  f.dr = dr;
  f.data.assign(static_cast<size_t>(geo.total_sites) * 4 * dr, Cplx(0.0, 0.0));
  return f;
}

SpinorField init_spinor_random(const Geometry& geo, int dr, uint64_t seed, uint64_t field_index) {
  SpinorField f = make_spinor(geo, dr);
  for (int s = 0; s < geo.interior; ++s) {
    const Coord4 g = geo.global_coords(s);
    Cplx* rec = f.site(s);
    for (int spin = 0; spin < 4; ++spin)
      for (int c = 0; c < dr; ++c) {
        const uint64_t key =
            key_hash({seed, kDomainSpinor, field_index, static_cast<uint64_t>(g[0]),
                      static_cast<uint64_t>(g[1]), static_cast<uint64_t>(g[2]),
                      static_cast<uint64_t>(g[3]), static_cast<uint64_t>(spin),
                      static_cast<uint64_t>(c)});
        double re, im;
        gauss_pair(key, re, im);
        rec[spin * dr + c] = {re, im};
      }
  }
  return f;
}

Mat GaugeField::link(int s, int mu) const {
  Mat m(dr);
  if (real_links) {
    const double* p = rlink(s, mu);
    for (int i = 0; i < dr; ++i)
      for (int j = 0; j < dr; ++j) m.at(i, j) = p[i * dr + j];
  } else {
    const Cplx* p = clink(s, mu);
    for (int i = 0; i < dr; ++i)
      for (int j = 0; j < dr; ++j) m.at(i, j) = p[i * dr + j];
  }
  return m;
}

GaugeField make_gauge(const Geometry& geo, int group_rank, Representation rep) {
  GaugeField g;
  g.geo = &geo;
  g.rep = rep;
  g.group_rank = group_rank;
  g.dr = rep_dim(rep, group_rank);
  g.real_links = rep_is_real(rep);
  const size_t total = static_cast<size_t>(geo.total_sites) * g.vals_per_site();
  if (g.real_links)
    g.rdata.assign(total, 0.0);
  else
    g.cdata.assign(total, Cplx(0.0, 0.0));
  return g;
}

GaugeField make_unit_gauge(const Geometry& geo, int group_rank, Representation rep) {
  GaugeField g = make_gauge(geo, group_rank, rep);
  for (int s = 0; s < geo.total_sites; ++s)
    for (int mu = 0; mu < 4; ++mu) {
      const size_t base = (static_cast<size_t>(s) * 4 + mu) * g.dr * g.dr;
      for (int i = 0; i < g.dr; ++i) {
        if (g.real_links)
          g.rdata[base + static_cast<size_t>(i) * g.dr + i] = 1.0;
        else
          g.cdata[base + static_cast<size_t>(i) * g.dr + i] = 1.0;
      }
    }
  return g;
}

void randomize_gauge_interior(GaugeField& g, uint64_t seed) {
  const Geometry& geo = *g.geo;
  const int dr = g.dr;
  for (int s = 0; s < geo.interior; ++s) {
    const Coord4 gc = geo.global_coords(s);
    for (int mu = 0; mu < 4; ++mu) {
      RngStream stream(key_hash({seed, kDomainGauge, static_cast<uint64_t>(gc[0]),
                                 static_cast<uint64_t>(gc[1]), static_cast<uint64_t>(gc[2]),
                                 static_cast<uint64_t>(gc[3]), static_cast<uint64_t>(mu)}));
      const Mat u = random_group_element(g.group_rank, stream);
      const RepMatrix r = represent(u, g.rep);
      const size_t base = (static_cast<size_t>(s) * 4 + mu) * dr * dr;
      for (int i = 0; i < dr; ++i)
        for (int j = 0; j < dr; ++j) {
          if (g.real_links)
            g.rdata[base + static_cast<size_t>(i) * dr + j] = r.m.at(i, j).real();
          else
            g.cdata[base + static_cast<size_t>(i) * dr + j] = r.m.at(i, j);
        }
    }
  }
}

}  // namespace latbench
