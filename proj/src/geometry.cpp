#include "latbench/geometry.hpp"

#include <string>

#include "latbench/errors.hpp"

namespace latbench {

int proc_rank(const Coord4& c, const Coord4& grid) {
  return ((c[0] * grid[1] + c[1]) * grid[2] + c[2]) * grid[3] + c[3];
}

Coord4 proc_coords(int rank, const Coord4& grid) {
  Coord4 c;
  c[3] = rank % grid[3];
  rank /= grid[3];
  c[2] = rank % grid[2];
  rank /= grid[2];
  c[1] = rank % grid[1];
  c[0] = rank / grid[1];
  return c;
}

Coord4 Geometry::site_coords(int idx) const {
  Coord4 c;
  c[3] = idx % local[3];
  idx /= local[3];
  c[2] = idx % local[2];
  idx /= local[2];
  c[1] = idx % local[1];
  c[0] = idx / local[1];
  return c;
}

int Geometry::face_position(int mu, const Coord4& lc) const {
  int pos = 0;
  for (int d = 0; d < 4; ++d) {
    if (d == mu) continue;
    pos = pos * local[d] + lc[d];
  }
  return pos;
}

Coord4 Geometry::global_coords(int idx) const {
  Coord4 lc;
  if (idx < interior) {
    lc = site_coords(idx);
  } else {
    // locate the face slab, then unpack the three in-face coordinates
    int f = 7;
    while (idx < halo_offset[f]) --f;
    const int mu = f / 2;
    const int sign = f % 2;
    int pos = idx - halo_offset[f];
    for (int d = 3; d >= 0; --d) {
      if (d == mu) continue;
      lc[d] = pos % local[d];
      pos /= local[d];
    }
    lc[mu] = sign ? local[mu] : -1;
  }
  Coord4 g;
  for (int d = 0; d < 4; ++d) {
    const int v = coords[d] * local[d] + lc[d];
    g[d] = ((v % global[d]) + global[d]) % global[d];
  }
  return g;
}

Geometry build_geometry(const Coord4& global, const Coord4& grid, int rank, bool enforce_floor) {
  Geometry geo;
  geo.global = global;
  geo.grid = grid;
  geo.workers = 1;
  for (int d = 0; d < 4; ++d) {
    if (global[d] <= 0 || grid[d] <= 0)
      throw DecompositionError("lattice extents and grid entries must be positive");
    if (global[d] % 2 != 0)
      throw DecompositionError("lattice extent " + std::to_string(global[d]) + " is odd");
    if (global[d] % grid[d] != 0)
      throw DecompositionError("extent " + std::to_string(global[d]) +
                               " not divisible by grid " + std::to_string(grid[d]) +
                               " in direction " + std::to_string(d));
    geo.local[d] = global[d] / grid[d];
    geo.workers *= grid[d];
  }
  if (enforce_floor) {
    const Coord4 floor{8, 4, 4, 4};
    for (int d = 0; d < 4; ++d)
      if (geo.local[d] < floor[d])
        throw DecompositionError("local lattice " + std::to_string(geo.local[0]) + "x" +
                                 std::to_string(geo.local[1]) + "x" + std::to_string(geo.local[2]) +
                                 "x" + std::to_string(geo.local[3]) +
                                 " is below the 8x4x4x4 floor");
  }
  if (rank < 0 || rank >= geo.workers) throw ContractViolation("rank outside worker grid");
  geo.rank = rank;
  geo.coords = proc_coords(rank, grid);

  geo.interior = geo.local[0] * geo.local[1] * geo.local[2] * geo.local[3];
  int off = geo.interior;
  for (int f = 0; f < 8; ++f) {
    geo.face_count[f] = geo.interior / geo.local[f / 2];
    geo.halo_offset[f] = off;
    off += geo.face_count[f];
  }
  geo.total_sites = off;

  geo.neigh.resize(static_cast<size_t>(geo.interior) * 8);
  for (int s = 0; s < geo.interior; ++s) {
    const Coord4 lc = geo.site_coords(s);
    for (int mu = 0; mu < 4; ++mu) {
      for (int sign = 0; sign < 2; ++sign) {
        Coord4 nc = lc;
        nc[mu] += sign ? 1 : -1;
        int32_t idx;
        if (nc[mu] >= 0 && nc[mu] < geo.local[mu]) {
          idx = geo.site_index(nc);
        } else if (grid[mu] == 1) {
          nc[mu] = (nc[mu] + geo.local[mu]) % geo.local[mu];  // periodic wrap, same worker
          idx = geo.site_index(nc);
        } else {
          idx = geo.halo_offset[mu * 2 + sign] + geo.face_position(mu, lc);
        }
        geo.neigh[static_cast<size_t>(s) * 8 + mu * 2 + sign] = idx;
      }
    }
  }
  return geo;
}

}  // namespace latbench
