#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace latbench {

using Coord4 = std::array<int, 4>;

/// Row-major rank <-> coordinate maps over the worker grid.
int proc_rank(const Coord4& coords, const Coord4& grid);
Coord4 proc_coords(int rank, const Coord4& grid);

/// One worker's view of the domain decomposition.
///
/// The global T*X*Y*Z lattice is split evenly over a 4D worker grid. Interior
/// sites are indexed lexicographically by local (t,x,y,z). Each of the 8 faces
/// gets a one-site-deep halo slab appended after the interior, stored
/// contiguously and ordered lexicographically over the non-face coordinates,
/// so an exchange message is a single contiguous run of site records.
struct Geometry {
  Coord4 global{};
  Coord4 grid{};
  Coord4 local{};
  Coord4 coords{};  // this worker's position in the grid
  int rank = 0;
  int workers = 1;

  int interior = 0;     // number of owned sites
  int total_sites = 0;  // interior + all halo slabs
  std::array<int, 8> face_count{};   // face f = mu*2 + sign (0:-, 1:+)
  std::array<int, 8> halo_offset{};  // first site index of halo slab f

  // neighbor(site, mu, sign) for all interior sites: interior index when the
  // neighbor is owned (including the periodic wrap when grid[mu] == 1),
  // otherwise the halo slot for that face.
  std::vector<int32_t> neigh;

  int site_index(const Coord4& lc) const {
    return ((lc[0] * local[1] + lc[1]) * local[2] + lc[2]) * local[3] + lc[3];
  }
  Coord4 site_coords(int idx) const;  // interior sites only

  int neighbor(int site, int mu, int sign) const { return neigh[site * 8 + mu * 2 + sign]; }

  /// Global (t,x,y,z) of any site index, halo slots included.
  Coord4 global_coords(int idx) const;

  /// Position of an interior boundary/halo site within its face slab.
  int face_position(int mu, const Coord4& lc) const;

  uint64_t global_volume() const {
    return static_cast<uint64_t>(global[0]) * global[1] * global[2] * global[3];
  }
};

/// Build one worker's geometry. Throws DecompositionError when extents do not
/// divide, and, with `enforce_floor`, when the local lattice drops below the
/// stock-test floor of 8x4x4x4.
Geometry build_geometry(const Coord4& global, const Coord4& grid, int rank, bool enforce_floor);

}  // namespace latbench
