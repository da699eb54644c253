#pragma once

#include <array>
#include <cstdint>

#include "latbench/matrix.hpp"

namespace latbench {

// Chiral Euclidean gamma basis, fixed here and nowhere else:
//   gamma_mu = [[0, A_mu], [A_mu^dag, 0]],  A_0 = -1,  A_k = -i sigma_k,
//   gamma_5  = gamma_0 gamma_1 gamma_2 gamma_3 = diag(1, 1, -1, -1).
// All entries lie in {0, +-1, +-i}; every consumer relies only on the algebra
// (Clifford relations, hermiticity, diagonal gamma_5), so the basis can be
// swapped by editing this module alone.

/// Unit phases. Multiplying by one is a component shuffle, not arithmetic.
enum class Ph : uint8_t { P1, M1, PI, MI };

inline Cplx ph_mul(Ph p, const Cplx& z) {
  switch (p) {
    case Ph::P1: return z;
    case Ph::M1: return {-z.real(), -z.imag()};
    case Ph::PI: return {-z.imag(), z.real()};
    case Ph::MI: return {z.imag(), -z.real()};
  }
  return z;
}

inline Ph ph_neg(Ph p) {
  switch (p) {
    case Ph::P1: return Ph::M1;
    case Ph::M1: return Ph::P1;
    case Ph::PI: return Ph::MI;
    case Ph::MI: return Ph::PI;
  }
  return p;
}

/// gamma_0..gamma_3 and gamma_5 as dense 4x4 matrices.
const std::array<Mat, 5>& gamma_matrices();

/// Spin structure of the Wilson hop in this basis.
///
/// (1 - gamma_mu) psi is rank 2: its two independent components are
///   h_a = psi_a + proj_phase[mu][a] * psi_(proj_pair[mu][a]),   a = 0, 1,
/// and the projected vector expands back to
///   (h_0, h_1, rec_phase[mu][0] * h_(rec_src[mu][0]),
///              rec_phase[mu][1] * h_(rec_src[mu][1])).
/// (1 + gamma_mu) uses the same pairs and sources with negated phases.
struct HopTables {
  std::array<std::array<int, 2>, 4> proj_pair;
  std::array<std::array<Ph, 2>, 4> proj_phase;
  std::array<std::array<int, 2>, 4> rec_src;
  std::array<std::array<Ph, 2>, 4> rec_phase;
};

const HopTables& hop_tables();

}  // namespace latbench
