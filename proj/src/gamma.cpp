#include "latbench/gamma.hpp"

namespace latbench {

namespace {

std::array<Mat, 5> build_gammas() {
  const Cplx i{0.0, 1.0};
  std::array<Mat, 5> g;
  for (auto& m : g) m = Mat(4);

  // gamma_0: A_0 = -1
  g[0].at(0, 2) = -1.0;
  g[0].at(1, 3) = -1.0;
  g[0].at(2, 0) = -1.0;
  g[0].at(3, 1) = -1.0;

  // gamma_1: A_1 = -i sigma_1
  g[1].at(0, 3) = -i;
  g[1].at(1, 2) = -i;
  g[1].at(2, 1) = i;
  g[1].at(3, 0) = i;

  // gamma_2: A_2 = -i sigma_2
  g[2].at(0, 3) = -1.0;
  g[2].at(1, 2) = 1.0;
  g[2].at(2, 1) = 1.0;
  g[2].at(3, 0) = -1.0;

  // gamma_3: A_3 = -i sigma_3
  g[3].at(0, 2) = -i;
  g[3].at(1, 3) = i;
  g[3].at(2, 0) = i;
  g[3].at(3, 1) = -i;

  // gamma_5 = gamma_0 gamma_1 gamma_2 gamma_3
  g[4].at(0, 0) = 1.0;
  g[4].at(1, 1) = 1.0;
  g[4].at(2, 2) = -1.0;
  g[4].at(3, 3) = -1.0;

  return g;
}

}  // namespace

const std::array<Mat, 5>& gamma_matrices() {
  static const std::array<Mat, 5> g = build_gammas();
  return g;
}

const HopTables& hop_tables() {
  static const HopTables t{
      // proj_pair
      {{{2, 3}, {3, 2}, {3, 2}, {2, 3}}},
      // proj_phase for (1 - gamma_mu)
      {{{Ph::P1, Ph::P1}, {Ph::PI, Ph::PI}, {Ph::P1, Ph::M1}, {Ph::PI, Ph::MI}}},
      // rec_src
      {{{0, 1}, {1, 0}, {1, 0}, {0, 1}}},
      // rec_phase for (1 - gamma_mu)
      {{{Ph::P1, Ph::P1}, {Ph::MI, Ph::MI}, {Ph::M1, Ph::P1}, {Ph::MI, Ph::PI}}},
  };
  return t;
}

}  // namespace latbench
