#pragma once

#include <cstdint>

namespace latbench {

enum class BenchKernel { SqNorm, MulAdd, Dirac };

const char* to_string(BenchKernel k);

/// Tally of arithmetic events, filled by the instrumented kernel twins.
/// FLOP equivalents are declared conventions, not hardware counters; figures
/// are only comparable within this suite.
struct FlopTally {
  long long cadd = 0;    // complex add/sub: 2
  long long cmul = 0;    // complex multiply: 6
  long long cmac = 0;    // complex multiply-accumulate: 8
  long long rcmac = 0;   // real x complex multiply-accumulate: 4
  long long rcmul = 0;   // real x complex multiply: 2
  long long normra = 0;  // |z|^2 accumulate (2 mul + 2 add): 4

  long long flops() const {
    return 2 * cadd + 6 * cmul + 8 * cmac + 4 * rcmac + 2 * rcmul + 4 * normra;
  }
  void reset() { *this = FlopTally{}; }
};

/// Zero-cost stand-in for the production kernels.
struct NoTally {};

/// Operation counts per lattice site for the three benchmark kernels.
///
/// sqnorm:   4 dr |z|^2 accumulates                          -> 16 dr
/// mul_add:  4 dr complex MACs                               -> 32 dr
/// Dirac:    8 hops x [spin projection (2 dr adds)
///                     + color multiply (2 dr^2 MACs, 8 flops each for
///                       complex links, 4 for real ones)
///                     + spin reconstruction (4 dr adds)]
///           + per-component (4+m) scale and -1/2 hop fold   -> see below
///
/// Dirac total: 8 (4 dr + 2 dr^2 k + 8 dr) + 24 dr, k = 8 complex / 4 real.
/// These constants are pinned by tests against the instrumented kernels,
/// integer-exactly.
long long flops_per_site(BenchKernel k, int dr, bool real_rep);

}  // namespace latbench
