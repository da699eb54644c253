#include "latbench/flops.hpp"

namespace latbench {

const char* to_string(BenchKernel k) {
  switch (k) {
    case BenchKernel::SqNorm: return "sqnorm";
    case BenchKernel::MulAdd: return "muladd";
    case BenchKernel::Dirac: return "dirac";
  }
  return "?";
}

long long flops_per_site(BenchKernel k, int dr, bool real_rep) {
  const long long d = dr;
  switch (k) {
    case BenchKernel::SqNorm: return 16 * d;
    case BenchKernel::MulAdd: return 32 * d;
    case BenchKernel::Dirac: {
      const long long mac = real_rep ? 4 : 8;
      return 8 * (4 * d + 2 * d * d * mac + 8 * d) + 24 * d;
    }
  }
  return 0;
}

}  // namespace latbench
