#pragma once

#include <string>
#include <vector>

#include "latbench/matrix.hpp"
#include "latbench/rng.hpp"

namespace latbench {

/// Fermion representations of SU(N) supported by the benchmark.
enum class Representation { Fundamental, Adjoint, Symmetric, Antisymmetric };

const char* to_string(Representation rep);
Representation representation_from_string(const std::string& name);

/// Dimension of a representation of SU(N):
/// fundamental N, adjoint N^2-1, antisymmetric N(N-1)/2, symmetric N(N+1)/2.
int rep_dim(Representation rep, int n);

/// Adjoint matrices are real; the other three are complex.
bool rep_is_real(Representation rep);

/// su(N) generator basis: N^2-1 traceless hermitian matrices normalized so
/// that trace(T_a T_b) = delta_ab / 2. Ordered: symmetric off-diagonal pairs
/// (lexicographic i<j), antisymmetric pairs, then diagonal. For N=2 this is
/// exactly the Pauli matrices over 2.
std::vector<Mat> generators(int n);

/// Cached per-rank generator basis (links are represented in bulk).
const std::vector<Mat>& cached_generators(int n);

/// Approximately Haar-distributed SU(N) element: Gaussian entries,
/// column-wise Gram-Schmidt, determinant phase divided out. Deterministic in
/// the stream state.
Mat random_group_element(int n, RngStream& rng);

/// A link mapped into a fermion representation. Entries are kept complex;
/// `real_entries` marks representations whose matrices are real (adjoint), in
/// which case kernels store and multiply only the real parts.
struct RepMatrix {
  Mat m;
  bool real_entries = false;
  int dim() const { return m.rows(); }
};

/// Map a fundamental SU(N) element into the requested representation.
RepMatrix represent(const Mat& u, Representation rep);

}  // namespace latbench
