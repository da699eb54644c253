#include "latbench/group.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "latbench/errors.hpp"

namespace latbench {

const char* to_string(Representation rep) {
  switch (rep) {
    case Representation::Fundamental: return "fundamental";
    case Representation::Adjoint: return "adjoint";
    case Representation::Symmetric: return "symmetric";
    case Representation::Antisymmetric: return "antisymmetric";
  }
  return "?";
}

Representation representation_from_string(const std::string& name) {
  if (name == "fundamental") return Representation::Fundamental;
  if (name == "adjoint") return Representation::Adjoint;
  if (name == "symmetric") return Representation::Symmetric;
  if (name == "antisymmetric") return Representation::Antisymmetric;
  throw ConfigError("unknown representation '" + name + "'");
}

int rep_dim(Representation rep, int n) {
  if (n < 2) throw ConfigError("group rank must be >= 2, got " + std::to_string(n));
  switch (rep) {
    case Representation::Fundamental: return n;
    case Representation::Adjoint: return n * n - 1;
    case Representation::Antisymmetric: return n * (n - 1) / 2;
    case Representation::Symmetric: return n * (n + 1) / 2;
  }
  throw ConfigError("unknown representation");
}

bool rep_is_real(Representation rep) { return rep == Representation::Adjoint; }

std::vector<Mat> generators(int n) {
  if (n < 2) throw ConfigError("group rank must be >= 2, got " + std::to_string(n));
  std::vector<Mat> ts;
  ts.reserve(static_cast<size_t>(n) * n - 1);
  // symmetric off-diagonal: (E_ij + E_ji) / 2
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat t(n);
      t.at(i, j) = 0.5;
      t.at(j, i) = 0.5;
      ts.push_back(std::move(t));
    }
  // antisymmetric off-diagonal: -i (E_ij - E_ji) / 2
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat t(n);
      t.at(i, j) = Cplx(0.0, -0.5);
      t.at(j, i) = Cplx(0.0, 0.5);
      ts.push_back(std::move(t));
    }
  // diagonal: diag(1,...,1,-k,0,...) / sqrt(2k(k+1)) with k leading ones
  for (int k = 1; k < n; ++k) {
    Mat t(n);
    const double norm = 1.0 / std::sqrt(2.0 * k * (k + 1));
    for (int i = 0; i < k; ++i) t.at(i, i) = norm;
    t.at(k, k) = -static_cast<double>(k) * norm;
    ts.push_back(std::move(t));
  }
  return ts;
}

const std::vector<Mat>& cached_generators(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Mat>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generators(n)).first;
  return it->second;
}

Mat random_group_element(int n, RngStream& rng) {
  if (n < 2) throw ConfigError("group rank must be >= 2, got " + std::to_string(n));
  for (int attempt = 0; attempt < 16; ++attempt) {
    Mat u(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) u.at(i, j) = rng.gauss_cplx();

    // modified Gram-Schmidt over columns
    bool degenerate = false;
    for (int j = 0; j < n && !degenerate; ++j) {
      for (int k = 0; k < j; ++k) {
        Cplx proj = 0.0;
        for (int i = 0; i < n; ++i) proj += std::conj(u.at(i, k)) * u.at(i, j);
        for (int i = 0; i < n; ++i) u.at(i, j) -= proj * u.at(i, k);
      }
      double nrm = 0.0;
      for (int i = 0; i < n; ++i) nrm += std::norm(u.at(i, j));
      nrm = std::sqrt(nrm);
      if (nrm < 1e-8) {
        degenerate = true;
        break;
      }
      for (int i = 0; i < n; ++i) u.at(i, j) /= nrm;
    }
    if (degenerate) continue;

    // unitary by construction; divide out the determinant phase
    const double phi = std::arg(u.det());
    u.scale(std::polar(1.0, -phi / n));
    return u;
  }
  throw Error("random group element generation degenerated repeatedly");
}

namespace {

/// Lexicographic two-index basis (i<j strict for antisymmetric, i<=j for symmetric).
std::vector<std::pair<int, int>> index_pairs(int n, bool with_diagonal) {
  std::vector<std::pair<int, int>> ps;
  for (int i = 0; i < n; ++i)
    for (int j = with_diagonal ? i : i + 1; j < n; ++j) ps.emplace_back(i, j);
  return ps;
}

Mat represent_adjoint(const Mat& u, int n) {
  const auto& ts = cached_generators(n);
  const int d = n * n - 1;
  const Mat udag = u.dagger();
  Mat r(d);
  std::vector<Mat> rotated;
  rotated.reserve(d);
  for (int b = 0; b < d; ++b) rotated.push_back(u * ts[b] * udag);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      // R_ab = 2 tr(T_a U T_b U†)
      Cplx t = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t += ts[a].at(i, j) * rotated[b].at(j, i);
      r.at(a, b) = 2.0 * t;
    }
  return r;
}

Mat represent_antisymmetric(const Mat& u, int n) {
  const auto ps = index_pairs(n, false);
  const int d = static_cast<int>(ps.size());
  Mat r(d);
  for (int p = 0; p < d; ++p) {
    const auto [i, j] = ps[p];
    for (int q = 0; q < d; ++q) {
      const auto [k, l] = ps[q];
      r.at(p, q) = u.at(i, k) * u.at(j, l) - u.at(i, l) * u.at(j, k);
    }
  }
  return r;
}

Mat represent_symmetric(const Mat& u, int n) {
  const auto ps = index_pairs(n, true);
  const int d = static_cast<int>(ps.size());
  const double rt2 = std::sqrt(2.0);
  Mat r(d);
  for (int p = 0; p < d; ++p) {
    const auto [i, j] = ps[p];
    for (int q = 0; q < d; ++q) {
      const auto [k, l] = ps[q];
      Cplx v;
      if (i == j && k == l) {
        v = u.at(i, k) * u.at(i, k);
      } else if (i == j) {
        v = rt2 * u.at(i, k) * u.at(i, l);
      } else if (k == l) {
        v = rt2 * u.at(i, k) * u.at(j, k);
      } else {
        v = u.at(i, k) * u.at(j, l) + u.at(i, l) * u.at(j, k);
      }
      r.at(p, q) = v;
    }
  }
  return r;
}

}  // namespace

RepMatrix represent(const Mat& u, Representation rep) {
  const int n = u.rows();
  if (u.cols() != n) throw ContractViolation("represent: link matrix is not square");
  switch (rep) {
    case Representation::Fundamental: return {u, false};
    case Representation::Adjoint: return {represent_adjoint(u, n), true};
    case Representation::Antisymmetric: return {represent_antisymmetric(u, n), false};
    case Representation::Symmetric: return {represent_symmetric(u, n), false};
  }
  throw ContractViolation("represent: unknown representation");
}

}  // namespace latbench
