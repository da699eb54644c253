#pragma once

#include <vector>

#include "latbench/fields.hpp"
#include "latbench/flops.hpp"
#include "latbench/gamma.hpp"

namespace latbench {

// Arithmetic primitives shared by the production kernels and their
// instrumented twins. Each primitive is one declared-convention event; the
// production path instantiates with NoTally and the hooks vanish. Complex
// arithmetic is spelled out in components so the compiled loops contain
// exactly the counted operations.

namespace ops {

inline void tally_cadd(NoTally&) {}
inline void tally_cadd(FlopTally& t) { ++t.cadd; }
inline void tally_cmac(NoTally&) {}
inline void tally_cmac(FlopTally& t) { ++t.cmac; }
inline void tally_rcmac(NoTally&) {}
inline void tally_rcmac(FlopTally& t) { ++t.rcmac; }
inline void tally_rcmul(NoTally&) {}
inline void tally_rcmul(FlopTally& t) { ++t.rcmul; }
inline void tally_norm(NoTally&) {}
inline void tally_norm(FlopTally& t) { ++t.normra; }

/// z += a
template <class T>
inline void cacc(Cplx& z, const Cplx& a, T& t) {
  z = {z.real() + a.real(), z.imag() + a.imag()};
  tally_cadd(t);
}

/// dst = a + phase * b; the unit phase is a component shuffle, not a flop
template <class T>
inline void phase_add(Cplx& dst, const Cplx& a, Ph p, const Cplx& b, T& t) {
  const Cplx pb = ph_mul(p, b);
  dst = {a.real() + pb.real(), a.imag() + pb.imag()};
  tally_cadd(t);
}

/// z += phase * g
template <class T>
inline void phase_acc(Cplx& z, Ph p, const Cplx& g, T& t) {
  const Cplx pg = ph_mul(p, g);
  z = {z.real() + pg.real(), z.imag() + pg.imag()};
  tally_cadd(t);
}

/// acc += u * v, complex link
template <class T>
inline void link_mac(Cplx& acc, const Cplx& u, const Cplx& v, T& t) {
  acc = {acc.real() + u.real() * v.real() - u.imag() * v.imag(),
         acc.imag() + u.real() * v.imag() + u.imag() * v.real()};
  tally_cmac(t);
}

/// acc += conj(u) * v, complex link; conjugation is a sign fold
template <class T>
inline void link_mac_conj(Cplx& acc, const Cplx& u, const Cplx& v, T& t) {
  acc = {acc.real() + u.real() * v.real() + u.imag() * v.imag(),
         acc.imag() + u.real() * v.imag() - u.imag() * v.real()};
  tally_cmac(t);
}

/// acc += u * v, real link (adjoint representation)
template <class T>
inline void link_mac(Cplx& acc, double u, const Cplx& v, T& t) {
  acc = {acc.real() + u * v.real(), acc.imag() + u * v.imag()};
  tally_rcmac(t);
}

template <class T>
inline void link_mac_conj(Cplx& acc, double u, const Cplx& v, T& t) {
  link_mac(acc, u, v, t);
}

/// out = r * a
template <class T>
inline void rc_mul(Cplx& out, double r, const Cplx& a, T& t) {
  out = {r * a.real(), r * a.imag()};
  tally_rcmul(t);
}

/// acc += r * a
template <class T>
inline void rc_mac(Cplx& acc, double r, const Cplx& a, T& t) {
  acc = {acc.real() + r * a.real(), acc.imag() + r * a.imag()};
  tally_rcmac(t);
}

/// acc += |z|^2
template <class T>
inline void norm_acc(double& acc, const Cplx& z, T& t) {
  acc += z.real() * z.real() + z.imag() * z.imag();
  tally_norm(t);
}

}  // namespace ops

/// Interior square norm, reduction not included.
template <class T>
double sqnorm_interior(const SpinorField& f, T& tally) {
  double acc = 0.0;
  const size_t n = static_cast<size_t>(f.geo->interior) * f.vals_per_site();
  const Cplx* p = f.data.data();
  for (size_t i = 0; i < n; ++i) ops::norm_acc(acc, p[i], tally);
  return acc;
}

/// psi2 += c * psi1 over interior components.
template <class T>
void mul_add_interior(SpinorField& psi2, Cplx c, const SpinorField& psi1, T& tally) {
  const size_t n = static_cast<size_t>(psi2.geo->interior) * psi2.vals_per_site();
  Cplx* a = psi2.data.data();
  const Cplx* b = psi1.data.data();
  for (size_t i = 0; i < n; ++i) ops::link_mac(a[i], c, b[i], tally);
}

/// Wilson operator at one site:
///   out(x) = (4+m) in(x) - 1/2 sum_mu [ (1-g_mu) U_mu(x) in(x+mu)
///                                     + (1+g_mu) U_mu(x-mu)^dag in(x-mu) ].
/// Each hop is spin-projected to two components before the color multiply.
/// h, g, acc are caller scratch of sizes 2dr, 2dr, 4dr.
template <class LinkT, class T>
inline void dirac_site(Cplx* out, const Cplx* in_base, const LinkT* links, const Geometry& geo,
                       int site, int dr, double mass, T& tally, Cplx* h, Cplx* g, Cplx* acc) {
  const HopTables& ht = hop_tables();
  const int nv = 4 * dr;
  for (int k = 0; k < nv; ++k) acc[k] = Cplx(0.0, 0.0);
  const int32_t* nrow = geo.neigh.data() + static_cast<size_t>(site) * 8;

  for (int mu = 0; mu < 4; ++mu) {
    const int p0 = ht.proj_pair[mu][0], p1 = ht.proj_pair[mu][1];
    const int r0 = ht.rec_src[mu][0], r1 = ht.rec_src[mu][1];

    // forward: (1 - gamma_mu) U_mu(x) in(x + mu)
    {
      const Ph f0 = ht.proj_phase[mu][0], f1 = ht.proj_phase[mu][1];
      const Cplx* pin = in_base + static_cast<size_t>(nrow[mu * 2 + 1]) * nv;
      for (int c = 0; c < dr; ++c) {
        ops::phase_add(h[c], pin[c], f0, pin[p0 * dr + c], tally);
        ops::phase_add(h[dr + c], pin[dr + c], f1, pin[p1 * dr + c], tally);
      }
      const LinkT* u = links + (static_cast<size_t>(site) * 4 + mu) * dr * dr;
      for (int a = 0; a < 2; ++a) {
        const Cplx* hv = h + static_cast<size_t>(a) * dr;
        for (int r = 0; r < dr; ++r) {
          Cplx s(0.0, 0.0);
          const LinkT* urow = u + static_cast<size_t>(r) * dr;
          for (int c = 0; c < dr; ++c) ops::link_mac(s, urow[c], hv[c], tally);
          g[a * dr + r] = s;
        }
      }
      const Ph q0 = ht.rec_phase[mu][0], q1 = ht.rec_phase[mu][1];
      for (int c = 0; c < dr; ++c) {
        ops::cacc(acc[c], g[c], tally);
        ops::cacc(acc[dr + c], g[dr + c], tally);
        ops::phase_acc(acc[2 * dr + c], q0, g[r0 * dr + c], tally);
        ops::phase_acc(acc[3 * dr + c], q1, g[r1 * dr + c], tally);
      }
    }

    // backward: (1 + gamma_mu) U_mu(x - mu)^dag in(x - mu)
    {
      const Ph f0 = ph_neg(ht.proj_phase[mu][0]), f1 = ph_neg(ht.proj_phase[mu][1]);
      const int nb = nrow[mu * 2 + 0];
      const Cplx* pin = in_base + static_cast<size_t>(nb) * nv;
      for (int c = 0; c < dr; ++c) {
        ops::phase_add(h[c], pin[c], f0, pin[p0 * dr + c], tally);
        ops::phase_add(h[dr + c], pin[dr + c], f1, pin[p1 * dr + c], tally);
      }
      const LinkT* u = links + (static_cast<size_t>(nb) * 4 + mu) * dr * dr;
      for (int a = 0; a < 2; ++a) {
        const Cplx* hv = h + static_cast<size_t>(a) * dr;
        for (int r = 0; r < dr; ++r) {
          Cplx s(0.0, 0.0);
          // row r of U^dag is the conjugated column r of U
          for (int c = 0; c < dr; ++c)
            ops::link_mac_conj(s, u[static_cast<size_t>(c) * dr + r], hv[c], tally);
          g[a * dr + r] = s;
        }
      }
      const Ph q0 = ph_neg(ht.rec_phase[mu][0]), q1 = ph_neg(ht.rec_phase[mu][1]);
      for (int c = 0; c < dr; ++c) {
        ops::cacc(acc[c], g[c], tally);
        ops::cacc(acc[dr + c], g[dr + c], tally);
        ops::phase_acc(acc[2 * dr + c], q0, g[r0 * dr + c], tally);
        ops::phase_acc(acc[3 * dr + c], q1, g[r1 * dr + c], tally);
      }
    }
  }

  const Cplx* pin = in_base + static_cast<size_t>(site) * nv;
  const double dm = 4.0 + mass;
  for (int k = 0; k < nv; ++k) {
    ops::rc_mul(out[k], dm, pin[k], tally);
    ops::rc_mac(out[k], -0.5, acc[k], tally);
  }
}

template <class LinkT, class T>
void dirac_interior(SpinorField& out, const LinkT* links, const SpinorField& in, double mass,
                    T& tally) {
  const Geometry& geo = *out.geo;
  const int dr = out.dr;
  const int nv = 4 * dr;
  std::vector<Cplx> h(2 * dr), g(2 * dr), acc(4 * dr);
  for (int s = 0; s < geo.interior; ++s)
    dirac_site(out.data.data() + static_cast<size_t>(s) * nv, in.data.data(), links, geo, s, dr,
               mass, tally, h.data(), g.data(), acc.data());
}

}  // namespace latbench
