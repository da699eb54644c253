#pragma once

#include "latbench/fields.hpp"
#include "latbench/flops.hpp"
#include "latbench/transport.hpp"

namespace latbench {

/// Square norm of a spinor field over the whole lattice, reduced with the
/// fixed tree; identical on every worker. Collective.
double sqnorm(const SpinorField& field, Worker& w);

/// psi2 = psi2 + c * psi1 on interior components; halos are the caller's
/// business.
void mul_add(SpinorField& psi2, Cplx c, const SpinorField& psi1);

/// out = D in with the Wilson operator. Performs one spinor halo exchange on
/// `in` before the stencil; gauge halos must already be current. Collective.
void apply_dirac(SpinorField& out, const GaugeField& gauge, SpinorField& in, double mass,
                 Worker& w, const ExchangePlan& plan);

// Instrumented twins: identical arithmetic, every operation tallied.
double sqnorm_counted(const SpinorField& field, Worker& w, FlopTally& tally);
void mul_add_counted(SpinorField& psi2, Cplx c, const SpinorField& psi1, FlopTally& tally);
void apply_dirac_counted(SpinorField& out, const GaugeField& gauge, SpinorField& in, double mass,
                         Worker& w, const ExchangePlan& plan, FlopTally& tally);

// Field helpers used by the solver and tests (not benchmark kernels, not
// flop-counted).

/// sum over interior of conj(a) . b, tree-reduced. Collective.
Cplx dot(const SpinorField& a, const SpinorField& b, Worker& w);

/// y += a * x on interior components.
void axpy(SpinorField& y, Cplx a, const SpinorField& x);

/// y = x + a * y on interior components.
void xpay(SpinorField& y, Cplx a, const SpinorField& x);

void copy_interior(SpinorField& dst, const SpinorField& src);
void zero_interior(SpinorField& f);

/// Multiply by gamma_5: negate the two lower spin components, interior only.
void apply_gamma5(SpinorField& f);

}  // namespace latbench
