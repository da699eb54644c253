#include "latbench/kernels.hpp"

#include "latbench/errors.hpp"
#include "latbench/kernel_ops.hpp"

namespace latbench {

namespace {

void check_pair(const SpinorField& a, const SpinorField& b, const char* who) {
  if (a.geo != b.geo || a.dr != b.dr)
    throw ContractViolation(std::string(who) + ": spinor fields disagree on geometry or dr");
}

void check_dirac_args(const SpinorField& out, const GaugeField& gauge, const SpinorField& in) {
  check_pair(out, in, "apply_dirac");
  if (gauge.geo != in.geo) throw ContractViolation("apply_dirac: gauge field geometry mismatch");
  if (gauge.dr != in.dr)
    throw ContractViolation("apply_dirac: gauge and spinor representations disagree");
  if (&out == &in) throw ContractViolation("apply_dirac: output must not alias input");
}

template <class T>
void apply_dirac_impl(SpinorField& out, const GaugeField& gauge, SpinorField& in, double mass,
                      Worker& w, const ExchangePlan& plan, T& tally) {
  check_dirac_args(out, gauge, in);
  halo_exchange(w, plan, in);
  if (gauge.real_links)
    dirac_interior(out, gauge.rdata.data(), in, mass, tally);
  else
    dirac_interior(out, gauge.cdata.data(), in, mass, tally);
}

}  // namespace

double sqnorm(const SpinorField& field, Worker& w) {
  NoTally t;
  return w.global_sum(sqnorm_interior(field, t));
}

double sqnorm_counted(const SpinorField& field, Worker& w, FlopTally& tally) {
  return w.global_sum(sqnorm_interior(field, tally));
}

void mul_add(SpinorField& psi2, Cplx c, const SpinorField& psi1) {
  check_pair(psi2, psi1, "mul_add");
  NoTally t;
  mul_add_interior(psi2, c, psi1, t);
}

void mul_add_counted(SpinorField& psi2, Cplx c, const SpinorField& psi1, FlopTally& tally) {
  check_pair(psi2, psi1, "mul_add");
  mul_add_interior(psi2, c, psi1, tally);
}

void apply_dirac(SpinorField& out, const GaugeField& gauge, SpinorField& in, double mass,
                 Worker& w, const ExchangePlan& plan) {
  NoTally t;
  apply_dirac_impl(out, gauge, in, mass, w, plan, t);
}

void apply_dirac_counted(SpinorField& out, const GaugeField& gauge, SpinorField& in, double mass,
                         Worker& w, const ExchangePlan& plan, FlopTally& tally) {
  apply_dirac_impl(out, gauge, in, mass, w, plan, tally);
}

Cplx dot(const SpinorField& a, const SpinorField& b, Worker& w) {
  check_pair(a, b, "dot");
  Cplx local(0.0, 0.0);
  const size_t n = static_cast<size_t>(a.geo->interior) * a.vals_per_site();
  for (size_t i = 0; i < n; ++i) local += std::conj(a.data[i]) * b.data[i];
  return w.global_sum(local);
}

void axpy(SpinorField& y, Cplx a, const SpinorField& x) {
  check_pair(y, x, "axpy");
  const size_t n = static_cast<size_t>(y.geo->interior) * y.vals_per_site();
  for (size_t i = 0; i < n; ++i) y.data[i] += a * x.data[i];
}

void xpay(SpinorField& y, Cplx a, const SpinorField& x) {
  check_pair(y, x, "xpay");
  const size_t n = static_cast<size_t>(y.geo->interior) * y.vals_per_site();
  for (size_t i = 0; i < n; ++i) y.data[i] = x.data[i] + a * y.data[i];
}

void copy_interior(SpinorField& dst, const SpinorField& src) {
  check_pair(dst, src, "copy_interior");
  const size_t n = static_cast<size_t>(dst.geo->interior) * dst.vals_per_site();
  for (size_t i = 0; i < n; ++i) dst.data[i] = src.data[i];
}

void zero_interior(SpinorField& f) {
  const size_t n = static_cast<size_t>(f.geo->interior) * f.vals_per_site();
  for (size_t i = 0; i < n; ++i) f.data[i] = Cplx(0.0, 0.0);
}

void apply_gamma5(SpinorField& f) {
  const int dr = f.dr;
  for (int s = 0; s < f.geo->interior; ++s) {
    Cplx* rec = f.site(s);
    for (int k = 2 * dr; k < 4 * dr; ++k) rec[k] = -rec[k];
  }
}

}  // namespace latbench
