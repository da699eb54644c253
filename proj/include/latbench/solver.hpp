#pragma once

#include <functional>
#include <vector>

#include "latbench/clock.hpp"
#include "latbench/fields.hpp"
#include "latbench/kernels.hpp"
#include "latbench/transport.hpp"

namespace latbench {

struct CgSettings {
  double tolerance = 1e-7;  // relative residual threshold, in (0, 1)
  int max_iterations = 10000;
};

struct CgOutcome {
  SpinorField solution;
  long iterations = 0;
  double rel_residual = 0.0;       // from the recurrence
  double true_rel_residual = 0.0;  // recomputed |Hx - b| / |b| at exit
  double seconds = 0.0;
  std::vector<double> residual_history;  // relative, one entry per iteration
};

/// A collective linear operator: out = A(in). May refresh in's halos.
using LinearOp = std::function<void(SpinorField& out, SpinorField& in)>;

/// out = D^dag D in, with D^dag built as gamma_5 D gamma_5. Hermitian
/// positive semi-definite by construction. `tmp` is caller scratch.
void apply_h(SpinorField& out, const GaugeField& gauge, SpinorField& in, double mass, Worker& w,
             const ExchangePlan& plan, SpinorField& tmp);

/// Convenience wrapper binding gauge, mass and scratch into a LinearOp.
LinearOp make_h_operator(const GaugeField& gauge, double mass, Worker& w,
                         const ExchangePlan& plan, SpinorField& tmp);

/// Conjugate gradient on a hermitian positive definite operator. Reductions
/// go through the fixed tree, so iteration counts do not depend on worker
/// scheduling. Throws NonConvergence past max_iterations. The rank-0 worker
/// reads the clock; the reported seconds are broadcast so outcomes agree.
CgOutcome cg_solve(const LinearOp& op, const SpinorField& rhs, const CgSettings& settings,
                   Worker& w, Clock& clock);

struct ConsistencyResult {
  enum class Status { NotRun, Passed, Failed } status = Status::NotRun;
  long iterations = 0;
  double residual = 0.0;  // recomputed true residual
  double seconds = 0.0;
};

const char* to_string(ConsistencyResult::Status s);

/// Invert H on `rhs` and verify the recomputed residual against the
/// threshold. A non-converging solve surfaces as NonConvergence; a converged
/// solve whose true residual disagrees with the recurrence is reported
/// Failed (a broken build or machine).
ConsistencyResult consistency_check(const GaugeField& gauge, const SpinorField& rhs, double mass,
                                    const CgSettings& settings, Worker& w,
                                    const ExchangePlan& plan, Clock& clock);

}  // namespace latbench
