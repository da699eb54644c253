#include "latbench/transport.hpp"

#include <cstring>
#include <exception>
#include <thread>

#include "latbench/errors.hpp"
#include "latbench/rng.hpp"

namespace latbench {

WorkerGroup::WorkerGroup(const Coord4& grid) : grid_(grid) {
  size_ = 1;
  for (int d = 0; d < 4; ++d) {
    if (grid[d] <= 0) throw ConfigError("worker grid entries must be positive");
    size_ *= grid[d];
  }
  active_ = size_;
  contrib_.assign(size_, Cplx(0.0, 0.0));
  slots_.assign(static_cast<size_t>(size_) * 8, MsgSlot{});
}

uint64_t WorkerGroup::sequence_checksum() const {
  std::lock_guard<std::mutex> lock(m_);
  return checksum_;
}

void WorkerGroup::collective(Op op) {
  std::unique_lock<std::mutex> lk(m_);
  if (poisoned_) throw TransportError(poison_msg_);
  if (active_ < size_) {
    poisoned_ = true;
    poison_msg_ = "collective entered after a worker exited";
    cv_.notify_all();
    throw TransportError(poison_msg_);
  }
  if (arrived_ == 0) {
    phase_op_ = op;
  } else if (phase_op_ != op) {
    poisoned_ = true;
    poison_msg_ = "mismatched collective calls across workers";
    cv_.notify_all();
    throw TransportError(poison_msg_);
  }
  if (++arrived_ == size_) {
    arrived_ = 0;
    checksum_ = mix64(checksum_ ^ static_cast<uint64_t>(op));
    ++phase_;
    cv_.notify_all();
    return;
  }
  const uint64_t entered = phase_;
  cv_.wait(lk, [&] { return phase_ != entered || poisoned_; });
  if (poisoned_) throw TransportError(poison_msg_);
}

void WorkerGroup::abandon(const std::string& why) {
  std::lock_guard<std::mutex> lock(m_);
  if (!poisoned_) {
    poisoned_ = true;
    poison_msg_ = why;
  }
  cv_.notify_all();
}

void WorkerGroup::depart() {
  std::lock_guard<std::mutex> lock(m_);
  --active_;
  if (arrived_ > 0 && !poisoned_) {
    poisoned_ = true;
    poison_msg_ = "worker exited while others were inside a collective";
    cv_.notify_all();
  }
}

Worker::Worker(WorkerGroup& group, int rank)
    : group_(group), rank_(rank), coords_(proc_coords(rank, group.grid())) {}

void Worker::barrier() { group_.collective(WorkerGroup::Op::Barrier); }

namespace {

Cplx tree_sum(const std::vector<Cplx>& v, int lo, int hi) {
  if (hi - lo == 1) return v[lo];
  const int mid = lo + (hi - lo) / 2;
  return tree_sum(v, lo, mid) + tree_sum(v, mid, hi);
}

}  // namespace

Cplx Worker::global_sum(Cplx local) {
  group_.contrib_[rank_] = local;
  group_.collective(WorkerGroup::Op::SumPost);
  // every worker evaluates the same fixed tree, so results agree exactly
  const Cplx total = tree_sum(group_.contrib_, 0, group_.size());
  group_.collective(WorkerGroup::Op::SumDone);
  return total;
}

double Worker::global_sum(double local) { return global_sum(Cplx(local, 0.0)).real(); }

void Worker::post_message(int face, const void* ptr, size_t count, size_t elem) {
  group_.slots_[static_cast<size_t>(rank_) * 8 + face] = {ptr, count, elem};
}

void Worker::commit_messages() { group_.collective(WorkerGroup::Op::ExchangePost); }

WorkerGroup::MsgSlot Worker::peek_message(int rank, int face) const {
  return group_.slots_[static_cast<size_t>(rank) * 8 + face];
}

void Worker::finish_exchange() { group_.collective(WorkerGroup::Op::ExchangeDone); }

void run_workers(const Coord4& grid, const std::function<void(Worker&)>& body) {
  WorkerGroup group(grid);
  const int n = group.size();

  std::mutex em;
  std::exception_ptr first;

  std::vector<std::thread> threads;
  threads.reserve(n);
  for (int rank = 0; rank < n; ++rank) {
    threads.emplace_back([&, rank] {
      Worker w(group, rank);
      try {
        body(w);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(em);
          if (!first) first = std::current_exception();
        }
        group.abandon("a worker failed; group shut down");
      }
      group.depart();
    });
  }
  for (auto& t : threads) t.join();
  if (first) std::rethrow_exception(first);
}

ExchangePlan build_exchange_plan(const Geometry& geo) {
  ExchangePlan plan;
  plan.geo = &geo;
  plan.total_boundary = 0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int sign = 0; sign < 2; ++sign) {
      const int f = mu * 2 + sign;
      auto& face = plan.faces[f];
      face.mu = mu;
      face.sign = sign;
      face.halo_offset = geo.halo_offset[f];
      face.count = geo.face_count[f];

      Coord4 nc = geo.coords;
      nc[mu] = (nc[mu] + (sign ? 1 : -1) + geo.grid[mu]) % geo.grid[mu];
      face.partner = proc_rank(nc, geo.grid);

      // boundary sites on this side, enumerated in face-slab order
      face.boundary.resize(face.count);
      const int edge = sign ? geo.local[mu] - 1 : 0;
      for (int s = 0; s < geo.interior; ++s) {
        Coord4 lc = geo.site_coords(s);
        if (lc[mu] != edge) continue;
        face.boundary[geo.face_position(mu, lc)] = s;
      }
      plan.total_boundary += face.count;
    }
  }
  return plan;
}

namespace {

template <class T>
void exchange_records(Worker& w, const ExchangePlan& plan, T* data, size_t vals,
                      std::vector<T>& scratch) {
  scratch.resize(plan.total_boundary * vals);

  // pack boundary slabs and post them
  size_t off = 0;
  for (int f = 0; f < 8; ++f) {
    const auto& face = plan.faces[f];
    T* buf = scratch.data() + off;
    for (int i = 0; i < face.count; ++i)
      std::memcpy(buf + static_cast<size_t>(i) * vals,
                  data + static_cast<size_t>(face.boundary[i]) * vals, vals * sizeof(T));
    w.post_message(f, buf, static_cast<size_t>(face.count) * vals, sizeof(T));
    off += static_cast<size_t>(face.count) * vals;
  }
  w.commit_messages();

  // the (mu,+) halo is the +mu partner's (mu,-) boundary, and vice versa
  for (int f = 0; f < 8; ++f) {
    const auto& face = plan.faces[f];
    const auto slot = w.peek_message(face.partner, f ^ 1);
    if (slot.count != static_cast<size_t>(face.count) * vals || slot.elem != sizeof(T))
      throw ContractViolation("halo exchange: posted message does not match halo slab");
    std::memcpy(data + static_cast<size_t>(face.halo_offset) * vals, slot.ptr,
                slot.count * sizeof(T));
  }
  w.finish_exchange();
}

}  // namespace

void halo_exchange(Worker& w, const ExchangePlan& plan, SpinorField& field) {
  if (plan.geo != field.geo)
    throw ContractViolation("halo exchange: plan built for a different geometry");
  exchange_records(w, plan, field.data.data(), static_cast<size_t>(field.vals_per_site()),
                   field.comm);
}

void halo_exchange(Worker& w, const ExchangePlan& plan, GaugeField& field) {
  if (plan.geo != field.geo)
    throw ContractViolation("halo exchange: plan built for a different geometry");
  if (field.real_links)
    exchange_records(w, plan, field.rdata.data(), field.vals_per_site(), field.rcomm);
  else
    exchange_records(w, plan, field.cdata.data(), field.vals_per_site(), field.ccomm);
}

GaugeField init_gauge_random(Worker& w, const ExchangePlan& plan, const Geometry& geo,
                             int group_rank, Representation rep, uint64_t seed) {
  GaugeField g = make_gauge(geo, group_rank, rep);
  randomize_gauge_interior(g, seed);
  halo_exchange(w, plan, g);  // links are immutable afterwards, one exchange suffices
  return g;
}

}  // namespace latbench
