#pragma once

#include <array>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <vector>

#include "latbench/fields.hpp"
#include "latbench/geometry.hpp"

namespace latbench {

// Message-passing layer between workers. The in-process implementation runs
// one worker per thread; all operations are collective and blocking, and data
// only crosses workers by value through posted message buffers, so a socket
// transport could replace this without touching callers.

class Worker;

/// Shared state for one group of workers. Single use: construct, run the
/// workers, discard.
class WorkerGroup {
public:
  explicit WorkerGroup(const Coord4& grid);

  int size() const { return size_; }
  const Coord4& grid() const { return grid_; }

  /// Rolling hash over the collective-call sequence; equal for equal
  /// sequences, used to diagnose mismatched collectives.
  uint64_t sequence_checksum() const;

private:
  friend class Worker;
  friend void run_workers(const Coord4& grid, const std::function<void(Worker&)>& body);

  enum class Op : uint8_t { Barrier, SumPost, SumDone, ExchangePost, ExchangeDone };

  struct MsgSlot {
    const void* ptr = nullptr;
    size_t count = 0;
    size_t elem = 0;
  };

  // Every collective entry checks that all workers are executing the same
  // operation; a mismatch or a dead worker poisons the group instead of
  // deadlocking it.
  void collective(Op op);
  void abandon(const std::string& why);
  void depart();

  Coord4 grid_;
  int size_ = 0;

  mutable std::mutex m_;
  std::condition_variable cv_;
  int arrived_ = 0;
  int active_ = 0;
  uint64_t phase_ = 0;
  Op phase_op_ = Op::Barrier;
  bool poisoned_ = false;
  std::string poison_msg_;
  uint64_t checksum_ = 0x6c617462656e6368ull;

  std::vector<Cplx> contrib_;    // one slot per rank for reductions
  std::vector<MsgSlot> slots_;   // [rank * 8 + face] posted messages
};

/// A worker's handle on its group: rank, grid coordinates, and the collective
/// operations.
class Worker {
public:
  Worker(WorkerGroup& group, int rank);

  int rank() const { return rank_; }
  int size() const { return group_.size(); }
  const Coord4& coords() const { return coords_; }
  WorkerGroup& group() { return group_; }

  /// Release no worker until all have entered.
  void barrier();

  /// Fixed-binary-tree sum over ranks; every worker returns the identical
  /// value, bit-for-bit reproducible for identical inputs.
  double global_sum(double local);
  Cplx global_sum(Cplx local);

  // Low-level message window used by halo_exchange.
  void post_message(int face, const void* ptr, size_t count, size_t elem);
  void commit_messages();                           // collective
  WorkerGroup::MsgSlot peek_message(int rank, int face) const;
  void finish_exchange();                           // collective

private:
  WorkerGroup& group_;
  int rank_;
  Coord4 coords_;
};

/// Spawn one thread per worker and run `body` on each. Exceptions from any
/// worker poison the group (so nobody blocks forever) and the first one is
/// rethrown here.
void run_workers(const Coord4& grid, const std::function<void(Worker&)>& body);

/// Precomputed exchange schedule for one worker's geometry: per face, the
/// boundary sites to pack, the halo slab to fill, and the partner rank.
struct ExchangePlan {
  struct Face {
    int mu = 0;
    int sign = 0;
    int partner = 0;  // rank owning the adjacent sub-lattice (may be self)
    int halo_offset = 0;
    int count = 0;
    std::vector<int32_t> boundary;  // interior sites, in face-slab order
  };

  const Geometry* geo = nullptr;
  std::array<Face, 8> faces;
  size_t total_boundary = 0;

  /// Bytes moved per spinor exchange (complex double records).
  size_t spinor_bytes(int dr) const { return total_boundary * 4 * dr * sizeof(Cplx); }
};

ExchangePlan build_exchange_plan(const Geometry& geo);

/// Fill every halo slot with the owning neighbor's current boundary values.
/// Interior storage is never written.
void halo_exchange(Worker& w, const ExchangePlan& plan, SpinorField& field);
void halo_exchange(Worker& w, const ExchangePlan& plan, GaugeField& field);

/// Keyed random gauge field with halos made consistent by one exchange.
GaugeField init_gauge_random(Worker& w, const ExchangePlan& plan, const Geometry& geo,
                             int group_rank, Representation rep, uint64_t seed);

}  // namespace latbench
