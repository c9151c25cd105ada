#pragma once

// Counted oracle callables. Reductions receive these so that their oracle
// usage is observable; copies share one counter.

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>

#include "fusion_exp/field.hpp"
#include "fusion_exp/fusion.hpp"
#include "fusion_exp/group.hpp"

namespace fexp {

template <class Signature>
class Oracle;

template <class R, class... Args>
class Oracle<R(Args...)> {
 public:
  using Fn = std::function<R(Args...)>;

  Oracle() = default;
  explicit Oracle(Fn fn)
      : fn_(std::move(fn)),
        calls_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

  R operator()(Args... args) const {
    calls_->fetch_add(1, std::memory_order_relaxed);
    return fn_(std::forward<Args>(args)...);
  }

  std::uint64_t calls() const {
    return calls_ ? calls_->load(std::memory_order_relaxed) : 0;
  }
  void reset_calls() const {
    if (calls_) calls_->store(0, std::memory_order_relaxed);
  }
  explicit operator bool() const { return static_cast<bool>(fn_); }

 private:
  Fn fn_;
  std::shared_ptr<std::atomic<std::uint64_t>> calls_;
};

/// (g, y) -> x with g^x = y.
using DlogOracle = Oracle<Int(const GroupElement&, const GroupElement&)>;
/// (base, target) -> x with base^x = target.
using FdlogOracle = Oracle<FieldElement(const FusionBase&, const FusionBase&)>;
/// (g, g^a, g^b) -> g^{ab}.
using DhOracle = Oracle<GroupElement(const GroupElement&, const GroupElement&,
                                     const GroupElement&)>;
using FdhOracle =
    Oracle<FusionBase(const FusionBase&, const FusionBase&, const FusionBase&)>;
/// (g, y1, y2, y3) -> whether dlog(y3) = dlog(y1) * dlog(y2).
using DdhOracle = Oracle<bool(const GroupElement&, const GroupElement&,
                              const GroupElement&, const GroupElement&)>;
using FddhOracle = Oracle<bool(const FusionBase&, const FusionBase&,
                               const FusionBase&, const FusionBase&)>;

}  // namespace fexp
