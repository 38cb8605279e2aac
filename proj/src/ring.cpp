#include "tl/ring.hpp"

namespace tl {

// Power tables are built once and never resized afterwards, so the
// returned references stay valid for concurrent readers. 64 powers cover
// every loop count reachable at the object sizes this library handles.
namespace {
constexpr int kMaxLoopPower = 64;
}

const Scalar& GenericRing::loop_pow(int r) const {
  if (r < 0 || r >= kMaxLoopPower)
    throw Error(ErrorCode::BadParameter, "loop power out of range");
  static const std::vector<Scalar>& table = *[] {
    auto* t = new std::vector<Scalar>;
    t->reserve(kMaxLoopPower);
    t->push_back(Scalar::one());
    for (int i = 1; i < kMaxLoopPower; ++i) t->push_back(t->back() * Scalar::d());
    return t;
  }();
  return table[static_cast<size_t>(r)];
}

const CycloScalar& CycloRing::loop_pow(int r) const {
  if (r < 0 || r >= kMaxLoopPower)
    throw Error(ErrorCode::BadParameter, "loop power out of range");
  static std::mutex mu;
  static std::map<int, std::vector<CycloScalar>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(ell);
  if (it == tables.end()) {
    std::vector<CycloScalar> table;
    table.reserve(kMaxLoopPower);
    table.push_back(CycloScalar::one(ell));
    for (int i = 1; i < kMaxLoopPower; ++i)
      table.push_back(table.back() * CycloScalar::d_value(ell));
    it = tables.emplace(ell, std::move(table)).first;
  }
  return it->second[static_cast<size_t>(r)];
}

}  // namespace tl
