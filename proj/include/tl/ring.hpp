#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "tl/cyclo.hpp"
#include "tl/scalar.hpp"

namespace tl {

// Coefficient ring tags. A morphism over GenericRing has Q(t)
// coefficients; over CycloRing(ell) its coefficients live in the
// cyclotomic field at the primitive 2*ell-th root of unity. Mixing the
// two is a type error; mixing different ell values is a runtime
// RingMismatch.

struct GenericRing {
  using Value = Scalar;

  Value zero() const { return Scalar::zero(); }
  Value one() const { return Scalar::one(); }
  Value from_int(long v) const { return Scalar(v); }
  Value loop() const { return Scalar::d(); }
  const Value& loop_pow(int r) const;

  bool operator==(const GenericRing&) const { return true; }
  bool operator!=(const GenericRing&) const { return false; }
};

struct CycloRing {
  int ell;

  explicit CycloRing(int ell_value) : ell(ell_value) {
    CycloContext::get(ell);  // validates ell >= 3
  }

  using Value = CycloScalar;

  Value zero() const { return CycloScalar::zero(ell); }
  Value one() const { return CycloScalar::one(ell); }
  Value from_int(long v) const { return CycloScalar::from_rational(ell, Rational(v)); }
  Value loop() const { return CycloScalar::d_value(ell); }
  const Value& loop_pow(int r) const;

  bool operator==(const CycloRing& rhs) const { return ell == rhs.ell; }
  bool operator!=(const CycloRing& rhs) const { return ell != rhs.ell; }
};

}  // namespace tl
