#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "tl/diagram.hpp"
#include "tl/ring.hpp"

namespace tl {

// A linear combination of planar diagrams in Hom(dom, cod) over a
// coefficient ring. Terms are keyed by the diagram's rank in the
// canonical enumeration of the Hom space, so structural equality is
// linear-algebra equality and iteration follows enumeration order.
template <class Ring>
class Morphism {
 public:
  using Value = typename Ring::Value;
  using TermMap = std::map<uint32_t, Value>;

  Morphism(Ring ring, int dom, int cod)
      : ring_(std::move(ring)), dom_(dom), cod_(cod) {
    if (dom < 0 || cod < 0)
      throw Error(ErrorCode::BadParameter, "negative object label");
  }

  static Morphism zero(Ring ring, int dom, int cod) {
    return Morphism(std::move(ring), dom, cod);
  }

  static Morphism identity(Ring ring, int n) {
    Morphism m(ring, n, n);
    m.add_term(identity_diagram(n), ring.one());
    return m;
  }

  static Morphism generator(Ring ring, int i, int n) {
    Morphism m(ring, n, n);
    m.add_term(generator_diagram(i, n), ring.one());
    return m;
  }

  static Morphism cap(Ring ring) {
    Morphism m(ring, 0, 2);
    m.add_term(cap_diagram(), ring.one());
    return m;
  }

  static Morphism cup(Ring ring) {
    Morphism m(ring, 2, 0);
    m.add_term(cup_diagram(), ring.one());
    return m;
  }

  static Morphism from_diagram(Ring ring, const Diagram& d) {
    Morphism m(ring, d.top, d.bot);
    m.add_term(d, ring.one());
    return m;
  }

  // A scalar c viewed as an element of End(0).
  static Morphism from_scalar(Ring ring, const Value& c) {
    Morphism m(ring, 0, 0);
    m.add_term(identity_diagram(0), c);
    return m;
  }

  const Ring& ring() const { return ring_; }
  int dom() const { return dom_; }
  int cod() const { return cod_; }
  const TermMap& terms() const { return terms_; }
  const HomBasis& basis() const { return hom_basis(dom_, cod_); }

  bool is_zero() const { return terms_.empty(); }

  void add_term(uint32_t rank, const Value& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(rank, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_term(const Diagram& d, const Value& coeff) {
    if (d.top != dom_ || d.bot != cod_)
      throw Error(ErrorCode::DomainMismatch, "diagram does not live in this Hom space");
    add_term(basis().rank_of(d), coeff);
  }

  Value coeff(uint32_t rank) const {
    auto it = terms_.find(rank);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  Value coeff(const Diagram& d) const { return coeff(basis().rank_of(d)); }

  Morphism operator-() const {
    Morphism m(ring_, dom_, cod_);
    for (const auto& [r, c] : terms_) m.terms_.emplace(r, -c);
    return m;
  }

  Morphism operator+(const Morphism& rhs) const {
    check_same_shape(rhs);
    Morphism m = *this;
    for (const auto& [r, c] : rhs.terms_) m.add_term(r, c);
    return m;
  }

  Morphism operator-(const Morphism& rhs) const {
    check_same_shape(rhs);
    Morphism m = *this;
    for (const auto& [r, c] : rhs.terms_) m.add_term(r, -c);
    return m;
  }

  Morphism scaled(const Value& s) const {
    Morphism m(ring_, dom_, cod_);
    if (s.is_zero()) return m;
    for (const auto& [r, c] : terms_) {
      Value prod = c * s;
      if (!prod.is_zero()) m.terms_.emplace(r, std::move(prod));
    }
    return m;
  }

  bool operator==(const Morphism& rhs) const {
    return ring_ == rhs.ring_ && dom_ == rhs.dom_ && cod_ == rhs.cod_ &&
           terms_ == rhs.terms_;
  }
  bool operator!=(const Morphism& rhs) const { return !(*this == rhs); }

  // Dense coefficient vector in enumeration order.
  std::vector<Value> dense() const {
    std::vector<Value> v(basis().size(), ring_.zero());
    for (const auto& [r, c] : terms_) v[r] = c;
    return v;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, c] : terms_) {
      if (!first) os << " + ";
      os << "(" << c.str() << ")*D" << r;
      first = false;
    }
    os << " : " << dom_ << "->" << cod_;
    return os.str();
  }

  void check_ring(const Morphism& rhs) const {
    if (ring_ != rhs.ring_)
      throw Error(ErrorCode::RingMismatch, "morphisms over different rings");
  }

 private:
  void check_same_shape(const Morphism& rhs) const {
    check_ring(rhs);
    if (dom_ != rhs.dom_ || cod_ != rhs.cod_)
      throw Error(ErrorCode::DomainMismatch, "morphisms in different Hom spaces");
  }

  Ring ring_;
  int dom_;
  int cod_;
  TermMap terms_;
};

// b after a; bilinear extension of diagram stitching, each stitched pair
// weighted by d^(number of removed loops).
template <class Ring>
Morphism<Ring> compose(const Morphism<Ring>& b, const Morphism<Ring>& a) {
  b.check_ring(a);
  if (a.cod() != b.dom())
    throw Error(ErrorCode::DomainMismatch,
                "compose: codomain " + std::to_string(a.cod()) +
                    " does not match domain " + std::to_string(b.dom()));
  Morphism<Ring> out(a.ring(), a.dom(), b.cod());
  const HomBasis& ba = a.basis();
  const HomBasis& bb = b.basis();
  for (const auto& [rb, cb] : b.terms()) {
    const Diagram& db = bb.diagram(rb);
    for (const auto& [ra, ca] : a.terms()) {
      auto [d, loops] = compose_diagrams(db, ba.diagram(ra));
      out.add_term(d, cb * ca * a.ring().loop_pow(loops));
    }
  }
  return out;
}

// Horizontal juxtaposition, bilinear.
template <class Ring>
Morphism<Ring> tensor(const Morphism<Ring>& a, const Morphism<Ring>& b) {
  a.check_ring(b);
  Morphism<Ring> out(a.ring(), a.dom() + b.dom(), a.cod() + b.cod());
  const HomBasis& ba = a.basis();
  const HomBasis& bb = b.basis();
  for (const auto& [ra, ca] : a.terms())
    for (const auto& [rb, cb] : b.terms())
      out.add_term(tensor_diagrams(ba.diagram(ra), bb.diagram(rb)), ca * cb);
  return out;
}

template <class Ring>
Morphism<Ring> transpose(const Morphism<Ring>& a) {
  Morphism<Ring> out(a.ring(), a.cod(), a.dom());
  const HomBasis& ba = a.basis();
  for (const auto& [r, c] : a.terms())
    out.add_term(transpose_diagram(ba.diagram(r)), c);
  return out;
}

// Markov trace: close the endomorphism around the side; a diagram
// contributes d^(number of closed components).
template <class Ring>
typename Ring::Value trace(const Morphism<Ring>& a) {
  if (a.dom() != a.cod())
    throw Error(ErrorCode::DomainMismatch, "trace needs an endomorphism");
  typename Ring::Value total = a.ring().zero();
  const HomBasis& basis = a.basis();
  for (const auto& [r, c] : a.terms())
    total += c * a.ring().loop_pow(closure_loops(basis.diagram(r)));
  return total;
}

// Conditional expectation End(n+1) -> End(n): close only the last
// strand, as (1_n ox cup) o (a ox 1) o (1_n ox cap).
template <class Ring>
Morphism<Ring> cond_expect(const Morphism<Ring>& a) {
  if (a.dom() != a.cod())
    throw Error(ErrorCode::DomainMismatch, "conditional expectation needs an endomorphism");
  if (a.dom() < 1)
    throw Error(ErrorCode::DomainMismatch, "conditional expectation needs at least one strand");
  int n = a.dom() - 1;
  const Ring& ring = a.ring();
  Morphism<Ring> idn = Morphism<Ring>::identity(ring, n);
  Morphism<Ring> lift = tensor(a, Morphism<Ring>::identity(ring, 1));
  Morphism<Ring> close_top = tensor(idn, Morphism<Ring>::cup(ring));
  Morphism<Ring> open_bottom = tensor(idn, Morphism<Ring>::cap(ring));
  return compose(close_top, compose(lift, open_bottom));
}

// Iterated single-strand closure End(k) -> End(target), target <= k.
template <class Ring>
Morphism<Ring> cond_expect_chain(const Morphism<Ring>& a, int target) {
  if (a.dom() != a.cod())
    throw Error(ErrorCode::DomainMismatch, "conditional expectation needs an endomorphism");
  if (target > a.dom() || target < 0)
    throw Error(ErrorCode::DomainMismatch, "chain target out of range");
  Morphism<Ring> cur = a;
  for (int k = a.dom(); k > target; --k) cur = cond_expect(cur);
  return cur;
}

// Embedding of a rectangular Hom space into the endomorphisms of its
// larger object: pad with cups (when cod > dom) or caps (when dom >
// cod). pad_retract is the exact left inverse, including the d^-k
// factor.
template <class Ring>
Morphism<Ring> pad_embed(const Morphism<Ring>& a) {
  int m = a.dom(), n = a.cod();
  if ((m + n) % 2 != 0)
    throw Error(ErrorCode::ParityError, "padding needs an even-parity Hom space");
  if (m == n) return a;
  int k = (m > n ? m - n : n - m) / 2;
  const Ring& ring = a.ring();
  Morphism<Ring> pad = Morphism<Ring>::identity(ring, 0);
  Morphism<Ring> unit = (n > m) ? Morphism<Ring>::cup(ring) : Morphism<Ring>::cap(ring);
  for (int i = 0; i < k; ++i) pad = tensor(pad, unit);
  return tensor(a, pad);
}

template <class Ring>
Morphism<Ring> pad_retract(const Morphism<Ring>& x, int dom, int cod) {
  if ((dom + cod) % 2 != 0)
    throw Error(ErrorCode::ParityError, "padding needs an even-parity Hom space");
  int big = dom > cod ? dom : cod;
  if (x.dom() != big || x.cod() != big)
    throw Error(ErrorCode::DomainMismatch,
                "pad_retract expects an endomorphism of max(dom, cod)");
  if (dom == cod) return x;
  int k = (big - (dom < cod ? dom : cod)) / 2;
  const Ring& ring = x.ring();
  typename Ring::Value scale = ring.one() / ring.loop_pow(k);

  if (cod > dom) {
    // recover a in Hom(dom, cod): a = d^-k * x o (1_dom ox cap^k)
    Morphism<Ring> caps = Morphism<Ring>::identity(ring, dom);
    for (int i = 0; i < k; ++i) caps = tensor(caps, Morphism<Ring>::cap(ring));
    return compose(x, caps).scaled(scale);
  }
  // recover b in Hom(dom, cod): b = d^-k * (1_cod ox cup^k) o x
  Morphism<Ring> cups = Morphism<Ring>::identity(ring, cod);
  for (int i = 0; i < k; ++i) cups = tensor(cups, Morphism<Ring>::cup(ring));
  return compose(cups, x).scaled(scale);
}

// Compression by a minimal idempotent: given f in End(n+m) with
// (p ox 1_m) f (p ox 1_m) = f and p a minimal idempotent in End(n), the
// iterated closure collapses to a multiple of p:
//   eps_{n,n+m}(f) = gamma p  with  gamma = Tr(f)/Tr(p).
// The equation is verified, not assumed; gamma is returned.
template <class Ring>
typename Ring::Value reduce_to_multiple(const Morphism<Ring>& f,
                                        const Morphism<Ring>& p) {
  f.check_ring(p);
  if (f.dom() != f.cod() || p.dom() != p.cod() || f.dom() < p.dom())
    throw Error(ErrorCode::DomainMismatch, "reduce_to_multiple shape mismatch");
  int n = p.dom();
  int m = f.dom() - n;
  const Ring& ring = f.ring();

  Morphism<Ring> padded = tensor(p, Morphism<Ring>::identity(ring, m));
  if (compose(padded, compose(f, padded)) != f)
    throw Error(ErrorCode::PreconditionFailed,
                "morphism is not compressed by the idempotent");

  if (f.is_zero()) return ring.zero();

  typename Ring::Value trp = trace(p);
  if (trp.is_zero())
    throw Error(ErrorCode::DivisionByZero, "idempotent has zero trace");
  typename Ring::Value gamma = trace(f) / trp;
  if (cond_expect_chain(f, n) != p.scaled(gamma))
    throw Error(ErrorCode::NotMinimal,
                "closure is not the expected multiple; idempotent is not minimal");
  return gamma;
}

using GenericMorphism = Morphism<GenericRing>;
using CycloMorphism = Morphism<CycloRing>;

}  // namespace tl
