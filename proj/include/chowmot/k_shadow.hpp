#pragma once

#include <vector>

#include "char_classes.hpp"
#include "correspondence.hpp"
#include "cycle.hpp"
#include "series.hpp"

namespace chowmot {

/// A class in K_0(X) (x) Q, stored through its Chern character.
/// ch is an isomorphism onto CH*(X, Q), so every cycle is a legal class.
class KClass {
 public:
  KClass() = default;
  explicit KClass(Cycle ch) : ch_(std::move(ch)) {}

  static KClass of_bundle(const BundleClass& e) { return KClass(chern_character(e)); }
  static KClass zero(const Variety& v) { return KClass(Cycle::zero(v)); }

  [[nodiscard]] const Variety& variety() const { return ch_.variety(); }
  [[nodiscard]] const Cycle& ch() const { return ch_; }
  [[nodiscard]] Rational rank() const { return ch_.constant_term(); }

  friend KClass operator+(const KClass& a, const KClass& b) { return KClass(a.ch_ + b.ch_); }
  friend KClass operator-(const KClass& a, const KClass& b) { return KClass(a.ch_ - b.ch_); }
  friend KClass operator*(const Rational& s, const KClass& a) { return KClass(s * a.ch_); }
  /// Tensor product: ch is a ring homomorphism.
  friend KClass operator*(const KClass& a, const KClass& b) { return KClass(intersect(a.ch_, b.ch_)); }
  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  Cycle ch_;
};

/// A K-correspondence X -> Y: a class on X x Y.
class KKernel {
 public:
  KKernel() = default;
  KKernel(Variety source, Variety target, KClass kclass)
      : source_(std::move(source)), target_(std::move(target)), kclass_(std::move(kclass)) {
    if (kclass_.variety() != product(source_, target_)) {
      throw domain_error("kernel class lives on " + kclass_.variety().name() + ", expected " +
                         product(source_, target_).name());
    }
  }

  static KKernel zero(const Variety& x, const Variety& y) {
    return {x, y, KClass::zero(product(x, y))};
  }

  [[nodiscard]] const Variety& source() const { return source_; }
  [[nodiscard]] const Variety& target() const { return target_; }
  [[nodiscard]] const KClass& kclass() const { return kclass_; }
  [[nodiscard]] const Cycle& ch() const { return kclass_.ch(); }

  friend bool operator==(const KKernel&, const KKernel&) = default;

 private:
  Variety source_;
  Variety target_;
  KClass kclass_;
};

/// chi(X, E) = deg(ch(E) . td_X) by Hirzebruch-Riemann-Roch.
inline Rational euler_characteristic(const KClass& e) {
  return degree(intersect(e.ch(), todd_of_variety(e.variety())));
}

/// E -> ch(E) . sqrt(td_{X x Y}).
inline GradedCorrespondence mu(const KKernel& e) {
  const Variety xy = product(e.source(), e.target());
  return {e.source(), e.target(), intersect(e.ch(), sqrt_todd(xy))};
}

/// Inverse of mu: the kernel whose image under mu is c.
inline KKernel kernel_from_correspondence(const GradedCorrespondence& c) {
  const Variety xy = product(c.source(), c.target());
  return {c.source(), c.target(), KClass(intersect(c.cycle(), series_inverse(sqrt_todd(xy))))};
}

/// F o E, transported along mu from graded correspondences.
inline KKernel k_compose(const KKernel& e, const KKernel& f) {
  if (e.target() != f.source()) {
    throw domain_error("middle variety mismatch: " + e.target().name() + " vs " + f.source().name());
  }
  return kernel_from_correspondence(compose_graded(mu(e), mu(f)));
}

/// [O_Delta]: ch = Delta_*(td_X) . td(T_{X x X})^{-1} by GRR for the diagonal.
inline KKernel identity_kernel(const Variety& x) {
  const Cycle pushed = diagonal_pushforward(x, todd_of_variety(x));
  const Cycle ch = intersect(pushed, series_inverse(todd_of_variety(product(x, x))));
  return {x, x, KClass(ch)};
}

/// Smallest codimension with a nonzero component; `no_support` for zero.
inline int support_codim_floor(const Cycle& c) { return min_codimension(c); }

/// Projection onto the dropped factors of `sel` (source -> fibre).
inline FactorSelection fibre_projection(const FactorSelection& sel) {
  std::vector<std::size_t> rest;
  std::size_t j = 0;
  for (std::size_t i = 0; i < sel.source().num_factors(); ++i) {
    if (j < sel.selected().size() && sel.selected()[j] == i) {
      ++j;
    } else {
      rest.push_back(i);
    }
  }
  return {sel.source(), std::move(rest)};
}

/// ch(p_! E) = p_*(ch(E) . td(T_p)) with T_p the pulled-back fibre tangent class.
inline KClass projection_pushforward(const FactorSelection& sel, const KClass& e) {
  if (e.variety() != sel.source()) throw domain_error("projection_pushforward: class not on projection source");
  const FactorSelection to_fibre = fibre_projection(sel);
  const Cycle td_rel = pullback(to_fibre, todd_of_variety(to_fibre.target()));
  return KClass(pushforward(sel, intersect(e.ch(), td_rel)));
}

}  // namespace chowmot
