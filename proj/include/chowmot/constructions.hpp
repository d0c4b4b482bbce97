#pragma once

#include <utility>
#include <vector>

#include "char_classes.hpp"
#include "correspondence.hpp"
#include "errors.hpp"
#include "k_shadow.hpp"
#include "random.hpp"

namespace chowmot {

/// e_i = h_1^i h_2^{n-i} on P^n x P^n. These are orthogonal idempotents summing to Delta.
inline GradedCorrespondence diagonal_summand(int n, int i) {
  const Variety p = Variety::projective_space(n);
  return {p, p, Cycle::monomial(product(p, p), {i, n - i})};
}

/// sum_i a_i e_i on P^n x P^n.
inline GradedCorrespondence diagonal_combination(const std::vector<Rational>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  const Variety p = Variety::projective_space(n);
  GradedCorrespondence out = GradedCorrespondence::zero(p, p);
  for (int i = 0; i <= n; ++i) out += a[static_cast<std::size_t>(i)] * diagonal_summand(n, i);
  return out;
}

/// g o f in the usual (right-to-left) notation.
inline GradedCorrespondence after(const GradedCorrespondence& g, const GradedCorrespondence& f) {
  return compose_graded(f, g);
}

/// Inverse of u + n where u_inv inverts u and n has all its nonzero degrees of
/// one sign: (u + n)^{-1} = sum_k (-u^{-1} n)^k u^{-1}. Terminates because
/// u^{-1} n strictly shifts degree.
inline GradedCorrespondence perturbation_inverse(const GradedCorrespondence& u_inv, const GradedCorrespondence& n) {
  const GradedCorrespondence step = Rational(-1) * after(u_inv, n);
  GradedCorrespondence term = u_inv;
  GradedCorrespondence sum = u_inv;
  const int limit = 2 * u_inv.source().dim() + 2;
  for (int k = 0; k < limit; ++k) {
    term = after(step, term);
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw precondition_error("perturbation_inverse: perturbation is not nilpotent");
}

/// Invertible degree-0 part plus a homogeneous-sign perturbation on P^n,
/// together with its exact inverse.
struct PerturbedPair {
  GradedCorrespondence forward;
  GradedCorrespondence backward;
};

/// sign > 0: perturbation of positive degrees only; sign < 0: negative degrees only.
inline PerturbedPair perturbed_pair(rnd::Engine& g, int n, int sign) {
  const Variety p = Variety::projective_space(n);
  const Variety pp = product(p, p);
  std::vector<Rational> a;
  std::vector<Rational> a_inv;
  for (int i = 0; i <= n; ++i) {
    a.push_back(rnd::nonzero_rational(g, 3));
    a_inv.push_back(Rational(1) / a.back());
  }
  Cycle pert = Cycle::zero(pp);
  while (pert.is_zero()) {
    const Cycle c = rnd::cycle(g, pp, 3, 0.7);
    for (int k = 0; k <= pp.dim(); ++k) {
      if ((k - n) * sign > 0) pert += graded_component(c, k);
    }
  }
  const GradedCorrespondence u = diagonal_combination(a);
  const GradedCorrespondence np(p, p, pert);
  return {u + np, perturbation_inverse(diagonal_combination(a_inv), np)};
}

/// ch(O_Delta) . ch(O(d_1, ..., d_k) pulled back along the first projection).
inline KKernel twisted_identity_kernel(const Variety& x, const std::vector<long>& degrees) {
  const KKernel id = identity_kernel(x);
  const Cycle twist = pullback(FactorSelection::first_of(x, x), chern_character(line_bundle(x, degrees)));
  return {x, x, KClass(intersect(id.ch(), twist))};
}

/// The kernel whose image under mu inverts mu(e), for mu(e) = Delta + (positive-degree part).
inline KKernel transported_inverse(const KKernel& e) {
  const GradedCorrespondence m = mu(e);
  const GradedCorrespondence id = diagonal_correspondence(e.source());
  if (m.degree_part(0) != id) {
    throw precondition_error("transported_inverse: degree-0 part of mu(E) is not the identity");
  }
  return kernel_from_correspondence(perturbation_inverse(id, m - id));
}

/// s = 1 + h_1 h_2 on P1 x P1: an involution mixing degrees -1 and +1.
inline GradedCorrespondence tate_shift_involution() {
  const Variety p1 = Variety::projective_space(1);
  const Variety pp = product(p1, p1);
  return {p1, p1, Cycle::one(pp) + Cycle::point_class(pp)};
}

/// A pair (E', F') with mu(E') = mu(E) o s and mu(F') = s o mu(F): still
/// mutually inverse, but with a component of negative degree.
inline std::pair<KKernel, KKernel> tate_shifted_pair(const KKernel& e, const KKernel& f) {
  const GradedCorrespondence s = tate_shift_involution();
  return {kernel_from_correspondence(after(mu(e), s)), kernel_from_correspondence(after(s, mu(f)))};
}

}  // namespace chowmot
