#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "correspondence.hpp"
#include "k_shadow.hpp"
#include "motive.hpp"

namespace chowmot {

/// A morphism M -> N in CHM / T: components f^i : M -> N(-i) with finitely
/// many nonzero.
///
/// Component i of a morphism (X, r, alpha) -> (Y, s, beta) is a correspondence
/// of pure degree (s - r) + i, so for motives of varieties the index equals
/// the correspondence degree and "no negative components" means "no
/// components of degree < 0".
class OrbitMorphism {
 public:
  using ComponentMap = std::map<int, GradedCorrespondence>;

  OrbitMorphism(Motive source, Motive target, ComponentMap components)
      : source_(std::move(source)), target_(std::move(target)) {
    for (auto& [i, c] : components) {
      if (c.source() != source_.variety() || c.target() != target_.variety()) {
        throw domain_error("orbit component " + std::to_string(i) + " does not run " + source_.variety().name() +
                           " -> " + target_.variety().name());
      }
      if (c.is_zero()) continue;
      // Validates purity and the sandwich condition.
      MotiveMorphism(source_, tate_twist(target_, -i), c);
      components_.emplace(i, std::move(c));
    }
  }

  /// Splits a graded correspondence into its orbit components.
  static OrbitMorphism from_graded(const Motive& m, const Motive& n, const GradedCorrespondence& c) {
    ComponentMap comps;
    const int base = n.twist() - m.twist();
    for (int d : c.degrees()) comps.emplace(d - base, c.degree_part(d));
    return {m, n, std::move(comps)};
  }

  /// The image of an ordinary morphism under the projection functor.
  static OrbitMorphism project(const MotiveMorphism& f) {
    return {f.source(), f.target(), {{0, f.corr()}}};
  }

  static OrbitMorphism identity(const Motive& m) { return project(MotiveMorphism::identity(m)); }

  [[nodiscard]] const Motive& source() const { return source_; }
  [[nodiscard]] const Motive& target() const { return target_; }
  [[nodiscard]] const ComponentMap& components() const { return components_; }

  [[nodiscard]] GradedCorrespondence component(int i) const {
    auto it = components_.find(i);
    return it == components_.end() ? GradedCorrespondence::zero(source_.variety(), target_.variety()) : it->second;
  }

  [[nodiscard]] bool has_negative_components() const {
    return !components_.empty() && components_.begin()->first < 0;
  }

  /// Sum of all components as one graded correspondence.
  [[nodiscard]] GradedCorrespondence to_graded() const {
    GradedCorrespondence out = GradedCorrespondence::zero(source_.variety(), target_.variety());
    for (const auto& [i, c] : components_) out += c;
    return out;
  }

  friend bool operator==(const OrbitMorphism&, const OrbitMorphism&) = default;

 private:
  Motive source_;
  Motive target_;
  ComponentMap components_;
};

/// (g o f)^k = sum_{i+j=k} T^i(g^j) o f^i. T^i leaves the underlying
/// correspondence unchanged, so each term is a plain graded composition.
inline OrbitMorphism orbit_compose(const OrbitMorphism& f, const OrbitMorphism& g) {
  if (f.target() != g.source()) {
    throw domain_error("object mismatch: " + f.target().name() + " vs " + g.source().name());
  }
  OrbitMorphism::ComponentMap out;
  for (const auto& [i, fi] : f.components()) {
    for (const auto& [j, gj] : g.components()) {
      GradedCorrespondence term = compose_graded(fi, gj);
      auto [it, inserted] = out.try_emplace(i + j, term);
      if (!inserted) it->second += term;
    }
  }
  return {f.source(), g.target(), std::move(out)};
}

/// If f, g are mutually inverse in CHM / T and have no negative components,
/// returns (f^0, g^0), which are mutually inverse in CHM.
inline std::pair<MotiveMorphism, MotiveMorphism> degree_zero_rigidify(const OrbitMorphism& f,
                                                                        const OrbitMorphism& g) {
  if (f.target() != g.source() || g.target() != f.source()) {
    throw domain_error("degree_zero_rigidify: f and g do not run in opposite directions");
  }
  if (f.has_negative_components() || g.has_negative_components()) {
    throw support_condition_error("degree_zero_rigidify: a component of negative index is nonzero");
  }
  if (orbit_compose(f, g) != OrbitMorphism::identity(f.source()) ||
      orbit_compose(g, f) != OrbitMorphism::identity(f.target())) {
    throw precondition_error("degree_zero_rigidify: f and g are not mutually inverse in the orbit category");
  }
  MotiveMorphism f0(f.source(), f.target(), f.component(0));
  MotiveMorphism g0(g.source(), g.target(), g.component(0));
  if (!are_mutually_inverse(f0, g0)) {
    throw precondition_error("degree_zero_rigidify: degree-0 parts are not mutually inverse");
  }
  return {std::move(f0), std::move(g0)};
}

enum class OrlovVerdict {
  not_equivalent,     ///< mu(E), mu(F) are not mutually inverse
  tate_twist_only,    ///< isomorphic in CHM / T only
  exact_isomorphism,  ///< isomorphic in CHM
};

inline const char* to_string(OrlovVerdict v) {
  switch (v) {
    case OrlovVerdict::not_equivalent: return "not-equivalent";
    case OrlovVerdict::tate_twist_only: return "tate-twist-only";
    case OrlovVerdict::exact_isomorphism: return "exact-isomorphism";
  }
  return "?";
}

struct OrlovResult {
  OrlovVerdict verdict = OrlovVerdict::not_equivalent;
  int dimension = 0;
  GradedCorrespondence forward;   ///< mu(E)
  GradedCorrespondence backward;  ///< mu(F)
  bool mutually_inverse = false;
  int forward_support_floor = no_support;
  int backward_support_floor = no_support;
  std::optional<MotiveMorphism> forward_degree_zero;
  std::optional<MotiveMorphism> backward_degree_zero;
};

/// Kernels E: X -> Y and F: Y -> X with dim X = dim Y = n. Mutually inverse
/// images under mu give M(X) = M(Y) modulo Tate twists; if in addition both
/// have no components of codimension < n, the degree-0 parts are an
/// isomorphism of Chow motives.
inline OrlovResult orlov_pipeline(const KKernel& e, const KKernel& f) {
  if (e.target() != f.source() || f.target() != e.source()) {
    throw domain_error("orlov: kernels must run X -> Y and Y -> X");
  }
  const int n = e.source().dim();
  if (e.target().dim() != n) {
    throw precondition_error("orlov: dim " + e.source().name() + " != dim " + e.target().name());
  }
  OrlovResult r;
  r.dimension = n;
  r.forward = mu(e);
  r.backward = mu(f);
  r.mutually_inverse = compose_graded(r.forward, r.backward) == diagonal_correspondence(e.source()) &&
                       compose_graded(r.backward, r.forward) == diagonal_correspondence(e.target());
  r.forward_support_floor = support_codim_floor(r.forward.cycle());
  r.backward_support_floor = support_codim_floor(r.backward.cycle());
  if (!r.mutually_inverse) return r;

  r.verdict = OrlovVerdict::tate_twist_only;
  if (r.forward_support_floor < n || r.backward_support_floor < n) return r;

  const Motive mx = motive_of(e.source());
  const Motive my = motive_of(e.target());
  auto [f0, g0] = degree_zero_rigidify(OrbitMorphism::from_graded(mx, my, r.forward),
                                       OrbitMorphism::from_graded(my, mx, r.backward));
  r.forward_degree_zero = std::move(f0);
  r.backward_degree_zero = std::move(g0);
  r.verdict = OrlovVerdict::exact_isomorphism;
  return r;
}

/// Hom(NM(X), NM(Y)) = K_0(X x Y) (x) Q: the kernel's class itself.
inline KClass nc_hom(const KKernel& e) { return e.kclass(); }

/// Composition of noncommutative-motive morphisms.
inline KKernel nc_compose(const KKernel& e, const KKernel& f) { return k_compose(e, f); }

enum class CompatPath {
  faithful,
  omit_sqrt_todd,  ///< negative control: drops sqrt(td) on the K-theory side
};

/// Compares the two routes from a kernel E to CH*(X x Y):
///   PfCorr -> CHM/T   : mu(E) read back through its orbit components;
///   PfCorr -> NM -> KCorr -> GrCorr : ch(E) . (sqrt td_X x sqrt td_Y).
inline bool compatibility_check(const KKernel& e, CompatPath path = CompatPath::faithful) {
  const Motive mx = motive_of(e.source());
  const Motive my = motive_of(e.target());
  const Cycle via_motives = OrbitMorphism::from_graded(mx, my, mu(e)).to_graded().cycle();

  const KClass k = nc_hom(e);
  Cycle via_k = k.ch();
  if (path == CompatPath::faithful) {
    via_k = intersect(via_k, cartesian(sqrt_todd(e.source()), sqrt_todd(e.target())));
  }
  return via_motives == via_k;
}

}  // namespace chowmot
