#pragma once

#include <string>
#include <vector>

#include "correspondence.hpp"
#include "cycle.hpp"
#include "errors.hpp"

namespace chowmot {

/// A Chow motive (X, r, alpha): alpha is a degree-0 idempotent correspondence on X.
///
/// Morphisms (X, r, alpha) -> (Y, s, beta) are correspondences of pure degree
/// s - r. The Tate twist (X, r, alpha)(i) is (X, r - i, alpha).
class Motive {
 public:
  Motive() : Motive(Variety::point(), 0, Cycle::one(Variety::point())) {}

  /// Validates degree-0 purity and alpha o alpha = alpha.
  Motive(Variety x, int twist, Cycle idempotent)
      : variety_(std::move(x)), twist_(twist), idempotent_(std::move(idempotent)) {
    const GradedCorrespondence a = projector();
    if (!a.is_pure_degree(0)) throw invalid_input("motive projector is not of pure degree 0");
    if (compose_graded(a, a) != a) throw invalid_input("motive projector is not idempotent");
  }

  [[nodiscard]] const Variety& variety() const { return variety_; }
  [[nodiscard]] int twist() const { return twist_; }
  [[nodiscard]] const Cycle& idempotent() const { return idempotent_; }
  [[nodiscard]] GradedCorrespondence projector() const { return {variety_, variety_, idempotent_}; }
  [[nodiscard]] bool is_zero() const { return idempotent_.is_zero(); }

  [[nodiscard]] std::string name() const {
    return "(" + variety_.name() + ", " + std::to_string(twist_) + ", " + to_string(idempotent_) + ")";
  }

  friend bool operator==(const Motive&, const Motive&) = default;

 private:
  Variety variety_;
  int twist_ = 0;
  Cycle idempotent_;
};

/// M(X) = (X, 0, Delta_X).
inline Motive motive_of(const Variety& x) { return {x, 0, diagonal_class(x)}; }

/// The unit 1 = M(Spec K).
inline Motive unit_motive() { return motive_of(Variety::point()); }

/// (Spec K, 0, 0).
inline Motive zero_motive() { return {Variety::point(), 0, Cycle::zero(product(Variety::point(), Variety::point()))}; }

/// L = (P1, 0, [P1 x {inf}]); [P1 x {inf}] is h_2 on P1 x P1.
inline Motive lefschetz_motive() {
  const Variety p1 = Variety::projective_space(1);
  return {p1, 0, Cycle::hyperplane(product(p1, p1), 1)};
}

/// T = (Spec K, -1, transpose of the diagonal of Spec K).
inline Motive tate_motive() { return {Variety::point(), -1, Cycle::one(Variety::point())}; }

inline Motive tate_twist(const Motive& m, int i) {
  return {m.variety(), m.twist() - i, m.idempotent()};
}

/// (X, r, alpha)^v = (X, dim X - r, alpha^t).
inline Motive dual(const Motive& m) {
  return {m.variety(), m.variety().dim() - m.twist(), transpose(m.projector()).cycle()};
}

/// alpha (x) beta = p^* alpha . q^* beta on X x Y x X x Y.
inline Cycle tensor_correspondence(const GradedCorrespondence& a, const GradedCorrespondence& b) {
  const Variety& x = a.source();
  const Variety& x2 = a.target();
  const Variety& y = b.source();
  const Variety& y2 = b.target();
  const Variety all = product(product(x, y), product(x2, y2));
  const std::size_t nx = x.num_factors();
  const std::size_t ny = y.num_factors();
  const std::size_t nx2 = x2.num_factors();
  const std::size_t ny2 = y2.num_factors();
  std::vector<std::size_t> p_idx;
  std::vector<std::size_t> q_idx;
  for (std::size_t i = 0; i < nx; ++i) p_idx.push_back(i);
  for (std::size_t i = 0; i < nx2; ++i) p_idx.push_back(nx + ny + i);
  for (std::size_t i = 0; i < ny; ++i) q_idx.push_back(nx + i);
  for (std::size_t i = 0; i < ny2; ++i) q_idx.push_back(nx + ny + nx2 + i);
  return intersect(pullback(FactorSelection(all, std::move(p_idx)), a.cycle()),
                   pullback(FactorSelection(all, std::move(q_idx)), b.cycle()));
}

/// (X, r, alpha) (x) (Y, s, beta) = (X x Y, r + s, alpha (x) beta).
inline Motive tensor(const Motive& m, const Motive& n) {
  return {product(m.variety(), n.variety()), m.twist() + n.twist(),
          tensor_correspondence(m.projector(), n.projector())};
}

/// A morphism of Chow motives: beta o c o alpha = c, c of pure degree s - r.
class MotiveMorphism {
 public:
  MotiveMorphism() = default;
  MotiveMorphism(Motive source, Motive target, GradedCorrespondence corr)
      : source_(std::move(source)), target_(std::move(target)), corr_(std::move(corr)) {
    if (corr_.source() != source_.variety() || corr_.target() != target_.variety()) {
      throw domain_error("morphism correspondence does not run " + source_.variety().name() + " -> " +
                         target_.variety().name());
    }
    if (!corr_.is_pure_degree(degree())) {
      throw invalid_input("morphism correspondence is not of pure degree " + std::to_string(degree()));
    }
    if (compose_graded(compose_graded(source_.projector(), corr_), target_.projector()) != corr_) {
      throw invalid_input("morphism correspondence violates the sandwich condition");
    }
  }

  static MotiveMorphism identity(const Motive& m) { return {m, m, m.projector()}; }
  static MotiveMorphism zero(const Motive& m, const Motive& n) {
    return {m, n, GradedCorrespondence::zero(m.variety(), n.variety())};
  }

  [[nodiscard]] const Motive& source() const { return source_; }
  [[nodiscard]] const Motive& target() const { return target_; }
  [[nodiscard]] const GradedCorrespondence& corr() const { return corr_; }
  [[nodiscard]] int degree() const { return target_.twist() - source_.twist(); }

  friend MotiveMorphism operator+(const MotiveMorphism& a, const MotiveMorphism& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_) throw domain_error("object mismatch in morphism sum");
    return {a.source_, a.target_, a.corr_ + b.corr_};
  }

  friend bool operator==(const MotiveMorphism&, const MotiveMorphism&) = default;

 private:
  Motive source_;
  Motive target_;
  GradedCorrespondence corr_;
};

/// g o f.
inline MotiveMorphism compose_motive(const MotiveMorphism& f, const MotiveMorphism& g) {
  if (f.target() != g.source()) {
    throw domain_error("object mismatch: " + f.target().name() + " vs " + g.source().name());
  }
  return {f.source(), g.target(), compose_graded(f.corr(), g.corr())};
}

inline bool are_mutually_inverse(const MotiveMorphism& f, const MotiveMorphism& g) {
  if (f.target() != g.source() || g.target() != f.source()) return false;
  return compose_motive(f, g) == MotiveMorphism::identity(f.source()) &&
         compose_motive(g, f) == MotiveMorphism::identity(f.target());
}

/// Image of an idempotent endomorphism p of M in the karoubian envelope.
struct Splitting {
  Motive image;
  MotiveMorphism section;     ///< image -> M
  MotiveMorphism retraction;  ///< M -> image
};

/// Splits p: returns (image, s, t) with t o s = id_image and s o t = p.
inline Splitting split_idempotent(const Motive& m, const MotiveMorphism& p) {
  if (p.source() != m || p.target() != m) throw invalid_input("split_idempotent: p is not an endomorphism of M");
  if (compose_motive(p, p) != p) throw invalid_input("split_idempotent: p is not idempotent");
  if (p.corr().is_zero()) {
    const Motive z = zero_motive();
    return {z, MotiveMorphism::zero(z, m), MotiveMorphism::zero(m, z)};
  }
  Motive image(m.variety(), m.twist(), p.corr().cycle());
  return {image, MotiveMorphism(image, m, p.corr()), MotiveMorphism(m, image, p.corr())};
}

/// Formal direct sum M_1 + ... + M_k in the additive hull.
struct FormalSum {
  std::vector<Motive> summands;
  friend bool operator==(const FormalSum&, const FormalSum&) = default;
};

/// Matrix of morphisms; entry (i, j) runs from source summand j to target summand i.
class FormalMorphism {
 public:
  FormalMorphism(FormalSum source, FormalSum target, std::vector<std::vector<MotiveMorphism>> entries)
      : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    if (entries_.size() != target_.summands.size()) throw invalid_input("matrix row count != target summands");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].size() != source_.summands.size()) {
        throw invalid_input("matrix column count != source summands");
      }
      for (std::size_t j = 0; j < entries_[i].size(); ++j) {
        if (entries_[i][j].source() != source_.summands[j] || entries_[i][j].target() != target_.summands[i]) {
          throw domain_error("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") has the wrong source or target");
        }
      }
    }
  }

  static FormalMorphism identity(const FormalSum& s) {
    std::vector<std::vector<MotiveMorphism>> e(s.summands.size());
    for (std::size_t i = 0; i < s.summands.size(); ++i) {
      for (std::size_t j = 0; j < s.summands.size(); ++j) {
        e[i].push_back(i == j ? MotiveMorphism::identity(s.summands[i])
                              : MotiveMorphism::zero(s.summands[j], s.summands[i]));
      }
    }
    return {s, s, std::move(e)};
  }

  [[nodiscard]] const FormalSum& source() const { return source_; }
  [[nodiscard]] const FormalSum& target() const { return target_; }
  [[nodiscard]] const MotiveMorphism& entry(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }

  friend bool operator==(const FormalMorphism&, const FormalMorphism&) = default;

 private:
  FormalSum source_;
  FormalSum target_;
  std::vector<std::vector<MotiveMorphism>> entries_;
};

/// g o f as a matrix product.
inline FormalMorphism compose_formal(const FormalMorphism& f, const FormalMorphism& g) {
  if (f.target() != g.source()) throw domain_error("object mismatch in formal composition");
  const auto& src = f.source().summands;
  const auto& mid = f.target().summands;
  const auto& dst = g.target().summands;
  std::vector<std::vector<MotiveMorphism>> e(dst.size());
  for (std::size_t i = 0; i < dst.size(); ++i) {
    for (std::size_t k = 0; k < src.size(); ++k) {
      MotiveMorphism acc = MotiveMorphism::zero(src[k], dst[i]);
      for (std::size_t j = 0; j < mid.size(); ++j) acc = acc + compose_motive(f.entry(j, k), g.entry(i, j));
      e[i].push_back(std::move(acc));
    }
  }
  return {f.source(), g.target(), std::move(e)};
}

/// The explicit isomorphism M(P1) = 1 + L: `decompose` goes M(P1) -> 1 + L,
/// `assemble` goes back.
struct LefschetzDecomposition {
  FormalMorphism decompose;
  FormalMorphism assemble;
};

inline LefschetzDecomposition lefschetz_decomposition() {
  const Variety p1 = Variety::projective_space(1);
  const Motive m = motive_of(p1);
  const Motive one = unit_motive();
  const Motive lef = lefschetz_motive();
  const GradedCorrespondence beta = lef.projector();
  const FormalSum whole{{m}};
  const FormalSum parts{{one, lef}};
  FormalMorphism decompose(whole, parts,
                           {{MotiveMorphism(m, one, point_correspondence(p1))},
                            {MotiveMorphism(m, lef, beta)}});
  FormalMorphism assemble(parts, whole,
                          {{MotiveMorphism(one, m, structure_correspondence(p1)), MotiveMorphism(lef, m, beta)}});
  return {std::move(decompose), std::move(assemble)};
}

}  // namespace chowmot
