#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cycle.hpp"
#include "errors.hpp"
#include "variety.hpp"

namespace chowmot {

/// A projection X_1 x ... x X_k -> X_{i_1} x ... x X_{i_m} onto a subset of
/// factors, kept in their original order.
class FactorSelection {
 public:
  FactorSelection(Variety source, std::vector<std::size_t> selected)
      : source_(std::move(source)), selected_(std::move(selected)) {
    std::vector<int> dims;
    for (std::size_t i = 0; i < selected_.size(); ++i) {
      if (selected_[i] >= source_.num_factors()) {
        throw invalid_input("factor index " + std::to_string(selected_[i]) + " out of range for " +
                            source_.name());
      }
      if (i > 0 && selected_[i] <= selected_[i - 1]) {
        throw invalid_input("factor selection must be strictly increasing");
      }
      dims.push_back(source_.factor(selected_[i]));
    }
    target_ = Variety(std::move(dims));
  }

  /// Selects the contiguous block [begin, end) of factors.
  static FactorSelection block(const Variety& source, std::size_t begin, std::size_t end) {
    std::vector<std::size_t> idx;
    for (std::size_t i = begin; i < end; ++i) idx.push_back(i);
    return FactorSelection(source, std::move(idx));
  }

  /// X x Y -> X.
  static FactorSelection first_of(const Variety& x, const Variety& y) {
    return block(product(x, y), 0, x.num_factors());
  }

  /// X x Y -> Y.
  static FactorSelection second_of(const Variety& x, const Variety& y) {
    return block(product(x, y), x.num_factors(), x.num_factors() + y.num_factors());
  }

  [[nodiscard]] const Variety& source() const { return source_; }
  [[nodiscard]] const Variety& target() const { return target_; }
  [[nodiscard]] const std::vector<std::size_t>& selected() const { return selected_; }

  /// Product of the dropped factors: the fibre of the projection.
  [[nodiscard]] Variety fibre() const {
    std::vector<int> dims;
    std::size_t j = 0;
    for (std::size_t i = 0; i < source_.num_factors(); ++i) {
      if (j < selected_.size() && selected_[j] == i) {
        ++j;
      } else {
        dims.push_back(source_.factor(i));
      }
    }
    return Variety(std::move(dims));
  }

 private:
  Variety source_;
  std::vector<std::size_t> selected_;
  Variety target_;
};

/// p^*: re-index exponents into the source's variables. Degree-0 ring map.
inline Cycle pullback(const FactorSelection& sel, const Cycle& a) {
  if (a.variety() != sel.target()) {
    throw domain_error("pullback: cycle lives on " + a.variety().name() + ", projection target is " +
                       sel.target().name());
  }
  Cycle out(sel.source());
  Exponents e(sel.source().num_factors(), 0);
  for (const auto& [ea, c] : a.terms()) {
    for (std::size_t j = 0; j < ea.size(); ++j) e[sel.selected()[j]] = ea[j];
    out.add_term(e, c);
  }
  return out;
}

/// p_*: keep a term only if every dropped factor carries its top exponent.
inline Cycle pushforward(const FactorSelection& sel, const Cycle& a) {
  if (a.variety() != sel.source()) {
    throw domain_error("pushforward: cycle lives on " + a.variety().name() +
                       ", projection source is " + sel.source().name());
  }
  const Variety& src = sel.source();
  const auto& idx = sel.selected();
  std::vector<bool> kept(src.num_factors(), false);
  for (std::size_t i : idx) kept[i] = true;

  Cycle out(sel.target());
  Exponents e(idx.size());
  for (const auto& [ea, c] : a.terms()) {
    bool top = true;
    for (std::size_t i = 0; i < src.num_factors(); ++i) {
      if (!kept[i] && ea[i] != src.factor(i)) {
        top = false;
        break;
      }
    }
    if (!top) continue;
    for (std::size_t j = 0; j < idx.size(); ++j) e[j] = ea[idx[j]];
    out.add_term(e, c);
  }
  return out;
}

/// a x b on X x Y: exponent vectors concatenated.
inline Cycle cartesian(const Cycle& a, const Cycle& b) {
  Cycle out(product(a.variety(), b.variety()));
  Exponents e;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      e = ea;
      e.insert(e.end(), eb.begin(), eb.end());
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

/// A (possibly mixed-degree) correspondence X -> Y: a cycle on X x Y.
/// Its degree-d part is the codimension dim X + d component.
class GradedCorrespondence {
 public:
  GradedCorrespondence() = default;
  GradedCorrespondence(Variety source, Variety target, Cycle cycle)
      : source_(std::move(source)), target_(std::move(target)), cycle_(std::move(cycle)) {
    if (cycle_.variety() != product(source_, target_)) {
      throw domain_error("correspondence cycle lives on " + cycle_.variety().name() + ", expected " +
                         product(source_, target_).name());
    }
  }

  static GradedCorrespondence zero(const Variety& x, const Variety& y) {
    return {x, y, Cycle::zero(product(x, y))};
  }

  [[nodiscard]] const Variety& source() const { return source_; }
  [[nodiscard]] const Variety& target() const { return target_; }
  [[nodiscard]] const Cycle& cycle() const { return cycle_; }
  [[nodiscard]] bool is_zero() const { return cycle_.is_zero(); }

  [[nodiscard]] int degree_of_codim(int codim) const { return codim - source_.dim(); }
  [[nodiscard]] int codim_of_degree(int deg) const { return source_.dim() + deg; }

  [[nodiscard]] GradedCorrespondence degree_part(int d) const {
    return {source_, target_, graded_component(cycle_, codim_of_degree(d))};
  }

  /// Degrees carrying nonzero parts, ascending.
  [[nodiscard]] std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [e, c] : cycle_.terms()) {
      int d = degree_of_codim(codimension(e));
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] bool is_pure_degree(int d) const { return is_pure(cycle_, codim_of_degree(d)); }

  GradedCorrespondence& operator+=(const GradedCorrespondence& o) {
    require_same_ends(o);
    cycle_ += o.cycle_;
    return *this;
  }
  GradedCorrespondence& operator-=(const GradedCorrespondence& o) {
    require_same_ends(o);
    cycle_ -= o.cycle_;
    return *this;
  }
  friend GradedCorrespondence operator+(GradedCorrespondence a, const GradedCorrespondence& b) {
    return a += b;
  }
  friend GradedCorrespondence operator-(GradedCorrespondence a, const GradedCorrespondence& b) {
    return a -= b;
  }
  friend GradedCorrespondence operator*(const Rational& s, GradedCorrespondence a) {
    a.cycle_ *= s;
    return a;
  }

  friend bool operator==(const GradedCorrespondence&, const GradedCorrespondence&) = default;

 private:
  void require_same_ends(const GradedCorrespondence& o) const {
    if (source_ != o.source_ || target_ != o.target_) {
      throw domain_error("correspondences between different varieties");
    }
  }

  Variety source_;
  Variety target_;
  Cycle cycle_;
};

/// sigma^*: X x Y -> Y x X, swapping the two factor blocks.
inline GradedCorrespondence transpose(const GradedCorrespondence& c) {
  const std::size_t nx = c.source().num_factors();
  Cycle out(product(c.target(), c.source()));
  Exponents e;
  for (const auto& [ea, coeff] : c.cycle().terms()) {
    e.assign(ea.begin() + static_cast<std::ptrdiff_t>(nx), ea.end());
    e.insert(e.end(), ea.begin(), ea.begin() + static_cast<std::ptrdiff_t>(nx));
    out.add_term(e, coeff);
  }
  return {c.target(), c.source(), std::move(out)};
}

/// [Delta_X] on X x X. For P^n this is sum_i h_1^i h_2^{n-i}; for products,
/// the intersection of the per-factor classes.
inline Cycle diagonal_class(const Variety& x) {
  const std::size_t k = x.num_factors();
  const Variety xx = product(x, x);
  Cycle out = Cycle::one(xx);
  for (std::size_t i = 0; i < k; ++i) {
    const int n = x.factor(i);
    Cycle factor_diag(xx);
    Exponents e(2 * k, 0);
    for (int j = 0; j <= n; ++j) {
      e[i] = j;
      e[k + i] = n - j;
      factor_diag.add_term(e, Rational(1));
    }
    out = intersect(out, factor_diag);
  }
  return out;
}

inline GradedCorrespondence diagonal_correspondence(const Variety& x) {
  return {x, x, diagonal_class(x)};
}

/// Delta_*(g) = p_1^*(g) . [Delta] by the projection formula.
inline Cycle diagonal_pushforward(const Variety& x, const Cycle& g) {
  if (g.variety() != x) throw domain_error("diagonal_pushforward: cycle does not live on " + x.name());
  return intersect(pullback(FactorSelection::first_of(x, x), g), diagonal_class(x));
}

/// Spec K -> X given by the fundamental class [X].
inline GradedCorrespondence structure_correspondence(const Variety& x) {
  return {Variety::point(), x, Cycle::one(x)};
}

/// X -> Spec K given by the class of a point.
inline GradedCorrespondence point_correspondence(const Variety& x) {
  return {x, Variety::point(), Cycle::point_class(x)};
}

namespace detail {

inline void require_composable(const GradedCorrespondence& f, const GradedCorrespondence& g) {
  if (f.target() != g.source()) {
    throw domain_error("middle variety mismatch: " + f.target().name() + " vs " + g.source().name());
  }
}

}  // namespace detail

/// (p_XZ)_*(p_XY^* f . p_YZ^* g) for f, g of pure codimension, evaluated
/// literally on X x Y x Z. Mixed inputs are rejected.
inline GradedCorrespondence compose_homogeneous(const GradedCorrespondence& f,
                                                const GradedCorrespondence& g) {
  detail::require_composable(f, g);
  const int i = min_codimension(f.cycle());
  const int j = min_codimension(g.cycle());
  if ((!f.is_zero() && !is_pure(f.cycle(), i)) || (!g.is_zero() && !is_pure(g.cycle(), j))) {
    throw invalid_input("compose_homogeneous requires cycles of pure codimension");
  }
  const Variety& x = f.source();
  const Variety& y = f.target();
  const Variety& z = g.target();
  const Variety xyz = product(x, y, z);
  const std::size_t nx = x.num_factors();
  const std::size_t ny = y.num_factors();
  const std::size_t nz = z.num_factors();

  const auto p_xy = FactorSelection::block(xyz, 0, nx + ny);
  const auto p_yz = FactorSelection::block(xyz, nx, nx + ny + nz);
  std::vector<std::size_t> xz_idx;
  for (std::size_t a = 0; a < nx; ++a) xz_idx.push_back(a);
  for (std::size_t a = 0; a < nz; ++a) xz_idx.push_back(nx + ny + a);
  const FactorSelection p_xz(xyz, std::move(xz_idx));

  Cycle prod = intersect(pullback(p_xy, f.cycle()), pullback(p_yz, g.cycle()));
  return {x, z, pushforward(p_xz, prod)};
}

/// g o f for f: X -> Y, g: Y -> Z, all degrees at once.
///
/// A pair of monomials contributes exactly when their Y-exponents sum to the
/// top exponents of Y; this is the same contraction compose_homogeneous
/// performs on X x Y x Z, without materialising the triple product.
inline GradedCorrespondence compose_graded(const GradedCorrespondence& f,
                                           const GradedCorrespondence& g) {
  detail::require_composable(f, g);
  const Variety& y = f.target();
  const std::size_t nx = f.source().num_factors();
  const std::size_t ny = y.num_factors();

  // Bucket g's terms by their Y-exponents so each f term meets only partners.
  std::map<Exponents, std::vector<std::pair<Exponents, Rational>>> g_by_y;
  for (const auto& [eg, cg] : g.cycle().terms()) {
    Exponents ey(eg.begin(), eg.begin() + static_cast<std::ptrdiff_t>(ny));
    Exponents ez(eg.begin() + static_cast<std::ptrdiff_t>(ny), eg.end());
    g_by_y[std::move(ey)].emplace_back(std::move(ez), cg);
  }

  Cycle out(product(f.source(), g.target()));
  Exponents want(ny);
  Exponents e;
  for (const auto& [ef, cf] : f.cycle().terms()) {
    for (std::size_t a = 0; a < ny; ++a) want[a] = y.factor(a) - ef[nx + a];
    auto it = g_by_y.find(want);
    if (it == g_by_y.end()) continue;
    for (const auto& [ez, cg] : it->second) {
      e.assign(ef.begin(), ef.begin() + static_cast<std::ptrdiff_t>(nx));
      e.insert(e.end(), ez.begin(), ez.end());
      out.add_term(e, cf * cg);
    }
  }
  return {f.source(), g.target(), std::move(out)};
}

}  // namespace chowmot
