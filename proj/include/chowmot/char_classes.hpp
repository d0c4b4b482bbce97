#pragma once

#include <string>
#include <vector>

#include "correspondence.hpp"
#include "cycle.hpp"
#include "errors.hpp"
#include "series.hpp"

namespace chowmot {

/// Rank and total Chern class of a (possibly virtual) vector bundle.
///
/// For an honest bundle c_i must vanish above the rank. Virtual classes
/// (formal differences, any integer rank) only obey the dim X bound that
/// truncation already enforces.
class BundleClass {
 public:
  BundleClass(Variety variety, long rank, Cycle total_chern, bool is_virtual = false)
      : variety_(std::move(variety)), rank_(rank), total_chern_(std::move(total_chern)),
        virtual_(is_virtual || rank < 0) {
    if (total_chern_.variety() != variety_) {
      throw domain_error("total Chern class lives on " + total_chern_.variety().name() + ", bundle on " +
                         variety_.name());
    }
    if (graded_component(total_chern_, 0) != Cycle::one(variety_)) {
      throw invalid_input("total Chern class must have c_0 = 1");
    }
    if (!virtual_ && max_codimension(total_chern_) > rank_) {
      throw invalid_input("c_" + std::to_string(max_codimension(total_chern_)) +
                          " is nonzero above the rank " + std::to_string(rank_));
    }
  }

  [[nodiscard]] const Variety& variety() const { return variety_; }
  [[nodiscard]] long rank() const { return rank_; }
  [[nodiscard]] const Cycle& total_chern() const { return total_chern_; }
  [[nodiscard]] bool is_virtual() const { return virtual_; }
  [[nodiscard]] Cycle chern_class(int i) const { return graded_component(total_chern_, i); }

  friend bool operator==(const BundleClass&, const BundleClass&) = default;

 private:
  Variety variety_;
  long rank_;
  Cycle total_chern_;
  bool virtual_;
};

/// Newton power sums p_1..p_d of the Chern roots, d = dim X.
class PowerSumVector {
 public:
  PowerSumVector(Variety v, std::vector<Cycle> sums) : variety_(std::move(v)), sums_(std::move(sums)) {}

  [[nodiscard]] const Variety& variety() const { return variety_; }
  [[nodiscard]] int size() const { return static_cast<int>(sums_.size()); }
  /// p_k for 1 <= k <= dim X.
  [[nodiscard]] const Cycle& operator[](int k) const { return sums_.at(static_cast<std::size_t>(k - 1)); }

 private:
  Variety variety_;
  std::vector<Cycle> sums_;
};

/// p_k = sum_{i<k} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k.
inline PowerSumVector power_sums(const BundleClass& e) {
  const Variety& v = e.variety();
  const int d = v.dim();
  std::vector<Cycle> p;
  p.reserve(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k) {
    Cycle pk = Rational(k % 2 == 1 ? k : -k) * e.chern_class(k);
    for (int i = 1; i < k; ++i) {
      Cycle t = intersect(e.chern_class(i), p[static_cast<std::size_t>(k - i - 1)]);
      if (i % 2 == 1) {
        pk += t;
      } else {
        pk -= t;
      }
    }
    p.push_back(std::move(pk));
  }
  return {v, std::move(p)};
}

/// ch(E) = rank + sum_k p_k / k!.
inline Cycle chern_character(const BundleClass& e) {
  const PowerSumVector p = power_sums(e);
  Cycle ch = Cycle::constant(e.variety(), Rational(e.rank()));
  for (int k = 1; k <= p.size(); ++k) ch += (Rational(1) / factorial(k)) * p[k];
  return ch;
}

/// Coefficients lambda_k of log(x / (1 - e^{-x})) up to x^order.
inline PowerSeries todd_log_series(int order) {
  // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
  PowerSeries g(order);
  for (int k = 0; k <= order; ++k) g[k] = Rational(k % 2 == 0 ? 1 : -1) / factorial(k + 1);
  PowerSeries lam = g.log();
  for (int k = 0; k <= order; ++k) lam[k] = -lam[k];
  return lam;
}

/// td(E) = prod_i a_i / (1 - e^{-a_i}) = exp(sum_k lambda_k p_k).
inline Cycle todd_class(const BundleClass& e) {
  const PowerSumVector p = power_sums(e);
  const PowerSeries lam = todd_log_series(p.size());
  Cycle exponent = Cycle::zero(e.variety());
  for (int k = 1; k <= p.size(); ++k) exponent += lam[k] * p[k];
  return cycle_exp(exponent);
}

/// c(T_X) = prod_i (1 + h_i)^{n_i + 1} from the Euler sequence on each factor.
inline BundleClass tangent_class(const Variety& x) {
  Cycle c = Cycle::one(x);
  for (std::size_t i = 0; i < x.num_factors(); ++i) {
    c = intersect(c, power(Cycle::one(x) + Cycle::hyperplane(x, i), x.factor(i) + 1));
  }
  return {x, x.dim(), std::move(c)};
}

inline Cycle todd_of_variety(const Variety& x) { return todd_class(tangent_class(x)); }

/// exp(1/2 log td_X); squares to td_X exactly.
inline Cycle sqrt_todd(const Variety& x) {
  return cycle_exp((Rational(1) / Rational(2)) * cycle_log(todd_of_variety(x)));
}

/// O(d_1, ..., d_k): rank 1, c = 1 + sum d_i h_i.
inline BundleClass line_bundle(const Variety& x, const std::vector<long>& degrees) {
  if (degrees.size() != x.num_factors()) {
    throw invalid_input("line bundle on " + x.name() + " needs " + std::to_string(x.num_factors()) +
                        " degrees, got " + std::to_string(degrees.size()));
  }
  Cycle c = Cycle::one(x);
  for (std::size_t i = 0; i < degrees.size(); ++i) c += Rational(degrees[i]) * Cycle::hyperplane(x, i);
  return {x, 1, std::move(c)};
}

/// E + E': ranks add, total Chern classes multiply (Whitney).
inline BundleClass direct_sum(const BundleClass& a, const BundleClass& b) {
  return {a.variety(), a.rank() + b.rank(), intersect(a.total_chern(), b.total_chern()),
          a.is_virtual() || b.is_virtual()};
}

/// p^* E along a projection.
inline BundleClass pullback(const FactorSelection& sel, const BundleClass& e) {
  return {sel.source(), e.rank(), pullback(sel, e.total_chern()), e.is_virtual()};
}

}  // namespace chowmot
