#pragma once

#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace chowmot {

/// A finite product P^{n_1} x ... x P^{n_k}. The empty product is Spec K.
///
/// Factor order matters: P1xP2 and P2xP1 are different presentations.
class Variety {
 public:
  Variety() = default;

  explicit Variety(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int n : factors_) {
      if (n < 0) throw invalid_input("negative projective-space dimension " + std::to_string(n));
    }
  }

  static Variety point() { return Variety{}; }
  static Variety projective_space(int n) { return Variety(std::vector<int>{n}); }

  [[nodiscard]] const std::vector<int>& factors() const { return factors_; }
  [[nodiscard]] std::size_t num_factors() const { return factors_.size(); }
  [[nodiscard]] int factor(std::size_t i) const { return factors_.at(i); }
  [[nodiscard]] int dim() const { return std::accumulate(factors_.begin(), factors_.end(), 0); }
  [[nodiscard]] bool is_point() const { return factors_.empty(); }

  /// Number of monomials h^e with e_i <= n_i, i.e. the rank of CH*(X).
  [[nodiscard]] std::size_t basis_size() const {
    std::size_t n = 1;
    for (int f : factors_) n *= static_cast<std::size_t>(f + 1);
    return n;
  }

  /// "Spec K", "P2", "P1xP2".
  [[nodiscard]] std::string name() const {
    if (factors_.empty()) return "Spec K";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += 'x';
      s += 'P' + std::to_string(factors_[i]);
    }
    return s;
  }

  friend bool operator==(const Variety&, const Variety&) = default;

 private:
  std::vector<int> factors_;
};

inline Variety make_variety(std::span<const int> dims) {
  return Variety(std::vector<int>(dims.begin(), dims.end()));
}

/// X x Y: factor lists concatenated.
inline Variety product(const Variety& x, const Variety& y) {
  std::vector<int> f = x.factors();
  f.insert(f.end(), y.factors().begin(), y.factors().end());
  return Variety(std::move(f));
}

inline Variety product(const Variety& x, const Variety& y, const Variety& z) {
  return product(product(x, y), z);
}

}  // namespace chowmot
