#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "variety.hpp"

namespace chowmot {

/// Exponent vector (e_1, ..., e_k) of a monomial h_1^{e_1} ... h_k^{e_k}.
using Exponents = std::vector<int>;

/// An element of CH*(X, Q) = Q[h_1..h_k] / (h_i^{n_i+1}).
///
/// Terms are kept in a map ordered lexicographically on exponent vectors;
/// zero coefficients are never stored and every exponent satisfies
/// e_i <= n_i, so two equal cycles have identical term maps.
class Cycle {
 public:
  using TermMap = std::map<Exponents, Rational>;

  Cycle() = default;
  explicit Cycle(Variety v) : variety_(std::move(v)) {}

  static Cycle zero(const Variety& v) { return Cycle(v); }

  static Cycle one(const Variety& v) { return constant(v, Rational(1)); }

  static Cycle constant(const Variety& v, const Rational& c) {
    return monomial(v, Exponents(v.num_factors(), 0), c);
  }

  /// c * h^e; zero if any e_i exceeds n_i.
  static Cycle monomial(const Variety& v, const Exponents& e, const Rational& c = Rational(1)) {
    Cycle out(v);
    out.add_term(e, c);
    return out;
  }

  /// The hyperplane class h_i pulled back from factor i.
  static Cycle hyperplane(const Variety& v, std::size_t i) {
    if (i >= v.num_factors()) throw invalid_input("hyperplane index out of range");
    Exponents e(v.num_factors(), 0);
    e[i] = 1;
    return monomial(v, e);
  }

  /// The class of a point: h_1^{n_1} ... h_k^{n_k}.
  static Cycle point_class(const Variety& v) { return monomial(v, v.factors()); }

  [[nodiscard]] const Variety& variety() const { return variety_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Coefficient of the empty monomial.
  [[nodiscard]] Rational constant_term() const {
    return coefficient(Exponents(variety_.num_factors(), 0));
  }

  /// Adds c * h^e in place, dropping truncated monomials and cancelled terms.
  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != variety_.num_factors()) {
      throw invalid_input("exponent vector length " + std::to_string(e.size()) +
                          " does not match " + variety_.name());
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw invalid_input("negative exponent");
      if (e[i] > variety_.factor(i)) return;
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Cycle& operator+=(const Cycle& o) {
    require_same_variety(o, "cycle_add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Cycle& operator-=(const Cycle& o) {
    require_same_variety(o, "cycle_sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Cycle& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  friend Cycle operator-(Cycle a) { return a *= Rational(-1); }
  friend Cycle operator*(const Rational& s, Cycle a) { return a *= s; }
  friend Cycle operator*(Cycle a, const Rational& s) { return a *= s; }

  friend bool operator==(const Cycle&, const Cycle&) = default;

  void require_same_variety(const Cycle& o, const char* op) const {
    if (variety_ != o.variety_) {
      throw domain_error(std::string(op) + ": variety mismatch (" + variety_.name() + " vs " +
                         o.variety_.name() + ")");
    }
  }

 private:
  Variety variety_;
  TermMap terms_;
};

inline int codimension(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

inline Cycle cycle_add(const Cycle& a, const Cycle& b) { return a + b; }
inline Cycle cycle_scale(const Rational& c, const Cycle& a) { return c * a; }

/// Intersection product: truncated polynomial multiplication.
inline Cycle intersect(const Cycle& a, const Cycle& b) {
  a.require_same_variety(b, "intersect");
  const Variety& v = a.variety();
  const std::size_t k = v.num_factors();
  Cycle out(v);
  Exponents e(k);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      bool survives = true;
      for (std::size_t i = 0; i < k; ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > v.factor(i)) {
          survives = false;
          break;
        }
      }
      if (survives) out.add_term(e, ca * cb);
    }
  }
  return out;
}

inline Cycle operator*(const Cycle& a, const Cycle& b) { return intersect(a, b); }

/// a^n under the intersection product; a^0 = 1.
inline Cycle power(const Cycle& a, int n) {
  if (n < 0) throw invalid_input("negative power of a cycle");
  Cycle result = Cycle::one(a.variety());
  for (int i = 0; i < n; ++i) result = intersect(result, a);
  return result;
}

/// Sum of the terms of codimension exactly k.
inline Cycle graded_component(const Cycle& a, int k) {
  Cycle out(a.variety());
  for (const auto& [e, c] : a.terms()) {
    if (codimension(e) == k) out.add_term(e, c);
  }
  return out;
}

/// Pushforward to Spec K: coefficient of the top monomial.
inline Rational degree(const Cycle& a) { return a.coefficient(a.variety().factors()); }

/// True when every term has codimension k (the zero cycle is pure of every codimension).
inline bool is_pure(const Cycle& a, int k) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [k](const auto& t) { return codimension(t.first) == k; });
}

/// Smallest codimension carrying a nonzero term; `no_support` for the zero cycle.
inline constexpr int no_support = std::numeric_limits<int>::max();

inline int min_codimension(const Cycle& a) {
  int m = no_support;
  for (const auto& [e, c] : a.terms()) m = std::min(m, codimension(e));
  return m;
}

inline int max_codimension(const Cycle& a) {
  int m = -1;
  for (const auto& [e, c] : a.terms()) m = std::max(m, codimension(e));
  return m;
}

/// Human-readable form, e.g. "2*h1*h2 - 1/2*h1 + 1". Single-factor varieties use "h".
inline std::string to_string(const Cycle& a) {
  if (a.is_zero()) return "0";
  const std::size_t k = a.variety().num_factors();
  std::string out;
  bool first = true;
  // Highest codimension first reads like a polynomial.
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < k; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += k == 1 ? std::string("h") : "h" + std::to_string(i + 1);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    Rational mag = c.sign() < 0 ? -c : c;
    std::string term;
    if (mono.empty()) {
      term = mag.str();
    } else if (mag == Rational(1)) {
      term = mono;
    } else {
      term = mag.str() + '*' + mono;
    }
    if (first) {
      out = (c.sign() < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Cycle& a) { return os << to_string(a); }

}  // namespace chowmot
