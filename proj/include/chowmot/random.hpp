#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "correspondence.hpp"
#include "cycle.hpp"
#include "k_shadow.hpp"
#include "variety.hpp"

namespace chowmot::rnd {

using Engine = std::mt19937_64;

inline int uniform(Engine& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline Rational nonzero_rational(Engine& g, int bound = 5) {
  int n = 0;
  while (n == 0) n = uniform(g, -bound, bound);
  return Rational(n);
}

/// A product of 1..max_factors projective spaces with n_i in [1, max_n] and dim <= max_dim.
inline Variety variety(Engine& g, int max_factors, int max_n, int max_dim) {
  for (;;) {
    const int k = uniform(g, 1, max_factors);
    std::vector<int> f;
    int d = 0;
    for (int i = 0; i < k; ++i) {
      f.push_back(uniform(g, 1, max_n));
      d += f.back();
    }
    if (d <= max_dim) return Variety(f);
  }
}

/// Picks one variety from a fixed list.
inline Variety pick(Engine& g, const std::vector<Variety>& pool) {
  return pool.at(static_cast<std::size_t>(uniform(g, 0, static_cast<int>(pool.size()) - 1)));
}

/// Integer coefficients in [-bound, bound]; each basis monomial is kept with
/// probability `density`.
inline Cycle cycle(Engine& g, const Variety& v, int bound = 5, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  Cycle c = Cycle::zero(v);
  Exponents e(v.num_factors(), 0);
  for (;;) {
    if (keep(g)) c.add_term(e, Rational(uniform(g, -bound, bound)));
    std::size_t i = 0;
    while (i < e.size() && e[i] == v.factor(i)) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return c;
}

inline Cycle pure_cycle(Engine& g, const Variety& v, int codim, int bound = 5, double density = 0.6) {
  return graded_component(cycle(g, v, bound, density), codim);
}

/// A cycle with constant term 1.
inline Cycle unit_cycle(Engine& g, const Variety& v, int bound = 3) {
  Cycle c = cycle(g, v, bound);
  return c - graded_component(c, 0) + Cycle::one(v);
}

inline GradedCorrespondence correspondence(Engine& g, const Variety& x, const Variety& y, int bound = 5,
                                           double density = 0.5) {
  return {x, y, cycle(g, product(x, y), bound, density)};
}

inline GradedCorrespondence pure_correspondence(Engine& g, const Variety& x, const Variety& y, int deg,
                                                int bound = 5) {
  return {x, y, pure_cycle(g, product(x, y), x.dim() + deg, bound)};
}

inline KKernel kernel(Engine& g, const Variety& x, const Variety& y, int bound = 4) {
  return {x, y, KClass(cycle(g, product(x, y), bound))};
}

/// A strictly increasing nonempty proper-or-full subset of factor indices.
inline FactorSelection projection(Engine& g, const Variety& v) {
  std::vector<std::size_t> idx;
  std::bernoulli_distribution keep(0.5);
  for (std::size_t i = 0; i < v.num_factors(); ++i) {
    if (keep(g)) idx.push_back(i);
  }
  if (idx.empty()) idx.push_back(static_cast<std::size_t>(uniform(g, 0, static_cast<int>(v.num_factors()) - 1)));
  return {v, std::move(idx)};
}

}  // namespace chowmot::rnd
