#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "char_classes.hpp"
#include "constructions.hpp"
#include "correspondence.hpp"
#include "cycle.hpp"
#include "json_io.hpp"
#include "k_shadow.hpp"
#include "motive.hpp"
#include "orbit.hpp"
#include "random.hpp"

namespace chowmot::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 42;
  int samples = 200;
};

namespace detail {

/// Runs `body`, turning an escaped exception into a failed check.
inline CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    CheckResult r = body();
    r.name = name;
    return r;
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

/// Tallies instance counts and remembers the first failure.
class Tally {
 public:
  void record(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  [[nodiscard]] bool ok() const { return failed_ == 0 && total_ > 0; }
  [[nodiscard]] int total() const { return total_; }
  [[nodiscard]] CheckResult result(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ": " << (total_ - failed_) << "/" << total_ << " passed";
    if (failed_ != 0) os << "; first failure: " << first_failure_;
    return {"", ok(), os.str()};
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

/// Rank of a rational matrix by exact Gaussian elimination.
inline int matrix_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / prow[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * prow[k];
    }
    ++rank;
  }
  return rank;
}

/// Generalized binomial C(n + d, n) = prod_{i=1..n} (d + i) / n!.
inline Rational binomial_oracle(int n, int d) {
  Rational num(1);
  for (int i = 1; i <= n; ++i) num *= Rational(d + i);
  return num / factorial(n);
}

/// Rank-4 bundle O(h_1) + ... + O(h_4) on (P^4)^4: its Chern classes are
/// algebraically independent through degree 4.
inline BundleClass splitting_bundle() {
  const Variety v({4, 4, 4, 4});
  Cycle c = Cycle::one(v);
  for (std::size_t i = 0; i < 4; ++i) c = intersect(c, Cycle::one(v) + Cycle::hyperplane(v, i));
  return {v, 4, c};
}

inline Cycle chern_monomial(const BundleClass& e, const std::vector<int>& parts) {
  Cycle out = Cycle::one(e.variety());
  for (int p : parts) out = intersect(out, e.chern_class(p));
  return out;
}

inline Cycle expansion_from_golden(const BundleClass& e, const nlohmann::json& terms) {
  Cycle out = Cycle::zero(e.variety());
  for (const auto& t : terms) {
    out += Rational::parse(t.at("coeff").get<std::string>()) *
           chern_monomial(e, t.at("chern_monomial").get<std::vector<int>>());
  }
  return out;
}

inline const std::vector<Variety>& small_pool() {
  static const std::vector<Variety> pool = {Variety::projective_space(1), Variety({1, 1}),
                                            Variety::projective_space(2)};
  return pool;
}

}  // namespace detail

// ---- acceptance criteria ---------------------------------------------------

/// chi(P^n, O(d)) = C(n + d, n) for 0 <= n <= 4, -6 <= d <= 6.
inline CheckResult hirzebruch_riemann_roch() {
  return detail::guarded("1 hirzebruch-riemann-roch", [] {
    detail::Tally t;
    for (int n = 0; n <= 4; ++n) {
      const Variety p = n == 0 ? Variety::point() : Variety::projective_space(n);
      for (int d = -6; d <= 6; ++d) {
        const std::vector<long> deg = n == 0 ? std::vector<long>{} : std::vector<long>{d};
        const Rational chi = euler_characteristic(KClass::of_bundle(line_bundle(p, deg)));
        const Rational want = detail::binomial_oracle(n, d);
        t.record(chi == want, "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": got " + chi.str() +
                                  ", want " + want.str());
      }
    }
    return t.result("chi(O(d)) on P^n");
  });
}

/// Low-degree ch/td terms against the printed coefficients; degree-3/4 terms
/// against the oracle table `golden`.
inline CheckResult printed_expansions(const nlohmann::json& golden) {
  return detail::guarded("2 printed-expansion golden files", [&] {
    detail::Tally t;
    const BundleClass e = detail::splitting_bundle();
    const Cycle ch = chern_character(e);
    const Cycle td = todd_class(e);
    const Cycle c1 = e.chern_class(1);
    const Cycle c2 = e.chern_class(2);
    const Cycle c3 = e.chern_class(3);
    const Rational half = Rational(1) / Rational(2);

    // Printed coefficients.
    t.record(graded_component(ch, 1) == c1, "ch_1 != c1");
    t.record(graded_component(ch, 2) == half * (intersect(c1, c1) - Rational(2) * c2), "ch_2 != (c1^2-2c2)/2");
    t.record(graded_component(td, 1) == half * c1, "td_1 != c1/2");
    t.record(graded_component(td, 2) == (Rational(1) / Rational(12)) * (intersect(c1, c1) + c2),
             "td_2 != (c1^2+c2)/12");
    t.record(graded_component(td, 3) == (Rational(1) / Rational(24)) * intersect(c1, c2), "td_3 != c1c2/24");

    // Oracle table, every degree 1..4.
    for (const char* key : {"chern_character", "todd"}) {
      const Cycle& engine = std::string(key) == "todd" ? td : ch;
      for (int k = 1; k <= 4; ++k) {
        const Cycle want = detail::expansion_from_golden(e, golden.at(key).at(std::to_string(k)));
        t.record(graded_component(engine, k) == want, std::string(key) + " degree " + std::to_string(k));
      }
    }

    // The printed degree-3 ch uses +c3; the oracle disagrees, and the table must say so.
    const Cycle printed_ch3 = (Rational(1) / Rational(6)) *
                              (power(c1, 3) - Rational(3) * intersect(c1, c2) + c3);
    const bool diverges = graded_component(ch, 3) != printed_ch3;
    const std::string comment = golden.value("comment", "");
    t.record(!diverges || comment.find("c3") != std::string::npos, "ch_3 divergence not recorded in comment");

    CheckResult r = t.result("expansion terms");
    r.detail += diverges ? "; printed degree-3 ch (+c3) diverges from the oracle (+3c3/6), recorded"
                         : "; printed degree-3 ch agrees with the oracle";
    return r;
  });
}

/// mu(O_Delta) = Delta and O_Delta is a two-sided unit for k_compose.
inline CheckResult identity_kernel_theorem(const Options& o) {
  return detail::guarded("3 identity-kernel theorem", [&] {
    detail::Tally t;
    rnd::Engine g(o.seed ^ 0x3u);
    const std::vector<Variety> xs = {Variety::point(), Variety::projective_space(1), Variety::projective_space(2),
                                     Variety({1, 1})};
    for (const Variety& x : xs) {
      const KKernel id = identity_kernel(x);
      t.record(mu(id) == diagonal_correspondence(x), "mu(O_Delta) on " + x.name());
      for (int s = 0; s < 5; ++s) {
        const Variety y = xs[static_cast<std::size_t>(rnd::uniform(g, 0, 3))];
        const KKernel e = rnd::kernel(g, x, y);
        t.record(k_compose(id, e) == e, "O_Delta o E on " + x.name() + " -> " + y.name());
        const KKernel f = rnd::kernel(g, y, x);
        t.record(k_compose(f, id) == f, "E o O_Delta on " + y.name() + " -> " + x.name());
      }
    }
    return t.result("identity and unit laws");
  });
}

/// Associativity, identity, transpose anti-homomorphism and the projection formula.
inline CheckResult correspondence_algebra(const Options& o) {
  return detail::guarded("4 correspondence algebra", [&] {
    rnd::Engine g(o.seed ^ 0x4u);
    const int n = std::max(o.samples, 200);
    detail::Tally assoc;
    detail::Tally ident;
    detail::Tally trans;
    detail::Tally proj;
    for (int s = 0; s < n; ++s) {
      const Variety x = rnd::variety(g, 2, 2, 4);
      const Variety y = rnd::variety(g, 2, 2, 4);
      const Variety z = rnd::variety(g, 2, 2, 4);
      const Variety w = rnd::variety(g, 2, 2, 4);
      const auto f = rnd::correspondence(g, x, y, 3, 0.3);
      const auto h = rnd::correspondence(g, y, z, 3, 0.3);
      const auto k = rnd::correspondence(g, z, w, 3, 0.3);
      assoc.record(compose_graded(compose_graded(f, h), k) == compose_graded(f, compose_graded(h, k)),
                   x.name() + "," + y.name() + "," + z.name() + "," + w.name());
      ident.record(compose_graded(diagonal_correspondence(x), f) == f &&
                       compose_graded(f, diagonal_correspondence(y)) == f,
                   x.name() + " -> " + y.name());
      trans.record(transpose(compose_graded(f, h)) == compose_graded(transpose(h), transpose(f)),
                   x.name() + "," + y.name() + "," + z.name());
      const Variety v = rnd::variety(g, 3, 2, 4);
      const FactorSelection p = rnd::projection(g, v);
      const Cycle a = rnd::cycle(g, v, 3, 0.4);
      const Cycle b = rnd::cycle(g, p.target(), 3, 0.6);
      proj.record(pushforward(p, intersect(pullback(p, b), a)) == intersect(b, pushforward(p, a)), v.name());
    }
    const bool ok = assoc.ok() && ident.ok() && trans.ok() && proj.ok();
    return CheckResult{"", ok,
                       assoc.result("associativity").detail + "; " + ident.result("identity").detail + "; " +
                           trans.result("transpose").detail + "; " + proj.result("projection formula").detail};
  });
}

/// alpha = h_1, beta = h_2 on P1 x P1 decompose M(P1) = 1 + L.
inline CheckResult lefschetz_decomposition_check() {
  return detail::guarded("5 lefschetz decomposition", [] {
    detail::Tally t;
    const Variety p1 = Variety::projective_space(1);
    const Variety pp = product(p1, p1);
    const Motive m = motive_of(p1);
    const GradedCorrespondence alpha(p1, p1, Cycle::hyperplane(pp, 0));
    const GradedCorrespondence beta(p1, p1, Cycle::hyperplane(pp, 1));
    t.record(compose_graded(alpha, alpha) == alpha, "alpha o alpha = alpha");
    t.record(compose_graded(beta, beta) == beta, "beta o beta = beta");
    t.record(compose_graded(alpha, beta).is_zero(), "beta o alpha = 0");
    t.record(compose_graded(beta, alpha).is_zero(), "alpha o beta = 0");
    t.record(alpha + beta == diagonal_correspondence(p1), "alpha + beta = Delta");

    const Splitting sa = split_idempotent(m, MotiveMorphism(m, m, alpha));
    const Splitting sb = split_idempotent(m, MotiveMorphism(m, m, beta));
    for (const auto* s : {&sa, &sb}) {
      t.record(compose_motive(s->section, s->retraction) == MotiveMorphism::identity(s->image), "t o s = id");
      t.record(compose_motive(s->retraction, s->section).corr() == s->image.projector(), "s o t = p");
    }
    t.record(sb.image == lefschetz_motive(), "split(beta) = L");

    // split(alpha) = 1 via the structure and point correspondences.
    const Motive one = unit_motive();
    const MotiveMorphism u(one, sa.image, structure_correspondence(p1));
    const MotiveMorphism v(sa.image, one, point_correspondence(p1));
    t.record(are_mutually_inverse(u, v), "split(alpha) = 1");

    const LefschetzDecomposition d = lefschetz_decomposition();
    t.record(compose_formal(d.decompose, d.assemble) == FormalMorphism::identity(d.decompose.source()),
             "assemble o decompose = id");
    t.record(compose_formal(d.assemble, d.decompose) == FormalMorphism::identity(d.assemble.source()),
             "decompose o assemble = id");
    return t.result("decomposition identities");
  });
}

/// Unipotent perturbations rigidify; negative-degree controls are refused.
inline CheckResult orbit_rigidification(const Options& o) {
  return detail::guarded("6 orbit rigidification", [&] {
    rnd::Engine g(o.seed ^ 0x6u);
    const int n_pos = std::max(o.samples / 4, 50);
    const int n_neg = std::max(o.samples / 20, 10);
    detail::Tally pos;
    detail::Tally neg;
    for (int s = 0; s < n_pos; ++s) {
      const int n = 1 + s % 2;
      const Motive m = motive_of(Variety::projective_space(n));
      const PerturbedPair pr = perturbed_pair(g, n, +1);
      const auto f = OrbitMorphism::from_graded(m, m, pr.forward);
      const auto h = OrbitMorphism::from_graded(m, m, pr.backward);
      const auto [f0, g0] = degree_zero_rigidify(f, h);
      pos.record(are_mutually_inverse(f0, g0) && f0.corr() == pr.forward.degree_part(0),
                 "P" + std::to_string(n) + " sample " + std::to_string(s));
    }
    for (int s = 0; s < n_neg; ++s) {
      const int n = 1 + s % 2;
      const Motive m = motive_of(Variety::projective_space(n));
      const PerturbedPair pr = perturbed_pair(g, n, -1);
      const auto f = OrbitMorphism::from_graded(m, m, pr.forward);
      const auto h = OrbitMorphism::from_graded(m, m, pr.backward);
      // The control is only meaningful if the pair really is inverse in the orbit category.
      const bool inverse = orbit_compose(f, h) == OrbitMorphism::identity(m) &&
                           orbit_compose(h, f) == OrbitMorphism::identity(m);
      bool refused = false;
      try {
        (void)degree_zero_rigidify(f, h);
      } catch (const support_condition_error&) {
        refused = true;
      }
      neg.record(inverse && refused, "negative control " + std::to_string(s));
    }
    return CheckResult{"", pos.ok() && neg.ok() && pos.total() >= 50 && neg.total() >= 10,
                       pos.result("unipotent pairs").detail + "; " + neg.result("negative controls").detail};
  });
}

/// O_Delta(d, 0) on P1 gives an exact isomorphism; the Tate-shifted pair does not.
inline CheckResult orlov_end_to_end() {
  return detail::guarded("7 orlov pipeline", [] {
    detail::Tally exact;
    detail::Tally shifted;
    const Variety p1 = Variety::projective_space(1);
    for (long d = -2; d <= 2; ++d) {
      const KKernel e = twisted_identity_kernel(p1, {d});
      const KKernel f = transported_inverse(e);
      const OrlovResult r = orlov_pipeline(e, f);
      exact.record(r.verdict == OrlovVerdict::exact_isomorphism && r.forward_degree_zero &&
                       r.forward_degree_zero->corr() == diagonal_correspondence(p1),
                   "d=" + std::to_string(d) + " verdict " + to_string(r.verdict));
      const auto [es, fs] = tate_shifted_pair(e, f);
      const OrlovResult rs = orlov_pipeline(es, fs);
      shifted.record(rs.verdict == OrlovVerdict::tate_twist_only,
                     "shifted d=" + std::to_string(d) + " verdict " + to_string(rs.verdict));
    }
    return CheckResult{"", exact.ok() && shifted.ok(),
                       exact.result("twisted kernels exact").detail + "; " +
                           shifted.result("shifted controls tate-twist-only").detail};
  });
}

/// Both routes from a kernel to CH*(X x Y) agree; the corrupted route does not.
inline CheckResult compatibility_triangle(const Options& o) {
  return detail::guarded("8 compatibility triangle", [&] {
    rnd::Engine g(o.seed ^ 0x8u);
    const int n = std::max(o.samples / 2, 100);
    detail::Tally t;
    detail::Tally neg;
    for (int s = 0; s < n; ++s) {
      const Variety x = rnd::pick(g, detail::small_pool());
      const Variety y = rnd::pick(g, detail::small_pool());
      t.record(compatibility_check(rnd::kernel(g, x, y)), x.name() + " -> " + y.name());
    }
    for (const Variety& x : detail::small_pool()) {
      neg.record(!compatibility_check(identity_kernel(x), CompatPath::omit_sqrt_todd), "corrupted " + x.name());
    }
    return CheckResult{"", t.ok() && neg.ok(),
                       t.result("random kernels").detail + "; " + neg.result("corrupted controls rejected").detail};
  });
}

/// ch(O(-i)), i = 0..n, are linearly independent in CH*(P^n).
inline CheckResult chern_character_basis() {
  return detail::guarded("9 ch-isomorphism witness", [] {
    detail::Tally t;
    for (int n = 0; n <= 4; ++n) {
      const Variety p = n == 0 ? Variety::point() : Variety::projective_space(n);
      std::vector<std::vector<Rational>> rows;
      for (int i = 0; i <= n; ++i) {
        const std::vector<long> deg = n == 0 ? std::vector<long>{} : std::vector<long>{-i};
        const Cycle ch = chern_character(line_bundle(p, deg));
        std::vector<Rational> row;
        for (int k = 0; k <= n; ++k) row.push_back(ch.coefficient(n == 0 ? Exponents{} : Exponents{k}));
        rows.push_back(std::move(row));
      }
      const int rank = detail::matrix_rank(rows);
      t.record(rank == n + 1, "P^" + std::to_string(n) + " rank " + std::to_string(rank));
    }
    return t.result("full rank");
  });
}

inline std::vector<CheckResult> acceptance_suite(const Options& o, const nlohmann::json& golden) {
  return {hirzebruch_riemann_roch(),   printed_expansions(golden), identity_kernel_theorem(o),
          correspondence_algebra(o),   lefschetz_decomposition_check(), orbit_rigidification(o),
          orlov_end_to_end(),          compatibility_triangle(o),  chern_character_basis()};
}

// ---- module invariants -----------------------------------------------------

inline CheckResult ring_laws(const Options& o) {
  return detail::guarded("ring-core: ring laws and canonical form", [&] {
    rnd::Engine g(o.seed ^ 0x11u);
    detail::Tally t;
    for (int s = 0; s < std::max(o.samples, 200); ++s) {
      const Variety v = rnd::variety(g, 3, 3, 9);
      const Cycle a = rnd::cycle(g, v, 5, 0.3);
      const Cycle b = rnd::cycle(g, v, 5, 0.3);
      const Cycle c = rnd::cycle(g, v, 5, 0.3);
      const Cycle one = Cycle::one(v);
      bool ok = intersect(a, b) == intersect(b, a) &&
                intersect(intersect(a, b), c) == intersect(a, intersect(b, c)) && intersect(one, a) == a &&
                intersect(a, one) == a;
      Cycle sum = Cycle::zero(v);
      for (int k = 0; k <= v.dim(); ++k) sum += graded_component(a, k);
      ok = ok && sum == a;
      ok = ok && degree(intersect(a + c, b)) == degree(intersect(a, b)) + degree(intersect(c, b));
      const std::string once = json::to_json(a).dump();
      ok = ok && json::to_json(json::cycle_from_json(json::parse_text(once))).dump() == once;
      t.record(ok, v.name());
    }
    return t.result("random cycles");
  });
}

inline CheckResult calculus_laws(const Options& o) {
  return detail::guarded("chow-calculus: homogeneous vs graded, push-pull", [&] {
    rnd::Engine g(o.seed ^ 0x12u);
    detail::Tally t;
    for (int s = 0; s < std::max(o.samples / 2, 100); ++s) {
      const Variety x = rnd::variety(g, 2, 2, 3);
      const Variety y = rnd::variety(g, 2, 2, 3);
      const Variety z = rnd::variety(g, 2, 2, 3);
      const int i = rnd::uniform(g, 0, product(x, y).dim());
      const int j = rnd::uniform(g, 0, product(y, z).dim());
      const GradedCorrespondence f(x, y, rnd::pure_cycle(g, product(x, y), i));
      const GradedCorrespondence h(y, z, rnd::pure_cycle(g, product(y, z), j));
      bool ok = compose_homogeneous(f, h) == compose_graded(f, h);
      // p_*(p^* a . [point of fibre]) = a
      const Variety v = product(x, y);
      const FactorSelection p = FactorSelection::first_of(x, y);
      const Cycle a = rnd::cycle(g, x);
      const Cycle top = pullback(FactorSelection::second_of(x, y), Cycle::point_class(y));
      ok = ok && pushforward(p, intersect(pullback(p, a), top)) == a;
      ok = ok && transpose(transpose(f)) == f;
      t.record(ok, x.name() + "," + y.name() + "," + z.name() + " codims " + std::to_string(i) + "," +
                       std::to_string(j) + " on " + v.name());
    }
    return t.result("random instances");
  });
}

inline CheckResult characteristic_class_laws(const Options& o) {
  return detail::guarded("char-classes: Whitney, ring homomorphism, naturality, sqrt(td)", [&] {
    rnd::Engine g(o.seed ^ 0x13u);
    detail::Tally t;
    auto random_line = [&](const Variety& v) {
      std::vector<long> d;
      for (std::size_t i = 0; i < v.num_factors(); ++i) d.push_back(rnd::uniform(g, -3, 3));
      return d;
    };
    for (int s = 0; s < std::max(o.samples / 4, 50); ++s) {
      const Variety v = rnd::variety(g, 2, 3, 4);
      const auto d1 = random_line(v);
      const auto d2 = random_line(v);
      const auto d3 = random_line(v);
      const BundleClass e = direct_sum(line_bundle(v, d1), line_bundle(v, d2));
      const BundleClass f = line_bundle(v, d3);
      const BundleClass ef = direct_sum(e, f);
      bool ok = ef.total_chern() == intersect(e.total_chern(), f.total_chern());
      ok = ok && chern_character(ef) == chern_character(e) + chern_character(f);
      ok = ok && todd_class(ef) == intersect(todd_class(e), todd_class(f));
      std::vector<long> d13;
      for (std::size_t i = 0; i < d1.size(); ++i) d13.push_back(d1[i] + d3[i]);
      ok = ok && chern_character(line_bundle(v, d13)) ==
                     intersect(chern_character(line_bundle(v, d1)), chern_character(line_bundle(v, d3)));
      const Variety w = rnd::variety(g, 2, 2, 3);
      const FactorSelection p = FactorSelection::first_of(v, w);
      ok = ok && chern_character(pullback(p, e)) == pullback(p, chern_character(e));
      t.record(ok, v.name());
    }
    for (const Variety& v : {Variety::point(), Variety({1}), Variety({1, 2}), Variety({2, 2}), Variety({3, 3}),
                             Variety({1, 2, 3}), Variety({6}), Variety({2, 2, 2})}) {
      const Cycle r = sqrt_todd(v);
      t.record(intersect(r, r) == todd_of_variety(v), "sqrt(td)^2 on " + v.name());
    }
    return t.result("bundle instances");
  });
}

inline CheckResult k_shadow_laws(const Options& o) {
  return detail::guarded("k-shadow: functoriality, additivity, GRR square", [&] {
    rnd::Engine g(o.seed ^ 0x14u);
    detail::Tally t;
    for (int s = 0; s < std::max(o.samples / 2, 100); ++s) {
      const Variety x = rnd::pick(g, detail::small_pool());
      const Variety y = rnd::pick(g, detail::small_pool());
      const Variety z = rnd::pick(g, detail::small_pool());
      const Variety w = rnd::pick(g, detail::small_pool());
      const KKernel e = rnd::kernel(g, x, y);
      const KKernel f = rnd::kernel(g, y, z);
      const KKernel h = rnd::kernel(g, z, w);
      bool ok = mu(k_compose(e, f)) == compose_graded(mu(e), mu(f));
      ok = ok && k_compose(k_compose(e, f), h) == k_compose(e, k_compose(f, h));
      const KClass a = e.kclass();
      const KClass b = rnd::kernel(g, x, y).kclass();
      ok = ok && euler_characteristic(a + b) == euler_characteristic(a) + euler_characteristic(b);
      const FactorSelection p = FactorSelection::first_of(x, y);
      const Cycle lhs = pushforward(p, intersect(a.ch(), todd_of_variety(product(x, y))));
      const Cycle rhs = intersect(projection_pushforward(p, a).ch(), todd_of_variety(x));
      ok = ok && lhs == rhs;
      t.record(ok, x.name() + "," + y.name() + "," + z.name() + "," + w.name());
    }
    return t.result("kernel instances");
  });
}

inline CheckResult motive_laws(const Options& o) {
  return detail::guarded("motive-cat: category laws, Karoubi, duality, orbit projection", [&] {
    rnd::Engine g(o.seed ^ 0x15u);
    detail::Tally t;
    const std::vector<Motive> objs = {unit_motive(), motive_of(Variety::projective_space(1)),
                                      motive_of(Variety::projective_space(2)), lefschetz_motive()};
    auto random_morphism = [&](const Motive& m, const Motive& n) {
      const auto c = rnd::pure_correspondence(g, m.variety(), n.variety(), n.twist() - m.twist());
      return MotiveMorphism(m, n, compose_graded(compose_graded(m.projector(), c), n.projector()));
    };
    for (int s = 0; s < std::max(o.samples / 2, 100); ++s) {
      const Motive& a = objs[static_cast<std::size_t>(rnd::uniform(g, 0, 3))];
      const Motive& b = objs[static_cast<std::size_t>(rnd::uniform(g, 0, 3))];
      const Motive& c = objs[static_cast<std::size_t>(rnd::uniform(g, 0, 3))];
      const Motive& d = objs[static_cast<std::size_t>(rnd::uniform(g, 0, 3))];
      const MotiveMorphism f = random_morphism(a, b);
      const MotiveMorphism h = random_morphism(b, c);
      const MotiveMorphism k = random_morphism(c, d);
      bool ok = compose_motive(compose_motive(f, h), k) == compose_motive(f, compose_motive(h, k));
      ok = ok && compose_motive(MotiveMorphism::identity(a), f) == f &&
           compose_motive(f, MotiveMorphism::identity(b)) == f;
      ok = ok && orbit_compose(OrbitMorphism::project(f), OrbitMorphism::project(h)) ==
                     OrbitMorphism::project(compose_motive(f, h));
      ok = ok && dual(tensor(a, b)) == tensor(dual(a), dual(b));
      t.record(ok, a.name() + " -> " + b.name() + " -> " + c.name() + " -> " + d.name());
    }
    // Karoubi splitting of the degree-0 idempotents of M(P^n).
    for (int n = 1; n <= 3; ++n) {
      const Motive m = motive_of(Variety::projective_space(n));
      for (int i = 0; i <= n; ++i) {
        const Splitting sp = split_idempotent(m, MotiveMorphism(m, m, diagonal_summand(n, i)));
        t.record(compose_motive(sp.section, sp.retraction) == MotiveMorphism::identity(sp.image) &&
                     compose_motive(sp.retraction, sp.section).corr() == diagonal_summand(n, i),
                 "split e_" + std::to_string(i) + " on P" + std::to_string(n));
      }
    }
    return t.result("morphism instances");
  });
}

/// In these conventions T = (Spec K, -1) is isomorphic to L and T^v to L^v,
/// while Hom(T, L^v) vanishes.
inline CheckResult tate_lefschetz() {
  return detail::guarded("motive-cat: Tate vs Lefschetz", [] {
    detail::Tally t;
    const Variety p1 = Variety::projective_space(1);
    const Variety pt = Variety::point();
    const Motive tm = tate_motive();
    const Motive l = lefschetz_motive();
    const Motive tv = dual(tm);
    const Motive lv = dual(l);
    const MotiveMorphism a(tm, l, GradedCorrespondence(pt, p1, Cycle::point_class(p1)));
    const MotiveMorphism b(l, tm, GradedCorrespondence(p1, pt, Cycle::one(p1)));
    t.record(are_mutually_inverse(a, b), "T = L");
    const MotiveMorphism c(tv, lv, GradedCorrespondence(pt, p1, Cycle::one(p1)));
    const MotiveMorphism d(lv, tv, GradedCorrespondence(p1, pt, Cycle::point_class(p1)));
    t.record(are_mutually_inverse(c, d), "T^v = L^v");
    const int deg = lv.twist() - tm.twist();
    const int codim = pt.dim() + deg;
    const bool hom_vanishes = codim < 0 || codim > product(pt, p1).dim();
    t.record(hom_vanishes, "Hom(T, L^v) = 0 since its degree is " + std::to_string(deg));
    return t.result("explicit isomorphisms");
  });
}

inline std::vector<CheckResult> invariant_suite(const Options& o) {
  return {ring_laws(o), calculus_laws(o), characteristic_class_laws(o), k_shadow_laws(o), motive_laws(o),
          tate_lefschetz()};
}

}  // namespace chowmot::verify
