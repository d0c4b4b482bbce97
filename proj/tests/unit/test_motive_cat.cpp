#include <gtest/gtest.h>

#include "chowmot/constructions.hpp"
#include "chowmot/motive.hpp"
#include "chowmot/orbit.hpp"
#include "chowmot/verify.hpp"

using namespace chowmot;

namespace {

const Variety kPt = Variety::point();
const Variety kP1 = Variety::projective_space(1);
const Variety kP2 = Variety::projective_space(2);
const Variety kP1P1({1, 1});

Cycle mono(const Variety& v, Exponents e, const Rational& c = Rational(1)) { return Cycle::monomial(v, e, c); }

GradedCorrespondence alpha() { return {kP1, kP1, mono(kP1P1, {1, 0})}; }
GradedCorrespondence beta() { return {kP1, kP1, mono(kP1P1, {0, 1})}; }

MotiveMorphism sandwiched(rnd::Engine& g, const Motive& m, const Motive& n) {
  const auto c = rnd::pure_correspondence(g, m.variety(), n.variety(), n.twist() - m.twist());
  return {m, n, compose_graded(compose_graded(m.projector(), c), n.projector())};
}

}  // namespace

TEST(Motive, MotiveOf) {
  EXPECT_EQ(motive_of(kPt), unit_motive());
  EXPECT_EQ(motive_of(kPt), Motive());
  EXPECT_EQ(motive_of(kP1).idempotent(), mono(kP1P1, {1, 0}) + mono(kP1P1, {0, 1}));
  const Variety p2p2({2, 2});
  EXPECT_EQ(motive_of(kP2).idempotent(), mono(p2p2, {2, 0}) + mono(p2p2, {1, 1}) + mono(p2p2, {0, 2}));
}

TEST(Motive, Validation) {
  EXPECT_THROW(Motive(kP1, 0, Rational(2) * diagonal_class(kP1)), invalid_input);
  EXPECT_THROW(Motive(kP1, 0, Cycle::one(kP1P1)), invalid_input);
  EXPECT_NO_THROW(Motive(kP1, 3, mono(kP1P1, {1, 0})));
}

TEST(Motive, TwistDualTensor) {
  const Motive m = motive_of(kP1);
  EXPECT_EQ(tate_twist(m, 0), m);
  EXPECT_EQ(tate_twist(m, 2).twist(), -2);
  EXPECT_EQ(dual(dual(m)), m);
  EXPECT_EQ(dual(m).twist(), 1);
  EXPECT_EQ(tensor(unit_motive(), m), m);
  EXPECT_EQ(tensor(m, unit_motive()), m);
  EXPECT_EQ(tensor(motive_of(kP1), motive_of(kP2)), motive_of(product(kP1, kP2)));
  const Motive l = lefschetz_motive();
  EXPECT_EQ(dual(tensor(l, m)), tensor(dual(l), dual(m)));
}

TEST(MotiveMorphism, Validation) {
  const Motive m = motive_of(kP1);
  const Motive l = lefschetz_motive();
  EXPECT_THROW(MotiveMorphism(m, m, GradedCorrespondence(kP1, kP1, Cycle::one(kP1P1))), invalid_input);
  // alpha is not sandwiched by beta.
  EXPECT_THROW(MotiveMorphism(l, l, alpha()), invalid_input);
  EXPECT_THROW(MotiveMorphism(m, motive_of(kP2), diagonal_correspondence(kP1)), domain_error);
}

TEST(MotiveMorphism, CategoryLaws) {
  rnd::Engine g(41);
  const std::vector<Motive> objs = {unit_motive(), motive_of(kP1), motive_of(kP2), lefschetz_motive(),
                                    tate_twist(motive_of(kP1), 1)};
  for (int s = 0; s < 100; ++s) {
    const Motive& a = objs[static_cast<std::size_t>(rnd::uniform(g, 0, 4))];
    const Motive& b = objs[static_cast<std::size_t>(rnd::uniform(g, 0, 4))];
    const Motive& c = objs[static_cast<std::size_t>(rnd::uniform(g, 0, 4))];
    const Motive& d = objs[static_cast<std::size_t>(rnd::uniform(g, 0, 4))];
    const MotiveMorphism f = sandwiched(g, a, b);
    const MotiveMorphism h = sandwiched(g, b, c);
    const MotiveMorphism k = sandwiched(g, c, d);
    ASSERT_EQ(compose_motive(compose_motive(f, h), k), compose_motive(f, compose_motive(h, k)));
    ASSERT_EQ(compose_motive(MotiveMorphism::identity(a), f), f);
    ASSERT_EQ(compose_motive(f, MotiveMorphism::identity(b)), f);
    ASSERT_EQ(compose_motive(f, MotiveMorphism::zero(b, c)), MotiveMorphism::zero(a, c));
    ASSERT_EQ(compose_motive(f, h).degree(), c.twist() - a.twist());
  }
}

TEST(MotiveMorphism, ObjectMismatch) {
  const Motive m = motive_of(kP1);
  EXPECT_THROW(compose_motive(MotiveMorphism::identity(m), MotiveMorphism::identity(lefschetz_motive())),
               domain_error);
}

TEST(Split, IdentityZeroAlphaBeta) {
  const Motive m = motive_of(kP1);
  const Splitting id = split_idempotent(m, MotiveMorphism::identity(m));
  EXPECT_EQ(id.image, m);

  const Splitting z = split_idempotent(m, MotiveMorphism::zero(m, m));
  EXPECT_EQ(z.image, zero_motive());
  EXPECT_TRUE(z.image.is_zero());

  const Splitting sb = split_idempotent(m, MotiveMorphism(m, m, beta()));
  EXPECT_EQ(sb.image, lefschetz_motive());
  EXPECT_EQ(compose_motive(sb.section, sb.retraction), MotiveMorphism::identity(sb.image));
  EXPECT_EQ(compose_motive(sb.retraction, sb.section).corr(), beta());

  const Splitting sa = split_idempotent(m, MotiveMorphism(m, m, alpha()));
  const MotiveMorphism u(unit_motive(), sa.image, structure_correspondence(kP1));
  const MotiveMorphism v(sa.image, unit_motive(), point_correspondence(kP1));
  EXPECT_TRUE(are_mutually_inverse(u, v));
}

TEST(Split, RejectsNonIdempotent) {
  const Motive m = motive_of(kP1);
  const MotiveMorphism twice(m, m, Rational(2) * diagonal_correspondence(kP1));
  EXPECT_THROW(split_idempotent(m, twice), invalid_input);
  EXPECT_THROW(split_idempotent(lefschetz_motive(), MotiveMorphism::identity(m)), invalid_input);
}

TEST(Lefschetz, DecompositionIdentities) {
  EXPECT_EQ(compose_graded(alpha(), alpha()), alpha());
  EXPECT_EQ(compose_graded(beta(), beta()), beta());
  EXPECT_TRUE(compose_graded(alpha(), beta()).is_zero());
  EXPECT_TRUE(compose_graded(beta(), alpha()).is_zero());
  EXPECT_EQ(alpha() + beta(), diagonal_correspondence(kP1));
  const auto r = verify::lefschetz_decomposition_check();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Lefschetz, TateComparison) {
  const auto r = verify::tate_lefschetz();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(FormalSum, MatrixShapes) {
  const Motive m = motive_of(kP1);
  const FormalSum s{{m}};
  const FormalSum t{{unit_motive(), lefschetz_motive()}};
  EXPECT_THROW(FormalMorphism(s, t, {{MotiveMorphism::zero(m, unit_motive())}}), invalid_input);
  EXPECT_THROW(FormalMorphism(s, t, {{MotiveMorphism::zero(m, unit_motive())}, {MotiveMorphism::identity(m)}}),
               domain_error);
}

TEST(Orbit, IdentityAndConcentrated) {
  rnd::Engine g(42);
  const Motive m = motive_of(kP1);
  const OrbitMorphism id = OrbitMorphism::identity(m);
  const OrbitMorphism f = OrbitMorphism::from_graded(m, m, rnd::correspondence(g, kP1, kP1));
  EXPECT_EQ(orbit_compose(id, f), f);
  EXPECT_EQ(orbit_compose(f, id), f);

  const GradedCorrespondence c1(kP1, kP1, mono(kP1P1, {1, 1}));
  const GradedCorrespondence cm1(kP1, kP1, Cycle::one(kP1P1));
  const OrbitMorphism a(m, m, {{1, c1}});
  const OrbitMorphism b(m, m, {{-1, cm1}});
  const OrbitMorphism ab = orbit_compose(a, b);
  ASSERT_EQ(ab.components().size(), 1u);
  EXPECT_EQ(ab.components().begin()->first, 0);
}

TEST(Orbit, ComponentValidation) {
  const Motive m = motive_of(kP1);
  EXPECT_THROW(OrbitMorphism(m, m, {{0, GradedCorrespondence(kP1, kP1, Cycle::one(kP1P1))}}), invalid_input);
  EXPECT_THROW(OrbitMorphism(m, lefschetz_motive(), {{0, alpha()}}), invalid_input);
  const OrbitMorphism z(m, m, {{3, GradedCorrespondence::zero(kP1, kP1)}});
  EXPECT_TRUE(z.components().empty());
}

TEST(Orbit, IndexMatchesTwistOffset) {
  // Hom(L(1), 1): correspondences P1 -> pt of degree 1 + i sit at index i.
  const Motive l1 = tate_twist(lefschetz_motive(), 1);
  const GradedCorrespondence c(kP1, kPt, Cycle::one(kP1));
  const OrbitMorphism f = OrbitMorphism::from_graded(l1, unit_motive(), c);
  ASSERT_EQ(f.components().size(), 1u);
  EXPECT_EQ(f.components().begin()->first, -2);
}

TEST(Orbit, AssociativityAndProjection) {
  rnd::Engine g(43);
  const Motive m = motive_of(kP1);
  for (int s = 0; s < 50; ++s) {
    const auto f = OrbitMorphism::from_graded(m, m, rnd::correspondence(g, kP1, kP1));
    const auto h = OrbitMorphism::from_graded(m, m, rnd::correspondence(g, kP1, kP1));
    const auto k = OrbitMorphism::from_graded(m, m, rnd::correspondence(g, kP1, kP1));
    ASSERT_EQ(orbit_compose(orbit_compose(f, h), k), orbit_compose(f, orbit_compose(h, k)));
    const MotiveMorphism p = sandwiched(g, m, m);
    const MotiveMorphism q = sandwiched(g, m, m);
    ASSERT_EQ(orbit_compose(OrbitMorphism::project(p), OrbitMorphism::project(q)),
              OrbitMorphism::project(compose_motive(p, q)));
  }
}

TEST(Rigidify, IdentityPair) {
  const Motive m = motive_of(kP2);
  const auto [f0, g0] = degree_zero_rigidify(OrbitMorphism::identity(m), OrbitMorphism::identity(m));
  EXPECT_EQ(f0, MotiveMorphism::identity(m));
  EXPECT_EQ(g0, MotiveMorphism::identity(m));
}

TEST(Rigidify, UnipotentPerturbations) {
  rnd::Engine g(44);
  for (int s = 0; s < 30; ++s) {
    const int n = 1 + s % 2;
    const Motive m = motive_of(Variety::projective_space(n));
    const PerturbedPair pr = perturbed_pair(g, n, +1);
    const auto f = OrbitMorphism::from_graded(m, m, pr.forward);
    const auto h = OrbitMorphism::from_graded(m, m, pr.backward);
    const auto [f0, g0] = degree_zero_rigidify(f, h);
    ASSERT_TRUE(are_mutually_inverse(f0, g0));
  }
}

TEST(Rigidify, ErrorPaths) {
  rnd::Engine g(45);
  const Motive m = motive_of(kP1);
  const PerturbedPair neg = perturbed_pair(g, 1, -1);
  EXPECT_THROW(degree_zero_rigidify(OrbitMorphism::from_graded(m, m, neg.forward),
                                    OrbitMorphism::from_graded(m, m, neg.backward)),
               support_condition_error);
  const OrbitMorphism twice = OrbitMorphism::from_graded(m, m, Rational(2) * diagonal_correspondence(kP1));
  EXPECT_THROW(degree_zero_rigidify(twice, twice), precondition_error);
  EXPECT_THROW(degree_zero_rigidify(OrbitMorphism::identity(m), OrbitMorphism::identity(lefschetz_motive())),
               domain_error);
}

TEST(Orlov, IdentityKernel) {
  const KKernel id = identity_kernel(kP1);
  const OrlovResult r = orlov_pipeline(id, id);
  EXPECT_EQ(r.verdict, OrlovVerdict::exact_isomorphism);
  ASSERT_TRUE(r.forward_degree_zero.has_value());
  EXPECT_EQ(r.forward_degree_zero->corr(), diagonal_correspondence(kP1));
}

TEST(Orlov, TwistedDiagonal) {
  for (long d = -2; d <= 2; ++d) {
    const KKernel e = twisted_identity_kernel(kP1, {d});
    const KKernel f = transported_inverse(e);
    EXPECT_EQ(f, twisted_identity_kernel(kP1, {-d})) << d;
    EXPECT_EQ(mu(e).cycle(), diagonal_class(kP1) + Rational(d) * mono(kP1P1, {1, 1}));
    const OrlovResult r = orlov_pipeline(e, f);
    EXPECT_EQ(r.verdict, OrlovVerdict::exact_isomorphism) << d;
    EXPECT_GE(r.forward_support_floor, 1);
  }
}

TEST(Orlov, TateShiftedControl) {
  const GradedCorrespondence s = tate_shift_involution();
  EXPECT_EQ(compose_graded(s, s), diagonal_correspondence(kP1));
  const KKernel e = twisted_identity_kernel(kP1, {1});
  const auto [es, fs] = tate_shifted_pair(e, transported_inverse(e));
  const OrlovResult r = orlov_pipeline(es, fs);
  EXPECT_TRUE(r.mutually_inverse);
  EXPECT_EQ(r.verdict, OrlovVerdict::tate_twist_only);
  EXPECT_EQ(r.forward_support_floor, 0);
  EXPECT_FALSE(r.forward_degree_zero.has_value());
}

TEST(Orlov, NotEquivalentAndDimensionMismatch) {
  const KKernel e = twisted_identity_kernel(kP1, {1});
  EXPECT_EQ(orlov_pipeline(e, e).verdict, OrlovVerdict::not_equivalent);
  EXPECT_THROW(orlov_pipeline(KKernel::zero(kP1, kP1P1), KKernel::zero(kP1P1, kP1)), precondition_error);
  EXPECT_THROW(orlov_pipeline(KKernel::zero(kP1, kP2), KKernel::zero(kP1, kP2)), domain_error);
}

TEST(NcHom, IdentityZeroFunctoriality) {
  rnd::Engine g(46);
  const KKernel id = identity_kernel(kP2);
  const KKernel e = rnd::kernel(g, kP2, kP1);
  EXPECT_EQ(nc_compose(id, e), e);
  EXPECT_EQ(nc_hom(KKernel::zero(kP1, kP2)), KClass::zero(product(kP1, kP2)));
  for (int s = 0; s < 20; ++s) {
    const KKernel a = rnd::kernel(g, kP1, kP1P1);
    const KKernel b = rnd::kernel(g, kP1P1, kP2);
    ASSERT_EQ(mu(KKernel(kP1, kP2, nc_hom(nc_compose(a, b)))), compose_graded(mu(a), mu(b)));
  }
}

TEST(Compatibility, IdentityRandomAndCorrupted) {
  for (const Variety& x : {kP1, kP2, kP1P1}) {
    EXPECT_TRUE(compatibility_check(identity_kernel(x))) << x.name();
    EXPECT_FALSE(compatibility_check(identity_kernel(x), CompatPath::omit_sqrt_todd)) << x.name();
  }
  rnd::Engine g(47);
  const std::vector<Variety> pool = {kP1, kP1P1, kP2};
  for (int s = 0; s < 100; ++s) {
    ASSERT_TRUE(compatibility_check(rnd::kernel(g, rnd::pick(g, pool), rnd::pick(g, pool))));
  }
}
