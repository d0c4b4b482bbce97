#include <gtest/gtest.h>

#include "chowmot/constructions.hpp"
#include "chowmot/json_io.hpp"

using namespace chowmot;
namespace cj = chowmot::json;

namespace {

template <class T, class Read>
void expect_round_trip(const T& value, Read read) {
  const std::string once = cj::to_json(value).dump();
  const T back = read(cj::parse_text(once), "");
  EXPECT_EQ(back, value);
  EXPECT_EQ(cj::to_json(back).dump(), once);
}

std::string parse_error_message(const std::string& text) {
  try {
    (void)cj::cycle_from_json(cj::parse_text(text));
  } catch (const parse_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Json, CycleFormatIsSortedAndLowestTerms) {
  const Variety v({1, 2});
  Cycle c = Cycle::zero(v);
  c.add_term({1, 2}, Rational(mpz_class(6), mpz_class(4)));
  c.add_term({0, 0}, Rational(-1));
  c.add_term({0, 1}, Rational(2));
  EXPECT_EQ(cj::to_json(c).dump(),
            R"({"terms":[{"coeff":"-1","exps":[0,0]},{"coeff":"2","exps":[0,1]},{"coeff":"3/2","exps":[1,2]}],)"
            R"("variety":{"factors":[1,2]}})");
}

TEST(Json, RoundTrips) {
  rnd::Engine g(51);
  for (int s = 0; s < 50; ++s) {
    const Variety v = rnd::variety(g, 3, 3, 6);
    expect_round_trip(rnd::cycle(g, v), cj::cycle_from_json);
  }
  const Variety p1 = Variety::projective_space(1);
  expect_round_trip(diagonal_correspondence(p1), cj::correspondence_from_json);
  expect_round_trip(tangent_class(Variety({1, 2})), cj::bundle_from_json);
  expect_round_trip(BundleClass(p1, -2, Cycle::one(p1)), cj::bundle_from_json);
  expect_round_trip(KClass::of_bundle(line_bundle(p1, {3})), cj::kclass_from_json);
  expect_round_trip(identity_kernel(Variety::projective_space(2)), cj::kernel_from_json);
  expect_round_trip(lefschetz_motive(), cj::motive_from_json);
  expect_round_trip(tate_motive(), cj::motive_from_json);
  expect_round_trip(MotiveMorphism::identity(motive_of(p1)), cj::motive_morphism_from_json);
  const Motive m = motive_of(p1);
  expect_round_trip(OrbitMorphism::from_graded(m, m, mu(twisted_identity_kernel(p1, {2}))), cj::orbit_from_json);
}

TEST(Json, IntegerCoefficientsAccepted) {
  const Cycle c = cj::cycle_from_json(cj::parse_text(R"({"variety":{"factors":[1]},"terms":[{"exps":[1],"coeff":3}]})"));
  EXPECT_EQ(c, Rational(3) * Cycle::hyperplane(Variety::projective_space(1), 0));
}

TEST(Json, ErrorsCarryLocations) {
  EXPECT_NE(parse_error_message(R"({"variety": {"factors": [1]}, "terms": [)").find("byte"), std::string::npos);
  EXPECT_NE(parse_error_message(R"({"terms": []})").find("missing field \"variety\""), std::string::npos);
  EXPECT_NE(parse_error_message(R"({"variety":{"factors":[1]},"terms":[{"exps":[2],"coeff":"1"}]})")
                .find("/terms/0/exps/0"),
            std::string::npos);
  EXPECT_NE(parse_error_message(
                R"({"variety":{"factors":[1]},"terms":[{"exps":[1],"coeff":"1"},{"exps":[1],"coeff":"2"}]})")
                .find("duplicate"),
            std::string::npos);
  EXPECT_NE(parse_error_message(R"({"variety":{"factors":[1]},"terms":[{"exps":[1],"coeff":"1/0"}]})")
                .find("/terms/0/coeff"),
            std::string::npos);
  EXPECT_NE(parse_error_message(R"({"variety":{"factors":[1]},"terms":[{"exps":[1],"coeff":1.5}]})")
                .find("coeff"),
            std::string::npos);
  EXPECT_NE(parse_error_message(R"({"variety":{"factors":[-1]},"terms":[]})").find("/variety/factors"),
            std::string::npos);
  EXPECT_NE(parse_error_message(R"({"variety":{"factors":[1,1]},"terms":[{"exps":[1],"coeff":"1"}]})")
                .find("expected 2 exponents"),
            std::string::npos);
}

TEST(Json, OrbitKeysMustBeIntegers) {
  const Motive m = motive_of(Variety::projective_space(1));
  nlohmann::json j = cj::to_json(OrbitMorphism::identity(m));
  j["components"]["x1"] = j["components"]["0"];
  EXPECT_THROW(cj::orbit_from_json(j), parse_error);
}

TEST(Json, SemanticErrorsStayDomainErrors) {
  // A well-formed cycle on the wrong variety for a correspondence.
  const auto j = cj::parse_text(
      R"({"source":{"factors":[1]},"target":{"factors":[2]},"cycle":{"variety":{"factors":[1,1]},"terms":[]}})");
  EXPECT_THROW(cj::correspondence_from_json(j), domain_error);
}
