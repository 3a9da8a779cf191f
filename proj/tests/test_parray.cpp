#include <doctest.h>

#include "support/corpus.hpp"

using namespace lpkit;
using testkit::Rng;

namespace {

Scalar rat(const char* text) { return Field::rationals()->parse(text); }

}  // namespace

TEST_CASE("K3 validates with the expected report") {
  const ParameterArray k3 = testkit::k3();
  const ValidationReport report = validate(k3);
  CHECK(report.valid);
  CHECK(report.failures.empty());
  REQUIRE(report.vartheta.size() == 3);
  CHECK(report.vartheta[0] == rat("1"));
  CHECK(report.vartheta[1] == rat("4/3"));
  CHECK(report.vartheta[2] == rat("1"));
  REQUIRE(report.beta_plus_one.has_value());
  CHECK(*report.beta_plus_one == rat("3"));
  CHECK(report.witness_index == 2);
}

TEST_CASE("vartheta_1 is always 1") {
  for (const ParameterArray& pa : testkit::standard_corpus()) {
    const ValidationReport report = validate(pa);
    REQUIRE(!report.vartheta.empty());
    CHECK(report.vartheta[0] == pa.field->one());
  }
}

TEST_CASE("single-condition mutations are reported precisely") {
  ParameterArray broken = testkit::k3();
  broken.varphi[1] = broken.field->zero();
  ValidationReport report = validate(broken);
  CHECK_FALSE(report.valid);
  // the zero breaks condition (ii) at i = 2 and, as a side effect, the
  // condition-(iii) identity there; nothing else
  REQUIRE(report.failures.size() == 2);
  CHECK(report.failures[0].kind == FailureKind::NonzeroVarphi);
  CHECK(report.failures[0].i == 2);
  CHECK(report.failures[1].kind == FailureKind::EqIII);
  CHECK(report.failures[1].i == 2);

  broken = testkit::k3();
  broken.theta[1] = rat("3");
  report = validate(broken);
  CHECK_FALSE(report.valid);
  bool found = false;
  for (const auto& f : report.failures)
    if (f.kind == FailureKind::DistinctTheta && f.i == 0 && f.j == 1) found = true;
  CHECK(found);

  // breaking condition (iii) alone
  broken = testkit::k3();
  broken.varphi[1] = rat("1");
  report = validate(broken);
  CHECK_FALSE(report.valid);
  bool only_iii_iv = !report.failures.empty();
  for (const auto& f : report.failures)
    if (f.kind != FailureKind::EqIII && f.kind != FailureKind::EqIV)
      only_iii_iv = false;
  CHECK(only_iii_iv);
}

TEST_CASE("equal extreme eigenvalues leave vartheta undefined") {
  ParameterArray broken = testkit::k3();
  broken.theta[3] = broken.theta[0];
  const ValidationReport report = validate(broken);
  CHECK_FALSE(report.valid);
  CHECK(report.vartheta.empty());  // the partial sums would divide by zero
  bool found = false;
  for (const auto& f : report.failures)
    if (f.kind == FailureKind::DistinctTheta && f.i == 0 && f.j == 3) found = true;
  CHECK(found);
}

TEST_CASE("small diameters validate with condition (v) vacuous") {
  const FieldPtr q = Field::rationals();
  const ParameterArray pa = complete_from_seed(
      q, 2, {rat("0"), rat("1"), rat("3")}, {rat("0"), rat("2"), rat("3")},
      rat("1"));
  const ValidationReport report = validate(pa);
  CHECK(report.valid);
  CHECK_FALSE(report.beta_plus_one.has_value());
  CHECK(report.vartheta.size() == 2);
}

TEST_CASE("fundamental_beta") {
  CHECK(fundamental_beta(testkit::k3()) == rat("2"));

  const ParameterArray gf13 = testkit::gf13_degenerate();
  CHECK(fundamental_beta(gf13) == gf13.field->zero());

  ParameterArray small = testkit::k3();
  small.d = 2;
  small.theta = {rat("3"), rat("1"), rat("-1")};
  small.theta_star = small.theta;
  small.varphi = {rat("1"), rat("1")};
  small.phi = {rat("1"), rat("1")};
  CHECK_THROWS_AS((void)fundamental_beta(small), Error);
  try {
    (void)fundamental_beta(small);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DiameterTooSmall);
  }
}

TEST_CASE("classify_type on the canonical arrays") {
  const TypeInfo k3 = classify_type(testkit::k3());
  CHECK(k3.type_tag == LeonardType::II);
  CHECK(k3.beta == rat("2"));
  CHECK_FALSE(k3.degenerate);
  REQUIRE(k3.q_candidates.size() == 1);
  CHECK(k3.q_candidates[0] == rat("1"));

  const ParameterArray gf13 = testkit::gf13_degenerate();
  const TypeInfo deg = classify_type(gf13);
  CHECK(deg.type_tag == LeonardType::I);
  CHECK(deg.degenerate);
  REQUIRE(deg.q_candidates.size() == 2);
  CHECK(deg.q_candidates[0] == gf13.field->from_int(5));
  CHECK(deg.q_candidates[1] == gf13.field->from_int(8));

  // beta = 0 over GF(4) is type IV
  Rng rng(3);
  const ParameterArray iv = testkit::make_type_iv_array(Field::finite(2, 2), rng);
  const TypeInfo iv_info = classify_type(iv);
  CHECK(iv_info.type_tag == LeonardType::IV);
  CHECK(iv_info.beta.is_zero());
  CHECK(iv_info.degenerate);
}

TEST_CASE("type table is total and consistent") {
  const FieldPtr q = Field::rationals();
  const FieldPtr gf13 = Field::finite(13, 1);
  const FieldPtr gf4 = Field::finite(2, 2);
  CHECK(type_from_beta(q->from_int(2), 5) == LeonardType::II);
  CHECK(type_from_beta(q->from_int(-2), 4) == LeonardType::IIIPlus);
  CHECK(type_from_beta(q->from_int(-2), 5) == LeonardType::IIIMinus);
  CHECK(type_from_beta(q->from_int(0), 5) == LeonardType::I);
  CHECK(type_from_beta(q->from_int(7), 5) == LeonardType::I);
  CHECK(type_from_beta(gf13->from_int(2), 6) == LeonardType::II);
  CHECK(type_from_beta(gf13->from_int(11), 6) == LeonardType::IIIPlus);
  CHECK(type_from_beta(gf13->from_int(5), 6) == LeonardType::I);
  // char 2: 2 = -2 = 0, so beta = 0 is type IV and everything else type I
  CHECK(type_from_beta(gf4->zero(), 3) == LeonardType::IV);
  CHECK(type_from_beta(gf4->one(), 3) == LeonardType::I);
  CHECK(type_from_beta(gf4->gf_from_coeffs({0, 1}), 3) == LeonardType::I);
}

TEST_CASE("classify matches the corpus generator's intent") {
  for (const ParameterArray& pa : testkit::standard_corpus()) {
    const TypeInfo info = classify_type(pa);
    const Scalar two = pa.field->from_int(2);
    switch (info.type_tag) {
      case LeonardType::II: CHECK(info.beta == two); break;
      case LeonardType::IIIPlus:
        CHECK(info.beta == -two);
        CHECK(pa.d % 2 == 0);
        break;
      case LeonardType::IIIMinus:
        CHECK(info.beta == -two);
        CHECK(pa.d % 2 == 1);
        break;
      case LeonardType::I:
        CHECK(info.beta != two);
        CHECK(info.beta != -two);
        break;
      case LeonardType::IV: CHECK(pa.field->characteristic() == 2); break;
    }
  }
}

TEST_CASE("complete_from_seed reproduces K3") {
  const ParameterArray k3 = testkit::k3();
  const ParameterArray rebuilt = complete_from_seed(
      k3.field, 3, k3.theta, k3.theta_star, rat("6"));
  CHECK(rebuilt == k3);
}

TEST_CASE("complete_from_seed reports vanishing parameters") {
  const ParameterArray k3 = testkit::k3();
  try {
    (void)complete_from_seed(k3.field, 3, k3.theta, k3.theta_star, rat("12"));
    FAIL("expected ZeroParameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroParameter);
    CHECK(e.detail().find("varphi_1") != std::string::npos);
  }
}

TEST_CASE("complete_from_seed over GF(13) gives the degenerate array") {
  const ParameterArray pa = testkit::gf13_degenerate();
  CHECK(validate(pa).valid);
  CHECK(classify_type(pa).degenerate);
  // frozen values: varphi = (12, 8, 3), phi = (1, 2, 1)
  const FieldPtr f = pa.field;
  CHECK(pa.varphi == std::vector<Scalar>{f->from_int(12), f->from_int(8), f->from_int(3)});
  CHECK(pa.phi == std::vector<Scalar>{f->from_int(1), f->from_int(2), f->from_int(1)});
}

TEST_CASE("complete_from_seed rejects bad eigenvalue data") {
  const FieldPtr q = Field::rationals();
  const std::vector<Scalar> bad = {rat("1"), rat("1"), rat("2"), rat("3")};
  const std::vector<Scalar> good = {rat("3"), rat("1"), rat("-1"), rat("-3")};
  CHECK_THROWS_AS((void)complete_from_seed(q, 3, bad, good, rat("1")), Error);
  // condition (v) violated: theta not beta-recurrent
  const std::vector<Scalar> skew = {rat("0"), rat("1"), rat("3"), rat("4")};
  const std::vector<Scalar> lin = {rat("0"), rat("1"), rat("2"), rat("3")};
  try {
    (void)complete_from_seed(q, 3, skew, lin, rat("1"));
    FAIL("expected NotConstantRatio");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConstantRatio);
  }
}

TEST_CASE("completion agrees with validation on the whole corpus") {
  for (const ParameterArray& pa : testkit::standard_corpus()) {
    const ValidationReport report = validate(pa);
    CHECK(report.valid);
    // rebuilding from the seed phi_1 reproduces the array exactly
    const ParameterArray rebuilt =
        complete_from_seed(pa.field, pa.d, pa.theta, pa.theta_star, pa.phi[0]);
    CHECK(rebuilt == pa);
  }
}
