#include <doctest.h>

#include "lpkit/d4.hpp"
#include "support/corpus.hpp"
#include "support/identities.hpp"

using namespace lpkit;
using testkit::Rng;

namespace {

Scalar rat(const char* text) { return Field::rationals()->parse(text); }

}  // namespace

TEST_CASE("K3 end entries vanish") {
  const EndEntries ee = end_entries(testkit::k3());
  CHECK(ee.a0.is_zero());
  CHECK(ee.ad.is_zero());
  CHECK(ee.as0.is_zero());
  CHECK(ee.asd.is_zero());
  CHECK(ee.th0 == rat("3"));
  CHECK(ee.thd == rat("-3"));
}

TEST_CASE("end params of K3 and its ddown image") {
  const ParameterArray k3 = testkit::k3();
  const EndParams ep = end_params(k3);
  CHECK(ep.varphi1 == rat("-6"));
  CHECK(ep.varphid == rat("-6"));
  CHECK(ep.phi1 == rat("6"));
  CHECK(ep.phid == rat("6"));
  CHECK(ep.phi1 != ep.varphi1);

  const EndParams swapped = end_params(lpkit::apply(k3, parse_word("D")));
  CHECK(swapped.varphi1 == rat("6"));
  CHECK(swapped.varphid == rat("6"));
  CHECK(swapped.phi1 == rat("-6"));
  CHECK(swapped.phid == rat("-6"));
}

TEST_CASE("omega of K3 agrees with the type II closed form") {
  const ParameterArray k3 = testkit::k3();
  CHECK(omega(k3) == rat("2/3"));
  CHECK(omega_closed_form(LeonardType::II, std::nullopt, 3, k3.field) == rat("2/3"));
  CHECK(omega_closed_form(LeonardType::IV, std::nullopt, 3, Field::finite(2, 2))
            .is_zero());
  CHECK(omega_closed_form(LeonardType::IIIMinus, std::nullopt, 5, k3.field) ==
        rat("2"));
  CHECK(omega_closed_form(LeonardType::IIIPlus, std::nullopt, 4, k3.field) ==
        rat("3/2"));
  // the II row divides by d: impossible for genuine arrays, an error on raw input
  try {
    (void)omega_closed_form(LeonardType::II, std::nullopt, 13, Field::finite(13, 1));
    FAIL("expected CharacteristicDividesD");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CharacteristicDividesD);
  }
  try {
    (void)omega_closed_form(LeonardType::I, std::nullopt, 3, k3.field);
    FAIL("expected MissingQ");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingQ);
  }
}

TEST_CASE("delta and gammas of K3") {
  const EndScalars es = delta_and_gammas(end_entries(testkit::k3()));
  CHECK(es.delta == rat("-18"));
  CHECK(es.gamma[0] == rat("-162"));
  CHECK(es.gamma[1] == rat("-162"));
  CHECK(es.gamma[2] == rat("162"));
  CHECK(es.gamma[3] == rat("162"));
  CHECK_FALSE(es.omega.has_value());

  const EndScalars with_type =
      delta_and_gammas(end_entries(testkit::k3()), classify_type(testkit::k3()));
  REQUIRE(with_type.omega.has_value());
  CHECK(*with_type.omega == rat("2/3"));
}

TEST_CASE("restriction holds and breaks as expected") {
  EndEntries ee = end_entries(testkit::k3());
  CHECK(check_restriction(ee));
  ee.a0 = rat("1");
  CHECK_FALSE(check_restriction(ee));
  // the left cross-ratio becomes (1-3)(0+3) / ((1+3)(0-3)) = 1/2
  CHECK(restriction_cross_ratio(ee) == rat("1/2"));
}

TEST_CASE("the common cross-ratio value is varphi_1 varphi_d / (phi_1 phi_d)") {
  // brute-force resolution of the sign convention on three independently
  // generated arrays plus K3 (where the cross-ratio is +1, not -1)
  const ParameterArray k3 = testkit::k3();
  CHECK(restriction_cross_ratio(end_entries(k3)) == rat("1"));

  Rng rng(23);
  const std::vector<ParameterArray> sample = {
      testkit::make_array(Field::rationals(), 4, rat("2"), rng),
      testkit::make_array(Field::finite(13, 1), 5,
                          Field::finite(13, 1)->from_int(6), rng),
      testkit::make_array(Field::finite(101, 1), 3,
                          Field::finite(101, 1)->from_int(-2), rng),
  };
  for (const ParameterArray& pa : sample) {
    const EndEntries ee = end_entries(pa);
    const EndParams ep = end_params(pa);
    const Scalar direct = restriction_cross_ratio(ee);
    CHECK(direct == ep.varphi1 * ep.varphid / (ep.phi1 * ep.phid));
    const Scalar star_side = ((ee.as0 - ee.ths0) * (ee.asd - ee.thsd)) /
                             ((ee.as0 - ee.thsd) * (ee.asd - ee.ths0));
    CHECK(direct == star_side);
  }
}

TEST_CASE("solve_fourth_end_entry recovers each position on K3") {
  const EndEntries ee = end_entries(testkit::k3());
  const std::array<Scalar, 4> truth{ee.a0, ee.ad, ee.as0, ee.asd};
  for (int missing = 0; missing < 4; ++missing) {
    std::array<std::optional<Scalar>, 4> known{truth[0], truth[1], truth[2],
                                               truth[3]};
    known[missing] = std::nullopt;
    const Scalar solved =
        solve_fourth_end_entry(ee.th0, ee.thd, ee.ths0, ee.thsd, known);
    CHECK(solved == truth[missing]);
  }
}

TEST_CASE("solve_fourth_end_entry on corpus ends satisfies the restriction") {
  int sampled = 0;
  for (const ParameterArray& pa : testkit::standard_corpus()) {
    if (++sampled > 10) break;
    const EndEntries ee = end_entries(pa);
    std::array<std::optional<Scalar>, 4> known{std::nullopt, ee.ad, ee.as0, ee.asd};
    EndEntries solved = ee;
    solved.a0 = solve_fourth_end_entry(ee.th0, ee.thd, ee.ths0, ee.thsd, known);
    CHECK(check_restriction(solved));
    CHECK(solved.a0 == ee.a0);
  }
}

TEST_CASE("solve_fourth_end_entry degenerate coefficient") {
  // crafted so the coefficient of a_0 vanishes:
  // (a_d-th_d)(a*_0-th*_d)(a*_d-th*_0) = (a_d-th_0)(a*_0-th*_0)(a*_d-th*_d)
  const FieldPtr q = Field::rationals();
  std::array<std::optional<Scalar>, 4> known{
      std::nullopt, rat("3"), rat("1"), rat("3/2")};
  try {
    (void)solve_fourth_end_entry(rat("0"), rat("2"), rat("0"), rat("2"), known);
    FAIL("expected DegenerateCoefficient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateCoefficient);
  }
}

TEST_CASE("degenerate ratios") {
  CHECK(degenerate_ratios(end_entries(testkit::gf13_degenerate())));
  CHECK_FALSE(degenerate_ratios(end_entries(testkit::k3())));
  CHECK(degenerate_ratios(end_entries(testkit::gf16_type_iv())));
}

TEST_CASE("identity suite on a corpus sample") {
  int sampled = 0;
  for (const ParameterArray& pa : testkit::standard_corpus()) {
    if (++sampled > 30) break;
    const auto failures = testkit::identity_failures(pa);
    CAPTURE(sampled);
    if (!failures.empty()) CAPTURE(failures.front());
    CHECK(failures.empty());
  }
  CHECK(testkit::identity_failures(testkit::gf16_type_iv()).empty());
  Rng rng(31);
  CHECK(testkit::identity_failures(
            testkit::make_type_iv_array(Field::finite(2, 2), rng))
            .empty());
}
