#include <doctest.h>

#include <set>

#include "fourierlab/catalog.hpp"
#include "fourierlab/errors.hpp"

using namespace fourierlab;

namespace {

std::string detail(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("registry ids are unique and cover the required identities") {
  const auto& all = list_identities();
  CHECK(all.size() >= 30);
  std::set<std::string> ids;
  for (const auto& id : all) CHECK(ids.insert(id.id).second);
  for (const char* required :
       {"sinc-sum-equals-sum-of-squares", "sinc-squared-quartic", "sawtooth-with-sinc-factor",
        "even-sawtooth-with-sinc-factor", "odd-sawtooth-with-sinc-factor", "even-sinc-sum", "odd-sinc-sum",
        "sinc-powers-times-sin3n", "sinc-powers-sawtooth", "quadratic-piece-left", "quadratic-piece-right",
        "cubic-piece-left", "cubic-piece-middle", "cubic-piece-right", "sinc-powers-times-cos", "third-power-plateau",
        "fourth-power-linear", "fifth-power-plateau", "sixth-power-linear", "alternating-sawtooth",
        "triple-angle-reduction", "alternating-cosine-parabola", "sine-squared-parabola", "third-fourth-power-at-one",
        "fifth-sixth-power-at-one", "alternating-sine-squared", "sinc-fourth-power-times-sin3n",
        "sinc-fourth-power-times-cos", "seventh-eighth-power-at-one", "sinc-power-7", "squared-series",
        "gregory-variant"}) {
    CAPTURE(required);
    CHECK(ids.count(required) == 1);
  }
  CHECK_THROWS_AS(find_identity("no-such-identity"), UnknownIdentity);
}

TEST_CASE("every identity passes in exact mode") {
  int exact = 0;
  for (const auto& id : list_identities()) {
    const VerificationReport r = verify_identity(id, CheckMode::exact);
    CAPTURE(id.id);
    CHECK(r.status == Status::pass);
    if (id.mode == VerificationMode::exact) ++exact;
  }
  CHECK(exact >= 30);
}

TEST_CASE("a sample of identities passes numerically") {
  for (const char* id : {"sinc-sum-equals-sum-of-squares", "even-sinc-sum", "sinc-fourth-power-times-cos",
                         "squared-series", "sawtooth-with-sinc-factor", "quadratic-function-coefficients"}) {
    CAPTURE(id);
    CHECK(verify_identity(id, CheckMode::numeric, 12, 100000).status == Status::pass);
  }
}

TEST_CASE("numeric-only entries say so in exact mode") {
  const VerificationReport r = verify_identity("squared-series", CheckMode::exact, 12, 100000);
  CHECK(r.status == Status::pass);
  CHECK(detail(r, "mode") == "numeric (identity is numeric-only)");
}

TEST_CASE("negative controls report the exact values") {
  const VerificationReport r = verify_identity("sinc-fourth-power-times-cos");
  CHECK(r.status == Status::pass);
  CHECK(detail(r, "(sin(n)/n)^4 cos(n)") == PiPoly::linear(Rational(-1, 2), Rational(23, 96)).str());
  CHECK(find_identity("seventh-eighth-power-at-one").expectation == Expectation::not_equal);
}

TEST_CASE("a perturbed right side fails") {
  Identity id = find_identity("sinc-sum-equals-sum-of-squares");
  id.rhs = XPolynomial({PiPoly::linear(Rational(-1, 2), Rational(1, 2)) + PiPoly(Rational(1, 1000000))});
  CHECK(verify_identity(id).status == Status::fail);

  Identity interval = find_identity("sawtooth-with-sinc-factor");
  interval.rhs = *interval.rhs + XPolynomial({PiPoly(Rational(1, 1000000))});
  CHECK(verify_identity(interval).status == Status::fail);
}

TEST_CASE("interval checks use interior points, endpoints and exterior points") {
  const VerificationReport r = verify_on_interval("sawtooth-with-sinc-factor", 5);
  CHECK(r.status == Status::pass);
  CHECK(detail(r, "sin(n) sin(nx)/n^2 at exterior x = 1/2") ==
        PiPoly::linear(Rational(-1, 4), Rational(1, 4)).str() + " differs from " +
            PiPoly::linear(Rational(-1, 4), Rational(1, 2)).str());
  CHECK(std::stoi(detail(r, "points checked")) >= 20);

  // An exterior point moved inside the validity interval no longer differs.
  Identity wrong = find_identity("sawtooth-with-sinc-factor");
  wrong.exterior.front().x = Angle(2);
  CHECK(verify_on_interval(wrong).status == Status::fail);
}

TEST_CASE("interior points lie strictly inside") {
  const Interval v{{Angle(1), true}, {Angle(Rational(-1), 2), true}};
  const auto points = interior_points(v, 5);
  CHECK(points.size() >= 5);
  for (const Angle& x : points) {
    CHECK(compare(x, v.lo.at) > 0);
    CHECK(compare(x, v.hi.at) < 0);
  }
  CHECK(v.contains(Angle(3)));
  CHECK_FALSE(v.contains(Angle(Rational(1, 2))));
  CHECK(v.str() == "[1, " + v.hi.at.str() + "]");
}

TEST_CASE("identities that are not in x are rejected by the interval check") {
  CHECK(verify_on_interval("even-sinc-sum").status == Status::error);
}
