#include <doctest.h>

#include <cmath>

#include "fourierlab/errors.hpp"
#include "fourierlab/reconstruct.hpp"
#include "functions.hpp"

using namespace fourierlab;

namespace {

CoefficientFormula kink_coefficients() {
  return expand_products(trig_factor(TrigKind::sin, AngleExpr{Angle(1), 0}) * inverse_n_power(2));
}

SampleSet kink_samples() {
  return sample_series(sine_series(kink_coefficients()), {0, M_PI, 2000, true}, 100000, "kink");
}

}  // namespace

TEST_CASE("hypothesis validation") {
  SegmentationHypothesis h;
  h.breakpoints = {Angle(2), Angle(1)};
  CHECK_THROWS_AS(h.validate(), InvalidArgument);
  h.breakpoints = {Angle(1), Angle(2)};
  h.validate();
  CHECK(h.segments() == 3);
  CHECK(h.degrees == std::vector<int>{1, 1, 1});
  CHECK(h.continuity == std::vector<int>{0, 0});
  h.breakpoints = {Angle(4)};
  h.degrees.clear();
  h.continuity.clear();
  CHECK_THROWS_AS(h.validate(), InvalidArgument);
}

TEST_CASE("breakpoint detection finds the kink at 1") {
  const SampleSet s = kink_samples();
  const SegmentationHypothesis h = detect_breakpoints(s);
  REQUIRE(h.breakpoints.size() == 1);
  CHECK(h.breakpoints[0] == Angle(1));
  CHECK(h.continuity[0] == 0);
}

TEST_CASE("breakpoint detection on a smooth series finds nothing") {
  const CoefficientFormula c = expand_products(inverse_n_power(1));
  const SampleSet s = sample_series(sine_series(c), {0, M_PI, 1000, true}, 100000);
  CHECK(detect_breakpoints(s).breakpoints.empty());
}

TEST_CASE("constrained fit recovers the kink coefficients") {
  const SampleSet s = kink_samples();
  SegmentationHypothesis h;
  h.breakpoints = {Angle(1)};
  h.degrees = {1, 1};
  h.continuity = {0};
  FitConstraints constraints;
  constraints.zero_at_0 = true;
  constraints.zero_at_pi = true;
  const FitResult fit = fit_segments(s, h, constraints);
  REQUIRE(fit.segments.size() == 2);
  CHECK(fit.segments[0].coeffs[1] == doctest::Approx((M_PI - 1) / 2).epsilon(1e-8));
  CHECK(fit.segments[1].coeffs[0] == doctest::Approx(M_PI / 2).epsilon(1e-8));
  CHECK(fit.segments[1].coeffs[1] == doctest::Approx(-0.5).epsilon(1e-8));
  CHECK(fit.rms < 1e-8);

  const PiecewiseFunction f = recognize_coefficients(fit, pi_power_basis(1));
  CHECK(verify_roundtrip(f, kink_coefficients()).verdict == Verdict::verified);
}

TEST_CASE("fit rejects segments without enough samples") {
  SampleSet s;
  for (int i = 0; i < 4; ++i) {
    s.x.push_back(0.5 + i * 0.5);
    s.y.push_back(1);
  }
  SegmentationHypothesis h;
  h.degrees = {5};
  CHECK_THROWS_AS(fit_segments(s, h, {}), UnderdeterminedSegment);
}

TEST_CASE("coefficient digits follow the standard error") {
  CHECK(coefficient_digits(1e-3) == 6);
  CHECK(coefficient_digits(1e-12) == 11);
  CHECK(coefficient_digits(1e-20) == 15);
}

TEST_CASE("roundtrip refutes a wrong candidate") {
  const RoundtripReport r = verify_roundtrip(testing::sawtooth(), kink_coefficients());
  CHECK(r.verdict == Verdict::refuted);
  CHECK(r.formula_equal == FormulaComparison::not_equal_formally);
  CHECK(r.numeric_residuals.size() == 12);
}

TEST_CASE("full pipeline recovers the sawtooth from 1/n") {
  const ReconstructionReport r = reconstruct(expand_products(inverse_n_power(1)));
  REQUIRE(r.verified());
  CHECK(r.hypothesis.breakpoints.empty());
  CHECK(r.roundtrip->candidate.pieces().front().poly == testing::sawtooth().pieces().front().poly);
}
