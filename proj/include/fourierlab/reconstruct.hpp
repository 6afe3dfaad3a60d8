#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourierlab/fourier.hpp"
#include "fourierlab/numeric.hpp"
#include "fourierlab/piecewise.hpp"
#include "fourierlab/relation.hpp"

namespace fourierlab {

/// Breakpoints in (0, pi) splitting [0, pi] into segments.
struct SegmentationHypothesis {
  std::vector<Angle> breakpoints;  // strictly increasing
  std::vector<int> degrees;        // one per segment (breakpoints.size() + 1)
  /// Derivative orders matched at each breakpoint: 0 matches values only,
  /// -1 leaves the breakpoint unconstrained.
  std::vector<int> continuity;

  std::size_t segments() const { return breakpoints.size() + 1; }
  /// Fills defaults (degree 1, continuity 0) and checks ordering and domain.
  void validate();
};

struct BreakpointCandidates {
  bool integers = true;
  bool half_integers = true;
  std::vector<Angle> custom;
};

struct DetectOptions {
  int max_order = 5;          // highest finite difference scanned
  double spike_factor = 50;   // spike threshold relative to the median |difference|
  double end_margin = 0.1;    // spikes this close to 0 or pi are ignored
};

/// Scans k-th finite differences (k = 1..max_order) for isolated spikes. A
/// breakpoint first seen at order k is a jump in the (k-2)-th derivative,
/// recorded as continuity k-2. Locations snap to the nearest allowed candidate
/// within (k+2) grid steps. Needs at least 100 samples.
SegmentationHypothesis detect_breakpoints(const SampleSet& samples, const BreakpointCandidates& candidates = {},
                                          const DetectOptions& options = {});

struct FitConstraints {
  /// Overrides the per-breakpoint continuity of the hypothesis when set.
  std::optional<int> continuity_order;
  bool zero_at_0 = false;
  bool zero_at_pi = false;
};

struct FitOptions {
  double guard = 0.02;  // samples this close to a breakpoint or domain end are skipped
  int max_degree = 6;
  double escalation_factor = 10;  // refit while rms exceeds this many noise levels
  int max_splits = 2;
};

struct SegmentFit {
  Angle lo;
  Angle hi;
  std::vector<double> coeffs;      // ascending powers of x
  std::vector<double> std_errors;  // per coefficient
  double rms = 0;
  std::size_t samples = 0;
};

struct FitResult {
  SegmentationHypothesis hypothesis;
  std::vector<SegmentFit> segments;
  double rms = 0;    // over all fitted samples
  double noise = 0;  // sample noise estimated from fifth differences
};

/// Equality-constrained least squares with the degrees fixed by the
/// hypothesis. Constraints are eliminated through a null-space basis and the
/// reduced problem is solved by SVD. Throws UnderdeterminedSegment when a
/// segment has fewer than degree + 2 samples.
FitResult fit_segments(const SampleSet& samples, const SegmentationHypothesis& hypothesis,
                       const FitConstraints& constraints, const FitOptions& options = {});

/// fit_segments with degree escalation: segments whose rms exceeds
/// escalation_factor times the noise get one more degree while that keeps
/// improving them, up to max_degree; a segment still failing at the cap is split.
FitResult fit_with_escalation(const SampleSet& samples, SegmentationHypothesis hypothesis,
                              const FitConstraints& constraints, const FitOptions& options = {},
                              const BreakpointCandidates& candidates = {});

/// Digits trusted for a fitted coefficient, from its standard error, in [6, 15].
int coefficient_digits(double std_error);

/// Turns every fitted coefficient into an exact element of span(basis).
/// Coefficients smaller than three standard errors become zero; the others
/// are rounded to their trusted digits (or `digits` when given) and passed to
/// recognize_constant. Throws UnrecognizedCoefficient naming the first value
/// that fails.
PiecewiseFunction recognize_coefficients(const FitResult& fit, const std::vector<PiPoly>& basis,
                                         std::optional<int> digits = std::nullopt);

enum class Verdict { verified, refuted, inconclusive };
const char* to_string(Verdict verdict);

struct RoundtripReport {
  PiecewiseFunction candidate = PiecewiseFunction::zero(DomainKind::half);
  FormulaComparison formula_equal = FormulaComparison::not_equal_formally;
  std::vector<double> numeric_residuals;  // |b_n(candidate) - target(n)| for n = 1..12
  Verdict verdict = Verdict::inconclusive;
};

/// Recomputes the sine coefficients of a [0, pi] candidate and compares them
/// with the target, first formally and then at n = 1..12.
RoundtripReport verify_roundtrip(const PiecewiseFunction& candidate, const CoefficientFormula& target);

struct ReconstructOptions {
  long N = 100000;
  int samples = 2000;
  std::vector<PiPoly> basis = pi_power_basis(1);
  BreakpointCandidates candidates;
  DetectOptions detect;
  FitOptions fit;
};

struct ReconstructionReport {
  SegmentationHypothesis hypothesis;
  std::optional<FitResult> fit;
  FitConstraints constraints;
  std::optional<RoundtripReport> roundtrip;
  std::string failure;  // why no candidate was verified, empty on success

  bool verified() const { return roundtrip && roundtrip->verdict == Verdict::verified; }
};

/// Sample the sine series with the given coefficients, detect breakpoints,
/// fit with slope matching, recognize and verify. Boundary conditions f(0) = 0
/// and f(pi) = 0 are tried first and dropped one at a time if verification fails.
ReconstructionReport reconstruct(const CoefficientFormula& target, const ReconstructOptions& options = {});

}  // namespace fourierlab
