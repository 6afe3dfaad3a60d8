#include "fourierlab/reconstruct.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "fourierlab/errors.hpp"

namespace fourierlab {
namespace {

constexpr double kPi = std::numbers::pi;

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  auto mid = v.begin() + static_cast<long>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

std::vector<double> differences(std::vector<double> y, int k) {
  for (int r = 0; r < k && !y.empty(); ++r) {
    for (std::size_t i = 0; i + 1 < y.size(); ++i) y[i] = y[i + 1] - y[i];
    y.pop_back();
  }
  return y;
}

bool inside_half_domain(const Angle& a) {
  return exact_sign(a) == Sign::positive && compare(a, Angle::pi_times(1)) < 0;
}

std::vector<Angle> allowed_breakpoints(const BreakpointCandidates& c) {
  std::vector<Angle> out;
  if (c.integers) {
    for (long k = 1; k <= 3; ++k) out.emplace_back(k);
  }
  if (c.half_integers) {
    for (long k = 0; k <= 2; ++k) out.emplace_back(Rational(2 * k + 1, 2));
  }
  for (const auto& a : c.custom) {
    if (inside_half_domain(a)) out.push_back(a);
  }
  return out;
}

Angle snap(double location, double tolerance, const std::vector<Angle>& allowed) {
  const Angle* best = nullptr;
  double best_distance = tolerance;
  for (const auto& a : allowed) {
    double d = std::fabs(a.approx() - location);
    if (d <= best_distance) {
      best_distance = d;
      best = &a;
    }
  }
  if (best) return *best;
  // No candidate nearby: keep the raw location to three decimals.
  return Angle(make_rational(std::lround(location * 1000), 1000));
}

// d^r/dx^r of x^j at x.
double monomial_derivative(int j, int r, double x) {
  if (j < r) return 0;
  double c = 1;
  for (int t = 0; t < r; ++t) c *= j - t;
  return c * std::pow(x, j - r);
}

double noise_from_differences(const std::vector<std::vector<double>>& runs) {
  std::vector<double> all;
  for (const auto& run : runs) {
    for (double d : differences(run, 5)) all.push_back(std::fabs(d));
  }
  if (all.size() < 10) return 0;
  // Fifth differences of white noise have standard deviation sqrt(252) sigma.
  return median(all) / (0.6745 * std::sqrt(252.0));
}

}  // namespace

void SegmentationHypothesis::validate() {
  if (degrees.empty()) degrees.assign(segments(), 1);
  if (continuity.empty()) continuity.assign(breakpoints.size(), 0);
  if (degrees.size() != segments()) throw InvalidArgument("need one degree per segment");
  if (continuity.size() != breakpoints.size()) throw InvalidArgument("need one continuity order per breakpoint");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!inside_half_domain(breakpoints[i])) throw InvalidArgument("breakpoint " + breakpoints[i].str() + " outside (0, pi)");
    if (i > 0 && compare(breakpoints[i - 1], breakpoints[i]) >= 0) {
      throw InvalidArgument("breakpoints must be strictly increasing");
    }
  }
  for (int d : degrees) {
    if (d < 0) throw InvalidArgument("segment degree must be non-negative");
  }
}

SegmentationHypothesis detect_breakpoints(const SampleSet& samples, const BreakpointCandidates& candidates,
                                          const DetectOptions& options) {
  const std::size_t n = samples.size();
  if (n < 100) throw InvalidArgument("breakpoint detection needs at least 100 samples");
  std::vector<double> steps;
  for (std::size_t i = 0; i + 1 < n; ++i) steps.push_back(samples.x[i + 1] - samples.x[i]);
  const double h = median(steps);
  const double x_lo = samples.x.front(), x_hi = samples.x.back();
  double scale = 1;
  for (double y : samples.y) scale = std::max(scale, std::fabs(y));
  const std::vector<Angle> allowed = allowed_breakpoints(candidates);

  struct Found {
    Angle at;
    int order;
  };
  std::vector<Found> found;
  for (int k = 1; k <= options.max_order; ++k) {
    std::vector<double> d = differences(samples.y, k);
    std::vector<double> mag(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) mag[i] = std::fabs(d[i]);
    const double floor = 1e-13 * scale * std::ldexp(1.0, k);
    const double threshold = std::max(options.spike_factor * median(mag), floor);
    std::size_t i = 0;
    while (i < mag.size()) {
      if (mag[i] <= threshold) {
        ++i;
        continue;
      }
      // Grow a cluster, bridging gaps of up to k + 1 quiet entries.
      std::size_t last = i;
      std::size_t j = i;
      double weight = 0, moment = 0;
      while (j < mag.size() && j <= last + static_cast<std::size_t>(k) + 1) {
        if (mag[j] > threshold) {
          last = j;
          double center = 0;
          for (int t = 0; t <= k; ++t) center += samples.x[j + static_cast<std::size_t>(t)];
          center /= k + 1;
          weight += mag[j];
          moment += mag[j] * center;
        }
        ++j;
      }
      i = last + 1;
      const double location = moment / weight;
      if (location - x_lo < options.end_margin || x_hi - location < options.end_margin) continue;
      Angle at = snap(location, (k + 2) * h, allowed);
      if (!inside_half_domain(at)) continue;
      bool known = false;
      for (const auto& f : found) known = known || f.at == at;
      if (!known) found.push_back({at, k});
    }
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return compare(a.at, b.at) < 0; });
  SegmentationHypothesis out;
  for (const auto& f : found) {
    out.breakpoints.push_back(f.at);
    out.continuity.push_back(f.order - 2);
  }
  // A segment next to a C^c breakpoint needs degree c + 1 for the matching
  // conditions to leave any freedom.
  out.degrees.assign(out.segments(), 1);
  for (std::size_t b = 0; b < out.breakpoints.size(); ++b) {
    const int need = std::max(1, out.continuity[b] + 1);
    out.degrees[b] = std::max(out.degrees[b], need);
    out.degrees[b + 1] = std::max(out.degrees[b + 1], need);
  }
  return out;
}

FitResult fit_segments(const SampleSet& samples, const SegmentationHypothesis& hypothesis,
                       const FitConstraints& constraints, const FitOptions& options) {
  SegmentationHypothesis h = hypothesis;
  h.validate();
  const std::size_t S = h.segments();
  std::vector<double> edges{0.0};
  for (const auto& b : h.breakpoints) edges.push_back(b.approx());
  edges.push_back(kPi);

  std::vector<std::size_t> offset(S + 1, 0);
  for (std::size_t i = 0; i < S; ++i) offset[i + 1] = offset[i] + static_cast<std::size_t>(h.degrees[i]) + 1;
  const std::size_t P = offset[S];

  std::vector<std::vector<std::size_t>> members(S);
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const double x = samples.x[j];
    for (std::size_t i = 0; i < S; ++i) {
      if (x >= edges[i] + options.guard && x <= edges[i + 1] - options.guard) {
        members[i].push_back(j);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < S; ++i) {
    if (members[i].size() < static_cast<std::size_t>(h.degrees[i]) + 2) {
      throw UnderdeterminedSegment("segment " + std::to_string(i + 1) + " has " + std::to_string(members[i].size()) +
                                   " samples for degree " + std::to_string(h.degrees[i]));
    }
  }

  std::size_t m = 0;
  for (const auto& mem : members) m += mem.size();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(P));
  Eigen::VectorXd y(static_cast<Eigen::Index>(m));
  std::vector<std::size_t> row_segment;
  {
    Eigen::Index row = 0;
    for (std::size_t i = 0; i < S; ++i) {
      for (std::size_t j : members[i]) {
        double power = 1;
        for (int t = 0; t <= h.degrees[i]; ++t) {
          A(row, static_cast<Eigen::Index>(offset[i]) + t) = power;
          power *= samples.x[j];
        }
        y(row) = samples.y[j];
        row_segment.push_back(i);
        ++row;
      }
    }
  }

  std::vector<Eigen::VectorXd> rows;
  auto blank = [&] { return Eigen::VectorXd::Zero(static_cast<Eigen::Index>(P)).eval(); };
  for (std::size_t b = 0; b < h.breakpoints.size(); ++b) {
    const int order = constraints.continuity_order.value_or(h.continuity[b]);
    const double x = edges[b + 1];
    for (int r = 0; r <= order; ++r) {
      Eigen::VectorXd c = blank();
      for (int t = 0; t <= h.degrees[b]; ++t) c(static_cast<Eigen::Index>(offset[b]) + t) = monomial_derivative(t, r, x);
      for (int t = 0; t <= h.degrees[b + 1]; ++t) {
        c(static_cast<Eigen::Index>(offset[b + 1]) + t) -= monomial_derivative(t, r, x);
      }
      rows.push_back(c);
    }
  }
  if (constraints.zero_at_0) {
    Eigen::VectorXd c = blank();
    c(0) = 1;
    rows.push_back(c);
  }
  if (constraints.zero_at_pi) {
    Eigen::VectorXd c = blank();
    for (int t = 0; t <= h.degrees[S - 1]; ++t) c(static_cast<Eigen::Index>(offset[S - 1]) + t) = std::pow(kPi, t);
    rows.push_back(c);
  }

  // Null space of the (homogeneous) constraints from a rank-revealing QR of C^T.
  Eigen::MatrixXd Z;
  if (rows.empty()) {
    Z = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(P), static_cast<Eigen::Index>(P));
  } else {
    Eigen::MatrixXd Ct(static_cast<Eigen::Index>(P), static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) Ct.col(static_cast<Eigen::Index>(r)) = rows[r];
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Ct);
    Eigen::MatrixXd Q = qr.householderQ();
    Z = Q.rightCols(static_cast<Eigen::Index>(P) - qr.rank());
  }

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(P));
  Eigen::MatrixXd cov_theta = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(P), static_cast<Eigen::Index>(P));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd;
  if (Z.cols() > 0) {
    Eigen::MatrixXd M = A * Z;
    svd.compute(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    theta = Z * svd.solve(y);
  }
  Eigen::VectorXd resid = y - A * theta;

  FitResult out;
  out.hypothesis = h;
  double scale = 0;
  for (Eigen::Index r = 0; r < y.size(); ++r) scale = std::max(scale, std::fabs(y(r)));
  out.rms = m ? std::sqrt(resid.squaredNorm() / static_cast<double>(m)) : 0;
  const double sigma = std::max(out.rms, 1e-16 * scale);
  if (Z.cols() > 0) {
    const Eigen::VectorXd& s = svd.singularValues();
    Eigen::VectorXd inv2 = Eigen::VectorXd::Zero(s.size());
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      if (s(k) > s(0) * 1e-14) inv2(k) = 1.0 / (s(k) * s(k));
    }
    Eigen::MatrixXd ZV = Z * svd.matrixV();
    cov_theta = sigma * sigma * ZV * inv2.asDiagonal() * ZV.transpose();
  }

  std::vector<std::vector<double>> runs(S);
  std::vector<double> sq(S, 0);
  for (std::size_t r = 0; r < row_segment.size(); ++r) {
    sq[row_segment[r]] += resid(static_cast<Eigen::Index>(r)) * resid(static_cast<Eigen::Index>(r));
    runs[row_segment[r]].push_back(y(static_cast<Eigen::Index>(r)));
  }
  for (std::size_t i = 0; i < S; ++i) {
    SegmentFit seg;
    seg.lo = i == 0 ? Angle(0) : h.breakpoints[i - 1];
    seg.hi = i == S - 1 ? Angle::pi_times(1) : h.breakpoints[i];
    for (int t = 0; t <= h.degrees[i]; ++t) {
      const auto idx = static_cast<Eigen::Index>(offset[i]) + t;
      seg.coeffs.push_back(theta(idx));
      seg.std_errors.push_back(std::sqrt(std::max(0.0, cov_theta(idx, idx))));
    }
    seg.samples = members[i].size();
    seg.rms = std::sqrt(sq[i] / static_cast<double>(seg.samples));
    out.segments.push_back(std::move(seg));
  }
  out.noise = noise_from_differences(runs);
  return out;
}

FitResult fit_with_escalation(const SampleSet& samples, SegmentationHypothesis hypothesis,
                              const FitConstraints& constraints, const FitOptions& options,
                              const BreakpointCandidates& candidates) {
  hypothesis.validate();
  FitResult best = fit_segments(samples, hypothesis, constraints, options);
  double scale = 1e-300;
  for (double y : samples.y) scale = std::max(scale, std::fabs(y));
  std::vector<bool> settled(hypothesis.segments(), false);
  int splits = 0;
  for (int round = 0; round < 64; ++round) {
    const double threshold = options.escalation_factor * std::max(best.noise, 1e-15 * scale);
    bool changed = false;
    bool any_failing = false;
    for (std::size_t i = 0; i < hypothesis.segments(); ++i) {
      if (settled[i] || best.segments[i].rms <= threshold) continue;
      any_failing = true;
      if (hypothesis.degrees[i] >= options.max_degree) continue;
      SegmentationHypothesis trial = hypothesis;
      ++trial.degrees[i];
      try {
        FitResult next = fit_segments(samples, trial, constraints, options);
        if (next.segments[i].rms < best.segments[i].rms / 2) {
          best = std::move(next);
          hypothesis = std::move(trial);
          changed = true;
        } else {
          settled[i] = true;
        }
      } catch (const UnderdeterminedSegment&) {
        settled[i] = true;
      }
    }
    if (changed) continue;
    if (any_failing) {
      // Constraints can couple segments so that only a joint increase helps.
      SegmentationHypothesis trial = hypothesis;
      bool raised = false;
      for (std::size_t i = 0; i < hypothesis.segments(); ++i) {
        if (best.segments[i].rms > threshold && trial.degrees[i] < options.max_degree) {
          ++trial.degrees[i];
          raised = true;
        }
      }
      if (raised) {
        try {
          FitResult next = fit_segments(samples, trial, constraints, options);
          if (next.rms < best.rms / 2) {
            best = std::move(next);
            hypothesis = std::move(trial);
            settled.assign(hypothesis.segments(), false);
            continue;
          }
        } catch (const UnderdeterminedSegment&) {
        }
      }
    }
    if (!any_failing || splits >= options.max_splits) break;
    // Split the worst segment that is still failing at the degree cap.
    std::size_t worst = hypothesis.segments();
    for (std::size_t i = 0; i < hypothesis.segments(); ++i) {
      if (settled[i] || best.segments[i].rms <= threshold) continue;
      if (worst == hypothesis.segments() || best.segments[i].rms > best.segments[worst].rms) worst = i;
    }
    if (worst == hypothesis.segments()) break;
    const double lo = best.segments[worst].lo.approx(), hi = best.segments[worst].hi.approx();
    Angle cut = snap((lo + hi) / 2, (hi - lo) / 2 - options.guard, allowed_breakpoints(candidates));
    SegmentationHypothesis trial = hypothesis;
    trial.breakpoints.insert(trial.breakpoints.begin() + static_cast<long>(worst), cut);
    trial.continuity.insert(trial.continuity.begin() + static_cast<long>(worst), 0);
    trial.degrees[worst] = 1;
    trial.degrees.insert(trial.degrees.begin() + static_cast<long>(worst), 1);
    ++splits;
    try {
      trial.validate();
      best = fit_segments(samples, trial, constraints, options);
      hypothesis = std::move(trial);
      settled.assign(hypothesis.segments(), false);
    } catch (const Error&) {
      break;
    }
  }
  // Drop degrees that do not pay for themselves.
  const double threshold = options.escalation_factor * std::max(best.noise, 1e-15 * scale);
  bool lowered = true;
  while (lowered) {
    lowered = false;
    for (std::size_t i = 0; i < hypothesis.segments(); ++i) {
      if (hypothesis.degrees[i] <= 0) continue;
      SegmentationHypothesis trial = hypothesis;
      --trial.degrees[i];
      FitResult next;
      try {
        next = fit_segments(samples, trial, constraints, options);
      } catch (const Error&) {
        continue;
      }
      if (next.rms <= std::max(2 * best.rms, threshold)) {
        best = std::move(next);
        hypothesis = std::move(trial);
        lowered = true;
      }
    }
  }
  return best;
}

int coefficient_digits(double std_error) {
  if (!(std_error > 0)) return 15;
  int d = static_cast<int>(std::floor(-std::log10(4 * std_error)));
  return std::clamp(d, 6, 15);
}

PiecewiseFunction recognize_coefficients(const FitResult& fit, const std::vector<PiPoly>& basis,
                                         std::optional<int> digits) {
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < fit.segments.size(); ++i) {
    const SegmentFit& seg = fit.segments[i];
    std::vector<PiPoly> coeffs;
    for (std::size_t j = 0; j < seg.coeffs.size(); ++j) {
      const double c = seg.coeffs[j];
      const double se = seg.std_errors[j];
      if (std::fabs(c) < 3 * se) {
        coeffs.emplace_back(0);
        continue;
      }
      const int d = digits.value_or(coefficient_digits(se));
      const Rational rounded = parse_rational(format_fixed(Rational(c), d));
      if (rounded == 0) {
        coeffs.emplace_back(0);
        continue;
      }
      auto r = recognize_constant(rounded, basis, d);
      if (!r) {
        throw UnrecognizedCoefficient("coefficient of x^" + std::to_string(j) + " on segment " + std::to_string(i + 1) +
                                          " (" + format_fixed(rounded, d) + ") is not recognized",
                                      c);
      }
      coeffs.push_back(r->candidate);
    }
    pieces.push_back(Piece{seg.lo, seg.hi, XPolynomial(std::move(coeffs))});
  }
  return PiecewiseFunction(std::move(pieces), DomainKind::half);
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::verified:
      return "verified";
    case Verdict::refuted:
      return "refuted";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

RoundtripReport verify_roundtrip(const PiecewiseFunction& candidate, const CoefficientFormula& target) {
  if (candidate.domain() != DomainKind::half) throw InvalidArgument("roundtrip candidate must live on [0, pi]");
  RoundtripReport out;
  out.candidate = candidate;
  // Compare integral f(x) sin(nx) dx with (pi/2) * target so that no division
  // by pi is needed.
  const CoefficientFormula integral = sine_integral(candidate);
  const CoefficientFormula scaled = PiPoly::linear(0, Rational(1, 2)) * target;
  out.formula_equal = canonical_equal(integral, scaled);
  bool all_small = true, any_large = false;
  for (long n = 1; n <= 12; ++n) {
    double b = 2 / kPi * coefficient_approx(integral, n);
    double r = std::fabs(b - coefficient_approx(target, n));
    out.numeric_residuals.push_back(r);
    all_small = all_small && r < 1e-12;
    any_large = any_large || r > 1e-6;
  }
  if (out.formula_equal == FormulaComparison::equal || all_small) {
    out.verdict = Verdict::verified;
  } else if (any_large) {
    out.verdict = Verdict::refuted;
  } else {
    out.verdict = Verdict::inconclusive;
  }
  return out;
}

ReconstructionReport reconstruct(const CoefficientFormula& target, const ReconstructOptions& options) {
  ReconstructionReport report;
  const SampleSet samples =
      sample_series(sine_series(target), Grid{0.0, kPi, options.samples, true}, options.N, target.str());
  report.hypothesis = detect_breakpoints(samples, options.candidates, options.detect);
  const std::pair<bool, bool> variants[] = {{true, true}, {false, true}, {true, false}, {false, false}};
  for (auto [at0, atpi] : variants) {
    FitConstraints c;
    c.zero_at_0 = at0;
    c.zero_at_pi = atpi;
    try {
      FitResult fit = fit_with_escalation(samples, report.hypothesis, c, options.fit, options.candidates);
      PiecewiseFunction candidate = recognize_coefficients(fit, options.basis);
      RoundtripReport rt = verify_roundtrip(candidate, target);
      report.fit = std::move(fit);
      report.constraints = c;
      report.roundtrip = std::move(rt);
      if (report.verified()) {
        report.failure.clear();
        return report;
      }
      report.failure = std::string("candidate ") + to_string(report.roundtrip->verdict);
    } catch (const Error& e) {
      report.failure = e.what();
    }
  }
  return report;
}

}  // namespace fourierlab
