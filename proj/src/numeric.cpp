#include "fourierlab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "fourierlab/errors.hpp"
#include "fourierlab/mpfloat.hpp"

namespace fourierlab {
namespace {

constexpr long kBlockSize = 4096;
constexpr long kReseedInterval = 1024;
constexpr long kFastReseedInterval = 512;

enum class Shape { plain, alternating, oscillating };

Shape shape_of(const TrigTerm& t) {
  if (t.beta.is_zero()) return Shape::plain;
  if (t.beta == Angle::pi_times(1)) return Shape::alternating;
  return Shape::oscillating;
}

void check_convergent(const SeriesExpression& e) {
  for (const auto& t : e.terms()) {
    if (t.p <= 0) throw InvalidArgument("term " + t.str() + " does not tend to zero");
    if (t.p == 1 && shape_of(t) == Shape::plain) throw InvalidArgument("term " + t.str() + " diverges");
  }
}

// Frequencies in (0, pi) get a shared rotation slot; term_slot maps each term
// to its slot or -1.
struct Layout {
  std::vector<TrigTerm> terms;
  std::vector<Angle> betas;
  std::vector<int> slot;
  std::vector<Shape> shape;
};

Layout layout_of(const SeriesExpression& e) {
  Layout out;
  out.terms = e.terms();
  std::map<Angle, int, AngleStructuralLess> index;
  for (const auto& t : out.terms) {
    out.shape.push_back(shape_of(t));
    if (out.shape.back() != Shape::oscillating) {
      out.slot.push_back(-1);
      continue;
    }
    auto [it, inserted] = index.emplace(t.beta, static_cast<int>(out.betas.size()));
    if (inserted) out.betas.push_back(t.beta);
    out.slot.push_back(it->second);
  }
  return out;
}

double sum_abs_coeffs(const std::vector<TrigTerm>& terms) {
  double s = 0;
  for (const auto& t : terms) s += std::fabs(t.c.approx());
  return s;
}

// Lower bound on sin(beta/2) for beta in (0, pi].
double sin_half_lower(const Angle& beta) {
  double b = beta.approx();
  return std::sin(b / 2) * (1 - 1e-12) - 1e-300;
}

double term_tail(const TrigTerm& t, long N) {
  const double c = std::fabs(t.c.approx()) * (1 + 1e-12);
  if (c == 0) return 0;
  const double n1 = static_cast<double>(N) + 1;
  double bound = std::numeric_limits<double>::infinity();
  if (t.p >= 2) bound = 1.0 / ((t.p - 1) * std::pow(static_cast<double>(N) + 0.5, t.p - 1));
  Shape shape = shape_of(t);
  if (shape != Shape::plain) {
    double s = shape == Shape::alternating ? 1.0 : sin_half_lower(t.beta);
    if (s > 0) bound = std::min(bound, 1.0 / (std::pow(n1, t.p) * s));
  }
  // Round the bound up slightly so that the double evaluation stays an upper bound.
  return c * bound * (1 + 1e-10);
}

MpFloat pairwise_sum(std::vector<MpFloat>& values, long prec) {
  if (values.empty()) return MpFloat(prec);
  std::size_t width = values.size();
  while (width > 1) {
    std::size_t half = (width + 1) / 2;
    for (std::size_t i = 0; i + half < width; ++i) {
      mpfr_add(values[i].get(), values[i].get(), values[i + half].get(), MPFR_RNDN);
    }
    width = half;
  }
  return values[0];
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

std::string PartialSumResult::text() const { return format_fixed(value, digits); }

double tail_bound(const SeriesExpression& e, long N) {
  check_convergent(e);
  double total = 0;
  for (const auto& t : e.terms()) total += term_tail(t, N);
  return total;
}

PartialSumResult partial_sum(const SeriesExpression& e, long N, int digits) {
  if (N < 1) throw InvalidArgument("N must be at least 1");
  if (digits < 1) throw InvalidArgument("digits must be positive");
  check_convergent(e);
  const int log_n = static_cast<int>(std::ceil(std::log10(static_cast<double>(N) + 1)));
  const long prec = bits_for_digits(digits + 10 + log_n, 16);
  const Layout lay = layout_of(e);

  std::vector<MpFloat> coeffs;
  for (const auto& t : lay.terms) coeffs.push_back(MpFloat::from(t.c, prec));
  std::vector<MpFloat> beta_val, step_re, step_im;
  for (const auto& b : lay.betas) {
    beta_val.push_back(MpFloat::from(b.to_pipoly(), prec));
    MpFloat s(prec), c(prec);
    mpfr_sin_cos(s.get(), c.get(), beta_val.back().get(), MPFR_RNDN);
    step_re.push_back(c);
    step_im.push_back(s);
  }
  const std::size_t nb = lay.betas.size();
  std::vector<MpFloat> re(nb, MpFloat(prec)), im(nb, MpFloat(prec));
  MpFloat t1(prec), t2(prec), t3(prec), arg(prec), inv(prec), term(prec), block(prec);
  std::vector<MpFloat> blocks;

  for (long start = 1; start <= N; start += kBlockSize) {
    mpfr_set_zero(block.get(), 1);
    const long stop = std::min(N, start + kBlockSize - 1);
    for (long n = start; n <= stop; ++n) {
      for (std::size_t j = 0; j < nb; ++j) {
        if (n == start || (n - 1) % kReseedInterval == 0) {
          mpfr_mul_ui(arg.get(), beta_val[j].get(), static_cast<unsigned long>(n), MPFR_RNDN);
          mpfr_sin_cos(im[j].get(), re[j].get(), arg.get(), MPFR_RNDN);
        } else {
          // (re + i im) *= (step_re + i step_im)
          mpfr_mul(t1.get(), re[j].get(), step_re[j].get(), MPFR_RNDN);
          mpfr_mul(t2.get(), im[j].get(), step_im[j].get(), MPFR_RNDN);
          mpfr_mul(t3.get(), re[j].get(), step_im[j].get(), MPFR_RNDN);
          mpfr_sub(re[j].get(), t1.get(), t2.get(), MPFR_RNDN);
          mpfr_fma(im[j].get(), im[j].get(), step_re[j].get(), t3.get(), MPFR_RNDN);
        }
      }
      for (std::size_t k = 0; k < lay.terms.size(); ++k) {
        const TrigTerm& t = lay.terms[k];
        switch (lay.shape[k]) {
          case Shape::plain:
            mpfr_set(term.get(), coeffs[k].get(), MPFR_RNDN);
            break;
          case Shape::alternating:
            if (n % 2 == 1) {
              mpfr_neg(term.get(), coeffs[k].get(), MPFR_RNDN);
            } else {
              mpfr_set(term.get(), coeffs[k].get(), MPFR_RNDN);
            }
            break;
          case Shape::oscillating: {
            const MpFloat& f = t.kind == TrigKind::sin ? im[lay.slot[k]] : re[lay.slot[k]];
            mpfr_mul(term.get(), coeffs[k].get(), f.get(), MPFR_RNDN);
            break;
          }
        }
        for (int q = 0; q < t.p; ++q) mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_add(block.get(), block.get(), term.get(), MPFR_RNDN);
      }
    }
    blocks.push_back(block);
  }

  MpFloat total = pairwise_sum(blocks, prec);
  PartialSumResult out;
  out.value = total.to_rational();
  out.N = N;
  out.digits = digits;
  // Rounding: each rotated value is off by at most ~8 ulps per step since the
  // last reseed, reseeded arguments by n*beta ulps, and every addition by one
  // ulp of a partial sum bounded by the coefficient mass.
  const double unit = std::ldexp(1.0, static_cast<int>(-prec + 4));
  const double mass = sum_abs_coeffs(lay.terms) + 1;
  const double n = static_cast<double>(N);
  const double rounding = mass * unit * (16.0 * kReseedInterval + 8.0 * n + 8.0 * n * std::log(n + 1) + 64.0);
  out.tail_bound = tail_bound(e, N) + rounding;
  return out;
}

FastSum fast_partial_sum(const SeriesExpression& e, long N) {
  if (N < 1) throw InvalidArgument("N must be at least 1");
  check_convergent(e);
  const Layout lay = layout_of(e);
  const long prec = 128;
  std::vector<long double> coeffs;
  for (const auto& t : lay.terms) coeffs.push_back(static_cast<long double>(t.c.approx()));
  // PiPoly::approx is a double; recompute coefficients at long double precision.
  for (std::size_t k = 0; k < lay.terms.size(); ++k) coeffs[k] = MpFloat::from(lay.terms[k].c, prec).to_long_double();

  const std::size_t nb = lay.betas.size();
  std::vector<MpFloat> beta_val;
  std::vector<std::complex<long double>> step(nb), z(nb);
  for (const auto& b : lay.betas) {
    beta_val.push_back(MpFloat::from(b.to_pipoly(), prec));
    MpFloat s(prec), c(prec);
    mpfr_sin_cos(s.get(), c.get(), beta_val.back().get(), MPFR_RNDN);
    step[beta_val.size() - 1] = {c.to_long_double(), s.to_long_double()};
  }
  MpFloat arg(prec), s(prec), c(prec);
  long double sum = 0, comp = 0;
  for (long n = 1; n <= N; ++n) {
    for (std::size_t j = 0; j < nb; ++j) {
      if ((n - 1) % kFastReseedInterval == 0) {
        mpfr_mul_ui(arg.get(), beta_val[j].get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_sin_cos(s.get(), c.get(), arg.get(), MPFR_RNDN);
        z[j] = {c.to_long_double(), s.to_long_double()};
      } else {
        z[j] *= step[j];
      }
    }
    const long double inv = 1.0L / static_cast<long double>(n);
    long double acc = 0;
    for (std::size_t k = 0; k < lay.terms.size(); ++k) {
      const TrigTerm& t = lay.terms[k];
      long double v = coeffs[k];
      switch (lay.shape[k]) {
        case Shape::plain:
          break;
        case Shape::alternating:
          if (n % 2 == 1) v = -v;
          break;
        case Shape::oscillating:
          v *= t.kind == TrigKind::sin ? z[lay.slot[k]].imag() : z[lay.slot[k]].real();
          break;
      }
      for (int q = 0; q < t.p; ++q) v *= inv;
      acc += v;
    }
    // Neumaier compensated summation.
    long double next = sum + acc;
    if (std::fabs(sum) >= std::fabs(acc)) {
      comp += (sum - next) + acc;
    } else {
      comp += (acc - next) + sum;
    }
    sum = next;
  }
  const double eps = static_cast<double>(std::numeric_limits<long double>::epsilon());
  const double mass = sum_abs_coeffs(lay.terms) + 1;
  const double log_n = std::log(static_cast<double>(N) + 1) + 1;
  return {sum + comp, tail_bound(e, N) + mass * eps * (8.0 * kFastReseedInterval * log_n + 16.0)};
}

std::vector<double> grid_points(const Grid& grid) {
  if (grid.count < 1) throw InvalidArgument("grid needs at least one point");
  if (!(grid.hi > grid.lo)) throw InvalidArgument("grid bounds must satisfy lo < hi");
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(grid.count));
  if (grid.midpoints || grid.count == 1) {
    const double h = (grid.hi - grid.lo) / grid.count;
    for (int i = 0; i < grid.count; ++i) xs.push_back(grid.lo + (i + 0.5) * h);
  } else {
    const double h = (grid.hi - grid.lo) / (grid.count - 1);
    for (int i = 0; i < grid.count; ++i) xs.push_back(grid.lo + i * h);
  }
  return xs;
}

SeriesAt series_in_x(const ProductExpression& e) {
  return [e](const Angle& x) { return expand_products(e.substitute(x)); };
}

SeriesAt sine_series(const SeriesExpression& cf) {
  return [cf](const Angle& x) { return cf.times_trig(TrigKind::sin, x); };
}

SampleSet sample_series(const SeriesAt& series, const Grid& grid, long N, std::string source) {
  SampleSet out;
  out.N = N;
  out.source = std::move(source);
  for (double x : grid_points(grid)) {
    SeriesExpression e = series(Angle(Rational(x)));
    double y = 0;
    double err = 0;
    if (!e.empty()) {
      FastSum s = fast_partial_sum(e, N);
      y = static_cast<double>(s.value);
      err = s.error_bound;
    }
    out.x.push_back(x);
    out.y.push_back(y);
    out.error_bound = std::max(out.error_bound, err);
  }
  return out;
}

SampleSet sample_series(const ProductExpression& e, const Grid& grid, long N) {
  return sample_series(series_in_x(e), grid, N, e.str());
}

std::string SampleSet::to_csv() const {
  std::ostringstream os;
  os << "x,y\n";
  for (std::size_t i = 0; i < x.size(); ++i) os << format_double(x[i]) << ',' << format_double(y[i]) << '\n';
  return os.str();
}

std::string SampleSet::to_json() const {
  std::ostringstream os;
  os << "{\"source\":\"";
  for (char ch : source) {
    if (ch == '"' || ch == '\\') os << '\\';
    os << ch;
  }
  os << "\",\"N\":" << N << ",\"error_bound\":" << format_double(error_bound) << ",\"x\":[";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << format_double(x[i]);
  os << "],\"y\":[";
  for (std::size_t i = 0; i < y.size(); ++i) os << (i ? "," : "") << format_double(y[i]);
  os << "]}";
  return os.str();
}

CrossingResult find_crossing(const ProductExpression& e1, const ProductExpression& e2, double lo, double hi,
                             long N, int digits) {
  if (!(lo < hi)) throw InvalidArgument("bracket must satisfy lo < hi");
  const ProductExpression diff = e1 + scalar(PiPoly(-1)) * e2;
  auto eval = [&](double x) -> FastSum {
    SeriesExpression e = expand_products(diff.substitute(Angle(Rational(x))));
    if (e.empty()) return {0.0L, 0.0};
    return fast_partial_sum(e, N);
  };
  FastSum flo = eval(lo);
  FastSum fhi = eval(hi);
  const double error = std::max(flo.error_bound, fhi.error_bound);
  if (flo.value == 0 && fhi.value == 0) throw NoSignChange("difference vanishes at both ends of the bracket");
  if ((flo.value < 0) == (fhi.value < 0) && flo.value != 0 && fhi.value != 0) {
    throw NoSignChange("difference has the same sign at both ends of the bracket");
  }
  const double resolution = std::max(std::pow(10.0, -digits), 4e-15);
  int iterations = 0;
  double a = lo, b = hi;
  long double fa = flo.value;
  while (b - a > resolution && iterations < 200) {
    const double m = a + (b - a) / 2;
    if (m <= a || m >= b) break;
    long double fm = eval(m).value;
    ++iterations;
    if (fm == 0) {
      a = b = m;
      break;
    }
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  CrossingResult out;
  out.x = a + (b - a) / 2;
  out.iterations = iterations;
  const double delta = std::min(1e-3, (hi - lo) / 4);
  const double left = std::max(lo, out.x - delta), right = std::min(hi, out.x + delta);
  out.slope = static_cast<double>(eval(right).value - eval(left).value) / (right - left);
  const double slope = std::fabs(out.slope);
  const double truncation = slope > 0 ? 2 * error / slope : std::numeric_limits<double>::infinity();
  out.uncertainty = (b - a) / 2 + truncation;
  return out;
}

}  // namespace fourierlab
