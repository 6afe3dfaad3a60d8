#include "fourierlab/relation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "fourierlab/errors.hpp"

namespace fourierlab {
namespace {

using RVec = std::vector<Rational>;

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec to_rational(const std::vector<BigInt>& v) { return RVec(v.begin(), v.end()); }

struct GramSchmidt {
  std::vector<RVec> star;
  std::vector<RVec> mu;
  RVec norm;  // |b*_i|^2
};

GramSchmidt gram_schmidt(const std::vector<std::vector<BigInt>>& b) {
  const std::size_t n = b.size();
  GramSchmidt gs;
  gs.star.resize(n);
  gs.mu.assign(n, RVec(n, Rational(0)));
  gs.norm.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    RVec bi = to_rational(b[i]);
    gs.star[i] = bi;
    for (std::size_t j = 0; j < i; ++j) {
      gs.mu[i][j] = dot(bi, gs.star[j]) / gs.norm[j];
      for (std::size_t t = 0; t < bi.size(); ++t) gs.star[i][t] -= gs.mu[i][j] * gs.star[j][t];
    }
    gs.norm[i] = dot(gs.star[i], gs.star[i]);
    if (gs.norm[i] == 0) throw DependentLattice("lattice basis vectors are linearly dependent");
  }
  return gs;
}

}  // namespace

Lattice lll_reduce(const Lattice& lattice, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta > 1) throw InvalidArgument("delta must lie in (1/4, 1]");
  if (lattice.basis.empty()) throw InvalidArgument("lattice has no basis vectors");
  const std::size_t dim = lattice.dimension();
  for (const auto& row : lattice.basis) {
    if (row.size() != dim) throw InvalidArgument("lattice basis vectors differ in dimension");
  }
  std::vector<std::vector<BigInt>> b = lattice.basis;
  const std::size_t n = b.size();
  GramSchmidt gs = gram_schmidt(b);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      BigInt q = round_nearest(gs.mu[k][jj]);
      if (q == 0) continue;
      for (std::size_t t = 0; t < dim; ++t) b[k][t] -= q * b[jj][t];
      for (std::size_t i = 0; i < jj; ++i) gs.mu[k][i] -= Rational(q) * gs.mu[jj][i];
      gs.mu[k][jj] -= Rational(q);
    }
    const Rational m = gs.mu[k][k - 1];
    if (gs.norm[k] >= (delta - m * m) * gs.norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gs = gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return Lattice{std::move(b)};
}

std::vector<PiPoly> pi_power_basis(int degree) {
  std::vector<PiPoly> out;
  PiPoly p(1);
  for (int k = 0; k <= degree; ++k) {
    out.push_back(p);
    p *= PiPoly::pi();
  }
  return out;
}

int fractional_digits(std::string_view decimal) {
  long exponent = 0;
  auto e = decimal.find_first_of("eE");
  if (e != std::string_view::npos) {
    exponent = std::strtol(std::string(decimal.substr(e + 1)).c_str(), nullptr, 10);
    decimal = decimal.substr(0, e);
  }
  auto dot_pos = decimal.find('.');
  long frac = dot_pos == std::string_view::npos ? 0 : static_cast<long>(decimal.size() - dot_pos - 1);
  return static_cast<int>(std::max<long>(0, frac - exponent));
}

std::optional<RecognitionResult> recognize_constant(const Rational& v, const std::vector<PiPoly>& basis, int digits,
                                                    const RecognitionOptions& options) {
  if (basis.empty()) throw InvalidArgument("recognition basis is empty");
  if (digits < 1) throw InvalidArgument("recognition needs at least one digit");
  const std::size_t k = basis.size();
  const long bits = static_cast<long>(digits * 3.33) + 64;
  std::vector<Rational> values;
  for (const auto& b : basis) values.push_back(approximate(b, bits));

  for (int d = digits; d >= std::min(digits, options.min_digits); --d) {
    const Rational scale = pow10(d);
    Lattice lat;
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<BigInt> row(k + 2, BigInt(0));
      row[i] = 1;
      row[k + 1] = round_nearest(scale * (i == 0 ? v : values[i - 1]));
      lat.basis.push_back(std::move(row));
    }
    Lattice reduced;
    try {
      reduced = lll_reduce(lat);
    } catch (const DependentLattice&) {
      continue;
    }
    // Rows come out roughly sorted by length; try them in order.
    for (const auto& row : reduced.basis) {
      const BigInt& m0 = row[0];
      if (m0 == 0) continue;
      BigInt height = 0;
      for (std::size_t i = 0; i <= k; ++i) height = std::max(height, BigInt(abs(row[i])));
      if (height > options.height_cap) continue;
      PiPoly candidate;
      for (std::size_t i = 1; i <= k; ++i) {
        Rational coeff(BigInt(-row[i]), m0);
        coeff.canonicalize();
        candidate += basis[i - 1] * coeff;
      }
      const Rational candidate_value = approximate(candidate, bits);
      const Rational residual = abs(candidate_value - v);
      if (residual > pow10(-(d - 4))) continue;
      const Rational eps = abs(Rational(m0) * residual);
      const double significance =
          std::pow(height.get_d(), static_cast<double>(k + 1)) * eps.get_d();
      if (significance > options.significance) continue;
      std::vector<BigInt> relation(row.begin(), row.begin() + static_cast<long>(k + 1));
      if (m0 < 0) {
        for (auto& m : relation) m = -m;
      }
      RecognitionResult out;
      out.candidate = candidate;
      out.relation = std::move(relation);
      out.residual = residual;
      out.confidence_digits =
          out.residual == 0 ? digits : static_cast<int>(std::floor(-std::log10(out.residual.get_d())));
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace fourierlab
