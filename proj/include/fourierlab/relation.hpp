#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fourierlab/pipoly.hpp"
#include "fourierlab/rational.hpp"

namespace fourierlab {

/// Integer lattice given by its basis vectors (rows).
struct Lattice {
  std::vector<std::vector<BigInt>> basis;

  std::size_t rank() const { return basis.size(); }
  std::size_t dimension() const { return basis.empty() ? 0 : basis.front().size(); }
};

/// LLL reduction in exact rational arithmetic. The result spans the same
/// lattice, is size reduced (|mu_ij| <= 1/2) and satisfies the Lovasz
/// condition with parameter delta in (1/4, 1]. Throws DependentLattice when
/// the rows are linearly dependent and InvalidArgument on malformed input.
Lattice lll_reduce(const Lattice& lattice, const Rational& delta = Rational(3, 4));

struct RecognitionResult {
  PiPoly candidate;
  std::vector<BigInt> relation;  // m0*v + sum m_i*basis_i ~ 0, m0 != 0
  Rational residual;             // |candidate - v|
  int confidence_digits = 0;     // floor(-log10 residual), capped at `digits` when exact
};

struct RecognitionOptions {
  BigInt height_cap = 1000000;
  /// A relation of height H over d+1 values is accepted only if
  /// H^(d+1) * |m0*v + sum m_i*basis_i| stays below this, which rejects the
  /// short vectors that LLL finds for unrelated inputs.
  double significance = 1e-3;
  /// Lowest working precision tried when scanning downward from `digits`.
  int min_digits = 6;
};

/// Looks for v as a rational combination of the basis values. `digits` is the
/// number of trustworthy fractional digits of v. The relation lattice is built
/// at 10^D for D = digits, digits-1, ..., and the first relation that passes
/// the height cap, stopping at min_digits, the residual rule |candidate - v| <= 10^-(D-4) and the
/// significance test is returned.
std::optional<RecognitionResult> recognize_constant(const Rational& v, const std::vector<PiPoly>& basis, int digits,
                                                    const RecognitionOptions& options = {});

/// {1, pi, ..., pi^degree}
std::vector<PiPoly> pi_power_basis(int degree);

/// Number of fractional digits written in a decimal literal such as "-0.125".
int fractional_digits(std::string_view decimal);

}  // namespace fourierlab
