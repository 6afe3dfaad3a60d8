#include <doctest.h>

#include "fourierlab/errors.hpp"
#include "fourierlab/relation.hpp"
#include "properties.hpp"

using namespace fourierlab;

using testing::determinant;
using testing::is_lll_reduced;
using testing::Matrix;
using testing::right_divide;
using testing::to_rational;

TEST_CASE("LLL output passes independent Lovasz and size-reduction checks") {
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = testing::uniform(2, 6);
    Lattice l;
    Matrix original;
    do {
      l.basis.assign(dim, std::vector<BigInt>(dim));
      for (auto& row : l.basis)
        for (auto& v : row) v = testing::uniform(-1000, 1000);
      original = to_rational(l);
    } while (determinant(original) == 0);
    const Lattice reduced = lll_reduce(l);
    CHECK(reduced.rank() == l.rank());
    CHECK(is_lll_reduced(reduced, Rational(3, 4)));
    // Same lattice: the change of basis is an integer matrix with determinant +-1.
    const Matrix u = right_divide(to_rational(reduced), original);
    for (const auto& row : u)
      for (const auto& v : row) CHECK(v.get_den() == 1);
    CHECK(abs(determinant(u)) == 1);
  }
}

TEST_CASE("LLL with a stricter delta and on knapsack-style lattices") {
  Lattice l;
  const std::vector<long> weights = {366, 385, 392, 401, 422, 437};
  for (std::size_t i = 0; i < weights.size(); ++i) {
    std::vector<BigInt> row(weights.size() + 1, 0);
    row[i] = 1;
    row.back() = weights[i] * 1000;
    l.basis.push_back(row);
  }
  const Lattice reduced = lll_reduce(l, Rational(99, 100));
  CHECK(is_lll_reduced(reduced, Rational(99, 100)));
}

TEST_CASE("LLL rejects dependent or malformed input") {
  Lattice dep{{{1, 2, 3}, {2, 4, 6}}};
  CHECK_THROWS_AS(lll_reduce(dep), DependentLattice);
  Lattice ragged{{{1, 2}, {1}}};
  CHECK_THROWS_AS(lll_reduce(ragged), InvalidArgument);
  CHECK_THROWS_AS(lll_reduce(Lattice{{{1, 0}, {0, 1}}}, Rational(1, 5)), InvalidArgument);
}

TEST_CASE("recognizes the decimals produced by curve fitting") {
  const auto basis = pi_power_basis(1);
  struct Case {
    const char* text;
    PiPoly expected;
  };
  const std::vector<Case> cases = {
      {"1.070796", PiPoly::linear(Rational(-1, 2), Rational(1, 2))},
      {"-.392699", PiPoly::linear(0, Rational(-1, 8))},
      {"1.57079623", PiPoly::linear(0, Rational(1, 2))},
      {"-.49999989", PiPoly(Rational(-1, 2))},
      {"-0.13089969390068892", PiPoly::linear(0, Rational(-1, 24))},
      {"0.6780972450893256", PiPoly::linear(Rational(-1, 2), Rational(3, 8))},
      {"0.6780972450961724", PiPoly::linear(Rational(-1, 2), Rational(3, 8))},
      {"1.2671458676442587", PiPoly::linear(Rational(-1, 2), Rational(9, 16))},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    const auto r = recognize_constant(parse_rational(c.text), basis, fractional_digits(c.text));
    REQUIRE(r.has_value());
    CHECK(r->candidate == c.expected);
    CHECK(r->relation.front() > 0);
  }
}

TEST_CASE("recognizes combinations with pi squared") {
  const PiPoly v = PiPoly(std::vector<Rational>{Rational(1, 12), Rational(-1, 4), Rational(1, 6)});
  const std::string text = to_decimal(v, 20).text;
  const auto r = recognize_constant(parse_rational(text), pi_power_basis(2), 20);
  REQUIRE(r.has_value());
  CHECK(r->candidate == v);
}

TEST_CASE("random 15-digit decimals are not recognized") {
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::string text = "0.";
    for (int d = 0; d < 15; ++d) text += static_cast<char>('0' + testing::uniform(d == 14 ? 1 : 0, 9));
    if (recognize_constant(parse_rational(text), pi_power_basis(1), 15)) ++found;
  }
  CHECK(found == 0);
}

TEST_CASE("digit counting") {
  CHECK(fractional_digits("-0.125") == 3);
  CHECK(fractional_digits("-.392699") == 6);
  CHECK(fractional_digits("42") == 0);
  CHECK(pi_power_basis(2).size() == 3);
}
