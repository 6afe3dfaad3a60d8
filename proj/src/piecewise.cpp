#include "fourierlab/piecewise.hpp"

#include <algorithm>
#include <sstream>

#include "fourierlab/errors.hpp"

namespace fourierlab {

XPolynomial::XPolynomial(std::vector<PiPoly> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

XPolynomial XPolynomial::x() { return XPolynomial({PiPoly(), PiPoly(1)}); }

void XPolynomial::normalize(int max_degree) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (degree() > max_degree)
    throw DegreeOverflow("x-polynomial degree " + std::to_string(degree()) + " exceeds " +
                         std::to_string(max_degree));
}

PiPoly XPolynomial::coeff(int j) const {
  if (j < 0 || j > degree()) return {};
  return coeffs_[static_cast<std::size_t>(j)];
}

XPolynomial XPolynomial::operator-() const {
  XPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  normalize(std::max({degree(), o.degree(), kMaxDegree}));
  return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) { return *this += -o; }

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  int deg = a.degree() + b.degree();
  if (deg > XPolynomial::kMaxDegree)
    throw DegreeOverflow("x-polynomial product degree " + std::to_string(deg) + " exceeds " +
                         std::to_string(XPolynomial::kMaxDegree));
  std::vector<PiPoly> out(static_cast<std::size_t>(deg) + 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return XPolynomial(std::move(out));
}

XPolynomial operator*(const PiPoly& s, const XPolynomial& a) {
  XPolynomial r = a;
  for (auto& c : r.coeffs_) c = s * c;
  r.normalize(std::max(a.degree(), XPolynomial::kMaxDegree));
  return r;
}

PiPoly XPolynomial::evaluate(const PiPoly& x) const {
  PiPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double XPolynomial::evaluate_approx(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->approx();
  return acc;
}

XPolynomial XPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<PiPoly> out;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) out.push_back(coeffs_[j] * Rational(static_cast<long>(j)));
  return XPolynomial(std::move(out));
}

XPolynomial XPolynomial::antiderivative() const {
  XPolynomial r;
  if (is_zero()) return r;
  r.coeffs_.emplace_back();
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    r.coeffs_.push_back(coeffs_[j] / Rational(static_cast<long>(j + 1)));
  r.normalize(kMaxDegree + 1);
  return r;
}

XPolynomial XPolynomial::reflect() const {
  XPolynomial r = *this;
  for (std::size_t j = 1; j < r.coeffs_.size(); j += 2) r.coeffs_[j] = -r.coeffs_[j];
  return r;
}

std::string XPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= degree(); ++j) {
    const PiPoly& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << c.str();
      continue;
    }
    os << "(" << c.str() << ")*x";
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

XPolynomial derivative(const XPolynomial& p) { return p.derivative(); }

namespace {

std::vector<Piece> merge_equal_neighbours(std::vector<Piece> pieces) {
  std::vector<Piece> out;
  for (auto& p : pieces) {
    if (!out.empty() && out.back().poly == p.poly) {
      out.back().hi = p.hi;
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

PiecewiseFunction::PiecewiseFunction(std::vector<Piece> pieces, DomainKind domain, Parity parity)
    : pieces_(std::move(pieces)), domain_(domain), parity_(parity) {
  if (pieces_.empty()) throw InvalidArgument("piecewise function needs at least one piece");
  if (!(pieces_.front().lo == domain_lo()) || !(pieces_.back().hi == domain_hi()))
    throw InvalidArgument("pieces do not cover the domain exactly");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (exact_sign(pieces_[i].hi - pieces_[i].lo) != Sign::positive)
      throw InvalidArgument("piece " + std::to_string(i) + " has an empty or reversed interval");
    if (i + 1 < pieces_.size() && !(pieces_[i].hi == pieces_[i + 1].lo))
      throw InvalidArgument("pieces " + std::to_string(i) + " and " + std::to_string(i + 1) +
                            " are not contiguous");
  }
  if (domain_ == DomainKind::full && parity_ != Parity::none) {
    // Split at every breakpoint and its mirror; the refined pieces then pair
    // up as i <-> n-1-i.
    std::vector<Angle> cuts;
    for (const auto& p : pieces_) {
      cuts.push_back(p.lo);
      cuts.push_back(-p.lo);
    }
    cuts.push_back(domain_hi());
    std::sort(cuts.begin(), cuts.end(), [](const Angle& a, const Angle& b) { return compare(a, b) < 0; });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<XPolynomial> polys;
    std::size_t k = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      while (!(pieces_[k].hi == cuts[i + 1]) && compare(pieces_[k].hi, cuts[i + 1]) < 0) ++k;
      polys.push_back(pieces_[k].poly);
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const XPolynomial& mirror = polys[polys.size() - 1 - i];
      XPolynomial expected = parity_ == Parity::odd ? -polys[i].reflect() : polys[i].reflect();
      if (!(mirror == expected))
        throw InvalidArgument(std::string("declared ") + (parity_ == Parity::odd ? "odd" : "even") +
                              " parity does not hold");
    }
  }
}

PiecewiseFunction PiecewiseFunction::zero(DomainKind domain) {
  Angle lo = domain == DomainKind::half ? Angle(0) : Angle::pi_times(-1);
  return PiecewiseFunction({Piece{lo, Angle::pi_times(1), XPolynomial()}}, domain,
                           domain == DomainKind::full ? Parity::odd : Parity::none);
}

Angle PiecewiseFunction::domain_lo() const {
  return domain_ == DomainKind::half ? Angle(0) : Angle::pi_times(-1);
}

Angle PiecewiseFunction::domain_hi() const { return Angle::pi_times(1); }

PiecewiseFunction operator+(const PiecewiseFunction& a, const PiecewiseFunction& b) {
  if (a.domain() != b.domain()) throw InvalidArgument("cannot add functions on different domains");
  std::vector<Angle> cuts;
  for (const auto& p : a.pieces()) cuts.push_back(p.lo);
  for (const auto& p : b.pieces()) cuts.push_back(p.lo);
  cuts.push_back(a.domain_hi());
  std::sort(cuts.begin(), cuts.end(), [](const Angle& x, const Angle& y) { return compare(x, y) < 0; });
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Piece> out;
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    while (compare(a.pieces()[ia].hi, cuts[i + 1]) < 0) ++ia;
    while (compare(b.pieces()[ib].hi, cuts[i + 1]) < 0) ++ib;
    out.push_back(Piece{cuts[i], cuts[i + 1], a.pieces()[ia].poly + b.pieces()[ib].poly});
  }
  Parity parity = a.parity() == b.parity() ? a.parity() : Parity::none;
  return PiecewiseFunction(merge_equal_neighbours(std::move(out)), a.domain(), parity);
}

double PiecewiseFunction::evaluate_approx(double x) const {
  for (const auto& p : pieces_)
    if (x <= p.hi.approx()) return p.poly.evaluate_approx(x);
  return pieces_.back().poly.evaluate_approx(x);
}

PiPoly evaluate(const PiecewiseFunction& f, const Angle& x) {
  if (compare(x, f.domain_lo()) < 0 || compare(x, f.domain_hi()) > 0)
    throw OutOfDomain("point " + x.str() + " lies outside the function's domain");
  const auto& pieces = f.pieces();
  if (x == f.domain_lo()) return pieces.front().poly.evaluate(x);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (x == pieces[i].hi) {
      if (i + 1 == pieces.size()) return pieces[i].poly.evaluate(x);
      return (pieces[i].poly.evaluate(x) + pieces[i + 1].poly.evaluate(x)) * Rational(1, 2);
    }
    if (compare(x, pieces[i].hi) < 0) return pieces[i].poly.evaluate(x);
  }
  return pieces.back().poly.evaluate(x);
}

PiecewiseFunction odd_extension(const PiecewiseFunction& f) {
  if (f.domain() != DomainKind::half) throw InvalidArgument("odd_extension expects a [0, pi] function");
  std::vector<Piece> pieces;
  for (auto it = f.pieces().rbegin(); it != f.pieces().rend(); ++it)
    pieces.push_back(Piece{-it->hi, -it->lo, -it->poly.reflect()});
  for (const auto& p : f.pieces()) pieces.push_back(p);
  return PiecewiseFunction(merge_equal_neighbours(std::move(pieces)), DomainKind::full, Parity::odd);
}

PiPoly square_integral(const PiecewiseFunction& f) {
  const PiecewiseFunction full = f.domain() == DomainKind::half ? odd_extension(f) : f;
  PiPoly total;
  for (const auto& p : full.pieces()) {
    XPolynomial primitive = (p.poly * p.poly).antiderivative();
    total += primitive.evaluate(p.hi) - primitive.evaluate(p.lo);
  }
  return total.divide_by_pi();
}

}  // namespace fourierlab
