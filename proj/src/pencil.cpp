#include "dp4/pencil.hpp"

#include <stdexcept>
#include <utility>

#include "dp4/factorize.hpp"
#include "dp4/symdiag.hpp"

namespace dp4 {

namespace {

// det(M0 + t * Minf) by interpolation at t = 0..5 (degree <= 5).
UniPoly char_affine(const QuadraticForm& q0, const QuadraticForm& qinf) {
  std::vector<Rational> pts, vals;
  for (int k = 0; k <= 5; ++k) {
    Mat m(5, std::vector<Rational>(5));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m[i][j] = q0.gram[i][j] + Rational(k) * qinf.gram[i][j];
    pts.emplace_back(k);
    vals.push_back(rational_det(std::move(m)));
  }
  return interpolate_poly(pts, vals);
}

// Divides out the largest square integer dividing every coefficient.
UniPoly strip_square_content(const UniPoly& f) {
  if (f.is_zero()) return f;
  Integer content(0);
  for (const Rational& c : f.coeffs()) {
    if (c.get_den() != 1) return f;  // only for integer representatives
    content = gcd(content, c.get_num());
  }
  Integer s(1);
  for (const auto& pe : factor_integer(abs(content)))
    for (int i = 0; i + 1 < pe.second; i += 2) s *= pe.first;
  if (s == 1) return f;
  return Rational(Integer(1), s * s) * f;
}

// Discriminant class of the fiber at the generic root of h: diagonalize the
// Gram matrix over K = Q[T]/(h) and take the product of the nonzero entries.
UniPoly disc_over_residue_field(const QuadricPencil& p, const SingularFactor& fac,
                                const UniPoly& h) {
  std::vector<std::vector<UniPoly>> mk(5, std::vector<UniPoly>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (fac.at_infinity)
        mk[i][j] = UniPoly::constant(p.qinf.gram[i][j]);
      else
        mk[i][j] = nf_reduce(
            UniPoly(std::vector<Rational>{p.q0.gram[i][j], p.qinf.gram[i][j]}), h);
    }
  NumberFieldOps ops(h);
  SymDiagResult<UniPoly> d = symmetric_diagonalize(std::move(mk), ops);
  UniPoly prod = ops.one();
  int rank = 0;
  for (const UniPoly& e : d.entries) {
    if (ops.is_zero(e)) continue;
    ++rank;
    prod = ops.mul(prod, e);
  }
  if (rank != 4)
    throw std::logic_error("disc_at_factor: singular fiber does not have rank 4");
  if (h.degree() == 1) {
    Rational c = prod.is_zero() ? Rational(0) : prod.coeff(0);
    return UniPoly::constant(Rational(squarefree_part(c)));
  }
  // Clear denominators by a square so the representative has integer coeffs.
  Integer den(1);
  for (const Rational& c : prod.coeffs()) {
    Integer d2 = c.get_den();
    den = den / gcd(den, d2) * d2;
  }
  UniPoly scaled = nf_reduce(Rational(den * den) * prod, h);
  return strip_square_content(scaled);
}

UniPoly factor_modulus(const SingularFactor& fac) {
  return fac.at_infinity ? UniPoly::monomial(1) : fac.poly;
}

}  // namespace

QuadricPencil pencil_new(const QuadraticForm& q0, const QuadraticForm& qinf) {
  if (q0.n != 5 || qinf.n != 5)
    throw std::invalid_argument("pencil_new: both forms must be in 5 variables");
  QuadricPencil p;
  p.q0 = q0;
  p.qinf = qinf;
  p.phi = char_affine(q0, qinf);
  if (p.phi.is_zero())
    throw std::invalid_argument("pencil_new: degenerate pencil (char form vanishes)");
  int inf_mult = 5 - p.phi.degree();
  RationalFactorization fac = factor_poly_rational(p.phi);
  for (const auto& fm : fac.factors) {
    if (fm.first.degree() < 1) continue;
    SingularFactor sf;
    sf.poly = fm.first;
    sf.degree = fm.first.degree();
    sf.multiplicity = fm.second;
    if (sf.multiplicity > 1) p.squarefree = false;
    p.factors.push_back(std::move(sf));
  }
  if (inf_mult > 0) {
    SingularFactor sf;
    sf.at_infinity = true;
    sf.degree = 1;
    sf.multiplicity = inf_mult;
    if (inf_mult > 1) p.squarefree = false;
    p.factors.push_back(std::move(sf));
  }
  if (p.squarefree)
    for (auto& sf : p.factors)
      sf.disc_class = disc_over_residue_field(p, sf, factor_modulus(sf));
  return p;
}

QuadraticForm fiber(const QuadricPencil& p, const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("fiber: (0, 0) is not a parameter");
  if (gcd(a, b) != 1) throw std::invalid_argument("fiber: (a, b) must be coprime");
  Mat g(5, std::vector<Rational>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      g[i][j] = Rational(b) * p.q0.gram[i][j] + Rational(a) * p.qinf.gram[i][j];
  return make_form(std::move(g));
}

NumberFieldElem disc_at_factor(const QuadricPencil& p, const SingularFactor& fac) {
  if (!p.squarefree)
    throw std::invalid_argument("disc_at_factor: characteristic form not squarefree");
  UniPoly modulus = factor_modulus(fac);
  return {modulus, disc_over_residue_field(p, fac, modulus)};
}

bool line_fiber_has_point(const QuadricPencil& p, const Integer& a, const Integer& b,
                          const std::optional<Place>& scope) {
  Rational value = eval_homogeneous(p.phi, Rational(a), Rational(b), 5);
  if (value == 0)
    throw std::domain_error("line_fiber_has_point: parameter lies on a singular fiber");
  return quadric_contains_line(fiber(p, a, b), scope);
}

}  // namespace dp4
