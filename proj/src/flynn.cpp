#include "dp4/flynn.hpp"

#include <stdexcept>
#include <string>

#include "dp4/factorize.hpp"

namespace dp4 {
namespace {

void check_factor_poly(const UniPoly& f, int deg, const char* name) {
  std::string who = std::string("flynn: ") + name;
  if (f.degree() != deg) throw std::invalid_argument(who + " must have degree " + std::to_string(deg));
  if (f.leading() != Rational(1)) throw std::invalid_argument(who + " must be monic");
  for (const Rational& c : f.coeffs()) {
    if (c.get_den() != 1) throw std::invalid_argument(who + " must have integer coefficients");
  }
  if (!is_irreducible_rational(f)) throw std::invalid_argument(who + " must be irreducible");
}

void validate_datum(const FlynnDatum& datum) {
  check_factor_poly(datum.f2, 2, "f2");
  check_factor_poly(datum.f3, 3, "f3");
  if (datum.d == 0 || !is_squarefree(datum.d)) {
    throw std::invalid_argument("flynn: d must be nonzero and squarefree");
  }
  UniPoly eps = nf_reduce(datum.eps3, datum.f3);
  if (eps.is_zero()) throw std::invalid_argument("flynn: eps3 must be nonzero");
  Rational n = nf_norm(eps, datum.f3);
  if (n == 0 || !is_rational_square(n)) {
    throw std::invalid_argument("flynn: eps3 must have nonzero square norm");
  }
}

struct AlgebraData {
  UniPoly f;   // f2 * f3, monic quintic
  UniPoly e2;  // idempotent: 1 mod f2, 0 mod f3
  UniPoly e3;  // idempotent: 0 mod f2, 1 mod f3
};

AlgebraData split_algebra(const FlynnDatum& datum) {
  AlgebraData alg;
  alg.f = datum.f2 * datum.f3;
  XgcdResult x = xgcd_poly(datum.f2, datum.f3);
  if (x.g.degree() != 0) throw std::logic_error("flynn: f2 and f3 are not coprime");
  // Normalize so that u*f2 + v*f3 = 1 exactly.
  Rational lead = x.g.coeff(0);
  UniPoly u = (Rational(1) / lead) * x.u;
  UniPoly v = (Rational(1) / lead) * x.v;
  alg.e2 = nf_reduce(v * datum.f3, alg.f);
  alg.e3 = nf_reduce(u * datum.f2, alg.f);
  return alg;
}

}  // namespace

FlynnDatum family_flynn_datum(const Integer& d, BasisMode mode) {
  return {family_f2(), family_f3(), d, UniPoly::monomial(1), mode};
}

std::pair<QuadraticForm, QuadraticForm> flynn_quadrics(const FlynnDatum& datum) {
  validate_datum(datum);
  AlgebraData alg = split_algebra(datum);
  const UniPoly& f = alg.f;
  const UniPoly theta = UniPoly::monomial(1);

  // eps = d on the f2-component, eps3 on the f3-component.
  UniPoly eps = nf_add(nf_mul(UniPoly::constant(Rational(datum.d)), alg.e2, f),
                       nf_mul(nf_reduce(datum.eps3, datum.f3), alg.e3, f), f);

  std::vector<UniPoly> basis;
  if (datum.mode == BasisMode::Power) {
    for (int i = 0; i < 5; ++i) basis.push_back(UniPoly::monomial(i));
  } else {
    basis = {alg.e2, nf_mul(theta, alg.e2, f), alg.e3, nf_mul(theta, alg.e3, f),
             nf_mul(nf_mul(theta, theta, f), alg.e3, f)};
  }

  Mat m3(5, std::vector<Rational>(5, Rational(0)));
  Mat m4 = m3;
  for (int i = 0; i < 5; ++i) {
    for (int j = i; j < 5; ++j) {
      UniPoly prod = nf_mul(nf_mul(basis[i], basis[j], f), eps, f);
      Rational c3 = prod.degree() >= 3 ? prod.coeff(3) : Rational(0);
      Rational c4 = prod.degree() >= 4 ? prod.coeff(4) : Rational(0);
      m3[i][j] = m3[j][i] = c3;
      m4[i][j] = m4[j][i] = c4;
    }
  }

  Rational a4 = f.coeff(4);
  Mat q0(5, std::vector<Rational>(5, Rational(0)));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) q0[i][j] = a4 * m4[i][j] - m3[i][j];
  }
  return {make_form(q0), make_form(m4)};
}

PencilMatchReport verify_pencil_match(const FlynnDatum& datum, const QuadricPencil& pencil) {
  validate_datum(datum);
  PencilMatchReport rep;

  UniPoly target = monic(datum.f2 * datum.f3);
  bool degree_ok = pencil.phi.degree() == 5;  // no singular fiber at infinity
  bool radical_ok = degree_ok && squarefree_radical(pencil.phi) == target;
  rep.radical_match = radical_ok && pencil.squarefree;
  if (!degree_ok) {
    rep.detail += "characteristic form does not have degree 5; ";
  } else if (!radical_ok) {
    rep.detail += "characteristic form radical differs from f2*f3; ";
  } else if (!pencil.squarefree) {
    rep.detail += "characteristic form is not squarefree; ";
  }

  const SingularFactor* s2 = nullptr;
  const SingularFactor* s3 = nullptr;
  for (const SingularFactor& fac : pencil.factors) {
    if (fac.at_infinity) continue;
    if (monic(fac.poly) == monic(datum.f2)) s2 = &fac;
    if (monic(fac.poly) == monic(datum.f3)) s3 = &fac;
  }

  if (s2 != nullptr && pencil.squarefree) {
    NumberFieldElem cls = disc_at_factor(pencil, *s2);
    UniPoly ratio = nf_div(cls.rep, UniPoly::constant(Rational(datum.d)), cls.modulus);
    rep.disc2_match = nf_sqrt(ratio, cls.modulus).has_value();
  }
  if (!rep.disc2_match) rep.detail += "discriminant class over f2 is not [d]; ";

  if (s3 != nullptr && pencil.squarefree) {
    NumberFieldElem cls = disc_at_factor(pencil, *s3);
    UniPoly eps = nf_reduce(datum.eps3, cls.modulus);
    if (!eps.is_zero()) {
      UniPoly ratio = nf_div(cls.rep, eps, cls.modulus);
      rep.disc3_match = nf_sqrt(ratio, cls.modulus).has_value();
    }
  }
  if (!rep.disc3_match) rep.detail += "discriminant class over f3 is not [eps3]; ";

  return rep;
}

}  // namespace dp4
