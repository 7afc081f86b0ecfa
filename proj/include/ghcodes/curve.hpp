#pragma once

#include <memory>
#include <vector>

#include "ghcodes/gf.hpp"

namespace ghcodes {

/// Invariants of the curve y^q/x + y^{q^2}/x^q + y/x^{q^2} = 1 over GF(q^3).
struct CurveParams {
  int q = 0;       // prime power
  int p = 0;       // characteristic, q = p^e
  int e = 0;
  std::shared_ptr<const FieldCtx> field;  // GF(q^3)

  long long genus = 0;
  long long n1 = 0;  // deg(D + P + V) = q(q^4 - q + 1)
  long long n2 = 0;  // deg(D) = (q^3 - 1) q^2
  long long R1 = 0;  // dual pivot for the one-point family: q^4 + q^3 - q - 2
  long long R2 = 0;  // n2 + 2g - 2

  static CurveParams make(int q);

  const FieldCtx& gf() const { return *field; }
  bool q_even() const { return p == 2; }

  /// True iff (alpha, beta), both nonzero, solves the curve equation.
  bool on_curve(FieldElement alpha, FieldElement beta) const;
};

enum class PlaceKind { Affine, Origin, InfV, InfQ };

/// Rational place of the curve. `a` holds alpha / mu / delta depending on
/// the kind; `b` holds beta for affine places. Degree is always 1.
struct Place {
  PlaceKind kind = PlaceKind::Origin;
  FieldElement a, b;

  static Place affine(FieldElement alpha, FieldElement beta, const CurveParams& cp);
  static Place origin();
  static Place inf_v(FieldElement mu, const CurveParams& cp);
  static Place inf_q(FieldElement delta, const CurveParams& cp);

  friend bool operator==(const Place&, const Place&) = default;
};

/// All rational places in the fixed order: affine sorted by (alpha index,
/// beta index), then the origin, then the places at infinity (V_mu sorted
/// by mu for even q, the single Q_delta for odd q).
std::vector<Place> enumerate_places(const CurveParams& cp);

/// Valuations of x^i y^j along the three divisors at the origin / infinity.
/// V and Q are divisors of degree q-1 and q; the numbers below are the
/// coefficients in div(x^i y^j) = vp*P + vv*V + vq*Q.
struct Valuations {
  long long at_p = 0, at_v = 0, at_q = 0;
};

Valuations monomial_valuations(long long i, long long j, const CurveParams& cp);

enum class FactorKind {
  XMinusConst,  // x - c, c != 0
  YMinusConst,  // y - c, c != 0
  UnitPV,       // x^q y^{q+1}: vanishes at P, unit with value mu at V_mu
  UnitP,        // x^{-q^2} y: unit with value 1 at the origin
};

struct Factor {
  FactorKind kind;
  FieldElement c;   // the constant for XMinusConst / YMinusConst
  long long exp = 1;
};

/// Function kept in factored form: x^i y^j * prod factor^exp. Factoring is
/// load-bearing: expanding would break termwise evaluation at the places at
/// infinity, where individual monomials of a factor can have poles.
struct FunctionExpr {
  long long i = 0, j = 0;
  std::vector<Factor> factors;

  static FunctionExpr monomial(long long i, long long j) { return {i, j, {}}; }
  FunctionExpr& times_x_minus(FieldElement c, long long e = 1);
  FunctionExpr& times_y_minus(FieldElement c, long long e = 1);
  FunctionExpr& times_unit_pv(long long e);
  FunctionExpr& times_unit_p(long long e);
};

/// Total valuations of the function along P, V, Q (sums over all parts).
Valuations function_valuations(const FunctionExpr& z, const CurveParams& cp);

/// Zero order of the function at an affine place (negative = pole order).
long long affine_valuation(const FunctionExpr& z, const Place& pl, const CurveParams& cp);

/// Evaluates the function at a rational place.
///
/// Affine places substitute; a canceling pair (x-alpha)^a (y-beta)^{-a} at
/// D_{alpha,beta} contributes ((x-alpha)/(y-beta))^a with the exact local
/// value alpha^{2-q^2} beta^{-q}, both factors being uniformizers there. At
/// the origin and at infinity the value is 0 for positive total valuation
/// and the product of per-part leading values when every part has valuation
/// zero; valuations that cancel only in total are refused.
///
/// Throws PoleAtPlace / MixedValuationCancellation.
FieldElement evaluate(const FunctionExpr& z, const Place& pl, const CurveParams& cp);

}  // namespace ghcodes
