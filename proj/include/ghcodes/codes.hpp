#pragma once

#include <memory>
#include <vector>

#include "ghcodes/matrix.hpp"
#include "ghcodes/rrspace.hpp"

namespace ghcodes {

enum class Family { CodeR, CodeRst, Derived };

/// Evaluation code with its generator matrix held in reduced row echelon
/// form. Equality of RREF matrices is equality of codes, so all row-space
/// claims are machine-checkable by direct comparison.
struct LinearCode {
  std::shared_ptr<const FieldCtx> field;
  long long n = 0, k = 0;
  Matrix gen;                       // k x n, RREF
  std::vector<Place> eval_places;   // column order
  Family family = Family::Derived;
  long long q = 0, r = 0, s = 0, t = 0;
};

/// Positionwise multipliers of a diagonal code equivalence; all nonzero.
struct ScalingVector {
  std::vector<FieldElement> a;
};

/// One-point code on D + P + V from the monomials of omega_rq_prime.
/// Defined for even q; r may exceed the dual pivot (the code is then the
/// full space).
LinearCode build_code_r(long long r, const CurveParams& cp);

/// Multi-point code on the affine places from the monomials of omega_rst.
LinearCode build_code_rst(long long r, long long s, long long t, const CurveParams& cp);

/// Null-space code, RREF'd; dual(dual(c)) == c as row spaces.
LinearCode dual(const LinearCode& c);

LinearCode scale(const LinearCode& c, const ScalingVector& a);

bool same_code(const LinearCode& a, const LinearCode& b);
bool self_orthogonal(const LinearCode& c);

/// Canonical presentation of C_{r,s,t}: the (r', s') with 0 <= r' < q^2+q+1
/// and the exact diagonal vector a with
///   build_code_rst(r,s,t) == scale(build_code_rst(r',s',0), a).
/// Each V-shift contributes (alpha beta)^{-t} per position, each r-shift
/// (alpha^q beta^{q+1})^{k}.
struct CanonicalRst {
  long long r = 0, s = 0;
  ScalingVector a;
};
CanonicalRst equivalence_scaling_rst(long long r, long long s, long long t,
                                     const CurveParams& cp);

/// Closed-form dual presentation: the (r', s') of the applicable branch and
/// the exact diagonal vector a with dual(C_{r,s}) == scale(C_{r',s'}, a).
/// For 0 <= r <= q^2-1 the vector is alpha beta (alpha^q beta^{q+1})^{q^2-2};
/// the other branch carries one extra canonicalization step, giving exponent
/// q^2-3. Requires 0 <= r <= q^2+q.
struct DualPresentation {
  long long r = 0, s = 0;
  ScalingVector a;
};
DualPresentation dual_formula_rs(long long r, long long s, const CurveParams& cp);

}  // namespace ghcodes
