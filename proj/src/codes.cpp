#include "ghcodes/codes.hpp"

#include <algorithm>

#include "ghcodes/intmath.hpp"

namespace ghcodes {

namespace {

std::vector<Place> affine_places(const CurveParams& cp) {
  std::vector<Place> all = enumerate_places(cp);
  std::vector<Place> out;
  for (const Place& p : all)
    if (p.kind == PlaceKind::Affine) out.push_back(p);
  return out;
}

LinearCode finish(const CurveParams& cp, Matrix m, std::vector<Place> places, Family fam,
                  long long r, long long s, long long t) {
  std::size_t rank = rref_in_place(cp.gf(), m);
  LinearCode c;
  c.field = cp.field;
  c.n = (long long)places.size();
  c.k = (long long)rank;
  c.gen = take_rows(m, rank);
  c.eval_places = std::move(places);
  c.family = fam;
  c.q = cp.q;
  c.r = r;
  c.s = s;
  c.t = t;
  return c;
}

}  // namespace

LinearCode build_code_r(long long r, const CurveParams& cp) {
  if (!cp.q_even()) throw OddQForCr("the one-point family needs even q (V must be rational)");
  if (r < 0) throw ROutOfRange("r must be nonnegative");
  std::vector<Place> places = enumerate_places(cp);
  std::vector<LatticePoint> mons = omega_rq_prime(r, cp);
  Matrix m(mons.size(), places.size());
  for (std::size_t row = 0; row < mons.size(); ++row) {
    FunctionExpr z = FunctionExpr::monomial(mons[row].i, mons[row].j);
    for (std::size_t col = 0; col < places.size(); ++col)
      m.at(row, col) = evaluate(z, places[col], cp);
  }
  return finish(cp, std::move(m), std::move(places), Family::CodeR, r, 0, 0);
}

LinearCode build_code_rst(long long r, long long s, long long t, const CurveParams& cp) {
  const FieldCtx& f = cp.gf();
  std::vector<Place> places = affine_places(cp);
  std::vector<LatticePoint> mons = omega_rst({r, s, t}, cp);
  Matrix m(mons.size(), places.size());
  for (std::size_t row = 0; row < mons.size(); ++row)
    for (std::size_t col = 0; col < places.size(); ++col)
      m.at(row, col) =
          f.mul(f.pow(places[col].a, mons[row].i), f.pow(places[col].b, mons[row].j));
  return finish(cp, std::move(m), std::move(places), Family::CodeRst, r, s, t);
}

LinearCode dual(const LinearCode& c) {
  LinearCode d;
  d.field = c.field;
  d.n = c.n;
  d.gen = null_space(*c.field, c.gen);
  d.k = (long long)d.gen.rows();
  d.eval_places = c.eval_places;
  d.family = Family::Derived;
  d.q = c.q;
  return d;
}

LinearCode scale(const LinearCode& c, const ScalingVector& a) {
  if ((long long)a.a.size() != c.n) throw ParamsOutOfRange("scaling vector length mismatch");
  const FieldCtx& f = *c.field;
  for (FieldElement x : a.a)
    if (f.is_zero(x)) throw ZeroScaleEntry("scaling entries must be nonzero");
  LinearCode out = c;
  out.family = Family::Derived;
  for (std::size_t i = 0; i < c.gen.rows(); ++i)
    for (std::size_t j = 0; j < c.gen.cols(); ++j)
      out.gen.at(i, j) = f.mul(c.gen.at(i, j), a.a[j]);
  rref_in_place(f, out.gen);  // rank is unchanged by a diagonal equivalence
  return out;
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  return a.field->size() == b.field->size() && a.n == b.n && a.k == b.k && a.gen == b.gen;
}

bool self_orthogonal(const LinearCode& c) {
  return is_zero_matrix(mat_mul(*c.field, c.gen, transpose(c.gen)));
}

CanonicalRst equivalence_scaling_rst(long long r, long long s, long long t,
                                     const CurveParams& cp) {
  const FieldCtx& f = cp.gf();
  const long long q = cp.q;
  const long long period = q * q + q + 1;
  const long long r1 = r + t * (q + 1);
  const long long s1 = s - t * (q * q + 1);
  const long long k = floor_div(r1, period);

  CanonicalRst out;
  out.r = r1 - k * period;
  out.s = s1 + k * q * period;
  for (const Place& p : affine_places(cp)) {
    FieldElement ab = f.pow(f.mul(p.a, p.b), -t);
    FieldElement u = f.mul(f.pow(p.a, q), f.pow(p.b, q + 1));
    out.a.a.push_back(f.mul(ab, f.pow(u, k)));
  }
  return out;
}

DualPresentation dual_formula_rs(long long r, long long s, const CurveParams& cp) {
  const FieldCtx& f = cp.gf();
  const long long q = cp.q;
  if (r < 0 || r > q * q + q) throw ROutOfRange("dual formula requires 0 <= r <= q^2+q");
  const long long A = q * q * q * q * q + q * q * q * q - q * q * q - q * q - 2 * q;
  const long long B = A - q * (q * q + q + 1);

  DualPresentation out;
  long long u_exp;
  if (r <= q * q - 1) {
    out.r = q * q - 1 - r;
    out.s = A - s;
    u_exp = q * q - 2;
  } else {
    out.r = 2 * q * q + q - r;
    out.s = B - s;
    u_exp = q * q - 3;
  }
  for (const Place& p : affine_places(cp)) {
    FieldElement u = f.mul(f.pow(p.a, q), f.pow(p.b, q + 1));
    out.a.a.push_back(f.mul(f.mul(p.a, p.b), f.pow(u, u_exp)));
  }
  return out;
}

}  // namespace ghcodes
