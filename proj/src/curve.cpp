#include "ghcodes/curve.hpp"

#include <algorithm>
#include <map>

#include "ghcodes/intmath.hpp"

namespace ghcodes {

CurveParams CurveParams::make(int q) {
  if (q < 2) throw ParamsOutOfRange("q must be a prime power >= 2");
  int p = 0;
  for (int d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int e = 0;
  long long t = q;
  while (t > 1) {
    if (t % p != 0) throw ParamsOutOfRange("q must be a prime power");
    t /= p;
    ++e;
  }

  CurveParams cp;
  cp.q = q;
  cp.p = p;
  cp.e = e;
  cp.field = std::make_shared<FieldCtx>(p, 3 * e);

  const long long Q = q;
  cp.genus = (Q * Q * Q * Q - 3 * Q + 2) / 2;
  cp.n1 = Q * (Q * Q * Q * Q - Q + 1);
  cp.n2 = (Q * Q * Q - 1) * Q * Q;
  cp.R1 = Q * Q * Q * Q + Q * Q * Q - Q - 2;
  cp.R2 = cp.n2 + 2 * cp.genus - 2;
  return cp;
}

bool CurveParams::on_curve(FieldElement alpha, FieldElement beta) const {
  const FieldCtx& f = gf();
  if (f.is_zero(alpha) || f.is_zero(beta)) return false;
  const long long Q = q;
  FieldElement t1 = f.div(f.pow(beta, Q), alpha);
  FieldElement t2 = f.div(f.pow(beta, Q * Q), f.pow(alpha, Q));
  FieldElement t3 = f.div(beta, f.pow(alpha, Q * Q));
  return f.add(f.add(t1, t2), t3) == f.one();
}

Place Place::affine(FieldElement alpha, FieldElement beta, const CurveParams& cp) {
  if (!cp.on_curve(alpha, beta)) throw ParamsOutOfRange("(alpha, beta) is not on the curve");
  return {PlaceKind::Affine, alpha, beta};
}

Place Place::origin() { return {PlaceKind::Origin, {}, {}}; }

Place Place::inf_v(FieldElement mu, const CurveParams& cp) {
  if (!cp.q_even()) throw ParamsOutOfRange("V_mu is rational only for even q");
  const FieldCtx& f = cp.gf();
  if (f.pow(mu, cp.q - 1) != f.neg(f.one()))
    throw ParamsOutOfRange("mu^(q-1) must equal -1");
  return {PlaceKind::InfV, mu, {}};
}

Place Place::inf_q(FieldElement delta, const CurveParams& cp) {
  if (cp.q_even()) throw ParamsOutOfRange("Q_delta is rational only for odd q");
  const FieldCtx& f = cp.gf();
  if (f.add(delta, f.pow(delta, cp.q)) != f.one())
    throw ParamsOutOfRange("delta + delta^q must equal 1");
  return {PlaceKind::InfQ, delta, {}};
}

std::vector<Place> enumerate_places(const CurveParams& cp) {
  const FieldCtx& f = cp.gf();
  std::vector<Place> out;
  for (std::uint32_t a = 1; a < f.size(); ++a)
    for (std::uint32_t b = 1; b < f.size(); ++b)
      if (cp.on_curve({a}, {b})) out.push_back({PlaceKind::Affine, {a}, {b}});
  out.push_back(Place::origin());
  if (cp.q_even()) {
    FieldElement minus_one = f.neg(f.one());
    for (std::uint32_t m = 1; m < f.size(); ++m)
      if (f.pow({m}, cp.q - 1) == minus_one) out.push_back({PlaceKind::InfV, {m}, {}});
  } else {
    FieldElement delta = f.inv(f.from_int(2));
    out.push_back(Place::inf_q(delta, cp));
  }
  return out;
}

Valuations monomial_valuations(long long i, long long j, const CurveParams& cp) {
  const long long q = cp.q;
  return {i + q * q * j, (q + 1) * i - q * j, -(q * i + j)};
}

namespace {

Valuations factor_valuations(const Factor& fac, const CurveParams& cp) {
  const long long q = cp.q, e = fac.exp;
  switch (fac.kind) {
    case FactorKind::XMinusConst:
      return {0, 0, -q * e};  // div(x - c) = D_c - qQ
    case FactorKind::YMinusConst:
      return {0, -q * e, -e};  // div(y - c) = D_c - qV - Q
    case FactorKind::UnitPV:
      return {(q * q * q + q * q + q) * e, 0, -(q * q + q + 1) * e};
    case FactorKind::UnitP:
      return {0, -(q * q * q + q * q + q) * e, (q * q * q - 1) * e};
  }
  throw InternalInconsistency("unknown factor kind");
}

// Factors combined by (kind, constant) so repeated mentions cancel exactly.
std::vector<Factor> combined_factors(const FunctionExpr& z) {
  std::map<std::pair<int, std::uint32_t>, long long> acc;
  for (const Factor& fac : z.factors) {
    if ((fac.kind == FactorKind::XMinusConst || fac.kind == FactorKind::YMinusConst) &&
        fac.c.index == 0)
      throw ParamsOutOfRange("factor constant must be nonzero");
    acc[{(int)fac.kind, fac.c.index}] += fac.exp;
  }
  std::vector<Factor> out;
  for (auto& [key, e] : acc)
    if (e != 0) out.push_back({(FactorKind)key.first, {key.second}, e});
  return out;
}

FieldElement eval_factor_affine(const FieldCtx& f, const Factor& fac, FieldElement alpha,
                                FieldElement beta, long long q) {
  switch (fac.kind) {
    case FactorKind::XMinusConst:
      return f.pow(f.sub(alpha, fac.c), fac.exp);
    case FactorKind::YMinusConst:
      return f.pow(f.sub(beta, fac.c), fac.exp);
    case FactorKind::UnitPV:
      return f.pow(f.mul(f.pow(alpha, q), f.pow(beta, q + 1)), fac.exp);
    case FactorKind::UnitP:
      return f.pow(f.mul(f.pow(alpha, -q * q), beta), fac.exp);
  }
  throw InternalInconsistency("unknown factor kind");
}

}  // namespace

FunctionExpr& FunctionExpr::times_x_minus(FieldElement c, long long e) {
  factors.push_back({FactorKind::XMinusConst, c, e});
  return *this;
}
FunctionExpr& FunctionExpr::times_y_minus(FieldElement c, long long e) {
  factors.push_back({FactorKind::YMinusConst, c, e});
  return *this;
}
FunctionExpr& FunctionExpr::times_unit_pv(long long e) {
  factors.push_back({FactorKind::UnitPV, {}, e});
  return *this;
}
FunctionExpr& FunctionExpr::times_unit_p(long long e) {
  factors.push_back({FactorKind::UnitP, {}, e});
  return *this;
}

Valuations function_valuations(const FunctionExpr& z, const CurveParams& cp) {
  Valuations v = monomial_valuations(z.i, z.j, cp);
  for (const Factor& fac : combined_factors(z)) {
    Valuations fv = factor_valuations(fac, cp);
    v.at_p += fv.at_p;
    v.at_v += fv.at_v;
    v.at_q += fv.at_q;
  }
  return v;
}

long long affine_valuation(const FunctionExpr& z, const Place& pl, const CurveParams& cp) {
  if (pl.kind != PlaceKind::Affine) throw ParamsOutOfRange("affine place expected");
  (void)cp;
  long long v = 0;
  for (const Factor& fac : combined_factors(z)) {
    if (fac.kind == FactorKind::XMinusConst && fac.c == pl.a) v += fac.exp;
    if (fac.kind == FactorKind::YMinusConst && fac.c == pl.b) v += fac.exp;
  }
  return v;
}

FieldElement evaluate(const FunctionExpr& z, const Place& pl, const CurveParams& cp) {
  const FieldCtx& f = cp.gf();
  const long long q = cp.q;
  std::vector<Factor> factors = combined_factors(z);

  if (pl.kind == PlaceKind::Affine) {
    const FieldElement alpha = pl.a, beta = pl.b;
    long long vx = 0, vy = 0;
    for (const Factor& fac : factors) {
      if (fac.kind == FactorKind::XMinusConst && fac.c == alpha) vx += fac.exp;
      if (fac.kind == FactorKind::YMinusConst && fac.c == beta) vy += fac.exp;
    }
    const long long total = vx + vy;
    if (total < 0) throw PoleAtPlace("pole at affine place");
    if (total > 0) return f.zero();

    FieldElement acc = f.mul(f.pow(alpha, z.i), f.pow(beta, z.j));
    if (vx != 0) {
      // (x-alpha)^vx (y-beta)^{-vx} has value (dx/dy)^vx; both are
      // uniformizers at D_{alpha,beta} and dx/dy = x^{2-q^2} y^{-q}.
      FieldElement dxdy = f.mul(f.pow(alpha, 2 - q * q), f.pow(beta, -q));
      acc = f.mul(acc, f.pow(dxdy, vx));
    }
    for (const Factor& fac : factors) {
      if (fac.kind == FactorKind::XMinusConst && fac.c == alpha) continue;
      if (fac.kind == FactorKind::YMinusConst && fac.c == beta) continue;
      acc = f.mul(acc, eval_factor_affine(f, fac, alpha, beta, q));
    }
    return acc;
  }

  // Origin and places at infinity: per-part valuations decide.
  Valuations mono = monomial_valuations(z.i, z.j, cp);
  long long vm = 0;
  switch (pl.kind) {
    case PlaceKind::Origin: vm = mono.at_p; break;
    case PlaceKind::InfV: vm = mono.at_v; break;
    case PlaceKind::InfQ: vm = mono.at_q; break;
    default: break;
  }
  long long total = vm;
  bool all_parts_zero = (vm == 0);
  for (const Factor& fac : factors) {
    Valuations fv = factor_valuations(fac, cp);
    long long v = pl.kind == PlaceKind::Origin ? fv.at_p
                : pl.kind == PlaceKind::InfV   ? fv.at_v
                                               : fv.at_q;
    total += v;
    if (v != 0) all_parts_zero = false;
  }
  if (total < 0) throw PoleAtPlace("pole at place");
  if (total > 0) return f.zero();
  if (!all_parts_zero)
    throw MixedValuationCancellation("factor valuations cancel only in total");

  FieldElement acc = f.one();
  switch (pl.kind) {
    case PlaceKind::Origin:
      // Monomial with i + q^2 j = 0 is (x^{-q^2} y)^j, a unit of value 1.
      for (const Factor& fac : factors) {
        switch (fac.kind) {
          case FactorKind::XMinusConst:
          case FactorKind::YMinusConst:
            acc = f.mul(acc, f.pow(f.neg(fac.c), fac.exp));
            break;
          case FactorKind::UnitP:
            break;  // value 1
          default:
            throw InternalInconsistency("nonzero-valuation factor slipped through");
        }
      }
      return acc;
    case PlaceKind::InfV: {
      // Monomial with (q+1)i - qj = 0 is (x^q y^{q+1})^{i/q}, value mu^{i/q}.
      if (z.i % q != 0) throw InternalInconsistency("unit monomial at V must have q | i");
      acc = f.pow(pl.a, z.i / q);
      for (const Factor& fac : factors) {
        switch (fac.kind) {
          case FactorKind::XMinusConst:
            acc = f.mul(acc, f.pow(f.neg(fac.c), fac.exp));
            break;
          case FactorKind::UnitPV:
            acc = f.mul(acc, f.pow(pl.a, fac.exp));
            break;
          default:
            throw InternalInconsistency("nonzero-valuation factor slipped through");
        }
      }
      return acc;
    }
    case PlaceKind::InfQ:
      // Monomial with qi + j = 0 is (x^{-1} y^q)^{-i}, value delta^{-i}.
      if (!factors.empty())
        throw InternalInconsistency("nonzero-valuation factor slipped through");
      return f.pow(pl.a, -z.i);
    default:
      throw InternalInconsistency("unhandled place kind");
  }
}

}  // namespace ghcodes
