#include "ghcodes/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "ghcodes/intmath.hpp"

namespace ghcodes {

long long goppa_lower(long long n, long long deg_g) {
  if (deg_g >= n) return 1;
  return n - deg_g;
}

LambdaTable lambda_table(long long r, const CurveParams& cp) {
  const long long q = cp.q;
  std::vector<long long> hstar = weierstrass_H_star(r, cp);
  const long long smax = hstar.back();
  WeierstrassSet h0 = weierstrass_H(0, cp, -1, smax + 1);
  WeierstrassSet hr = weierstrass_H(r, cp, -q * r - 1, smax + 1);

  LambdaTable tab;
  tab.r = r;
  for (long long sstar : hstar) {
    long long count = 0;
    for (long long a : h0.members) {
      if (a > sstar + q * r) break;  // b would drop below min(H_r) >= -qr
      if (hr.contains(sstar - a)) ++count;
    }
    tab.counts.emplace_back(sstar, count);
  }
  return tab;
}

long long order_bound_dual(long long r, long long s, const CurveParams& cp) {
  LambdaTable tab = lambda_table(r, cp);
  long long best = std::numeric_limits<long long>::max();
  for (auto& [sstar, count] : tab.counts)
    if (sstar > s) best = std::min(best, count);
  if (best == std::numeric_limits<long long>::max())
    throw ParamsOutOfRange("no H* element above s: the code is the full space");
  return best;
}

OrderBoundResult order_bound_for_code(long long r, long long s, const CurveParams& cp) {
  const long long q = cp.q;
  if (r < 0 || r > q * q + q) throw ROutOfRange("order bound requires 0 <= r <= q^2+q");
  const long long A = q * q * q * q * q + q * q * q * q - q * q * q - q * q - 2 * q;
  const long long B = A - q * (q * q + q + 1);
  OrderBoundResult out;
  if (r <= q * q - 1) {
    out.r1 = q * q - 1 - r;
    out.s1 = A - s;
  } else {
    out.r1 = 2 * q * q + q - r;
    out.s1 = B - s;
  }
  out.bound = order_bound_dual(out.r1, out.s1, cp);
  return out;
}

// ---------------------------------------------------------------------------
// Witness codewords
// ---------------------------------------------------------------------------

namespace {

std::vector<FieldElement> nonzero_elements(const FieldCtx& f) {
  std::vector<FieldElement> out;
  for (std::uint32_t i = 1; i < f.size(); ++i) out.push_back({i});
  return out;
}

// The t smallest-index nonzero elements passing the filter.
template <typename Pred>
std::vector<FieldElement> pick_elements(const FieldCtx& f, long long t, Pred&& keep) {
  std::vector<FieldElement> out;
  for (std::uint32_t i = 1; i < f.size() && (long long)out.size() < t; ++i)
    if (keep(FieldElement{i})) out.push_back({i});
  if ((long long)out.size() < t)
    throw ParamsOutOfRange("not enough field elements satisfy the constraints");
  return out;
}

WitnessResult finalize_witness(Family family, int case_id, long long r, long long s,
                               FunctionExpr z, const CurveParams& cp) {
  // Membership of z in the Riemann-Roch space, from the symbolic valuations.
  Valuations v = function_valuations(z, cp);
  if (v.at_q < -r || v.at_p < -(family == Family::CodeR ? 0 : s) ||
      v.at_v < 0)
    throw InternalInconsistency("witness function leaves the Riemann-Roch space");

  LinearCode code = family == Family::CodeR ? build_code_r(r, cp)
                                            : build_code_rst(r, s, 0, cp);
  WitnessResult res;
  res.case_id = case_id;
  res.r = r;
  res.s = s;
  res.z = z;
  for (const Place& pl : code.eval_places) res.codeword.push_back(evaluate(z, pl, cp));
  res.weight = (long long)std::count_if(res.codeword.begin(), res.codeword.end(),
                                        [](FieldElement x) { return x.index != 0; });
  if (!in_row_space(*code.field, code.gen, res.codeword))
    throw InternalInconsistency("witness codeword is not in the code");
  const long long designed =
      family == Family::CodeR ? goppa_lower(cp.n1, cp.q * r) : goppa_lower(cp.n2, cp.q * r + s);
  if (res.weight != designed) throw WeightMismatch("witness weight differs from the bound");
  return res;
}

WitnessResult witness_code_r(const WitnessSpec& spec, const CurveParams& cp) {
  const FieldCtx& f = cp.gf();
  const long long q = cp.q;
  const long long q3 = (long long)q * q * q;
  FunctionExpr z;
  long long r = 0;
  switch (spec.case_id) {
    case 1: {  // r = qt: product of t fibers of x
      if (spec.t < 0 || spec.t > q3 - 1) throw ParamsOutOfRange("case 1 needs 0 <= t <= q^3-1");
      r = q * spec.t;
      z = FunctionExpr::monomial(0, 0);
      for (FieldElement a : pick_elements(f, spec.t, [](FieldElement) { return true; }))
        z.times_x_minus(a);
      break;
    }
    case 2: {  // r = 1+q: x(y - beta)
      r = 1 + q;
      z = FunctionExpr::monomial(1, 0);
      z.times_y_minus(f.one());
      break;
    }
    case 3: {  // r = 1+qt: x(y - beta) over alphas off beta's fiber
      if (spec.t <= 0 || spec.t > q3 - q * q)
        throw ParamsOutOfRange("case 3 needs 0 < t <= q^3-q^2");
      r = 1 + q * spec.t;
      FieldElement beta = f.one();
      z = FunctionExpr::monomial(1, 0);
      z.times_y_minus(beta);
      for (FieldElement a :
           pick_elements(f, spec.t - 1, [&](FieldElement x) { return !cp.on_curve(x, beta); }))
        z.times_x_minus(a);
      break;
    }
    case 4: {  // r = (1+q) + (q^3+q^2+q)t
      if (spec.t < 0 || spec.t > q - 2) throw ParamsOutOfRange("case 4 needs 0 <= t <= q-2");
      r = (1 + q) + (q3 + q * q + q) * spec.t;
      const long long cnt = 1 + (q * q + q + 1) * spec.t;
      z = FunctionExpr::monomial(1 + q * q * spec.t, -spec.t);
      for (FieldElement b : pick_elements(f, cnt, [](FieldElement) { return true; }))
        z.times_y_minus(b);
      break;
    }
    default:
      throw ParamsOutOfRange("one-point family has cases 1..4");
  }
  if (r >= q * q * q * q - q + 1)
    throw ParamsOutOfRange("witness requires r < q^4-q+1");
  return finalize_witness(Family::CodeR, spec.case_id, r, 0, z, cp);
}

WitnessResult witness_code_rst(const WitnessSpec& spec, const CurveParams& cp) {
  const FieldCtx& f = cp.gf();
  const long long q = cp.q;
  const long long q3 = (long long)q * q * q;
  const long long step = q3 + q * q + q;
  FunctionExpr z;
  long long r = spec.r, s = 0;
  switch (spec.case_id) {
    case 1: {
      const long long kappa = (q * q + q + 1) * spec.tau - (q + 1) * r;
      if (kappa < 0 || kappa > q3 - 1 || q * spec.tau - r < 0)
        throw ParamsOutOfRange("case 1 constraints violated");
      s = step * (q * spec.tau - r);
      z = FunctionExpr::monomial(0, 0);
      z.times_unit_pv(r - q * spec.tau);
      for (FieldElement a : pick_elements(f, kappa, [](FieldElement) { return true; }))
        z.times_x_minus(a);
      break;
    }
    case 2: {
      r = 0;
      s = q * q;
      z = FunctionExpr::monomial(0, -1);
      z.times_y_minus(f.one());
      break;
    }
    case 3: {
      const long long kappa = (q * q + q + 1) * spec.tau - (q + 1) * r;
      if (spec.lambda < 0 || kappa < 0 || kappa > q3 - 1 - spec.lambda * q * q)
        throw ParamsOutOfRange("case 3 constraints violated");
      s = (q * spec.tau - r) * step + spec.lambda * q * q;
      auto betas = pick_elements(f, spec.lambda, [](FieldElement) { return true; });
      z = FunctionExpr::monomial(0, -spec.lambda);
      for (FieldElement b : betas) z.times_y_minus(b);
      z.times_unit_pv(r - q * spec.tau);
      auto off_fibers = [&](FieldElement a) {
        return std::none_of(betas.begin(), betas.end(),
                            [&](FieldElement b) { return cp.on_curve(a, b); });
      };
      for (FieldElement a : pick_elements(f, kappa, off_fibers)) z.times_x_minus(a);
      break;
    }
    case 4: {
      if (spec.lambda < 1 || spec.lambda * q * q > q3 - 1)
        throw ParamsOutOfRange("case 4 needs 1 <= lambda with lambda q^2 <= q^3-1");
      r = 0;
      s = q * q * (q3 - 1 - spec.lambda);
      z = FunctionExpr::monomial(0, spec.lambda);
      for (FieldElement b : pick_elements(f, spec.lambda, [](FieldElement) { return true; }))
        z.times_y_minus(b, -1);
      z.times_unit_pv(q - q * q);
      for (FieldElement a : nonzero_elements(f)) z.times_x_minus(a);
      break;
    }
    case 5: {
      const long long eps = (q * q + q + 1) * spec.tau + (q + 1) * r;
      if (eps < 0 || eps > q3 - 1) throw ParamsOutOfRange("case 5 constraints violated");
      s = step * ((q - 1) * q - (q * spec.tau + r));
      z = FunctionExpr::monomial(0, -(q3 - 1));
      for (FieldElement b : nonzero_elements(f)) z.times_y_minus(b);
      z.times_unit_pv(q * spec.tau + r);
      for (FieldElement a : pick_elements(f, eps, [](FieldElement) { return true; }))
        z.times_x_minus(a, -1);
      break;
    }
    default:
      throw ParamsOutOfRange("multi-point family has cases 1..5");
  }
  if (q * r + s < 0 || q * r + s >= cp.n2)
    throw ParamsOutOfRange("witness requires 0 <= qr+s < n2");
  return finalize_witness(Family::CodeRst, spec.case_id, r, s, z, cp);
}

}  // namespace

WitnessResult witness_codeword(Family family, const WitnessSpec& spec, const CurveParams& cp) {
  if (family == Family::CodeR) return witness_code_r(spec, cp);
  if (family == Family::CodeRst) return witness_code_rst(spec, cp);
  throw ParamsOutOfRange("witness requires a concrete code family");
}

std::optional<WitnessResult> find_witness_code_r(long long r, const CurveParams& cp) {
  const long long q = cp.q;
  if (!cp.q_even() || r < 0 || r >= q * q * q * q - q + 1) return std::nullopt;
  const long long step = (long long)q * q * q + q * q + q;
  std::vector<WitnessSpec> candidates;
  if (r % q == 0) candidates.push_back({1, r / q, 0, 0, 0});
  if (r == 1 + q) candidates.push_back({2, 0, 0, 0, 0});
  if (r % q == 1 && r > 1) candidates.push_back({3, (r - 1) / q, 0, 0, 0});
  if ((r - 1 - q) % step == 0 && r >= 1 + q)
    candidates.push_back({4, (r - 1 - q) / step, 0, 0, 0});
  for (const WitnessSpec& spec : candidates) {
    try {
      return witness_codeword(Family::CodeR, spec, cp);
    } catch (const ParamsOutOfRange&) {
    }
  }
  return std::nullopt;
}

std::optional<WitnessResult> find_witness_code_rs(long long r, long long s,
                                                  const CurveParams& cp) {
  const long long q = cp.q;
  const long long q3 = (long long)q * q * q;
  const long long step = q3 + q * q + q;
  if (q * r + s < 0 || q * r + s >= cp.n2) return std::nullopt;

  std::vector<WitnessSpec> candidates;
  if (s % step == 0 && (s / step + r) % q == 0)
    candidates.push_back({1, 0, r, (s / step + r) / q, 0});
  if (r == 0 && s == q * q) candidates.push_back({2, 0, 0, 0, 0});
  for (long long lambda = 0; lambda * q * q <= q3 - 1; ++lambda) {
    long long rest = s - lambda * q * q;
    if (rest % step == 0 && (rest / step + r) % q == 0)
      candidates.push_back({3, 0, r, (rest / step + r) / q, lambda});
  }
  if (r == 0 && s % (q * q) == 0) {
    long long lambda = q3 - 1 - s / (q * q);
    if (lambda >= 1) candidates.push_back({4, 0, 0, 0, lambda});
  }
  if (s % step == 0) {
    long long m = (q - 1) * q - s / step - r;  // q*tau
    if (m % q == 0) candidates.push_back({5, 0, r, m / q, 0});
  }
  for (const WitnessSpec& spec : candidates) {
    try {
      WitnessResult w = witness_codeword(Family::CodeRst, spec, cp);
      if (w.r == r && w.s == s) return w;
    } catch (const ParamsOutOfRange&) {
    }
  }
  return std::nullopt;
}

std::vector<FieldElement> weight2_codeword(long long r, const CurveParams& cp) {
  const long long q = cp.q;
  if (!cp.q_even()) throw ParamsOutOfRange("weight-2 regime needs even q");
  const long long lo = q * q * q * q + q * q * q - q * q - 2 * q - 3;
  if (r <= lo || r > cp.R1) throw ParamsOutOfRange("r outside the weight-2 regime");

  LinearCode code = build_code_r(r, cp);
  std::vector<FieldElement> c((std::size_t)code.n, cp.gf().zero());
  std::size_t origin_pos = 0, v_pos = 0;
  bool seen_v = false;
  for (std::size_t i = 0; i < code.eval_places.size(); ++i) {
    if (code.eval_places[i].kind == PlaceKind::Origin) origin_pos = i;
    if (!seen_v && code.eval_places[i].kind == PlaceKind::InfV) {
      v_pos = i;
      seen_v = true;
    }
  }
  if (!seen_v) throw NotFound("no V place");
  c[origin_pos] = cp.gf().one();
  c[v_pos] = cp.gf().neg(cp.gf().one());

  LinearCode parity = dual(code);
  for (std::size_t row = 0; row < parity.gen.rows(); ++row) {
    FieldElement acc = cp.gf().zero();
    for (std::size_t col = 0; col < (std::size_t)parity.n; ++col)
      acc = cp.gf().add(acc, cp.gf().mul(parity.gen.at(row, col), c[col]));
    if (!cp.gf().is_zero(acc)) throw NotFound("weight-2 vector fails a parity check");
  }
  return c;
}

// ---------------------------------------------------------------------------
// Exact distance engine
// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  bool expired() const { return Clock::now() > end; }
};

// Smallest w <= wmax with w linearly dependent columns of m (m may have zero
// rows, in which case every single column is dependent). 0 when none found.
long long min_dependent_columns(const FieldCtx& f, const Matrix& m, long long wmax) {
  const std::size_t n = m.cols(), rows = m.rows();
  if (rows == 0) return n > 0 ? 1 : 0;

  // DFS over column subsets in increasing index order, keeping the chosen
  // columns reduced against each other; a column that reduces to zero closes
  // a dependent set of the current size.
  std::vector<std::vector<FieldElement>> basis;  // reduced columns
  std::vector<std::size_t> pivot_row;

  auto reduce = [&](std::vector<FieldElement>& col) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      FieldElement fac = col[pivot_row[b]];
      if (f.is_zero(fac)) continue;
      for (std::size_t r = 0; r < rows; ++r)
        col[r] = f.sub(col[r], f.mul(fac, basis[b][r]));
    }
  };

  std::function<bool(std::size_t, long long)> dfs = [&](std::size_t start, long long depth_left) {
    if (depth_left == 0) return false;
    for (std::size_t c = start; c < n; ++c) {
      std::vector<FieldElement> col(rows);
      for (std::size_t r = 0; r < rows; ++r) col[r] = m.at(r, c);
      reduce(col);
      std::size_t pr = 0;
      while (pr < rows && f.is_zero(col[pr])) ++pr;
      if (pr == rows) return true;  // dependent with the current selection
      FieldElement iv = f.inv(col[pr]);
      for (std::size_t r = 0; r < rows; ++r) col[r] = f.mul(col[r], iv);
      basis.push_back(std::move(col));
      pivot_row.push_back(pr);
      if (dfs(c + 1, depth_left - 1)) return true;
      basis.pop_back();
      pivot_row.pop_back();
    }
    return false;
  };

  for (long long w = 1; w <= wmax; ++w)
    if (dfs(0, w)) return w;
  return 0;
}

// Minimum weight over all nonzero codewords, first nonzero message digit
// normalized to one. Only for small k.
long long full_enumeration_min_weight(const FieldCtx& f, const Matrix& gen) {
  const std::size_t k = gen.rows(), n = gen.cols();
  // Scaled copies of each row, indexed by coefficient.
  std::vector<std::vector<std::vector<FieldElement>>> scaled(k);
  for (std::size_t r = 0; r < k; ++r) {
    scaled[r].resize(f.size());
    for (std::uint32_t c = 0; c < f.size(); ++c) {
      scaled[r][c].resize(n);
      for (std::size_t j = 0; j < n; ++j) scaled[r][c][j] = f.mul({c}, gen.at(r, j));
    }
  }
  long long best = n + 1;
  std::vector<FieldElement> acc(n, f.zero());
  std::function<void(std::size_t, bool)> walk = [&](std::size_t depth, bool leading) {
    if (depth == k) {
      if (leading) return;  // all-zero message
      long long w = 0;
      for (FieldElement x : acc)
        if (x.index != 0) ++w;
      if (w < best) best = w;
      return;
    }
    // zero coefficient
    walk(depth + 1, leading);
    std::vector<FieldElement> saved = acc;
    std::uint32_t first = 1, last = leading ? 1 : f.size() - 1;
    for (std::uint32_t c = first; c <= last; ++c) {
      for (std::size_t j = 0; j < n; ++j) acc[j] = f.add(saved[j], scaled[depth][c][j]);
      walk(depth + 1, false);
    }
    acc = saved;
  };
  walk(0, true);
  return best;
}

struct InfoSetMatrix {
  Matrix gen;                      // RREF with pivots on the information set
  std::vector<std::size_t> info;   // pivot columns, one per row
  std::vector<std::size_t> rest;   // the other columns
  long long deficiency = 0;        // pivots reused from earlier sets
};

// RREF of `gen` preferring pivots among `preferred` columns (in order),
// falling back to the remaining columns.
InfoSetMatrix rref_with_preference(const FieldCtx& f, Matrix gen,
                                   const std::vector<std::size_t>& preferred,
                                   const std::vector<bool>& used) {
  const std::size_t rows = gen.rows(), cols = gen.cols();
  std::vector<std::size_t> order = preferred;
  for (std::size_t c = 0; c < cols; ++c)
    if (used[c]) order.push_back(c);

  InfoSetMatrix out;
  std::size_t pr = 0;
  for (std::size_t c : order) {
    if (pr == rows) break;
    std::size_t piv = pr;
    while (piv < rows && f.is_zero(gen.at(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != pr)
      for (std::size_t j = 0; j < cols; ++j) std::swap(gen.at(pr, j), gen.at(piv, j));
    FieldElement iv = f.inv(gen.at(pr, c));
    for (std::size_t j = 0; j < cols; ++j) gen.at(pr, j) = f.mul(gen.at(pr, j), iv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || f.is_zero(gen.at(r, c))) continue;
      FieldElement fac = gen.at(r, c);
      for (std::size_t j = 0; j < cols; ++j)
        gen.at(r, j) = f.sub(gen.at(r, j), f.mul(fac, gen.at(pr, j)));
    }
    out.info.push_back(c);
    if (used[c]) ++out.deficiency;
    ++pr;
  }
  if (pr != rows) throw InternalInconsistency("generator rank dropped during re-pivoting");
  std::vector<bool> is_info(cols, false);
  for (std::size_t c : out.info) is_info[c] = true;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_info[c]) out.rest.push_back(c);
  out.gen = std::move(gen);
  return out;
}

// Enumerates codewords whose message weight w.r.t. this matrix is exactly w;
// returns the minimum codeword weight seen (or best if nothing beats it).
long long sweep_info_set(const FieldCtx& f, const InfoSetMatrix& mat, long long w,
                         long long best) {
  const std::size_t k = mat.gen.rows();
  const std::size_t rest_n = mat.rest.size();
  // Row restrictions to the non-information columns, scaled by coefficient.
  std::vector<std::vector<std::vector<FieldElement>>> scaled(k);
  for (std::size_t r = 0; r < k; ++r) {
    scaled[r].resize(f.size());
    for (std::uint32_t c = 1; c < f.size(); ++c) {
      scaled[r][c].resize(rest_n);
      for (std::size_t j = 0; j < rest_n; ++j)
        scaled[r][c][j] = f.mul({c}, mat.gen.at(r, mat.rest[j]));
    }
  }
  std::vector<std::vector<FieldElement>> partial(w + 1,
                                                 std::vector<FieldElement>(rest_n, f.zero()));
  std::function<void(std::size_t, long long)> walk = [&](std::size_t start, long long depth) {
    const std::vector<FieldElement>& cur = partial[depth];
    if (depth == w) {
      long long wt = w;
      for (FieldElement x : cur)
        if (x.index != 0) ++wt;
      if (wt < best) best = wt;
      return;
    }
    for (std::size_t r = start; r + (w - depth - 1) < k; ++r) {
      // First chosen row keeps coefficient 1 (scalar multiples share weight).
      std::uint32_t clast = depth == 0 ? 1 : f.size() - 1;
      for (std::uint32_t c = 1; c <= clast; ++c) {
        for (std::size_t j = 0; j < rest_n; ++j)
          partial[depth + 1][j] = f.add(cur[j], scaled[r][c][j]);
        walk(r + 1, depth + 1);
      }
    }
  };
  walk(0, 0);
  return best;
}

struct BzOutcome {
  long long best = 0;
  long long proven_lower = 1;
  bool complete = false;
};

BzOutcome bz_search(const FieldCtx& f, const LinearCode& code, long long known_lower,
                    const Deadline& deadline) {
  const std::size_t n = code.gen.cols(), k = code.gen.rows();
  std::vector<InfoSetMatrix> mats;
  std::vector<bool> used(n, false);
  std::size_t used_count = 0;
  while (used_count < n) {
    std::vector<std::size_t> preferred;
    for (std::size_t c = 0; c < n; ++c)
      if (!used[c]) preferred.push_back(c);
    InfoSetMatrix m = rref_with_preference(f, code.gen, preferred, used);
    std::size_t fresh = 0;
    for (std::size_t c : m.info)
      if (!used[c]) {
        used[c] = true;
        ++fresh;
        ++used_count;
      }
    if (fresh == 0) break;  // remaining columns cannot host pivots
    mats.push_back(std::move(m));
  }

  BzOutcome out;
  out.best = n + 1;
  for (std::size_t r = 0; r < k; ++r) {
    long long wt = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (code.gen.at(r, c).index != 0) ++wt;
    out.best = std::min(out.best, wt);
  }

  for (long long w = 1; w <= (long long)k; ++w) {
    for (const InfoSetMatrix& m : mats) {
      out.best = sweep_info_set(f, m, w, out.best);
      if (deadline.expired()) return out;
    }
    long long lower = 0;
    for (const InfoSetMatrix& m : mats) lower += std::max(0LL, w + 1 - m.deficiency);
    out.proven_lower = std::max(known_lower, std::min(lower, out.best));
    if (std::max(lower, known_lower) >= out.best) {
      out.proven_lower = out.best;
      out.complete = true;
      return out;
    }
  }
  out.complete = true;  // every message weight enumerated
  out.proven_lower = out.best;
  return out;
}

}  // namespace

DistanceReport exact_distance(const LinearCode& c, const DistanceBudget& budget,
                              long long known_lower, const std::string& known_lower_source) {
  if (c.k <= 0) throw ParamsOutOfRange("distance of the zero code is undefined");
  const FieldCtx& f = *c.field;
  Deadline deadline{Clock::now() +
                    std::chrono::milliseconds((long long)(budget.seconds * 1000))};

  DistanceReport rep;
  rep.lower = std::max<long long>(known_lower, 1);
  rep.lower_source = rep.lower > 1 ? known_lower_source : "trivial";
  rep.upper = c.n;
  rep.upper_source = "trivial";

  if (c.k == c.n) {
    rep.exact = 1;
    rep.lower = rep.upper = 1;
    rep.lower_source = "singleton-trivial";
    rep.upper_source = "trivial";
    return rep;
  }

  constexpr long long kColumnSearchMax = 6;
  constexpr long long kFullEnumMaxK = 9;

  if (rep.lower <= kColumnSearchMax) {
    Matrix parity = null_space(f, c.gen);
    long long w = min_dependent_columns(f, parity, kColumnSearchMax);
    if (w > 0) {
      if (w < rep.lower)
        throw InternalInconsistency("column search beat a claimed lower bound");
      rep.exact = w;
      rep.lower = rep.upper = w;
      rep.lower_source = rep.upper_source = "exact-search";
      return rep;
    }
    rep.lower = std::max(rep.lower, kColumnSearchMax + 1);
    rep.lower_source = rep.lower == kColumnSearchMax + 1 ? "exact-search" : rep.lower_source;
  }

  if ((long long)c.k <= kFullEnumMaxK) {
    long long d = full_enumeration_min_weight(f, c.gen);
    if (d < rep.lower) throw InternalInconsistency("enumeration beat a claimed lower bound");
    rep.exact = d;
    rep.lower = rep.upper = d;
    rep.lower_source = rep.upper_source = "exact-search";
    return rep;
  }

  BzOutcome bz = bz_search(f, c, rep.lower, deadline);
  rep.upper = std::min(rep.upper, bz.best);
  rep.upper_source = "exact-search";
  rep.lower = std::max(rep.lower, bz.proven_lower);
  if (bz.complete) {
    rep.exact = bz.best;
    rep.lower = rep.upper = bz.best;
    rep.lower_source = rep.upper_source = "exact-search";
  }
  return rep;
}

}  // namespace ghcodes
