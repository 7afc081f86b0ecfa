#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghcodes/codes.hpp"

namespace ghcodes {

/// Designed-distance lower bound n - deg G; 1 when the bound is vacuous.
long long goppa_lower(long long n, long long deg_g);

/// Counts of additive decompositions s_i^* = a + b with a in H_0, b in H_r,
/// one entry per element of H_r^*.
struct LambdaTable {
  long long r = 0;
  std::vector<std::pair<long long, long long>> counts;  // (s_i^*, #Lambda_i)
};
LambdaTable lambda_table(long long r, const CurveParams& cp);

/// Order bound: d(dual(C_{r,s})) >= min over s_i^* > s of #Lambda_i^r.
long long order_bound_dual(long long r, long long s, const CurveParams& cp);

/// Order bound on C_{r,s} itself via its presentation as a scaled dual:
/// the (r1, s1) with dual_formula_rs(r1, s1) = (r, s), then the bound above.
/// Diagonal scaling preserves weights, so the bound transfers exactly.
struct OrderBoundResult {
  long long r1 = 0, s1 = 0;
  long long bound = 0;
};
OrderBoundResult order_bound_for_code(long long r, long long s, const CurveParams& cp);

/// Explicit codeword meeting the designed distance.
struct WitnessResult {
  int case_id = 0;
  long long r = 0, s = 0;  // the code it certifies (s unused for the one-point family)
  FunctionExpr z;
  std::vector<FieldElement> codeword;
  long long weight = 0;
};

/// Construction parameters, interpreted per family and case:
///  one-point family  case 1: t;  case 2: none;  case 3: t;  case 4: t.
///  multi-point family case 1: r, tau;  case 2: none;  case 3: r, tau, lambda;
///                     case 4: lambda;  case 5: r, tau.
struct WitnessSpec {
  int case_id = 0;
  long long t = 0, r = 0, tau = 0, lambda = 0;
};

/// Builds the case's function with deterministically chosen constants
/// (smallest element indices meeting the exclusion constraints), evaluates
/// it, asserts membership in the code, and checks the weight equals the
/// designed distance. Throws ParamsOutOfRange / WeightMismatch.
WitnessResult witness_codeword(Family family, const WitnessSpec& spec, const CurveParams& cp);

/// First case (in case order) applicable to the given code parameters.
std::optional<WitnessResult> find_witness_code_r(long long r, const CurveParams& cp);
std::optional<WitnessResult> find_witness_code_rs(long long r, long long s,
                                                  const CurveParams& cp);

/// Weight-2 codeword of C_r supported on the origin and the first V place,
/// for q^4+q^3-q^2-2q-3 < r <= R1, even q; verified against all parity
/// checks. Throws ParamsOutOfRange / NotFound.
std::vector<FieldElement> weight2_codeword(long long r, const CurveParams& cp);

struct DistanceReport {
  long long lower = 1;
  std::string lower_source = "trivial";
  long long upper = 0;
  std::string upper_source = "trivial";
  std::optional<long long> exact;
};

struct DistanceBudget {
  double seconds = 60.0;
};

/// Exact minimum distance via a strategy cascade: dependent-column search
/// over the parity-check matrix for d <= 6, full projective message
/// enumeration for k <= 9, information-set (Brouwer-Zimmermann style)
/// enumeration otherwise. Returns a bracket when the budget runs out.
DistanceReport exact_distance(const LinearCode& c, const DistanceBudget& budget,
                              long long known_lower = 1,
                              const std::string& known_lower_source = "trivial");

}  // namespace ghcodes
