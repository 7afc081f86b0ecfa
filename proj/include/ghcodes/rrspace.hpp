#pragma once

#include <string>
#include <vector>

#include "ghcodes/curve.hpp"

namespace ghcodes {

/// Coefficients of the divisor G = rQ + sP + tV.
struct DivisorSpec {
  long long r = 0, s = 0, t = 0;
  long long degree(const CurveParams& cp) const {
    return cp.q * r + s + (cp.q - 1) * t;
  }
};

/// Exponent pair of a monomial x^i y^j.
struct LatticePoint {
  long long i = 0, j = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

std::string format_monomial(const LatticePoint& m);

/// Monomial basis of L(rQ + sP + tV): the (i,j) with
///   -t <= (q+1)i - qj < q^3+q^2+q-t,  -i - q^2 j <= s,  qi + j <= r,
/// sorted by (qi+j, j) ascending.
std::vector<LatticePoint> omega_rst(const DivisorSpec& d, const CurveParams& cp);

/// Alternative basis of L(rQ): 0 <= (q+1)i - qj, qi+j <= r, 0 <= j <= q^2-1.
std::vector<LatticePoint> omega_rq_prime(long long r, const CurveParams& cp);

/// #omega_rst; when deg G > 2g-2 the count is checked against deg G + 1 - g
/// and InternalInconsistency is thrown on disagreement.
long long rr_dim(const DivisorSpec& d, const CurveParams& cp);

/// Integers s where L(rQ + sP) jumps, scanned over [window_lo, window_hi].
/// Everything at or above the conductor is a member, so membership extends
/// past the window top.
struct WeierstrassSet {
  long long r = 0;
  long long window_lo = 0, window_hi = 0;
  std::vector<long long> members;  // sorted, within the window
  long long conductor = 0;         // least c with [c, window_hi] all members

  bool contains(long long s) const;
};

/// Window must cover [-qr, 2g].
WeierstrassSet weierstrass_H(long long r, const CurveParams& cp, long long window_lo,
                             long long window_hi);

/// Same with the default window [-qr - 1, R2 + 1].
WeierstrassSet weierstrass_H(long long r, const CurveParams& cp);

/// The n2 values of s at which the code C_{r,s} grows: members of H_r while
/// qr+s < n2, then the reflected set K+1-H_{r~} from the closed-form dual
/// presentation. Requires 0 <= r <= q^2+q.
std::vector<long long> weierstrass_H_star(long long r, const CurveParams& cp);

}  // namespace ghcodes
