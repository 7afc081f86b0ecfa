#include "ghcodes/rrspace.hpp"

#include <algorithm>

#include "ghcodes/intmath.hpp"

namespace ghcodes {

std::string format_monomial(const LatticePoint& m) {
  if (m.i == 0 && m.j == 0) return "1";
  std::string out;
  auto part = [&](char var, long long e) {
    if (e == 0) return;
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  };
  part('x', m.i);
  part('y', m.j);
  return out;
}

std::vector<LatticePoint> omega_rst(const DivisorSpec& d, const CurveParams& cp) {
  const long long q = cp.q;
  const long long band = q * q * q + q * q + q;  // width of the (q+1)i-qj strip
  std::vector<LatticePoint> pts;
  // Enclosing j-range from the pairwise line intersections; the strip's
  // upper constraint is enforced by the filter below.
  const long long jlo = ceil_div(-(d.r + q * d.s), q * q * q - 1);
  const long long jhi = floor_div((q + 1) * d.r + q * d.t, q * q + q + 1);
  for (long long j = jlo; j <= jhi; ++j) {
    const long long ilo = std::max(ceil_div(q * j - d.t, q + 1), -d.s - q * q * j);
    const long long ihi = floor_div(d.r - j, q);
    for (long long i = ilo; i <= ihi; ++i) {
      const long long w = (q + 1) * i - q * j;
      if (w >= -d.t && w < band - d.t) pts.push_back({i, j});
    }
  }
  std::sort(pts.begin(), pts.end(), [q](const LatticePoint& a, const LatticePoint& b) {
    long long pa = q * a.i + a.j, pb = q * b.i + b.j;
    return pa != pb ? pa < pb : a.j < b.j;
  });
  return pts;
}

std::vector<LatticePoint> omega_rq_prime(long long r, const CurveParams& cp) {
  if (r < 0) throw ROutOfRange("r must be nonnegative");
  const long long q = cp.q;
  std::vector<LatticePoint> pts;
  for (long long j = 0; j <= q * q - 1; ++j)
    for (long long i = ceil_div(q * j, q + 1); i <= floor_div(r - j, q); ++i)
      pts.push_back({i, j});
  std::sort(pts.begin(), pts.end(), [q](const LatticePoint& a, const LatticePoint& b) {
    long long pa = q * a.i + a.j, pb = q * b.i + b.j;
    return pa != pb ? pa < pb : a.j < b.j;
  });
  return pts;
}

long long rr_dim(const DivisorSpec& d, const CurveParams& cp) {
  const long long count = (long long)omega_rst(d, cp).size();
  const long long deg = d.degree(cp);
  if (deg > 2 * cp.genus - 2 && count != deg + 1 - cp.genus)
    throw InternalInconsistency("lattice count disagrees with Riemann-Roch");
  return count;
}

bool WeierstrassSet::contains(long long s) const {
  if (s > window_hi) return true;  // conductor is inside the window
  if (s < window_lo) throw WindowTooSmall("membership query below the scan window");
  return std::binary_search(members.begin(), members.end(), s);
}

WeierstrassSet weierstrassH_impl(long long r, const CurveParams& cp, long long lo,
                                 long long hi) {
  if (lo > -cp.q * r || hi < 2 * cp.genus)
    throw WindowTooSmall("window must cover [-qr, 2g]");
  WeierstrassSet h{r, lo, hi, {}, 0};
  long long prev = (long long)omega_rst({r, lo - 1, 0}, cp).size();
  for (long long s = lo; s <= hi; ++s) {
    long long cur = (long long)omega_rst({r, s, 0}, cp).size();
    if (cur != prev) h.members.push_back(s);
    prev = cur;
  }
  long long c = hi + 1;
  for (auto it = h.members.rbegin(); it != h.members.rend() && *it == c - 1; ++it) --c;
  h.conductor = c;
  if (h.conductor > 2 * cp.genus - cp.q * r)
    throw InternalInconsistency("conductor above the Riemann-Roch threshold");
  return h;
}

WeierstrassSet weierstrass_H(long long r, const CurveParams& cp, long long window_lo,
                             long long window_hi) {
  return weierstrassH_impl(r, cp, window_lo, window_hi);
}

WeierstrassSet weierstrass_H(long long r, const CurveParams& cp) {
  return weierstrassH_impl(r, cp, -cp.q * r - 1, cp.R2 + 1);
}

std::vector<long long> weierstrass_H_star(long long r, const CurveParams& cp) {
  const long long q = cp.q;
  if (r < 0 || r > q * q + q) throw ROutOfRange("H* requires 0 <= r <= q^2+q");

  const long long A = q * q * q * q * q + q * q * q * q - q * q * q - q * q - 2 * q;
  const long long B = A - q * (q * q + q + 1);
  const long long K = (r <= q * q - 1) ? A : B;
  const long long rt = (r <= q * q - 1) ? q * q - 1 - r : 2 * q * q + q - r;

  WeierstrassSet h = weierstrass_H(r, cp);
  const long long lim = K + 1 - cp.n2 + q * r;  // reflected members need h <= lim
  WeierstrassSet ht =
      weierstrass_H(rt, cp, -q * rt - 1, std::max(2 * cp.genus, lim) + 1);

  std::vector<long long> out;
  for (long long s : h.members)
    if (q * r + s < cp.n2) out.push_back(s);
  for (long long x : ht.members)
    if (x <= lim) out.push_back(K + 1 - x);
  std::sort(out.begin(), out.end());
  if ((long long)out.size() != cp.n2)
    throw InternalInconsistency("H* must have exactly n2 elements");
  return out;
}

}  // namespace ghcodes
