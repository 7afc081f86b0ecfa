#include "ghcodes/gf.hpp"

#include <algorithm>

#include "ghcodes/intmath.hpp"

namespace ghcodes {
namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 20;
constexpr std::uint32_t kAddTableLimit = 1024;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; (long long)d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Poly = std::vector<int>;  // little-endian coefficients over GF(p)

Poly index_to_poly(std::uint32_t idx, int p, int len) {
  Poly d(len, 0);
  for (int i = 0; i < len; ++i) {
    d[i] = idx % p;
    idx /= p;
  }
  return d;
}

std::uint32_t poly_to_index(const Poly& d, int p) {
  std::uint32_t r = 0;
  for (int i = (int)d.size() - 1; i >= 0; --i) r = r * p + d[i];
  return r;
}

// a*b reduced mod the monic modulus (degree m), inputs of degree < m.
Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, int p) {
  int m = (int)modulus.size() - 1;
  std::vector<int> t(2 * m - 1, 0);
  for (int i = 0; i < m; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < m; ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p;
  }
  for (int d = 2 * m - 2; d >= m; --d) {
    int c = t[d];
    if (!c) continue;
    t[d] = 0;
    for (int k = 0; k < m; ++k) t[d - m + k] = ((t[d - m + k] - c * modulus[k]) % p + p) % p;
  }
  t.resize(m);
  return t;
}

int poly_degree(const Poly& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

// Remainder of a / b, b nonzero.
Poly poly_rem(Poly a, const Poly& b, int p) {
  int db = poly_degree(b);
  int inv_lead = 1;
  for (int x = 1; x < p; ++x)
    if (x * b[db] % p == 1) inv_lead = x;
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
    int c = a[da] * inv_lead % p;
    for (int k = 0; k <= db; ++k) a[da - db + k] = ((a[da - db + k] - c * b[k]) % p + p) % p;
  }
  return a;
}

bool poly_is_irreducible(const Poly& f, int p) {
  int m = poly_degree(f);
  if (m <= 0) return false;
  if (m == 1) return true;
  for (int d = 1; 2 * d <= m; ++d) {
    std::uint32_t count = (std::uint32_t)ipow(p, d);
    for (std::uint32_t lo = 0; lo < count; ++lo) {
      Poly g = index_to_poly(lo, p, d + 1);
      g[d] = 1;  // monic
      if (poly_degree(poly_rem(f, g, p)) < 0) return false;
    }
  }
  return true;
}

// Fixed moduli so element indices are reproducible across implementations.
// GF(8) = GF(2)[w]/(w^3+w+1), GF(27) = GF(3)[w]/(w^3+2w+1),
// GF(64) = GF(2)[w]/(w^6+w^4+w^3+w+1). Anything else gets the smallest-index
// monic irreducible of the right degree.
Poly pick_modulus(int p, int m) {
  if (p == 2 && m == 3) return {1, 1, 0, 1};
  if (p == 3 && m == 3) return {1, 2, 0, 1};
  if (p == 2 && m == 6) return {1, 1, 0, 1, 1, 0, 1};
  std::uint32_t count = (std::uint32_t)ipow(p, m);
  for (std::uint32_t lo = 0; lo < count; ++lo) {
    Poly f = index_to_poly(lo, p, m + 1);
    f[m] = 1;
    if (poly_is_irreducible(f, p)) return f;
  }
  throw InternalInconsistency("no irreducible modulus found");
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldCtx::FieldCtx(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw NonPrimeCharacteristic("characteristic must be prime");
  if (m < 1) throw ParamsOutOfRange("extension degree must be positive");
  long long sz = ipow(p, m);
  if (sz > kMaxFieldSize) throw FieldTooLarge("p^m exceeds 2^20");
  size_ = (std::uint32_t)sz;
  modulus_ = pick_modulus(p, m);
  if (!poly_is_irreducible(modulus_, p)) throw InternalInconsistency("modulus not irreducible");
  build_tables();
}

FieldElement FieldCtx::add_slow(FieldElement a, FieldElement b) const {
  Poly da = index_to_poly(a.index, p_, m_);
  Poly db = index_to_poly(b.index, p_, m_);
  for (int i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
  return {poly_to_index(da, p_)};
}

void FieldCtx::build_tables() {
  const long long ord = size_ - 1;
  auto mul_slow = [&](std::uint32_t a, std::uint32_t b) {
    Poly pa = index_to_poly(a, p_, m_);
    Poly pb = index_to_poly(b, p_, m_);
    return poly_to_index(poly_mul_mod(pa, pb, modulus_, p_), p_);
  };
  auto pow_slow = [&](std::uint32_t a, long long e) {
    std::uint32_t r = 1, base = a;
    while (e) {
      if (e & 1) r = mul_slow(r, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
    return r;
  };

  // First primitive element in index order.
  auto factors = prime_factors(ord);
  gen_ = 1;
  for (std::uint32_t cand = 2; cand < size_; ++cand) {
    bool primitive = true;
    for (long long f : factors)
      if (pow_slow(cand, ord / f) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen_ = cand;
      break;
    }
  }

  exp_.assign(2 * ord, 0);
  log_.assign(size_, 0);
  std::uint32_t x = 1;
  for (long long k = 0; k < ord; ++k) {
    exp_[k] = x;
    exp_[k + ord] = x;
    log_[x] = (std::uint32_t)k;
    x = mul_slow(x, gen_);
  }
  if (x != 1) throw InternalInconsistency("table generator is not primitive");

  if (p_ != 2 && size_ <= kAddTableLimit) {
    add_table_.assign((std::size_t)size_ * size_, 0);
    for (std::uint32_t a = 0; a < size_; ++a)
      for (std::uint32_t b = 0; b < size_; ++b)
        add_table_[(std::size_t)a * size_ + b] = add_slow({a}, {b}).index;
  }
}

}  // namespace ghcodes
