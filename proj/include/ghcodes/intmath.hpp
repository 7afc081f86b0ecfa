#pragma once

#include <cstdint>

namespace ghcodes {

// Floor/ceil division for signed integers, b > 0.
constexpr long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

constexpr long long ipow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace ghcodes
