#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cgr {

// The slack parameter of the stability machinery, kept as an exact rational
// so the integer bounds below never depend on floating point.
struct Delta {
  long long num = 1;
  long long den = 1024;

  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  // delta < a/b ?
  bool less_than(long long a, long long b) const { return num * b < a * den; }
  bool positive() const { return num > 0 && den > 0; }

  // Accepts "p/q" or a plain decimal like "0.01".
  static std::optional<Delta> parse(std::string_view s);
};

inline long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// Largest integer d with d <= a*delta*n + c  (desk-scale upper bound: the
// real bound rounded up so that constant-size planted structures at small n
// are not rejected by an asymptotic inequality).
inline long long delta_upper(const Delta& d, long long a, long long n, long long c = 0) {
  return ceil_div(a * n * d.num, d.den) + c;
}

// Smallest integer s admitted for a lower bound of the form (p/q - a*delta)*n,
// rounded down (same desk-scale direction).
inline long long delta_lower(const Delta& d, long long p, long long q, long long a,
                             long long n) {
  return floor_div(n * (p * d.den - q * a * d.num), q * d.den);
}

// Mathematically exact threshold for "value >= (p/q + a*delta)*n" on integers.
inline long long delta_atleast_exact(const Delta& d, long long p, long long q,
                                     long long a, long long n) {
  return ceil_div(n * (p * d.den + q * a * d.num), q * d.den);
}

// value >= a*delta*n + c, exact real comparison on an integer value.
inline bool at_least_delta(const Delta& d, long long value, long long a, long long n,
                           long long c = 0) {
  return (value - c) * d.den >= a * n * d.num;
}

}  // namespace cgr
