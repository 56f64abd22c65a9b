#pragma once

// Exact integer arithmetic. Fixed-width operations throw CoefficientOverflow
// instead of wrapping; BigInt is the fallback when that happens.

#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubhom/error.hpp"

namespace cubhom {

using BigInt = boost::multiprecision::cpp_int;

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::CoefficientOverflow, "addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::CoefficientOverflow, "subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::CoefficientOverflow, "multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) fail(ErrorCode::CoefficientOverflow, "negation");
  return -a;
}

// Truncating division; only the INT64_MIN / -1 case can overflow.
inline std::int64_t quot(std::int64_t a, std::int64_t b) {
  if (b == -1) return neg(a);
  return a / b;
}

inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? neg(a) : a; }

inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt neg(const BigInt& a) { return -a; }
inline BigInt quot(const BigInt& a, const BigInt& b) { return a / b; }
inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// Floor division, so that a - floor_div(a,b)*b has the sign of b.
template <class T>
T floor_div(const T& a, const T& b) {
  T q = quot(a, b);
  if (sub(a, mul(q, b)) != 0 && ((a < 0) != (b < 0))) q = sub(q, T(1));
  return q;
}

// Extended gcd: returns g >= 0 with s*a + t*b = g.
template <class T>
T extended_gcd(T a, T b, T& s, T& t) {
  T s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    T q = quot(a, b);
    T r = sub(a, mul(q, b));
    a = b;
    b = r;
    T ns = sub(s0, mul(q, s1));
    s0 = s1;
    s1 = ns;
    T nt = sub(t0, mul(q, t1));
    t0 = t1;
    t1 = nt;
  }
  if (a < 0) {
    a = neg(a);
    s0 = neg(s0);
    t0 = neg(t0);
  }
  s = s0;
  t = t0;
  return a;
}

inline std::int64_t narrow(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    fail(ErrorCode::CoefficientOverflow, "value does not fit 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

}  // namespace cubhom
