#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrp {

enum class errc {
  overflow,
  singular_matrix,
  degenerate_hull,
  origin_not_interior,
  not_ldp,
  not_l_reflexive,
  not_coprime,
  bad_fraction,
  ell_is_one,
  nonprimitive_generator,
  collinear_generators,
  no_decomposition,
  restriction_violated,
  parse_error,
  internal,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

// Exact signed integer. Fixed 64-bit storage; every arithmetic operation
// checks for overflow and throws instead of wrapping.
struct Int {
  long long v = 0;
  constexpr Int() = default;
  constexpr Int(long long x) : v(x) {}

  friend Int operator+(Int a, Int b) {
    long long r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw error(errc::overflow, "add");
    return r;
  }
  friend Int operator-(Int a, Int b) {
    long long r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw error(errc::overflow, "sub");
    return r;
  }
  friend Int operator*(Int a, Int b) {
    long long r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw error(errc::overflow, "mul");
    return r;
  }
  Int operator-() const {
    if (v == INT64_MIN) throw error(errc::overflow, "negate");
    return -v;
  }
  Int& operator+=(Int b) { return *this = *this + b; }
  Int& operator-=(Int b) { return *this = *this - b; }
  Int& operator*=(Int b) { return *this = *this * b; }

  friend bool operator==(Int a, Int b) { return a.v == b.v; }
  friend std::strong_ordering operator<=>(Int a, Int b) { return a.v <=> b.v; }
};

inline Int abs(Int a) { return a.v < 0 ? -a : a; }
inline int sgn(Int a) { return (a.v > 0) - (a.v < 0); }

inline Int gcd(Int a, Int b) {
  Int x = abs(a), y = abs(b);
  while (y.v != 0) {
    Int t = Int(x.v % y.v);
    x = y;
    y = t;
  }
  return x;
}

inline Int lcm(Int a, Int b) {
  if (a.v == 0 || b.v == 0) return 0;
  Int g = gcd(a, b);
  return abs(Int(a.v / g.v) * b);
}

// Quotient with exactness required.
inline Int exact_div(Int a, Int b) {
  if (b.v == 0) throw error(errc::internal, "division by zero");
  if (a.v % b.v != 0) throw error(errc::internal, "inexact division");
  return Int(a.v / b.v);
}

inline Int floor_div(Int a, Int b) {
  if (b.v == 0) throw error(errc::internal, "division by zero");
  long long q = a.v / b.v, r = a.v % b.v;
  if (r != 0 && ((r < 0) != (b.v < 0))) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) {
  if (b.v == 0) throw error(errc::internal, "division by zero");
  long long q = a.v / b.v, r = a.v % b.v;
  if (r != 0 && ((r < 0) == (b.v < 0))) ++q;
  return q;
}

// Representative of a mod m in [0, |m|).
inline Int mod_euclid(Int a, Int m) {
  if (m.v == 0) throw error(errc::internal, "zero modulus");
  long long r = a.v % m.v;
  if (r < 0) r += (m.v < 0 ? -m.v : m.v);
  return r;
}

// Exact rational, always reduced with positive denominator.
struct Rat {
  Int num = 0;
  Int den = 1;

  Rat() = default;
  Rat(Int n) : num(n), den(1) {}
  Rat(long long n) : num(n), den(1) {}
  Rat(Int n, Int d) { *this = make(static_cast<__int128>(n.v), static_cast<__int128>(d.v)); }

  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw error(errc::internal, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a != 0) {
      n /= a;
      d /= a;
    }
    Rat r;
    r.num = fit(n);
    r.den = fit(d);
    return r;
  }

  static Int fit(__int128 x) {
    if (x > INT64_MAX || x < INT64_MIN) throw error(errc::overflow, "rational out of range");
    return Int(static_cast<long long>(x));
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.num.v) * b.den.v + static_cast<__int128>(b.num.v) * a.den.v,
                static_cast<__int128>(a.den.v) * b.den.v);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.num.v) * b.den.v - static_cast<__int128>(b.num.v) * a.den.v,
                static_cast<__int128>(a.den.v) * b.den.v);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.num.v) * b.num.v,
                static_cast<__int128>(a.den.v) * b.den.v);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num.v == 0) throw error(errc::internal, "rational division by zero");
    return make(static_cast<__int128>(a.num.v) * b.den.v,
                static_cast<__int128>(a.den.v) * b.num.v);
  }
  Rat operator-() const {
    Rat r;
    r.num = -num;
    r.den = den;
    return r;
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    __int128 l = static_cast<__int128>(a.num.v) * b.den.v;
    __int128 r = static_cast<__int128>(b.num.v) * a.den.v;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_integer() const { return den.v == 1; }
  std::string str() const { return std::to_string(num.v) + "/" + std::to_string(den.v); }
};

inline Rat floor_rat(const Rat& a) { return Rat(floor_div(a.num, a.den)); }

}  // namespace lrp
