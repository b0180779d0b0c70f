#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "chowforge/error.hpp"

namespace chowforge {

using Rational = mpq_class;

/// Parses "p/q", "p", or "-p/q".
inline Rational parse_rational(std::string_view s) {
  Rational r;
  if (s.empty() || r.set_str(std::string(s), 10) != 0) {
    throw Error(ErrorKind::MalformedSpec, "bad rational '" + std::string(s) + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorKind::MalformedSpec, "zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

inline std::string format_rational(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational inverse(const Rational& r) { return 1 / r; }

/// Element of Z/p for a thread-wide modulus (see ModulusScope).
struct ModP {
  std::uint32_t v = 0;

  static std::uint32_t& modulus() {
    static thread_local std::uint32_t p = 2147483647U;
    return p;
  }

  ModP() = default;
  ModP(long long x) {  // NOLINT: implicit from integers, like Rational
    long long p = modulus();
    x %= p;
    if (x < 0) x += p;
    v = static_cast<std::uint32_t>(x);
  }
  static ModP raw(std::uint32_t x) {
    ModP m;
    m.v = x;
    return m;
  }

  friend ModP operator+(ModP a, ModP b) {
    std::uint64_t s = std::uint64_t{a.v} + b.v;
    if (s >= modulus()) s -= modulus();
    return raw(static_cast<std::uint32_t>(s));
  }
  friend ModP operator-(ModP a, ModP b) { return raw(a.v >= b.v ? a.v - b.v : a.v + modulus() - b.v); }
  friend ModP operator-(ModP a) { return raw(a.v == 0 ? 0 : modulus() - a.v); }
  friend ModP operator*(ModP a, ModP b) {
    return raw(static_cast<std::uint32_t>((std::uint64_t{a.v} * b.v) % modulus()));
  }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
  friend ModP operator/(ModP a, ModP b) { return a * inverse(b); }

  friend ModP inverse(ModP a) {
    // Fermat
    std::uint64_t result = 1, base = a.v, e = modulus() - 2, p = modulus();
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return raw(static_cast<std::uint32_t>(result));
  }
};

inline bool is_zero(ModP a) { return a.v == 0; }

/// Sets the modulus used by ModP on this thread until destroyed.
class ModulusScope {
 public:
  explicit ModulusScope(std::uint32_t p) : saved_(ModP::modulus()) { ModP::modulus() = p; }
  ~ModulusScope() { ModP::modulus() = saved_; }
  ModulusScope(const ModulusScope&) = delete;
  ModulusScope& operator=(const ModulusScope&) = delete;

 private:
  std::uint32_t saved_;
};

template <class K>
K from_rational(const Rational& r);

template <>
inline Rational from_rational<Rational>(const Rational& r) {
  return r;
}

template <>
inline ModP from_rational<ModP>(const Rational& r) {
  mpz_class p = ModP::modulus();
  mpz_class num = r.get_num() % p, den = r.get_den() % p;
  if (den == 0) throw Error(ErrorKind::MalformedSpec, "denominator divisible by the field characteristic");
  return ModP(num.get_si()) / ModP(den.get_si());
}

inline bool is_prime_u32(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Coefficient field selection: characteristic 0 means Q.
struct FieldDescriptor {
  std::uint32_t characteristic = 0;
  bool is_rational() const { return characteristic == 0; }
  std::string to_string() const { return characteristic == 0 ? "Q" : "GF(" + std::to_string(characteristic) + ")"; }
};

}  // namespace chowforge
