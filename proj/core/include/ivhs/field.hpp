#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "ivhs/linalg.hpp"

namespace ivhs {

/// Which arithmetic a ring computation runs in.  Rational is exact over Q;
/// Modular reduces integer data modulo a prime.  A rank computed modulo p
/// never exceeds the rank over Q, so modular ranks are certified lower bounds.
enum class Arithmetic { Rational, Modular };

std::string to_string(Arithmetic a);

/// Z/p for primes below 2^26.  Values are canonical residues; the
/// accumulator type holds unreduced sums so that elimination can defer the
/// modulo: every product is < 2^52, so 4095 of them fit in 64 bits.
class PrimeField {
 public:
  using Value = std::uint32_t;
  using Acc = std::uint64_t;
  static constexpr int kLazyBudget = 4000;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Value from_rational(const Rational& x) const;
  Value from_int(std::int64_t x) const;

  Value add(Value a, Value b) const { return static_cast<Value>((Acc{a} + b) % p_); }
  Value sub(Value a, Value b) const { return static_cast<Value>((Acc{a} + p_ - b) % p_); }
  Value mul(Value a, Value b) const { return static_cast<Value>((Acc{a} * b) % p_); }
  Value neg(Value a) const { return a == 0 ? 0 : p_ - a; }
  Value inv(Value a) const;
  static bool is_zero(Value a) { return a == 0; }
  static Value zero() { return 0; }
  static Value one() { return 1; }

  // Accumulator interface used by SemiEchelon.
  Value reduce(Acc a) const { return static_cast<Value>(a % p_); }
  static Acc lift(Value v) { return v; }
  static void clear(Acc& a) { a = 0; }
  /// acc[k] += c * x[k], unreduced.
  static void axpy(Acc* acc, Value c, const Value* x, std::size_t n) {
    const Acc cc = c;
    for (std::size_t k = 0; k < n; ++k) acc[k] += cc * x[k];
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// Q with GMP rationals; the accumulator is exact so no budget applies.
class RationalField {
 public:
  using Value = Rational;
  using Acc = Rational;
  static constexpr int kLazyBudget = 0;

  Value from_rational(const Rational& x) const { return x; }
  Value from_int(std::int64_t x) const { return Rational(static_cast<long>(x)); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value inv(const Value& a) const { return 1 / a; }
  static bool is_zero(const Value& a) { return sgn(a) == 0; }
  static Value zero() { return 0; }
  static Value one() { return 1; }

  const Value& reduce(const Acc& a) const { return a; }
  static const Acc& lift(const Value& v) { return v; }
  static void clear(Acc& a) { a = 0; }
  static void axpy(Acc* acc, const Value& c, const Value* x, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(x[k]) != 0) acc[k] += c * x[k];
  }

  bool operator==(const RationalField&) const = default;
};

bool is_prime(std::uint64_t n);

/// Deterministic prime in [2^25, 2^26) derived from a seed.
std::uint32_t prime_from_seed(std::uint64_t seed);

}  // namespace ivhs
