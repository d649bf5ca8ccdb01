#include "ivhs/field.hpp"

#include "ivhs/error.hpp"
#include "ivhs/random.hpp"

namespace ivhs {

std::string to_string(Arithmetic a) { return a == Arithmetic::Rational ? "rational" : "modular"; }

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 26) || !is_prime(p)) fail_input("BadPrime", std::to_string(p) + " is not a prime below 2^26");
}

PrimeField::Value PrimeField::from_int(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Value>(r);
}

PrimeField::Value PrimeField::from_rational(const Rational& x) const {
  const unsigned long num = mpz_fdiv_ui(x.get_num_mpz_t(), p_);
  const unsigned long den = mpz_fdiv_ui(x.get_den_mpz_t(), p_);
  if (den == 0) fail_internal("BadReduction", "denominator of " + x.get_str() + " vanishes modulo " + std::to_string(p_));
  return mul(static_cast<Value>(num), inv(static_cast<Value>(den)));
}

PrimeField::Value PrimeField::inv(Value a) const {
  if (a == 0) fail_internal("DivisionByZero", "inverse of zero in Z/p");
  // Fermat: a^(p-2).
  Acc result = 1, base = a;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<Value>(result);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t prime_from_seed(std::uint64_t seed) {
  constexpr std::uint32_t lo = 1u << 25;
  std::uint32_t candidate = lo + static_cast<std::uint32_t>(mix_seed(seed, 0x7072696d65ULL) % lo);
  candidate |= 1u;
  while (!is_prime(candidate)) {
    candidate += 2;
    if (candidate >= (1u << 26)) candidate = lo + 1;
  }
  return candidate;
}

}  // namespace ivhs
