#include "apolar/field.hpp"

namespace apolar {
namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : modulus(p) {
  if (!is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
}

ModP PrimeField::from_int(std::int64_t v) const {
  auto m = static_cast<__int128>(modulus);
  auto r = static_cast<__int128>(v) % m;
  if (r < 0) r += m;
  return ModP(static_cast<std::uint64_t>(r), modulus);
}

ModP PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mpz_class(std::to_string(modulus)).get_mpz_t());
  return ModP(std::stoull(r.get_str()), modulus);
}

ModP PrimeField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  return from_integer(num) / from_integer(den);
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of 0 in Q");
  return Rational(mpq_class(1 / v_));
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

ModP ModP::inv() const {
  if (modulus_ == 0) throw MixedFields("unbound residue");
  if (value_ == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(modulus_) + ")");
  return ModP(pow_mod(value_, modulus_ - 2, modulus_), modulus_);
}

}  // namespace apolar
