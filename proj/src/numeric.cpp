#include "torica/numeric.hpp"

#include "torica/error.hpp"

namespace torica {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer isqrt(const Integer& v) {
  if (v < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of a negative value");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool le_sqrt(const Integer& a, const Integer& b) {
  if (b < 0) throw Error(ErrorCode::InvalidArgument, "sqrt of a negative value");
  if (a <= 0) return true;
  return a * a <= b;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational pow2(long exponent) {
  Integer p = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  return Rational(Integer(1), p);
}

std::string to_decimal(const Rational& q, int significant) {
  if (significant < 1) throw Error(ErrorCode::InvalidArgument, "need at least one significant digit");
  Rational c = q;
  c.canonicalize();
  if (c == 0) return "0";
  const bool negative = c < 0;
  Integer num = abs(c.get_num());
  const Integer den = c.get_den();

  // Exponent k of the leading digit: 10^k <= num/den < 10^(k+1).
  long k = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto pow10 = [](long n) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n));
    return p;
  };
  auto ge_pow10 = [&](long n) {  // num/den >= 10^n
    return n >= 0 ? num >= den * pow10(n) : num * pow10(-n) >= den;
  };
  while (!ge_pow10(k)) --k;
  while (ge_pow10(k + 1)) ++k;

  // Scale so that the integer part carries exactly `significant` digits.
  const long shift = significant - 1 - k;
  Integer scaled_num = num, scaled_den = den;
  if (shift >= 0) scaled_num *= pow10(shift);
  else scaled_den *= pow10(-shift);
  Integer quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled_num.get_mpz_t(),
              scaled_den.get_mpz_t());
  if (2 * remainder >= scaled_den) quotient += 1;

  std::string digits = quotient.get_str();
  long effective_shift = shift;
  if (static_cast<long>(digits.size()) > significant) {  // rounding carried into a new digit
    digits.pop_back();
    --effective_shift;
  }
  long point = static_cast<long>(digits.size()) - effective_shift;  // digits before the point
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + digits;
  } else if (point >= static_cast<long>(digits.size())) {
    out = digits + std::string(static_cast<std::size_t>(point - static_cast<long>(digits.size())), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(point)) + "." +
          digits.substr(static_cast<std::size_t>(point));
  }
  return negative ? "-" + out : out;
}

}  // namespace torica
