#include "linspace.hpp"

#include <cctype>

namespace primfield {

u64 gaussian_binomial(unsigned n, unsigned k, u64 q) {
  if (q < 2) fail(Errc::bad_argument, "gaussian_binomial: q must be at least 2");
  if (k > n) return 0;
  if (k > n - k) k = n - k;  // symmetric in k and n-k
  const mpz_class qz(static_cast<unsigned long>(q));
  mpz_class acc = 1;
  for (unsigned i = 1; i <= k; ++i) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), qz.get_mpz_t(), n - k + i);
    mpz_pow_ui(den.get_mpz_t(), qz.get_mpz_t(), i);
    acc = acc * (num - 1) / (den - 1);  // each partial product is an exact integer
  }
  const mpz_class cap = (mpz_class(1) << 63) - 1;
  if (acc > cap) fail(Errc::size_limit, "gaussian_binomial: value exceeds 2^63-1");
  const mpz_class lo = acc % (mpz_class(1) << 32);
  const mpz_class hi = acc >> 32;
  return (static_cast<u64>(hi.get_ui()) << 32) | static_cast<u64>(lo.get_ui());
}

mpq_class parse_rational(const std::string& token) {
  const auto bad = [&]() -> mpq_class {
    fail(Errc::parse_error, "not a rational number: '" + token + "'");
  };
  if (token.empty()) return bad();
  std::size_t i = 0;
  bool saw_digit = false, saw_slash = false, digit_after_slash = false;
  if (token[i] == '+' || token[i] == '-') ++i;
  if (i == token.size()) return bad();
  for (; i < token.size(); ++i) {
    const char c = token[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (saw_slash ? digit_after_slash : saw_digit) = true;
    } else if (c == '/' && !saw_slash && saw_digit) {
      saw_slash = true;
    } else {
      return bad();
    }
  }
  if (!saw_digit || (saw_slash && !digit_after_slash)) return bad();
  mpq_class v(token[0] == '+' ? token.substr(1) : token, 10);
  if (sgn(v.get_den()) == 0) fail(Errc::parse_error, "zero denominator: '" + token + "'");
  v.canonicalize();
  return v;
}

}  // namespace primfield
