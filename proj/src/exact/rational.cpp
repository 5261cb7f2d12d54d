#include <cmath>
#include <sstream>

#include "aztec/errors.hpp"
#include "aztec/exact.hpp"

namespace aztec::exact {

BiasValue::BiasValue(ExactRational p) : p_(std::move(p)) {
  p_.canonicalize();
  if (p_ <= 0 || p_ >= 1) {
    throw DomainError("bias must lie strictly between 0 and 1, got " + to_string(p_));
  }
}

BiasValue BiasValue::parse(const std::string& text) {
  ExactRational q;
  if (text.find('/') != std::string::npos) {
    if (q.set_str(text, 10) != 0) throw DomainError("cannot parse bias '" + text + "'");
    if (q.get_den() == 0) throw DomainError("zero denominator in bias '" + text + "'");
    q.canonicalize();
    return BiasValue(q);
  }
  // Decimal literal: read digits exactly instead of going through double.
  const auto dot = text.find('.');
  std::string digits = text;
  long scale = 0;
  if (dot != std::string::npos) {
    digits = text.substr(0, dot) + text.substr(dot + 1);
    scale = static_cast<long>(text.size() - dot - 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw DomainError("cannot parse bias '" + text + "'");
  }
  ExactInteger num(digits, 10);
  ExactInteger den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  q = ExactRational(num, den);
  q.canonicalize();
  return BiasValue(q);
}

ExactRational Dyadic::to_rational() const {
  ExactRational q(mantissa);
  if (exponent >= 0) {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return q;
}

double Dyadic::to_double() const {
  if (mantissa == 0) return 0.0;
  long e = 0;
  const double d = mpz_get_d_2exp(&e, mantissa.get_mpz_t());
  return std::ldexp(d, static_cast<int>(e - exponent));
}

std::string to_string(const ExactRational& q) {
  std::ostringstream os;
  os << q.get_num().get_str() << '/' << q.get_den().get_str();
  return os.str();
}

double log_of(const ExactRational& q) {
  if (q <= 0) throw DomainError("logarithm of a non-positive rational");
  long en = 0;
  long ed = 0;
  const double dn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double dd = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(dn) - std::log(dd) + static_cast<double>(en - ed) * std::log(2.0);
}

double to_double(const ExactRational& q) {
  if (q == 0) return 0.0;
  const double mag = std::exp(log_of(q < 0 ? ExactRational(-q) : q));
  return q < 0 ? -mag : mag;
}

}  // namespace aztec::exact
