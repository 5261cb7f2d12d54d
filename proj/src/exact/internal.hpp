#pragma once

#include "aztec/exact.hpp"

namespace aztec::exact {

ExactInteger general_coeff(long a, long b, long n, long alpha, long beta);
ExactInteger power(long base, long e);

struct BiasParts {
  long r;
  long s;
};
BiasParts bias_parts(const BiasValue& bias);

// W * r^e / s^n as a reduced rational; e may be negative.
ExactRational scale_by_bias(const ExactInteger& w, long e, long n, const BiasParts& p);

}  // namespace aztec::exact
