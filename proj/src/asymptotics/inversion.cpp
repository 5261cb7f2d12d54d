#include <cmath>
#include <numbers>

#include "aztec/asymptotics.hpp"
#include "aztec/errors.hpp"

namespace aztec::asym {

namespace {

constexpr double kPi = std::numbers::pi;

struct TiltJacobian {
  Tilt value;
  double ds_dx, ds_dy, dt_dx, dt_dy;
};

// s = -(2/pi)(atan((2x-1)/D) + atan((2x+1)/D)), t = (2/pi)(atan((2y-1)/D) + atan((2y+1)/D))
TiltJacobian tilt_with_jacobian(double x, double y) {
  const double d2 = 1.0 - 2.0 * x * x - 2.0 * y * y;
  const double d = std::sqrt(d2);
  TiltJacobian j{};
  j.value.s = 0.0;
  j.value.t = 0.0;
  j.ds_dx = j.ds_dy = j.dt_dx = j.dt_dy = 0.0;
  for (double c : {-1.0, 1.0}) {
    const double ay = 2.0 * y + c;
    const double ax = 2.0 * x + c;
    const double ny = d2 + ay * ay;
    const double nx = d2 + ax * ax;
    j.value.t += std::atan(ay / d);
    j.value.s -= std::atan(ax / d);
    j.dt_dx += (2.0 * x * ay / d) / ny;
    j.dt_dy += (2.0 * d + 2.0 * y * ay / d) / ny;
    j.ds_dx -= (2.0 * d + 2.0 * x * ax / d) / nx;
    j.ds_dy -= (2.0 * y * ax / d) / nx;
  }
  const double k = 2.0 / kPi;
  j.value.s *= k;
  j.value.t *= k;
  j.ds_dx *= k;
  j.ds_dy *= k;
  j.dt_dx *= k;
  j.dt_dy *= k;
  return j;
}

}  // namespace

NormalizedPoint tilt_to_position(const Tilt& tilt) {
  if (!(std::abs(tilt.s) + std::abs(tilt.t) < 2.0)) {
    throw DomainError("tilt (" + std::to_string(tilt.s) + ", " + std::to_string(tilt.t) +
                      ") is outside |s| + |t| < 2");
  }
  // Seed from the ratio identities: with N = sqrt((1-u^2)(1-v^2)),
  //   sin(pi t/2) = 2yD/N, sin(pi s/2) = -2xD/N,
  //   cos(pi t/2) = (1-x^2-3y^2)/N, cos(pi s/2) = (1-3x^2-y^2)/N,
  // which solve in closed form for x, y.
  const double sig = std::sin(kPi * tilt.s / 2.0);
  const double tau = std::sin(kPi * tilt.t / 2.0);
  const double kap = std::cos(kPi * tilt.s / 2.0) + std::cos(kPi * tilt.t / 2.0);
  const double nn = kap / (sig * sig + tau * tau + kap * kap / 2.0);
  const double d = std::sqrt(kap * nn / 2.0);
  double x = -sig * nn / (2.0 * d);
  double y = tau * nn / (2.0 * d);

  // Damped Newton polish.
  auto residual = [&](double px, double py) {
    const TiltJacobian j = tilt_with_jacobian(px, py);
    return std::hypot(j.value.s - tilt.s, j.value.t - tilt.t);
  };
  double res = residual(x, y);
  for (int iter = 0; iter < 60 && res > 1e-14; ++iter) {
    const TiltJacobian j = tilt_with_jacobian(x, y);
    const double fs = j.value.s - tilt.s;
    const double ft = j.value.t - tilt.t;
    const double det = j.ds_dx * j.dt_dy - j.ds_dy * j.dt_dx;
    if (!std::isfinite(det) || det == 0.0) break;
    const double dx = (j.dt_dy * fs - j.ds_dy * ft) / det;
    const double dy = (-j.dt_dx * fs + j.ds_dx * ft) / det;
    double step = 1.0;
    bool moved = false;
    while (step > 1e-6) {
      const double nx = x - step * dx;
      const double ny = y - step * dy;
      if (2.0 * nx * nx + 2.0 * ny * ny < 1.0) {
        const double r = residual(nx, ny);
        if (r < res) {
          x = nx;
          y = ny;
          res = r;
          moved = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  if (!(res < 1e-9)) {
    throw NumericalError("tilt inversion did not converge (residual " + std::to_string(res) + ")");
  }
  return {x, y};
}

}  // namespace aztec::asym
