#include <cmath>
#include <numbers>

#include "aztec/asymptotics.hpp"
#include "aztec/errors.hpp"
#include "doctest.h"

using namespace aztec;
using namespace aztec::asym;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<NormalizedPoint> temperate_grid(int k, double radius) {
  std::vector<NormalizedPoint> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const double x = -radius + 2.0 * radius * (i + 0.5) / k;
      const double y = -radius + 2.0 * radius * (j + 0.5) / k;
      if (x * x + y * y < radius * radius && std::abs(x) + std::abs(y) < 1) out.push_back({x, y});
    }
  return out;
}
}  // namespace

TEST_CASE("arctangent formula point values") {
  CHECK(arctan_placement({0, 0}) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(arctan_placement({0, 2.0 / 3.0}) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(arctan_placement({0.6, -0.4}) == 0.0);
  CHECK(arctan_placement({0.0, 0.9}) == 1.0);
  CHECK_THROWS_AS(arctan_placement({0.8, 0.8}), DomainError);
}

TEST_CASE("singular points are flagged, not rejected") {
  const auto v = arctan_placement_flagged({0.5, 0.5});
  CHECK(v.singular_adjacent);
  CHECK(v.value == 0.5);
  CHECK(arctan_placement_flagged({0.47, 0.5}).singular_adjacent);
  CHECK_FALSE(arctan_placement_flagged({0.0, 0.0}).singular_adjacent);
  CHECK(biased_arctan_placement_flagged({1.0 / 3.0, 2.0 / 3.0}, 1.0 / 3.0).singular_adjacent);
}

TEST_CASE("biased formula") {
  for (const auto& pt : temperate_grid(9, 0.9))
    CHECK(biased_arctan_placement(pt, 0.5) == doctest::Approx(arctan_placement(pt)).epsilon(1e-14));
  for (double p : {0.2, 1.0 / 3.0, 0.7}) {
    CHECK(biased_arctan_placement({0, 1 - p}, p) == doctest::Approx(0.5));
    // Outside the ellipse the value is frozen.
    CHECK(biased_arctan_placement({0, -0.99}, p) == 0.0);
  }
  CHECK_THROWS_AS(biased_arctan_placement({0, 0}, 1.0), DomainError);
}

TEST_CASE("directional quadruple sums to one and reflects") {
  const auto d0 = directional_placements({0, 0});
  CHECK(d0.pn == doctest::Approx(0.25));
  CHECK(d0.pe == doctest::Approx(0.25));
  const auto d1 = directional_placements({0, 0.8});
  CHECK(d1.pn == 1.0);
  CHECK(d1.ps == 0.0);
  CHECK(d1.pe == 0.0);
  CHECK(d1.pw == 0.0);
  for (int i = -20; i <= 20; ++i)
    for (int j = -20; j <= 20; ++j) {
      const NormalizedPoint pt{i / 20.0, j / 20.0};
      if (!in_diamond(pt) || singular_distance(pt) < 1e-9) continue;
      const auto d = directional_placements(pt);
      CHECK(std::abs(d.pn + d.pe + d.ps + d.pw - 1.0) < 1e-12);
      CHECK(std::abs(arctan_placement(pt) - arctan_placement({-pt.x, pt.y})) < 1e-12);
      const auto b = biased_directional_placements(pt, 0.3);
      CHECK(std::abs(b.pn + b.pe + b.ps + b.pw - 1.0) < 1e-12);
    }
}

TEST_CASE("level curves") {
  CHECK(level_curve(0.5).mix == 0.0);
  CHECK(level_curve(1e-9).mix == doctest::Approx(1.0));
  CHECK_THROWS_AS(level_curve(0.0), DomainError);
  const auto quarter = level_curve(0.25);
  CHECK(std::abs(quarter.implicit(0, 0)) < 1e-12);
  CHECK(std::abs(quarter.implicit(0, 2.0 / 3.0)) < 1e-12);
  for (int k = 1; k <= 9; ++k) {
    const double p = k / 10.0;
    const auto curve = level_curve(p);
    const auto pts = curve.sample(40);
    CHECK(!pts.empty());
    for (const auto& pt : pts) {
      const double v = arctan_placement(pt);
      CHECK(std::min(std::abs(v - p), std::abs(v - (1 - p))) < 1e-9);
    }
  }
}

TEST_CASE("average height boundary values and level set") {
  CHECK(average_height({0, 1}) == doctest::Approx(2.0));
  CHECK(average_height({0, -1}) == doctest::Approx(2.0));
  CHECK(average_height({1, 0}) == doctest::Approx(0.0));
  CHECK(average_height({0.3, 0.3}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(average_height({-0.2, 0.2}) == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = -100; i <= 100; ++i) {
    const double x = i / 100.0;
    const double y = 1 - std::abs(x);
    CHECK(std::abs(average_height({x, y}) - (2 - 2 * std::abs(x))) < 1e-9);
    CHECK(std::abs(average_height({x, -y}) - (2 - 2 * std::abs(x))) < 1e-9);
  }
}

TEST_CASE("tilt matches finite differences of the height") {
  CHECK(height_tilt({0, 0}).s == doctest::Approx(0.0));
  CHECK(height_tilt({0, 0.8}).t == 2.0);
  const double h = 1e-4;
  for (const auto& pt : temperate_grid(12, 0.68)) {
    const Tilt tl = height_tilt(pt);
    const double fx = (average_height({pt.x + h, pt.y}) - average_height({pt.x - h, pt.y})) / (2 * h);
    const double fy = (average_height({pt.x, pt.y + h}) - average_height({pt.x, pt.y - h})) / (2 * h);
    CHECK(std::abs(tl.s - fx) < 1e-6);
    CHECK(std::abs(tl.t - fy) < 1e-6);
  }
}

TEST_CASE("height satisfies the wave-type equation in the temperate zone") {
  const double h = 1e-3;
  for (const auto& pt : temperate_grid(10, 0.6)) {
    const double c = average_height(pt);
    const double hyy = (average_height({pt.x, pt.y + h}) - 2 * c + average_height({pt.x, pt.y - h})) / (h * h);
    const double hxx = (average_height({pt.x + h, pt.y}) - 2 * c + average_height({pt.x - h, pt.y})) / (h * h);
    const double rhs = 8.0 / (kPi * std::sqrt(1 - 2 * pt.x * pt.x - 2 * pt.y * pt.y));
    CHECK(std::abs(hyy - hxx - rhs) < 1e-4);
  }
}

TEST_CASE("gauss map ratio identities and inversion") {
  for (const auto& pt : temperate_grid(10, 0.69)) {
    const Tilt tl = height_tilt(pt);
    const double lhs = std::cos(kPi * tl.t / 2) / std::cos(kPi * tl.s / 2);
    const double rhs = (1 - pt.x * pt.x - 3 * pt.y * pt.y) / (1 - 3 * pt.x * pt.x - pt.y * pt.y);
    if (std::abs(std::cos(kPi * tl.s / 2)) > 1e-3) CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    if (std::abs(pt.x) > 1e-3) {
      CHECK(std::abs(std::sin(kPi * tl.t / 2) / std::sin(kPi * tl.s / 2) + pt.y / pt.x) <
            1e-9 * std::max(1.0, std::abs(pt.y / pt.x)));
    }
    const NormalizedPoint back = tilt_to_position(tl);
    CHECK(std::hypot(back.x - pt.x, back.y - pt.y) < 1e-8);
  }
  const NormalizedPoint o = tilt_to_position({0, 0});
  CHECK(std::abs(o.x) < 1e-12);
  CHECK(std::abs(o.y) < 1e-12);
  const NormalizedPoint r = tilt_to_position(height_tilt({0.2, -0.3}));
  CHECK(r.x == doctest::Approx(0.2).epsilon(1e-9));
  CHECK(r.y == doctest::Approx(-0.3).epsilon(1e-9));
  // diagonal and axes
  for (double v : {0.1, 0.3, 0.45}) {
    for (const NormalizedPoint pt : {NormalizedPoint{v, -v}, NormalizedPoint{v, v}, NormalizedPoint{0, v},
                                     NormalizedPoint{v, 0}}) {
      const NormalizedPoint b = tilt_to_position(height_tilt(pt));
      CHECK(std::hypot(b.x - pt.x, b.y - pt.y) < 1e-8);
    }
  }
  CHECK_THROWS_AS(tilt_to_position({1.0, 1.0}), DomainError);
}

TEST_CASE("wave kernel") {
  CHECK(wave_kernel(0, 0, 1) == doctest::Approx(1 / kPi));
  CHECK(wave_kernel(1, 1, 1) == 0.0);
  CHECK(std::isinf(wave_kernel(0.5, 0.5, 1)));
  CHECK_THROWS_AS(wave_kernel(0, 0, 0), DomainError);
  const double h = 1e-3;
  for (const auto& [x, y, t] : {std::tuple{0.1, 0.05, 1.0}, std::tuple{-0.2, 0.3, 1.2}, std::tuple{0.0, 0.0, 0.8}}) {
    const double c = wave_kernel(x, y, t);
    const double utt = (wave_kernel(x, y, t + h) - 2 * c + wave_kernel(x, y, t - h)) / (h * h);
    const double uxx = (wave_kernel(x + h, y, t) - 2 * c + wave_kernel(x - h, y, t)) / (h * h);
    const double uyy = (wave_kernel(x, y + h, t) - 2 * c + wave_kernel(x, y - h, t)) / (h * h);
    CHECK(std::abs(utt - 0.5 * (uxx + uyy)) < 1e-3 * std::max(1.0, std::abs(utt)));
  }
}

TEST_CASE("saddle estimate tracks exact creation rates") {
  const auto centre = creation_rate_estimate({0, 0, 201});
  CHECK(centre.envelope == doctest::Approx(4.0 / (kPi * 200)));
  // critical point lies on |z|^2 = (1+u)/(1-u)
  const auto sd = creation_rate_estimate({30, -10, 101});
  const double u = (30.0 - 10.0) / 100.0;
  CHECK(std::norm(sd.z1) == doctest::Approx((1 + u) / (1 - u)));
  CHECK(sd.estimate >= 0.0);
  CHECK(sd.estimate <= sd.envelope);
  double err100 = 0;
  double err200 = 0;
  for (long n : {100L, 200L})
    for (double x : {-0.3, 0.0, 0.2})
      for (double y : {-0.25, 0.1, 0.35}) {
        const auto loc = nearest_location({x, y}, n + 1);
        const auto est = creation_rate_estimate(loc);
        const double cr = exact::to_double(exact::creation_rate(loc));
        CHECK(cr <= est.envelope * (1 + 1e-9));
        (n == 100 ? err100 : err200) += std::abs(cr - est.estimate);
      }
  CHECK(err100 / err200 > 2.0);
  CHECK(err100 / err200 < 8.0);
  CHECK_THROWS_AS(creation_rate_estimate({60, 60, 101}), DomainError);
}

TEST_CASE("biased envelope") {
  const exact::LatticeLocation loc{0, 0, 201};
  // At p = 1/2 the biased envelope coincides with the unbiased one.
  CHECK(biased_creation_rate_envelope(loc, 0.5) == doctest::Approx(creation_rate_envelope(loc)));
  const double p = 1.0 / 3.0;
  CHECK(biased_creation_rate_envelope(loc, p) == doctest::Approx(2 / (kPi * 200 * std::sqrt(p - p * p))));
  const exact::BiasValue bias(mpq_class(1, 3));
  for (double x : {-0.3, 0.0, 0.25})
    for (double y : {-0.2, 0.15, 0.4}) {
      const auto l = nearest_location({x, y}, 121);
      const double cr = exact::to_double(exact::biased_creation_rate(l, bias));
      CHECK(cr >= 0.0);
      CHECK(cr <= 1.05 * biased_creation_rate_envelope(l, p));
    }
}

TEST_CASE("exponential decay outside the circle") {
  const std::vector<long> ns{40, 60, 80, 100, 120};
  const auto r = decay_bound_check({0.6, 0.4}, ns);
  CHECK(r.creation_slope < 0);
  CHECK(r.creation_r2 >= 0.99);
  const auto north = decay_bound_check({0, 0.9}, ns);
  CHECK(north.limit == 1.0);
  CHECK(north.defect_slope < 0);
  const auto east = decay_bound_check({0.9, 0}, ns);
  CHECK(east.limit == 0.0);
  CHECK(east.defect_slope < 0);
  CHECK_THROWS_AS(decay_bound_check({0.1, 0.1}, ns), DomainError);
}

TEST_CASE("line fit") {
  const auto f = fit_line({1, 2, 3, 4}, {3, 5, 7, 9});
  CHECK(f.slope == doctest::Approx(2));
  CHECK(f.intercept == doctest::Approx(1));
  CHECK(f.r2 == doctest::Approx(1));
}
