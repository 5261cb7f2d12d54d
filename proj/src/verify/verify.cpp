#include "aztec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "aztec/asymptotics.hpp"
#include "aztec/errors.hpp"
#include "aztec/format.hpp"
#include "aztec/oracle.hpp"
#include "aztec/stats.hpp"
#include "json.hpp"

#ifndef AZTEC_DEFAULT_CALIBRATION
#define AZTEC_DEFAULT_CALIBRATION "tests/data/calibration.json"
#endif

namespace aztec::verify {

using exact::BiasValue;
using exact::ExactRational;
using exact::LatticeLocation;
using regions::Cell;
using regions::Domino;
using regions::Orientation;

namespace {

// ---- pinned tolerances and fixed seeds ---------------------------------

constexpr double kEnvelopeSlack = 1e-9;      // Cr <= envelope (1 + slack)
constexpr double kSaddleRatioLo = 2.0;       // error ratio n=100 / n=200
constexpr double kSaddleRatioHi = 8.0;
constexpr double kDecayR2 = 0.99;
constexpr double kChiSquareAlpha = 0.001;
constexpr double kMaxZ = 5.0;
constexpr double kTraceTol = 1e-9;
constexpr double kTiltTol = 1e-6;
constexpr double kPdeTol = 1e-4;
constexpr double kMeanHeightTol = 0.05;
constexpr double kArcticMargin = 0.1;        // normalized distance kept from the circle
constexpr double kInversionTol = 1e-8;
constexpr double kRatioTol = 1e-9;
constexpr long kLipschitzStride = 17;

constexpr std::uint64_t kSeedOrder2 = 0xA2;
constexpr std::uint64_t kSeedOrder32 = 0xA32;
constexpr std::uint64_t kSeedBiased = 0xB13;
constexpr std::uint64_t kSeedHeights64 = 0x4E64;
constexpr std::uint64_t kSeedMean = 0x4E128;
constexpr std::uint64_t kSeedVariance = 0x7A64;
constexpr std::uint64_t kSeedArctic = 0xACCE55;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok) { pass = pass && ok; }
};

std::string fmt(double v) { return format_real(v); }

std::vector<asym::NormalizedPoint> temperate_grid(int k, double radius) {
  std::vector<asym::NormalizedPoint> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const double x = -radius + 2.0 * radius * (i + 0.5) / k;
      const double y = -radius + 2.0 * radius * (j + 0.5) / k;
      if (x * x + y * y < radius * radius) out.push_back({x, y});
    }
  return out;
}

// ---- exact suite -------------------------------------------------------

void c1_oracle(Outcome& o, const Config& cfg) {
  const long counts[] = {0, 2, 8, 64, 1024, 32768, 2097152};
  long spaces = 0;
  for (long n = 1; n <= 6; ++n) {
    const auto region = regions::aztec_diamond_ptr(n);
    const auto st = oracle::exact_statistics(region);
    o.require(st.tiling_count == counts[n]);
    const exact::PlacementGrid grid(n, cfg.backend);
    for (const auto& loc : grid.locations()) {
      const Domino d = regions::from_placed({loc.ell, loc.m, regions::Klass::north});
      o.require(st.probability(d) == grid.probability(loc.ell, loc.m));
      ++spaces;
    }
  }
  o.detail << spaces << " north-going spaces, orders 1..6, counts 2..2097152";
}

void c2_points(Outcome& o, const Config&) {
  using exact::placement_probability;
  o.require(placement_probability({0, 0, 1}) == ExactRational(1, 2));
  o.require(placement_probability({0, 1, 2}) == ExactRational(3, 4));
  o.require(placement_probability({0, -1, 2}) == ExactRational(1, 4));
  o.require(placement_probability({1, 0, 2}) == ExactRational(1, 4));
  o.require(placement_probability({-1, 0, 2}) == ExactRational(1, 4));
  o.detail << "Pl(0,0;1)=" << exact::to_string(placement_probability({0, 0, 1}))
           << " Pl(0,1;2)=" << exact::to_string(placement_probability({0, 1, 2}));
}

void c3_boundary(Outcome& o, const Config&) {
  long checked = 0;
  for (long n = 1; n <= 8; ++n)
    for (long k = 1; k <= n; ++k) {
      o.require(exact::boundary_row_probability(k, n) ==
                exact::placement_probability(exact::leftmost_row_location(k, n)));
      ++checked;
    }
  o.detail << checked << " (k, n) pairs, n <= 8";
}

void c4_identities(Outcome& o, const Config& cfg) {
  long squares = 0;
  for (long n = 1; n <= 30; ++n) {
    const exact::PlacementGrid grid(n, cfg.backend);
    for (const auto& loc : grid.locations())
      o.require(grid.probability(loc.ell, loc.m) == grid.probability(-loc.ell, loc.m));
    const auto& r = *regions::aztec_diamond_ptr(n);
    for (const Cell& c : r.cells()) {
      ExactRational sum = 0;
      for (const Domino d : {Domino{c, Orientation::horizontal}, Domino{{c.i - 1, c.j}, Orientation::horizontal},
                             Domino{c, Orientation::vertical}, Domino{{c.i, c.j - 1}, Orientation::vertical}}) {
        if (!r.contains(d.anchor) || !r.contains(d.second())) continue;
        const auto loc = regions::north_equivalent(d, n);
        sum += grid.probability(loc.ell, loc.m);
      }
      o.require(sum == 1);
      ++squares;
    }
  }
  std::mt19937_64 rng(0x4B);
  long recip = 0;
  for (int t = 0; t < 10000; ++t) {
    const long n = std::uniform_int_distribution<long>(0, 40)(rng);
    const long a = std::uniform_int_distribution<long>(0, n)(rng);
    const long b = std::uniform_int_distribution<long>(0, n)(rng);
    o.require(exact::krawtchouk_reciprocity_check({a, b, n}));
    ++recip;
  }
  long rates = 0;
  for (long n = 1; n <= 60; ++n)
    for (long m = -(n - 1); m <= n - 1; ++m)
      for (long l = -(n - 1 - std::abs(m)); l <= n - 1 - std::abs(m); l += 2) {
        o.require(exact::creation_rate({l, m, n}) >= 0);
        ++rates;
      }
  o.detail << squares << " square quadruples + reflection (n<=30), " << recip << " reciprocity, " << rates
           << " creation rates >= 0 (n<=60)";
}

void c14_block(Outcome& o, const Config&) {
  for (long n = 1; n <= 5; ++n) o.require(oracle::block_lemma_check(regions::aztec_diamond_ptr(n)));
  o.detail << "every 2x2 block, orders 1..5";
}

// ---- asymptotics suite -------------------------------------------------

void c5_central(Outcome& o, const Config& cfg) {
  const auto rep = stats::convergence_report({50, 100, 200}, {}, {}, cfg.backend);
  o.require(rep.central_within);
  o.detail << "C=" << fmt(rep.fitted_c) << " n|Pl-1/4|:";
  for (const auto& row : rep.rows)
    o.detail << " n=" << row.n << "@(" << row.central.ell << ',' << row.central.m << ")->"
             << fmt(row.n * row.central_dev);
}

void c6_supnorm(Outcome& o, const Config& cfg) {
  const auto u = stats::convergence_report({100, 200}, {}, {}, cfg.backend);
  const auto b = stats::convergence_report({60, 120}, BiasValue(ExactRational(1, 3)), {}, cfg.backend);
  o.require(u.supnorm_decreasing);
  o.require(b.supnorm_decreasing);
  o.detail << "uniform " << fmt(u.rows[0].supnorm) << " -> " << fmt(u.rows[1].supnorm) << ", p=1/3 "
           << fmt(b.rows[0].supnorm) << " -> " << fmt(b.rows[1].supnorm);
}

void c7_saddle(Outcome& o, const Config&) {
  double err[2] = {0, 0};
  double worst = 0;
  int idx = 0;
  for (long n : {100L, 200L}) {
    for (double x = -0.4; x <= 0.4 + 1e-9; x += 0.2)
      for (double y : {-0.4, -0.15, 0.1, 0.35}) {
        const auto loc = asym::nearest_location({x, y}, n + 1);
        const auto est = asym::creation_rate_estimate(loc);
        const double cr = exact::to_double(exact::creation_rate(loc));
        worst = std::max(worst, cr / est.envelope);
        err[idx] += std::abs(cr - est.estimate);
      }
    ++idx;
  }
  const double ratio = err[0] / err[1];
  o.require(ratio >= kSaddleRatioLo && ratio <= kSaddleRatioHi);
  o.require(worst <= 1.0 + kEnvelopeSlack);
  o.detail << "error ratio " << fmt(ratio) << " over 20 points, max Cr/envelope " << fmt(worst);
}

void c8_decay(Outcome& o, const Config&) {
  std::vector<long> ns;
  for (long n = 40; n <= 200; n += 20) ns.push_back(n);
  const auto c = asym::decay_bound_check({0.6, 0.4}, ns);
  const auto north = asym::decay_bound_check({0.0, 0.9}, ns);
  const auto east = asym::decay_bound_check({0.9, 0.0}, ns);
  o.require(c.creation_slope < 0 && c.creation_r2 >= kDecayR2);
  o.require(north.limit == 1.0 && north.defect_slope < 0 && north.defect_r2 >= kDecayR2);
  o.require(east.limit == 0.0 && east.defect_slope < 0 && east.defect_r2 >= kDecayR2);
  o.detail << "log Cr slope " << fmt(c.creation_slope) << " R2 " << fmt(c.creation_r2) << "; 1-Pl(0,.9) slope "
           << fmt(north.defect_slope) << " R2 " << fmt(north.defect_r2) << "; Pl(.9,0) slope "
           << fmt(east.defect_slope) << " R2 " << fmt(east.defect_r2);
}

void c15_inversion(Outcome& o, const Config&) {
  auto pts = temperate_grid(12, 0.69);
  pts.resize(std::min<std::size_t>(pts.size(), 100));
  double worst_inv = 0, worst_ratio = 0;
  for (const auto& pt : pts) {
    const auto tl = asym::height_tilt(pt);
    const auto back = asym::tilt_to_position(tl);
    worst_inv = std::max(worst_inv, std::hypot(back.x - pt.x, back.y - pt.y));
    const double cs = std::cos(kPi * tl.s / 2), ss = std::sin(kPi * tl.s / 2);
    if (std::abs(cs) > 1e-3) {
      const double lhs = std::cos(kPi * tl.t / 2) / cs;
      const double rhs = (1 - pt.x * pt.x - 3 * pt.y * pt.y) / (1 - 3 * pt.x * pt.x - pt.y * pt.y);
      worst_ratio = std::max(worst_ratio, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    if (std::abs(pt.x) > 1e-3 && std::abs(ss) > 1e-12) {
      const double r = std::sin(kPi * tl.t / 2) / ss + pt.y / pt.x;
      worst_ratio = std::max(worst_ratio, std::abs(r) / std::max(1.0, std::abs(pt.y / pt.x)));
    }
  }
  o.require(pts.size() == 100);
  o.require(worst_inv <= kInversionTol);
  o.require(worst_ratio <= kRatioTol);
  o.detail << pts.size() << " points, max inversion error " << fmt(worst_inv) << ", max ratio error "
           << fmt(worst_ratio);
}

// ---- sampler suite -----------------------------------------------------

void c9_sampler(Outcome& o, const Config& cfg) {
  shuffle::ShuffleOptions opts;
  opts.backend = Backend::serial;
  const oracle::TilingIndex idx2(regions::aztec_diamond_ptr(2));
  std::vector<double> obs(idx2.size(), 0.0);
  const long trials2 = 80000;
  for (long s = 0; s < trials2; ++s)
    obs[idx2.index_of(shuffle::sample_uniform(2, stats::sample_seed(kSeedOrder2, s), opts))] += 1;
  const double p2 = stats::chi_square_pvalue(obs, std::vector<double>(idx2.size(), trials2 / 8.0));
  o.require(p2 > kChiSquareAlpha);

  const auto g = stats::empirical_placement(32, {}, 10000, kSeedOrder32, cfg.backend);
  const auto cmp = stats::compare_with_exact(g, {});
  o.require(cmp.frozen_mismatches == 0 && cmp.max_abs_z <= kMaxZ);

  const BiasValue third(ExactRational(1, 3));
  double worst_p = 1.0;
  for (long n = 1; n <= 3; ++n) {
    const auto region = regions::aztec_diamond_ptr(n);
    const oracle::TilingIndex idx(region);
    const auto dist = oracle::tiling_distribution(region, third);
    const long trials = 40000;
    std::vector<double> ob(idx.size(), 0.0), ex(idx.size());
    for (long s = 0; s < trials; ++s)
      ob[idx.index_of(shuffle::sample_biased(n, third, stats::sample_seed(kSeedBiased + n, s), opts))] += 1;
    for (std::size_t k = 0; k < idx.size(); ++k) ex[k] = trials * exact::to_double(dist[k]);
    worst_p = std::min(worst_p, stats::chi_square_pvalue(ob, ex));
  }
  o.require(worst_p > kChiSquareAlpha);
  o.detail << "order-2 chi2 p=" << fmt(p2) << ", order-32 max |z|=" << fmt(cmp.max_abs_z)
           << ", biased n<=3 min p=" << fmt(worst_p);
}

double calibrated(const Config& cfg, const std::string& key) {
  const std::string path = cfg.calibration_file.empty() ? AZTEC_DEFAULT_CALIBRATION : cfg.calibration_file;
  std::ifstream in(path);
  if (!in) throw ResourceError("calibration file not found: " + path);
  const auto j = nlohmann::json::parse(in);
  return j.at("arctic").at(key).at("threshold").get<double>();
}

void c13_arctic(Outcome& o, const Config& cfg) {
  const double tu = calibrated(cfg, "uniform");
  const double tb = calibrated(cfg, "p=1/4");
  const auto ur = stats::arctic_reports(128, {}, 200, kSeedArctic, cfg.backend);
  const BiasValue quarter(ExactRational(1, 4));
  const auto br = stats::arctic_reports(128, quarter, 200, kSeedArctic + 1, cfg.backend);
  const double mu = stats::median_deviation(ur);
  const double mb = stats::median_deviation(br);
  o.require(mu <= tu);
  o.require(mb <= tb);
  o.detail << "median deviation uniform " << fmt(mu) << " (<= " << fmt(tu) << "), p=1/4 " << fmt(mb) << " (<= "
           << fmt(tb) << ")";
}

// ---- heights suite -----------------------------------------------------

void c10_heights(Outcome& o, const Config& cfg) {
  long trips = 0;
  for (long n = 1; n <= 3; ++n) {
    const auto en = oracle::enumerate_tilings(regions::aztec_diamond_ptr(n));
    for (const auto& t : en.tilings) {
      o.require(regions::tiling_from_height(regions::height_from_tiling(t)) == t);
      ++trips;
    }
  }
  o.require(trips == 74);
  const auto ref = regions::height_from_tiling(regions::all_horizontal(64));
  std::vector<std::size_t> bad(100, 0);
#pragma omp parallel for schedule(dynamic, 2) if (cfg.backend == Backend::openmp)
  for (long s = 0; s < 100; ++s) {
    const auto st = shuffle::run(64, BiasValue::uniform(), stats::sample_seed(kSeedHeights64, s), {Backend::serial, false, {}});
    const auto h = regions::height_from_tiling(st.tiling());
    bad[s] = regions::lipschitz_violations(h, kLipschitzStride) + regions::mod4_mismatches(h, ref);
  }
  std::size_t violations = 0;
  for (auto b : bad) violations += b;
  o.require(violations == 0);
  for (long n = 1; n <= 6; ++n) {
    const auto bnd = regions::boundary_heights(regions::aztec_diamond_ptr(n));
    o.require(regions::tiling_from_height(regions::min_extension(bnd)) == regions::all_horizontal(n));
    o.require(regions::tiling_from_height(regions::max_extension(bnd)) == regions::all_vertical(n));
  }
  o.detail << trips << " round trips, 100 order-64 samples with " << violations
           << " Lipschitz/mod-4 violations, extremal extensions n<=6";
}

void c11_average(Outcome& o, const Config& cfg) {
  double trace = 0;
  for (int i = -1000; i <= 1000; ++i) {
    const double x = i / 1000.0, y = 1 - std::abs(x);
    trace = std::max(trace, std::abs(asym::average_height({x, y}) - (2 - 2 * std::abs(x))));
    trace = std::max(trace, std::abs(asym::average_height({x, -y}) - (2 - 2 * std::abs(x))));
  }
  double tilt = 0;
  const double h1 = 1e-4;
  for (const auto& pt : temperate_grid(20, 0.68)) {
    const auto tl = asym::height_tilt(pt);
    const double fx = (asym::average_height({pt.x + h1, pt.y}) - asym::average_height({pt.x - h1, pt.y})) / (2 * h1);
    const double fy = (asym::average_height({pt.x, pt.y + h1}) - asym::average_height({pt.x, pt.y - h1})) / (2 * h1);
    tilt = std::max({tilt, std::abs(tl.s - fx), std::abs(tl.t - fy)});
  }
  double pde = 0;
  const double h2 = 1e-3;
  const auto grid = temperate_grid(50, 0.6);
  for (const auto& pt : grid) {
    const double c = asym::average_height(pt);
    const double hyy =
        (asym::average_height({pt.x, pt.y + h2}) - 2 * c + asym::average_height({pt.x, pt.y - h2})) / (h2 * h2);
    const double hxx =
        (asym::average_height({pt.x + h2, pt.y}) - 2 * c + asym::average_height({pt.x - h2, pt.y})) / (h2 * h2);
    const double rhs = 8.0 / (kPi * std::sqrt(1 - 2 * pt.x * pt.x - 2 * pt.y * pt.y));
    pde = std::max(pde, std::abs(hyy - hxx - rhs));
  }
  const auto mean = stats::mean_height_report(128, 1000, kSeedMean, kArcticMargin, cfg.backend);
  o.require(trace <= kTraceTol);
  o.require(tilt <= kTiltTol);
  o.require(pde <= kPdeTol);
  o.require(mean.sup_deviation <= kMeanHeightTol);
  o.detail << "trace " << fmt(trace) << ", tilt " << fmt(tilt) << ", PDE " << fmt(pde) << " on " << grid.size()
           << " points, mean height sup " << fmt(mean.sup_deviation) << " over " << mean.compared << " vertices";
}

void c12_concentration(Outcome& o, const Config& cfg) {
  const auto rep = stats::height_concentration(64, {0, 0}, 10000, kSeedVariance, {}, cfg.backend);
  o.require(rep.within_bounds());
  o.detail << "m=" << rep.m << " variance " << fmt(rep.sample_variance) << " <= " << fmt(rep.bound) << ", tails";
  for (const auto& t : rep.tails) o.detail << " c=" << t.c << ':' << fmt(t.frequency) << "<=" << fmt(t.bound);
}

struct Entry {
  int id;
  const char* name;
  Suite suite;
  void (*fn)(Outcome&, const Config&);
};

const Entry kCriteria[] = {
    {1, "exact-oracle equivalence", Suite::exact, c1_oracle},
    {2, "point values", Suite::exact, c2_points},
    {3, "boundary-row formula", Suite::exact, c3_boundary},
    {4, "identities", Suite::exact, c4_identities},
    {5, "central convergence", Suite::asym, c5_central},
    {6, "arctangent convergence", Suite::asym, c6_supnorm},
    {7, "saddle-point estimate", Suite::asym, c7_saddle},
    {8, "exponential decay", Suite::asym, c8_decay},
    {9, "sampler exactness", Suite::sampler, c9_sampler},
    {10, "heights", Suite::heights, c10_heights},
    {11, "average height function", Suite::heights, c11_average},
    {12, "concentration", Suite::heights, c12_concentration},
    {13, "arctic geometry", Suite::sampler, c13_arctic},
    {14, "block lemma", Suite::exact, c14_block},
    {15, "gauss-map inversion", Suite::asym, c15_inversion},
};

const Entry& entry(int id) {
  for (const auto& e : kCriteria)
    if (e.id == id) return e;
  throw DomainError("no acceptance criterion " + std::to_string(id));
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "exact") return Suite::exact;
  if (name == "asym") return Suite::asym;
  if (name == "sampler") return Suite::sampler;
  if (name == "heights") return Suite::heights;
  if (name == "all") return Suite::all;
  throw DomainError("unknown suite '" + name + "' (exact|asym|sampler|heights|all)");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::exact: return "exact";
    case Suite::asym: return "asym";
    case Suite::sampler: return "sampler";
    case Suite::heights: return "heights";
    case Suite::all: return "all";
  }
  return "?";
}

std::vector<int> suite_criteria(Suite s) {
  std::vector<int> out;
  for (int id = 1; id <= 15; ++id)
    if (s == Suite::all || entry(id).suite == s) out.push_back(id);
  return out;
}

std::string criterion_name(int id) { return entry(id).name; }

CriterionResult run_criterion(int id, const Config& cfg) {
  const Entry& e = entry(id);
  CriterionResult r;
  r.id = id;
  r.name = e.name;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    e.fn(o, cfg);
    r.pass = o.pass;
    r.detail = o.detail.str();
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = std::string("error: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_suite(Suite s, const Config& cfg,
                                       const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(s)) {
    out.push_back(run_criterion(id, cfg));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r, bool timing) {
  char head[16];
  std::snprintf(head, sizeof head, "%s %2d ", r.pass ? "PASS" : "FAIL", r.id);
  char secs[32];
  std::snprintf(secs, sizeof secs, " (%.2f s)", r.seconds);
  return head + r.name + ": " + r.detail + (timing ? secs : "");
}

}  // namespace aztec::verify
