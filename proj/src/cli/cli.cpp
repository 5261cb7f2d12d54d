#include "aztec/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "aztec/asymptotics.hpp"
#include "aztec/errors.hpp"
#include "aztec/format.hpp"
#include "aztec/oracle.hpp"
#include "aztec/render.hpp"
#include "aztec/shuffle.hpp"
#include "aztec/stats.hpp"
#include "aztec/verify.hpp"

namespace aztec::cli {

namespace {

using exact::BiasValue;

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<BiasValue> bias_of(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return BiasValue::parse(text);
}

std::pair<long, long> parse_pair(const std::string& text, const char* what) {
  std::stringstream ss(text);
  long a = 0, b = 0;
  char comma = 0;
  if (!(ss >> a >> comma >> b) || comma != ',' || !(ss >> std::ws).eof())
    throw DomainError(std::string(what) + " must look like A,B: " + text);
  return {a, b};
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw DomainError("bad order list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty order list");
  return out;
}

// ---- subcommands -------------------------------------------------------

struct ExactArgs {
  long order = 0;
  std::string bias;
  std::string at;
  bool grid = false;
};

void cmd_exact(const ExactArgs& a, std::ostream& out) {
  if (a.order < 1) throw DomainError("--order must be >= 1");
  const auto bias = bias_of(a.bias);
  const BiasValue p = bias.value_or(BiasValue::uniform());
  out << output_header("exact n=" + std::to_string(a.order) + " p=" + exact::to_string(p.value())) << '\n';
  out << "ell,m,probability,value\n";
  if (!a.at.empty()) {
    const auto [l, m] = parse_pair(a.at, "--at");
    const exact::LatticeLocation loc{l, m, a.order};
    if (!exact::is_valid_location(loc))
      throw DomainError("(" + std::to_string(l) + "," + std::to_string(m) + ") is not a north-going space of order " +
                        std::to_string(a.order));
    const auto q = bias ? exact::biased_placement_probability(loc, p) : exact::placement_probability(loc);
    out << l << ',' << m << ',' << exact::to_string(q) << ',' << format_real(q.get_d()) << '\n';
    return;
  }
  const exact::PlacementGrid grid(a.order, p);
  for (const auto& loc : grid.locations()) {
    const auto q = grid.probability(loc.ell, loc.m);
    out << loc.ell << ',' << loc.m << ',' << exact::to_string(q) << ',' << format_real(q.get_d()) << '\n';
  }
}

struct AsymArgs {
  double x = 0, y = 0;
  std::string bias;
  bool all = false, height = false, tilt = false;
  double level = -1;
};

void cmd_asym(const AsymArgs& a, std::ostream& out) {
  const auto bias = bias_of(a.bias);
  const asym::NormalizedPoint pt{a.x, a.y};
  const int modes = a.all + a.height + a.tilt + (a.level >= 0);
  if (modes > 1) throw UsageError("choose at most one of --all-directions, --height, --tilt, --level");
  if (bias && (a.height || a.tilt || a.level >= 0))
    throw DomainError("--height, --tilt and --level describe the uniform measure; drop --bias");
  out << output_header("asym") << '\n';
  if (a.level >= 0) {
    const auto curve = asym::level_curve(a.level);
    out << "x,y\n";
    for (const auto& q : curve.sample(200)) out << format_real(q.x) << ',' << format_real(q.y) << '\n';
    return;
  }
  if (a.all) {
    const auto d = bias ? asym::biased_directional_placements(pt, bias->to_double()) : asym::directional_placements(pt);
    out << "x,y,north,east,south,west\n";
    out << format_real(a.x) << ',' << format_real(a.y) << ',' << format_real(d.pn) << ',' << format_real(d.pe) << ','
        << format_real(d.ps) << ',' << format_real(d.pw) << '\n';
    return;
  }
  if (a.height) {
    out << "x,y,height\n"
        << format_real(a.x) << ',' << format_real(a.y) << ',' << format_real(asym::average_height(pt)) << '\n';
    return;
  }
  if (a.tilt) {
    const auto t = asym::height_tilt(pt);
    out << "x,y,s,t\n"
        << format_real(a.x) << ',' << format_real(a.y) << ',' << format_real(t.s) << ',' << format_real(t.t) << '\n';
    return;
  }
  const auto v = bias ? asym::biased_arctan_placement_flagged(pt, bias->to_double())
                      : asym::arctan_placement_flagged(pt);
  out << "x,y,placement,singular_adjacent\n"
      << format_real(a.x) << ',' << format_real(a.y) << ',' << format_real(v.value) << ','
      << (v.singular_adjacent ? 1 : 0) << '\n';
}

struct SampleArgs {
  long order = 0;
  std::string bias;
  std::uint64_t seed = 0;
  long count = 1;
  std::string out;
  std::string trace;
  bool validate = false;
};

void cmd_sample(const SampleArgs& a, std::ostream& out) {
  if (a.order < 1) throw DomainError("--order must be >= 1");
  if (a.count < 1) throw DomainError("--count must be >= 1");
  const BiasValue p = bias_of(a.bias).value_or(BiasValue::uniform());
  std::ofstream trace;
  if (!a.trace.empty()) {
    trace.open(a.trace);
    if (!trace) throw DomainError("cannot write " + a.trace);
    trace << output_header("shuffle trace") << '\n';
  }
  for (long k = 0; k < a.count; ++k) {
    const auto seed = stats::sample_seed(a.seed, k);
    shuffle::ShuffleOptions opts;
    opts.validate = a.validate;
    if (trace.is_open())
      opts.trace = [&](const regions::Tiling& t) {
        regions::write_tiling(trace, t, "sample " + std::to_string(k) + " order " +
                                            std::to_string(*t.region().order_hint()));
      };
    const auto t = shuffle::run(a.order, p, seed, opts).tiling();
    const std::string note = output_header("sample seed=" + std::to_string(a.seed) + " index=" + std::to_string(k) +
                                           " p=" + exact::to_string(p.value()))
                                 .substr(2);
    if (a.out.empty()) {
      regions::write_tiling(out, t, note);
    } else {
      const std::string path = a.count == 1 ? a.out : a.out + "_" + std::to_string(k) + ".txt";
      std::ofstream f(path);
      if (!f) throw DomainError("cannot write " + path);
      regions::write_tiling(f, t, note);
    }
  }
}

struct RenderArgs {
  std::string in, out, palette, bias;
  bool polar = false, heights = false, levels = false, no_overlay = false;
  double scale = 10.0;
};

void cmd_render(const RenderArgs& a) {
  const auto t = regions::read_tiling_file(a.in);
  render::SvgOptions opts;
  opts.scale = a.scale;
  opts.polar = a.polar;
  opts.heights = a.heights;
  opts.levels = a.levels;
  opts.overlay = !a.no_overlay;
  if (const auto b = bias_of(a.bias)) opts.bias = b->to_double();
  if (!a.palette.empty()) opts.palette = render::parse_palette(a.palette, opts.palette);
  if (a.levels && !t.region().order_hint())
    throw DomainError("--levels needs an Aztec diamond tiling");
  std::ofstream f(a.out);
  if (!f) throw DomainError("cannot write " + a.out);
  render::write_svg(f, t, opts);
}

struct VerifyArgs {
  std::string suite = "all";
  std::string calibration;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto suite = verify::parse_suite(a.suite);
  verify::Config cfg;
  cfg.calibration_file = a.calibration;
  out << output_header("verify suite=" + verify::suite_name(suite)) << '\n';
  int failed = 0;
  verify::run_suite(suite, cfg, [&](const verify::CriterionResult& r) {
    out << verify::format_result(r, a.timing) << '\n' << std::flush;
    failed += !r.pass;
  });
  return failed ? kVerifyFailed : kOk;
}

struct OracleArgs {
  std::string region, bias;
};

void cmd_oracle(const OracleArgs& a, std::ostream& out) {
  auto region = std::make_shared<const regions::Region>(regions::read_region_file(a.region));
  const auto bias = bias_of(a.bias);
  const auto st = oracle::exact_statistics(region, bias);
  out << output_header("oracle tilings=" + st.tiling_count.get_str()) << '\n';
  oracle::write_statistics_csv(out, st, *region);
}

struct StatsArgs {
  long order = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string bias;
  bool arctic = false, convergence = false;
  std::string variance;
  std::string orders;
};

void cmd_stats(const StatsArgs& a, std::ostream& out) {
  if (a.order < 1) throw DomainError("--order must be >= 1");
  const int modes = a.arctic + a.convergence + !a.variance.empty();
  if (modes > 1) throw UsageError("choose at most one of --arctic, --variance, --convergence");
  const auto bias = bias_of(a.bias);
  if (a.convergence) {
    const auto ns = a.orders.empty() ? std::vector<long>{a.order, 2 * a.order} : parse_list(a.orders);
    stats::write_convergence_csv(out, stats::convergence_report(ns, bias));
    return;
  }
  if (a.samples < 1) throw UsageError("--samples is required (>= 1)");
  if (!a.seed_set) throw UsageError("--seed is required");
  if (a.arctic) {
    stats::write_arctic_csv(out, stats::arctic_reports(a.order, bias, a.samples, a.seed));
    return;
  }
  if (!a.variance.empty()) {
    if (bias) throw DomainError("--variance uses the uniform measure; drop --bias");
    const auto [x, y] = parse_pair(a.variance, "--variance");
    stats::write_variance_csv(out, stats::height_concentration(a.order, {x, y}, a.samples, a.seed));
    return;
  }
  stats::write_placement_csv(out, stats::empirical_placement(a.order, bias, a.samples, a.seed), bias);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domino tilings of Aztec diamonds: exact statistics, limit shapes, random sampling."};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: AZTEC_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  ExactArgs ea;
  auto* exact_cmd = app.add_subcommand("exact", "exact placement probabilities");
  exact_cmd->add_option("--order", ea.order, "diamond order")->required();
  exact_cmd->add_option("--bias", ea.bias, "bias p, e.g. 1/3");
  auto* at = exact_cmd->add_option("--at", ea.at, "single location L,M");
  auto* grid = exact_cmd->add_flag("--grid", ea.grid, "every north-going space (default)");
  at->excludes(grid);

  AsymArgs aa;
  auto* asym_cmd = app.add_subcommand("asym", "limit-shape formulas at a normalized point");
  asym_cmd->add_option("--x", aa.x, "normalized x")->required();
  asym_cmd->add_option("--y", aa.y, "normalized y")->required();
  asym_cmd->add_option("--bias", aa.bias, "bias p");
  asym_cmd->add_flag("--all-directions", aa.all, "N, E, S, W placement probabilities");
  asym_cmd->add_flag("--height", aa.height, "normalized average height");
  asym_cmd->add_flag("--tilt", aa.tilt, "gradient of the average height");
  asym_cmd->add_option("--level", aa.level, "points of the level curve at probability P");

  SampleArgs sa;
  auto* sample_cmd = app.add_subcommand("sample", "random tilings by domino shuffling");
  sample_cmd->add_option("--order", sa.order, "diamond order")->required();
  sample_cmd->add_option("--bias", sa.bias, "bias p");
  sample_cmd->add_option("--seed", sa.seed, "64-bit seed")->required();
  sample_cmd->add_option("--count", sa.count, "number of tilings");
  sample_cmd->add_option("--out", sa.out, "output file (prefix when --count > 1); default stdout");
  sample_cmd->add_option("--trace", sa.trace, "write every intermediate tiling to this file");
  sample_cmd->add_flag("--validate", sa.validate, "check every shuffle step");

  RenderArgs ra;
  auto* render_cmd = app.add_subcommand("render", "SVG picture of a tiling file");
  render_cmd->add_option("--in", ra.in, "tiling file")->required();
  render_cmd->add_option("--out", ra.out, "SVG output")->required();
  render_cmd->add_flag("--polar", ra.polar, "fade the temperate zone");
  render_cmd->add_flag("--heights", ra.heights, "draw vertex heights");
  render_cmd->add_flag("--levels", ra.levels, "overlay level curves of the limit placement probability");
  render_cmd->add_flag("--no-overlay", ra.no_overlay, "omit the arctic circle/ellipse");
  render_cmd->add_option("--bias", ra.bias, "draw the ellipse for bias p");
  render_cmd->add_option("--scale", ra.scale, "pixels per lattice unit");
  render_cmd->add_option("--palette", ra.palette, "class colors, e.g. N=#ff0000,W=#00ff00");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suites");
  verify_cmd->add_option("--suite", va.suite, "exact|asym|sampler|heights|all")
      ->check(CLI::IsMember({"exact", "asym", "sampler", "heights", "all"}));
  verify_cmd->add_option("--calibration", va.calibration, "calibration JSON (default: shipped file)");
  verify_cmd->add_flag("--timing", va.timing, "append run times");

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("oracle", "statistics by exhaustive enumeration");
  oracle_cmd->add_option("--region", oa.region, "region or aztec file")->required();
  oracle_cmd->add_option("--bias", oa.bias, "bias p");

  StatsArgs sta;
  auto* stats_cmd = app.add_subcommand("stats", "Monte Carlo and convergence reports (CSV)");
  stats_cmd->add_option("--order", sta.order, "diamond order")->required();
  stats_cmd->add_option("--samples", sta.samples, "number of samples");
  auto* seed_opt = stats_cmd->add_option("--seed", sta.seed, "64-bit seed");
  stats_cmd->add_option("--bias", sta.bias, "bias p");
  stats_cmd->add_flag("--arctic", sta.arctic, "temperate-frontier deviation per sample");
  stats_cmd->add_option("--variance", sta.variance, "height concentration at vertex X,Y");
  stats_cmd->add_flag("--convergence", sta.convergence, "sup-norm distance to the limit shape");
  stats_cmd->add_option("--orders", sta.orders, "orders for --convergence, e.g. 50,100,200");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (threads > 0) {
      set_thread_count(threads);
    } else {
      apply_thread_env();
    }
    // verify streams its lines; everything else is emitted only on success
    if (verify_cmd->parsed()) return cmd_verify(va, out);
    std::ostringstream buf;
    if (exact_cmd->parsed()) cmd_exact(ea, buf);
    if (asym_cmd->parsed()) cmd_asym(aa, buf);
    if (sample_cmd->parsed()) cmd_sample(sa, buf);
    if (render_cmd->parsed()) cmd_render(ra);
    if (oracle_cmd->parsed()) cmd_oracle(oa, buf);
    if (stats_cmd->parsed()) {
      sta.seed_set = seed_opt->count() > 0;
      cmd_stats(sta, buf);
    }
    out << buf.str();
  } catch (const UsageError& e) {
    err << "aztec: usage: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "aztec: domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ParseError& e) {
    err << "aztec: input error: " << e.what() << '\n';
    return kDomain;
  } catch (const InfeasibleError& e) {
    err << "aztec: infeasible: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceError& e) {
    err << "aztec: resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const IntegrityError& e) {
    err << "aztec: integrity error: " << e.what() << '\n';
    return kIntegrity;
  } catch (const NumericalError& e) {
    err << "aztec: numerical error: " << e.what() << '\n';
    return kIntegrity;
  }
  return kOk;
}

}  // namespace aztec::cli
