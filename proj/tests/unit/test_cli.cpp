#include <filesystem>
#include <fstream>
#include <sstream>

#include "aztec/cli.hpp"
#include "aztec/parallel.hpp"
#include "aztec/regions.hpp"
#include "aztec/render.hpp"
#include "doctest.h"

using namespace aztec;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "aztec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "aztec_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("exact grid and single locations") {
  const auto r = run({"exact", "--order", "2", "--grid"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# aztec 1.0.0", 0) == 0);
  CHECK(r.out.find("0,1,3/4") != std::string::npos);
  const auto one = run({"exact", "--order", "1", "--at", "0,0"});
  CHECK(one.out.find("0,0,1/2,0.5\n") != std::string::npos);
  CHECK(run({"exact", "--order", "3", "--at", "0,1"}).code == cli::kDomain);
  CHECK(run({"exact", "--order", "3", "--at", "zero"}).code == cli::kDomain);
  CHECK(run({"exact", "--order", "3", "--bias", "1.5"}).code == cli::kDomain);
  CHECK(run({"exact", "--order", "3", "--at", "0,0", "--grid"}).code == cli::kUsage);
  CHECK(run({"exact"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
}

TEST_CASE("asym point values") {
  const auto r = run({"asym", "--x", "0", "--y", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0,0,0.25,0") != std::string::npos);
  CHECK(run({"asym", "--x", "0", "--y", "0", "--height"}).out.find("0,0,1\n") != std::string::npos);
  CHECK(run({"asym", "--x", "0.5", "--y", "0.5"}).out.find(",0.5,1\n") != std::string::npos);
  CHECK(run({"asym", "--x", "0", "--y", "0", "--level", "0.25"}).code == 0);
  CHECK(run({"asym", "--x", "0", "--y", "0", "--tilt", "--height"}).code == cli::kUsage);
  CHECK(run({"asym", "--x", "0", "--y", "0", "--tilt", "--bias", "1/3"}).code == cli::kDomain);
  const auto far = run({"asym", "--x", "0.9", "--y", "0.9"});
  CHECK(far.code == cli::kDomain);
  CHECK(far.out.empty());
  CHECK(far.err.find("outside") != std::string::npos);
}

TEST_CASE("sample is reproducible and renders") {
  const auto a = run({"sample", "--order", "12", "--seed", "99", "--count", "2"});
  const auto b = run({"sample", "--order", "12", "--seed", "99", "--count", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run({"sample", "--order", "12", "--seed", "98", "--count", "2"}).out);
  const auto file = scratch("t12.txt");
  const auto trace = scratch("t12_trace.txt");
  CHECK(run({"sample", "--order", "12", "--seed", "99", "--out", file.string(), "--trace", trace.string(),
             "--validate"})
            .code == 0);
  const auto t = regions::read_tiling_file(file.string());
  CHECK(t.region().order_hint() == 12);
  std::ifstream tr(trace);
  std::string text((std::istreambuf_iterator<char>(tr)), std::istreambuf_iterator<char>());
  CHECK(text.find("aztec 12") != std::string::npos);
  CHECK(text.find("aztec 1\n") != std::string::npos);
  // the first tiling of a two-sample run is the single-sample tiling
  std::ifstream fin(file);
  std::string single((std::istreambuf_iterator<char>(fin)), std::istreambuf_iterator<char>());
  CHECK(a.out.rfind(single, 0) == 0);

  const auto svg = scratch("t12.svg");
  CHECK(run({"render", "--in", file.string(), "--out", svg.string(), "--polar", "--heights", "--levels"}).code == 0);
  std::ifstream sin(svg);
  std::string s((std::istreambuf_iterator<char>(sin)), std::istreambuf_iterator<char>());
  CHECK(s.find("<svg") != std::string::npos);
  CHECK(s.find("aztec 1.0.0") != std::string::npos);
  CHECK(s.find("<ellipse") != std::string::npos);
  CHECK(run({"render", "--in", file.string(), "--out", svg.string(), "--palette", "Q=#fff"}).code == cli::kDomain);
  CHECK(run({"render", "--in", "/nonexistent/x.txt", "--out", svg.string()}).code == cli::kDomain);
}

TEST_CASE("svg palette and shading") {
  const auto t = regions::all_horizontal(3);
  render::SvgOptions opts;
  opts.palette = render::parse_palette("N=#000000,S=#ffffff", opts.palette);
  std::ostringstream os;
  render::write_svg(os, t, opts);
  const std::string s = os.str();
  CHECK(s.find("#000000") != std::string::npos);
  CHECK(s.find("#ffffff") != std::string::npos);
  CHECK(s.find(opts.palette[2]) == std::string::npos);  // no east dominos
  CHECK_THROWS(render::parse_palette("N=red", opts.palette));
}

TEST_CASE("oracle and stats subcommands") {
  const auto region = scratch("square.txt");
  {
    std::ofstream f(region);
    f << "region 4\n0 0\n1 0\n0 1\n1 1\n";
  }
  const auto r = run({"oracle", "--region", region.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("tilings=2") != std::string::npos);
  CHECK(r.out.find("space,0,0,H,N,1/2") != std::string::npos);
  const auto big = scratch("a8.txt");
  {
    std::ofstream f(big);
    f << "aztec 8\n";
  }
  CHECK(run({"oracle", "--region", big.string()}).code == cli::kResource);

  const auto p = run({"stats", "--order", "3", "--samples", "50", "--seed", "4"});
  CHECK(p.code == 0);
  CHECK(p.out.find("class,ell,m,exact,empirical,stderr") != std::string::npos);
  CHECK(p.out == run({"stats", "--order", "3", "--samples", "50", "--seed", "4"}).out);
  const auto c = run({"stats", "--order", "10", "--convergence"});
  CHECK(c.out.find("\n10,") != std::string::npos);
  CHECK(c.out.find("\n20,") != std::string::npos);
  CHECK(run({"stats", "--order", "16", "--samples", "5", "--seed", "1", "--arctic"}).code == 0);
  CHECK(run({"stats", "--order", "16", "--samples", "5", "--seed", "1", "--variance", "0,0"}).code == 0);
  CHECK(run({"stats", "--order", "16", "--samples", "5", "--seed", "1", "--variance", "-16,0"}).code == cli::kDomain);
  CHECK(run({"stats", "--order", "16", "--samples", "5"}).code == cli::kUsage);
  CHECK(run({"stats", "--order", "16", "--seed", "1", "--arctic", "--convergence"}).code == cli::kUsage);
}

TEST_CASE("verify exact suite and threads flag") {
  const auto r = run({"--threads", "1", "verify", "--suite", "exact"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  2 point values") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kUsage);
  set_thread_count(0);
}
