// One-off calibration of the arctic-boundary thresholds. Run once, commit
// the JSON it writes; the acceptance suite only reads it.
//
//   aztec_calibrate tests/data/calibration.json

#include <cmath>
#include <fstream>
#include <iostream>

#include "aztec/format.hpp"
#include "aztec/stats.hpp"
#include "json.hpp"

namespace {

constexpr long kOrder = 128;
constexpr long kSamples = 200;
constexpr std::uint64_t kSeed = 0xC0FFEE;  // never reused by the acceptance run
constexpr double kMargin = 0.01;

nlohmann::json calibrate(const std::optional<aztec::exact::BiasValue>& bias) {
  const auto reports = aztec::stats::arctic_reports(kOrder, bias, kSamples, kSeed);
  const double median = aztec::stats::median_deviation(reports);
  // the acceptance median is over a different seed set; the margin covers
  // several standard errors of a 200-sample median
  const double threshold = std::ceil((median + kMargin) * 1000.0) / 1000.0;
  return {{"bias", bias ? aztec::exact::to_string(bias->value()) : "1/2"},
          {"calibration_median", median},
          {"threshold", threshold}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: aztec_calibrate OUT.json\n";
    return 2;
  }
  aztec::apply_thread_env();
  nlohmann::json j;
  j["version"] = aztec::kVersion;
  j["order"] = kOrder;
  j["samples"] = kSamples;
  j["seed"] = kSeed;
  j["rule"] = "threshold = ceil_0.001(calibration median + 0.01)";
  j["arctic"]["uniform"] = calibrate(std::nullopt);
  j["arctic"]["p=1/4"] = calibrate(aztec::exact::BiasValue(aztec::exact::ExactRational(1, 4)));
  std::ofstream out(argv[1]);
  out << j.dump(2) << '\n';
  std::cout << j.dump(2) << '\n';
  return out ? 0 : 1;
}
