// Times the verification and convergence kernels in serial and OpenMP mode
// and checks that both modes produce identical reports.
//
//   jordanmeans-bench [--samples N] [--threads T]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "jordan/io.hpp"
#include "jordan/parallel.hpp"
#include "jordan/suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_of(const std::function<void()>& fn) {
  const auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string verify_fingerprint(const std::vector<jordan::ReportRecord>& recs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : recs) j.push_back(jordan::report_to_json(r));
  return j.dump();
}

std::string converge_fingerprint(
    const std::vector<jordan::ConvergeRecord>& recs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : recs) j.push_back(jordan::converge_to_json(r));
  return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
  int scale = 1;
  int threads = 0;  // OpenMP default
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--samples") == 0 && i + 1 < argc)
      scale = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
      threads = std::atoi(argv[++i]);
  }
  jordan::set_threads(threads);

  std::printf("threads available: %d\n", jordan::max_threads());
  std::printf("%-28s %12s %12s %9s %8s\n", "kernel", "serial [s]",
              "parallel [s]", "speedup", "equal");

  bool all_equal = true;
  const auto report_row = [&](const std::string& name, double ts, double tp,
                              bool equal) {
    all_equal = all_equal && equal;
    std::printf("%-28s %12.4f %12.4f %8.2fx %8s\n", name.c_str(), ts, tp,
                ts / tp, equal ? "yes" : "NO");
  };

  {
    jordan::SuiteConfig cfg;
    cfg.suite = "riccati";
    cfg.dims = {6};
    cfg.samples = 2000 * scale;
    std::vector<jordan::ReportRecord> serial, parallel;
    cfg.exec = jordan::ExecMode::serial;
    const double ts = time_of([&] { serial = jordan::run_verify_suite(cfg); });
    cfg.exec = jordan::ExecMode::parallel;
    const double tp =
        time_of([&] { parallel = jordan::run_verify_suite(cfg); });
    report_row("riccati dim=6 x" + std::to_string(cfg.samples), ts, tp,
               verify_fingerprint(serial) == verify_fingerprint(parallel));
  }

  {
    jordan::SuiteConfig cfg;
    cfg.suite = "spectral-props";
    cfg.dims = {5};
    cfg.samples = 300 * scale;
    std::vector<jordan::ReportRecord> serial, parallel;
    cfg.exec = jordan::ExecMode::serial;
    const double ts = time_of([&] { serial = jordan::run_verify_suite(cfg); });
    cfg.exec = jordan::ExecMode::parallel;
    const double tp =
        time_of([&] { parallel = jordan::run_verify_suite(cfg); });
    report_row("spectral-props dim=5 x" + std::to_string(cfg.samples), ts, tp,
               verify_fingerprint(serial) == verify_fingerprint(parallel));
  }

  {
    jordan::SuiteConfig cfg;
    cfg.suite = "young";
    cfg.dims = {5};
    cfg.ns = {4};
    cfg.samples = 400 * scale;
    std::vector<jordan::ReportRecord> serial, parallel;
    cfg.exec = jordan::ExecMode::serial;
    const double ts = time_of([&] { serial = jordan::run_verify_suite(cfg); });
    cfg.exec = jordan::ExecMode::parallel;
    const double tp =
        time_of([&] { parallel = jordan::run_verify_suite(cfg); });
    report_row("young n=4 dim=5 x" + std::to_string(cfg.samples), ts, tp,
               verify_fingerprint(serial) == verify_fingerprint(parallel));
  }

  {
    jordan::ConvergeConfig cfg;
    cfg.mean = "sagae-spectral";
    cfg.n = 4;
    cfg.samples = 40 * scale;
    std::vector<jordan::ConvergeRecord> serial, parallel;
    cfg.exec = jordan::ExecMode::serial;
    const double ts = time_of([&] { serial = jordan::run_converge(cfg); });
    cfg.exec = jordan::ExecMode::parallel;
    const double tp = time_of([&] { parallel = jordan::run_converge(cfg); });
    report_row("converge sagae-spectral n=4", ts, tp,
               converge_fingerprint(serial) == converge_fingerprint(parallel));
  }

  if (!all_equal) {
    std::fprintf(stderr, "parallel reports differ from serial reference\n");
    return 1;
  }
  return 0;
}
