#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "witt/suites.hpp"

namespace {

struct Criterion {
  int number;
  const char* suite;
  double limit_seconds;  // 0: no runtime limit
};

constexpr Criterion kCriteria[] = {
    {1, "flagship", 5},   {2, "bp-witness", 600}, {3, "sap", 0},        {4, "decomposable", 0}, {5, "jacobson", 0},
    {6, "trace", 0},      {7, "hilbert", 300},    {8, "springer", 0},   {10, "completeness", 0},
};

std::string seconds(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(1) << s << " s";
  return o.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
  witt::SuiteConfig cfg;
  cfg.seed = seed;
  bool all = true;
  std::vector<nlohmann::json> negatives;
  std::vector<std::pair<int, std::string>> lines;

  for (const auto& c : kCriteria) {
    const auto rep = witt::run_suite(c.suite, cfg);
    for (const auto& n : rep.negative_certificates) negatives.push_back(n);
    const bool in_time = c.limit_seconds == 0 || rep.seconds < c.limit_seconds;
    const bool ok = rep.passed() && in_time;
    all = all && ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.suite << "): " << rep.instances
         << " checks, " << rep.failures << " failures, " << seconds(rep.seconds);
    if (c.limit_seconds > 0) line << " (limit " << seconds(c.limit_seconds) << ")";
    line << "; " << rep.summary;
    for (const auto& n : rep.failure_notes) line << "\n    " << n;
    std::cout << line.str() << std::endl;
  }

  // Criterion 9: each negative certificate is re-verified by a separate witt process.
  const auto dir = std::filesystem::temp_directory_path() / ("witt-acceptance-" + std::to_string(seed));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::size_t verified = 0;
  std::vector<std::string> bad;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    const auto path = dir / ("cert-" + std::to_string(i) + ".json");
    std::ofstream(path) << negatives[i].dump(2) << "\n";
    const std::string cmd = std::string("\"") + WITT_BINARY + "\" verify \"" + path.string() + "\" > /dev/null 2>&1";
    if (std::system(cmd.c_str()) == 0)
      ++verified;
    else if (bad.size() < 8)
      bad.push_back(negatives[i].at("input").get<std::string>());
  }
  const double t9 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok9 = !negatives.empty() && verified == negatives.size();
  all = all && ok9;
  std::cout << (ok9 ? "PASS" : "FAIL") << " criterion 9 (certificates): " << verified << "/" << negatives.size()
            << " negative certificates verified in fresh processes, " << seconds(t9);
  for (const auto& b : bad) std::cout << "\n    " << b;
  std::cout << std::endl;
  if (ok9) std::filesystem::remove_all(dir);
  return all ? 0 : 1;
}
