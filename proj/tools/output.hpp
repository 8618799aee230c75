#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

namespace fracshift::cli {

using OrderedJson = nlohmann::ordered_json;

/// Round-trip-safe numeric formatting: 17 significant digits.
inline std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) { add_row(std::move(header)); }

  void add_row(std::vector<std::string> cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += ',';
      line += cells[i];
    }
    lines_.push_back(std::move(line));
  }

  void add_comment(std::string text) { lines_.push_back("# " + std::move(text)); }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    for (const auto& line : lines_) out << line << '\n';
  }

 private:
  std::vector<std::string> lines_;
};

struct RunManifest {
  std::string command;
  OrderedJson parameters = OrderedJson::object();
  OrderedJson tolerances = OrderedJson::object();
  OrderedJson conventions = OrderedJson::object();
  std::vector<std::string> files;
  OrderedJson checks = OrderedJson::array();
  std::string pass_fail_summary;
  double duration_ms = 0.0;

  void write(const std::string& path, const std::string& version) const {
    OrderedJson j;
    j["command"] = command;
    j["version"] = version;
    j["parameters"] = parameters;
    j["tolerances"] = tolerances;
    if (!conventions.empty()) j["conventions"] = conventions;
    j["files"] = files;
    if (!checks.empty()) j["checks"] = checks;
    if (!pass_fail_summary.empty()) j["summary"] = pass_fail_summary;
    j["duration_ms"] = duration_ms;
    std::ofstream out(path, std::ios::binary);
    out << j.dump(2) << '\n';
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Fans grid work out across hardware threads; each index is written to its
/// own slot, so results are deterministic and the file write stays serial.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const unsigned hw = std::thread::hardware_concurrency();
  if (count < 32 || hw <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const unsigned workers = std::min<unsigned>(hw, 8);
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace fracshift::cli
