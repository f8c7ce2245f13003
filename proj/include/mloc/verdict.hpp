#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mloc/witness.hpp"

namespace mloc {

struct Stats {
  std::map<std::string, std::int64_t> counts;
  double elapsed_ms = 0.0;
};

/// Result of a check. A failing verdict always carries a witness.
struct Verdict {
  std::string check;
  bool passed = true;
  std::optional<Witness> witness;
  std::string detail;
  Stats stats;
  /// Named vertex lists that supplement the witness (e.g. the 1-ball
  /// centers tried for a dwheel).
  std::vector<std::pair<std::string, std::vector<Vertex>>> annotations;

  static Verdict pass(std::string check, std::string detail = {}) {
    Verdict v;
    v.check = std::move(check);
    v.detail = std::move(detail);
    return v;
  }
  static Verdict fail(std::string check, Witness witness, std::string detail) {
    Verdict v;
    v.check = std::move(check);
    v.passed = false;
    v.witness = std::move(witness);
    v.detail = std::move(detail);
    return v;
  }

  explicit operator bool() const { return passed; }
};

/// Wall-clock timer writing into Stats::elapsed_ms when it goes out of scope.
class ScopedTimer {
 public:
  explicit ScopedTimer(Stats& stats) : stats_(stats), start_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer() {
    stats_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  Stats& stats_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace mloc
