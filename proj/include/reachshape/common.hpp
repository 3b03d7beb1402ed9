#pragma once

#include <charconv>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace reachshape {

// Shared relative rank threshold: singular values below kRankTol * sigma_max
// are treated as zero everywhere (Kalman tests, index selection, filtration).
inline constexpr double kRankTol = 1e-10;

// Norm guard for the matrix exponential.
inline constexpr double kExpmNormLimit = 50.0;

enum class ErrorCode {
  DimensionMismatch,
  DegenerateBody,
  GridTooSmall,
  NotControllable,
  IllConditionedTransform,
  QuadratureStall,
  TimeResolution,
  MissingTaylorData,
  SplittingFailure,
  DegenerateLimitBody,
  InsufficientData,
  InvalidArgument,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline int thread_cap() {
  static const int cap = [] {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("REACHSHAPE_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v >= 1 && v < 1024) return static_cast<int>(v);
    }
    return static_cast<int>(hw);
  }();
  return cap;
}

// Data-parallel map over [0, count). Each index writes its own output slot,
// so results do not depend on scheduling.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
  const int threads = thread_cap();
  if (threads <= 1 || count < 16) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// Shortest decimal string that round-trips the value.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace reachshape
