#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>
#include <vector>

namespace harmonia {

using cx = std::complex<double>;

inline constexpr const char* kVersion = "0.1.0";

// Worker cap: min(hardware, HARMONIA_THREADS). Always at least 1.
inline int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("HARMONIA_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return static_cast<int>(hw);
}

// Chunked parallel loop over [0, n). fn(begin, end) must not touch shared
// mutable state outside its own index range.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  int workers = worker_count();
  if (workers <= 1 || n < 2048) {
    fn(0, n);
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    std::size_t b = std::min(n, static_cast<std::size_t>(w) * chunk);
    std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : threads) t.join();
}

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  cx complex_in_box(double half) { return cx(uniform(-half, half), uniform(-half, half)); }
  cx complex_in_disk(double radius) {
    double r = radius * std::sqrt(uniform(0.0, 1.0));
    double a = uniform(0.0, 2.0 * M_PI);
    return cx(r * std::cos(a), r * std::sin(a));
  }
  std::array<double, 3> unit_vec3() {
    std::normal_distribution<double> n(0.0, 1.0);
    double x = n(gen), y = n(gen), z = n(gen);
    double s = std::sqrt(x * x + y * y + z * z);
    if (s == 0.0) return {1.0, 0.0, 0.0};
    return {x / s, y / s, z / s};
  }
};

} // namespace harmonia
