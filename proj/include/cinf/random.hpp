#pragma once

#include <cstdint>
#include <random>

#include "cinf/rational.hpp"

namespace cinf {

// Seeded generator with hand-rolled distributions, so identical seeds give
// identical streams regardless of standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // inclusive bounds
  int uniform_int(int a, int b) {
    return a + static_cast<int>(next() % static_cast<std::uint64_t>(b - a + 1));
  }

  Rational small_rational(int max_abs_num, int max_den) {
    int num = uniform_int(-max_abs_num, max_abs_num);
    int den = uniform_int(1, max_den);
    return Rational(num, den);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cinf
