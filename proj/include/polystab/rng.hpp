#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "polystab/rational.hpp"

namespace polystab {

// Deterministic random source.  All derived draws (ranges, simplex points,
// Dirichlet weights) are hand-mapped from raw mt19937_64 output so that two
// builds and two platforms produce identical streams; the standard library
// distribution classes make no such guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return gen_(); }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double unit() {  // [0, 1), 53-bit resolution
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double exponential() { return -std::log1p(-unit()); }

  Rat rat(long max_abs_num, long max_den) {
    return Rat(int_in(-max_abs_num, max_abs_num), int_in(1, max_den));
  }

  // Exact rational simplex point: integer weights in [0, granularity],
  // normalized; resampled in the measure-zero all-zero case.
  std::vector<Rat> simplex_rat(std::size_t n, long granularity = 1000) {
    std::vector<long> w(n);
    long sum = 0;
    do {
      sum = 0;
      for (auto& x : w) {
        x = int_in(0, granularity);
        sum += x;
      }
    } while (sum == 0);
    std::vector<Rat> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Rat(w[i], sum);
    return p;
  }

  // Uniform point of the probability simplex (normalized exponentials).
  std::vector<double> dirichlet(std::size_t n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
      x = exponential() + 1e-300;
      sum += x;
    }
    for (auto& x : w) x /= sum;
    return w;
  }

  // Independent child stream; used to give parallel loop iterations
  // schedule-independent randomness.
  Rng fork(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ + 0x9e3779b97f4a7c15ULL * (stream + 1)));
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace polystab
