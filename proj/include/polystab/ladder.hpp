#pragma once

#include <cstddef>
#include <vector>

#include "polystab/rational.hpp"

namespace polystab {

// Candidate thresholds 1 - 1/j for j = 1..n, ascending:
// {0, 1/2, 2/3, ..., 1 - 1/n}.  Consecutive elements j and j+1 differ by
// exactly 1/(j(j+1)), so the smallest gap is 1/((n-1)n); the perturbation
// 1/(n^2 + i) used by the instance builder is strictly smaller, which is
// what makes threshold recovery by ladder scan exact.
struct ThresholdLadder {
  std::size_t n = 0;
  std::vector<Rat> elements;

  static ThresholdLadder for_size(std::size_t n) {
    if (n == 0) throw std::invalid_argument("ladder needs n >= 1");
    ThresholdLadder l;
    l.n = n;
    l.elements.reserve(n);
    for (std::size_t j = 1; j <= n; ++j)
      l.elements.push_back(Rat(1) - Rat(1, static_cast<long>(j)));
    return l;
  }

  bool contains(const Rat& tau) const {
    for (const auto& e : elements)
      if (e == tau) return true;
    return false;
  }
};

}  // namespace polystab
