#pragma once

#include <cstddef>
#include <vector>

#include "polystab/errors.hpp"
#include "polystab/rational.hpp"

namespace polystab {

// Exact point of the standard probability simplex: nonnegative rational
// coordinates summing to one.
struct SimplexPoint {
  std::vector<Rat> w;

  std::size_t dim() const { return w.size(); }
  const Rat& operator[](std::size_t i) const { return w[i]; }

  bool valid() const {
    if (w.empty()) return false;
    Rat sum(0);
    for (const auto& x : w) {
      if (x.sgn() < 0) return false;
      sum += x;
    }
    return sum == Rat(1);
  }

  static SimplexPoint checked(std::vector<Rat> coords) {
    SimplexPoint p{std::move(coords)};
    if (!p.valid())
      throw FormatError("not a simplex point (negative entry or sum != 1)");
    return p;
  }

  static SimplexPoint uniform(std::size_t n) {
    return {std::vector<Rat>(n, Rat(1, static_cast<long>(n)))};
  }

  static SimplexPoint vertex(std::size_t n, std::size_t i) {
    std::vector<Rat> w(n, Rat(0));
    w.at(i) = Rat(1);
    return {std::move(w)};
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!w[i].is_zero()) s.push_back(i);
    return s;
  }
};

}  // namespace polystab
