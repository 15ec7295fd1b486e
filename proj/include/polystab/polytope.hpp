#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polystab/errors.hpp"
#include "polystab/matrix.hpp"
#include "polystab/rational.hpp"

namespace polystab {

// How a matrix polytope was produced.  Structured kinds unlock the exact
// decision path; "general" instances get vertex checks plus numeric search.
enum class PolytopeKind { General, NonsingularityGadget, StabilityGadget };

inline std::string to_string(PolytopeKind k) {
  switch (k) {
    case PolytopeKind::General: return "general";
    case PolytopeKind::NonsingularityGadget: return "nonsingularity-gadget";
    case PolytopeKind::StabilityGadget: return "stability-gadget";
  }
  return "general";
}

inline PolytopeKind kind_from_string(const std::string& s) {
  if (s == "general") return PolytopeKind::General;
  if (s == "nonsingularity-gadget") return PolytopeKind::NonsingularityGadget;
  if (s == "stability-gadget") return PolytopeKind::StabilityGadget;
  throw FormatError("unknown polytope kind: '" + s + "'");
}

// Construction record carried by instances derived from a graph: the source
// graph, the threshold, and which diagonal perturbation index was selected.
struct Provenance {
  std::string graph_dimacs;
  Rat tau;
  std::size_t istar = 0;

  friend bool operator==(const Provenance& a, const Provenance& b) {
    return a.graph_dimacs == b.graph_dimacs && a.tau == b.tau &&
           a.istar == b.istar;
  }
};

// Convex hull of finitely many square rational matrices, given by its
// vertices A_1..A_k.
struct PolytopeInstance {
  std::size_t dim = 0;
  PolytopeKind kind = PolytopeKind::General;
  std::vector<RatMatrix> matrices;
  std::optional<Provenance> provenance;

  void validate() const {
    if (matrices.empty()) throw FormatError("polytope with no vertices");
    for (const auto& m : matrices)
      if (m.rows() != dim || m.cols() != dim)
        throw DimensionMismatch("vertex matrix is not dim x dim");
  }

  // Convex combination with exact rational weights.
  RatMatrix at(const std::vector<Rat>& weights) const {
    if (weights.size() != matrices.size())
      throw DimensionMismatch("weight count != vertex count");
    RatMatrix acc(dim, dim);
    for (std::size_t i = 0; i < matrices.size(); ++i)
      acc = acc + weights[i] * matrices[i];
    return acc;
  }
};

}  // namespace polystab
