#ifndef CCR_FOLNER_HPP
#define CCR_FOLNER_HPP

#include <set>
#include <vector>

#include "ccr/weyl.hpp"

namespace ccr {

/// The span of the generators W(k_1 g_1 + ... + k_n g_n), k_i in {1..N},
/// recorded through its exact support set. Distinct support vectors index
/// linearly independent generators, so dimension counts reduce to set
/// cardinalities.
struct FolnerSubspace {
  std::vector<PhaseVector> generators;
  int box_size = 0;                // N
  std::set<PhaseVector> support;   // S, deduplicated
  bool injective = false;          // |S| == N^n
};

/// Enumerates the N^n lattice sums. Throws on an empty generator list or a
/// box too large to enumerate (> 5e6 tuples).
FolnerSubspace build_folner_subspace(const std::vector<PhaseVector>& gens,
                                     int box_size);

/// |S u (g + S)| / |S| as an exact rational; the dimension growth of the
/// subspace under one generator, valid because monomials permute the basis.
Rational ratio_monomial(const PhaseVector& g, const FolnerSubspace& v);

/// Dimension growth bracket for a general element: lower = 1, upper counts
/// support translates, numeric is a singular-value rank of the stacked
/// coefficient vectors (tolerance 1e-9) divided by |S|.
struct GrowthRatio {
  Rational lower;
  Rational upper;
  double numeric = 0.0;
};
GrowthRatio ratio_general(const WeylElement& a, const FolnerSubspace& v);

/// Least N with 1/N < eps.
int epsilon_plan(double eps);

}  // namespace ccr

#endif
