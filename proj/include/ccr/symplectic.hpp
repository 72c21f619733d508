#ifndef CCR_SYMPLECTIC_HPP
#define CCR_SYMPLECTIC_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccr/rational.hpp"

namespace ccr {

/// A point of phase space, 2d exact rational coordinates.
using PhaseVector = std::vector<Rational>;

/// Dense rational matrix stored as rows.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// A finite-dimensional real symplectic vector space with an exact rational
/// skew form. Construction validates skew symmetry and non-degeneracy
/// (exact determinant). Values are immutable and cheap to copy.
class SymplecticSpace {
 public:
  /// Standard block form sigma(f,g) = sum_j f_j g_{d+j} - f_{d+j} g_j.
  explicit SymplecticSpace(int dim_pairs);

  /// User-supplied 2d x 2d rational skew form.
  SymplecticSpace(int dim_pairs, RationalMatrix form);

  int dim_pairs() const { return data_->dim_pairs; }
  int dim() const { return 2 * data_->dim_pairs; }
  const RationalMatrix& form() const { return data_->form; }

  bool operator==(const SymplecticSpace& other) const;

 private:
  struct Data {
    int dim_pairs;
    RationalMatrix form;
  };
  std::shared_ptr<const Data> data_;
};

/// Exact evaluation of the form, f^T M g. Antisymmetric and bilinear.
/// Throws Error on a dimension mismatch.
Rational sigma(const SymplecticSpace& space, const PhaseVector& f,
               const PhaseVector& g);

PhaseVector add(const PhaseVector& f, const PhaseVector& g);
PhaseVector negate(const PhaseVector& f);
PhaseVector scale(const Rational& a, const PhaseVector& f);
PhaseVector zero_vector(int dim);
bool is_zero(const PhaseVector& f);

/// "[1, -3/2]" style rendering, used in error messages and reports.
std::string format_vector(const PhaseVector& f);

/// Exact determinant by fraction-preserving Gaussian elimination.
Rational rational_determinant(RationalMatrix m);

/// Rank of the matrix whose columns are the given vectors.
int rational_rank(const std::vector<PhaseVector>& columns);

/// Finds the unique integers (k_1,...,k_n) with sum k_i g_i = f, or nullopt
/// when f is not in the integer span. Throws Error("dependent generators...")
/// when the generators admit a nonzero integer relation, since coefficients
/// would not be unique.
std::optional<std::vector<BigInt>> integer_span_membership(
    const std::vector<PhaseVector>& gens, const PhaseVector& f);

}  // namespace ccr

#endif
