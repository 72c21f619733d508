#ifndef CCR_WEYL_HPP
#define CCR_WEYL_HPP

#include <complex>
#include <map>

#include "ccr/symplectic.hpp"

namespace ccr {

/// Coefficients below this modulus are dropped after every operation, so
/// supports stay finite under cancellation. Supports are exact; only the
/// coefficients are floating point.
inline constexpr double kWeylPruneThreshold = 1e-14;

/// A finitely supported complex combination of the unitary generators
/// indexed by exact phase-space vectors. The generator product picks up the
/// phase exp(-i sigma(f,g)/2) on the sum of the indices; the adjoint sends an
/// index to its negative and conjugates the coefficient. Immutable value
/// type; all operations are pure.
class WeylElement {
 public:
  using Coeff = std::complex<double>;
  using TermMap = std::map<PhaseVector, Coeff>;

  explicit WeylElement(SymplecticSpace space) : space_(std::move(space)) {}
  WeylElement(SymplecticSpace space, TermMap terms,
              double prune = kWeylPruneThreshold);

  const SymplecticSpace& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const PhaseVector& f) const;

 private:
  SymplecticSpace space_;
  TermMap terms_;
};

/// W(f): one term, coefficient 1.
WeylElement weyl_generator(const SymplecticSpace& space, const PhaseVector& f);

/// W(0), the unit.
WeylElement weyl_unit(const SymplecticSpace& space);

WeylElement multiply(const WeylElement& a, const WeylElement& b,
                     double prune = kWeylPruneThreshold);
WeylElement adjoint(const WeylElement& a);
WeylElement add(const WeylElement& a, const WeylElement& b,
                double prune = kWeylPruneThreshold);
WeylElement subtract(const WeylElement& a, const WeylElement& b,
                     double prune = kWeylPruneThreshold);
WeylElement scale(std::complex<double> c, const WeylElement& a,
                  double prune = kWeylPruneThreshold);

inline WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return multiply(a, b);
}
inline WeylElement operator+(const WeylElement& a, const WeylElement& b) {
  return add(a, b);
}
inline WeylElement operator-(const WeylElement& a, const WeylElement& b) {
  return subtract(a, b);
}
inline WeylElement operator*(std::complex<double> c, const WeylElement& a) {
  return scale(c, a);
}

/// The tracial state: the coefficient of the zero index, extended linearly.
std::complex<double> trace(const WeylElement& a);

/// Sum of coefficient moduli; an upper bound for the operator norm since
/// every generator is unitary.
double l1_bound(const WeylElement& a);

/// Largest coefficient difference over the union of supports. Test helper
/// for approximate equality of elements.
double max_coeff_distance(const WeylElement& a, const WeylElement& b);

}  // namespace ccr

#endif
