#ifndef CCR_LATTICE_HPP
#define CCR_LATTICE_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "ccr/weyl.hpp"

namespace ccr {

/// Box shape for lattice truncations. Symmetric cubes |k_i| <= N are the
/// default; one-sided boxes {1..N}^n match the subspaces used by the
/// dimension-ratio computations.
enum class BoxMode { symmetric, onesided };

/// A finitely generated lattice inside phase space together with a box
/// truncation. Carries the compressed twisted-translation representation of
/// the trace: the generator W(f) acts on the basis vector of the lattice
/// point h as the phase exp(-i sigma(f,h)/2) times the basis vector of f+h.
/// Construction verifies that the generators admit no integer relation, so
/// tuples index lattice points uniquely. Immutable after construction.
class LatticeModel {
 public:
  LatticeModel(SymplecticSpace space, std::vector<PhaseVector> gens,
               int radius, BoxMode box = BoxMode::symmetric);

  const SymplecticSpace& space() const { return space_; }
  const std::vector<PhaseVector>& generators() const { return gens_; }
  int radius() const { return radius_; }
  BoxMode box() const { return box_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }

  /// Matrix dimension, (2N+1)^n or N^n.
  Eigen::Index size() const { return static_cast<Eigen::Index>(points_.size()); }
  const std::vector<PhaseVector>& points() const { return points_; }

  int tuple_low() const { return box_ == BoxMode::symmetric ? -radius_ : 1; }
  int tuple_high() const { return radius_; }
  bool tuple_in_box(const std::vector<long>& tuple) const;
  Eigen::Index index_of_tuple(const std::vector<long>& tuple) const;
  std::vector<long> tuple_of_index(Eigen::Index index) const;

  /// Integer coordinates of a lattice vector; nullopt when f is outside the
  /// integer span of the generators.
  std::optional<std::vector<long>> tuple_of(const PhaseVector& f) const;

 private:
  SymplecticSpace space_;
  std::vector<PhaseVector> gens_;
  int radius_;
  BoxMode box_;
  std::vector<PhaseVector> points_;
};

/// A box-compressed operator.
struct CompressedOp {
  const LatticeModel* model = nullptr;
  Eigen::MatrixXcd matrix;
};

/// The compression of the twisted-translation action of the element to the
/// box. Linear; the unit maps to the identity. Throws when a support vector
/// of the element is outside the lattice.
CompressedOp rep_matrix(const LatticeModel& model, const WeylElement& a);

/// || rep(ab) - rep(a) rep(b) ||_{2,tr}: the multiplicativity defect of the
/// box compression.
double mult_defect(const LatticeModel& model, const WeylElement& a,
                   const WeylElement& b);

struct NormReport {
  double compressed_norm = 0.0;  // largest singular value of the compression
  double l1 = 0.0;               // coefficient bound from the element
};
NormReport norm_report(const LatticeModel& model, const WeylElement& a);

/// Normalized matrix trace of the compression; reproduces the algebra trace
/// exactly for lattice-supported elements.
std::complex<double> trace_reproduction(const LatticeModel& model,
                                        const WeylElement& a);

/// Largest |tuple component| over the support of the element; 0 for scalars.
int support_radius(const LatticeModel& model, const WeylElement& a);

/// Trace-class norm of the commutator of the normalized inner-box density
/// with the action of the element, computed on the ambient box. The ambient
/// model must contain every translate of the inner box by support tuples of
/// the element; otherwise throws "ambient box too small".
double hypertrace_commutator(const LatticeModel& ambient, int inner_radius,
                             const WeylElement& a);

/// |B delta (B - f)| / |B| for a monomial with support tuple `tuple` on the
/// inner box of the given radius; the exact combinatorial value of the
/// hypertrace commutator norm for monomials.
Rational hypertrace_prediction(int generator_count, int inner_radius,
                               const std::vector<long>& tuple,
                               BoxMode box = BoxMode::symmetric);

}  // namespace ccr

#endif
