#ifndef CCR_FOCK_HPP
#define CCR_FOCK_HPP

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "ccr/symplectic.hpp"

namespace ccr {

/// Truncated Fock representation: d oscillator modes, M levels per mode,
/// total dimension M^d. Field matrices combine the per-mode quadratures
/// Q = (a + a^dag)/sqrt(2) and P = -i (a - a^dag)/sqrt(2) linearly; the norm
/// convention makes the compressed field commutator reproduce the symplectic
/// form. Matrices are cached eagerly and immutable afterwards.
class FockRep {
 public:
  FockRep(SymplecticSpace space, int levels);

  const SymplecticSpace& space() const { return space_; }
  int modes() const { return space_.dim_pairs(); }
  int levels() const { return levels_; }
  Eigen::Index dim() const { return dim_; }

  const Eigen::MatrixXcd& position(int mode) const;
  const Eigen::MatrixXcd& momentum(int mode) const;

  /// Phi(f) = sum_j f_j Q_j + f_{d+j} P_j; self-adjoint, linear in f.
  const Eigen::MatrixXcd& field(const PhaseVector& f) const;

  /// Projection onto basis states with every mode level below the cutoff.
  std::vector<Eigen::Index> low_level_indices(int cutoff) const;

 private:
  SymplecticSpace space_;
  int levels_;
  Eigen::Index dim_;
  std::vector<Eigen::MatrixXcd> position_, momentum_;
  mutable std::map<PhaseVector, Eigen::MatrixXcd> field_cache_;
};

/// (i lambda - Phi(f))^{-1}; the convention that gives -i/lambda on f = 0 and
/// the adjoint parity R(lambda,f)^dag = R(-lambda,f). Throws on lambda = 0.
Eigen::MatrixXcd resolvent_matrix(const FockRep& rep, double lambda,
                                  const PhaseVector& f);

enum class ResolventRelation {
  normalization,       // R(lambda, 0) = -(i/lambda) 1
  adjoint,             // R(lambda, f)^dag = R(-lambda, f)
  scaling,             // nu R(nu lambda, nu f) = R(lambda, f)
  resolvent_identity,  // R(l,f) - R(n,f) = i(n-l) R(l,f) R(n,f)
  product,             // R(l,f)R(n,g) = R(l+n,f+g)(R(l,f)+R(n,g)+i s R^2 R)
  commutator,          // [R(l,f), R(n,g)] = i s R(l,f) R(n,g)^2 R(l,f)
};

const char* relation_name(ResolventRelation relation);
ResolventRelation relation_from_name(const std::string& name);

struct RelationParams {
  double lambda = 1.0;
  double nu = 1.0;
  PhaseVector f, g;
};

struct ResidualReport {
  double raw = 0.0;         // operator norm of LHS - RHS on the full space
  double compressed = 0.0;  // same after compressing to the lowest K levels
};

/// Residual of the chosen generator relation at truncation M with cutoff K.
/// The four single-field relations are algebraic identities of one matrix
/// and stay at roundoff for every M; the two relations carrying the form
/// factor hold only in the limit and decay in the compressed norm as M
/// grows with K fixed.
ResidualReport relation_residual(const FockRep& rep, ResolventRelation relation,
                                 const RelationParams& params, int cutoff);

/// || P_K ([Q, P] - i 1) P_K || on a single mode. Zero for K <= M-1; the
/// truncated commutator is i(1 - M |M-1><M-1|), so K = M exposes the defect
/// M at the top level.
double ccr_check(const FockRep& rep, int cutoff);

/// One resolvent symbol; adjoined factors evaluate to the adjoint matrix and
/// the conjugate scalar.
struct ResolventFactor {
  double lambda = 1.0;
  PhaseVector vec;
  bool adjoined = false;
};

/// A formal product of resolvent symbols; empty product is the unit.
struct ResolventWord {
  std::vector<ResolventFactor> factors;
};

ResolventWord adjoint(const ResolventWord& word);
ResolventWord concat(const ResolventWord& a, const ResolventWord& b);

/// Product of resolvent matrices in factor order.
Eigen::MatrixXcd evaluate(const FockRep& rep, const ResolventWord& word);

/// A multiplicative functional on resolvent words induced by a real linear
/// functional mu on phase space: each factor evaluates to
/// (i lambda - mu(f))^{-1}, conjugated when adjoined.
struct Character {
  Eigen::VectorXd mu;
};

double mu_value(const Character& chi, const PhaseVector& f);
std::complex<double> character_value(const Character& chi,
                                     const ResolventFactor& factor);
std::complex<double> character_value(const Character& chi,
                                     const ResolventWord& word);

/// Scalar-level check of the form-free generator relations under a
/// character, plus the magnitude of the form term the quotient annihilates.
struct CharacterRelationReport {
  double normalization = 0.0;
  double adjoint = 0.0;
  double scaling = 0.0;
  double resolvent_identity = 0.0;
  double product_form_free = 0.0;
  double sigma_term_magnitude = 0.0;
  double max_residual = 0.0;
};
CharacterRelationReport character_relation_check(const Character& chi,
                                                 const SymplecticSpace& space,
                                                 const RelationParams& params);

}  // namespace ccr

#endif
