#ifndef CCR_CP_MAPS_HPP
#define CCR_CP_MAPS_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccr/lattice.hpp"
#include "ccr/matrix_norms.hpp"

namespace ccr {

/// A finite-dimensional c.c.p. map recorded through matrix images of a
/// labelled family of algebra elements plus the image of the unit. Labels
/// follow the convention: the adjoint of "A" is "A*", products concatenate
/// ("A*A", "AA*", "AB").
struct CpSample {
  Eigen::Index k = 0;
  Eigen::MatrixXcd unit_image;
  std::map<std::string, Eigen::MatrixXcd> images;
  std::vector<std::array<std::string, 3>> pairs;  // {A, B, AB}
  std::map<std::string, double> norm_refs;        // optional reference norms
};

/// Checks the necessary conditions recorded with a sample: square matrices of
/// matching size, self-adjoint unit image with spectrum in [0, 1] up to
/// 1e-10, and adjoint-compatibility for labelled adjoint pairs. Complete
/// positivity itself is not decidable from finitely many images.
void validate_sample(const CpSample& sample);

/// Spectral data of a unit image e split at [0,eps], (eps,1-eps), [1-eps,1],
/// with the projection onto the top band and the certified distance bound
/// sqrt(eps^2 + delta^2/(eps - eps^2)^2), delta = ||e - e^2||_{2,tr}.
struct SpectralSplit {
  double eps = 0.0;
  std::vector<double> lambda0, lambda_mid, lambda1;
  Eigen::MatrixXcd projection;
  double distance = 0.0;         // ||e - P||_{2,tr}
  double delta = 0.0;            // ||e - e^2||_{2,tr}
  double certified_bound = 0.0;
};

/// Requires e self-adjoint with spectrum within 1e-10 of [0,1] and
/// 0 < eps < 1/2 (the mid-band estimate uses min(l - l^2) = eps - eps^2).
SpectralSplit spectral_split(const Eigen::MatrixXcd& e, double eps);

/// Unital rescaling: compress to the top spectral band of the unit image and
/// conjugate by the inverse square root of the unit image there, so the unit
/// maps to the identity of the compression. Keeps the original basis when
/// the band is full-dimensional. Throws "no spectrum near 1" when the band
/// is empty.
struct UnitalizeResult {
  CpSample sample;
  Eigen::Index rank = 0;          // dimension of the compression
  double f_norm = 0.0;            // ||(Pe)^{-1/2}||
  double f_minus_p_norm = 0.0;    // ||f - P||
  double p_minus_f2_norm = 0.0;   // ||P - f^2||
};
UnitalizeResult unitalize(const CpSample& sample, double eps);

/// Seeded random contraction with top singular value exactly 1; `spread`
/// controls how far the remaining singular values wander from {0, 1}.
Eigen::MatrixXcd random_contraction(Eigen::Index k, std::uint64_t seed,
                                    double spread = 1.0);

using LabelledElements = std::vector<std::pair<std::string, WeylElement>>;

/// Images A -> V^dag rep(A) V through an explicit contraction V.
CpSample synth_ccp(const LatticeModel& model, const LabelledElements& elements,
                   const Eigen::MatrixXcd& contraction);

/// Same with a seeded random contraction; deterministic per seed.
CpSample synth_ccp(const LatticeModel& model, const LabelledElements& elements,
                   std::uint64_t seed, double spread = 1.0);

/// Convenience: labels "X", "X*", "X*X", "XX*" for an element, with the
/// corresponding pair entries, appended to the output lists.
void append_mult_domain_family(const SymplecticSpace& space,
                               const std::string& label, const WeylElement& x,
                               LabelledElements& elements,
                               std::vector<std::array<std::string, 3>>& pairs);

struct PairCheck {
  std::string a, b, ab;
  double defect = 0.0;
  bool pass = false;
};
struct ElementCheck {
  std::string label;
  double compressed_norm = 0.0;
  std::optional<double> reference_norm;
  std::optional<double> norm_gap;  // |compressed - reference|
  std::complex<double> trace_value;
};
struct CertificateReport {
  double eps = 0.0;
  std::vector<PairCheck> pairs;
  std::vector<ElementCheck> elements;
  bool pass = false;
};

/// Per recorded pair, the 2-norm multiplicativity defect against eps; per
/// element, the compressed norm (with gap when a reference is supplied) and
/// the normalized trace. Throws "sample incomplete" naming a missing label.
CertificateReport folner_certificate(const CpSample& sample, double eps);

/// max(||phi(A*A) - phi(A)* phi(A)||, ||phi(AA*) - phi(A) phi(A)*||): the
/// computable distance of A from behaving multiplicatively. Requires labels
/// A, A*, A*A, AA*.
double mult_domain_distance(const CpSample& sample, const std::string& label);

}  // namespace ccr

#endif
