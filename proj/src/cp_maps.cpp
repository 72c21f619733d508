#include "ccr/cp_maps.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>

#include "ccr/error.hpp"
#include "ccr/rng.hpp"

namespace ccr {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kSpectrumTolerance = 1e-10;

void require_square(const Eigen::MatrixXcd& m, const std::string& what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(what + " must be a non-empty square matrix");
  }
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> decompose_unit(
    const Eigen::MatrixXcd& e) {
  require_square(e, "unit image");
  if ((e - e.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
    throw Error("unit image is not self-adjoint");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e);
  const auto& values = solver.eigenvalues();
  if (values.minCoeff() < -kSpectrumTolerance ||
      values.maxCoeff() > 1.0 + kSpectrumTolerance) {
    throw Error("unit image spectrum escapes [0, 1] beyond tolerance");
  }
  return solver;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

const Eigen::MatrixXcd& image_or_throw(const CpSample& sample,
                                       const std::string& label) {
  const auto it = sample.images.find(label);
  if (it == sample.images.end()) {
    throw Error("sample incomplete: missing label '" + label + "'");
  }
  return it->second;
}

}  // namespace

void validate_sample(const CpSample& sample) {
  require_square(sample.unit_image, "unit image");
  if (sample.unit_image.rows() != sample.k) {
    throw Error("unit image size does not match k");
  }
  decompose_unit(sample.unit_image);
  for (const auto& [label, image] : sample.images) {
    require_square(image, "image '" + label + "'");
    if (image.rows() != sample.k) {
      throw Error("image '" + label + "' size does not match k");
    }
    const auto adj = sample.images.find(label + "*");
    if (adj != sample.images.end()) {
      if ((adj->second - image.adjoint()).cwiseAbs().maxCoeff() >
          kHermitianTolerance) {
        throw Error("images of '" + label + "' and '" + label +
                    "*' are not adjoint-compatible");
      }
    }
  }
}

SpectralSplit spectral_split(const Eigen::MatrixXcd& e, double eps) {
  if (!(eps > 0.0 && eps < 0.5)) {
    throw Error(
        "eps must lie in (0, 1/2): the mid-band estimate uses "
        "min(lambda - lambda^2) = eps - eps^2");
  }
  const auto solver = decompose_unit(e);
  const Eigen::Index k = e.rows();

  SpectralSplit split;
  split.eps = eps;
  split.projection = Eigen::MatrixXcd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double lambda = clamp01(solver.eigenvalues()(i));
    if (lambda <= eps) {
      split.lambda0.push_back(lambda);
    } else if (lambda < 1.0 - eps) {
      split.lambda_mid.push_back(lambda);
    } else {
      split.lambda1.push_back(lambda);
      split.projection += solver.eigenvectors().col(i) *
                          solver.eigenvectors().col(i).adjoint();
    }
  }
  split.distance = two_norm(e - split.projection);
  split.delta = two_norm(e - e * e);
  const double gap = eps - eps * eps;
  split.certified_bound =
      std::sqrt(eps * eps + (split.delta * split.delta) / (gap * gap));
  return split;
}

UnitalizeResult unitalize(const CpSample& sample, double eps) {
  if (!(eps > 0.0 && eps < 0.5)) {
    throw Error("eps must lie in (0, 1/2)");
  }
  validate_sample(sample);
  const auto solver = decompose_unit(sample.unit_image);
  const Eigen::Index k = sample.k;

  std::vector<Eigen::Index> band;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (clamp01(solver.eigenvalues()(i)) >= 1.0 - eps) band.push_back(i);
  }
  if (band.empty()) {
    throw Error("no spectrum near 1: the top spectral band is empty");
  }

  UnitalizeResult result;
  result.rank = static_cast<Eigen::Index>(band.size());
  double f_norm = 0.0, fp_norm = 0.0, pf2_norm = 0.0;
  for (const Eigen::Index i : band) {
    const double lambda = clamp01(solver.eigenvalues()(i));
    const double root = 1.0 / std::sqrt(lambda);
    f_norm = std::max(f_norm, root);
    fp_norm = std::max(fp_norm, std::abs(root - 1.0));
    pf2_norm = std::max(pf2_norm, std::abs(1.0 - 1.0 / lambda));
  }
  result.f_norm = f_norm;
  result.f_minus_p_norm = fp_norm;
  result.p_minus_f2_norm = pf2_norm;

  CpSample out;
  out.pairs = sample.pairs;
  out.norm_refs = sample.norm_refs;

  if (result.rank == k) {
    // Full band: stay in the original basis, conjugate by e^{-1/2}.
    Eigen::VectorXd roots(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      roots(i) = 1.0 / std::sqrt(clamp01(solver.eigenvalues()(i)));
    }
    const Eigen::MatrixXcd f = solver.eigenvectors() * roots.asDiagonal() *
                               solver.eigenvectors().adjoint();
    out.k = k;
    out.unit_image = f * sample.unit_image * f;
    for (const auto& [label, image] : sample.images) {
      out.images[label] = f * image * f;
    }
  } else {
    Eigen::MatrixXcd basis(k, result.rank);
    Eigen::VectorXd roots(result.rank);
    for (Eigen::Index j = 0; j < result.rank; ++j) {
      basis.col(j) = solver.eigenvectors().col(band[static_cast<std::size_t>(j)]);
      roots(j) =
          1.0 /
          std::sqrt(clamp01(solver.eigenvalues()(band[static_cast<std::size_t>(j)])));
    }
    const Eigen::MatrixXcd frame = basis * roots.asDiagonal();  // (f U)
    out.k = result.rank;
    out.unit_image = frame.adjoint() * sample.unit_image * frame;
    for (const auto& [label, image] : sample.images) {
      out.images[label] = frame.adjoint() * image * frame;
    }
  }
  result.sample = std::move(out);
  return result;
}

Eigen::MatrixXcd random_contraction(Eigen::Index k, std::uint64_t seed,
                                    double spread) {
  if (k <= 0) {
    throw Error("contraction size must be positive");
  }
  DeterministicRng rng(seed);
  auto haar_like = [&]() {
    Eigen::MatrixXcd g(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        g(i, j) = rng.complex_normal();
      }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < k; ++j) {
      const auto d = r(j, j);
      if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
  };

  const Eigen::MatrixXcd left = haar_like();
  const Eigen::MatrixXcd right = haar_like();
  Eigen::VectorXd singulars(k);
  singulars(0) = 1.0;
  for (Eigen::Index i = 1; i < k; ++i) {
    const double u = rng.uniform();
    const bool near_one = rng.uniform() < 0.7;
    const double s = near_one ? 1.0 - spread * u : spread * u;
    singulars(i) = std::min(1.0, std::max(0.0, s));
  }
  return left * singulars.asDiagonal() * right.adjoint();
}

CpSample synth_ccp(const LatticeModel& model, const LabelledElements& elements,
                   const Eigen::MatrixXcd& contraction) {
  if (contraction.rows() != model.size() ||
      contraction.cols() != model.size()) {
    throw Error("contraction size does not match the lattice box");
  }
  if (operator_norm(contraction) > 1.0 + 1e-10) {
    throw Error("contraction norm exceeds 1");
  }
  CpSample sample;
  sample.k = model.size();
  sample.unit_image = contraction.adjoint() * contraction;
  for (const auto& [label, element] : elements) {
    sample.images[label] =
        contraction.adjoint() * rep_matrix(model, element).matrix * contraction;
  }
  return sample;
}

CpSample synth_ccp(const LatticeModel& model, const LabelledElements& elements,
                   std::uint64_t seed, double spread) {
  return synth_ccp(model, elements,
                   random_contraction(model.size(), seed, spread));
}

void append_mult_domain_family(const SymplecticSpace& space,
                               const std::string& label, const WeylElement& x,
                               LabelledElements& elements,
                               std::vector<std::array<std::string, 3>>& pairs) {
  (void)space;
  const WeylElement x_adj = adjoint(x);
  elements.emplace_back(label, x);
  elements.emplace_back(label + "*", x_adj);
  elements.emplace_back(label + "*" + label, multiply(x_adj, x));
  elements.emplace_back(label + label + "*", multiply(x, x_adj));
  pairs.push_back({label + "*", label, label + "*" + label});
  pairs.push_back({label, label + "*", label + label + "*"});
}

CertificateReport folner_certificate(const CpSample& sample, double eps) {
  if (eps < 0.0) {
    throw Error("eps must be nonnegative");
  }
  CertificateReport report;
  report.eps = eps;
  report.pass = true;
  for (const auto& [a, b, ab] : sample.pairs) {
    PairCheck check;
    check.a = a;
    check.b = b;
    check.ab = ab;
    check.defect = two_norm(image_or_throw(sample, ab) -
                            image_or_throw(sample, a) *
                                image_or_throw(sample, b));
    check.pass = check.defect <= eps;
    report.pass = report.pass && check.pass;
    report.pairs.push_back(std::move(check));
  }
  for (const auto& [label, image] : sample.images) {
    ElementCheck check;
    check.label = label;
    check.compressed_norm = operator_norm(image);
    check.trace_value = image.trace() / static_cast<double>(sample.k);
    const auto ref = sample.norm_refs.find(label);
    if (ref != sample.norm_refs.end()) {
      check.reference_norm = ref->second;
      check.norm_gap = std::abs(check.compressed_norm - ref->second);
    }
    report.elements.push_back(std::move(check));
  }
  return report;
}

double mult_domain_distance(const CpSample& sample, const std::string& label) {
  const auto& a = image_or_throw(sample, label);
  image_or_throw(sample, label + "*");  // adjoint image must be recorded
  const auto& a_adj_a = image_or_throw(sample, label + "*" + label);
  const auto& a_a_adj = image_or_throw(sample, label + label + "*");
  const double left = two_norm(a_adj_a - a.adjoint() * a);
  const double right = two_norm(a_a_adj - a * a.adjoint());
  return std::max(left, right);
}

}  // namespace ccr
