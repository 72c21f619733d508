#include "ccr/fock.hpp"

#include <cmath>

#include "ccr/error.hpp"
#include "ccr/matrix_norms.hpp"

namespace ccr {

namespace {

constexpr Eigen::Index kMaxRows = 20'000;
const std::complex<double> kI(0.0, 1.0);

Eigen::MatrixXcd annihilation(int levels) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

// I x ... x op x ... x I with op acting on the given mode.
Eigen::MatrixXcd embed(const Eigen::MatrixXcd& op, int mode, int modes,
                       int levels) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int j = 0; j < modes; ++j) {
    const Eigen::MatrixXcd& factor =
        j == mode ? op
                  : Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(levels, levels));
    Eigen::MatrixXcd next(out.rows() * factor.rows(),
                          out.cols() * factor.cols());
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block(r * factor.rows(), c * factor.cols(), factor.rows(),
                   factor.cols()) = out(r, c) * factor;
      }
    }
    out = std::move(next);
  }
  return out;
}

void check_lambda(double lambda) {
  if (lambda == 0.0) {
    throw Error("lambda must be nonzero");
  }
}

}  // namespace

FockRep::FockRep(SymplecticSpace space, int levels)
    : space_(std::move(space)), levels_(levels) {
  if (levels_ < 2) {
    throw Error("level truncation must be at least 2");
  }
  const int d = space_.dim_pairs();
  double total = 1.0;
  for (int j = 0; j < d; ++j) total *= levels_;
  if (total > static_cast<double>(kMaxRows)) {
    throw Error("matrix size " + std::to_string(total) +
                " exceeds the desk-scale cap of " + std::to_string(kMaxRows) +
                " rows");
  }
  dim_ = static_cast<Eigen::Index>(total);

  const Eigen::MatrixXcd a = annihilation(levels_);
  const Eigen::MatrixXcd q = (a + a.adjoint()) / std::sqrt(2.0);
  const Eigen::MatrixXcd p = -kI * (a - a.adjoint()) / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    position_.push_back(embed(q, j, d, levels_));
    momentum_.push_back(embed(p, j, d, levels_));
  }
}

const Eigen::MatrixXcd& FockRep::position(int mode) const {
  return position_.at(static_cast<std::size_t>(mode));
}

const Eigen::MatrixXcd& FockRep::momentum(int mode) const {
  return momentum_.at(static_cast<std::size_t>(mode));
}

const Eigen::MatrixXcd& FockRep::field(const PhaseVector& f) const {
  if (static_cast<int>(f.size()) != space_.dim()) {
    throw Error("dimension mismatch: field argument " + format_vector(f));
  }
  const auto cached = field_cache_.find(f);
  if (cached != field_cache_.end()) return cached->second;

  const int d = modes();
  Eigen::MatrixXcd phi = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int j = 0; j < d; ++j) {
    const double fq = to_double(f[static_cast<std::size_t>(j)]);
    const double fp = to_double(f[static_cast<std::size_t>(d + j)]);
    if (fq != 0.0) phi += fq * position_[static_cast<std::size_t>(j)];
    if (fp != 0.0) phi += fp * momentum_[static_cast<std::size_t>(j)];
  }
  return field_cache_.emplace(f, std::move(phi)).first->second;
}

std::vector<Eigen::Index> FockRep::low_level_indices(int cutoff) const {
  if (cutoff < 1 || cutoff > levels_) {
    throw Error("cutoff must lie in [1, levels]");
  }
  std::vector<Eigen::Index> indices;
  const int d = modes();
  for (Eigen::Index idx = 0; idx < dim_; ++idx) {
    Eigen::Index rest = idx;
    bool low = true;
    for (int j = 0; j < d; ++j) {
      if (rest % levels_ >= cutoff) {
        low = false;
        break;
      }
      rest /= levels_;
    }
    if (low) indices.push_back(idx);
  }
  return indices;
}

Eigen::MatrixXcd resolvent_matrix(const FockRep& rep, double lambda,
                                  const PhaseVector& f) {
  check_lambda(lambda);
  const Eigen::MatrixXcd shifted =
      kI * lambda * Eigen::MatrixXcd::Identity(rep.dim(), rep.dim()) -
      rep.field(f);
  return shifted.partialPivLu().solve(
      Eigen::MatrixXcd::Identity(rep.dim(), rep.dim()));
}

const char* relation_name(ResolventRelation relation) {
  switch (relation) {
    case ResolventRelation::normalization: return "normalization";
    case ResolventRelation::adjoint: return "adjoint";
    case ResolventRelation::scaling: return "scaling";
    case ResolventRelation::resolvent_identity: return "resolvent-identity";
    case ResolventRelation::product: return "product";
    case ResolventRelation::commutator: return "commutator";
  }
  return "unknown";
}

ResolventRelation relation_from_name(const std::string& name) {
  if (name == "normalization") return ResolventRelation::normalization;
  if (name == "adjoint") return ResolventRelation::adjoint;
  if (name == "scaling") return ResolventRelation::scaling;
  if (name == "resolvent-identity") return ResolventRelation::resolvent_identity;
  if (name == "product") return ResolventRelation::product;
  if (name == "commutator") return ResolventRelation::commutator;
  throw Error("unknown relation '" + name + "'");
}

ResidualReport relation_residual(const FockRep& rep, ResolventRelation relation,
                                 const RelationParams& params, int cutoff) {
  if (cutoff < 1 || cutoff > rep.levels()) {
    throw Error("cutoff must lie in [1, levels]");
  }
  check_lambda(params.lambda);
  check_lambda(params.nu);

  const Eigen::Index dim = rep.dim();
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);
  const PhaseVector zero = zero_vector(rep.space().dim());
  const PhaseVector& f = params.f.empty() ? zero : params.f;
  const PhaseVector& g = params.g.empty() ? zero : params.g;
  const double lambda = params.lambda;
  const double nu = params.nu;

  Eigen::MatrixXcd defect;
  switch (relation) {
    case ResolventRelation::normalization: {
      defect = resolvent_matrix(rep, lambda, zero) - (-kI / lambda) * identity;
      break;
    }
    case ResolventRelation::adjoint: {
      defect = resolvent_matrix(rep, lambda, f).adjoint() -
               resolvent_matrix(rep, -lambda, f);
      break;
    }
    case ResolventRelation::scaling: {
      // nu R(nu lambda, nu f) = R(lambda, f); the scaled field is nu Phi(f).
      const Eigen::MatrixXcd scaled =
          (kI * (nu * lambda) * identity - nu * rep.field(f))
              .partialPivLu()
              .solve(identity);
      defect = nu * scaled - resolvent_matrix(rep, lambda, f);
      break;
    }
    case ResolventRelation::resolvent_identity: {
      const Eigen::MatrixXcd rl = resolvent_matrix(rep, lambda, f);
      const Eigen::MatrixXcd rn = resolvent_matrix(rep, nu, f);
      defect = rl - rn - kI * (nu - lambda) * rl * rn;
      break;
    }
    case ResolventRelation::product: {
      if (lambda + nu == 0.0) {
        throw Error("lambda + nu must be nonzero for the product relation");
      }
      const double s = to_double(sigma(rep.space(), f, g));
      const Eigen::MatrixXcd rf = resolvent_matrix(rep, lambda, f);
      const Eigen::MatrixXcd rg = resolvent_matrix(rep, nu, g);
      const Eigen::MatrixXcd rfg =
          resolvent_matrix(rep, lambda + nu, add(f, g));
      defect = rf * rg - rfg * (rf + rg + kI * s * rf * rf * rg);
      break;
    }
    case ResolventRelation::commutator: {
      const double s = to_double(sigma(rep.space(), f, g));
      const Eigen::MatrixXcd rf = resolvent_matrix(rep, lambda, f);
      const Eigen::MatrixXcd rg = resolvent_matrix(rep, nu, g);
      defect = rf * rg - rg * rf - kI * s * rf * rg * rg * rf;
      break;
    }
  }

  ResidualReport report;
  report.raw = operator_norm(defect);
  const auto low = rep.low_level_indices(cutoff);
  Eigen::MatrixXcd block(low.size(), low.size());
  for (std::size_t r = 0; r < low.size(); ++r) {
    for (std::size_t c = 0; c < low.size(); ++c) {
      block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          defect(low[r], low[c]);
    }
  }
  report.compressed = operator_norm(block);
  return report;
}

double ccr_check(const FockRep& rep, int cutoff) {
  if (rep.modes() != 1) {
    throw Error("ccr_check is a per-mode check; use a one-mode representation");
  }
  if (cutoff < 1 || cutoff > rep.levels()) {
    throw Error("cutoff must lie in [1, levels]");
  }
  const Eigen::MatrixXcd& q = rep.position(0);
  const Eigen::MatrixXcd& p = rep.momentum(0);
  const Eigen::MatrixXcd defect =
      q * p - p * q - kI * Eigen::MatrixXcd::Identity(rep.dim(), rep.dim());
  return operator_norm(defect.topLeftCorner(cutoff, cutoff));
}

ResolventWord adjoint(const ResolventWord& word) {
  ResolventWord out;
  out.factors.reserve(word.factors.size());
  for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
    ResolventFactor factor = *it;
    factor.adjoined = !factor.adjoined;
    out.factors.push_back(std::move(factor));
  }
  return out;
}

ResolventWord concat(const ResolventWord& a, const ResolventWord& b) {
  ResolventWord out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

Eigen::MatrixXcd evaluate(const FockRep& rep, const ResolventWord& word) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(rep.dim(), rep.dim());
  for (const auto& factor : word.factors) {
    Eigen::MatrixXcd r = resolvent_matrix(rep, factor.lambda, factor.vec);
    if (factor.adjoined) r = r.adjoint().eval();
    out = out * r;
  }
  return out;
}

double mu_value(const Character& chi, const PhaseVector& f) {
  if (chi.mu.size() != static_cast<Eigen::Index>(f.size())) {
    throw Error("dimension mismatch: character functional and vector");
  }
  double value = 0.0;
  for (Eigen::Index i = 0; i < chi.mu.size(); ++i) {
    value += chi.mu(i) * to_double(f[static_cast<std::size_t>(i)]);
  }
  return value;
}

std::complex<double> character_value(const Character& chi,
                                     const ResolventFactor& factor) {
  check_lambda(factor.lambda);
  const std::complex<double> value =
      1.0 / (kI * factor.lambda - mu_value(chi, factor.vec));
  return factor.adjoined ? std::conj(value) : value;
}

std::complex<double> character_value(const Character& chi,
                                     const ResolventWord& word) {
  std::complex<double> value(1.0, 0.0);
  for (const auto& factor : word.factors) {
    value *= character_value(chi, factor);
  }
  return value;
}

CharacterRelationReport character_relation_check(const Character& chi,
                                                 const SymplecticSpace& space,
                                                 const RelationParams& params) {
  check_lambda(params.lambda);
  check_lambda(params.nu);
  const double lambda = params.lambda;
  const double nu = params.nu;
  const PhaseVector& f = params.f;
  const PhaseVector& g = params.g;

  const auto r = [&](double l, const PhaseVector& v) {
    return 1.0 / (kI * l - mu_value(chi, v));
  };

  CharacterRelationReport report;
  report.normalization =
      std::abs(r(lambda, zero_vector(space.dim())) - (-kI / lambda));
  report.adjoint = std::abs(std::conj(r(lambda, f)) - r(-lambda, f));
  // mu(nu f) = nu mu(f), so the scaled factor is nu / (i nu lambda - nu mu(f)).
  report.scaling = std::abs(
      nu / (kI * (nu * lambda) - nu * mu_value(chi, f)) - r(lambda, f));
  report.resolvent_identity =
      std::abs(r(lambda, f) - r(nu, f) -
               kI * (nu - lambda) * r(lambda, f) * r(nu, f));
  if (lambda + nu != 0.0) {
    report.product_form_free =
        std::abs(r(lambda, f) * r(nu, g) -
                 r(lambda + nu, add(f, g)) * (r(lambda, f) + r(nu, g)));
  }
  report.sigma_term_magnitude =
      std::abs(to_double(sigma(space, f, g)) * r(lambda, f) * r(lambda, f) *
               r(nu, g));
  report.max_residual =
      std::max({report.normalization, report.adjoint, report.scaling,
                report.resolvent_identity, report.product_form_free});
  return report;
}

}  // namespace ccr
