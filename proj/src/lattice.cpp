#include "ccr/lattice.hpp"

#include <cmath>

#include "ccr/error.hpp"
#include "ccr/matrix_norms.hpp"

namespace ccr {

namespace {

constexpr Eigen::Index kMaxRows = 20'000;

std::vector<long> to_longs(const std::vector<BigInt>& coeffs) {
  std::vector<long> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out[i] = coeffs[i].convert_to<long>();
  }
  return out;
}

}  // namespace

LatticeModel::LatticeModel(SymplecticSpace space, std::vector<PhaseVector> gens,
                           int radius, BoxMode box)
    : space_(std::move(space)),
      gens_(std::move(gens)),
      radius_(radius),
      box_(box) {
  if (gens_.empty()) {
    throw Error("generator list must be non-empty");
  }
  if (radius_ < 0 || (box_ == BoxMode::onesided && radius_ < 1)) {
    throw Error("box radius out of range");
  }
  for (const auto& g : gens_) {
    if (static_cast<int>(g.size()) != space_.dim()) {
      throw Error("dimension mismatch: generator " + format_vector(g));
    }
  }
  if (rational_rank(gens_) != static_cast<int>(gens_.size())) {
    throw Error("dependent generators: lattice tuples would collide");
  }

  const int n = static_cast<int>(gens_.size());
  const long side = box_ == BoxMode::symmetric ? 2L * radius_ + 1 : radius_;
  double total = 1.0;
  for (int i = 0; i < n; ++i) total *= static_cast<double>(side);
  if (total > static_cast<double>(kMaxRows)) {
    throw Error("matrix size " + std::to_string(total) +
                " exceeds the desk-scale cap of " + std::to_string(kMaxRows) +
                " rows");
  }

  points_.reserve(static_cast<std::size_t>(total));
  std::vector<long> tuple(n, tuple_low());
  while (true) {
    PhaseVector sum = zero_vector(space_.dim());
    for (int i = 0; i < n; ++i) {
      sum = add(sum, scale(Rational(tuple[i]), gens_[i]));
    }
    points_.push_back(std::move(sum));
    int pos = n;
    while (pos > 0) {
      if (tuple[pos - 1] < tuple_high()) {
        ++tuple[pos - 1];
        break;
      }
      tuple[pos - 1] = tuple_low();
      --pos;
    }
    if (pos == 0) break;
  }
}

bool LatticeModel::tuple_in_box(const std::vector<long>& tuple) const {
  for (long k : tuple) {
    if (k < tuple_low() || k > tuple_high()) return false;
  }
  return true;
}

Eigen::Index LatticeModel::index_of_tuple(const std::vector<long>& tuple) const {
  const long side = tuple_high() - tuple_low() + 1;
  Eigen::Index index = 0;
  for (long k : tuple) {
    index = index * side + (k - tuple_low());
  }
  return index;
}

std::vector<long> LatticeModel::tuple_of_index(Eigen::Index index) const {
  const long side = tuple_high() - tuple_low() + 1;
  std::vector<long> tuple(gens_.size());
  for (std::size_t i = gens_.size(); i-- > 0;) {
    tuple[i] = static_cast<long>(index % side) + tuple_low();
    index /= side;
  }
  return tuple;
}

std::optional<std::vector<long>> LatticeModel::tuple_of(
    const PhaseVector& f) const {
  const auto coeffs = integer_span_membership(gens_, f);
  if (!coeffs) return std::nullopt;
  return to_longs(*coeffs);
}

CompressedOp rep_matrix(const LatticeModel& model, const WeylElement& a) {
  if (!(a.space() == model.space())) {
    throw Error("dimension mismatch: element and lattice live in different spaces");
  }
  const Eigen::Index k = model.size();
  const int n = model.generator_count();
  Eigen::MatrixXcd matrix = Eigen::MatrixXcd::Zero(k, k);

  for (const auto& [f, coeff] : a.terms()) {
    const auto shift = model.tuple_of(f);
    if (!shift) {
      throw Error("not in lattice: " + format_vector(f));
    }
    // sigma(f, h) for a lattice point h expands along the generators.
    std::vector<double> sig(n);
    for (int i = 0; i < n; ++i) {
      sig[i] = to_double(sigma(model.space(), f, model.generators()[i]));
    }
    std::vector<long> target(n);
    for (Eigen::Index col = 0; col < k; ++col) {
      const auto h = model.tuple_of_index(col);
      bool inside = true;
      double phase_arg = 0.0;
      for (int i = 0; i < n; ++i) {
        target[i] = h[i] + (*shift)[i];
        if (target[i] < model.tuple_low() || target[i] > model.tuple_high()) {
          inside = false;
          break;
        }
        phase_arg += static_cast<double>(h[i]) * sig[i];
      }
      if (!inside) continue;
      matrix(model.index_of_tuple(target), col) +=
          coeff * std::polar(1.0, -0.5 * phase_arg);
    }
  }
  return CompressedOp{&model, std::move(matrix)};
}

double mult_defect(const LatticeModel& model, const WeylElement& a,
                   const WeylElement& b) {
  const auto ab = rep_matrix(model, multiply(a, b));
  const auto ra = rep_matrix(model, a);
  const auto rb = rep_matrix(model, b);
  return two_norm(ab.matrix - ra.matrix * rb.matrix);
}

NormReport norm_report(const LatticeModel& model, const WeylElement& a) {
  NormReport report;
  report.compressed_norm = operator_norm(rep_matrix(model, a).matrix);
  report.l1 = l1_bound(a);
  return report;
}

std::complex<double> trace_reproduction(const LatticeModel& model,
                                        const WeylElement& a) {
  const auto op = rep_matrix(model, a);
  return op.matrix.trace() / static_cast<double>(model.size());
}

int support_radius(const LatticeModel& model, const WeylElement& a) {
  int radius = 0;
  for (const auto& [f, coeff] : a.terms()) {
    (void)coeff;
    const auto tuple = model.tuple_of(f);
    if (!tuple) {
      throw Error("not in lattice: " + format_vector(f));
    }
    for (long k : *tuple) {
      radius = std::max(radius, static_cast<int>(std::labs(k)));
    }
  }
  return radius;
}

double hypertrace_commutator(const LatticeModel& ambient, int inner_radius,
                             const WeylElement& a) {
  if (inner_radius < 0 || inner_radius > ambient.radius()) {
    throw Error("inner radius must lie within the ambient box");
  }
  const int n = ambient.generator_count();
  const long inner_lo = ambient.box() == BoxMode::symmetric ? -inner_radius : 1;
  const long inner_hi = inner_radius;

  // Every translate of the inner box by a support tuple must stay ambient.
  for (const auto& [f, coeff] : a.terms()) {
    (void)coeff;
    const auto tuple = ambient.tuple_of(f);
    if (!tuple) {
      throw Error("not in lattice: " + format_vector(f));
    }
    for (int i = 0; i < n; ++i) {
      const long t = (*tuple)[i];
      const long lo = inner_lo - std::labs(t);
      const long hi = inner_hi + std::labs(t);
      if (lo < ambient.tuple_low() || hi > ambient.tuple_high()) {
        throw Error("ambient box too small for support tuple of " +
                    format_vector(f));
      }
    }
  }

  const Eigen::Index k = ambient.size();
  Eigen::VectorXd density = Eigen::VectorXd::Zero(k);
  Eigen::Index inner_count = 0;
  for (Eigen::Index idx = 0; idx < k; ++idx) {
    const auto tuple = ambient.tuple_of_index(idx);
    bool inside = true;
    for (long t : tuple) {
      if (t < inner_lo || t > inner_hi) {
        inside = false;
        break;
      }
    }
    if (inside) {
      density(idx) = 1.0;
      ++inner_count;
    }
  }
  density /= static_cast<double>(inner_count);

  const auto action = rep_matrix(ambient, a);
  const Eigen::MatrixXcd commutator = density.asDiagonal() * action.matrix -
                                      action.matrix * density.asDiagonal();
  return trace_norm(commutator);
}

Rational hypertrace_prediction(int generator_count, int inner_radius,
                               const std::vector<long>& tuple, BoxMode box) {
  if (static_cast<int>(tuple.size()) != generator_count) {
    throw Error("tuple arity does not match the generator count");
  }
  const long lo = box == BoxMode::symmetric ? -inner_radius : 1;
  const long hi = inner_radius;
  const long side = hi - lo + 1;

  // Per-axis overlap counts multiply; |B \ (B - t)| = |B| - prod overlap.
  BigInt box_count = 1, forward = 1, backward = 1;
  for (int i = 0; i < generator_count; ++i) {
    const long t = tuple[i];
    const long overlap = std::max(0L, side - std::labs(t));
    box_count *= side;
    forward *= overlap;
    backward *= overlap;
  }
  const BigInt moved_out = (box_count - forward) + (box_count - backward);
  return Rational(moved_out, box_count);
}

}  // namespace ccr
