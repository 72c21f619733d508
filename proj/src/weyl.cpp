#include "ccr/weyl.hpp"

#include <cmath>

#include "ccr/error.hpp"

namespace ccr {

namespace {

void check_same_space(const WeylElement& a, const WeylElement& b) {
  if (!(a.space() == b.space())) {
    throw Error("dimension mismatch: elements live in different spaces");
  }
}

void prune_terms(WeylElement::TermMap& terms, double prune) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) <= prune) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

WeylElement::WeylElement(SymplecticSpace space, TermMap terms, double prune)
    : space_(std::move(space)), terms_(std::move(terms)) {
  for (const auto& [vec, coeff] : terms_) {
    (void)coeff;
    if (static_cast<int>(vec.size()) != space_.dim()) {
      throw Error("dimension mismatch: support vector " + format_vector(vec) +
                  " does not fit a " + std::to_string(space_.dim()) +
                  "-dimensional space");
    }
  }
  prune_terms(terms_, prune);
}

WeylElement::Coeff WeylElement::coefficient(const PhaseVector& f) const {
  const auto it = terms_.find(f);
  return it == terms_.end() ? Coeff(0.0, 0.0) : it->second;
}

WeylElement weyl_generator(const SymplecticSpace& space, const PhaseVector& f) {
  WeylElement::TermMap terms;
  terms[f] = WeylElement::Coeff(1.0, 0.0);
  return WeylElement(space, std::move(terms));
}

WeylElement weyl_unit(const SymplecticSpace& space) {
  return weyl_generator(space, zero_vector(space.dim()));
}

WeylElement multiply(const WeylElement& a, const WeylElement& b, double prune) {
  check_same_space(a, b);
  WeylElement::TermMap result;
  for (const auto& [f, ca] : a.terms()) {
    for (const auto& [g, cb] : b.terms()) {
      const Rational s = sigma(a.space(), f, g);
      const auto phase = std::polar(1.0, -0.5 * to_double(s));
      result[add(f, g)] += ca * cb * phase;
    }
  }
  return WeylElement(a.space(), std::move(result), prune);
}

WeylElement adjoint(const WeylElement& a) {
  WeylElement::TermMap result;
  for (const auto& [f, c] : a.terms()) {
    result[negate(f)] = std::conj(c);
  }
  return WeylElement(a.space(), std::move(result));
}

WeylElement add(const WeylElement& a, const WeylElement& b, double prune) {
  check_same_space(a, b);
  WeylElement::TermMap result = a.terms();
  for (const auto& [g, c] : b.terms()) {
    result[g] += c;
  }
  return WeylElement(a.space(), std::move(result), prune);
}

WeylElement subtract(const WeylElement& a, const WeylElement& b, double prune) {
  return add(a, scale(-1.0, b), prune);
}

WeylElement scale(std::complex<double> c, const WeylElement& a, double prune) {
  WeylElement::TermMap result;
  for (const auto& [f, coeff] : a.terms()) {
    result[f] = c * coeff;
  }
  return WeylElement(a.space(), std::move(result), prune);
}

std::complex<double> trace(const WeylElement& a) {
  return a.coefficient(zero_vector(a.space().dim()));
}

double l1_bound(const WeylElement& a) {
  double sum = 0.0;
  for (const auto& [f, c] : a.terms()) {
    (void)f;
    sum += std::abs(c);
  }
  return sum;
}

double max_coeff_distance(const WeylElement& a, const WeylElement& b) {
  double worst = 0.0;
  for (const auto& [f, c] : a.terms()) {
    worst = std::max(worst, std::abs(c - b.coefficient(f)));
  }
  for (const auto& [f, c] : b.terms()) {
    worst = std::max(worst, std::abs(c - a.coefficient(f)));
  }
  return worst;
}

}  // namespace ccr
