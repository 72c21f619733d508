#include "ccr/folner.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <map>

#include "ccr/error.hpp"

namespace ccr {

namespace {

constexpr double kRankTolerance = 1e-9;
constexpr std::size_t kMaxEnumeration = 5'000'000;

}  // namespace

FolnerSubspace build_folner_subspace(const std::vector<PhaseVector>& gens,
                                     int box_size) {
  if (gens.empty()) {
    throw Error("generator list must be non-empty");
  }
  if (box_size <= 0) {
    throw Error("box size must be positive");
  }
  const std::size_t dim = gens[0].size();
  for (const auto& g : gens) {
    if (g.size() != dim) {
      throw Error("dimension mismatch among generators");
    }
  }
  const std::size_t n = gens.size();
  double tuple_count = 1.0;
  for (std::size_t i = 0; i < n; ++i) tuple_count *= box_size;
  if (tuple_count > static_cast<double>(kMaxEnumeration)) {
    throw Error("support enumeration too large: N^n exceeds " +
                std::to_string(kMaxEnumeration));
  }

  FolnerSubspace v;
  v.generators = gens;
  v.box_size = box_size;

  std::vector<int> tuple(n, 1);
  std::size_t total = 0;
  while (true) {
    PhaseVector sum = zero_vector(static_cast<int>(dim));
    for (std::size_t i = 0; i < n; ++i) {
      sum = add(sum, scale(Rational(tuple[i]), gens[i]));
    }
    v.support.insert(std::move(sum));
    ++total;
    std::size_t pos = n;
    while (pos > 0) {
      if (tuple[pos - 1] < box_size) {
        ++tuple[pos - 1];
        break;
      }
      tuple[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) break;
  }
  v.injective = v.support.size() == total;
  return v;
}

Rational ratio_monomial(const PhaseVector& g, const FolnerSubspace& v) {
  std::set<PhaseVector> grown = v.support;
  for (const auto& s : v.support) {
    grown.insert(add(g, s));
  }
  return Rational(grown.size(), v.support.size());
}

GrowthRatio ratio_general(const WeylElement& a, const FolnerSubspace& v) {
  if (a.is_zero()) {
    throw Error("growth ratio of the zero element is undefined");
  }

  GrowthRatio out;
  out.lower = 1;

  // Support union bound: every product a * W(s) is supported in supp(a) + s.
  std::set<PhaseVector> grown = v.support;
  for (const auto& [f, coeff] : a.terms()) {
    (void)coeff;
    for (const auto& s : v.support) {
      grown.insert(add(f, s));
    }
  }
  out.upper = Rational(grown.size(), v.support.size());

  // Numeric rank of { a*W(s) } u { W(s) } over the union support.
  std::map<PhaseVector, int> column;
  int next = 0;
  for (const auto& u : grown) column[u] = next++;

  const auto rows = static_cast<Eigen::Index>(2 * v.support.size());
  Eigen::MatrixXcd coeffs =
      Eigen::MatrixXcd::Zero(rows, static_cast<Eigen::Index>(column.size()));
  Eigen::Index r = 0;
  for (const auto& s : v.support) {
    const WeylElement product = multiply(a, weyl_generator(a.space(), s));
    for (const auto& [u, c] : product.terms()) {
      coeffs(r, column.at(u)) = c;
    }
    ++r;
  }
  for (const auto& s : v.support) {
    coeffs(r, column.at(s)) = 1.0;
    ++r;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeffs);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > kRankTolerance) ++rank;
  }
  out.numeric = static_cast<double>(rank) / static_cast<double>(v.support.size());
  return out;
}

int epsilon_plan(double eps) {
  if (!(eps > 0.0)) {
    throw Error("eps must be positive");
  }
  int n = std::max(1, static_cast<int>(std::floor(1.0 / eps)) + 1);
  while (n > 1 && 1.0 / (n - 1) < eps) --n;
  while (!(1.0 / n < eps)) ++n;
  return n;
}

}  // namespace ccr
