#include <doctest.h>

#include <cmath>

#include "ccr/cp_maps.hpp"
#include "ccr/error.hpp"

using namespace ccr;
using Complex = std::complex<double>;

namespace {

PhaseVector vec(std::initializer_list<int> entries) {
  PhaseVector out;
  for (int e : entries) out.emplace_back(e);
  return out;
}

Eigen::MatrixXcd diag(std::initializer_list<double> entries) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (double e : entries) v(i++) = e;
  return v.cast<Complex>().asDiagonal();
}

CpSample lattice_family_sample(const SymplecticSpace& space,
                               const LatticeModel& model,
                               const Eigen::MatrixXcd& contraction) {
  LabelledElements elements;
  std::vector<std::array<std::string, 3>> pairs;
  append_mult_domain_family(space, "A",
                            weyl_generator(space, vec({1, 0})), elements,
                            pairs);
  CpSample sample = synth_ccp(model, elements, contraction);
  sample.pairs = pairs;
  return sample;
}

}  // namespace

TEST_CASE("two norm on reference matrices") {
  CHECK(two_norm(Eigen::MatrixXcd::Identity(7, 7)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two_norm(diag({1, 0, 0, 0})) == doctest::Approx(0.5).epsilon(1e-15));

  Eigen::MatrixXcd e12 = Eigen::MatrixXcd::Zero(2, 2);
  e12(0, 1) = 1.0;
  CHECK(two_norm(e12) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

  CHECK_THROWS_AS(two_norm(Eigen::MatrixXcd::Zero(2, 3)), Error);

  // norm ordering: ||.||_2,tr <= ||.||_op <= sqrt(k) ||.||_2,tr
  Eigen::MatrixXcd f(3, 3);
  f << Complex(1, 2), Complex(0, -1), Complex(2, 0), Complex(0.5, 0),
      Complex(-1, 1), Complex(0, 0), Complex(1, 1), Complex(0, 3),
      Complex(-2, 1);
  const double tn = two_norm(f);
  const double on = operator_norm(f);
  CHECK(tn <= on + 1e-12);
  CHECK(on <= std::sqrt(3.0) * tn + 1e-12);
}

TEST_CASE("spectral split on a projection") {
  Eigen::MatrixXcd p = diag({1, 1, 0, 0});
  const auto split = spectral_split(p, 0.2);
  CHECK(split.lambda_mid.empty());
  CHECK(split.distance == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(split.delta == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("spectral split of the worked diagonal example") {
  const auto split = spectral_split(diag({1, 0.95, 0.5, 0.02}), 0.1);
  CHECK(split.lambda1.size() == 2);
  CHECK(split.lambda_mid.size() == 1);
  CHECK(split.lambda0.size() == 1);
  const double expected =
      std::sqrt((0.05 * 0.05 + 0.5 * 0.5 + 0.02 * 0.02) / 4.0);
  CHECK(split.distance == doctest::Approx(expected).epsilon(1e-10));
  CHECK(split.distance <= split.certified_bound + 1e-10);

  // the eigenvalue formula agrees with the direct matrix evaluation
  double sum = 0.0;
  for (double l : split.lambda0) sum += l * l;
  for (double l : split.lambda_mid) sum += l * l;
  for (double l : split.lambda1) sum += (1.0 - l) * (1.0 - l);
  CHECK(std::sqrt(sum / 4.0) == doctest::Approx(split.distance).epsilon(1e-10));

  // mid-band counting bound
  const double gap = 0.1 - 0.01;
  CHECK(static_cast<double>(split.lambda_mid.size()) / 4.0 <=
        std::pow(split.delta / gap, 2.0) + 1e-12);
}

TEST_CASE("spectral split of the flat unit image is vacuous but bounded") {
  const auto split =
      spectral_split(0.5 * Eigen::MatrixXcd::Identity(6, 6), 0.1);
  CHECK(split.lambda_mid.size() == 6);
  CHECK(split.distance == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(split.delta == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(split.certified_bound ==
        doctest::Approx(std::sqrt(0.01 + std::pow(0.25 / 0.09, 2.0)))
            .epsilon(1e-12));
  CHECK(split.distance <= split.certified_bound);
}

TEST_CASE("spectral split projector properties") {
  SymplecticSpace space(1);
  const LatticeModel model(space, {vec({1, 0})}, 3);
  const auto sample = lattice_family_sample(
      space, model, random_contraction(model.size(), 99, 0.8));
  const auto split = spectral_split(sample.unit_image, 0.2);
  const auto& p = split.projection;
  CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((p - p.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(split.lambda0.size() + split.lambda_mid.size() +
            split.lambda1.size() ==
        static_cast<std::size_t>(model.size()));
  CHECK(two_norm(sample.unit_image - p) ==
        doctest::Approx(split.distance).epsilon(1e-10));
}

TEST_CASE("spectral split input validation") {
  CHECK_THROWS_WITH_AS(spectral_split(diag({0.5, 0.5}), 0.6),
                       doctest::Contains("(0, 1/2)"), Error);
  CHECK_THROWS_AS(spectral_split(diag({1.5, 0.0}), 0.1), Error);
  Eigen::MatrixXcd skew(2, 2);
  skew << Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0);
  CHECK_THROWS_WITH_AS(spectral_split(skew, 0.1),
                       doctest::Contains("self-adjoint"), Error);
}

TEST_CASE("unitalize keeps projections fixed") {
  SymplecticSpace space(1);
  const LatticeModel model(space, {vec({1, 0})}, 2);
  LabelledElements elements;
  std::vector<std::array<std::string, 3>> pairs;
  append_mult_domain_family(space, "A", weyl_generator(space, vec({1, 0})),
                            elements, pairs);

  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(5, 5);
  for (int i = 0; i < 4; ++i) v(i, i) = 1.0;  // a projection contraction
  CpSample sample = synth_ccp(model, elements, v);
  const auto result = unitalize(sample, 0.2);
  CHECK(result.rank == 4);
  CHECK((result.sample.unit_image -
         Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("unitalize full-band diagonal example") {
  CpSample sample;
  sample.k = 2;
  sample.unit_image = diag({1.0, 0.81});
  sample.images["A"] = diag({0.5, 0.5});
  sample.images["A*"] = diag({0.5, 0.5});
  const auto result = unitalize(sample, 0.25);
  CHECK(result.rank == 2);
  CHECK((result.sample.unit_image - Eigen::MatrixXcd::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  // f = diag(1, 1/0.9) acts entrywise in the original basis
  CHECK(std::abs(result.sample.images["A"](1, 1) -
                 Complex(0.5 / 0.81, 0.0)) < 1e-12);
  CHECK(result.f_norm == doctest::Approx(1.0 / 0.9).epsilon(1e-12));
}

TEST_CASE("identity contraction leaves the sample unchanged") {
  SymplecticSpace space(1);
  const LatticeModel model(space, {vec({1, 0})}, 2);
  const auto sample = lattice_family_sample(
      space, model, Eigen::MatrixXcd::Identity(5, 5));
  const auto result = unitalize(sample, 0.2);
  CHECK(result.rank == 5);
  for (const auto& [label, image] : sample.images) {
    CHECK((result.sample.images.at(label) - image).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("unitalize demands spectrum near one") {
  CpSample sample;
  sample.k = 2;
  sample.unit_image = diag({0.3, 0.2});
  CHECK_THROWS_WITH_AS(unitalize(sample, 0.2),
                       doctest::Contains("no spectrum near 1"), Error);
}

TEST_CASE("functional calculus bound on the rescaler") {
  SymplecticSpace space(1);
  const LatticeModel model(space, {vec({1, 0})}, 3);
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    for (double eps : {0.1, 0.25, 0.4}) {
      const auto sample = lattice_family_sample(
          space, model, random_contraction(model.size(), seed, 0.5));
      const auto result = unitalize(sample, eps);
      CHECK(result.f_minus_p_norm <= eps / (2.0 * (1.0 - eps)) + 1e-10);
      CHECK((result.sample.unit_image -
             Eigen::MatrixXcd::Identity(result.rank, result.rank))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("synthetic contractions are deterministic and contractive") {
  SymplecticSpace space(1);
  const LatticeModel model(space, {vec({1, 0})}, 2);
  const auto v1 = random_contraction(model.size(), 42, 1.0);
  const auto v2 = random_contraction(model.size(), 42, 1.0);
  CHECK((v1 - v2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(operator_norm(v1) <= 1.0 + 1e-12);
  CHECK(operator_norm(v1) >= 1.0 - 1e-12);  // top singular value pinned at 1

  const auto diag_v = diag({1.0, 0.9, 0.1});
  const LatticeModel small(space, {vec({1, 0})}, 1);
  const auto sample = synth_ccp(small, {}, diag_v);
  CHECK((sample.unit_image - diag({1.0, 0.81, 0.01})).cwiseAbs().maxCoeff() <
        1e-15);
}

TEST_CASE("certificates check pairs and traces") {
  SymplecticSpace space(1);
  const LatticeModel model(space, {vec({1, 0})}, 12);
  LabelledElements elements;
  std::vector<std::array<std::string, 3>> pairs;
  append_mult_domain_family(space, "A", weyl_generator(space, vec({1, 0})),
                            elements, pairs);
  CpSample sample =
      synth_ccp(model, elements, Eigen::MatrixXcd::Identity(25, 25));
  sample.pairs = pairs;
  sample.norm_refs["A"] = 1.0;

  const auto report = folner_certificate(sample, 0.25);
  CHECK(report.pass);
  REQUIRE(report.pairs.size() == 2);
  CHECK(report.pairs[0].defect == doctest::Approx(0.2).epsilon(1e-12));

  const auto strict = folner_certificate(sample, 0.0);
  CHECK_FALSE(strict.pass);  // the defect is positive, zero eps is strict

  CpSample unit_only;
  unit_only.k = 3;
  unit_only.unit_image = Eigen::MatrixXcd::Identity(3, 3);
  unit_only.images["1"] = Eigen::MatrixXcd::Identity(3, 3);
  unit_only.pairs.push_back({"1", "1", "1"});
  CHECK(folner_certificate(unit_only, 0.0).pass);

  CpSample incomplete = sample;
  incomplete.pairs.push_back({"A", "B", "AB"});
  CHECK_THROWS_WITH_AS(folner_certificate(incomplete, 0.1),
                       doctest::Contains("sample incomplete"), Error);
}

TEST_CASE("multiplicative domain distance") {
  SymplecticSpace space(1);
  const LatticeModel model(space, {vec({1, 0})}, 6);
  LabelledElements elements;
  std::vector<std::array<std::string, 3>> pairs;
  append_mult_domain_family(space, "U", weyl_unit(space), elements, pairs);
  append_mult_domain_family(space, "A", weyl_generator(space, vec({1, 0})),
                            elements, pairs);
  const auto sample =
      synth_ccp(model, elements, Eigen::MatrixXcd::Identity(13, 13));
  CHECK(mult_domain_distance(sample, "U") == 0.0);

  const auto w = weyl_generator(space, vec({1, 0}));
  CHECK(mult_domain_distance(sample, "A") ==
        doctest::Approx(mult_defect(model, adjoint(w), w)).epsilon(1e-12));

  CHECK_THROWS_WITH_AS(mult_domain_distance(sample, "missing"),
                       doctest::Contains("sample incomplete"), Error);
}

TEST_CASE("sample validation catches broken data") {
  CpSample sample;
  sample.k = 2;
  sample.unit_image = diag({1.0, 0.5});
  sample.images["A"] = Eigen::MatrixXcd::Identity(2, 2);
  validate_sample(sample);

  CpSample bad = sample;
  bad.unit_image = diag({1.4, 0.0});
  CHECK_THROWS_WITH_AS(validate_sample(bad), doctest::Contains("spectrum"),
                       Error);

  CpSample mismatched = sample;
  mismatched.images["B"] = Eigen::MatrixXcd::Identity(3, 3);
  CHECK_THROWS_AS(validate_sample(mismatched), Error);

  CpSample inconsistent = sample;
  inconsistent.images["A*"] = diag({2.0, 2.0});
  CHECK_THROWS_WITH_AS(validate_sample(inconsistent),
                       doctest::Contains("adjoint-compatible"), Error);
}
