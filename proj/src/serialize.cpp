#include "ccr/serialize.hpp"

#include "ccr/error.hpp"

namespace ccr {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  throw Error("expected a rational string or integer, got " + j.dump());
}

}  // namespace

Json vector_to_json(const PhaseVector& f) {
  Json out = Json::array();
  for (const auto& c : f) out.push_back(format_rational(c));
  return out;
}

PhaseVector vector_from_json(const Json& j) {
  if (!j.is_array()) {
    throw Error("expected a JSON array for a vector, got " + j.dump());
  }
  PhaseVector out;
  for (const auto& entry : j) out.push_back(rational_from_json(entry));
  return out;
}

Json gens_to_json(const std::vector<PhaseVector>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(vector_to_json(g));
  return out;
}

std::vector<PhaseVector> gens_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw Error("expected a non-empty JSON array of vectors");
  }
  std::vector<PhaseVector> out;
  for (const auto& entry : j) out.push_back(vector_from_json(entry));
  return out;
}

Json space_to_json(const SymplecticSpace& space) {
  Json out;
  out["d"] = space.dim_pairs();
  bool standard = true;
  const SymplecticSpace reference(space.dim_pairs());
  standard = reference == space;
  if (!standard) {
    Json form = Json::array();
    for (const auto& row : space.form()) {
      Json json_row = Json::array();
      for (const auto& c : row) json_row.push_back(format_rational(c));
      form.push_back(std::move(json_row));
    }
    out["form"] = std::move(form);
  }
  return out;
}

SymplecticSpace space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d")) {
    throw Error("space JSON must be an object with a \"d\" field");
  }
  const int d = j.at("d").get<int>();
  if (!j.contains("form")) {
    return SymplecticSpace(d);
  }
  RationalMatrix form;
  for (const auto& row : j.at("form")) {
    std::vector<Rational> r;
    for (const auto& entry : row) r.push_back(rational_from_json(entry));
    form.push_back(std::move(r));
  }
  return SymplecticSpace(d, std::move(form));
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw Error("expected a non-empty JSON array of matrix rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  Eigen::MatrixXcd out(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error("ragged matrix rows in JSON");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& entry = row.at(static_cast<std::size_t>(c));
      if (!entry.is_array() || entry.size() != 2) {
        throw Error("matrix entries must be [re, im] pairs");
      }
      out(r, c) = std::complex<double>(entry.at(0).get<double>(),
                                       entry.at(1).get<double>());
    }
  }
  return out;
}

Json complex_to_json(std::complex<double> z) {
  return Json::array({z.real(), z.imag()});
}

Json sample_to_json(const CpSample& sample) {
  Json out;
  out["k"] = sample.k;
  out["unit"] = matrix_to_json(sample.unit_image);
  Json images = Json::object();
  for (const auto& [label, image] : sample.images) {
    images[label] = matrix_to_json(image);
  }
  out["images"] = std::move(images);
  Json pairs = Json::array();
  for (const auto& [a, b, ab] : sample.pairs) {
    pairs.push_back(Json::array({a, b, ab}));
  }
  out["pairs"] = std::move(pairs);
  if (!sample.norm_refs.empty()) {
    Json refs = Json::object();
    for (const auto& [label, value] : sample.norm_refs) refs[label] = value;
    out["norm_refs"] = std::move(refs);
  }
  return out;
}

CpSample sample_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("unit") ||
      !j.contains("images")) {
    throw Error("sample JSON must contain \"k\", \"unit\" and \"images\"");
  }
  CpSample sample;
  sample.k = j.at("k").get<Eigen::Index>();
  sample.unit_image = matrix_from_json(j.at("unit"));
  for (const auto& [label, image] : j.at("images").items()) {
    sample.images[label] = matrix_from_json(image);
  }
  if (j.contains("pairs")) {
    for (const auto& pair : j.at("pairs")) {
      if (!pair.is_array() || pair.size() != 3) {
        throw Error("pairs must be [a, b, ab] label triples");
      }
      sample.pairs.push_back({pair.at(0).get<std::string>(),
                              pair.at(1).get<std::string>(),
                              pair.at(2).get<std::string>()});
    }
  }
  if (j.contains("norm_refs")) {
    for (const auto& [label, value] : j.at("norm_refs").items()) {
      sample.norm_refs[label] = value.get<double>();
    }
  }
  validate_sample(sample);
  return sample;
}

}  // namespace ccr
