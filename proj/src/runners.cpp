#include "ccr/runners.hpp"

#include <cmath>

#include "ccr/error.hpp"
#include "ccr/expr.hpp"
#include "ccr/rng.hpp"

namespace ccr {

namespace {

constexpr double kHypertraceTol = 1e-12;
constexpr double kDefectTol = 1e-10;
constexpr double kMonomialNormTol = 1e-10;
constexpr double kTwoTermNormTol = 1e-9;
constexpr double kRawRelationTol = 1e-10;
constexpr double kScalarRelationTol = 1e-12;
constexpr double kSplitSlack = 1e-10;

BoxMode box_from_name(const std::string& name) {
  if (name == "symmetric") return BoxMode::symmetric;
  if (name == "onesided") return BoxMode::onesided;
  throw Error("unknown box mode '" + name + "' (symmetric|onesided)");
}

const char* box_name(BoxMode box) {
  return box == BoxMode::symmetric ? "symmetric" : "onesided";
}


WeylElement parse_weyl(const std::string& src, const SymplecticSpace& space) {
  const auto parsed = parse_element(src, space.dim());
  if (parsed.family == GeneratorFamily::resolvent) {
    throw Error("expected a Weyl expression, got resolvent generators: " + src);
  }
  return evaluate_weyl(*parsed.ast, space);
}

/// Monomial with unit-modulus coefficient, if the element is one.
std::optional<PhaseVector> unit_monomial(const WeylElement& a) {
  if (a.support_size() != 1) return std::nullopt;
  const auto& [vec, coeff] = *a.terms().begin();
  if (std::abs(std::abs(coeff) - 1.0) > 1e-12) return std::nullopt;
  return vec;
}

void finish(RunOutput& out) { out.pass = all_rows_pass(out.rows); }

}  // namespace

SymplecticSpace resolve_space(const Json& space_json,
                              const std::vector<PhaseVector>& gens) {
  if (!space_json.is_null()) {
    return space_from_json(space_json);
  }
  if (gens.empty()) {
    throw Error("cannot infer the space without generators");
  }
  const int dim = static_cast<int>(gens[0].size());
  if (dim % 2 != 0 || dim == 0) {
    throw Error("generator arity must be even (2d coordinates)");
  }
  return SymplecticSpace(dim / 2);
}

RunOutput run_folner_ratio(const SymplecticSpace& space,
                           const std::vector<PhaseVector>& gens, int box_size,
                           const std::vector<std::string>& ops) {
  const auto subspace = build_folner_subspace(gens, box_size);
  RunOutput out;
  for (const auto& op : ops) {
    const WeylElement element = parse_weyl(op, space);
    const GrowthRatio ratio = ratio_general(element, subspace);
    ReportRow row;
    row.command = "folner-ratio";
    row.params = {{"op", op},
                  {"N", box_size},
                  {"injective", subspace.injective}};
    row.metric = "growth-ratio";
    row.value = {{"lower", format_rational(ratio.lower)},
                 {"numeric", ratio.numeric},
                 {"upper", format_rational(ratio.upper)}};
    row.tolerance = 1e-6;
    row.pass = to_double(ratio.lower) - 1e-9 <= ratio.numeric &&
               ratio.numeric <= to_double(ratio.upper) + 1e-6;
    out.rows.push_back(std::move(row));
  }
  finish(out);
  return out;
}

RunOutput run_compress(const SymplecticSpace& space,
                       const std::vector<PhaseVector>& gens, int radius,
                       BoxMode box, const std::vector<std::string>& ops) {
  const LatticeModel model(space, gens, radius, box);
  RunOutput out;
  for (const auto& op : ops) {
    const WeylElement element = parse_weyl(op, space);
    const WeylElement element_adj = adjoint(element);
    const double defect =
        std::max(mult_defect(model, element_adj, element),
                 mult_defect(model, element, element_adj));
    const NormReport norms = norm_report(model, element);
    ReportRow row;
    row.command = "compress";
    row.params = {{"op", op},
                  {"N", radius},
                  {"box", box_name(box)}};
    row.metric = "compression";
    row.value = {{"k", model.size()},
                 {"defect", defect},
                 {"compressed_norm", norms.compressed_norm},
                 {"l1_bound", norms.l1},
                 {"trace", complex_to_json(trace_reproduction(model, element))}};
    out.rows.push_back(std::move(row));
  }
  finish(out);
  return out;
}

RunOutput run_hypertrace(const SymplecticSpace& space,
                         const std::vector<PhaseVector>& gens, int radius,
                         std::optional<int> ambient_radius,
                         const std::vector<std::string>& ops) {
  RunOutput out;
  for (const auto& op : ops) {
    const WeylElement element = parse_weyl(op, space);
    // Ambient default: inner radius plus the support radius of the element.
    const LatticeModel probe(space, gens, radius);
    const int ambient =
        ambient_radius.value_or(radius + support_radius(probe, element));
    const LatticeModel model(space, gens, ambient);
    const double value = hypertrace_commutator(model, radius, element);

    ReportRow row;
    row.command = "hypertrace";
    row.params = {{"op", op}, {"N", radius}, {"R", ambient}};
    row.metric = "hypertrace-commutator";
    row.value = value;
    if (const auto vec = unit_monomial(element)) {
      const auto tuple = model.tuple_of(*vec);
      const double predicted = to_double(hypertrace_prediction(
          model.generator_count(), radius, *tuple, model.box()));
      check_against_prediction(row, value, predicted, kHypertraceTol,
                               "closed-form");
    }
    out.rows.push_back(std::move(row));
  }
  finish(out);
  return out;
}

RunOutput run_defect(const SymplecticSpace& space,
                     const std::vector<PhaseVector>& gens, int radius,
                     BoxMode box,
                     const std::vector<std::pair<std::string, std::string>>&
                         pairs) {
  const LatticeModel model(space, gens, radius, box);
  RunOutput out;
  for (const auto& [a_src, b_src] : pairs) {
    const WeylElement a = parse_weyl(a_src, space);
    const WeylElement b = parse_weyl(b_src, space);
    const double value = mult_defect(model, a, b);

    ReportRow row;
    row.command = "defect";
    row.params = {{"a", a_src},
                  {"b", b_src},
                  {"N", radius},
                  {"box", box_name(box)}};
    row.metric = "mult-defect";
    row.value = value;

    // Closed form for an inverse monomial pair: the product charges exactly
    // the boundary points whose translate leaves the box.
    const auto b_vec = unit_monomial(b);
    if (b_vec && max_coeff_distance(a, adjoint(b)) <= 1e-14) {
      const auto tuple = model.tuple_of(*b_vec);
      if (tuple) {
        long moved = 0;
        const long k = model.size();
        for (long idx = 0; idx < k; ++idx) {
          auto h = model.tuple_of_index(idx);
          bool inside = true;
          for (std::size_t i = 0; i < h.size(); ++i) {
            const long shifted = h[i] + (*tuple)[i];
            inside = inside && shifted >= model.tuple_low() &&
                     shifted <= model.tuple_high();
          }
          if (!inside) ++moved;
        }
        const double predicted =
            std::sqrt(static_cast<double>(moved) / static_cast<double>(k));
        check_against_prediction(row, value, predicted, kDefectTol,
                                 "closed-form");
      }
    }
    out.rows.push_back(std::move(row));
  }
  finish(out);
  return out;
}

RunOutput run_norm(const SymplecticSpace& space,
                   const std::vector<PhaseVector>& gens, int radius,
                   BoxMode box, const std::vector<std::string>& ops) {
  const LatticeModel model(space, gens, radius, box);
  RunOutput out;
  for (const auto& op : ops) {
    const WeylElement element = parse_weyl(op, space);
    const NormReport norms = norm_report(model, element);

    ReportRow row;
    row.command = "norm";
    row.params = {{"op", op}, {"N", radius}, {"box", box_name(box)}};
    row.metric = "compressed-norm";
    row.value = norms.compressed_norm;

    if (unit_monomial(element)) {
      check_against_prediction(row, norms.compressed_norm, 1.0,
                               kMonomialNormTol, "closed-form");
    } else if (model.generator_count() == 1 &&
               box == BoxMode::symmetric && element.support_size() == 2) {
      // W(g) + W(-g) on a segment: tridiagonal 0/1 matrix with extreme
      // eigenvalue 2 cos(pi / (2N + 2)).
      const auto pos = model.tuple_of(element.terms().begin()->first);
      const auto neg = model.tuple_of(element.terms().rbegin()->first);
      const auto c0 = element.terms().begin()->second;
      const auto c1 = element.terms().rbegin()->second;
      if (pos && neg && std::labs((*pos)[0]) == 1 && std::labs((*neg)[0]) == 1 &&
          (*pos)[0] == -(*neg)[0] && std::abs(c0 - 1.0) < 1e-14 &&
          std::abs(c1 - 1.0) < 1e-14) {
        const double predicted =
            2.0 * std::cos(M_PI / (2.0 * radius + 2.0));
        check_against_prediction(row, norms.compressed_norm, predicted,
                                 kTwoTermNormTol, "oracle");
      }
    }
    out.rows.push_back(std::move(row));
  }
  finish(out);
  return out;
}

RunOutput run_residual(const SymplecticSpace& space, int levels, int cutoff,
                       ResolventRelation relation,
                       const RelationParams& params) {
  const FockRep rep(space, levels);
  const ResidualReport report = relation_residual(rep, relation, params, cutoff);

  ReportRow row;
  row.command = "resolvent-residuals";
  row.params = {{"relation", relation_name(relation)},
                {"modes", space.dim_pairs()},
                {"levels", levels},
                {"cutoff", cutoff},
                {"lambda", params.lambda},
                {"nu", params.nu},
                {"f", vector_to_json(params.f.empty()
                                         ? zero_vector(space.dim())
                                         : params.f)},
                {"g", vector_to_json(params.g.empty()
                                         ? zero_vector(space.dim())
                                         : params.g)}};
  row.metric = "relation-residual";
  row.value = {{"raw", report.raw}, {"compressed", report.compressed}};
  const bool exact_relation = relation != ResolventRelation::product &&
                              relation != ResolventRelation::commutator;
  if (exact_relation) {
    row.tolerance = kRawRelationTol;
    row.pass = report.raw <= kRawRelationTol;
  }
  RunOutput out;
  out.rows.push_back(std::move(row));
  finish(out);
  return out;
}

RunOutput run_character_report(const SymplecticSpace& space,
                               const Character& chi,
                               const std::vector<std::string>& words,
                               int checks, std::uint64_t seed) {
  RunOutput out;
  std::vector<std::complex<double>> values;

  for (const auto& src : words) {
    const auto parsed = parse_element(src, space.dim());
    if (parsed.family == GeneratorFamily::weyl) {
      throw Error("expected resolvent words, got Weyl generators: " + src);
    }
    const std::complex<double> value = evaluate_character(*parsed.ast, chi);
    values.push_back(value);

    ReportRow row;
    row.command = "character";
    row.params = {{"word", src}};
    row.metric = "character-value";
    row.value = complex_to_json(value);
    out.rows.push_back(std::move(row));

    // The scalar sample is exactly multiplicative: the induced k=1 map has
    // zero multiplicative-domain distance and reproduces the trace.
    if (const auto word = as_word(*parsed.ast)) {
      CpSample scalar;
      scalar.k = 1;
      scalar.unit_image = Eigen::MatrixXcd::Identity(1, 1);
      const std::complex<double> v = character_value(chi, *word);
      const std::complex<double> v_adj = character_value(chi, adjoint(*word));
      scalar.images["A"] = Eigen::MatrixXcd::Constant(1, 1, v);
      scalar.images["A*"] = Eigen::MatrixXcd::Constant(1, 1, v_adj);
      scalar.images["A*A"] = Eigen::MatrixXcd::Constant(1, 1, v_adj * v);
      scalar.images["AA*"] = Eigen::MatrixXcd::Constant(1, 1, v * v_adj);
      ReportRow domain_row;
      domain_row.command = "character";
      domain_row.params = {{"word", src}};
      domain_row.metric = "mult-domain-distance";
      domain_row.value = mult_domain_distance(scalar, "A");
      domain_row.pass = domain_row.value.get<double>() == 0.0;
      out.rows.push_back(std::move(domain_row));
    }
  }

  // tau(AB) = tau(BA) exactly for scalars.
  double trace_gap = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      trace_gap = std::max(trace_gap,
                           std::abs(values[i] * values[j] -
                                    values[j] * values[i]));
    }
  }
  if (values.size() > 1) {
    ReportRow row;
    row.command = "character";
    row.params = {{"words", static_cast<int>(values.size())}};
    row.metric = "trace-symmetry-gap";
    row.value = trace_gap;
    row.pass = trace_gap == 0.0;
    out.rows.push_back(std::move(row));
  }

  if (checks > 0) {
    DeterministicRng rng(seed);
    double worst = 0.0;
    double sigma_term_max = 0.0;
    for (int i = 0; i < checks; ++i) {
      RelationParams params;
      params.lambda = rng.uniform(0.3, 2.0) * (rng.uniform() < 0.5 ? -1 : 1);
      params.nu = rng.uniform(0.3, 2.0);
      params.f.clear();
      params.g.clear();
      for (int c = 0; c < space.dim(); ++c) {
        params.f.emplace_back(Rational(static_cast<long>(rng.integer(9)) - 4, 2));
        params.g.emplace_back(Rational(static_cast<long>(rng.integer(9)) - 4, 2));
      }
      const auto report = character_relation_check(chi, space, params);
      worst = std::max(worst, report.max_residual);
      sigma_term_max = std::max(sigma_term_max, report.sigma_term_magnitude);
    }
    ReportRow row;
    row.command = "character";
    row.params = {{"checks", checks}, {"seed", seed}};
    row.metric = "scalar-relations-max-residual";
    row.value = worst;
    row.tolerance = kScalarRelationTol;
    row.pass = worst <= kScalarRelationTol;
    out.rows.push_back(std::move(row));
    out.extras["sigma_term_max"] = sigma_term_max;
  }

  finish(out);
  return out;
}

RunOutput run_cp_split(const CpSample& sample, double eps) {
  validate_sample(sample);
  const SpectralSplit split = spectral_split(sample.unit_image, eps);
  ReportRow row;
  row.command = "cp-split";
  row.params = {{"eps", eps}, {"k", sample.k}};
  row.metric = "spectral-split";
  row.value = {{"distance", split.distance},
               {"delta", split.delta},
               {"certified_bound", split.certified_bound},
               {"count_low", split.lambda0.size()},
               {"count_mid", split.lambda_mid.size()},
               {"count_high", split.lambda1.size()}};
  row.tolerance = kSplitSlack;
  row.pass = split.distance <= split.certified_bound + kSplitSlack;
  RunOutput out;
  out.rows.push_back(std::move(row));
  finish(out);
  return out;
}

RunOutput run_cp_certify(const CpSample& sample, double eps) {
  validate_sample(sample);
  const CertificateReport report = folner_certificate(sample, eps);
  RunOutput out;
  for (const auto& pair : report.pairs) {
    ReportRow row;
    row.command = "cp-certify";
    row.params = {{"a", pair.a}, {"b", pair.b}, {"ab", pair.ab}};
    row.metric = "mult-defect";
    row.value = pair.defect;
    row.tolerance = eps;
    row.pass = pair.pass;
    out.rows.push_back(std::move(row));
  }
  for (const auto& element : report.elements) {
    ReportRow row;
    row.command = "cp-certify";
    row.params = {{"label", element.label}};
    row.metric = "element";
    Json value = {{"compressed_norm", element.compressed_norm},
                  {"trace", complex_to_json(element.trace_value)}};
    if (element.norm_gap) {
      value["norm_gap"] = *element.norm_gap;
      row.tolerance = eps;
      row.pass = *element.norm_gap <= eps;
    }
    row.value = std::move(value);
    out.rows.push_back(std::move(row));
  }
  finish(out);
  return out;
}

RunOutput run_cp_unitalize(const CpSample& sample, double eps,
                           Json* transformed_sample) {
  validate_sample(sample);
  const UnitalizeResult result = unitalize(sample, eps);
  if (transformed_sample) {
    *transformed_sample = sample_to_json(result.sample);
  }
  const double unit_gap =
      (result.sample.unit_image -
       Eigen::MatrixXcd::Identity(result.rank, result.rank))
          .cwiseAbs()
          .maxCoeff();
  ReportRow row;
  row.command = "cp-unitalize";
  row.params = {{"eps", eps}, {"k", sample.k}};
  row.metric = "unitalize";
  row.value = {{"rank", result.rank},
               {"unit_gap", unit_gap},
               {"f_norm", result.f_norm},
               {"f_minus_p_norm", result.f_minus_p_norm}};
  row.tolerance = kSplitSlack;
  row.pass = unit_gap <= kSplitSlack;
  RunOutput out;
  out.rows.push_back(std::move(row));
  finish(out);
  return out;
}

RunOutput run_cp_synth(const SymplecticSpace& space,
                       const std::vector<PhaseVector>& gens, int radius,
                       BoxMode box, const std::vector<std::string>& ops,
                       std::uint64_t seed, double spread, Json* sample_json) {
  const LatticeModel model(space, gens, radius, box);
  LabelledElements elements;
  std::vector<std::array<std::string, 3>> pairs;
  for (const auto& op : ops) {
    append_mult_domain_family(space, op, parse_weyl(op, space), elements,
                              pairs);
  }
  CpSample sample = synth_ccp(model, elements, seed, spread);
  sample.pairs = pairs;
  for (const auto& op : ops) {
    sample.norm_refs[op] = l1_bound(parse_weyl(op, space));
  }
  if (sample_json) {
    *sample_json = sample_to_json(sample);
  }
  ReportRow row;
  row.command = "cp-synth";
  row.params = {{"N", radius},
                {"box", box_name(box)},
                {"seed", seed},
                {"spread", spread}};
  row.metric = "synth";
  row.value = {{"k", sample.k},
               {"labels", static_cast<int>(sample.images.size())}};
  RunOutput out;
  out.rows.push_back(std::move(row));
  finish(out);
  return out;
}

RunOutput run_cp_ensemble(const SymplecticSpace& space,
                          const std::vector<PhaseVector>& gens, int radius,
                          int count, std::uint64_t seed) {
  const LatticeModel model(space, gens, radius);
  LabelledElements elements;
  std::vector<std::array<std::string, 3>> pairs;
  append_mult_domain_family(space, "A", weyl_generator(space, gens.at(0)),
                            elements, pairs);
  RunOutput out;
  for (int i = 0; i < count; ++i) {
    const double spread = std::pow(10.0, -static_cast<double>(i % 8));
    const CpSample sample = synth_ccp(model, elements, seed + i, spread);
    const double delta = two_norm(sample.unit_image -
                                  sample.unit_image * sample.unit_image);
    const double eps =
        std::min(0.49, std::max(1e-3, std::pow(delta, 2.0 / 3.0)));
    const SpectralSplit split = spectral_split(sample.unit_image, eps);

    ReportRow row;
    row.command = "cp-ensemble";
    row.params = {{"seed", seed + i}, {"spread", spread}};
    row.metric = "lemma-split";
    row.value = {{"delta", delta},
                 {"eps", eps},
                 {"distance", split.distance},
                 {"certified_bound", split.certified_bound}};
    row.tolerance = kSplitSlack;
    row.pass = split.distance <= split.certified_bound + kSplitSlack;
    out.rows.push_back(std::move(row));
  }
  finish(out);
  return out;
}

namespace {

std::vector<std::string> string_list(const Json& j) {
  std::vector<std::string> out;
  for (const auto& entry : j) out.push_back(entry.get<std::string>());
  return out;
}

RelationParams params_from_json(const Json& j, const SymplecticSpace& space) {
  RelationParams params;
  if (j.contains("lambda")) params.lambda = j.at("lambda").get<double>();
  if (j.contains("nu")) params.nu = j.at("nu").get<double>();
  params.f = j.contains("f") ? vector_from_json(j.at("f"))
                             : zero_vector(space.dim());
  params.g = j.contains("g") ? vector_from_json(j.at("g"))
                             : zero_vector(space.dim());
  return params;
}

/// Per-op decay series collected across a grid for slope annotation.
void annotate_slopes(Json& sweep_doc, const std::string& key_field,
                     const std::vector<ReportRow>& rows,
                     const std::vector<double>& abscissas,
                     const std::string& abscissa_name) {
  std::map<std::string, std::vector<double>> series;
  std::map<std::string, std::vector<double>> xs;
  // rows arrive grid-major: for each grid point, one row per op.
  const std::size_t per_grid = abscissas.empty() ? 0 : rows.size() / abscissas.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (per_grid == 0) break;
    const std::size_t grid_pos = i / per_grid;
    if (!rows[i].value.is_number()) continue;
    std::string key = rows[i].metric;
    if (rows[i].params.contains(key_field) &&
        rows[i].params.at(key_field).is_string()) {
      key = rows[i].params.at(key_field).get<std::string>();
    }
    series[key].push_back(rows[i].value.get<double>());
    xs[key].push_back(abscissas[grid_pos]);
  }
  Json slopes = Json::array();
  for (const auto& [key, values] : series) {
    const auto slope = log_log_slope(xs.at(key), values);
    if (!slope) continue;
    slopes.push_back(Json{{"series", key},
                          {"abscissa", abscissa_name},
                          {"slope", *slope},
                          {"points", values.size()}});
  }
  if (!slopes.empty()) sweep_doc["slopes"] = std::move(slopes);
}

Json run_one_sweep(const Json& spec, bool& all_pass) {
  if (!spec.contains("command")) {
    throw Error("sweep entry needs a \"command\" field");
  }
  const std::string command = spec.at("command").get<std::string>();
  const Json space_json = spec.contains("space") ? spec.at("space") : Json();
  std::vector<PhaseVector> gens;
  if (spec.contains("gens")) gens = gens_from_json(spec.at("gens"));

  Json doc;
  doc["command"] = command;
  std::vector<ReportRow> rows;
  bool pass = true;

  const auto grid_of = [&](const char* field) {
    std::vector<int> grid;
    if (spec.contains("grid") && spec.at("grid").contains(field)) {
      for (const auto& v : spec.at("grid").at(field)) {
        grid.push_back(v.get<int>());
      }
    } else if (spec.contains(field)) {
      grid.push_back(spec.at(field).get<int>());
    }
    if (grid.empty()) {
      throw Error(std::string("sweep for '") + command + "' needs \"" + field +
                  "\" (scalar or grid)");
    }
    return grid;
  };

  if (command == "folner-ratio" || command == "compress" ||
      command == "hypertrace" || command == "defect" || command == "norm") {
    const SymplecticSpace space = resolve_space(space_json, gens);
    const BoxMode box = spec.contains("box")
                            ? box_from_name(spec.at("box").get<std::string>())
                            : BoxMode::symmetric;
    const auto grid = grid_of("N");
    std::vector<double> sides;
    for (const int n : grid) {
      RunOutput step;
      if (command == "folner-ratio") {
        step = run_folner_ratio(space, gens, n, string_list(spec.at("ops")));
      } else if (command == "compress") {
        step = run_compress(space, gens, n, box, string_list(spec.at("ops")));
      } else if (command == "hypertrace") {
        std::optional<int> ambient;
        if (spec.contains("R") && !spec.at("R").is_null()) {
          ambient = spec.at("R").get<int>();
        }
        step = run_hypertrace(space, gens, n, ambient,
                              string_list(spec.at("ops")));
      } else if (command == "defect") {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& p : spec.at("pairs")) {
          pairs.emplace_back(p.at(0).get<std::string>(),
                             p.at(1).get<std::string>());
        }
        step = run_defect(space, gens, n, box, pairs);
      } else {
        step = run_norm(space, gens, n, box, string_list(spec.at("ops")));
      }
      sides.push_back(box == BoxMode::symmetric ? 2.0 * n + 1.0
                                                : static_cast<double>(n));
      pass = pass && step.pass;
      rows.insert(rows.end(), step.rows.begin(), step.rows.end());
    }
    if (command == "hypertrace" || command == "defect") {
      const char* key = command == "hypertrace" ? "op" : "b";
      annotate_slopes(doc, key, rows, sides, "box-side");
    }
  } else if (command == "residual") {
    const SymplecticSpace space =
        space_json.is_null() ? SymplecticSpace(1) : space_from_json(space_json);
    const auto grid = grid_of("M");
    const int cutoff = spec.value("cutoff", 4);
    const auto relation =
        relation_from_name(spec.at("relation").get<std::string>());
    const RelationParams params =
        params_from_json(spec.value("params", Json::object()), space);
    std::vector<double> levels;
    for (const int m : grid) {
      const RunOutput step = run_residual(space, m, cutoff, relation, params);
      pass = pass && step.pass;
      rows.insert(rows.end(), step.rows.begin(), step.rows.end());
      levels.push_back(static_cast<double>(m));
    }
    // Slope of the compressed residual against the truncation size.
    std::vector<double> compressed;
    for (const auto& row : rows) {
      compressed.push_back(row.value.at("compressed").get<double>());
    }
    const auto slope = log_log_slope(levels, compressed);
    if (slope) {
      doc["slopes"] = Json::array({Json{{"series", relation_name(relation)},
                                        {"abscissa", "levels"},
                                        {"slope", *slope},
                                        {"points", compressed.size()}}});
    }
  } else if (command == "cp-ensemble") {
    const SymplecticSpace space = resolve_space(space_json, gens);
    const int radius = spec.value("N", 3);
    const int count = spec.value("count", 50);
    const std::uint64_t seed = spec.value("seed", 1u);
    const RunOutput step = run_cp_ensemble(space, gens, radius, count, seed);
    pass = pass && step.pass;
    rows = step.rows;
  } else if (command == "character") {
    Eigen::VectorXd mu(spec.at("mu").size());
    for (Eigen::Index i = 0; i < mu.size(); ++i) {
      mu(i) = spec.at("mu").at(static_cast<std::size_t>(i)).get<double>();
    }
    const SymplecticSpace space =
        space_json.is_null() ? SymplecticSpace(static_cast<int>(mu.size()) / 2)
                             : space_from_json(space_json);
    const RunOutput step = run_character_report(
        space, Character{mu}, string_list(spec.value("words", Json::array())),
        spec.value("checks", 100), spec.value("seed", 1u));
    pass = pass && step.pass;
    rows = step.rows;
    for (const auto& [key, value] : step.extras.items()) doc[key] = value;
  } else {
    throw Error("unknown sweep command '" + command + "'");
  }

  Json json_rows = Json::array();
  for (const auto& row : rows) json_rows.push_back(row_to_json(row));
  doc["rows"] = std::move(json_rows);
  doc["pass"] = pass;
  all_pass = all_pass && pass;
  return doc;
}

}  // namespace

Json run_sweep(const Json& spec, bool& all_pass) {
  all_pass = true;
  Json doc;
  if (spec.contains("sweeps")) {
    Json sweeps = Json::array();
    for (const auto& entry : spec.at("sweeps")) {
      sweeps.push_back(run_one_sweep(entry, all_pass));
    }
    doc["sweeps"] = std::move(sweeps);
  } else {
    doc["sweeps"] = Json::array({run_one_sweep(spec, all_pass)});
  }
  doc["pass"] = all_pass;
  return doc;
}

}  // namespace ccr
