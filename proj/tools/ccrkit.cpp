// ccrkit: finite-dimensional approximation workbench for the Weyl and
// resolvent algebras of the canonical commutation relations.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ccr/error.hpp"
#include "ccr/expr.hpp"
#include "ccr/runners.hpp"

namespace {

using ccr::Json;

struct OutputOptions {
  std::string path;    // empty: stdout
  std::string format = "json";
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--out", out.path, "Write the report to this path");
  cmd->add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw ccr::Error("cannot open output file '" + path + "'");
  }
  file << text;
}

std::vector<ccr::ReportRow> rows_of_document(const Json& doc) {
  std::vector<ccr::ReportRow> rows;
  if (doc.contains("rows")) {
    for (const auto& row : doc.at("rows")) {
      rows.push_back(ccr::row_from_json(row));
    }
  }
  if (doc.contains("sweeps")) {
    for (const auto& sweep : doc.at("sweeps")) {
      for (const auto& row : sweep.at("rows")) {
        rows.push_back(ccr::row_from_json(row));
      }
    }
  }
  return rows;
}

void emit(const Json& document, const OutputOptions& out) {
  if (out.format == "csv") {
    write_text(out.path, ccr::rows_to_csv(rows_of_document(document)));
  } else {
    write_text(out.path, document.dump(2) + "\n");
  }
}

Json parse_json_text(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw ccr::Error(std::string("invalid JSON for ") + what + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw ccr::Error("cannot open '" + path + "'");
  }
  try {
    return Json::parse(file);
  } catch (const std::exception& e) {
    throw ccr::Error("invalid JSON in '" + path + "': " + e.what());
  }
}

std::vector<std::string> expand_ops(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& entry : raw) {
    for (auto& piece : ccr::split_expressions(entry)) {
      out.push_back(std::move(piece));
    }
  }
  if (out.empty()) {
    throw ccr::Error("no expressions given");
  }
  return out;
}

struct LatticeArgs {
  std::string gens_json;
  std::string space_json;
  int radius = 0;
  std::string box = "symmetric";
  std::vector<std::string> ops;

  ccr::SymplecticSpace space() const {
    const auto gens = this->gens();
    return ccr::resolve_space(
        space_json.empty() ? Json() : parse_json_text(space_json, "--space"),
        gens);
  }
  std::vector<ccr::PhaseVector> gens() const {
    return ccr::gens_from_json(parse_json_text(gens_json, "--gens"));
  }
  ccr::BoxMode box_mode() const {
    if (box == "symmetric") return ccr::BoxMode::symmetric;
    if (box == "onesided") return ccr::BoxMode::onesided;
    throw ccr::Error("unknown box mode '" + box + "'");
  }
};

void add_lattice_options(CLI::App* cmd, LatticeArgs& args, bool with_box) {
  cmd->add_option("--gens", args.gens_json,
                  "Lattice generators as a JSON array of vectors")
      ->required();
  cmd->add_option("--N", args.radius, "Box size")->required();
  cmd->add_option("--space", args.space_json,
                  "Symplectic space JSON (default: standard form)");
  if (with_box) {
    cmd->add_option("--box", args.box, "Box shape")
        ->check(CLI::IsMember({"symmetric", "onesided"}));
  }
  cmd->add_option("--ops", args.ops, "Element expressions")
      ->required()
      ->take_all();
}

int exit_code(bool pass) { return pass ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite-dimensional approximations of the canonical-commutation-"
      "relation algebras: box compressions, c.c.p. map calculus and "
      "resolvent relation residuals."};
  app.require_subcommand(1);

  // folner-ratio
  LatticeArgs ratio_args;
  OutputOptions ratio_out;
  auto* ratio_cmd = app.add_subcommand(
      "folner-ratio", "Exact dimension growth ratios of box subspaces");
  add_lattice_options(ratio_cmd, ratio_args, false);
  add_output_options(ratio_cmd, ratio_out);

  // compress
  LatticeArgs compress_args;
  OutputOptions compress_out;
  auto* compress_cmd = app.add_subcommand(
      "compress", "Box-compressed representation: defects, norms, traces");
  add_lattice_options(compress_cmd, compress_args, true);
  add_output_options(compress_cmd, compress_out);

  // hypertrace
  LatticeArgs hyper_args;
  OutputOptions hyper_out;
  int hyper_ambient = -1;
  auto* hyper_cmd = app.add_subcommand(
      "hypertrace", "Trace-class commutator decay of box densities");
  add_lattice_options(hyper_cmd, hyper_args, false);
  hyper_cmd->add_option("--R", hyper_ambient,
                        "Ambient box size (default: N + support radius)");
  add_output_options(hyper_cmd, hyper_out);

  // cp group
  auto* cp_cmd = app.add_subcommand("cp", "c.c.p. sample calculus");
  cp_cmd->require_subcommand(1);

  std::string split_in;
  double split_eps = 0.1;
  OutputOptions split_out;
  auto* split_cmd =
      cp_cmd->add_subcommand("split", "Spectral splitting of the unit image");
  split_cmd->add_option("--in", split_in, "Sample JSON path")->required();
  split_cmd->add_option("--eps", split_eps, "Band width in (0, 1/2)")
      ->required();
  add_output_options(split_cmd, split_out);

  std::string unitalize_in, unitalize_sample_out;
  double unitalize_eps = 0.1;
  OutputOptions unitalize_out;
  auto* unitalize_cmd = cp_cmd->add_subcommand(
      "unitalize", "Rescale a sample so the unit maps to the identity");
  unitalize_cmd->add_option("--in", unitalize_in, "Sample JSON path")
      ->required();
  unitalize_cmd->add_option("--eps", unitalize_eps, "Band width in (0, 1/2)")
      ->required();
  unitalize_cmd
      ->add_option("--out", unitalize_sample_out,
                   "Path for the transformed sample JSON")
      ->required();
  unitalize_cmd->add_option("--report", unitalize_out.path,
                            "Write the report here instead of stdout");
  unitalize_cmd->add_option("--format", unitalize_out.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string certify_in;
  double certify_eps = 0.25;
  OutputOptions certify_out;
  auto* certify_cmd = cp_cmd->add_subcommand(
      "certify", "Check multiplicativity defects and norms against eps");
  certify_cmd->add_option("--in", certify_in, "Sample JSON path")->required();
  certify_cmd->add_option("--eps", certify_eps, "Defect threshold")
      ->required();
  add_output_options(certify_cmd, certify_out);

  LatticeArgs synth_args;
  OutputOptions synth_out;
  std::string synth_sample_out;
  std::uint64_t synth_seed = 0;
  double synth_spread = 1.0;
  auto* synth_cmd = cp_cmd->add_subcommand(
      "synth", "Sample a seeded random-contraction c.c.p. map");
  add_lattice_options(synth_cmd, synth_args, true);
  synth_cmd->add_option("--seed", synth_seed, "RNG seed")->required();
  synth_cmd->add_option("--spread", synth_spread,
                        "Singular value spread in [0, 1]");
  synth_cmd->add_option("--out", synth_sample_out, "Path for the sample JSON")
      ->required();
  synth_cmd->add_option("--report", synth_out.path,
                        "Write the report here instead of stdout");

  // resolvent group
  auto* resolvent_cmd =
      app.add_subcommand("resolvent", "Truncated Fock-space checks");
  resolvent_cmd->require_subcommand(1);

  int res_modes = 1, res_levels = 16, res_cutoff = 4;
  std::string res_relation, res_params, res_space;
  OutputOptions res_out;
  auto* residuals_cmd = resolvent_cmd->add_subcommand(
      "residuals", "Generator relation residuals at a truncation");
  residuals_cmd->add_option("--modes", res_modes, "Oscillator modes d");
  residuals_cmd->add_option("--levels", res_levels, "Levels per mode M")
      ->required();
  residuals_cmd->add_option("--cutoff", res_cutoff, "Compression cutoff K");
  residuals_cmd
      ->add_option("--relation", res_relation,
                   "normalization|adjoint|scaling|resolvent-identity|product|"
                   "commutator")
      ->required();
  residuals_cmd->add_option("--params", res_params,
                            "JSON {lambda, nu, f, g} as the relation needs");
  residuals_cmd->add_option("--space", res_space, "Symplectic space JSON");
  add_output_options(residuals_cmd, res_out);

  std::string chr_mu;
  std::vector<std::string> chr_words;
  int chr_checks = 100;
  std::uint64_t chr_seed = 0;
  bool chr_seed_set = false;
  OutputOptions chr_out;
  auto* character_cmd = resolvent_cmd->add_subcommand(
      "character", "Scalar characters of the commutator quotient");
  character_cmd->add_option("--mu", chr_mu, "Real 2d-vector JSON")->required();
  character_cmd->add_option("--words", chr_words, "Resolvent word expressions")
      ->take_all();
  character_cmd->add_option("--checks", chr_checks,
                            "Number of random relation draws");
  character_cmd
      ->add_option("--seed", chr_seed, "RNG seed for the relation draws")
      ->each([&](const std::string&) { chr_seed_set = true; });
  add_output_options(character_cmd, chr_out);

  // sweep
  std::string sweep_spec;
  OutputOptions sweep_out;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Run a parameter sweep from a spec file");
  sweep_cmd->add_option("--spec", sweep_spec, "Sweep spec JSON path")
      ->required();
  add_output_options(sweep_cmd, sweep_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (ratio_cmd->parsed()) {
      const auto out = ccr::run_folner_ratio(ratio_args.space(),
                                             ratio_args.gens(),
                                             ratio_args.radius,
                                             expand_ops(ratio_args.ops));
      emit(ccr::report_document(out.rows, out.extras), ratio_out);
      return exit_code(out.pass);
    }
    if (compress_cmd->parsed()) {
      const auto out = ccr::run_compress(
          compress_args.space(), compress_args.gens(), compress_args.radius,
          compress_args.box_mode(), expand_ops(compress_args.ops));
      emit(ccr::report_document(out.rows, out.extras), compress_out);
      return exit_code(out.pass);
    }
    if (hyper_cmd->parsed()) {
      const auto out = ccr::run_hypertrace(
          hyper_args.space(), hyper_args.gens(), hyper_args.radius,
          hyper_ambient >= 0 ? std::optional<int>(hyper_ambient)
                             : std::nullopt,
          expand_ops(hyper_args.ops));
      emit(ccr::report_document(out.rows, out.extras), hyper_out);
      return exit_code(out.pass);
    }
    if (split_cmd->parsed()) {
      const auto sample = ccr::sample_from_json(load_json_file(split_in));
      const auto out = ccr::run_cp_split(sample, split_eps);
      emit(ccr::report_document(out.rows, out.extras), split_out);
      return exit_code(out.pass);
    }
    if (unitalize_cmd->parsed()) {
      const auto sample = ccr::sample_from_json(load_json_file(unitalize_in));
      Json transformed;
      const auto out = ccr::run_cp_unitalize(sample, unitalize_eps,
                                             &transformed);
      write_text(unitalize_sample_out, transformed.dump(2) + "\n");
      emit(ccr::report_document(out.rows, out.extras), unitalize_out);
      return exit_code(out.pass);
    }
    if (certify_cmd->parsed()) {
      const auto sample = ccr::sample_from_json(load_json_file(certify_in));
      const auto out = ccr::run_cp_certify(sample, certify_eps);
      emit(ccr::report_document(out.rows, out.extras), certify_out);
      return exit_code(out.pass);
    }
    if (synth_cmd->parsed()) {
      Json sample_json;
      const auto out = ccr::run_cp_synth(
          synth_args.space(), synth_args.gens(), synth_args.radius,
          synth_args.box_mode(), expand_ops(synth_args.ops), synth_seed,
          synth_spread, &sample_json);
      write_text(synth_sample_out, sample_json.dump(2) + "\n");
      emit(ccr::report_document(out.rows, out.extras), synth_out);
      return exit_code(out.pass);
    }
    if (residuals_cmd->parsed()) {
      const ccr::SymplecticSpace space =
          res_space.empty() ? ccr::SymplecticSpace(res_modes)
                            : ccr::space_from_json(
                                  parse_json_text(res_space, "--space"));
      ccr::RelationParams params;
      params.f = ccr::zero_vector(space.dim());
      params.g = ccr::zero_vector(space.dim());
      if (!res_params.empty()) {
        const Json j = parse_json_text(res_params, "--params");
        if (j.contains("lambda")) params.lambda = j.at("lambda").get<double>();
        if (j.contains("nu")) params.nu = j.at("nu").get<double>();
        if (j.contains("f")) params.f = ccr::vector_from_json(j.at("f"));
        if (j.contains("g")) params.g = ccr::vector_from_json(j.at("g"));
      }
      const auto out = ccr::run_residual(
          space, res_levels, res_cutoff,
          ccr::relation_from_name(res_relation), params);
      emit(ccr::report_document(out.rows, out.extras), res_out);
      return exit_code(out.pass);
    }
    if (character_cmd->parsed()) {
      if (chr_checks > 0 && !chr_seed_set) {
        throw ccr::Error(
            "--seed is required when --checks draws random relations");
      }
      const Json mu_json = parse_json_text(chr_mu, "--mu");
      Eigen::VectorXd mu(mu_json.size());
      for (Eigen::Index i = 0; i < mu.size(); ++i) {
        mu(i) = mu_json.at(static_cast<std::size_t>(i)).get<double>();
      }
      if (mu.size() % 2 != 0 || mu.size() == 0) {
        throw ccr::Error("--mu needs an even number of coordinates");
      }
      const ccr::SymplecticSpace space(static_cast<int>(mu.size()) / 2);
      std::vector<std::string> words;
      for (const auto& w : chr_words) {
        for (auto& piece : ccr::split_expressions(w)) {
          words.push_back(std::move(piece));
        }
      }
      const auto out = ccr::run_character_report(space, ccr::Character{mu},
                                                 words, chr_checks, chr_seed);
      emit(ccr::report_document(out.rows, out.extras), chr_out);
      return exit_code(out.pass);
    }
    if (sweep_cmd->parsed()) {
      bool all_pass = true;
      const Json doc = ccr::run_sweep(load_json_file(sweep_spec), all_pass);
      emit(doc, sweep_out);
      return exit_code(all_pass);
    }
  } catch (const ccr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ccr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
