#ifndef CCR_RUNNERS_HPP
#define CCR_RUNNERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ccr/folner.hpp"
#include "ccr/fock.hpp"
#include "ccr/report.hpp"

namespace ccr {

/// Rows plus sweep-level annotations; pass reflects the row flags.
struct RunOutput {
  std::vector<ReportRow> rows;
  Json extras = Json::object();
  bool pass = true;
};

/// Space from explicit JSON, or the standard form inferred from the first
/// generator's arity.
SymplecticSpace resolve_space(const Json& space_json,
                              const std::vector<PhaseVector>& gens);

RunOutput run_folner_ratio(const SymplecticSpace& space,
                           const std::vector<PhaseVector>& gens, int box_size,
                           const std::vector<std::string>& ops);

RunOutput run_compress(const SymplecticSpace& space,
                       const std::vector<PhaseVector>& gens, int radius,
                       BoxMode box, const std::vector<std::string>& ops);

RunOutput run_hypertrace(const SymplecticSpace& space,
                         const std::vector<PhaseVector>& gens, int radius,
                         std::optional<int> ambient_radius,
                         const std::vector<std::string>& ops);

RunOutput run_defect(const SymplecticSpace& space,
                     const std::vector<PhaseVector>& gens, int radius,
                     BoxMode box,
                     const std::vector<std::pair<std::string, std::string>>&
                         pairs);

RunOutput run_norm(const SymplecticSpace& space,
                   const std::vector<PhaseVector>& gens, int radius,
                   BoxMode box, const std::vector<std::string>& ops);

RunOutput run_residual(const SymplecticSpace& space, int levels, int cutoff,
                       ResolventRelation relation,
                       const RelationParams& params);

RunOutput run_character_report(const SymplecticSpace& space,
                               const Character& chi,
                               const std::vector<std::string>& words,
                               int checks, std::uint64_t seed);

RunOutput run_cp_split(const CpSample& sample, double eps);
RunOutput run_cp_certify(const CpSample& sample, double eps);
RunOutput run_cp_unitalize(const CpSample& sample, double eps,
                           Json* transformed_sample);
RunOutput run_cp_synth(const SymplecticSpace& space,
                       const std::vector<PhaseVector>& gens, int radius,
                       BoxMode box, const std::vector<std::string>& ops,
                       std::uint64_t seed, double spread, Json* sample_json);

/// Seeded split ensemble: seeds seed..seed+count-1 with spreads walking
/// down the decades 10^0..10^-7, eps = clamp(delta^{2/3}, 1e-3, 0.49).
RunOutput run_cp_ensemble(const SymplecticSpace& space,
                          const std::vector<PhaseVector>& gens, int radius,
                          int count, std::uint64_t seed);

/// Executes a sweep description; see the README for the spec schema. The
/// document lists every sweep in grid order with slope annotations for decay
/// metrics; all_pass collects the row flags.
Json run_sweep(const Json& spec, bool& all_pass);

}  // namespace ccr

#endif
