#pragma once

#include "theta2/genfun.hpp"
#include "theta2/linalg.hpp"
#include "theta2/rep.hpp"

namespace theta2 {

/// One generation certificate: products of the module generators with the
/// scalar monomial basis reach the claimed dimension at this order. Ranks
/// are certified through a ring homomorphism into a prime field, so
/// "certified" is rigorous; kernel dimensions follow when the rank meets
/// the claim.
struct GenerationCertificate {
  std::string module_id;
  int j = 0;
  int k = 0;
  long columns = 0;
  long claimed_dim = 0;
  long achieved_rank = 0;
  long kernel_dim = -1;
  long expected_kernel = -1;
  int order = 0;
  bool certified = false;
};

struct ModuleCertification {
  std::string module_id;
  int order = 0;
  std::vector<GenerationCertificate> weights;
  bool hilbert_ok = false;
  bool relations_ok = true;
  std::vector<std::string> notes;
  double wall_seconds = 0;

  bool all_certified() const;
};

const std::vector<std::string>& certify_module_ids();
ModuleCertification certify_module(const std::string& id, int order);
std::string certification_json(const ModuleCertification& c);
std::string certification_text(const ModuleCertification& c);

/// Alternating-resolution Hilbert check: the levels contribute
/// sum_i (-1)^i sum m t^w over (1 - t^step)^5; equality with the target
/// series is checked through t^upto.
bool hilbert_check(const std::vector<std::vector<std::pair<int, int>>>& levels,
                   int step, const GenFunction& target, int upto);

/// Isotypic type of an explicitly given space of coordinate vectors under a
/// coordinate action of the generators (used for relation-space types).
IrrepMultiplicity rep_of_coordinate_space(
    const std::vector<std::vector<Cyc8>>& basis,
    const std::function<std::vector<Cyc8>(const std::vector<Cyc8>&, Gen)>& act);

}  // namespace theta2
