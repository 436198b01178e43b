#pragma once

#include "sldc/codebook.hpp"

// The worked (n=12, r=2, d=3) plan at k=10:
//   S_10 = {2,3,5,6}, T_2 = {2,3,4}, T_3 = {2,4,5}, T_5 = {3,4,5}, T_6 = {6,7,8}.
// Injected as an override; it is not claimed to arise from any seed.
namespace fixtures {

inline sldc::LevelPlan worked_plan_k10() {
  sldc::LevelPlan plan;
  plan.k = 10;
  plan.members = {2, 3, 5, 6};
  plan.probe_sets = {{2, 3, 4}, {2, 4, 5}, {3, 4, 5}, {6, 7, 8}};
  return plan;
}

// Codebook whose levels below 10 are blanked out, so every accepted support
// encodes at exactly k=10 under the worked plan.
inline sldc::Codebook worked_codebook() {
  sldc::CodeParams params;
  params.n = 12;
  params.r = 2;
  params.d = 3;
  sldc::Codebook codebook(params);
  for (std::uint64_t k = 7; k < 10; ++k)
    codebook.set_level_override(sldc::LevelPlan{k, {}, {}});
  codebook.set_level_override(worked_plan_k10());
  return codebook;
}

}  // namespace fixtures
