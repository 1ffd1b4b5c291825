/*
 * Recorded disagreements between the closed-form three-space frame
 * expression and ground truth (the stratified class, which matches
 * finite-field counts).  Verification front ends treat exactly these
 * configurations as expected mismatches; anything else that fails to match
 * is a real error.
 */
#pragma once

#include <string>
#include <vector>

#include "psidet/lpoly.hpp"
#include "psidet/motive.hpp"
#include "psidet/subspace.hpp"

namespace psidet {

struct DiscrepancyFixture {
  std::string name;
  SubspaceConfig config;
  LPoly reported; // what the closed form yields
  LPoly actual;   // the stratified class; agrees with counts
};

inline const std::vector<DiscrepancyFixture>& known_discrepancies() {
  static const std::vector<DiscrepancyFixture> fixtures = [] {
    std::vector<DiscrepancyFixture> out;
    SubspaceConfig whole = make_config(3, {});
    out.push_back({"three-full-spaces", whole, frame_class_r3_closed(whole),
                   frame_class_r3(whole)});
    SubspaceConfig pinned = config_from_selection(selection_from_mask(3, 0, "111011"));
    out.push_back({"selection-111011", pinned, frame_class_r3_closed(pinned),
                   frame_class_r3(pinned)});
    return out;
  }();
  return fixtures;
}

// Configurations are matched by their cached dimension profile; the frame
// class depends on nothing else.
inline bool is_known_discrepancy(const SubspaceConfig& cfg) {
  for (const DiscrepancyFixture& f : known_discrepancies()) {
    const SubspaceConfig& k = f.config;
    if (cfg.d1 == k.d1 && cfg.d2 == k.d2 && cfg.d3 == k.d3 && cfg.d12 == k.d12 &&
        cfg.d13 == k.d13 && cfg.d23 == k.d23 && cfg.d123 == k.d123 && cfg.D == k.D)
      return true;
  }
  return false;
}

} // namespace psidet
