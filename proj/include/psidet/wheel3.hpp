/* Sweep report for the wheel with three spokes.
 *
 * The graph has six edge variables pulling back to the six components of
 * the three-loop divisor.  This module walks all 64 component selections,
 * computes the frame class and the inclusion-exclusion stratum for each,
 * and renders the results as text tables or CSV.
 *
 * Display order differs from the canonical component order: the edge
 * variables of the wheel pull back to x12, x13, x23, row2, row1, row3 in
 * that order, so rendering swaps the two middle components.  All masks
 * handed to the rest of the library stay canonical.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "psidet/errors.hpp"
#include "psidet/lpoly.hpp"
#include "psidet/motive.hpp"
#include "psidet/subspace.hpp"
#include "psidet/tau.hpp"

namespace psidet {

inline std::string wheel3_display_labels() { return "x12 x13 x23 row2 row1 row3"; }

// Swap the middle pair; its own inverse.
inline std::string wheel3_mask_from_markers(const std::string& markers) {
  require_input(markers.size() == 6, "marker pattern must have six characters");
  std::string m = markers;
  std::swap(m[3], m[4]);
  return m;
}

// All 64 marker patterns ('1' = on the component) ordered by how many
// components are dropped, ties broken by the positions of the dropped ones.
// This is the order in which the report lists selections.
inline std::vector<std::string> wheel3_marker_order() {
  std::vector<std::string> pats;
  for (unsigned bits = 0; bits < 64; ++bits) {
    std::string p(6, '1');
    for (size_t i = 0; i < 6; ++i)
      if (bits & (1u << i)) p[i] = '0';
    pats.push_back(p);
  }
  std::sort(pats.begin(), pats.end(), [](const std::string& a, const std::string& b) {
    const size_t za = static_cast<size_t>(std::count(a.begin(), a.end(), '0'));
    const size_t zb = static_cast<size_t>(std::count(b.begin(), b.end(), '0'));
    if (za != zb) return za < zb;
    return a < b;
  });
  return pats;
}

inline std::string wheel3_pretty_markers(const std::string& markers) {
  std::string out;
  for (size_t i = 0; i < 6; ++i) {
    if (i == 3) out += ' ';
    out += (markers[i] == '1') ? "•" : "○";
  }
  return out;
}

struct SweepEntry {
  std::string markers;   // display order
  std::string mask;      // canonical order, as accepted by selection_from_mask
  LPoly frame_over_cube; // frame class with the common (L-1)^3 factor removed
  LPoly stratum;         // class of the locus on exactly the marked components
};

struct Wheel3Report {
  std::vector<SweepEntry> rows;
  LPoly total;        // ambient matrix space minus the determinant locus
  LPoly divisor_part; // union of all six components, determinant locus removed
  LPoly five_part;    // union of the first five display components, likewise
};

inline Wheel3Report wheel3_report() {
  Wheel3Report rep;
  const std::array<LPoly, 64> strata = inclusion_exclusion_strata();
  const LPoly cube = (LPoly::var() - LPoly::one()).pow(3);
  for (const std::string& markers : wheel3_marker_order()) {
    SweepEntry e;
    e.markers = markers;
    e.mask = wheel3_mask_from_markers(markers);
    const SubspaceConfig cfg = config_from_selection(selection_from_mask(3, 0, e.mask));
    e.frame_over_cube = frame_class_r3(cfg).divide_exact(cube);
    unsigned bits = 0;
    for (size_t i = 0; i < 6; ++i)
      if (e.mask[i] == '1') bits |= 1u << i;
    e.stratum = strata[bits];
    rep.rows.push_back(std::move(e));
  }
  rep.total = det_complement_class(3, false);
  rep.divisor_part = sigma_complement_class(selection_from_mask(3, 0, "111111"));
  rep.five_part =
      sigma_complement_class(selection_from_mask(3, 0, wheel3_mask_from_markers("111110")));
  return rep;
}

namespace detail {

// 16 rows by 4 columns, reading down each column, like the source tables.
inline std::string sweep_grid(const std::vector<SweepEntry>& rows, bool strata) {
  std::array<size_t, 4> width{};
  auto value = [strata](const SweepEntry& e) {
    return display_factor(strata ? e.stratum : e.frame_over_cube).to_string();
  };
  for (size_t k = 0; k < 64; ++k) {
    size_t& w = width[k / 16];
    const size_t len = value(rows[k]).size();
    if (len > w) w = len;
  }
  std::string out;
  for (size_t r = 0; r < 16; ++r) {
    std::string line;
    for (size_t c = 0; c < 4; ++c) {
      const SweepEntry& e = rows[16 * c + r];
      std::string v = value(e);
      if (c + 1 < 4) v.resize(width[c], ' ');
      line += wheel3_pretty_markers(e.markers);
      line += "  ";
      line += v;
      if (c + 1 < 4) line += "   ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

} // namespace detail

inline std::string wheel3_text(const Wheel3Report& rep) {
  require_internal(rep.rows.size() == 64, "sweep report must have 64 rows");
  std::string out;
  out += "wheel with three spokes: sweep of the six-component divisor\n";
  out += "components in display order: " + wheel3_display_labels() + "\n";
  out += "marker • = selection includes the component, ○ = it does not\n";
  out += "\n";
  out += "frame classes, common factor (L-1)^3 removed\n";
  out += detail::sweep_grid(rep.rows, false);
  out += "\n";
  out += "strata of the arrangement, inclusion-exclusion applied\n";
  out += detail::sweep_grid(rep.rows, true);
  out += "\n";
  out += "whole space minus determinant locus:      " + display_factor(rep.total).to_string() +
         "\n";
  out += "divisor union minus determinant locus:    " +
         display_factor(rep.divisor_part).to_string() + "\n";
  out += "five-component union minus determinant:   " +
         display_factor(rep.five_part).to_string() + "\n";
  return out;
}

inline std::string wheel3_csv(const Wheel3Report& rep) {
  require_internal(rep.rows.size() == 64, "sweep report must have 64 rows");
  std::string out = "table,markers,bitmask,class_expanded,class_factored\n";
  auto line = [&out](const std::string& table, const std::string& markers,
                     const std::string& mask, const LPoly& cls) {
    out += table + "," + markers + "," + mask + "," + cls.to_string() + "," +
           display_factor(cls).to_string() + "\n";
  };
  for (const SweepEntry& e : rep.rows)
    line("frames_over_cube", wheel3_pretty_markers(e.markers), e.mask, e.frame_over_cube);
  for (const SweepEntry& e : rep.rows)
    line("strata", wheel3_pretty_markers(e.markers), e.mask, e.stratum);
  line("summary", "", "whole_minus_det", rep.total);
  line("summary", "", "divisor_union_minus_det", rep.divisor_part);
  line("summary", "", "five_component_union_minus_det", rep.five_part);
  return out;
}

} // namespace psidet
