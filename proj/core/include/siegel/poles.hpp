#pragma once

#include "siegel/rational.hpp"

#include <string>
#include <vector>

namespace siegel {

struct PoleEntry {
  Rational s;
  int max_order = 1;
  friend bool operator==(const PoleEntry&, const PoleEntry&) = default;
};

// Candidate poles ("possible" poles) with order caps, sorted by location.
struct PoleTable {
  std::string context;     // feit, klingen63, lambda64
  std::string case_label;  // "i", "ii", "ii.1", "iv", ...
  bool conditional = false;
  // Region of validity in s, e.g. "k+2Re(s)>[n/2]"; empty means the whole plane.
  std::string region;
  std::vector<PoleEntry> poles;
  bool entire() const { return poles.empty(); }
};

// Normalized degree-n Eisenstein series zeta(k+2s) prod zeta(2k+4s-2j) E^n_k.
PoleTable feit_poles(int n, int k);
// Modified Klingen Eisenstein series for f in S_q lifted to degree p.
PoleTable klingen_poles(int p, int q, int k);
// Completed standard L-function of a degree-q eigenform.
PoleTable lambda_poles(int q, int k);

}  // namespace siegel
