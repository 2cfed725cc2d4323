#pragma once

#include <cstdint>
#include <string>

#include "vecfield/chem/molecule.hpp"

namespace vecfield {

struct StabilityReport {
  double stable_atom_fraction = 0.0;
  bool molecule_stable = false;
  bool valid = false;
  // Not part of the JSON export.
  bool single_fragment = false;
  int implicit_hydrogens = 0;  // hydrogens that would saturate heavy-atom deficits
};

// Runs the greedy valence completion on the given bonds, then scores every
// atom against its allowed valences. An empty molecule is vacuously stable
// but not valid.
StabilityReport check_stability(const Molecule& mol);

// {"stable_atom_fraction": ..., "molecule_stable": ..., "valid": ...}
std::string to_json(const StabilityReport& report);

}  // namespace vecfield
