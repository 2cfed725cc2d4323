#include "vecfield/chem/stability.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "vecfield/chem/bonds.hpp"

namespace vecfield {

StabilityReport check_stability(const Molecule& mol) {
  StabilityReport report;
  if (mol.empty()) {
    report.stable_atom_fraction = 1.0;
    report.molecule_stable = true;
    report.valid = false;
    report.single_fragment = false;
    return report;
  }

  const Molecule completed = complete_valences(mol);
  const auto valence = completed.valences();
  const auto& atoms = completed.atoms();
  std::size_t stable = 0;
  bool overflow = false;
  bool finite = true;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto allowed = allowed_valences(atoms[i].element);
    if (std::find(allowed.begin(), allowed.end(), valence[i]) != allowed.end()) {
      ++stable;
    } else if (valence[i] < allowed.front() && atoms[i].element != Element::H) {
      report.implicit_hydrogens += allowed.front() - valence[i];
    }
    if (valence[i] > max_valence(atoms[i].element)) overflow = true;
    if (!is_finite(atoms[i].position)) finite = false;
  }
  report.stable_atom_fraction = static_cast<double>(stable) / static_cast<double>(atoms.size());
  report.molecule_stable = stable == atoms.size();
  report.valid = !overflow && finite;
  report.single_fragment = fragment_count(completed) == 1;
  return report;
}

std::string to_json(const StabilityReport& report) {
  nlohmann::ordered_json j;
  j["stable_atom_fraction"] = report.stable_atom_fraction;
  j["molecule_stable"] = report.molecule_stable;
  j["valid"] = report.valid;
  return j.dump();
}

}  // namespace vecfield
