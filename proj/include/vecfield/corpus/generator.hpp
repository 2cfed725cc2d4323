#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vecfield/chem/molecule.hpp"

namespace vecfield {

// Random small organic-like molecules: a tree of heavy atoms with
// covalent-radius bond lengths, saturated with hydrogens.
struct CorpusSpec {
  int min_atoms = 5;
  int max_atoms = 30;
  int max_heavy = 9;
  std::size_t element_count = kQm9Elements;
  double min_distance = 1.0;               // any pair, Angstrom
  double same_element_min_distance = 1.5;  // pairs of one element, Angstrom
  double nonbonded_margin = 0.1;           // beyond the bond-perception cutoff, Angstrom
  double bond_tolerance = 1.5;             // bond-perception rho the margin refers to
  double max_radius = 5.0;                 // distance from centroid, Angstrom

  void validate() const;
};

// Deterministic in seed. Bonds (all single) are attached; distance-based
// perception with spec.bond_tolerance recovers exactly these bonds. The
// centroid is at the origin.
Molecule generate_molecule(const CorpusSpec& spec, std::uint64_t seed);

std::vector<Molecule> generate_corpus(std::size_t count, const CorpusSpec& spec, std::uint64_t seed);

}  // namespace vecfield
