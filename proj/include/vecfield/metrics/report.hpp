#pragma once

#include <span>
#include <string>
#include <vector>

#include "vecfield/chem/molecule.hpp"

namespace vecfield {

struct MetricsReport {
  double stable_mol_pct = 0.0;
  double stable_atom_pct = 0.0;
  double valid_pct = 0.0;
  double unique_pct = 0.0;  // distinct structures among valid molecules
  double valency_w1 = 0.0;
  double atom_tv = 0.0;
  double bond_tv = 0.0;
  double bond_len_w1 = 0.0;  // Angstrom
  double bond_ang_w1 = 0.0;  // degrees
  double single_fragment_pct = 0.0;
  double ring_size_tv = 0.0;
  double atoms_per_mol_tv = 0.0;  // largest fragment only
};

// Bonds as evaluated: the molecule's own bonds when it has any, otherwise
// distance-inferred ones; then greedy bond-order completion.
Molecule perceive(const Molecule& mol);

// Scores `generated` against `reference`. Each molecule is perceived first.
// A W1 whose two sample lists are both empty is 0; with exactly one side
// empty it is NaN (serialized as null). Categorical distributions with no
// observations (no bonds, no rings) collapse to the single label "none".
// Throws std::domain_error on an empty corpus.
MetricsReport evaluate_corpus(std::span<const Molecule> generated, std::span<const Molecule> reference);

std::string to_json(const MetricsReport& report, int indent = 2);

// Fixed column order of the generation-quality tables.
std::string csv_header(const MetricsReport&);
std::string csv_row(const MetricsReport& report);

}  // namespace vecfield
