#include "vecfield/metrics/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "vecfield/chem/bonds.hpp"
#include "vecfield/chem/canonical.hpp"
#include "vecfield/chem/stability.hpp"
#include "vecfield/metrics/distance.hpp"
#include "vecfield/metrics/geometry.hpp"

namespace vecfield {

namespace {

struct MoleculeStats {
  StabilityReport stability;
  std::size_t stable_atoms = 0;
  StructureDigest digest = 0;
  Geometry geometry;
  std::vector<std::string> atom_labels;
  std::vector<std::string> bond_labels;
  std::size_t largest_fragment = 0;
};

struct CorpusStats {
  std::size_t molecules = 0;
  std::size_t atoms = 0;
  std::size_t stable_atoms = 0;
  std::size_t stable_molecules = 0;
  std::size_t valid = 0;
  std::size_t single_fragment = 0;
  std::set<StructureDigest> valid_digests;
  std::vector<double> valencies, lengths, angles;
  std::map<std::string, std::size_t> atom_types, bond_types, ring_sizes, atoms_per_mol;
};

std::string bond_label(const Molecule& mol, const Bond& b) {
  Element x = mol.atoms()[b.a].element;
  Element y = mol.atoms()[b.b].element;
  if (index_of(y) < index_of(x)) std::swap(x, y);
  return std::string(symbol(x)) + "-" + std::string(symbol(y)) + ":" + std::to_string(b.order);
}

MoleculeStats analyse(const Molecule& input) {
  MoleculeStats s;
  const Molecule mol = perceive(input);
  s.stability = check_stability(mol);
  s.stable_atoms = static_cast<std::size_t>(std::lround(s.stability.stable_atom_fraction * mol.size()));
  s.digest = canonical_hash(mol);
  s.geometry = extract_geometry(mol);
  for (const Atom& a : mol.atoms()) s.atom_labels.emplace_back(symbol(a.element));
  for (const Bond& b : mol.bonds()) s.bond_labels.push_back(bond_label(mol, b));
  s.largest_fragment = mol.empty() ? 0 : largest_fragment(mol).size();
  return s;
}

CorpusStats aggregate(std::span<const Molecule> corpus) {
  std::vector<MoleculeStats> per(corpus.size());
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) per[i] = analyse(corpus[i]);

  CorpusStats c;
  c.molecules = corpus.size();
  for (std::size_t i = 0; i < per.size(); ++i) {
    const MoleculeStats& s = per[i];
    c.atoms += corpus[i].size();
    c.stable_atoms += s.stable_atoms;
    c.stable_molecules += s.stability.molecule_stable ? 1 : 0;
    c.single_fragment += s.stability.single_fragment ? 1 : 0;
    if (s.stability.valid) {
      ++c.valid;
      c.valid_digests.insert(s.digest);
    }
    for (int v : s.geometry.valencies) c.valencies.push_back(v);
    c.lengths.insert(c.lengths.end(), s.geometry.bond_lengths.begin(), s.geometry.bond_lengths.end());
    c.angles.insert(c.angles.end(), s.geometry.bond_angles.begin(), s.geometry.bond_angles.end());
    for (const auto& l : s.atom_labels) ++c.atom_types[l];
    for (const auto& l : s.bond_labels) ++c.bond_types[l];
    for (int r : s.geometry.ring_sizes) ++c.ring_sizes[std::to_string(r)];
    ++c.atoms_per_mol[std::to_string(s.largest_fragment)];
  }
  return c;
}

Categorical distribution(const std::map<std::string, std::size_t>& counts) {
  if (counts.empty()) return {{"none", 1.0}};
  return normalize(counts);
}

double w1_or_policy(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::quiet_NaN();
  return wasserstein1(a, b);
}

double pct(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

Molecule perceive(const Molecule& mol) {
  if (mol.bonds().empty()) return complete_valences(infer_bonds(mol));
  return complete_valences(mol);
}

MetricsReport evaluate_corpus(std::span<const Molecule> generated, std::span<const Molecule> reference) {
  if (generated.empty() || reference.empty()) throw std::domain_error("evaluate_corpus: empty corpus");
  const CorpusStats g = aggregate(generated);
  const CorpusStats r = aggregate(reference);

  MetricsReport m;
  m.stable_mol_pct = pct(g.stable_molecules, g.molecules);
  m.stable_atom_pct = g.atoms == 0 ? 100.0 : pct(g.stable_atoms, g.atoms);
  m.valid_pct = pct(g.valid, g.molecules);
  m.unique_pct = pct(g.valid_digests.size(), g.valid);
  m.valency_w1 = w1_or_policy(g.valencies, r.valencies);
  m.atom_tv = total_variation(distribution(g.atom_types), distribution(r.atom_types));
  m.bond_tv = total_variation(distribution(g.bond_types), distribution(r.bond_types));
  m.bond_len_w1 = w1_or_policy(g.lengths, r.lengths);
  m.bond_ang_w1 = w1_or_policy(g.angles, r.angles);
  m.single_fragment_pct = pct(g.single_fragment, g.molecules);
  m.ring_size_tv = total_variation(distribution(g.ring_sizes), distribution(r.ring_sizes));
  m.atoms_per_mol_tv = total_variation(distribution(g.atoms_per_mol), distribution(r.atoms_per_mol));
  return m;
}

std::string to_json(const MetricsReport& m, int indent) {
  nlohmann::ordered_json j;
  auto put = [&j](const char* key, double v) {
    if (std::isfinite(v)) {
      j[key] = v;
    } else {
      j[key] = nullptr;
    }
  };
  put("stable_mol_pct", m.stable_mol_pct);
  put("stable_atom_pct", m.stable_atom_pct);
  put("valid_pct", m.valid_pct);
  put("unique_pct", m.unique_pct);
  put("valency_w1", m.valency_w1);
  put("atom_tv", m.atom_tv);
  put("bond_tv", m.bond_tv);
  put("bond_len_w1", m.bond_len_w1);
  put("bond_ang_w1", m.bond_ang_w1);
  put("single_fragment_pct", m.single_fragment_pct);
  put("ring_size_tv", m.ring_size_tv);
  put("atoms_per_mol_tv", m.atoms_per_mol_tv);
  return j.dump(indent);
}

std::string csv_header(const MetricsReport&) {
  return "stable_mol_pct,stable_atom_pct,valid_pct,unique_pct,valency_w1,atom_tv,bond_tv,bond_len_w1,"
         "bond_ang_w1,single_fragment_pct,ring_size_tv,atoms_per_mol_tv";
}

std::string csv_row(const MetricsReport& m) {
  const double values[] = {m.stable_mol_pct, m.stable_atom_pct, m.valid_pct,   m.unique_pct,
                           m.valency_w1,     m.atom_tv,         m.bond_tv,     m.bond_len_w1,
                           m.bond_ang_w1,    m.single_fragment_pct, m.ring_size_tv, m.atoms_per_mol_tv};
  std::string row;
  char buf[32];
  for (double v : values) {
    if (!row.empty()) row += ',';
    if (std::isfinite(v)) {
      std::snprintf(buf, sizeof buf, "%.9g", v);
      row += buf;
    } else {
      row += "nan";
    }
  }
  return row;
}

}  // namespace vecfield
