#include "vecfield/corpus/generator.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

#include "vecfield/core/rng.hpp"

namespace vecfield {

namespace {

constexpr int kPlacementTries = 200;
constexpr int kMoleculeTries = 10000;

double heavy_weight(Element e) {
  switch (e) {
    case Element::C: return 0.70;
    case Element::O: return 0.15;
    case Element::N: return 0.12;
    case Element::F: return 0.03;
    case Element::S: return 0.03;
    case Element::Cl: return 0.02;
    case Element::Br: return 0.01;
    case Element::H: return 0.0;
  }
  return 0.0;
}

int target_valence(Element e) { return allowed_valences(e).front(); }

class Builder {
 public:
  Builder(const CorpusSpec& spec, Rng& rng) : spec_(spec), rng_(rng) {}

  bool fits(Element e, const Vec3& p, std::size_t partner) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      const double d = distance(atoms_[i].position, p);
      if (d < spec_.min_distance) return false;
      if (atoms_[i].element == e && d < spec_.same_element_min_distance) return false;
      const double cutoff =
          spec_.bond_tolerance * (covalent_radius(e) + covalent_radius(atoms_[i].element)) + spec_.nonbonded_margin;
      if (i != partner && d <= cutoff) return false;
    }
    return norm(p) <= spec_.max_radius;
  }

  // Attaches a new atom of element e to `partner`; false if no position fits.
  bool attach(Element e, std::size_t partner) {
    const Element pe = atoms_[partner].element;
    const double base = std::max(spec_.min_distance, covalent_radius(e) + covalent_radius(pe));
    // Aim away from the partner's existing bonds, with jitter growing over
    // the attempts; a free random direction when there is nothing to avoid.
    Vec3 away;
    for (const Bond& bond : bonds_) {
      if (bond.a != partner && bond.b != partner) continue;
      const std::size_t other = bond.a == partner ? bond.b : bond.a;
      const Vec3 u = atoms_[other].position - atoms_[partner].position;
      away -= u * (1.0 / norm(u));
    }
    const bool aimed = norm(away) > 1e-6;
    if (aimed) away = away * (1.0 / norm(away));
    for (int attempt = 0; attempt < kPlacementTries; ++attempt) {
      Vec3 dir = rng_.direction();
      if (aimed) {
        const double jitter = 0.2 + 1.5 * attempt / kPlacementTries;
        dir = away + dir * jitter;
        dir = dir * (1.0 / norm(dir));
      }
      const Vec3 p = atoms_[partner].position + dir * (base * rng_.uniform(1.0, 1.05));
      if (!fits(e, p, partner)) continue;
      atoms_.push_back({e, p});
      bonds_.push_back({partner, atoms_.size() - 1, 1});
      ++degree_[partner];
      degree_.push_back(1);
      return true;
    }
    return false;
  }

  void seed_atom(Element e) {
    atoms_.push_back({e, Vec3{}});
    degree_.push_back(0);
  }

  int free_valence(std::size_t i) const { return target_valence(atoms_[i].element) - degree_[i]; }
  std::size_t size() const { return atoms_.size(); }

  Molecule finish() const {
    Vec3 c;
    for (const Atom& a : atoms_) c += a.position;
    c = c * (1.0 / static_cast<double>(atoms_.size()));
    std::vector<Atom> atoms = atoms_;
    for (Atom& a : atoms) a.position -= c;
    return Molecule(std::move(atoms), bonds_);
  }

 private:
  const CorpusSpec& spec_;
  Rng& rng_;
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<int> degree_;
};

std::optional<Molecule> try_build(const CorpusSpec& spec, Rng& rng) {
  std::vector<Element> heavy;
  std::vector<double> weights;
  for (Element e : element_set(spec.element_count)) {
    if (heavy_weight(e) > 0.0) {
      heavy.push_back(e);
      weights.push_back(heavy_weight(e));
    }
  }
  std::discrete_distribution<std::size_t> pick_element(weights.begin(), weights.end());
  // A saturated tree of h heavy atoms carries at most 3h + 2 atoms in total,
  // so smaller skeletons can never reach min_atoms.
  const int lowest = std::clamp(spec.min_atoms / 3, 1, spec.max_heavy);
  const int heavy_count =
      lowest + static_cast<int>(rng.next() % static_cast<std::uint64_t>(spec.max_heavy - lowest + 1));

  Builder b(spec, rng);
  b.seed_atom(Element::C);
  for (int n = 1; n < heavy_count; ++n) {
    const Element e = heavy[pick_element(rng.engine())];
    // Partners need a free bond for the new atom and, unless e is
    // monovalent, the new atom needs one too.
    std::vector<std::size_t> partners;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b.free_valence(i) >= 1) partners.push_back(i);
    }
    std::shuffle(partners.begin(), partners.end(), rng.engine());
    bool placed = false;
    for (std::size_t partner : partners) {
      if ((placed = b.attach(e, partner))) break;
    }
    if (!placed) return std::nullopt;
  }
  const std::size_t heavy_atoms = b.size();
  for (std::size_t i = 0; i < heavy_atoms; ++i) {
    while (b.free_valence(i) > 0) {
      if (!b.attach(Element::H, i)) return std::nullopt;
    }
  }
  const int n = static_cast<int>(b.size());
  if (n < spec.min_atoms || n > spec.max_atoms) return std::nullopt;
  Molecule mol = b.finish();
  for (const Atom& a : mol.atoms()) {
    if (norm(a.position) > spec.max_radius) return std::nullopt;
  }
  return mol;
}

}  // namespace

void CorpusSpec::validate() const {
  if (min_atoms < 1 || max_atoms < min_atoms) throw std::invalid_argument("corpus: bad atom-count range");
  if (max_heavy < 1) throw std::invalid_argument("corpus: max_heavy must be >= 1");
  if (element_count < 2) throw std::invalid_argument("corpus: element set needs H and one heavy element");
  if (!(min_distance > 0.0) || !(max_radius > 0.0)) throw std::invalid_argument("corpus: bad distances");
}

Molecule generate_molecule(const CorpusSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  for (int attempt = 0; attempt < kMoleculeTries; ++attempt) {
    if (auto mol = try_build(spec, rng)) return *std::move(mol);
  }
  throw std::runtime_error("corpus: no molecule satisfies the constraints; relax them");
}

std::vector<Molecule> generate_corpus(std::size_t count, const CorpusSpec& spec, std::uint64_t seed) {
  std::vector<Molecule> corpus(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
  spec.validate();
  std::vector<char> failed(count, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      corpus[i] = generate_molecule(spec, hash_combine(seed, i));
    } catch (const std::runtime_error&) {
      failed[i] = 1;
    }
  }
  if (std::find(failed.begin(), failed.end(), 1) != failed.end()) {
    throw std::runtime_error("corpus: no molecule satisfies the constraints; relax them");
  }
  return corpus;
}

}  // namespace vecfield
