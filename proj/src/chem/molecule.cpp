#include "vecfield/chem/molecule.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace vecfield {

Molecule::Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds)
    : atoms_(std::move(atoms)), bonds_(std::move(bonds)) {}

ElementCounts Molecule::element_counts() const {
  ElementCounts counts{};
  for (const Atom& a : atoms_) ++counts[index_of(a.element)];
  return counts;
}

std::size_t Molecule::count(Element e) const {
  return static_cast<std::size_t>(
      std::count_if(atoms_.begin(), atoms_.end(), [e](const Atom& a) { return a.element == e; }));
}

Vec3 Molecule::centroid() const {
  Vec3 c;
  if (atoms_.empty()) return c;
  for (const Atom& a : atoms_) c += a.position;
  return c * (1.0 / static_cast<double>(atoms_.size()));
}

std::vector<int> Molecule::valences() const {
  std::vector<int> v(atoms_.size(), 0);
  for (const Bond& b : bonds_) {
    v[b.a] += b.order;
    v[b.b] += b.order;
  }
  return v;
}

Molecule Molecule::transformed(const Mat3& rotation, const Vec3& translation) const {
  Molecule out = *this;
  for (Atom& a : out.atoms_) a.position = rotation * a.position + translation;
  return out;
}

void Molecule::validate() const {
  std::set<std::tuple<double, double, double>> seen;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Vec3& p = atoms_[i].position;
    if (!seen.emplace(p.x, p.y, p.z).second) {
      throw std::invalid_argument("atom " + std::to_string(i) + " duplicates the coordinates of another atom");
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const Bond& b : bonds_) {
    if (b.a >= atoms_.size() || b.b >= atoms_.size()) {
      throw std::invalid_argument("bond index out of range");
    }
    if (b.a == b.b) throw std::invalid_argument("self bond on atom " + std::to_string(b.a));
    if (b.order < 1 || b.order > 3) throw std::invalid_argument("bond order must be 1, 2 or 3");
    if (!pairs.emplace(std::min(b.a, b.b), std::max(b.a, b.b)).second) {
      throw std::invalid_argument("duplicate bond " + std::to_string(b.a) + "-" + std::to_string(b.b));
    }
  }
}

}  // namespace vecfield
