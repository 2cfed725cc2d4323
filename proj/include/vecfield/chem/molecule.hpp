#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "vecfield/chem/element.hpp"
#include "vecfield/core/vec3.hpp"

namespace vecfield {

struct Atom {
  Element element;
  Vec3 position;  // Angstrom
};

struct Bond {
  std::size_t a;
  std::size_t b;
  int order = 1;

  friend bool operator==(const Bond&, const Bond&) = default;
};

using ElementCounts = std::array<int, kMaxElements>;

// Atoms with optional connectivity. Values are plain data; call validate()
// after building one by hand.
class Molecule {
 public:
  Molecule() = default;
  explicit Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds = {});

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Bond>& bonds() const { return bonds_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  void add_atom(Element e, const Vec3& position) { atoms_.push_back({e, position}); }
  void set_bonds(std::vector<Bond> bonds) { bonds_ = std::move(bonds); }
  Molecule without_bonds() const { return Molecule(atoms_); }

  ElementCounts element_counts() const;
  std::size_t count(Element e) const;
  bool contains(Element e) const { return count(e) > 0; }
  Vec3 centroid() const;

  // Bond-order sum per atom.
  std::vector<int> valences() const;

  // Rigid transform x -> R x + t applied to every atom; bonds are kept.
  Molecule transformed(const Mat3& rotation, const Vec3& translation) const;

  // Throws std::invalid_argument on duplicate coordinates, out-of-range or
  // self bonds, duplicate bonds, or bond orders outside {1, 2, 3}.
  void validate() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
};

}  // namespace vecfield
