#include "vecfield/chem/element.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace vecfield {

namespace {

struct ElementInfo {
  std::string_view symbol;
  double radius;
  int max_valence;
};

constexpr std::array<ElementInfo, kMaxElements> kInfo{{
    {"C", 0.76, 4},
    {"H", 0.31, 1},
    {"O", 0.66, 2},
    {"N", 0.71, 3},
    {"F", 0.57, 1},
    {"S", 1.05, 6},
    {"Cl", 1.02, 1},
    {"Br", 1.20, 1},
}};

constexpr std::array<int, 1> kOne{1};
constexpr std::array<int, 1> kTwo{2};
constexpr std::array<int, 1> kThree{3};
constexpr std::array<int, 1> kFour{4};
constexpr std::array<int, 3> kSulfur{2, 4, 6};

}  // namespace

std::string_view symbol(Element e) { return kInfo[index_of(e)].symbol; }

double covalent_radius(Element e) { return kInfo[index_of(e)].radius; }

int max_valence(Element e) { return kInfo[index_of(e)].max_valence; }

std::span<const int> allowed_valences(Element e) {
  switch (e) {
    case Element::C:
      return kFour;
    case Element::N:
      return kThree;
    case Element::O:
      return kTwo;
    case Element::S:
      return kSulfur;
    default:
      return kOne;
  }
}

std::optional<Element> parse_element(std::string_view text) {
  if (text.empty() || text.size() > 2) return std::nullopt;
  std::string norm;
  norm += static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (text.size() == 2) norm += static_cast<char>(std::tolower(static_cast<unsigned char>(text[1])));
  for (Element e : kAllElements) {
    if (symbol(e) == norm) return e;
  }
  return std::nullopt;
}

std::span<const Element> element_set(std::size_t k) {
  if (k == 0 || k > kMaxElements) {
    throw std::invalid_argument("element set size must be in [1, 8], got " + std::to_string(k));
  }
  return std::span<const Element>(kAllElements.data(), k);
}

}  // namespace vecfield
