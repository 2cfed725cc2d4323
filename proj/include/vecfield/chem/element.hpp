#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace vecfield {

// Elements in canonical channel order. A K-element set is always the first K
// entries, so K = 5 is {C, H, O, N, F} and K = 8 adds {S, Cl, Br}.
enum class Element : std::uint8_t { C = 0, H, O, N, F, S, Cl, Br };

inline constexpr std::size_t kMaxElements = 8;
inline constexpr std::size_t kQm9Elements = 5;
inline constexpr std::size_t kGeomElements = 8;

inline constexpr std::array<Element, kMaxElements> kAllElements{
    Element::C, Element::H, Element::O, Element::N,
    Element::F, Element::S, Element::Cl, Element::Br};

constexpr std::size_t index_of(Element e) { return static_cast<std::size_t>(e); }

std::string_view symbol(Element e);

// Cordero covalent radius in Angstrom.
double covalent_radius(Element e);

int max_valence(Element e);

// Allowed total bond orders for a stable atom (S has three).
std::span<const int> allowed_valences(Element e);

// Case-insensitive lookup ("cl", "CL" and "Cl" all map to Cl).
std::optional<Element> parse_element(std::string_view text);

// The first `k` elements of the canonical order.
std::span<const Element> element_set(std::size_t k);

}  // namespace vecfield
