#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vecfield/chem/molecule.hpp"

namespace vecfield {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
      : std::runtime_error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " +
                           detail),
        line_(line),
        detail_(detail) {}
  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

// Single-frame XYZ: atom count, comment line, then "El x y z" per atom.
// Extra columns after the coordinates are ignored. Throws ParseError.
Molecule parse_xyz(std::string_view text);

std::string write_xyz(const Molecule& mol, std::string_view comment = {});

Molecule read_xyz_file(const std::filesystem::path& path);
void write_xyz_file(const std::filesystem::path& path, const Molecule& mol,
                    std::string_view comment = {});

// All *.xyz files of a directory, sorted by file name.
std::vector<std::filesystem::path> list_xyz_files(const std::filesystem::path& dir);

}  // namespace vecfield
