#include "vecfield/chem/xyz.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vecfield {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t s = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > s) out.push_back(line.substr(s, i - s));
  }
  return out;
}

bool is_blank(std::string_view line) { return tokens(line).empty(); }

double parse_double(std::string_view tok, std::size_t line) {
  double value = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError(line, "invalid coordinate '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Molecule parse_xyz(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || is_blank(lines[0])) throw ParseError(1, "missing atom count");
  const auto head = tokens(lines[0]);
  long long count = -1;
  {
    auto [ptr, ec] = std::from_chars(head[0].data(), head[0].data() + head[0].size(), count);
    if (ec != std::errc() || ptr != head[0].data() + head[0].size() || count < 0 || head.size() != 1) {
      throw ParseError(1, "malformed atom count '" + std::string(lines[0]) + "'");
    }
  }

  Molecule mol;
  std::size_t i = 2;  // zero-based index of first atom line
  for (long long n = 0; n < count; ++n, ++i) {
    const std::size_t lineno = i + 1;
    if (i >= lines.size() || is_blank(lines[i])) {
      throw ParseError(lineno, "expected " + std::to_string(count) + " atoms, found " + std::to_string(n));
    }
    const auto tok = tokens(lines[i]);
    if (tok.size() < 4) throw ParseError(lineno, "expected element and three coordinates");
    const auto element = parse_element(tok[0]);
    if (!element) throw ParseError(lineno, "unknown element symbol '" + std::string(tok[0]) + "'");
    mol.add_atom(*element, {parse_double(tok[1], lineno), parse_double(tok[2], lineno),
                            parse_double(tok[3], lineno)});
  }
  for (; i < lines.size(); ++i) {
    if (!is_blank(lines[i])) {
      throw ParseError(i + 1, "unexpected content after " + std::to_string(count) + " atoms");
    }
  }
  try {
    mol.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
  return mol;
}

std::string write_xyz(const Molecule& mol, std::string_view comment) {
  std::string out = std::to_string(mol.size()) + "\n";
  out.append(comment.begin(), comment.end());
  out += '\n';
  char buf[128];
  for (const Atom& a : mol.atoms()) {
    std::snprintf(buf, sizeof buf, "%-2s %.10f %.10f %.10f\n", std::string(symbol(a.element)).c_str(),
                  a.position.x, a.position.y, a.position.z);
    out += buf;
  }
  return out;
}

Molecule read_xyz_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_xyz(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

void write_xyz_file(const std::filesystem::path& path, const Molecule& mol, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_xyz(mol, comment);
}

std::vector<std::filesystem::path> list_xyz_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".xyz") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace vecfield
