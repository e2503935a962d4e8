#include "cli/ideal_file.hpp"

#include <fstream>
#include <sstream>

#include "polyalg/parser.hpp"

namespace cli {

std::optional<smoothness::ChartMode> parse_mode(const std::string& text) {
  if (text == "affine") return smoothness::ChartMode::affine;
  if (text == "projective") return smoothness::ChartMode::projective;
  if (text == "cone") return smoothness::ChartMode::cone;
  return std::nullopt;
}

const char* mode_name(smoothness::ChartMode mode) {
  switch (mode) {
    case smoothness::ChartMode::affine:
      return "affine";
    case smoothness::ChartMode::projective:
      return "projective";
    case smoothness::ChartMode::cone:
      return "cone";
  }
  return "?";
}

IdealFile IdealFile::parse(std::istream& in, const std::string& name) {
  IdealFile f;
  f.source = name;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw file_error(name + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    auto hash = trimmed.find('#');
    if (hash != std::string::npos) trimmed.erase(hash);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(
                                   trimmed.back())))
      trimmed.pop_back();
    std::size_t start = 0;
    while (start < trimmed.size() &&
           std::isspace(static_cast<unsigned char>(trimmed[start])))
      ++start;
    trimmed.erase(0, start);
    if (trimmed.empty()) continue;

    std::istringstream words(trimmed);
    std::string head;
    words >> head;
    if (head == "char") {
      long long p = 0;
      if (!(words >> p) || p <= 0) fail("expected 'char <prime>'");
      f.characteristic = static_cast<std::uint32_t>(p);
    } else if (head == "vars") {
      std::string v;
      while (words >> v) f.variables.push_back(v);
      if (f.variables.empty()) fail("expected 'vars <name>...'");
    } else if (head == "mode") {
      std::string m;
      words >> m;
      auto mode = parse_mode(m);
      if (!mode) fail("unknown mode '" + m + "'");
      f.mode = mode;
    } else if (head == "assume") {
      std::string a;
      while (words >> a) {
        if (a == "equidimensional")
          f.assume_equidimensional = true;
        else if (a == "radical")
          f.assume_radical = true;
        else
          fail("unknown assumption '" + a + "'");
      }
    } else {
      if (f.characteristic == 0 || f.variables.empty())
        fail("generators must come after 'char' and 'vars'");
      f.generator_text.push_back(trimmed);
    }
  }
  if (f.characteristic == 0) throw file_error(name + ": missing 'char' line");
  if (f.variables.empty()) throw file_error(name + ": missing 'vars' line");
  if (f.generator_text.empty())
    throw file_error(name + ": no generators given");
  return f;
}

IdealFile IdealFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw file_error("cannot open ideal file: " + path);
  return parse(in, path);
}

polyalg::Ring IdealFile::ring() const {
  try {
    return polyalg::Ring(polyalg::PrimeField(characteristic), variables);
  } catch (const std::invalid_argument& e) {
    throw file_error(source + ": " + e.what());
  }
}

groebner::Ideal IdealFile::ideal(const polyalg::Ring& ring) const {
  std::vector<polyalg::Poly> gens;
  gens.reserve(generator_text.size());
  for (const auto& text : generator_text) {
    try {
      gens.push_back(polyalg::poly_parse(text, ring));
    } catch (const polyalg::parse_error& e) {
      throw file_error(source + ": in generator '" + text + "': " + e.what());
    }
  }
  return groebner::Ideal(ring, std::move(gens));
}

}  // namespace cli
