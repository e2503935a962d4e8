#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "smoothness/chart.hpp"

namespace cli {

struct file_error : std::runtime_error {
  explicit file_error(const std::string& m) : std::runtime_error(m) {}
};

/// On-disk ideal description. Line-oriented and diffable:
///
///   # optional comments
///   char 103
///   vars x y z
///   mode projective            (optional)
///   assume equidimensional radical   (optional)
///   x^2 + y^2 - z^2            (one generator per line)
///
/// The assume flags record the user's assertion of the test's standing
/// hypotheses; they are echoed in reports, not verified.
struct IdealFile {
  std::uint32_t characteristic = 0;
  std::vector<std::string> variables;
  std::vector<std::string> generator_text;
  std::optional<smoothness::ChartMode> mode;
  bool assume_equidimensional = false;
  bool assume_radical = false;
  std::string source;  // file name for diagnostics

  static IdealFile parse(std::istream& in, const std::string& name);
  static IdealFile load(const std::string& path);

  polyalg::Ring ring() const;
  groebner::Ideal ideal(const polyalg::Ring& ring) const;
};

std::optional<smoothness::ChartMode> parse_mode(const std::string& text);
const char* mode_name(smoothness::ChartMode mode);

}  // namespace cli
