#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groebner/ideal.hpp"

namespace smoothness {

using groebner::Ideal;
using polyalg::Poly;
using polyalg::Ring;

/// The unit of work of the smoothness test: an embedding
/// V(x_ideal) \cap D(q) inside V(w_ideal) \cap D(q), where the generators
/// of w_ideal are a prefix of those of x_ideal. The triple is expected to
/// satisfy the test's standing hypotheses (x_ideal equidimensional and
/// radical, w_ideal cutting out a smooth complete intersection on D(q));
/// those are documented preconditions, not verified here.
///
/// `id`/`parent_id` are deterministic bookkeeping: children of chart "c0"
/// are "c0.1", "c0.2", ... independent of execution order.
struct ChartTriple {
  Ideal w_ideal;
  Ideal x_ideal;
  Poly q;
  int depth = 0;
  std::string id;
  std::string parent_id;

  ChartTriple(Ideal w, Ideal x, Poly q_in, int depth_in = 0,
              std::string id_in = "c0", std::string parent = "");

  const Ring& ring() const { return x_ideal.ring(); }
  std::size_t ambient_gens() const { return w_ideal.gens().size(); }
  std::size_t target_gens() const { return x_ideal.gens().size(); }
};

/// Final answer of a smoothness check.
struct Verdict {
  bool smooth = false;
  std::optional<ChartTriple> witness;  // a chart certifying non-smoothness
  std::size_t charts_processed = 0;
  std::vector<std::string> warnings;
};

enum class ChartMode { affine, projective, cone };

/// Initial charts for an input ideal:
///  - affine:      the single triple (<0>, I, 1);
///  - projective:  one dehomogenized triple per variable (x_i = 1);
///  - cone:        one Rabinowitsch chart (<0>, I + <t*x_i - 1>, 1) per
///                 variable, covering the punctured affine cone.
/// projective/cone require homogeneous generators.
std::vector<ChartTriple> chart_decompose(const Ideal& I, ChartMode mode);

}  // namespace smoothness
