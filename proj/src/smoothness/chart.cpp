#include "smoothness/chart.hpp"

#include "polyalg/monomial.hpp"

namespace smoothness {

ChartTriple::ChartTriple(Ideal w, Ideal x, Poly q_in, int depth_in,
                         std::string id_in, std::string parent)
    : w_ideal(std::move(w)),
      x_ideal(std::move(x)),
      q(std::move(q_in)),
      depth(depth_in),
      id(std::move(id_in)),
      parent_id(std::move(parent)) {
  x_ideal.ring().require_compatible(w_ideal.ring());
  x_ideal.ring().require_compatible(q.ring());
  if (q.is_zero())
    throw std::invalid_argument("chart localizer q must be nonzero");
  if (depth < 0) throw std::invalid_argument("negative chart depth");
  const auto& wg = w_ideal.gens();
  const auto& xg = x_ideal.gens();
  if (wg.size() > xg.size())
    throw std::invalid_argument(
        "ambient ideal has more generators than the target");
  for (std::size_t i = 0; i < wg.size(); ++i)
    if (!(wg[i] == xg[i]))
      throw std::invalid_argument(
          "ambient generators must be a prefix of the target generators");
}

std::vector<ChartTriple> chart_decompose(const Ideal& I, ChartMode mode) {
  const Ring& R = I.ring();
  std::vector<ChartTriple> charts;

  if (mode == ChartMode::affine) {
    charts.emplace_back(Ideal(R, {}), I, polyalg::Poly::constant(R, 1), 0,
                        "c0", "");
    return charts;
  }

  for (const auto& g : I.gens())
    if (!g.is_homogeneous())
      throw std::invalid_argument(
          "projective/cone modes require homogeneous generators");

  if (mode == ChartMode::projective) {
    for (std::size_t i = 0; i < R.var_count(); ++i) {
      Ring chart_ring = R.without_variable(i);
      std::vector<Poly> gens;
      gens.reserve(I.gens().size());
      for (const auto& g : I.gens())
        gens.push_back(g.dehomogenized(chart_ring, i));
      charts.emplace_back(Ideal(chart_ring, {}),
                          Ideal(chart_ring, std::move(gens)),
                          Poly::constant(chart_ring, 1), 0,
                          "c" + std::to_string(i), "");
    }
    return charts;
  }

  // Cone mode: charts D(x_i) of the punctured cone, realized with one
  // shared Rabinowitsch variable.
  Ring ext = R.extended("t", R.order());
  Poly t = Poly::variable(ext, ext.var_count() - 1);
  Poly one = Poly::constant(ext, 1);
  for (std::size_t i = 0; i < R.var_count(); ++i) {
    std::vector<Poly> gens;
    gens.reserve(I.gens().size() + 1);
    for (const auto& g : I.gens()) gens.push_back(g.lifted(ext));
    gens.push_back(t * Poly::variable(ext, i) - one);
    charts.emplace_back(Ideal(ext, {}), Ideal(ext, std::move(gens)),
                        Poly::constant(ext, 1), 0, "c" + std::to_string(i),
                        "");
  }
  return charts;
}

}  // namespace smoothness
