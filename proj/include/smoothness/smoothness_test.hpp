#pragma once

#include <functional>

#include "smoothness/chart.hpp"
#include "smoothness/poly_matrix.hpp"

namespace smoothness {

struct descent_error : std::runtime_error {
  explicit descent_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Scaled derivatives of the trailing generators of x_ideal relative to
/// the local system of parameters induced by the minor selection `sel`
/// of the Jacobian of w_ideal. Entry (i, j):
///
///   det(M) * d f_i / d x_j
///     - sum_{a,b} A[a][b] * d f_i / d x_{cols[a]} * d f_{rows[b]} / d x_j
///
/// with A the adjugate of M, i running over the generators of x_ideal
/// beyond the shared prefix and j over the variables not selected by
/// `sel`. Rows for generators lying in w_ideal vanish identically.
PolyMatrix relative_jacobian(const ChartTriple& triple,
                             const MinorSelection& sel);

/// True iff the locus of order >= 2 of x_ideal relative to w_ideal
/// misses D(q). A false answer certifies a singularity.
bool delta_check(const ChartTriple& triple);

/// One descent step: charts (w', x, q') covering V(x) \cap D(q), each
/// with an ambient complete intersection of codimension one more. First
/// tries a direct descent (a single generator works on all of D(q));
/// otherwise assembles a covering from (r+1) x (r+1) minors, greedily in
/// deterministic order, then prunes redundant minors.
/// Throws descent_error when no covering exists (violated preconditions
/// or exhausted budget).
std::vector<ChartTriple> descent(const ChartTriple& triple);

/// Relative Jacobian criterion on V(x) \cap D(q) inside V(w) \cap D(q).
bool embedded_jacobian(const ChartTriple& triple);

/// Codimension of V(x) \cap D(q) inside V(w) \cap D(q), computed from the
/// q-saturated ideals (localization at D(q) is exactly saturation by q).
/// nullopt when nothing of V(x) lives on D(q). Descended ambient ideals
/// may carry components outside D(q), so plain ideal dimensions would
/// overstate the codimension here.
std::optional<int> localized_codimension(const ChartTriple& triple);

/// Greedy single-removal pruning: returns a subset S of `minors`, in the
/// original order, with q still in sqrt(base + <S>). Duplicates are
/// always removed. Requires q in sqrt(base + <minors>).
std::vector<Poly> drop_redundant_minors(const std::vector<Poly>& minors,
                                        const Poly& q, const Ideal& base);

/// Called after each descent with the parent chart and its children;
/// used for chart-tree bookkeeping and post-hoc soundness checks.
using DescentObserver =
    std::function<void(const ChartTriple&, const std::vector<ChartTriple>&)>;

/// Sequential reference driver: dimension equality, codimension-limited
/// Jacobian, the order-2 check, and recursion over descent charts. The
/// Petri-net execution computes the same verdict for every input.
bool hybrid_smoothness_test(const ChartTriple& triple, int codim_limit,
                            const DescentObserver& observer = {});

}  // namespace smoothness
