#pragma once

#include "petrinet/net.hpp"

namespace petrinet {

/// The one-transition net i -> t -> o moving unit tokens; n tokens on i
/// expose n-fold data parallelism.
NetDef phi_net();

/// Fork/join net: s duplicates a numbered block to two branches (f, g)
/// whose results join at j. With `join_on_equal_num`, j carries the
/// condition ${l.num} :eq: ${r.num} and only matching blocks join.
NetDef psi_net(bool join_on_equal_num);

/// Reduction subnet with a bootstrap transition: the first token moves
/// from p to the sum place directly, every later one is added. Computes
/// p_0 + ... + p_{n-1} on place "s" without an initial state.
/// Needs one unit token on place "boot".
NetDef reduction_net_sequential();

/// Parallel reduction: tokens from p alternate onto two buffer places
/// (via a two-place cycle), pairs are summed and fed back to p. The
/// final sum ends on place "left". Needs one unit token on "cyc_u".
NetDef reduction_net_parallel();

}  // namespace petrinet
