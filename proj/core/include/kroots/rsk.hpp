#pragma once

#include "kroots/permutation.hpp"
#include "kroots/report.hpp"
#include "kroots/tableau.hpp"

namespace kroots {

struct RskPair {
  StandardTableau insertion;  // P
  StandardTableau recording;  // Q
};

/// Robinson-Schensted row insertion of p(1), ..., p(n). Rows are bumped
/// upward from the base row.
RskPair rsk(const Permutation& p);

/// For lambda = (2^k, 1^{n-2k}): each T in SYT(nu) has exactly m(nu, lambda)
/// preimages in C_lambda under pi -> P(pi). One row per tableau, class = nu.
/// Throws std::invalid_argument unless 0 <= 2k <= n.
Report verify_rsk_remark(int n, int k);

}  // namespace kroots
