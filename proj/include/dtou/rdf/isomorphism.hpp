// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dtou/rdf/graph.hpp"

namespace dtou::rdf {

/// Graph equality up to blank-node renaming. Signature refinement plus
/// bounded backtracking; sized for the small blank neighborhoods policy
/// documents produce, not for adversarial graphs.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace dtou::rdf
