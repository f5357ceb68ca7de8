// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dtou/model/policy.hpp"
#include "dtou/rdf/graph.hpp"

namespace dtou::model {

/// One DataPolicySet per :Data node, fully validated; throws ModelError on
/// missing fields, cardinality violations or dangling references.
std::vector<DataPolicySet> extract_data_policies(const rdf::Graph& g);

/// Exactly one :AppPolicy node expected.
AppPolicy extract_app_policy(const rdf::Graph& g);

/// Exactly one :UsageContext node expected. The app policy reference may be
/// carried by an inline :AppInfo node.
UsageContext extract_usage_context(const rdf::Graph& g);

/// Inverse of extract_data_policies for a single policy set.
rdf::Graph policy_to_graph(const DataPolicySet& p);

}  // namespace dtou::model
