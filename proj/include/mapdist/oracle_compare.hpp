#pragma once

#include "mapdist/oracle.hpp"

#include <string>
#include <vector>

namespace mapdist {

struct OracleComparison {
  bool pass = true;
  long entries = 0;
  std::vector<std::string> mismatches;
};

// Every bi- and tri-pointed oracle entry up to max_edges against [g^n] of the two- and
// three-point series, for general and bipartite maps, over Q[z] and at z = 1.
// Keys missing on one side count as zero.
OracleComparison compare_oracle_with_series(int max_edges);

}  // namespace mapdist
