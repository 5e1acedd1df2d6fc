#pragma once

#include "lwr/partition.hpp"

#include <optional>
#include <vector>

namespace lwr {

struct StripRemoval {
  Partition rest;
  int columns = 0;                             // c(R)
  std::vector<std::pair<int, int>> boxes;     // 1-based (row, col), walk order
};

// Border strip of the given length starting at the first box of the last row.
// nullopt when the walk runs out of boxes or the remainder is not a partition.
std::optional<StripRemoval> border_strip_remove(const Partition& lam, int length);

struct ModStep {
  Partition before;
  int length = 0;
  int columns = 0;
};

struct ModResult {
  bool defined = false;
  Partition tau, tau2;  // tau2 only for the two-partition rule
  int iota = 0;
  std::vector<ModStep> trace;
};

ModResult mod_c(const Partition& lam, int k);     // strips of length 2l-2k-2
ModResult mod_d(const Partition& lam, int k);     // strips of length 2l-2k
ModResult mod_spin(const Partition& lam, int k);  // strips of length 2l-2k-1
ModResult mod_a(const Partition& lam, const Partition& lam2, int k);

}  // namespace lwr
