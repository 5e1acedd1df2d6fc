#pragma once

#include "lwr/partition.hpp"

#include <map>
#include <optional>
#include <utility>

namespace lwr {

// Classical group of a form space: Sp(M) or O(M), M = dim V.
// O labels are merged: a partition with at most floor(M/2) rows stands for
// its SO(M) character, so lambda and lambda^sigma (and lambda^+/-) coincide.
enum class FormType { Sp, O };

using RepSum = std::map<Partition, Int>;

// Universal character [lam] specialised to the group: +-[mu] or zero.
std::optional<std::pair<int, Partition>> modify_universal(FormType t, const Partition& lam, int M);

// S_beta(C^M) restricted from GL(M)
RepSum littlewood_restrict(FormType t, const Partition& beta, int M);
// tensor product of two irreducibles
RepSum newell_littlewood(FormType t, const Partition& mu, const Partition& nu, int M);
// S_lam(X) for 0 -> A -> X -> B -> 0, associated graded: (alpha on A, beta on B)
std::map<std::pair<Partition, Partition>, Int> schur_of_extension(const Partition& lam, int dimA, int dimB);

// collapse a signed sum; throws std::logic_error on negative multiplicities
RepSum collapse(const std::map<Partition, Int>& virt);
Int total_dim(FormType t, const RepSum& s, int M);

}  // namespace lwr
