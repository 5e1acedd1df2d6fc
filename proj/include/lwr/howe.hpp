#pragma once

#include "lwr/characters.hpp"
#include "lwr/modrules.hpp"

#include <utility>
#include <vector>

namespace lwr {

// Labels on the dual side use E* (and F) weights: Label.E is the E* label
// including the (det E*)^k twist, Label.F the F label including (det F)^l.

// lambda admissible for the given case (lam2 only for complexes)
bool howe_admissible(const CaseConfig& cfg, const Partition& lam, const Partition& lam2 = {});

// alpha (alpha') with tau(alpha) = lam and iota(alpha) = i, alpha_{n+1} <= n+d;
// enumerated up to |alpha| (+|alpha'|) <= max_size
std::vector<std::pair<Partition, Partition>> u_homology_character(const CaseConfig& cfg, const Partition& lam,
                                                                  const Partition& lam2, int i, int max_size);

struct GHomology {
  LabelSum h0;
  LabelSum h1;
  int h1_degree = 0;  // degree of the relations relative to the generators
  std::vector<int> h1_degrees;  // per summand (complexes has two)
  bool linear_presentation = false;
};
GHomology g_homology_h0_h1(const CaseConfig& cfg, const Partition& lam, const Partition& lam2 = {});

// Graded character of N^k_lambda, degrees 0..max_deg (generators at 0)
Graded n_module_character(const CaseConfig& cfg, const Partition& lam, const Partition& lam2, int max_deg);

// N attached to the module M^k_nu of cfg: lam = nu^T (complexes: (nu'^T, nu^T))
std::pair<Partition, Partition> howe_partner(const CaseConfig& cfg);

// weights of S_alpha(C^N) as content vectors
std::map<Weight, Int> gl_weights(const Partition& alpha, int N);

}  // namespace lwr
