#pragma once

#include "lwr/partition.hpp"

namespace lwr {

struct BottOutcome {
  bool vanishes = true;
  int degree = 0;
  Weight dominant;
};

// weight on a partial flag variety of GL(N) (concatenated Levi weights)
BottOutcome bott_gl(const Weight& a);
// type C: isotropic flags in a symplectic space of dim 2m, a has length m
BottOutcome bott_type_c(const Weight& a);
// types B (M odd) and D (M even) for SO(M), a has length floor(M/2).
// For D the dominant weight may end negative.
BottOutcome bott_type_bd(const Weight& a, int M);

// Homology of u = E (x) F* on S_lam(E|F), dim E = n, dim F = m, degree i:
// terms S_beta(F) (x) S_{gamma^T}(E), gamma_1 <= n
struct KostantTerm {
  Weight beta;       // m entries
  Partition gamma;   // E label is gamma^T
};
std::vector<KostantTerm> kostant_up(const Partition& lam, int n, int m, int i);

}  // namespace lwr
