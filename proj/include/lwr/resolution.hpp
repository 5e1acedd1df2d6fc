#pragma once

#include "lwr/characters.hpp"
#include "lwr/modrules.hpp"

#include <map>
#include <string>
#include <vector>

namespace lwr {

using VSum = std::map<Weight, Int>;  // G(V) labels, signed when virtual

// Cohomology of E^nu_kappa (and E^{nu,nu'}_{kappa,kappa'} for complexes)
// computed constituent by constituent.
struct BundleCohomology {
  VSum euler;                       // signed sum, (-1)^deg per constituent
  std::map<int, VSum> constituents;  // Bott degree -> nonnegative counts
};

BundleCohomology bundle_cohomology(const CaseConfig& cfg, const Partition& kappa, const Partition& kappa2 = {});
// H^0 of a bundle with no higher cohomology; throws std::logic_error when the
// Euler sum is not an honest representation
VSum h0_E_bundle(const CaseConfig& cfg, const Partition& kappa, const Partition& kappa2 = {});

struct GenBott {
  bool defined = false;  // tau defined
  Partition tau, tau2;
  int iota = 0;
  VSum character;        // H^iota = H^0 of the tau bundle (empty when undefined)
  VSum euler;            // direct signed sum for the lambda bundle
  bool euler_matches = false;   // euler == (-1)^iota character (or 0 when undefined)
  bool concentrated = false;    // constituents allow all cohomology in degree iota
  std::vector<std::string> problems;
};

// lam indexes the bundle through its transpose, as in the resolution formula
GenBott generalized_bott(const CaseConfig& cfg, const Partition& lam, const Partition& lam2 = {});
ModResult case_modification(const CaseConfig& cfg, const Partition& lam, const Partition& lam2 = {});

struct BettiTable {
  int gen_degree = 0;
  std::map<std::pair<int, int>, Int> entries;      // (i, internal degree) -> rank
  std::map<std::pair<int, int>, LabelSum> reps;    // same keys
  std::vector<std::string> problems;               // consistency failures

  Int total(int i) const;
  int max_i() const;
  bool linear() const;
  std::string render() const;  // text layout of a Betti table
};

// all terms from lambda inside the box (finite resolution)
BettiTable a_betti_table(const CaseConfig& cfg, int max_i = 1 << 20);
LabelSum a_resolution_term(const CaseConfig& cfg, int i);

// polynomial ring case: M^k_nu(E,F) over Sym(E (x) F), dim F = nd
std::map<int, LabelSum> poly_det_resolution(int n, int nd, int k, const Partition& nu, int max_i);

// B side: dual of the Howe-side character, i.e. the linear resolution of M
LabelSum b_resolution_term(const CaseConfig& cfg, int i);
std::map<int, LabelSum> b_resolution(const CaseConfig& cfg, int max_i);
std::string render_reps(const CaseConfig& cfg, const LabelSum& s);

// Eisenbud's resolution over B built from the A-resolution F:
// G_i = sum_j F_{i-2j}(-2j) (x) D^j(quadric space), keyed by internal degree.
// The quadric-space labels are multiplied into the E (and F) labels.
std::map<int, LabelSum> eisenbud_terms(const CaseConfig& cfg, const BettiTable& a_table, int i);

struct CiShiftReport {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> mismatches;
};
// symplectic: Tor^S_i(N, k)_j* vs Tor^A_j(M, k)_{i+j}, for i + j <= max_sum
CiShiftReport ci_shift_check(const CaseConfig& cfg, int max_sum);

struct SymTerm {
  int t = 0;        // homological degree
  int twist = 0;    // B(-twist)
  int p = 0, q = 0, r = 0;  // Sym^p E* (x) Lambda^q V (x) Sym^r E
  std::string str() const;
};
std::vector<SymTerm> sym_complex_terms(int k);
// Sym^k_0 = Sym^k minus Sym^{k-2} shifted by 2; sign -1 marks the subtracted copy
std::vector<std::pair<SymTerm, int>> sym0_complex_terms(int k);

struct SupportVariety {
  std::string ambient;   // "Lambda^2 E", "Sym^2 E", "E (x) F*"
  std::string symmetry;  // "skew", "symmetric", "none"
  int rank_bound = 0;
};
SupportVariety support_variety(const CaseConfig& cfg);

}  // namespace lwr
