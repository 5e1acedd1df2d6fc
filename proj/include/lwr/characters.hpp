#pragma once

#include "lwr/branching.hpp"
#include "lwr/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace lwr {

enum class Case { Sympl, Orth, Complexes };

// Parameters of one Littlewood variety and one module on it.
// Complexes: dim V = n + m + d = a + b with a >= n, b >= m; nu has at most
// a - n parts bounded by k, nuprime at most b - m parts bounded by l.
struct CaseConfig {
  Case kind = Case::Sympl;
  int n = 0;
  int d = 0;
  int dprime = 0;  // orthogonal only
  int m = 0;       // complexes only
  int a = 0, b = 0;
  int k = 0, l = 0;
  Partition nu, nuprime;

  int dimV() const;
  // rank of the form group on V (n+d), or dim V for complexes
  int half() const { return kind == Case::Complexes ? dimV() : n + d; }
  FormType form() const { return kind == Case::Sympl ? FormType::Sp : FormType::O; }
  void validate() const;  // throws DomainError naming the violated constraint
  std::string describe() const;
  // generator degree of M: nk (+ m l)
  int gen_degree() const { return n * k + (kind == Case::Complexes ? m * l : 0); }
};

CaseConfig sympl_config(int n, int d, int k, Partition nu);
CaseConfig orth_config(int n, int d, int dprime, int k, Partition nu);
CaseConfig complexes_config(int n, int m, int d, int a, int k, int l, Partition nu, Partition nuprime);

// E label (GL(n)), V label (Sp/O partition padded to n+d, or GL(dim V) weight),
// F label (GL(m), complexes only)
struct Label {
  Weight E, V, F;
  auto operator<=>(const Label&) const = default;
  bool operator==(const Label&) const = default;
};

using LabelSum = std::map<Label, Int>;
using Graded = std::map<int, LabelSum>;  // degree -> representation sum

Int label_dim(const CaseConfig& cfg, const Label& l);
Int sum_dim(const CaseConfig& cfg, const LabelSum& s);
// V-label dimension alone
Int v_dim(const CaseConfig& cfg, const Weight& v);

// (olnu) for complexes: (k - nu_{a-n}, ..., k - nu_1, nu'_1 - l, ..., nu'_{b-m} - l)
Weight ol_nu(const CaseConfig& cfg);

Graded coord_ring_character(const CaseConfig& cfg, int max_deg);
// keyed by internal degree, starting at gen_degree()
Graded module_character(const CaseConfig& cfg, int max_deg);
// M^k_nu(E,F) over Sym(E (x) F), dim F = n + d; key = internal degree
Graded poly_det_module_character(int n, int nd, int k, const Partition& nu, int max_deg);

using Series = std::vector<Int>;
int quadric_count(const CaseConfig& cfg);
int linear_count(const CaseConfig& cfg);
Series hilbert_series_B(const CaseConfig& cfg, int max_deg);
Series hilbert_series_koszul_dual(const CaseConfig& cfg, int max_deg);
Series series_mul(const Series& a, const Series& b, int max_deg);
Series series_negate_var(const Series& a);  // f(t) -> f(-t)

std::string label_str(const Label& l);

}  // namespace lwr
