#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lwr {

using Int = boost::multiprecision::cpp_int;
using Weight = std::vector<int>;

// bad input from a caller (exit code 1 in the cli)
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "6,5,5,3" ; "" is the empty partition
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return p_; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const;
  bool empty() const { return p_.empty(); }
  // 1-based, zero past the end
  int row(int i) const { return (i >= 1 && i <= length()) ? p_[i - 1] : 0; }

  Partition transpose() const;
  bool contains(const Partition& mu) const;
  bool fits(int rows, int cols) const { return length() <= rows && row(1) <= cols; }
  // (rows x cols) minus this, rotated: (cols - p_rows, ..., cols - p_1)
  Partition complement(int rows, int cols) const;
  // padded weight of given length
  Weight weight(int len) const;

  std::string str() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> p_;
};

Partition rectangle(int rows, int cols);
// componentwise sum of a rectangle and a partition: (k^n) + lambda
Partition add_rect(int rows, int cols, const Partition& lam);
// all partitions inside rows x cols (optionally of fixed size)
std::vector<Partition> partitions_in_box(int rows, int cols, int size = -1);
// all partitions of size s with at most maxlen rows
std::vector<Partition> partitions_of(int s, int maxlen = 1 << 20);

bool is_dominant(const Weight& w);
std::string weight_str(const Weight& w);
Weight parse_weight(std::string_view text);

// Littlewood-Richardson
Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);
// s_lam * s_mu, keeping nu with at most maxlen rows
std::map<Partition, Int> lr_product(const Partition& lam, const Partition& mu, int maxlen = 1 << 20);
// skew s_{nu/lam} = sum_mu c^nu_{lam mu} s_mu
std::map<Partition, Int> lr_skew(const Partition& nu, const Partition& lam);
// GL(N) tensor product of arbitrary dominant integer weights
std::map<Weight, Int> gl_tensor(const Weight& a, const Weight& b, int N);
void clear_lr_cache();

// dimensions
Int dim_gl(const Weight& w, int N);
Int dim_gl(const Partition& p, int N);
Int dim_sp(const Partition& p, int m);      // Sp(2m)
Int dim_so(const Weight& w, int M);          // SO(M), D-type weights may end negative
// O(M) label: admissible partition, lengths past M/2 are read through sigma.
// A label with exactly M/2 rows (M even) is the sum of both SO(M) pieces.
Int dim_o(const Partition& p, int M);

enum class Group { GL, Sp, O };
Int dim_classical(Group g, int M, const Partition& p);

// Cauchy identities: pairs (alpha, alpha) and (alpha, alpha^T) with length caps
std::vector<std::pair<Partition, Partition>> cauchy_sym(int na, int nb, int degree);
std::vector<std::pair<Partition, Partition>> cauchy_ext(int na, int nb, int degree);

// sigma on O(M) labels: first column c -> M - c
Partition o_sigma(const Partition& p, int M);
bool o_admissible(const Partition& p, int M);

}  // namespace lwr
