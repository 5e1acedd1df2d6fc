#include "lwr/bott.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace lwr {

BottOutcome bott_gl(const Weight& a) {
  int N = static_cast<int>(a.size());
  Weight v(N);
  for (int i = 0; i < N; ++i) v[i] = a[i] + (N - 1 - i);
  BottOutcome out;
  int inv = 0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      if (v[i] == v[j]) return out;
      if (v[i] < v[j]) ++inv;
    }
  std::sort(v.begin(), v.end(), std::greater<>());
  for (int i = 0; i < N; ++i) v[i] -= N - 1 - i;
  out.vanishes = false;
  out.degree = inv;
  out.dominant = v;
  return out;
}

namespace {

// length of the signed permutation making v dominant: number of positive
// roots pairing negatively with v. short_roots adds e_i (B) / 2e_i (C).
int signed_length(const Weight& v, bool short_roots) {
  int len = 0, m = static_cast<int>(v.size());
  for (int i = 0; i < m; ++i) {
    if (short_roots && v[i] < 0) ++len;
    for (int j = i + 1; j < m; ++j) {
      if (v[i] < v[j]) ++len;
      if (v[i] + v[j] < 0) ++len;
    }
  }
  return len;
}

bool repeated_abs(const Weight& v) {
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (std::abs(v[i]) == std::abs(v[j])) return true;
  return false;
}

}  // namespace

BottOutcome bott_type_c(const Weight& a) {
  int m = static_cast<int>(a.size());
  Weight v(m);
  for (int i = 0; i < m; ++i) v[i] = a[i] + (m - i);
  BottOutcome out;
  for (int x : v)
    if (x == 0) return out;
  if (repeated_abs(v)) return out;
  out.vanishes = false;
  out.degree = signed_length(v, true);
  Weight s(m);
  for (int i = 0; i < m; ++i) s[i] = std::abs(v[i]);
  std::sort(s.begin(), s.end(), std::greater<>());
  for (int i = 0; i < m; ++i) s[i] -= m - i;
  out.dominant = s;
  return out;
}

BottOutcome bott_type_bd(const Weight& a, int M) {
  int m = M / 2;
  if (static_cast<int>(a.size()) != m) throw DomainError("weight length must be floor(M/2)");
  BottOutcome out;
  // doubled: rho = (2m-1, ..., 3, 1) for odd M, (2m-2, ..., 2, 0) for even M
  Weight v(m);
  for (int i = 0; i < m; ++i) v[i] = 2 * a[i] + (M % 2 ? 2 * (m - i) - 1 : 2 * (m - 1 - i));
  if (M % 2)
    for (int x : v)
      if (x == 0) return out;
  if (repeated_abs(v)) return out;
  out.vanishes = false;
  out.degree = signed_length(v, M % 2 == 1);
  int neg = 0;
  bool has_zero = false;
  for (int x : v) {
    if (x < 0) ++neg;
    if (x == 0) has_zero = true;
  }
  Weight s(m);
  for (int i = 0; i < m; ++i) s[i] = std::abs(v[i]);
  std::sort(s.begin(), s.end(), std::greater<>());
  // type D only reaches even sign changes
  if (M % 2 == 0 && m > 0 && neg % 2 == 1 && !has_zero) s[m - 1] = -s[m - 1];
  for (int i = 0; i < m; ++i) s[i] = (s[i] - (M % 2 ? 2 * (m - i) - 1 : 2 * (m - 1 - i))) / 2;
  out.dominant = s;
  return out;
}

std::vector<KostantTerm> kostant_up(const Partition& lam, int n, int m, int i) {
  if (lam.row(n + 1) > m) throw DomainError("S_lambda(E|F) vanishes: lambda_{n+1} > dim F");
  std::vector<KostantTerm> out;
  if (i < 0) return out;
  Partition t = lam.transpose();
  int L = std::max(t.length(), m) + i + m + 1;
  // x_j = t_j - j, strictly decreasing; the first block takes indices s_1<...<s_m
  auto x = [&](int j) { return t.row(j) - j; };
  std::vector<int> S;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (static_cast<int>(S.size()) == m) {
      if (left) return;
      KostantTerm term;
      for (int k = 1; k <= m; ++k) term.beta.push_back(x(S[k - 1]) + k);
      std::vector<int> g;
      int pos = m;
      for (int j = 1; j <= L; ++j) {
        if (std::find(S.begin(), S.end(), j) != S.end()) continue;
        ++pos;
        int val = x(j) + pos;
        if (val < 0) return;
        g.push_back(val);
      }
      Partition gamma(g);
      if (gamma.row(1) > n) return;
      term.gamma = gamma;
      out.push_back(std::move(term));
      return;
    }
    int k = static_cast<int>(S.size()) + 1;
    for (int s = start; s - k <= left && s <= L; ++s) {
      S.push_back(s);
      rec(s + 1, left - (s - k));
      S.pop_back();
    }
  };
  rec(1, i);
  return out;
}

}  // namespace lwr
