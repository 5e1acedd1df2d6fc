#include "lwr/characters.hpp"

#include <algorithm>

namespace lwr {

int CaseConfig::dimV() const {
  switch (kind) {
    case Case::Sympl: return 2 * n + 2 * d;
    case Case::Orth: return 2 * n + 2 * d + dprime;
    case Case::Complexes: return n + m + d;
  }
  return 0;
}

void CaseConfig::validate() const {
  auto fail = [](const std::string& s) { throw DomainError(s); };
  if (n < 0 || d < 0 || k < 0 || l < 0 || m < 0) fail("dimensions and twists must be nonnegative");
  if (kind == Case::Complexes) {
    if (a + b != dimV()) fail("complexes: need a + b = dim V = n + m + d");
    if (a < n || b < m) fail("complexes: need a >= n and b >= m");
    if (!nu.fits(a - n, k)) fail("complexes: nu must fit in (a-n) x k");
    if (!nuprime.fits(b - m, l)) fail("complexes: nu' must fit in (b-m) x l");
    return;
  }
  if (kind == Case::Orth && dprime != 0 && dprime != 1) fail("orthogonal: d' must be 0 or 1");
  if (!nu.fits(d, k)) fail("nu must fit in the d x k rectangle");
}

std::string CaseConfig::describe() const {
  std::string s;
  switch (kind) {
    case Case::Sympl: s = "sympl"; break;
    case Case::Orth: s = "orth"; break;
    case Case::Complexes: s = "complexes"; break;
  }
  s += " n=" + std::to_string(n) + " dimV=" + std::to_string(dimV()) + " k=" + std::to_string(k);
  if (kind == Case::Orth) s += " dprime=" + std::to_string(dprime);
  if (kind == Case::Complexes)
    s += " m=" + std::to_string(m) + " a=" + std::to_string(a) + " b=" + std::to_string(b) + " l=" + std::to_string(l) +
         " nuprime=(" + nuprime.str() + ")";
  s += " nu=(" + nu.str() + ")";
  return s;
}

CaseConfig sympl_config(int n, int d, int k, Partition nu) {
  CaseConfig c;
  c.kind = Case::Sympl;
  c.n = n;
  c.d = d;
  c.k = k;
  c.nu = std::move(nu);
  c.validate();
  return c;
}

CaseConfig orth_config(int n, int d, int dprime, int k, Partition nu) {
  CaseConfig c;
  c.kind = Case::Orth;
  c.n = n;
  c.d = d;
  c.dprime = dprime;
  c.k = k;
  c.nu = std::move(nu);
  c.validate();
  return c;
}

CaseConfig complexes_config(int n, int m, int d, int a, int k, int l, Partition nu, Partition nuprime) {
  CaseConfig c;
  c.kind = Case::Complexes;
  c.n = n;
  c.m = m;
  c.d = d;
  c.a = a;
  c.b = n + m + d - a;
  c.k = k;
  c.l = l;
  c.nu = std::move(nu);
  c.nuprime = std::move(nuprime);
  c.validate();
  return c;
}

Int v_dim(const CaseConfig& cfg, const Weight& v) {
  switch (cfg.kind) {
    case Case::Sympl: return dim_sp(Partition(v), cfg.n + cfg.d);
    case Case::Orth: return dim_o(Partition(v), cfg.dimV());
    case Case::Complexes: return dim_gl(v, cfg.dimV());
  }
  return 0;
}

Int label_dim(const CaseConfig& cfg, const Label& l) {
  Int r = dim_gl(l.E, cfg.n) * v_dim(cfg, l.V);
  if (cfg.kind == Case::Complexes) r *= dim_gl(l.F, cfg.m);
  return r;
}

Int sum_dim(const CaseConfig& cfg, const LabelSum& s) {
  Int t = 0;
  for (const auto& [l, c] : s) t += c * label_dim(cfg, l);
  return t;
}

Weight ol_nu(const CaseConfig& cfg) {
  Weight w;
  int an = cfg.a - cfg.n, bm = cfg.b - cfg.m;
  for (int i = an; i >= 1; --i) w.push_back(cfg.k - cfg.nu.row(i));
  for (int i = 1; i <= bm; ++i) w.push_back(cfg.nuprime.row(i) - cfg.l);
  return w;
}

namespace {

Weight concat(Weight a, const Weight& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Weight neg_rev(const Partition& p, int len, int shift) {
  // (-shift - p_len, ..., -shift - p_1)
  Weight w(len);
  for (int i = 0; i < len; ++i) w[i] = -shift - p.row(len - i);
  return w;
}

}  // namespace

Graded coord_ring_character(const CaseConfig& cfg, int max_deg) {
  cfg.validate();
  Graded g;
  for (int j = 0; j <= max_deg; ++j) {
    auto& piece = g[j];
    if (cfg.kind != Case::Complexes) {
      for (const auto& lam : partitions_of(j, cfg.n))
        piece[{lam.weight(cfg.n), lam.weight(cfg.half()), {}}] += 1;
      continue;
    }
    for (int s = 0; s <= j; ++s)
      for (const auto& lam : partitions_of(s, cfg.n))
        for (const auto& lp : partitions_of(j - s, cfg.m)) {
          Weight v = concat(lam.weight(cfg.dimV() - cfg.m), neg_rev(lp, cfg.m, 0));
          piece[{lam.weight(cfg.n), v, lp.weight(cfg.m)}] += 1;
        }
  }
  return g;
}

Graded module_character(const CaseConfig& cfg, int max_deg) {
  cfg.validate();
  Graded g;
  int g0 = cfg.gen_degree();
  for (int j = 0; g0 + j <= max_deg; ++j) {
    auto& piece = g[g0 + j];
    if (cfg.kind != Case::Complexes) {
      for (const auto& lam : partitions_of(j, cfg.n)) {
        Weight e = add_rect(cfg.n, cfg.k, lam).weight(cfg.n);
        Weight v = e;
        for (int i = cfg.d; i >= 1; --i) v.push_back(cfg.k - cfg.nu.row(i));
        piece[{e, v, {}}] += 1;
      }
      continue;
    }
    Weight mid = ol_nu(cfg);
    for (int s = 0; s <= j; ++s)
      for (const auto& lam : partitions_of(s, cfg.n))
        for (const auto& mu : partitions_of(j - s, cfg.m)) {
          Weight e = add_rect(cfg.n, cfg.k, lam).weight(cfg.n);
          Weight v = concat(concat(e, mid), neg_rev(mu, cfg.m, cfg.l));
          piece[{e, v, add_rect(cfg.m, cfg.l, mu).weight(cfg.m)}] += 1;
        }
  }
  return g;
}

Graded poly_det_module_character(int n, int nd, int k, const Partition& nu, int max_deg) {
  int d = nd - n;
  if (d < 0 || !nu.fits(d, k)) throw DomainError("need nu inside d x k with d = dim F - n >= 0");
  Graded g;
  for (int j = 0; n * k + j <= max_deg; ++j) {
    auto& piece = g[n * k + j];
    for (const auto& lam : partitions_of(j, n)) {
      Weight e = add_rect(n, k, lam).weight(n);
      Weight f = e;
      for (int i = d; i >= 1; --i) f.push_back(k - nu.row(i));
      if (f.size() > static_cast<size_t>(nd)) continue;
      piece[{e, {}, f}] += 1;
    }
  }
  return g;
}

int quadric_count(const CaseConfig& cfg) {
  switch (cfg.kind) {
    case Case::Sympl: return cfg.n * (cfg.n - 1) / 2;
    case Case::Orth: return cfg.n * (cfg.n + 1) / 2;
    case Case::Complexes: return cfg.n * cfg.m;
  }
  return 0;
}

int linear_count(const CaseConfig& cfg) {
  return (cfg.n + (cfg.kind == Case::Complexes ? cfg.m : 0)) * cfg.dimV();
}

Series series_mul(const Series& a, const Series& b, int max_deg) {
  Series out(max_deg + 1, 0);
  for (size_t i = 0; i < a.size() && static_cast<int>(i) <= max_deg; ++i)
    for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= max_deg; ++j) out[i + j] += a[i] * b[j];
  return out;
}

Series series_negate_var(const Series& a) {
  Series out = a;
  for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

namespace {

Int binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  Int c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// (1 + s t^e)^p  or  1/(1 - t^e)^p  truncated
Series power_poly(int e, int p, int sign, int max_deg) {
  Series s(max_deg + 1, 0);
  for (int i = 0; i * e <= max_deg && i <= p; ++i) s[i * e] = binom(p, i) * ((sign < 0 && i % 2) ? -1 : 1);
  return s;
}

Series inverse_power(int e, int p, int max_deg) {
  Series s(max_deg + 1, 0);
  for (int i = 0; i * e <= max_deg; ++i) s[i * e] = p == 0 ? Int(i == 0 ? 1 : 0) : binom(p + i - 1, i);
  return s;
}

}  // namespace

Series hilbert_series_B(const CaseConfig& cfg, int max_deg) {
  return series_mul(power_poly(2, quadric_count(cfg), -1, max_deg), inverse_power(1, linear_count(cfg), max_deg),
                    max_deg);
}

Series hilbert_series_koszul_dual(const CaseConfig& cfg, int max_deg) {
  return series_mul(power_poly(1, linear_count(cfg), 1, max_deg), inverse_power(2, quadric_count(cfg), max_deg),
                    max_deg);
}

std::string label_str(const Label& l) {
  std::string s = "(" + weight_str(l.E) + ";" + weight_str(l.V);
  if (!l.F.empty()) s += ";" + weight_str(l.F);
  return s + ")";
}

}  // namespace lwr
