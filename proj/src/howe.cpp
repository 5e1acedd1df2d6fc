#include "lwr/howe.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace lwr {

namespace {

// mixed weight [lam; lam2] of length N
Weight mixed(const Partition& lam, const Partition& lam2, int N) {
  Weight w(N, 0);
  for (int i = 1; i <= lam.length(); ++i) w[i - 1] += lam.row(i);
  for (int i = 1; i <= lam2.length(); ++i) w[N - i] -= lam2.row(i);
  return w;
}

Weight neg_rev(const Weight& w) {
  Weight r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

Partition tail_transpose(const Partition& lam, int from) {
  // (lam^T_{from+1}, lam^T_{from+2}, ...)
  Partition t = lam.transpose();
  std::vector<int> out;
  for (int i = from + 1; i <= t.length(); ++i) out.push_back(t.row(i));
  return Partition(out);
}

Partition head_transpose(const Partition& lam, int upto) {
  Partition t = lam.transpose();
  std::vector<int> out;
  for (int i = 1; i <= upto; ++i)
    if (t.row(i) > 0) out.push_back(t.row(i));
  return Partition(out);
}

// partition from a weakly decreasing nonnegative vector, else nullopt
std::optional<Partition> as_partition(const std::vector<int>& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return std::nullopt;
    if (i && v[i] > v[i - 1]) return std::nullopt;
  }
  std::vector<int> p;
  for (int x : v)
    if (x > 0) p.push_back(x);
  return Partition(p);
}

void require(const CaseConfig& cfg, const Partition& lam, const Partition& lam2) {
  if (!howe_admissible(cfg, lam, lam2)) throw DomainError("partition not admissible for the dual pair");
}

}  // namespace

bool howe_admissible(const CaseConfig& cfg, const Partition& lam, const Partition& lam2) {
  int nd = cfg.n + cfg.d;
  switch (cfg.kind) {
    case Case::Sympl:
    case Case::Orth:
      return lam2.empty() && lam.length() <= cfg.k && lam.row(cfg.n + 1) <= nd;
    case Case::Complexes:
      return lam.length() + lam2.length() <= cfg.k + cfg.l && lam.row(cfg.m + 1) <= cfg.b &&
             lam2.row(cfg.n + 1) <= cfg.a;
  }
  return false;
}

std::pair<Partition, Partition> howe_partner(const CaseConfig& cfg) {
  if (cfg.kind == Case::Complexes) return {cfg.nuprime.transpose(), cfg.nu.transpose()};
  return {cfg.nu.transpose(), {}};
}

std::vector<std::pair<Partition, Partition>> u_homology_character(const CaseConfig& cfg, const Partition& lam,
                                                                  const Partition& lam2, int i, int max_size) {
  require(cfg, lam, lam2);
  if (i < 0) throw DomainError("homological degree must be nonnegative");
  std::vector<std::pair<Partition, Partition>> out;
  if (cfg.kind != Case::Complexes) {
    int cap = cfg.n + cfg.d;
    for (int s = 0; s <= max_size; ++s)
      for (const auto& alpha : partitions_of(s)) {
        if (alpha.row(cfg.n + 1) > cap) continue;
        ModResult r = cfg.kind == Case::Sympl     ? mod_c(alpha, cfg.k)
                      : cfg.dprime == 0 ? mod_d(alpha, cfg.k)
                                        : mod_spin(alpha, cfg.k);
        if (r.defined && r.iota == i && r.tau == lam) out.push_back({alpha, {}});
      }
    return out;
  }
  for (int s = 0; s <= max_size; ++s)
    for (int s1 = 0; s1 <= s; ++s1)
      for (const auto& alpha : partitions_of(s1)) {
        if (alpha.row(cfg.m + 1) > cfg.b) continue;
        for (const auto& alpha2 : partitions_of(s - s1)) {
          if (alpha2.row(cfg.n + 1) > cfg.a) continue;
          ModResult r = mod_a(alpha, alpha2, cfg.k + cfg.l);
          if (r.defined && r.iota == i && r.tau == lam && r.tau2 == lam2) out.push_back({alpha, alpha2});
        }
      }
  return out;
}

GHomology g_homology_h0_h1(const CaseConfig& cfg, const Partition& lam, const Partition& lam2) {
  require(cfg, lam, lam2);
  GHomology g;
  int n = cfg.n, k = cfg.k;
  if (cfg.kind != Case::Complexes) {
    int nd = n + cfg.d;
    Partition lt = lam.transpose();
    Partition nu = head_transpose(lam, nd);
    Partition mu = tail_transpose(lam, nd);
    // H0
    Partition e0 = add_rect(n, k, mu.transpose());
    Partition v0 = nu.complement(nd, k);
    if (mu.transpose().length() <= n) g.h0[{e0.weight(n), v0.weight(nd), {}}] += 1;
    // H1
    std::vector<int> ev{1 + lt.row(nd)};
    for (int i = 2; i <= mu.length(); ++i) ev.push_back(mu.row(i));
    std::vector<int> vv{k - mu.row(1) + 1};
    for (int i = nd - 1; i >= 1; --i) vv.push_back(k - lt.row(i));
    auto ep = as_partition(ev);
    auto vp = as_partition(vv);
    g.h1_degree = lt.row(nd) - mu.row(1) + 1;
    g.h1_degrees = {g.h1_degree};
    if (ep && vp && ep->transpose().length() <= n)
      g.h1[{add_rect(n, k, ep->transpose()).weight(n), vp->weight(nd), {}}] += 1;
    g.linear_presentation = lt.row(nd) == lt.row(nd + 1);
    return g;
  }
  int m = cfg.m, l = cfg.l, a = cfg.a, b = cfg.b, N = cfg.dimV();
  Partition t = lam.transpose(), t2 = lam2.transpose();
  Partition mu = tail_transpose(lam, b), mu2 = tail_transpose(lam2, a);
  auto v_label = [&](const std::vector<int>& left, const std::vector<int>& right) {
    // [left; right] with left of length a, right of length b, as a GL(V) weight
    Weight w(N, 0);
    for (int i = 0; i < a; ++i) w[i] = left[i];
    for (int i = 0; i < b; ++i) w[N - 1 - i] = -right[i];
    return w;
  };
  std::vector<int> left0, right0;
  for (int i = a; i >= 1; --i) left0.push_back(k - t2.row(i));
  for (int i = b; i >= 1; --i) right0.push_back(l - t.row(i));
  Partition e0 = add_rect(n, k, mu2.transpose()), f0 = add_rect(m, l, mu.transpose());
  bool e0ok = mu2.transpose().length() <= n, f0ok = mu.transpose().length() <= m;
  if (e0ok && f0ok) g.h0[{e0.weight(n), v_label(left0, right0), f0.weight(m)}] += 1;
  // first summand: E side
  {
    std::vector<int> ev{t2.row(a) + 1};
    for (int i = 2; i <= mu2.length(); ++i) ev.push_back(mu2.row(i));
    std::vector<int> left{k - mu2.row(1) + 1};
    for (int i = a - 1; i >= 1; --i) left.push_back(k - t2.row(i));
    auto ep = as_partition(ev);
    auto lp = as_partition(left);
    if (ep && lp && f0ok && ep->transpose().length() <= n)
      g.h1[{add_rect(n, k, ep->transpose()).weight(n), v_label(left, right0), f0.weight(m)}] += 1;
  }
  // second summand: F side
  {
    std::vector<int> fv{t.row(b) + 1};
    for (int i = 2; i <= mu.length(); ++i) fv.push_back(mu.row(i));
    std::vector<int> right{l - mu.row(1) + 1};
    for (int i = b - 1; i >= 1; --i) right.push_back(l - t.row(i));
    auto fp = as_partition(fv);
    auto rp = as_partition(right);
    if (fp && rp && e0ok && fp->transpose().length() <= m)
      g.h1[{e0.weight(n), v_label(left0, right), add_rect(m, l, fp->transpose()).weight(m)}] += 1;
  }
  g.h1_degrees = {t2.row(a) - mu2.row(1) + 1, t.row(b) - mu.row(1) + 1};
  g.h1_degree = std::max(g.h1_degrees[0], g.h1_degrees[1]);
  g.linear_presentation = t.row(b) == t.row(b + 1) && t2.row(a) == t2.row(a + 1);
  return g;
}

// weights of S_alpha(C^N) through Gelfand-Tsetlin interlacing
std::map<Weight, Int> gl_weights(const Partition& alpha, int N) {
  std::map<Weight, Int> out;
  if (alpha.length() > N) return out;
  if (N == 0) return {{Weight{}, 1}};
  // memo on (top row, remaining count) -> partial content maps
  std::map<std::vector<int>, std::map<Weight, Int>> memo;
  std::function<const std::map<Weight, Int>&(const std::vector<int>&)> below = [&](const std::vector<int>& row)
      -> const std::map<Weight, Int>& {
    auto it = memo.find(row);
    if (it != memo.end()) return it->second;
    std::map<Weight, Int> res;
    int len = static_cast<int>(row.size());
    int total = std::accumulate(row.begin(), row.end(), 0);
    if (len == 1) {
      res[{row[0]}] = 1;
    } else {
      // rows of length len-1 interlacing: row[i] >= y[i] >= row[i+1]
      std::vector<int> y(len - 1);
      std::function<void(int)> pick = [&](int i) {
        if (i == len - 1) {
          int sy = std::accumulate(y.begin(), y.end(), 0);
          for (const auto& [w, c] : below(y)) {
            Weight ww = w;
            ww.push_back(total - sy);
            res[ww] += c;
          }
          return;
        }
        for (int v = row[i + 1]; v <= row[i]; ++v) {
          y[i] = v;
          pick(i + 1);
        }
      };
      pick(0);
    }
    return memo.emplace(row, std::move(res)).first->second;
  };
  return below(alpha.weight(N));
}

namespace {

// Sp / O(2k) merged-label multiplicity of lam in S_alpha(U) (x) [rho] via
// restriction and Newell-Littlewood, cached per call site
struct FormTensorCache {
  FormType t;
  int M;
  std::map<Partition, RepSum> restricted;
  std::map<std::pair<Partition, Partition>, RepSum> nl;

  const RepSum& restrict_(const Partition& alpha) {
    auto it = restricted.find(alpha);
    if (it != restricted.end()) return it->second;
    return restricted.emplace(alpha, littlewood_restrict(t, alpha, M)).first->second;
  }
  const RepSum& product(const Partition& x, const Partition& y) {
    auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
    auto it = nl.find(key);
    if (it != nl.end()) return it->second;
    return nl.emplace(key, newell_littlewood(t, key.first, key.second, M)).first->second;
  }
};

Graded form_character(const CaseConfig& cfg, const Partition& lam, int max_deg) {
  int n = cfg.n, k = cfg.k, nd = n + cfg.d;
  FormTensorCache cache{cfg.form(), 2 * k, {}, {}};
  int g0 = tail_transpose(lam, nd).size();
  Graded out;
  // Lambda part: rho inside k x (n+d)
  std::vector<std::pair<Partition, Weight>> lam_part;
  for (const auto& rho : partitions_in_box(k, nd)) lam_part.push_back({rho, rho.transpose().complement(nd, k).weight(nd)});
  for (int j = 0; j <= max_deg; ++j) {
    auto& piece = out[j];
    for (const auto& alpha : partitions_of(g0 + j, std::min(n, 2 * k))) {
      const RepSum& pis = cache.restrict_(alpha);
      Weight e = add_rect(n, k, alpha).weight(n);
      for (const auto& [rho, v] : lam_part) {
        Int mult = 0;
        for (const auto& [pi, c] : pis) {
          const RepSum& prod = cache.product(pi, rho);
          auto it = prod.find(lam);
          if (it != prod.end()) mult += c * it->second;
        }
        if (mult != 0) piece[{e, v, {}}] += mult;
      }
    }
  }
  return out;
}

// Pin(2k) case, spinor labels lam + delta. Brauer-Klimyk in doubled coordinates.
Int spin_mult(const std::map<Weight, Int>& torus, const Weight& hw2, const Weight& target2) {
  int k = static_cast<int>(hw2.size());
  Int total = 0;
  for (const auto& [w, c] : torus) {
    std::vector<std::pair<int, int>> v(k);  // (value, original index)
    for (int i = 0; i < k; ++i) v[i] = {hw2[i] + 2 * w[i] + 2 * (k - 1 - i), i};
    std::vector<int> absv(k);
    bool singular = false;
    for (int i = 0; i < k && !singular; ++i)
      for (int j = 0; j < i; ++j)
        if (std::abs(v[i].first) == std::abs(v[j].first)) singular = true;
    if (singular) continue;
    int neg = 0;
    for (auto& [x, idx] : v)
      if (x < 0) ++neg;
    // sort by |value| descending; sign = sign of the permutation
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return std::abs(v[x].first) > std::abs(v[y].first); });
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (order[i] > order[j]) ++inv;
    Weight dom(k);
    for (int i = 0; i < k; ++i) dom[i] = std::abs(v[order[i]].first) - 2 * (k - 1 - i);
    if (neg % 2) dom[k - 1] = -std::abs(v[order[k - 1]].first);
    if (dom == target2) total += inv % 2 ? -c : c;
  }
  return total;
}

Graded spin_character(const CaseConfig& cfg, const Partition& lam, int max_deg) {
  int n = cfg.n, k = cfg.k, nd = n + cfg.d;
  int g0 = tail_transpose(lam, nd).size();
  Weight target(k);
  for (int i = 0; i < k; ++i) target[i] = 2 * lam.row(i + 1) + 1;
  Graded out;
  std::vector<std::pair<std::pair<Weight, Weight>, Weight>> lam_part;
  for (const auto& th : partitions_in_box(k, nd)) {
    Weight hp(k), hm(k);
    for (int i = 0; i < k; ++i) hp[i] = 2 * th.row(i + 1) + 1;
    hm = hp;
    if (k > 0) hm[k - 1] = -hm[k - 1];
    lam_part.push_back({{hp, hm}, th.transpose().complement(nd, k).weight(nd)});
  }
  for (int j = 0; j <= max_deg; ++j) {
    auto& piece = out[j];
    for (const auto& alpha : partitions_of(g0 + j, std::min(n, 2 * k))) {
      std::map<Weight, Int> torus;
      for (const auto& [c, mult] : gl_weights(alpha, 2 * k)) {
        Weight t(k);
        for (int i = 0; i < k; ++i) t[i] = c[i] - c[k + i];
        torus[t] += mult;
      }
      Weight e = add_rect(n, k, alpha).weight(n);
      for (const auto& [hws, v] : lam_part) {
        // k = 0: the group is trivial and there is nothing to mirror
        Int mult = spin_mult(torus, hws.first, target) + (k > 0 ? spin_mult(torus, hws.second, target) : Int(0));
        if (mult < 0) throw std::logic_error("negative spin multiplicity");
        if (mult != 0) piece[{e, v, {}}] += mult;
      }
    }
  }
  return out;
}

Graded complexes_character(const CaseConfig& cfg, const Partition& lam, const Partition& lam2, int max_deg) {
  int n = cfg.n, m = cfg.m, k = cfg.k, l = cfg.l, K = k + l, N = cfg.dimV();
  int g0 = tail_transpose(lam, cfg.b).size() + tail_transpose(lam2, cfg.a).size();
  Weight target = mixed(lam, lam2, K);
  Graded out;
  // U weights from Lambda(U (x) V) (x) det(U)^{-a}
  std::vector<std::pair<Weight, Weight>> lam_part;
  for (const auto& rho : partitions_in_box(K, N)) {
    Weight u = rho.weight(K);
    for (int& x : u) x -= cfg.a;
    Weight v = rho.transpose().weight(N);
    for (int& x : v) x -= l;
    lam_part.push_back({u, v});
  }
  for (int j = 0; j <= max_deg; ++j) {
    auto& piece = out[j];
    int tot = g0 + j;
    for (int s = 0; s <= tot; ++s)
      for (const auto& alpha : partitions_of(s, std::min(n, K))) {
        Weight ua = neg_rev(alpha.weight(K));
        Weight e = add_rect(n, k, alpha).weight(n);
        for (const auto& beta : partitions_of(tot - s, std::min(m, K))) {
          Weight f = add_rect(m, l, beta).weight(m);
          auto ab = gl_tensor(ua, beta.weight(K), K);
          for (const auto& [u, v] : lam_part) {
            Int mult = 0;
            for (const auto& [w, c] : ab) {
              auto prod = gl_tensor(w, u, K);
              auto it = prod.find(target);
              if (it != prod.end()) mult += c * it->second;
            }
            if (mult != 0) piece[{e, v, f}] += mult;
          }
        }
      }
  }
  return out;
}

}  // namespace

Graded n_module_character(const CaseConfig& cfg, const Partition& lam, const Partition& lam2, int max_deg) {
  require(cfg, lam, lam2);
  if (max_deg < 0) throw DomainError("max_deg must be nonnegative");
  if (cfg.kind == Case::Complexes) return complexes_character(cfg, lam, lam2, max_deg);
  if (cfg.kind == Case::Orth && cfg.dprime == 1) return spin_character(cfg, lam, max_deg);
  return form_character(cfg, lam, max_deg);
}

}  // namespace lwr
