#include "lwr/partition.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <shared_mutex>

namespace lwr {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
  for (size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] < 0) throw DomainError("negative part in partition");
    if (i > 0 && p_[i] > p_[i - 1]) throw DomainError("parts must be weakly decreasing");
  }
}

Weight parse_weight(std::string_view text) {
  Weight out;
  size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return out;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = trim(text.substr(pos, comma - pos));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw DomainError("cannot parse integer '" + std::string(tok) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

Partition Partition::parse(std::string_view text) { return Partition(parse_weight(text)); }

int Partition::size() const {
  int s = 0;
  for (int x : p_) s += x;
  return s;
}

Partition Partition::transpose() const {
  std::vector<int> t(row(1), 0);
  for (int x : p_)
    for (int j = 0; j < x; ++j) ++t[j];
  return Partition(std::move(t));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.row(i) > row(i)) return false;
  return true;
}

Partition Partition::complement(int rows, int cols) const {
  if (!fits(rows, cols)) throw DomainError(str() + " does not fit in " + std::to_string(rows) + "x" + std::to_string(cols));
  std::vector<int> c(rows);
  for (int i = 1; i <= rows; ++i) c[i - 1] = cols - row(rows + 1 - i);
  return Partition(std::move(c));
}

Weight Partition::weight(int len) const {
  if (length() > len) throw DomainError(str() + " has more than " + std::to_string(len) + " rows");
  Weight w(len, 0);
  std::copy(p_.begin(), p_.end(), w.begin());
  return w;
}

std::string weight_str(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string Partition::str() const { return weight_str(p_); }

bool is_dominant(const Weight& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] > w[i - 1]) return false;
  return true;
}

Partition rectangle(int rows, int cols) { return Partition(std::vector<int>(rows, cols)); }

Partition add_rect(int rows, int cols, const Partition& lam) {
  std::vector<int> v(std::max(rows, lam.length()), 0);
  for (int i = 1; i <= static_cast<int>(v.size()); ++i) v[i - 1] = lam.row(i) + (i <= rows ? cols : 0);
  return Partition(std::move(v));
}

namespace {

void box_rec(int rows, int cols, int size, std::vector<int>& cur, int left, std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == rows || (size >= 0 && left == 0)) {
    if (size < 0 || left == 0) out.emplace_back(cur);
    return;
  }
  int cap = cur.empty() ? cols : cur.back();
  if (size >= 0) cap = std::min(cap, left);
  int lo = 0;
  if (size >= 0) {
    int rows_left = rows - static_cast<int>(cur.size());
    if (static_cast<long long>(cap) * rows_left < left) return;
  }
  for (int x = cap; x >= lo; --x) {
    cur.push_back(x);
    box_rec(rows, cols, size, cur, size >= 0 ? left - x : 0, out);
    cur.pop_back();
    if (x == 0) break;
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols, int size) {
  std::vector<Partition> out;
  if (rows < 0 || cols < 0) return out;
  std::vector<int> cur;
  if (rows == 0 || cols == 0) {
    if (size <= 0) out.emplace_back();
    return out;
  }
  box_rec(rows, cols, size, cur, size, out);
  // zeros are trimmed so duplicates can appear when size<0 is not used; dedupe anyway
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> partitions_of(int s, int maxlen) {
  return partitions_in_box(std::min(s, maxlen), s, s);
}

// ---- Littlewood-Richardson ----

namespace {

struct ProdKey {
  std::vector<int> a, b;
  bool operator<(const ProdKey& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

std::shared_mutex g_lr_mutex;
std::map<ProdKey, std::map<Partition, Int>> g_lr_cache;

// Fill letter i of mu as a horizontal strip on top of `shape`, row by row.
// cnt[r][i] = number of letter i in row r. Lattice: letters i in rows <= r
// never exceed letters i-1 in rows < r.
struct Filler {
  const std::vector<int>& mu;
  std::map<Partition, Int>& out;
  std::vector<std::vector<int>> cnt;  // cnt[letter][row]

  void letter(size_t i, const std::vector<int>& shape) {
    if (i == mu.size()) {
      out[Partition(shape)] += 1;
      return;
    }
    std::vector<int> next = shape;
    next.push_back(0);
    cnt[i].assign(next.size(), 0);
    rowfill(i, 0, mu[i], shape, next, 0);
  }

  void rowfill(size_t i, size_t r, int left, const std::vector<int>& prev, std::vector<int>& next, int cum) {
    if (left == 0) {
      std::vector<int> sh = next;
      while (!sh.empty() && sh.back() == 0) sh.pop_back();
      letter(i + 1, sh);
      return;
    }
    if (r == next.size()) return;
    int base = r < prev.size() ? prev[r] : 0;
    int cap = left;
    if (r > 0) cap = std::min(cap, prev[r - 1] - base);
    if (i > 0) {
      // letters i-1 strictly above row r
      int above = 0;
      for (size_t s = 0; s < r && s < cnt[i - 1].size(); ++s) above += cnt[i - 1][s];
      cap = std::min(cap, above - cum);
    }
    for (int x = cap; x >= 0; --x) {
      next[r] = base + x;
      cnt[i][r] = x;
      rowfill(i, r + 1, left - x, prev, next, cum + x);
    }
    next[r] = base;
    cnt[i][r] = 0;
  }
};

const std::map<Partition, Int>& lr_full(const Partition& lam, const Partition& mu) {
  ProdKey key{lam.parts(), mu.parts()};
  {
    std::shared_lock lk(g_lr_mutex);
    auto it = g_lr_cache.find(key);
    if (it != g_lr_cache.end()) return it->second;
  }
  std::map<Partition, Int> res;
  Filler f{mu.parts(), res, std::vector<std::vector<int>>(mu.length())};
  f.letter(0, lam.parts());
  std::unique_lock lk(g_lr_mutex);
  return g_lr_cache.emplace(std::move(key), std::move(res)).first->second;
}

}  // namespace

void clear_lr_cache() {
  std::unique_lock lk(g_lr_mutex);
  g_lr_cache.clear();
}

std::map<Partition, Int> lr_product(const Partition& lam, const Partition& mu, int maxlen) {
  // the smaller factor as the filling content is faster
  const auto& full = lam.size() >= mu.size() ? lr_full(lam, mu) : lr_full(mu, lam);
  std::map<Partition, Int> out;
  for (const auto& [nu, c] : full)
    if (nu.length() <= maxlen) out.emplace(nu, c);
  return out;
}

Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.size() + mu.size() != nu.size() || !nu.contains(lam) || !nu.contains(mu)) return 0;
  const auto& full = lam.size() >= mu.size() ? lr_full(lam, mu) : lr_full(mu, lam);
  auto it = full.find(nu);
  return it == full.end() ? Int(0) : it->second;
}

std::map<Partition, Int> lr_skew(const Partition& nu, const Partition& lam) {
  std::map<Partition, Int> out;
  if (!nu.contains(lam)) return out;
  int s = nu.size() - lam.size();
  for (const auto& mu : partitions_in_box(nu.length(), nu.row(1), s)) {
    if (!nu.contains(mu)) continue;
    Int c = lr_coefficient(lam, mu, nu);
    if (c != 0) out.emplace(mu, c);
  }
  return out;
}

std::map<Weight, Int> gl_tensor(const Weight& a0, const Weight& b0, int N) {
  auto pad = [N](Weight w) {
    if (static_cast<int>(w.size()) > N) throw DomainError("weight longer than GL rank");
    if (!is_dominant(w)) throw DomainError("weight " + weight_str(w) + " is not dominant");
    w.resize(N, w.empty() ? 0 : std::min(0, w.back()));
    return w;
  };
  Weight a = pad(a0), b = pad(b0);
  std::map<Weight, Int> out;
  if (N == 0) {
    out[{}] = 1;
    return out;
  }
  int sa = a.back(), sb = b.back();
  for (auto& x : a) x -= sa;
  for (auto& x : b) x -= sb;
  for (const auto& [nu, c] : lr_product(Partition(a), Partition(b), N)) {
    Weight w = nu.weight(N);
    for (auto& x : w) x += sa + sb;
    out[w] += c;
  }
  return out;
}

// ---- dimensions ----

namespace {

struct Frac {
  Int num = 1, den = 1;
  void mul(long long n, long long d) {
    num *= n;
    den *= d;
  }
  Int value() const {
    if (num == 0) return 0;
    Int q = num / den;
    if (q * den != num) throw std::logic_error("non-integral dimension");
    return q;
  }
};

}  // namespace

Int dim_gl(const Weight& w0, int N) {
  Weight w = w0;
  if (static_cast<int>(w.size()) > N) throw DomainError("weight longer than GL rank");
  if (!is_dominant(w)) throw DomainError("weight " + weight_str(w) + " is not dominant");
  w.resize(N, w.empty() ? 0 : std::min(0, w.back()));
  Frac f;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) f.mul(w[i] - w[j] + j - i, j - i);
  return f.value();
}

Int dim_gl(const Partition& p, int N) {
  if (p.length() > N) return 0;
  return dim_gl(p.parts(), N);
}

Int dim_sp(const Partition& p, int m) {
  if (p.length() > m) return 0;
  Frac f;
  for (int i = 1; i <= m; ++i) {
    long long li = p.row(i) + m - i + 1, ri = m - i + 1;
    f.mul(li, ri);
    for (int j = i + 1; j <= m; ++j) {
      long long lj = p.row(j) + m - j + 1, rj = m - j + 1;
      f.mul((li - lj) * (li + lj), (ri - rj) * (ri + rj));
    }
  }
  return f.value();
}

Int dim_so(const Weight& w0, int M) {
  int m = M / 2;
  Weight w = w0;
  if (static_cast<int>(w.size()) > m) throw DomainError("weight longer than SO rank");
  w.resize(m, 0);
  Frac f;
  if (M % 2) {
    for (int i = 1; i <= m; ++i) {
      long long Li = 2LL * w[i - 1] + 2 * m - 2 * i + 1, Ri = 2 * m - 2 * i + 1;
      f.mul(Li, Ri);
      for (int j = i + 1; j <= m; ++j) {
        long long Lj = 2LL * w[j - 1] + 2 * m - 2 * j + 1, Rj = 2 * m - 2 * j + 1;
        f.mul((Li - Lj) * (Li + Lj), (Ri - Rj) * (Ri + Rj));
      }
    }
  } else {
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        long long li = w[i - 1] + m - i, lj = w[j - 1] + m - j, ri = m - i, rj = m - j;
        f.mul((li - lj) * (li + lj), (ri - rj) * (ri + rj));
      }
  }
  return f.value();
}

bool o_admissible(const Partition& p, int M) {
  Partition t = p.transpose();
  return t.row(1) + t.row(2) <= M;
}

Partition o_sigma(const Partition& p, int M) {
  if (!o_admissible(p, M)) throw DomainError(p.str() + " is not an O(" + std::to_string(M) + ") label");
  std::vector<int> t = p.transpose().parts();
  if (t.empty()) t.push_back(0);
  t[0] = M - t[0];
  if (t.size() > 1 && t[0] < t[1]) throw DomainError("sigma of " + p.str() + " is not a partition");
  return Partition(t).transpose();
}

Int dim_o(const Partition& p, int M) {
  if (!o_admissible(p, M)) return 0;
  Partition q = 2 * p.length() > M ? o_sigma(p, M) : p;
  if (M % 2 == 0 && 2 * q.length() == M && M > 0) return 2 * dim_so(q.parts(), M);
  return dim_so(q.parts(), M);
}

Int dim_classical(Group g, int M, const Partition& p) {
  switch (g) {
    case Group::GL: return dim_gl(p, M);
    case Group::Sp:
      if (M % 2) throw DomainError("Sp needs even dimension");
      return dim_sp(p, M / 2);
    case Group::O: return dim_o(p, M);
  }
  return 0;
}

std::vector<std::pair<Partition, Partition>> cauchy_sym(int na, int nb, int degree) {
  std::vector<std::pair<Partition, Partition>> out;
  for (auto& a : partitions_of(degree, std::min(na, nb))) out.emplace_back(a, a);
  return out;
}

std::vector<std::pair<Partition, Partition>> cauchy_ext(int na, int nb, int degree) {
  std::vector<std::pair<Partition, Partition>> out;
  for (auto& a : partitions_in_box(na, nb, degree)) out.emplace_back(a, a.transpose());
  return out;
}

}  // namespace lwr
