#include "lwr/modrules.hpp"

namespace lwr {

std::optional<StripRemoval> border_strip_remove(const Partition& lam, int length) {
  int l = lam.length();
  if (length <= 0 || l == 0) return std::nullopt;
  StripRemoval out;
  std::vector<int> rows = lam.parts();
  int i = l, j = 1;
  out.boxes.emplace_back(i, j);
  while (static_cast<int>(out.boxes.size()) < length) {
    // right while the next box stays on the rim, otherwise up
    if (j < lam.row(i) && (i == 1 || lam.row(i + 1) <= j + 1))
      ++j;
    else if (i > 1)
      --i;
    else
      return std::nullopt;
    out.boxes.emplace_back(i, j);
  }
  // remove: boxes in each row form a contiguous run ending at the row end
  std::vector<int> removed(l + 1, 0), mincol(l + 1, 1 << 30);
  int cmin = 1 << 30, cmax = 0;
  for (auto [r, c] : out.boxes) {
    ++removed[r];
    mincol[r] = std::min(mincol[r], c);
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
  }
  for (int r = 1; r <= l; ++r) {
    if (!removed[r]) continue;
    if (mincol[r] + removed[r] - 1 != rows[r - 1]) return std::nullopt;
    rows[r - 1] -= removed[r];
  }
  for (size_t r = 1; r < rows.size(); ++r)
    if (rows[r] > rows[r - 1]) return std::nullopt;
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  for (size_t r = 1; r < rows.size(); ++r)
    if (rows[r] > rows[r - 1]) return std::nullopt;
  out.rest = Partition(rows);
  out.columns = cmax - cmin + 1;
  return out;
}

namespace {

// generic loop: strip length as a function of current length, iota increment
template <class LenFn, class IncFn>
ModResult run_mod(const Partition& lam, int k, LenFn len_of, IncFn inc) {
  ModResult res;
  Partition cur = lam;
  while (cur.length() > k) {
    int h = len_of(cur.length());
    auto s = border_strip_remove(cur, h);
    if (!s) return res;
    res.trace.push_back({cur, h, s->columns});
    res.iota += inc(s->columns);
    cur = s->rest;
  }
  res.defined = true;
  res.tau = cur;
  return res;
}

}  // namespace

ModResult mod_c(const Partition& lam, int k) {
  return run_mod(lam, k, [k](int l) { return 2 * l - 2 * k - 2; }, [](int c) { return c; });
}

ModResult mod_d(const Partition& lam, int k) {
  return run_mod(lam, k, [k](int l) { return 2 * l - 2 * k; }, [](int c) { return c - 1; });
}

ModResult mod_spin(const Partition& lam, int k) {
  return run_mod(lam, k, [k](int l) { return 2 * l - 2 * k - 1; }, [](int c) { return c; });
}

ModResult mod_a(const Partition& lam, const Partition& lam2, int k) {
  ModResult res;
  Partition a = lam, b = lam2;
  while (a.length() + b.length() > k) {
    int h = a.length() + b.length() - k - 1;
    auto sa = border_strip_remove(a, h);
    auto sb = border_strip_remove(b, h);
    if (!sa || !sb) return res;
    res.trace.push_back({a, h, sa->columns});
    res.trace.push_back({b, h, sb->columns});
    res.iota += sa->columns + sb->columns - 1;
    a = sa->rest;
    b = sb->rest;
  }
  res.defined = true;
  res.tau = a;
  res.tau2 = b;
  return res;
}

}  // namespace lwr
