#include "lwr/branching.hpp"

#include "lwr/modrules.hpp"

#include <stdexcept>

namespace lwr {

std::optional<std::pair<int, Partition>> modify_universal(FormType t, const Partition& lam, int M) {
  int m = M / 2;
  Partition cur = lam;
  int sign = 1;
  while (cur.length() > m) {
    int l = cur.length();
    int h = t == FormType::Sp ? 2 * l - M - 2 : 2 * l - M;
    auto s = border_strip_remove(cur, h);
    if (!s) return std::nullopt;
    // Sp: (-1)^c ; O: (-1)^(c-1), det twist forgotten at SO level
    int c = s->columns;
    if ((t == FormType::Sp ? c : c - 1) % 2) sign = -sign;
    cur = s->rest;
  }
  return std::make_pair(sign, cur);
}

RepSum collapse(const std::map<Partition, Int>& virt) {
  RepSum out;
  for (const auto& [p, c] : virt) {
    if (c < 0) throw std::logic_error("negative multiplicity for " + p.str());
    if (c > 0) out.emplace(p, c);
  }
  return out;
}

RepSum littlewood_restrict(FormType t, const Partition& beta, int M) {
  if (beta.length() > M) return {};
  std::map<Partition, Int> virt;
  // delta runs over partitions inside beta with even columns (Sp) or even rows (O)
  for (int s = 0; s <= beta.size(); s += 2) {
    for (const auto& delta : partitions_in_box(beta.length(), beta.row(1), s)) {
      if (!beta.contains(delta)) continue;
      const Partition& probe = t == FormType::Sp ? delta.transpose() : delta;
      bool even = true;
      for (int x : probe.parts()) even = even && x % 2 == 0;
      if (!even) continue;
      for (const auto& [mu, c] : lr_skew(beta, delta)) {
        auto mod = modify_universal(t, mu, M);
        if (mod) virt[mod->second] += c * mod->first;
      }
    }
  }
  return collapse(virt);
}

RepSum newell_littlewood(FormType t, const Partition& mu, const Partition& nu, int M) {
  std::map<Partition, Int> stable;
  int s = std::min(mu.size(), nu.size());
  for (int a = 0; a <= s; ++a) {
    for (const auto& alpha : partitions_of(a)) {
      if (!mu.contains(alpha) || !nu.contains(alpha)) continue;
      auto bs = lr_skew(mu, alpha);
      auto gs = lr_skew(nu, alpha);
      for (const auto& [b, cb] : bs)
        for (const auto& [g, cg] : gs)
          for (const auto& [lam, cl] : lr_product(b, g)) stable[lam] += cb * cg * cl;
    }
  }
  std::map<Partition, Int> virt;
  for (const auto& [lam, c] : stable) {
    auto mod = modify_universal(t, lam, M);
    if (mod) virt[mod->second] += c * mod->first;
  }
  return collapse(virt);
}

std::map<std::pair<Partition, Partition>, Int> schur_of_extension(const Partition& lam, int dimA, int dimB) {
  std::map<std::pair<Partition, Partition>, Int> out;
  for (int a = 0; a <= lam.size(); ++a)
    for (const auto& alpha : partitions_in_box(dimA, lam.row(1), a)) {
      if (!lam.contains(alpha)) continue;
      for (const auto& [beta, c] : lr_skew(lam, alpha))
        if (beta.length() <= dimB) out[{alpha, beta}] += c;
    }
  return out;
}

Int total_dim(FormType t, const RepSum& s, int M) {
  Int tot = 0;
  for (const auto& [p, c] : s) tot += c * (t == FormType::Sp ? dim_sp(p, M / 2) : dim_o(p, M));
  return tot;
}

}  // namespace lwr
