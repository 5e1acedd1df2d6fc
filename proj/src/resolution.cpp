#include "lwr/resolution.hpp"

#include "lwr/bott.hpp"
#include "lwr/howe.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lwr {

namespace {

Weight neg_rev(const Weight& w) {
  Weight r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

void add_outcome(BundleCohomology& bc, const BottOutcome& o, const Int& c) {
  if (o.vanishes || c == 0) return;
  bc.constituents[o.degree][o.dominant] += c;
  bc.euler[o.dominant] += o.degree % 2 ? -c : c;
}

void prune(VSum& s) {
  for (auto it = s.begin(); it != s.end();) it = it->second == 0 ? s.erase(it) : std::next(it);
}

BundleCohomology form_bundle(const CaseConfig& cfg, const Partition& kappa) {
  int n = cfg.n, d = cfg.d, q = 2 * d + (cfg.kind == Case::Orth ? cfg.dprime : 0);
  FormType t = cfg.form();
  Partition twist = cfg.nu.complement(d, cfg.k);
  bool orth = cfg.kind == Case::Orth;
  bool even = orth && cfg.dprime == 0;
  BundleCohomology bc;
  for (const auto& [ab, c1] : schur_of_extension(kappa, n, q)) {
    const auto& [alpha, beta] = ab;
    for (const auto& [g, c2] : littlewood_restrict(t, beta, q))
      for (const auto& [delta, c3] : newell_littlewood(t, g, twist, q)) {
        Weight a;
        for (int i = n; i >= 1; --i) a.push_back(cfg.k - alpha.row(i));
        for (int i = 1; i <= d; ++i) a.push_back(delta.row(i));
        Int c = c1 * c2 * c3;
        if (!orth) {
          add_outcome(bc, bott_type_c(a), c);
          continue;
        }
        std::vector<Weight> ws{a};
        // merged label of full length on Q: both SO(2d) pieces
        if (even && d >= 1 && delta.length() == d) {
          Weight b = a;
          b.back() = -b.back();
          ws.push_back(b);
        }
        for (const auto& w : ws) {
          BottOutcome o = bott_type_bd(w, cfg.dimV());
          add_outcome(bc, o, c);
          // OGr(n, 2n) has two components, the second one sees the mirror
          if (even && d == 0 && !o.vanishes && !o.dominant.empty()) {
            BottOutcome m = o;
            m.dominant.back() = -m.dominant.back();
            add_outcome(bc, m, c);
          }
        }
      }
  }
  if (cfg.kind == Case::Orth && cfg.dprime == 0) {
    // keep one representative per merged label
    auto keep = [](VSum& s) {
      for (auto it = s.begin(); it != s.end();)
        it = (!it->first.empty() && it->first.back() < 0) ? s.erase(it) : std::next(it);
    };
    keep(bc.euler);
    for (auto& [deg, s] : bc.constituents) keep(s);
  }
  prune(bc.euler);
  return bc;
}

BundleCohomology complexes_bundle(const CaseConfig& cfg, const Partition& kappa, const Partition& kappa2) {
  int n = cfg.n, m = cfg.m, d = cfg.d;
  Weight mid = ol_nu(cfg);
  BundleCohomology bc;
  auto ext1 = schur_of_extension(kappa, m, d);
  auto ext2 = schur_of_extension(kappa2, n, d);
  for (const auto& [ab, c1] : ext1) {
    const auto& [alpha, beta] = ab;
    for (const auto& [ge, c2] : ext2) {
      const auto& [gamma, eps] = ge;
      for (const auto& [w1, c3] : gl_tensor(beta.weight(d), neg_rev(eps.weight(d)), d))
        for (const auto& [th, c4] : gl_tensor(w1, mid, d)) {
          Weight a;
          for (int i = n; i >= 1; --i) a.push_back(cfg.k - gamma.row(i));
          a.insert(a.end(), th.begin(), th.end());
          for (int i = 1; i <= m; ++i) a.push_back(alpha.row(i) - cfg.l);
          add_outcome(bc, bott_gl(a), c1 * c2 * c3 * c4);
        }
    }
  }
  prune(bc.euler);
  return bc;
}

}  // namespace

BundleCohomology bundle_cohomology(const CaseConfig& cfg, const Partition& kappa, const Partition& kappa2) {
  cfg.validate();
  if (cfg.kind == Case::Complexes) return complexes_bundle(cfg, kappa, kappa2);
  return form_bundle(cfg, kappa);
}

VSum h0_E_bundle(const CaseConfig& cfg, const Partition& kappa, const Partition& kappa2) {
  BundleCohomology bc = bundle_cohomology(cfg, kappa, kappa2);
  for (const auto& [w, c] : bc.euler)
    if (c < 0) throw std::logic_error("bundle has higher cohomology at " + weight_str(w));
  return bc.euler;
}

ModResult case_modification(const CaseConfig& cfg, const Partition& lam, const Partition& lam2) {
  switch (cfg.kind) {
    case Case::Sympl: return mod_c(lam, cfg.k);
    // odd dim V too: the bundles follow strips of length 2l-2k with c-1, the
    // spin strips (2l-2k-1) contradict the Euler characteristic already on the conic
    case Case::Orth: return mod_d(lam, cfg.k);
    case Case::Complexes: return mod_a(lam, lam2, cfg.k + cfg.l);
  }
  return {};
}

GenBott generalized_bott(const CaseConfig& cfg, const Partition& lam, const Partition& lam2) {
  GenBott g;
  BundleCohomology bc = bundle_cohomology(cfg, lam.transpose(), lam2.transpose());
  g.euler = bc.euler;
  ModResult mr = case_modification(cfg, lam, lam2);
  g.defined = mr.defined;
  if (mr.defined) {
    g.tau = mr.tau;
    g.tau2 = mr.tau2;
    g.iota = mr.iota;
    g.character = bundle_cohomology(cfg, mr.tau.transpose(), mr.tau2.transpose()).euler;
    for (const auto& [w, c] : g.character)
      if (c < 0) g.problems.push_back("H0 of the modified bundle is virtual at " + weight_str(w));
  }
  int sgn = g.iota % 2 ? -1 : 1;
  VSum expect;
  for (const auto& [w, c] : g.character) expect[w] = sgn * c;
  g.euler_matches = expect == g.euler;
  if (!g.euler_matches) g.problems.push_back("Euler characteristic differs from (-1)^iota H0(tau)");
  g.concentrated = true;
  const VSum empty;
  auto it = bc.constituents.find(g.iota);
  const VSum& top = it == bc.constituents.end() ? empty : it->second;
  for (const auto& [w, c] : g.euler) {
    Int s = sgn * c;
    auto jt = top.find(w);
    Int have = jt == top.end() ? Int(0) : jt->second;
    if (s < 0 || have < s) g.concentrated = false;
  }
  if (!g.concentrated) g.problems.push_back("Euler characteristic not concentrated in degree iota");
  return g;
}

Int BettiTable::total(int i) const {
  Int t = 0;
  for (const auto& [key, c] : entries)
    if (key.first == i) t += c;
  return t;
}

int BettiTable::max_i() const {
  int m = -1;
  for (const auto& [key, c] : entries)
    if (c != 0) m = std::max(m, key.first);
  return m;
}

bool BettiTable::linear() const {
  int row = -1;
  for (const auto& [key, c] : entries) {
    if (c == 0) continue;
    int r = key.second - key.first;
    if (row >= 0 && r != row) return false;
    row = r;
  }
  return true;
}

std::string BettiTable::render() const {
  int top = max_i();
  int rmin = 1 << 30, rmax = -(1 << 30);
  for (const auto& [key, c] : entries) {
    if (c == 0) continue;
    rmin = std::min(rmin, key.second - key.first);
    rmax = std::max(rmax, key.second - key.first);
  }
  if (top < 0) return "(zero module)\n";
  auto cell = [&](int i, int r) {
    auto it = entries.find({i, r + i});
    return (it == entries.end() || it->second == 0) ? std::string(".") : it->second.str();
  };
  std::vector<size_t> width(top + 1);
  for (int i = 0; i <= top; ++i) {
    width[i] = std::max(std::to_string(i).size(), total(i).str().size());
    for (int r = rmin; r <= rmax; ++r) width[i] = std::max(width[i], cell(i, r).size());
  }
  auto pad = [](const std::string& s, size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  std::ostringstream os;
  // header: the first index hugs the label column, the rest right-align
  os << pad("", 6);
  for (int i = 0; i <= top; ++i) {
    std::string ix = std::to_string(i);
    os << ' ' << (i == 0 ? ix + std::string(width[i] - ix.size(), ' ') : pad(ix, width[i]));
  }
  os << '\n' << "total:";
  for (int i = 0; i <= top; ++i) os << ' ' << pad(total(i).str(), width[i]);
  os << '\n';
  for (int r = rmin; r <= rmax; ++r) {
    os << pad(std::to_string(r) + ":", 6);
    for (int i = 0; i <= top; ++i) os << ' ' << pad(cell(i, r), width[i]);
    os << '\n';
  }
  return os.str();
}

namespace {

// the boxes for lambda (and lambda') in the A-resolution
std::vector<std::pair<Partition, Partition>> a_side_shapes(const CaseConfig& cfg) {
  std::vector<std::pair<Partition, Partition>> out;
  int n = cfg.n;
  switch (cfg.kind) {
    case Case::Sympl:
      for (const auto& p : partitions_in_box(n, n + 2 * cfg.d)) out.push_back({p, {}});
      break;
    case Case::Orth:
      for (const auto& p : partitions_in_box(n, n + 2 * cfg.d + cfg.dprime)) out.push_back({p, {}});
      break;
    case Case::Complexes:
      for (const auto& p : partitions_in_box(n, cfg.m + cfg.d))
        for (const auto& q : partitions_in_box(cfg.m, n + cfg.d)) out.push_back({p, q});
      break;
  }
  return out;
}

}  // namespace

BettiTable a_betti_table(const CaseConfig& cfg, int max_i) {
  cfg.validate();
  if (cfg.kind == Case::Orth && cfg.k == 0 && cfg.d == 0 && cfg.dprime == 0)
    throw DomainError("k = 0 with dim V = 2n: OGr(n, V) has two components and the bundle method resolves the "
                      "normalization of B, not B");
  BettiTable t;
  t.gen_degree = cfg.gen_degree();
  for (const auto& [lam, lam2] : a_side_shapes(cfg)) {
    GenBott g = generalized_bott(cfg, lam, lam2);
    for (const auto& p : g.problems)
      t.problems.push_back("(" + lam.str() + (lam2.empty() ? "" : ";" + lam2.str()) + "): " + p);
    if (!g.defined || g.character.empty()) continue;
    int size = lam.size() + lam2.size();
    int i = size - g.iota;
    if (i > max_i) continue;
    if (i < 0) {
      t.problems.push_back("negative homological degree for " + lam.str());
      continue;
    }
    std::pair<int, int> key{i, t.gen_degree + size};
    Weight e = add_rect(cfg.n, cfg.k, lam).weight(cfg.n);
    Weight f = cfg.kind == Case::Complexes ? add_rect(cfg.m, cfg.l, lam2).weight(cfg.m) : Weight{};
    for (const auto& [v, c] : g.character) {
      Label lb{e, v, f};
      if (cfg.kind != Case::Complexes) lb.V.resize(cfg.n + cfg.d, 0);
      t.reps[key][lb] += c;
      t.entries[key] += c * label_dim(cfg, lb);
    }
  }
  return t;
}

LabelSum a_resolution_term(const CaseConfig& cfg, int i) {
  BettiTable t = a_betti_table(cfg, i);
  LabelSum out;
  for (const auto& [key, s] : t.reps)
    if (key.first == i)
      for (const auto& [l, c] : s) out[l] += c;
  return out;
}

std::map<int, LabelSum> poly_det_resolution(int n, int nd, int k, const Partition& nu, int max_i) {
  int d = nd - n;
  if (d < 0 || !nu.fits(d, k)) throw DomainError("need nu inside d x k with d = dim F - n >= 0");
  // no quadrics when m = 0: the complexes setup with V = F is a polynomial ring
  CaseConfig cfg = complexes_config(n, 0, d, nd, k, 0, nu, {});
  BettiTable t = a_betti_table(cfg, max_i);
  std::map<int, LabelSum> out;
  for (const auto& [key, s] : t.reps)
    for (const auto& [l, c] : s) out[key.first][{l.E, {}, l.V}] += c;
  return out;
}

std::map<int, LabelSum> b_resolution(const CaseConfig& cfg, int max_i) {
  cfg.validate();
  auto [lam, lam2] = howe_partner(cfg);
  Graded g = n_module_character(cfg, lam, lam2, max_i);
  std::map<int, LabelSum> out;
  for (auto& [i, s] : g) out[i] = std::move(s);
  return out;
}

LabelSum b_resolution_term(const CaseConfig& cfg, int i) {
  if (i < 0) throw DomainError("homological degree must be nonnegative");
  auto r = b_resolution(cfg, i);
  return r[i];
}

std::string render_reps(const CaseConfig& cfg, const LabelSum& s) {
  std::vector<std::pair<Label, Int>> items(s.begin(), s.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first.E != y.first.E) return x.first.E < y.first.E;
    if (x.first.V != y.first.V) return x.first.V > y.first.V;
    return x.first.F > y.first.F;
  });
  std::string out;
  for (const auto& [l, c] : items) {
    Label lb = l;
    if (cfg.kind != Case::Complexes) lb.V.resize(std::max<size_t>(lb.V.size(), cfg.n + cfg.d), 0);
    for (Int j = 0; j < c; ++j) {
      if (!out.empty()) out += " ⊕ ";
      out += label_str(lb);
    }
  }
  return out.empty() ? "0" : out;
}

std::map<int, LabelSum> eisenbud_terms(const CaseConfig& cfg, const BettiTable& a_table, int i) {
  std::map<int, LabelSum> out;
  int n = cfg.n, m = cfg.m;
  for (int j = 0; 2 * j <= i; ++j) {
    // D^j of the quadric space as (E label, F label) pairs
    std::vector<std::pair<Weight, Weight>> dj;
    switch (cfg.kind) {
      case Case::Sympl:
        for (const auto& th : partitions_of(2 * j, n)) {
          bool ok = true;
          Partition cols = th.transpose();
          for (int x : cols.parts()) ok = ok && x % 2 == 0;
          if (ok) dj.push_back({th.weight(n), {}});
        }
        break;
      case Case::Orth:
        for (const auto& th : partitions_of(2 * j, n)) {
          bool ok = true;
          for (int x : th.parts()) ok = ok && x % 2 == 0;
          if (ok) dj.push_back({th.weight(n), {}});
        }
        break;
      case Case::Complexes:
        for (const auto& th : partitions_of(j, std::min(n, m))) dj.push_back({th.weight(n), th.weight(m)});
        break;
    }
    for (const auto& [key, s] : a_table.reps) {
      if (key.first != i - 2 * j) continue;
      for (const auto& [l, c] : s)
        for (const auto& [de, df] : dj)
          for (const auto& [e, ce] : gl_tensor(l.E, de, n)) {
            if (cfg.kind != Case::Complexes) {
              out[key.second + 2 * j][{e, l.V, {}}] += c * ce;
              continue;
            }
            for (const auto& [f, cf] : gl_tensor(l.F, df, m)) out[key.second + 2 * j][{e, l.V, f}] += c * ce * cf;
          }
    }
  }
  return out;
}

CiShiftReport ci_shift_check(const CaseConfig& cfg, int max_sum) {
  if (cfg.kind != Case::Sympl) throw DomainError("ci_shift_check is implemented for the symplectic case");
  cfg.validate();
  CiShiftReport rep;
  int n = cfg.n, nd = n + cfg.d, k = cfg.k;
  Partition target = cfg.nu.transpose();
  for (const auto& lam : partitions_in_box(n, n + 2 * cfg.d)) {
    if (lam.size() > max_sum) continue;
    ++rep.checked;
    GenBott g = generalized_bott(cfg, lam);
    VSum a_side = g.defined ? g.character : VSum{};
    VSum s_side;
    if (g.defined)
      for (const auto& rho : partitions_in_box(k, nd)) {
        auto prod = newell_littlewood(FormType::Sp, g.tau, rho, 2 * k);
        auto it = prod.find(target);
        if (it == prod.end()) continue;
        s_side[rho.transpose().complement(nd, k).weight(nd)] += it->second;
      }
    VSum a_pad;
    for (const auto& [w, c] : a_side) {
      Weight ww = w;
      ww.resize(nd, 0);
      a_pad[ww] += c;
    }
    prune(a_pad);
    prune(s_side);
    if (a_pad != s_side) {
      rep.ok = false;
      std::string msg = "lambda=(" + lam.str() + ") i=" + std::to_string(g.iota) +
                        " j=" + std::to_string(lam.size() - g.iota) + ": A side";
      for (const auto& [w, c] : a_pad) msg += " " + c.str() + "x" + weight_str(w);
      msg += " / S side";
      for (const auto& [w, c] : s_side) msg += " " + c.str() + "x" + weight_str(w);
      rep.mismatches.push_back(msg);
    }
  }
  return rep;
}

std::string SymTerm::str() const {
  std::vector<std::string> parts;
  auto add = [&](int e, const std::string& sym) {
    if (e == 0) return;
    parts.push_back(e == 1 ? sym.substr(sym.find(' ') + 1) : sym.substr(0, sym.find(' ')) + "^" + std::to_string(e) + " " + sym.substr(sym.find(' ') + 1));
  };
  add(p, "Sym E*");
  add(q, "Lambda V");
  add(r, "Sym E");
  std::string s;
  for (const auto& x : parts) s += (s.empty() ? "" : " (x) ") + x;
  if (s.empty()) s = "k";
  return s + " (x) B(" + std::to_string(-twist) + ")";
}

std::vector<SymTerm> sym_complex_terms(int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  std::vector<SymTerm> out;
  for (int t = 2 * k; t >= 0; --t)
    for (int r = 0; 2 * r <= t; ++r) {
      int q = t - 2 * r, p = k - q - r;
      if (p < 0) continue;
      out.push_back({t, t, p, q, r});
    }
  return out;
}

std::vector<std::pair<SymTerm, int>> sym0_complex_terms(int k) {
  std::vector<std::pair<SymTerm, int>> out;
  for (const auto& s : sym_complex_terms(k)) out.push_back({s, 1});
  if (k >= 2)
    for (auto s : sym_complex_terms(k - 2)) {
      s.t += 2;
      s.twist += 2;
      out.push_back({s, -1});
    }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first.t > y.first.t; });
  return out;
}

SupportVariety support_variety(const CaseConfig& cfg) {
  cfg.validate();
  switch (cfg.kind) {
    case Case::Sympl: return {"Lambda^2 E", "skew", std::min(2 * cfg.k, 2 * (cfg.n / 2))};
    case Case::Orth: return {"Sym^2 E", "symmetric", std::min(2 * cfg.k, cfg.n)};
    case Case::Complexes: return {"E (x) F*", "none", std::min({cfg.k + cfg.l, cfg.n, cfg.m})};
  }
  return {};
}

}  // namespace lwr
