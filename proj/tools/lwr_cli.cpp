#include "lwr/bott.hpp"
#include "lwr/branching.hpp"
#include "lwr/characters.hpp"
#include "lwr/howe.hpp"
#include "lwr/modrules.hpp"
#include "lwr/resolution.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace lwr;
using nlohmann::json;

namespace {

struct CaseFlags {
  std::string kind = "sympl";
  int n = -1, dimV = -1, m = 0, dprime = -1, k = 0, l = 0, a = -1;
  std::string nu, nuprime;

  void attach(CLI::App* app) {
    app->add_option("--case", kind, "sympl, orth or complexes")
        ->check(CLI::IsMember({"sympl", "orth", "complexes"}));
    app->add_option("--n", n, "dim E")->required();
    app->add_option("--dimV", dimV, "dim V")->required();
    app->add_option("--m", m, "dim F (complexes)");
    app->add_option("--dprime", dprime, "0 or 1 (orth)");
    app->add_option("--k", k, "twist k");
    app->add_option("--l", l, "twist l (complexes)");
    app->add_option("--a", a, "dim of the first block of V (complexes)");
    app->add_option("--nu", nu, "partition, comma separated");
    app->add_option("--nuprime", nuprime, "partition (complexes)");
  }

  CaseConfig build() const {
    Partition p = Partition::parse(nu), p2 = Partition::parse(nuprime);
    if (kind == "sympl") {
      if (dimV < 2 * n || (dimV - 2 * n) % 2)
        throw DomainError("symplectic: dim V must be 2n + 2d with d >= 0 (got n=" + std::to_string(n) +
                          ", dimV=" + std::to_string(dimV) + ")");
      return sympl_config(n, (dimV - 2 * n) / 2, k, p);
    }
    if (kind == "orth") {
      int dp = dprime < 0 ? (dimV - 2 * n) % 2 : dprime;
      if (dimV < 2 * n + dp || (dimV - 2 * n - dp) % 2)
        throw DomainError("orthogonal: dim V must be 2n + 2d + d' with d >= 0, d' in {0,1}");
      return orth_config(n, (dimV - 2 * n - dp) / 2, dp, k, p);
    }
    int d = dimV - n - m;
    if (d < 0) throw DomainError("complexes: dim V must be n + m + d with d >= 0");
    int aa = a >= 0 ? a : dimV - m - p2.length();
    return complexes_config(n, m, d, aa, k, l, p, p2);
  }
};

void print_sum(std::ostream& os, const std::map<Partition, Int>& s) {
  if (s.empty()) {
    os << "0\n";
    return;
  }
  bool first = true;
  for (const auto& [p, c] : s) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    os << "[" << p.str() << "]";
  }
  os << "\n";
}

json labels_json(const LabelSum& s) {
  json arr = json::array();
  for (const auto& [l, c] : s) {
    json e{{"E", l.E}, {"V", l.V}, {"mult", c.str()}};
    e["F"] = l.F;
    arr.push_back(e);
  }
  return arr;
}

json params_json(const CaseConfig& c) {
  json p{{"n", c.n}, {"d", c.d}, {"dimV", c.dimV()}, {"k", c.k}, {"nu", c.nu.parts()}};
  if (c.kind == Case::Orth) p["dprime"] = c.dprime;
  if (c.kind == Case::Complexes) {
    p["m"] = c.m;
    p["a"] = c.a;
    p["b"] = c.b;
    p["l"] = c.l;
    p["nuprime"] = c.nuprime.parts();
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood variety resolutions"};
  app.require_subcommand(1);
  std::ostringstream out;

  // lr
  std::string s1, s2, s3;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^nu_{lam mu}");
  lr->add_option("lam", s1)->required();
  lr->add_option("mu", s2)->required();
  lr->add_option("nu", s3)->required();
  lr->callback([&] { out << lr_coefficient(Partition::parse(s1), Partition::parse(s2), Partition::parse(s3)) << "\n"; });

  auto* tr = app.add_subcommand("transpose", "conjugate partition");
  tr->add_option("lam", s1)->required();
  tr->callback([&] { out << Partition::parse(s1).transpose().str() << "\n"; });

  // modrule
  std::string mtype = "C";
  int mk = 0;
  auto* mr = app.add_subcommand("modrule", "modification rule with trace");
  mr->add_option("--type", mtype)->check(CLI::IsMember({"C", "D", "spin", "A"}));
  mr->add_option("--k", mk)->required();
  mr->add_option("lam", s1)->required();
  mr->add_option("lam2", s2);
  mr->callback([&] {
    Partition p = Partition::parse(s1), p2 = Partition::parse(s2);
    ModResult r = mtype == "C"      ? mod_c(p, mk)
                  : mtype == "D"    ? mod_d(p, mk)
                  : mtype == "spin" ? mod_spin(p, mk)
                                    : mod_a(p, p2, mk);
    for (const auto& st : r.trace)
      out << "strip from (" << st.before.str() << ") length=" << st.length << " columns=" << st.columns << "\n";
    if (!r.defined) {
      out << "undefined\n";
      return;
    }
    out << "tau=(" << r.tau.str() << ")";
    if (mtype == "A") out << " tau2=(" << r.tau2.str() << ")";
    out << " iota=" << r.iota << "\n";
  });

  // bott
  std::string btype = "GL";
  int bM = 0;
  auto* bo = app.add_subcommand("bott", "Borel-Weil-Bott on a weight");
  bo->add_option("--type", btype)->check(CLI::IsMember({"GL", "C", "B", "D"}));
  bo->add_option("--M", bM, "dim V for types B and D");
  bo->add_option("weight", s1)->required();
  bo->callback([&] {
    Weight w = parse_weight(s1);
    BottOutcome o;
    if (btype == "GL") o = bott_gl(w);
    else if (btype == "C") o = bott_type_c(w);
    else {
      int M = bM > 0 ? bM : 2 * static_cast<int>(w.size()) + (btype == "B" ? 1 : 0);
      if ((M % 2 == 1) != (btype == "B") || M / 2 != static_cast<int>(w.size()))
        throw DomainError("--M must be 2*len+1 (B) or 2*len (D)");
      o = bott_type_bd(w, M);
    }
    if (o.vanishes) out << "vanishes\n";
    else out << "degree=" << o.degree << " weight=(" << weight_str(o.dominant) << ")\n";
  });

  // branch / nl
  std::string group = "Sp";
  int gM = 0;
  auto* br = app.add_subcommand("branch", "restrict S_beta(C^M) to Sp(M) or O(M)");
  br->add_option("--group", group)->check(CLI::IsMember({"Sp", "O"}));
  br->add_option("--M", gM)->required();
  br->add_option("beta", s1)->required();
  br->callback([&] {
    FormType t = group == "Sp" ? FormType::Sp : FormType::O;
    if (t == FormType::Sp && gM % 2) throw DomainError("Sp needs even M");
    print_sum(out, littlewood_restrict(t, Partition::parse(s1), gM));
  });
  auto* nl = app.add_subcommand("nl", "tensor product of Sp(M) or O(M) irreducibles");
  nl->add_option("--group", group)->check(CLI::IsMember({"Sp", "O"}));
  nl->add_option("--M", gM)->required();
  nl->add_option("mu", s1)->required();
  nl->add_option("nu", s2)->required();
  nl->callback([&] {
    FormType t = group == "Sp" ? FormType::Sp : FormType::O;
    if (t == FormType::Sp && gM % 2) throw DomainError("Sp needs even M");
    print_sum(out, newell_littlewood(t, Partition::parse(s1), Partition::parse(s2), gM));
  });

  // character / ncharacter
  CaseFlags cf;
  int max_deg = 4;
  auto* ch = app.add_subcommand("character", "graded character of the module M");
  cf.attach(ch);
  ch->add_option("--max-deg", max_deg);
  ch->callback([&] {
    CaseConfig c = cf.build();
    for (const auto& [deg, s] : module_character(c, c.gen_degree() + max_deg))
      out << deg << ": " << render_reps(c, s) << "\n";
  });
  std::string lam_s, lam2_s;
  auto* nch = app.add_subcommand("ncharacter", "graded character of the dual-side module N");
  cf.attach(nch);
  nch->add_option("--lambda", lam_s);
  nch->add_option("--lambda2", lam2_s);
  nch->add_option("--max-deg", max_deg);
  nch->callback([&] {
    CaseConfig c = cf.build();
    auto partner = howe_partner(c);
    Partition lam = nch->count("--lambda") ? Partition::parse(lam_s) : partner.first;
    Partition lam2 = nch->count("--lambda2") ? Partition::parse(lam2_s) : partner.second;
    for (const auto& [deg, s] : n_module_character(c, lam, lam2, max_deg)) out << deg << ": " << render_reps(c, s) << "\n";
  });

  // resolve
  std::string ring = "A", format = "table";
  int max_i = 1 << 20;
  auto* rs = app.add_subcommand("resolve", "minimal free resolution of M over A or B");
  cf.attach(rs);
  rs->add_option("--ring", ring)->check(CLI::IsMember({"A", "B"}));
  rs->add_option("--max-i", max_i);
  rs->add_option("--format", format)->check(CLI::IsMember({"table", "json", "reps"}));
  rs->callback([&] {
    CaseConfig c = cf.build();
    std::map<int, std::map<int, LabelSum>> terms;  // i -> internal -> reps
    BettiTable t;
    if (ring == "A") {
      t = a_betti_table(c, max_i);
      if (!t.problems.empty()) {
        std::string dump;
        for (const auto& p : t.problems) dump += p + "\n";
        throw std::logic_error(dump);
      }
      for (const auto& [key, s] : t.reps) terms[key.first][key.second] = s;
    } else {
      if (max_i == (1 << 20)) throw DomainError("--ring B needs --max-i (the resolution is infinite)");
      t.gen_degree = c.gen_degree();
      for (const auto& [i, s] : b_resolution(c, max_i)) {
        terms[i][c.gen_degree() + i] = s;
        for (const auto& [l, mult] : s) t.entries[{i, c.gen_degree() + i}] += mult * label_dim(c, l);
      }
    }
    if (format == "table") {
      out << t.render();
    } else if (format == "reps") {
      for (const auto& [i, byj] : terms) {
        LabelSum all;
        for (const auto& [j, s] : byj)
          for (const auto& [l, mult] : s) all[l] += mult;
        out << "F_" << i << " = " << render_reps(c, all) << "\n";
      }
    } else {
      json doc{{"case", cf.kind}, {"ring", ring}, {"params", params_json(c)}, {"terms", json::array()}};
      for (const auto& [i, byj] : terms)
        for (const auto& [j, s] : byj) doc["terms"].push_back({{"i", i}, {"j", j}, {"labels", labels_json(s)}});
      out << doc.dump(2) << "\n";
    }
  });

  // symcomplex
  int sk = 2;
  bool zero = false;
  auto* sc = app.add_subcommand("symcomplex", "terms of Sym^k of the complex E -> V -> E*");
  sc->add_option("--k", sk)->required();
  sc->add_flag("--zero", zero, "Sym^k_0 (subtract the shifted Sym^{k-2})");
  sc->callback([&] {
    if (!zero) {
      for (const auto& t : sym_complex_terms(sk)) out << t.t << ": " << t.str() << "\n";
      return;
    }
    for (const auto& [t, sgn] : sym0_complex_terms(sk)) out << t.t << ": " << (sgn < 0 ? "- " : "") << t.str() << "\n";
  });

  auto* sp = app.add_subcommand("support", "support variety of M as a module over the Koszul dual");
  cf.attach(sp);
  sp->callback([&] {
    SupportVariety v = support_variety(cf.build());
    out << v.ambient << " " << v.symmetry << " rank<=" << v.rank_bound << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "usage error: " << e.what() << "\n"
              << "example: lwr resolve --case sympl --ring A --n 4 --dimV 8 --k 1 --nu \"\" --format table\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal assertion failed:\n" << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << out.str();
  return 0;
}
