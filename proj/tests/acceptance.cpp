// Acceptance gate: one PASS/FAIL line per criterion; exit status is the number of failures.
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "lieon/classical.hpp"
#include "support/generators.hpp"

using namespace lieon;
using namespace lieon::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

// (-1)^{(p-1)(q-1)} for xi-degrees p, q
int skew_sign(std::size_t p, std::size_t q) { return (p % 2 == 0 && q % 2 == 0) ? -1 : 1; }

Outcome schouten_engine() {
  Outcome o;
  Rng rng(101);
  std::size_t checked = 0;
  for (int t = 0; t < 10000; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
    auto p = random_multivector(rng, n, static_cast<std::size_t>(uniform(rng, 0, 3)), 2, static_cast<std::size_t>(uniform(rng, 1, 3)));
    auto q = random_multivector(rng, n, static_cast<std::size_t>(uniform(rng, 0, 3)), 2, static_cast<std::size_t>(uniform(rng, 1, 3)));
    if (!(schouten(p, q) == schouten_oracle(p, q))) fail(o, "oracle mismatch on pair " + std::to_string(t));
    ++checked;
  }
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
    std::array<std::size_t, 3> deg{};
    std::array<MultiVector, 3> m;
    for (int k = 0; k < 3; ++k) {
      deg[k] = static_cast<std::size_t>(uniform(rng, 0, 3));
      m[k] = random_multivector(rng, n, deg[k], 2, static_cast<std::size_t>(uniform(rng, 1, 2)));
    }
    auto& [p, q, r] = m;
    // [[P,Q]] = -(-1)^{(p-1)(q-1)} [[Q,P]]
    int s = skew_sign(deg[0], deg[1]);
    if (!(schouten(p, q) + schouten(q, p) * Scalar(s)).is_zero()) fail(o, "skew fails on triple " + std::to_string(t));
    // sum over cyclic permutations of (-1)^{(p-1)(r-1)} [[P,[[Q,R]]]]
    auto term = [&](const MultiVector& a, const MultiVector& b, const MultiVector& c, std::size_t da, std::size_t dc) {
      return schouten(a, schouten(b, c)) * Scalar(skew_sign(da, dc));
    };
    MultiVector jac = term(p, q, r, deg[0], deg[2]) + term(q, r, p, deg[1], deg[0]) + term(r, p, q, deg[2], deg[1]);
    if (!jac.is_zero()) fail(o, "graded Jacobi fails on triple " + std::to_string(t));
  }
  if (o.pass) o.detail = std::to_string(checked) + " pairs, 1000 triples";
  return o;
}

Outcome duality() {
  Outcome o;
  Rng rng(202);
  std::size_t agree = 0, yes = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 6));
    LieAlgebra a = random_sparse_lie(rng, n);
    LieAlgebra b = random_sparse_lie(rng, n);
    bool c = compatible(a, b);
    bool s = schouten(lie_to_bivector(a), lie_to_bivector(b)).is_zero();
    bool j = jacobi_compatible(a.sc(), b.sc());
    if (c != s || c != j) {
      fail(o, "disagreement on case " + std::to_string(t));
      continue;
    }
    ++agree;
    yes += c;
  }
  if (o.pass) o.detail = std::to_string(agree) + " agree (" + std::to_string(yes) + " compatible)";
  return o;
}

LieAlgebra dyon_sum(std::size_t n, std::size_t k) {
  LieAlgebra g = LieAlgebra::abelian(n - 2 * k);
  StructureConstants b(2);
  b.add_bracket(0, 1, 1, 1);
  for (std::size_t i = 0; i < k; ++i) g = direct_sum(LieAlgebra(b), g);
  return g;
}

Outcome lie_rank_check() {
  Outcome o;
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 0; 2 * k <= n; ++k)
      if (lie_rank(dyon_sum(n, k)) != 2 * k) fail(o, "g_{" + std::to_string(n) + "," + std::to_string(k) + "}");
  Rng rng(303);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 4, 7));
    auto specs = random_triadon_pencil(rng, n, static_cast<std::size_t>(uniform(rng, 1, 4)));
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < specs.size(); ++i) coeffs.push_back(small_rational(rng, 3, true));
    LieAlgebra g = assemble_first_level(specs, coeffs);
    if (lie_rank(g) >= g.dim()) fail(o, "full rank triadon sum on case " + std::to_string(t));
  }
  if (o.pass) o.detail = "g_{n,k} for n<=8, 200 triadon sums";
  return o;
}

Outcome modular_check() {
  Outcome o;
  Rng rng(404);
  for (int t = 0; t < 200; ++t) {
    LieAlgebra g = random_non_unimodular(rng, 6);
    ModularSplit sp = modular_disassemble(g);
    std::string tag = " on case " + std::to_string(t);
    if (!(add(sp.uni.sc(), sp.non.sc()) == g.sc())) fail(o, "sum" + tag);
    if (!schouten(lie_to_bivector(sp.uni), lie_to_bivector(sp.non)).is_zero()) fail(o, "compatibility" + tag);
    if (!is_unimodular(sp.uni)) fail(o, "uni part not unimodular" + tag);
    if (!satisfies_triple_relations(sp.triple)) fail(o, "triple relations" + tag);
    if (!is_casimir(sp.uni.sc(), sp.triple.nu)) fail(o, "nu not a Casimir" + tag);
    ModularSplit again = modular_disassemble(sp.non);
    if (!(again.non == sp.non) || !again.uni.sc().is_zero()) fail(o, "idempotence" + tag);
  }
  if (o.pass) o.detail = "200 algebras";
  return o;
}

bool matching_ok(const MatchingPair& m) {
  return !is_unimodular(m.g1) && !is_unimodular(m.g2) &&
         schouten(lie_to_bivector(m.g1), lie_to_bivector(m.g2)).is_zero() && verify_matching(m);
}

Outcome matching_check() {
  Outcome o;
  Rng rng(505);
  for (int t = 0; t < 100; ++t) {
    MatchingQuadruple q = random_quadruple(rng, 4);
    if (!is_valid(q)) fail(o, "generated quadruple invalid");
    else if (!matching_ok(matching_from_quadruple(q))) fail(o, "quadruple " + std::to_string(t));
  }
  for (int t = 0; t < 100; ++t) {
    MatchingQuintuple q = random_quintuple(rng, 4);
    if (!is_valid(q)) fail(o, "generated quintuple invalid");
    else if (!matching_ok(matching_from_quintuple(q))) fail(o, "quintuple " + std::to_string(t));
  }
  if (o.pass) o.detail = "100 quadruples, 100 quintuples";
  return o;
}

Outcome predicate_check() {
  Outcome o;
  Rng rng(606);
  const std::array<std::pair<LieonKind, LieonKind>, 3> kinds{
      {{LieonKind::Triadon, LieonKind::Triadon}, {LieonKind::Dyon, LieonKind::Triadon}, {LieonKind::Dyon, LieonKind::Dyon}}};
  const char* names[] = {"TT", "DT", "DD"};
  std::ostringstream detail;
  std::size_t dd_reported = 0;
  for (std::size_t kk = 0; kk < kinds.size(); ++kk) {
    std::size_t positive = 0, bad = 0;
    for (int t = 0; t < 1000; ++t) {
      std::size_t n = static_cast<std::size_t>(uniform(rng, 3, 7));
      LieonPair pr = random_lieon_pair(rng, n, kinds[kk].first, kinds[kk].second);
      bool pred = lieons_compatible(pr.a, pr.b);
      bool truth = schouten(lie_to_bivector(lieon_structure(pr.a)), lie_to_bivector(lieon_structure(pr.b))).is_zero();
      positive += truth;
      if (pred == truth) continue;
      std::size_t d = intersect(pr.a.center, pr.b.center).dim();
      if (kk == 2 && d + 3 == n) {
        ++dd_reported;
        std::cout << "  reported: dyon-dyon n=" << n << " dim C12=n-3 predicate=" << pred << " schouten=" << truth << "\n";
        continue;
      }
      ++bad;
    }
    if (bad) fail(o, std::string(names[kk]) + ": " + std::to_string(bad) + " disagreements");
    detail << names[kk] << " 1000 (" << positive << " compatible) ";
  }
  detail << dd_reported << " reported";
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome solvable_check() {
  Outcome o;
  Rng rng(707);
  std::size_t ends = 0;
  for (int t = 0; t < 100; ++t) {
    LieAlgebra g = random_solvable(rng, static_cast<std::size_t>(uniform(rng, 1, 6)));
    AScheme s = disassemble_solvable(g);
    SchemeReport r = verify_scheme(s);
    if (!r.valid) fail(o, "invalid scheme on case " + std::to_string(t) + ": " + (r.violations.empty() ? "" : r.violations[0]));
    if (!r.complete_lenient) fail(o, "non-lieon end term on case " + std::to_string(t));
    if (!(s.root().algebra == g.sc())) fail(o, "root differs on case " + std::to_string(t));
    ends += r.end_terms.size();
  }
  if (o.pass) o.detail = "100 algebras, " + std::to_string(ends) + " end terms";
  return o;
}

Outcome two_triadons_check() {
  Outcome o;
  Matrix a = Matrix::diagonal({Scalar(1), Scalar(-1)});
  Matrix rot = Matrix::from_rows({{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}}, 2);
  auto eig = gamma_decompose(a);
  auto rotated = gamma_decompose(a, rot);
  auto kinds = [](const std::vector<LieAlgebra>& v, LieonClass c) {
    if (v.size() != 2) return false;
    for (const auto& g : v)
      if (classify_lieon(g.sc()).cls != c) return false;
    return true;
  };
  if (!kinds(eig, LieonClass::Dyon)) fail(o, "eigenbasis terms are not two dyons");
  if (!kinds(rotated, LieonClass::Triadon)) fail(o, "rotated terms are not two triadons");
  auto scheme = [&](const std::vector<LieAlgebra>& v) {
    std::vector<StructureConstants> kids;
    for (const auto& g : v) kids.push_back(g.sc());
    return to_scheme(tree_with_children(gamma_A(a).sc(), kids));
  };
  AScheme s1 = scheme(eig), s2 = scheme(rotated);
  SchemeReport r1 = verify_scheme(s1), r2 = verify_scheme(s2);
  if (!(r1.valid && r1.complete && r2.valid && r2.complete)) fail(o, "schemes do not verify");
  if (!(s1.root().algebra == s2.root().algebra)) fail(o, "roots differ");
  if (o.pass) o.detail = "2 dyons and 2 triadons over the same root";
  return o;
}

struct PresetCase {
  std::string family;
  std::size_t n;
};

const std::vector<PresetCase> kPresets{{"so", 3}, {"so", 4}, {"so", 5}, {"gl", 2}, {"sl", 2},
                                       {"sl", 3}, {"sp", 1}, {"sp", 2}, {"u", 2},  {"su", 2}};

Outcome classical_check() {
  Outcome o;
  std::ostringstream detail;
  auto run = [&](const std::string& fam, std::size_t n) {
    ClassicalPreset p{parse_family(fam), n, {}};
    AScheme s = disassemble(p);
    SchemeReport r = verify_scheme(s);
    if (!r.valid || !r.complete) fail(o, fam + std::to_string(n) + " does not verify complete");
    if (!(s.root().algebra == build_algebra(p).sc())) fail(o, fam + std::to_string(n) + " root differs");
    return std::pair{s, lieon_census(s)};
  };
  for (std::size_t n = 3; n <= 5; ++n) {
    auto [s, c] = run("so", n);
    std::size_t expect = n * (n - 1) * (n - 2) / 2;
    // n = 3 is assembled in a single step from its three triadons
    std::size_t depth = n == 3 ? 1 : 2;
    if (c.triadons != expect || c.dyons != 0) fail(o, "so" + std::to_string(n) + " census");
    if (c.steps != depth) fail(o, "so" + std::to_string(n) + " depth " + std::to_string(c.steps));
    detail << "so" << n << ":" << c.triadons << "/" << c.steps << " ";
  }
  {
    auto [s, c] = run("gl", 2);
    if (c.steps != 3) fail(o, "gl2 depth " + std::to_string(c.steps));
    detail << "gl2 depth " << c.steps << " ";
  }
  for (std::size_t n : {2, 3}) {
    auto [s, c] = run("sl", n);
    if (c.steps > 4) fail(o, "sl" + std::to_string(n) + " depth " + std::to_string(c.steps));
    detail << "sl" << n << " depth " << c.steps << " ";
  }
  for (std::size_t n : {1, 2}) run("sp", n);
  run("u", 2);
  auto [su, csu] = run("su", 2);
  auto [sl, csl] = run("sl", 2);
  if (su.root().algebra == sl.root().algebra) fail(o, "su2 root equals sl2 root");
  if (o.pass) o.detail = detail.str() + "sp1 sp2 u2 su2 verified";
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// stdout of the command and its exit status
std::pair<std::string, int> run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

Outcome cli_check(const std::string& cli, const std::string& workdir) {
  Outcome o;
  if (cli.empty()) {
    fail(o, "no CLI path given");
    return o;
  }
  for (const auto& pc : kPresets) {
    std::string name = pc.family + std::to_string(pc.n);
    std::array<std::string, 2> scheme, report;
    for (int run = 0; run < 2; ++run) {
      std::string path = workdir + "/accept_" + name + "_" + std::to_string(run) + ".json";
      auto [out1, rc1] = run_command("\"" + cli + "\" classical --family " + pc.family + " --n " + std::to_string(pc.n) +
                                     " --out \"" + path + "\"");
      auto [out2, rc2] = run_command("\"" + cli + "\" scheme-verify --strict-complete \"" + path + "\"");
      if (rc1 != 0 || rc2 != 0) fail(o, name + " exit status " + std::to_string(rc1) + "/" + std::to_string(rc2));
      scheme[run] = read_file(path);
      report[run] = out2;
    }
    if (scheme[0].empty() || scheme[0] != scheme[1] || report[0] != report[1]) fail(o, name + " output differs");
  }
  if (o.pass) o.detail = std::to_string(kPresets.size()) + " presets byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli, workdir = ".";
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string key = argv[i];
    if (key == "--cli") cli = argv[i + 1];
    if (key == "--workdir") workdir = argv[i + 1];
  }
  std::filesystem::create_directories(workdir);
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"schouten engine against oracle, skew and graded Jacobi", schouten_engine},
      {"compatibility equals vanishing Schouten bracket", duality},
      {"lie rank of dyon sums and triadon sums", lie_rank_check},
      {"modular disassembling invariants", modular_check},
      {"matching quadruples and quintuples", matching_check},
      {"geometric lieon predicates against Schouten", predicate_check},
      {"solvable disassembling completeness", solvable_check},
      {"two dyons and two triadons of diag(1,-1)", two_triadons_check},
      {"classical schemes and counts", classical_check},
      {"CLI classical to scheme-verify determinism", [&] { return cli_check(cli, workdir); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      fail(o, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (i == 0 && secs > 60) fail(o, "took longer than 60 s");
    if (i == 8 && secs > 120) fail(o, "took longer than 120 s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " [" << timing << "] "
              << o.detail << std::endl;
    failures += !o.pass;
  }
  return failures;
}
