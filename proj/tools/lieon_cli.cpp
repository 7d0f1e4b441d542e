#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lieon/classical.hpp"
#include "lieon/json_io.hpp"
#include "lieon/modular.hpp"
#include "lieon/multivec.hpp"

using namespace lieon;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j, const std::string& out) {
  std::string text = dump_json(j);
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError("cannot write " + out);
  f << text;
}

StructureConstants load_structure(const std::string& path) { return structure_from_json(read_json_file(path)); }

LieAlgebra load_algebra(const std::string& path) {
  StructureConstants sc = load_structure(path);
  if (!satisfies_jacobi(sc)) throw NotLieError(path + ": not a Lie algebra");
  return LieAlgebra(sc);
}

Vector parse_params(const std::string& text) {
  Vector out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  return out;
}

int cmd_check(const std::string& path) {
  StructureConstants sc = load_structure(path);
  Jacobiator j = jacobiator(sc);
  if (j.empty()) {
    std::cout << "Lie algebra of dimension " << sc.dim() << "\n";
    return kOk;
  }
  std::cout << "Jacobi identity fails on " << j.size() << " basis triple(s)\n";
  const auto& [t, v] = *j.begin();
  auto [a, b, c] = t;
  std::cout << "first: J(e" << a + 1 << ",e" << b + 1 << ",e" << c + 1 << ") = (";
  for (std::size_t k = 0; k < v.size(); ++k) std::cout << (k ? ", " : "") << to_string(v[k]);
  std::cout << ")\n";
  return kFalse;
}

int cmd_classify(const std::string& path) {
  LieAlgebra g = load_algebra(path);
  std::cout << dump_json(to_json(classify_lieon(g.sc())));
  return kOk;
}

int cmd_compat(const std::vector<std::string>& paths) {
  std::vector<LieAlgebra> algs;
  for (const auto& p : paths) algs.push_back(load_algebra(p));
  for (std::size_t i = 1; i < algs.size(); ++i)
    if (algs[i].dim() != algs[0].dim()) throw DimensionError("compat: dimension mismatch");
  bool all = true;
  std::string witness;
  std::vector<std::vector<bool>> table(algs.size(), std::vector<bool>(algs.size(), true));
  for (std::size_t i = 0; i < algs.size(); ++i)
    for (std::size_t j = i + 1; j < algs.size(); ++j) {
      MultiVector s = schouten(lie_to_bivector(algs[i]), lie_to_bivector(algs[j]));
      bool ok = s.is_zero();
      table[i][j] = table[j][i] = ok;
      if (!ok && witness.empty()) {
        MultiVector first(s.n());
        first.add_term(s.terms().begin()->first, s.terms().begin()->second);
        witness = "[[P" + std::to_string(i + 1) + ",P" + std::to_string(j + 1) + "]] contains " + first.to_string();
      }
      all = all && ok;
    }
  for (std::size_t i = 0; i < algs.size(); ++i) {
    for (std::size_t j = 0; j < algs.size(); ++j) std::cout << (j ? " " : "") << (table[i][j] ? "1" : "0");
    std::cout << "\n";
  }
  if (!all) {
    std::cout << "incompatible; witness: " << witness << "\n";
    return kFalse;
  }
  std::cout << "compatible\n";
  return kOk;
}

int cmd_disassemble(const std::string& path, bool modular, int nu_index, const std::string& out) {
  LieAlgebra g = load_algebra(path);
  if (!modular) {
    if (!is_solvable(g.sc())) {
      std::cerr << "algebra is not solvable; supply a splitting or use --modular\n";
      return kFalse;
    }
    emit(to_json(disassemble_solvable(g)), out);
    return kOk;
  }
  Vector theta = modular_vector(g);
  if (is_zero(theta)) {
    std::cerr << "algebra is unimodular\n";
    return kFalse;
  }
  std::optional<Vector> nu;
  if (nu_index > 0) {
    std::size_t i = static_cast<std::size_t>(nu_index - 1);
    if (i >= g.dim()) throw InputError("--nu out of range");
    if (sgn(theta[i]) == 0) throw InputError("--nu: theta vanishes on that basis vector");
    nu = unit_vector(g.dim(), i);
    (*nu)[i] = 1 / theta[i];
  }
  ModularSplit sp = modular_disassemble(g, nu);
  SchemeTree t{g.sc(), {}};
  t.children.push_back(leaf_tree(sp.uni.sc()));
  t.children.push_back(leaf_tree(sp.non.sc()));
  emit(to_json(to_scheme(normalize(std::move(t)))), out);
  return kOk;
}

int cmd_scheme_verify(const std::string& path, bool strict) {
  AScheme s = scheme_from_json(read_json_file(path));
  SchemeReport r = verify_scheme(s);
  std::cout << dump_json(to_json(r));
  if (!r.valid) return kFalse;
  if (strict && !r.complete) return kFalse;
  return kOk;
}

int cmd_classical(const std::string& family, std::size_t n, const std::string& params, const std::string& out) {
  ClassicalPreset p{parse_family(family), n, parse_params(params)};
  validate(p);
  AScheme s = disassemble(p);
  Json j = to_json(s);
  j["census"] = to_json(lieon_census(s));
  emit(j, out);
  return kOk;
}

int cmd_rank(const std::string& path) {
  std::cout << lie_rank(load_algebra(path)) << "\n";
  return kOk;
}

int cmd_modular(const std::string& path) {
  LieAlgebra g = load_algebra(path);
  Vector theta = modular_vector(g);
  Json j{{"theta", to_json(theta)}, {"unimodular", is_zero(theta)}};
  if (!is_zero(theta)) {
    ModularSplit sp = modular_disassemble(g);
    j["uni"] = to_json(sp.uni.sc());
    j["non"] = to_json(sp.non.sc());
    j["nu"] = to_json(sp.triple.nu);
    j["A"] = to_json(sp.triple.a);
  }
  std::cout << dump_json(j);
  return kOk;
}

// Quick randomized consistency pass over the core identities.
int cmd_selftest(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::size_t failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 4;
    auto random_bivector = [&] {
      MultiVector p(n);
      for (int t = 0; t < 3; ++t) {
        std::size_t a = rng() % n, b = rng() % n, k = rng() % n;
        if (a == b) continue;
        p = p + wedge(MultiVector::x(n, k), wedge(MultiVector::xi(n, a), MultiVector::xi(n, b))) * Scalar(coef(rng));
      }
      return p;
    };
    MultiVector p = random_bivector(), q = random_bivector();
    if (!(schouten(p, q) == schouten_oracle(p, q))) ++failures;
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 3 + rng() % 3;
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      Vector r(n);
      for (auto& x : r) x = coef(rng);
      rows.push_back(r);
    }
    Matrix b = Matrix::from_rows(rows, n);
    if (rank(b) != n) continue;
    StructureConstants heis(n);
    heis.add_bracket(0, 1, 2, 1);
    StructureConstants g = change_basis(heis, b);
    if (!satisfies_jacobi(g) || classify_lieon(g).cls != LieonClass::Triadon) ++failures;
  }
  std::cout << (failures == 0 ? "selftest passed" : "selftest failed: " + std::to_string(failures)) << "\n";
  return failures == 0 ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie algebra structures, compatibility and disassembling"};
  app.require_subcommand(1);
  std::string file, out, family, params;
  std::vector<std::string> files;
  bool modular = false, strict = false;
  int nu_index = 0;
  std::size_t n = 2;
  unsigned seed = 1;

  auto* check = app.add_subcommand("check", "Report whether a structure satisfies the Jacobi identity");
  check->add_option("file", file, "structure JSON")->required();
  auto* classify = app.add_subcommand("classify", "Classify as abelian, dyon, triadon or other");
  classify->add_option("file", file, "algebra JSON")->required();
  auto* compat = app.add_subcommand("compat", "Pairwise compatibility matrix");
  compat->add_option("files", files, "algebra JSON files")->required()->expected(2, -1);
  auto* dis = app.add_subcommand("disassemble", "Disassemble a solvable algebra, or split off the modular part");
  dis->add_option("file", file, "algebra JSON")->required();
  dis->add_flag("--modular", modular, "modular disassembling");
  dis->add_option("--nu", nu_index, "basis index (1-based) defining nu");
  dis->add_option("--out", out, "output path");
  auto* sv = app.add_subcommand("scheme-verify", "Verify an a-scheme");
  sv->add_option("file", file, "scheme JSON")->required();
  sv->add_flag("--strict-complete", strict, "abelian end terms fail completeness");
  auto* cl = app.add_subcommand("classical", "Canonical disassembling of a classical algebra");
  cl->add_option("--family", family, "so, sp, gl, sl, u or su")->required();
  cl->add_option("--n", n, "size parameter")->required();
  cl->add_option("--params", params, "comma-separated rationals");
  cl->add_option("--out", out, "output path");
  auto* rk = app.add_subcommand("rank", "Lie rank");
  rk->add_option("file", file, "algebra JSON")->required();
  auto* md = app.add_subcommand("modular", "Modular vector and modular disassembling");
  md->add_option("file", file, "algebra JSON")->required();
  auto* st = app.add_subcommand("selftest", "Randomized consistency checks");
  st->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(file);
    if (*classify) return cmd_classify(file);
    if (*compat) return cmd_compat(files);
    if (*dis) return cmd_disassemble(file, modular, nu_index, out);
    if (*sv) return cmd_scheme_verify(file, strict);
    if (*cl) return cmd_classical(family, n, params, out);
    if (*rk) return cmd_rank(file);
    if (*md) return cmd_modular(file);
    if (*st) return cmd_selftest(seed);
  } catch (const NotLieError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFalse;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
