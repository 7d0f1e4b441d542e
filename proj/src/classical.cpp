#include "lieon/classical.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace lieon {

std::string to_string(Family f) {
  switch (f) {
    case Family::SO: return "so";
    case Family::SP: return "sp";
    case Family::GL: return "gl";
    case Family::SL: return "sl";
    case Family::U: return "u";
    case Family::SU: return "su";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Family f : {Family::SO, Family::SP, Family::GL, Family::SL, Family::U, Family::SU})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown family '" + name + "'");
}

void validate(const ClassicalPreset& p) {
  std::size_t min_n = p.family == Family::SP ? 1 : 2;
  if (p.n < min_n) throw std::invalid_argument("preset: n too small");
  if (p.family == Family::SP) {
    if (!p.params.empty()) throw std::invalid_argument("preset: sp takes no parameters");
    return;
  }
  if (!p.params.empty() && p.params.size() != p.n)
    throw std::invalid_argument("preset: expected " + std::to_string(p.n) + " parameters");
  for (const auto& a : p.params)
    if (sgn(a) == 0) throw std::invalid_argument("preset: parameters must be nonzero");
}

std::size_t classical_dim(const ClassicalPreset& p) {
  std::size_t n = p.n;
  switch (p.family) {
    case Family::SO: return n * (n - 1) / 2;
    case Family::SP: return n * (2 * n + 1);
    case Family::GL:
    case Family::U: return n * n;
    case Family::SL:
    case Family::SU: return n * n - 1;
  }
  return 0;
}

namespace {

Vector params_or_ones(const ClassicalPreset& p) { return p.params.empty() ? Vector(p.n, Scalar(1)) : p.params; }

std::string idx2(std::size_t i, std::size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); }

// gl(n) on the basis t_i t_j E_ij, index i*n + j.
StructureConstants gl_structure(std::size_t n, const Vector& t) {
  StructureConstants sc(n * n);
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          std::size_t a = at(i, j), b = at(k, l);
          if (a >= b) continue;
          if (j == k) sc.add_bracket(a, b, at(i, l), t[j] * t[j]);
          if (l == i) sc.add_bracket(a, b, at(k, j), -t[i] * t[i]);
        }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("e" + idx2(i, j));
  sc.set_labels(labels);
  return sc;
}

Vector gl_vec(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, Scalar>> parts) {
  Vector v(n * n);
  for (const auto& [i, j, c] : parts) v[i * n + j] += c;
  return v;
}

struct Basis {
  std::vector<Vector> rows;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> weights;
  std::size_t s_dim = 0;  // leading block spanning the subalgebra of the d-pair
};

std::vector<int> weight(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<int> w(n);
  ++w[i];
  ++w[j];
  return w;
}

// e0_ij (i<j), e1_ij (i<j), then the diagonal: e1_ii (u) or e_ii - e_11 (sl).
Basis sigma_basis(std::size_t n, bool special) {
  Basis b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      b.rows.push_back(gl_vec(n, {{i, j, 1}, {j, i, -1}}));
      b.labels.push_back("e0_" + idx2(i, j));
      b.weights.push_back(weight(n, i, j));
    }
  b.s_dim = b.rows.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      b.rows.push_back(gl_vec(n, {{i, j, 1}, {j, i, 1}}));
      b.labels.push_back("e1_" + idx2(i, j));
      b.weights.push_back(weight(n, i, j));
    }
  for (std::size_t i = special ? 1 : 0; i < n; ++i) {
    if (special) {
      b.rows.push_back(gl_vec(n, {{i, i, 1}, {0, 0, -1}}));
      b.labels.push_back("h" + std::to_string(i + 1));
    } else {
      b.rows.push_back(gl_vec(n, {{i, i, 2}}));
      b.labels.push_back("e1_" + idx2(i, i));
    }
    b.weights.push_back(weight(n, i, i));
  }
  return b;
}

StructureConstants labelled(StructureConstants sc, const std::vector<std::string>& labels) {
  sc.set_labels(labels);
  return sc;
}

// Structure on the sigma basis and its strip along (e0 block, rest).
struct SigmaData {
  Basis basis;
  LieAlgebra whole;
  LieAlgebra semi;
  LieAlgebra dress;
};

SigmaData sigma_data(std::size_t n, const Vector& t, bool special) {
  Basis b = sigma_basis(n, special);
  LieAlgebra gl(gl_structure(n, t));
  LieAlgebra g = restrict_to_basis(gl, b.rows);
  std::size_t d = b.rows.size();
  std::vector<Vector> s_rows, w_rows;
  for (std::size_t k = 0; k < d; ++k) (k < b.s_dim ? s_rows : w_rows).push_back(unit_vector(d, k));
  DPair dp{g, Subspace::span(s_rows, d), Subspace::span(w_rows, d)};
  auto [semi, dress] = strip(g, dp);
  return SigmaData{b, g, semi, dress};
}

// Variables p_1..p_n, q_1..q_n have indices 0..2n-1; monomials v_a v_b with a <= b in
// lexicographic order.
struct SpModel {
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> monos;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;

  explicit SpModel(std::size_t n_) : n(n_) {
    for (std::size_t a = 0; a < 2 * n; ++a)
      for (std::size_t b = a; b < 2 * n; ++b) {
        index[{a, b}] = monos.size();
        monos.emplace_back(a, b);
      }
  }
  std::size_t at(std::size_t a, std::size_t b) const { return index.at({std::min(a, b), std::max(a, b)}); }
  std::string name(std::size_t v) const { return (v < n ? "p" : "q") + std::to_string(v % n + 1); }
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (auto [a, b] : monos) out.push_back(a == b ? name(a) + "^2" : name(a) + "*" + name(b));
    return out;
  }
  // d/dv_c of monomial m as a linear form in the variables
  Vector derivative(std::size_t m, std::size_t c) const {
    Vector l(2 * n);
    auto [a, b] = monos[m];
    if (a == c) l[b] += 1;
    if (b == c) l[a] += 1;
    return l;
  }
  void add_product(Vector& out, const Vector& l, const Vector& r, const Scalar& c) const {
    for (std::size_t u = 0; u < 2 * n; ++u) {
      if (sgn(l[u]) == 0) continue;
      for (std::size_t w = 0; w < 2 * n; ++w)
        if (sgn(r[w]) != 0) out[at(u, w)] += c * l[u] * r[w];
    }
  }
  // The part of the Poisson bracket coming from the pair (p_k, q_k).
  StructureConstants part(std::size_t k) const {
    std::size_t d = monos.size();
    StructureConstants sc(d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = x + 1; y < d; ++y) {
        Vector out(d);
        add_product(out, derivative(x, k), derivative(y, n + k), 1);
        add_product(out, derivative(x, n + k), derivative(y, k), -1);
        if (!is_zero(out)) sc.set_bracket(x, y, out);
      }
    return sc;
  }
};

std::vector<std::vector<int>> pair_weights(std::size_t n) {
  std::vector<std::vector<int>> w;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w.push_back(weight(n, i, j));
  return w;
}

Matrix identity_basis(const StructureConstants& g) { return Matrix::identity(g.dim()); }

SchemeTree weighted_node(const StructureConstants& g, const std::vector<std::vector<int>>& weights) {
  SchemeTree t{g, {}};
  for (const auto& part : weight_split(g, weights)) t.children.push_back(monomial_tree(part, identity_basis(g)));
  return t;
}

// Monomials of g (standard basis) split by whether keep(a, b, k) holds.
std::pair<StructureConstants, StructureConstants> split_monomials(
    const StructureConstants& g, const std::function<bool(std::size_t, std::size_t, std::size_t)>& keep) {
  StructureConstants in(g.dim()), out(g.dim());
  for (const auto& [key, vec] : g.entries())
    for (std::size_t k = 0; k < vec.size(); ++k)
      if (sgn(vec[k]) != 0) (keep(key.first, key.second, k) ? in : out).add_bracket(key.first, key.second, k, vec[k]);
  return {in, out};
}

SchemeTree so_tree(const ClassicalPreset& p) {
  StructureConstants g = build_algebra(p).sc();
  return weighted_node(g, pair_weights(p.n));
}

SchemeTree gl_tree(const ClassicalPreset& p) {
  std::size_t n = p.n;
  StructureConstants g = build_algebra(p).sc();
  std::vector<std::vector<int>> w;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.push_back(weight(n, i, j));
  auto parts = weight_split(g, w);
  SchemeTree t{g, {}};
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    std::size_t h = alpha * n + alpha;
    auto [gamma, dress] = split_monomials(parts[alpha], [h](std::size_t a, std::size_t b, std::size_t) {
      return a == h || b == h;
    });
    Matrix rot = Matrix::identity(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == alpha) continue;
      std::size_t x = i * n + alpha, y = alpha * n + i;
      Vector plus(n * n), minus(n * n);
      plus[x] = minus[x] = plus[y] = 1;
      minus[y] = -1;
      rot.set_row(x, plus);
      rot.set_row(y, minus);
    }
    SchemeTree node{parts[alpha], {}};
    node.children.push_back(monomial_tree(gamma, rot));
    node.children.push_back(monomial_tree(dress, identity_basis(g)));
    t.children.push_back(std::move(node));
  }
  return t;
}

SchemeTree sigma_tree(const ClassicalPreset& p, bool special, bool unitary) {
  SigmaData sd = sigma_data(p.n, params_or_ones(p), special);
  StructureConstants dress = sd.dress.sc();
  if (unitary) dress = scaled(dress, -1);
  StructureConstants semi = sd.semi.sc();
  SchemeTree t{add(semi, dress), {}};
  t.children.push_back(weighted_node(semi, sd.basis.weights));
  t.children.push_back(monomial_tree(dress, identity_basis(dress)));
  return t;
}

SchemeTree sp_tree(const ClassicalPreset& p) {
  std::size_t n = p.n;
  SpModel sp(n);
  std::size_t d = sp.monos.size();
  StructureConstants g = build_algebra(p).sc();
  SchemeTree t{g, {}};
  auto unit = [d](std::size_t k) { return unit_vector(d, k); };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pk = k, qk = n + k;
    std::size_t pp = sp.at(pk, pk), pq = sp.at(pk, qk), qq = sp.at(qk, qk);
    LieAlgebra part(sp.part(k));
    std::vector<Vector> s_rows{unit(pp), unit(pq), unit(qq)}, r_rows, s2_rows{unit(pq)}, w2_rows{unit(pp), unit(qq)};
    std::vector<std::size_t> others;
    for (std::size_t v = 0; v < 2 * n; ++v)
      if (v != pk && v != qk) others.push_back(v);
    for (std::size_t m = 0; m < d; ++m) {
      if (m == pp || m == pq || m == qq) continue;
      r_rows.push_back(unit(m));
      auto [a, b] = sp.monos[m];
      bool with_p = a == pk || b == pk;
      (with_p ? s2_rows : w2_rows).push_back(unit(m));
    }
    auto [t1, t2] = split_semidirect(part, Subspace::span(s_rows, d), Subspace::span(r_rows, d));
    DPair dp{t1, Subspace::span(s2_rows, d), Subspace::span(w2_rows, d)};
    auto [semi, dress] = strip(t1, dp);
    std::vector<Vector> rest_rows;
    for (std::size_t m = 0; m < d; ++m)
      if (m != pq) rest_rows.push_back(unit(m));
    auto [gamma, rest] = split_semidirect(semi, Subspace::span({unit(pq)}, d), Subspace::span(rest_rows, d));

    // Each +-eigenpair (x, y) of ad(p_k q_k) is rotated to x + y, x - y.
    Matrix rot = Matrix::identity(d);
    auto rotate = [&](std::size_t x, std::size_t y) {
      rot.set_row(x, add(unit(x), unit(y)));
      rot.set_row(y, sub(unit(x), unit(y)));
    };
    rotate(pp, qq);
    for (auto v : others) rotate(sp.at(pk, v), sp.at(qk, v));

    SchemeTree semi_node{semi.sc(), {}};
    semi_node.children.push_back(monomial_tree(gamma.sc(), rot));
    semi_node.children.push_back(monomial_tree(rest.sc(), identity_basis(g)));
    SchemeTree t1_node{t1.sc(), {}};
    t1_node.children.push_back(monomial_tree(dress.sc(), identity_basis(g)));
    t1_node.children.push_back(std::move(semi_node));
    SchemeTree part_node{part.sc(), {}};
    part_node.children.push_back(std::move(t1_node));
    part_node.children.push_back(monomial_tree(t2.sc(), identity_basis(g)));
    t.children.push_back(std::move(part_node));
  }
  return t;
}

}  // namespace

std::vector<StructureConstants> weight_split(const StructureConstants& g,
                                             const std::vector<std::vector<int>>& weights) {
  if (weights.size() != g.dim()) throw DimensionError("weight_split: one weight per basis vector");
  std::size_t r = weights.empty() ? 0 : weights.front().size();
  std::vector<StructureConstants> parts(r, StructureConstants(g.dim()));
  for (const auto& [key, vec] : g.entries())
    for (std::size_t k = 0; k < vec.size(); ++k) {
      if (sgn(vec[k]) == 0) continue;
      std::optional<std::size_t> alpha;
      bool ok = true;
      for (std::size_t c = 0; c < r; ++c) {
        int w = weights[key.first][c] + weights[key.second][c] - weights[k][c];
        if (w == 2 && !alpha) alpha = c;
        else if (w != 0) ok = false;
      }
      if (!ok || !alpha) throw std::invalid_argument("weight_split: monomial of unexpected weight");
      parts[*alpha].add_bracket(key.first, key.second, k, vec[k]);
    }
  return parts;
}

LieAlgebra build_algebra(const ClassicalPreset& p) {
  validate(p);
  std::size_t n = p.n;
  switch (p.family) {
    case Family::SO: {
      Vector a = params_or_ones(p);
      std::vector<Vector> rows;
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          rows.push_back(gl_vec(n, {{i, j, a[j]}, {j, i, Scalar(-a[i])}}));
          labels.push_back("e" + idx2(i, j));
        }
      LieAlgebra gl(gl_structure(n, Vector(n, Scalar(1))));
      return LieAlgebra(labelled(restrict_to_basis(gl, rows).sc(), labels));
    }
    case Family::GL: return LieAlgebra(gl_structure(n, params_or_ones(p)));
    case Family::SL: {
      SigmaData sd = sigma_data(n, params_or_ones(p), true);
      return LieAlgebra(labelled(sd.whole.sc(), sd.basis.labels));
    }
    case Family::U:
    case Family::SU: {
      SigmaData sd = sigma_data(n, params_or_ones(p), p.family == Family::SU);
      return LieAlgebra(labelled(subtract(sd.semi.sc(), sd.dress.sc()), sd.basis.labels));
    }
    case Family::SP: {
      SpModel sp(n);
      StructureConstants sc(sp.monos.size());
      for (std::size_t k = 0; k < n; ++k) sc = add(sc, sp.part(k));
      return LieAlgebra(labelled(sc, sp.labels()));
    }
  }
  throw std::logic_error("unreachable");
}

AScheme disassemble(const ClassicalPreset& p) {
  validate(p);
  SchemeTree t;
  switch (p.family) {
    case Family::SO: t = so_tree(p); break;
    case Family::GL: t = gl_tree(p); break;
    case Family::SL: t = sigma_tree(p, true, false); break;
    case Family::SU: t = sigma_tree(p, true, true); break;
    case Family::U: t = sigma_tree(p, false, true); break;
    case Family::SP: t = sp_tree(p); break;
  }
  t = normalize(std::move(t));
  t.algebra = build_algebra(p).sc();
  return to_scheme(t);
}

Census lieon_census(const AScheme& s) {
  Census c;
  for (const auto* leaf : s.leaves()) {
    switch (classify_lieon(leaf->algebra).cls) {
      case LieonClass::Dyon: ++c.dyons; break;
      case LieonClass::Triadon: ++c.triadons; break;
      case LieonClass::Abelian: ++c.abelian; break;
      case LieonClass::Other: throw std::invalid_argument("census: end term " + leaf->id + " is not a lieon");
    }
  }
  c.steps = s.depth();
  return c;
}

std::vector<StructureConstants> so_level_one_terms(std::size_t n) {
  ClassicalPreset p{Family::SO, n, {}};
  return weight_split(build_algebra(p).sc(), pair_weights(n));
}

}  // namespace lieon
