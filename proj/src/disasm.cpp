#include "lieon/disasm.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

namespace lieon {

// ---------------------------------------------------------------- schemes

AScheme::AScheme(std::vector<SchemeNode> nodes, std::vector<std::pair<std::string, std::string>> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i].id, i);
}

const SchemeNode* AScheme::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &nodes_[it->second];
}

std::vector<std::string> AScheme::children(const std::string& id) const {
  std::vector<std::string> out;
  for (const auto& [p, c] : edges_)
    if (p == id) out.push_back(c);
  return out;
}

const SchemeNode& AScheme::root() const {
  for (const auto& nd : nodes_)
    if (nd.level == 0) return nd;
  throw std::logic_error("scheme has no root");
}

std::size_t AScheme::depth() const {
  std::size_t d = 0;
  for (const auto& nd : nodes_) d = std::max(d, nd.level);
  return d;
}

std::vector<const SchemeNode*> AScheme::leaves() const {
  std::set<std::string> parents;
  for (const auto& e : edges_) parents.insert(e.first);
  std::vector<const SchemeNode*> out;
  for (const auto& nd : nodes_)
    if (!parents.count(nd.id)) out.push_back(&nd);
  return out;
}

bool AScheme::operator==(const AScheme& o) const {
  if (nodes_.size() != o.nodes_.size() || edges_ != o.edges_) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto &a = nodes_[i], &b = o.nodes_[i];
    if (a.id != b.id || a.level != b.level || !(a.algebra == b.algebra)) return false;
  }
  return true;
}

SchemeTree leaf_tree(const StructureConstants& g) { return SchemeTree{g, {}}; }

SchemeTree tree_with_children(const StructureConstants& g, const std::vector<StructureConstants>& kids) {
  SchemeTree t{g, {}};
  for (const auto& k : kids) t.children.push_back(leaf_tree(k));
  return t;
}

SchemeTree normalize(SchemeTree t) {
  std::vector<SchemeTree> kept;
  for (auto& c : t.children) {
    if (c.algebra.is_zero()) continue;
    kept.push_back(normalize(std::move(c)));
  }
  if (kept.size() == 1) return std::move(kept.front());
  t.children = std::move(kept);
  return t;
}

namespace {

void flatten(const SchemeTree& t, const std::string& id, std::size_t level, std::vector<SchemeNode>& nodes,
             std::vector<std::pair<std::string, std::string>>& edges) {
  nodes.push_back(SchemeNode{id, level, t.algebra});
  for (std::size_t k = 0; k < t.children.size(); ++k) {
    std::string cid = id + "." + std::to_string(k);
    edges.emplace_back(id, cid);
    flatten(t.children[k], cid, level + 1, nodes, edges);
  }
}

SchemeTree unflatten(const AScheme& s, const std::string& id, std::size_t guard) {
  if (guard > s.nodes().size()) throw std::invalid_argument("scheme contains a cycle");
  const SchemeNode* nd = s.find(id);
  if (!nd) throw std::invalid_argument("scheme edge refers to unknown node " + id);
  SchemeTree t{nd->algebra, {}};
  for (const auto& c : s.children(id)) t.children.push_back(unflatten(s, c, guard + 1));
  return t;
}

std::size_t thread_count() {
  std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::size_t n = std::min<std::size_t>(hw, 8);
  if (const char* env = std::getenv("LIEON_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = static_cast<std::size_t>(v);
  }
  return n;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = std::min(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

AScheme to_scheme(const SchemeTree& t) {
  std::vector<SchemeNode> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  flatten(t, "0", 0, nodes, edges);
  return AScheme(std::move(nodes), std::move(edges));
}

SchemeTree to_tree(const AScheme& s) { return unflatten(s, s.root().id, 0); }

SchemeReport verify_scheme(const AScheme& s) {
  SchemeReport rep;
  auto& viol = rep.violations;
  const auto& nodes = s.nodes();
  std::map<std::string, std::size_t> seen;
  std::size_t roots = 0;
  for (const auto& nd : nodes) {
    if (seen.count(nd.id)) viol.push_back("duplicate node id " + nd.id);
    seen[nd.id] = 0;
    if (nd.level == 0) ++roots;
  }
  if (roots != 1) viol.push_back("expected exactly one level-0 node, found " + std::to_string(roots));
  if (nodes.empty()) {
    rep.valid = false;
    return rep;
  }
  std::size_t n = nodes.front().algebra.dim();
  for (const auto& [p, c] : s.edges()) {
    const SchemeNode *pn = s.find(p), *cn = s.find(c);
    if (!pn || !cn) {
      viol.push_back("edge " + p + " -> " + c + " refers to a missing node");
      continue;
    }
    if (cn->level != pn->level + 1) viol.push_back("edge " + p + " -> " + c + " skips levels");
    ++seen[c];
  }
  std::size_t max_level = s.depth();
  for (const auto& nd : nodes) {
    if (nd.level > 0 && seen[nd.id] != 1)
      viol.push_back("node " + nd.id + " has " + std::to_string(seen[nd.id]) + " parents");
    if (nd.level == 0 && seen[nd.id] != 0) viol.push_back("root " + nd.id + " has a parent");
    if (nd.algebra.dim() != n) viol.push_back("node " + nd.id + " has mismatched dimension");
    std::size_t kids = s.children(nd.id).size();
    if (kids == 1 && nd.level < max_level) viol.push_back("node " + nd.id + " has exactly one child");
  }

  // Expensive checks: Jacobi per node, sums and pairwise compatibility per internal node.
  struct Task {
    std::size_t node;
    std::size_t a, b;  // children positions; a == b means Jacobi of the node itself
    bool sum = false;
  };
  std::vector<std::vector<const SchemeNode*>> kids(nodes.size());
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].algebra.dim() != n) continue;
    for (const auto& c : s.children(nodes[i].id))
      if (const SchemeNode* cn = s.find(c); cn && cn->algebra.dim() == n) kids[i].push_back(cn);
    tasks.push_back({i, 0, 0, false});
    if (!kids[i].empty()) tasks.push_back({i, 0, 0, true});
    for (std::size_t a = 0; a < kids[i].size(); ++a)
      for (std::size_t b = a + 1; b < kids[i].size(); ++b) tasks.push_back({i, a, b, false});
  }
  std::vector<std::string> found(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t t) {
    const Task& tk = tasks[t];
    const SchemeNode& nd = nodes[tk.node];
    if (tk.sum) {
      StructureConstants total(n);
      for (const auto* c : kids[tk.node]) total = add(total, c->algebra);
      if (!(total == nd.algebra)) found[t] = "children of " + nd.id + " do not sum to it";
    } else if (tk.a == tk.b) {
      if (!satisfies_jacobi(nd.algebra)) found[t] = "node " + nd.id + " violates the Jacobi identity";
    } else {
      const auto *x = kids[tk.node][tk.a], *y = kids[tk.node][tk.b];
      if (!compatible(x->algebra, y->algebra))
        found[t] = "children " + x->id + " and " + y->id + " are incompatible";
    }
  });
  for (auto& f : found)
    if (!f.empty()) viol.push_back(std::move(f));

  rep.valid = viol.empty();
  bool strict = true, lenient = true;
  for (const auto* leaf : s.leaves()) {
    Classification c = classify_lieon(leaf->algebra);
    if (c.cls == LieonClass::Other) strict = lenient = false;
    if (c.cls == LieonClass::Abelian) strict = false;
    rep.end_terms.push_back(EndTerm{leaf->id, std::move(c)});
  }
  rep.complete = rep.valid && strict;
  rep.complete_lenient = rep.valid && lenient;
  return rep;
}

// ---------------------------------------------------------------- d-pairs and involutions

namespace {

Matrix stacked_basis(const std::vector<const Subspace*>& parts, std::size_t n) {
  std::vector<Vector> rows;
  for (const auto* p : parts)
    for (auto& v : p->vectors()) rows.push_back(std::move(v));
  return Matrix::from_rows(rows, n);
}

// Keeps the brackets of g, written in the basis given by the rows of b, for which keep(i, j)
// holds; result in standard coordinates.
StructureConstants filter_in_basis(const StructureConstants& g, const Matrix& b,
                                   const std::function<bool(std::size_t, std::size_t)>& keep) {
  StructureConstants h = change_basis(g, b);
  StructureConstants kept(g.dim());
  for (const auto& [key, vec] : h.entries())
    if (keep(key.first, key.second)) kept.set_bracket(key.first, key.second, vec);
  return from_basis(kept, b);
}

bool direct_complement(const Subspace& a, const Subspace& b) {
  return a.ambient() == b.ambient() && a.dim() + b.dim() == a.ambient() && sum(a, b).dim() == a.ambient();
}

}  // namespace

bool is_valid(const DPair& dp) {
  const auto& g = dp.algebra.sc();
  if (dp.s.ambient() != g.dim() || !direct_complement(dp.s, dp.w)) return false;
  return dp.s.contains(bracket_span(g, dp.s, dp.s)) && dp.w.contains(bracket_span(g, dp.s, dp.w)) &&
         dp.s.contains(bracket_span(g, dp.w, dp.w));
}

bool is_valid(const Involution& inv) {
  std::size_t n = inv.algebra.dim();
  if (inv.i.rows() != n || inv.i.cols() != n) return false;
  if (!(inv.i * inv.i == Matrix::identity(n))) return false;
  const auto& g = inv.algebra.sc();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (inv.i * g.bracket(a, b) != g.bracket(inv.i.col(a), inv.i.col(b))) return false;
  return true;
}

DPair dpair_from_involution(const Involution& inv) {
  if (!is_valid(inv)) throw std::invalid_argument("not an involutive automorphism");
  std::size_t n = inv.algebra.dim();
  Matrix id = Matrix::identity(n);
  Subspace s = kernel(inv.i - id);
  Subspace w = kernel(inv.i + id);
  if (w.dim() == 0) throw DegenerateDPairError("involution is the identity; the d-pair is trivial");
  return DPair{inv.algebra, s, w};
}

Involution involution_from_dpair(const DPair& dp) {
  if (!is_valid(dp)) throw std::invalid_argument("invalid d-pair");
  std::size_t n = dp.algebra.dim();
  Matrix bt = stacked_basis({&dp.s, &dp.w}, n).transpose();
  Vector signs(n, Scalar(1));
  for (std::size_t k = dp.s.dim(); k < n; ++k) signs[k] = -1;
  return Involution{dp.algebra, bt * Matrix::diagonal(signs) * inverse(bt)};
}

DPair dpair_from_h(const LieAlgebra& g, const Vector& h, const Scalar& kappa) {
  std::size_t n = g.dim();
  if (h.size() != n) throw DimensionError("dpair_from_h: size mismatch");
  Matrix a = ad(g.sc(), h);
  std::vector<Subspace> parts;
  Subspace total(n);
  for (std::size_t m = 0; total.dim() < n; ++m) {
    if (m > 4 * n + 4) throw std::invalid_argument("dpair_from_h: ad h does not decompose into g_m");
    Subspace gm = m == 0 ? kernel(a) : poly_kernel(a, Vector{Scalar(-Scalar(m * m) * kappa / 4), Scalar(0), Scalar(1)});
    parts.push_back(gm);
    total = sum(total, gm);
  }
  auto collect = [&](std::size_t mod, std::size_t rem) {
    Subspace out(n);
    for (std::size_t m = 0; m < parts.size(); ++m)
      if (m % mod == rem) out = sum(out, parts[m]);
    return out;
  };
  DPair dp{g, collect(2, 0), collect(2, 1)};
  if (dp.w.dim() == 0) dp = DPair{g, collect(4, 0), collect(4, 2)};
  if (dp.w.dim() == 0) throw DegenerateDPairError("dpair_from_h: both candidate d-pairs are trivial");
  if (!is_valid(dp)) throw std::invalid_argument("dpair_from_h: candidate is not a d-pair");
  return dp;
}

// ---------------------------------------------------------------- splittings

std::pair<LieAlgebra, LieAlgebra> split_semidirect(const LieAlgebra& g, const Subspace& subalg,
                                                   const Subspace& ideal) {
  const auto& sc = g.sc();
  if (subalg.ambient() != g.dim()) throw DimensionError("split_semidirect: ambient mismatch");
  if (!direct_complement(subalg, ideal)) throw ClosureError("split_semidirect: not a direct sum");
  if (!is_subalgebra(sc, subalg)) throw ClosureError("split_semidirect: not a subalgebra");
  if (!is_ideal(sc, ideal)) throw ClosureError("split_semidirect: not an ideal");
  std::size_t k = subalg.dim();
  Matrix b = stacked_basis({&subalg, &ideal}, g.dim());
  StructureConstants t2 = filter_in_basis(sc, b, [k](std::size_t i, std::size_t) { return i >= k; });
  return {LieAlgebra(subtract(sc, t2)), LieAlgebra(t2)};
}

std::pair<LieAlgebra, LieAlgebra> strip(const LieAlgebra& g, const DPair& dp) {
  if (!(dp.algebra == g) || !is_valid(dp)) throw std::invalid_argument("strip: invalid d-pair");
  std::size_t k = dp.s.dim();
  Matrix b = stacked_basis({&dp.s, &dp.w}, g.dim());
  StructureConstants dress = filter_in_basis(g.sc(), b, [k](std::size_t i, std::size_t) { return i >= k; });
  return {LieAlgebra(subtract(g.sc(), dress)), LieAlgebra(dress)};
}

std::vector<StructureConstants> monomial_decompose(const StructureConstants& g, const Matrix& b) {
  StructureConstants h = change_basis(g, b);
  std::vector<StructureConstants> out;
  for (const auto& [key, vec] : h.entries())
    for (std::size_t k = 0; k < vec.size(); ++k) {
      if (sgn(vec[k]) == 0) continue;
      StructureConstants m(g.dim());
      m.add_bracket(key.first, key.second, k, vec[k]);
      out.push_back(from_basis(m, b));
    }
  return out;
}

SchemeTree monomial_tree(const StructureConstants& g, const Matrix& b) {
  auto monos = monomial_decompose(g, b);
  std::size_t m = monos.size();
  if (m <= 1) return leaf_tree(g);
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!compatible(monos[i], monos[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<int> colour(m, -1);
  for (std::size_t s = 0; s < m; ++s) {
    if (colour[s] != -1 || adj[s].empty()) continue;
    colour[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (auto u : adj[v]) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          throw std::runtime_error("monomial_tree: incompatibility graph is not bipartite");
        }
      }
    }
  }
  SchemeTree t{g, {}};
  SchemeTree groups[2];
  for (int c = 0; c < 2; ++c) groups[c].algebra = StructureConstants(g.dim());
  for (std::size_t i = 0; i < m; ++i) {
    if (colour[i] == -1) {
      t.children.push_back(leaf_tree(monos[i]));
    } else {
      auto& grp = groups[colour[i]];
      grp.algebra = add(grp.algebra, monos[i]);
      grp.children.push_back(leaf_tree(monos[i]));
    }
  }
  for (auto& grp : groups)
    if (!grp.children.empty()) t.children.push_back(std::move(grp));
  return normalize(std::move(t));
}

std::vector<LieAlgebra> gamma_decompose(const Matrix& a) { return gamma_decompose(a, Matrix::identity(a.rows())); }

std::vector<LieAlgebra> gamma_decompose(const Matrix& a, const Matrix& basis) {
  if (!a.is_square() || basis.rows() != a.rows() || basis.cols() != a.rows())
    throw DimensionError("gamma_decompose: shape mismatch");
  std::size_t m = a.rows();
  Matrix full = Matrix::identity(m + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) full(1 + i, 1 + j) = basis(i, j);
  std::vector<LieAlgebra> out;
  for (auto& sc : monomial_decompose(gamma_A(a).sc(), full)) out.emplace_back(std::move(sc));
  return out;
}

namespace {

void check_dressing(const Subspace& w0, const Subspace& w, const std::vector<Matrix>& beta) {
  if (w0.ambient() != w.ambient()) throw DimensionError("dressing: ambient mismatch");
  if (beta.size() != w0.dim()) throw DimensionError("dressing: one matrix per basis vector of W0 expected");
  if (intersect(w0, w).dim() != 0) throw std::invalid_argument("dressing: W0 and W intersect");
  for (const auto& bk : beta) {
    if (bk.rows() != w.dim() || bk.cols() != w.dim()) throw DimensionError("dressing: matrix shape");
    if (!(bk.transpose() == bk * Scalar(-1))) throw std::invalid_argument("dressing: beta is not skew");
  }
}

}  // namespace

LieAlgebra dressing_algebra(const Subspace& w0, const Subspace& w, const std::vector<Matrix>& beta) {
  check_dressing(w0, w, beta);
  std::size_t p = w.dim(), q = w0.dim();
  StructureConstants h(p + q);
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = a + 1; b < p; ++b)
        if (sgn(beta[k](a, b)) != 0) h.add_bracket(a, b, p + k, beta[k](a, b));
  std::vector<Vector> rows = w.vectors();
  for (auto& v : w0.vectors()) rows.push_back(std::move(v));
  return LieAlgebra(embed(h, rows, w.ambient()));
}

std::vector<LieAlgebra> dressing_decompose(const Subspace& w0, const Subspace& w,
                                           const std::vector<Matrix>& beta) {
  check_dressing(w0, w, beta);
  std::size_t p = w.dim(), q = w0.dim();
  std::vector<Vector> rows = w.vectors();
  for (auto& v : w0.vectors()) rows.push_back(std::move(v));
  std::vector<LieAlgebra> out;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a + 1; b < p; ++b)
      for (std::size_t k = 0; k < q; ++k) {
        if (sgn(beta[k](a, b)) == 0) continue;
        StructureConstants h(p + q);
        h.add_bracket(a, b, p + k, beta[k](a, b));
        out.emplace_back(embed(h, rows, w.ambient()));
      }
  return out;
}

// ---------------------------------------------------------------- solvable algebras

namespace {

SchemeTree embed_tree(const SchemeTree& t, const std::vector<Vector>& rows, std::size_t n) {
  SchemeTree out{embed(t.algebra, rows, n), {}};
  for (const auto& c : t.children) out.children.push_back(embed_tree(c, rows, n));
  return out;
}

SchemeTree solvable_tree(const StructureConstants& g) {
  std::size_t n = g.dim();
  if (g.is_zero()) return leaf_tree(g);
  auto cls = classify_lieon(g).cls;
  if (cls == LieonClass::Dyon || cls == LieonClass::Triadon) return leaf_tree(g);
  Subspace d = derived(g);
  if (d.dim() == n) throw std::invalid_argument("disassemble_solvable: algebra is not solvable");
  auto comp = complement_indices(d);
  std::vector<Vector> gens = d.vectors();
  for (std::size_t k = 0; k + 1 < comp.size(); ++k) gens.push_back(unit_vector(n, comp[k]));
  Subspace s = Subspace::span(gens, n);
  Vector nu = unit_vector(n, comp.back());
  LieAlgebra lg(g);
  auto [gamma, rest] = split_semidirect(lg, Subspace::span({nu}, n), s);

  std::vector<Vector> rows{nu};
  for (auto& v : s.vectors()) rows.push_back(std::move(v));
  SchemeTree gamma_node = tree_with_children(gamma.sc(), monomial_decompose(gamma.sc(), Matrix::from_rows(rows, n)));

  auto srows = s.vectors();
  SchemeTree inner = solvable_tree(restrict(lg, s).sc());
  SchemeTree rest_node = embed_tree(inner, srows, n);

  SchemeTree t{g, {}};
  t.children.push_back(std::move(gamma_node));
  t.children.push_back(std::move(rest_node));
  return normalize(std::move(t));
}

}  // namespace

SchemeTree disassemble_solvable_tree(const StructureConstants& g) {
  if (!is_solvable(g)) throw std::invalid_argument("disassemble_solvable: algebra is not solvable");
  return normalize(solvable_tree(g));
}

AScheme disassemble_solvable(const LieAlgebra& g) { return to_scheme(disassemble_solvable_tree(g.sc())); }

// ---------------------------------------------------------------- several involutions

namespace {

void check_involutions(const LieAlgebra& g, const std::vector<Involution>& invs) {
  for (const auto& inv : invs) {
    if (!(inv.algebra == g)) throw std::invalid_argument("involution belongs to a different algebra");
    if (!is_valid(inv)) throw std::invalid_argument("not an involutive automorphism");
  }
  for (std::size_t a = 0; a < invs.size(); ++a)
    for (std::size_t b = a + 1; b < invs.size(); ++b)
      if (!(invs[a].i * invs[b].i == invs[b].i * invs[a].i))
        throw std::invalid_argument("involutions do not commute");
}

std::vector<Matrix> matrices_of(const std::vector<Involution>& invs) {
  std::vector<Matrix> out;
  for (const auto& inv : invs) out.push_back(inv.i);
  return out;
}

}  // namespace

std::map<std::vector<int>, Subspace> common_eigenspaces(std::size_t n, const std::vector<Matrix>& invs) {
  std::map<std::vector<int>, Subspace> cur{{{}, Subspace::full(n)}};
  Matrix id = Matrix::identity(n);
  for (const auto& inv : invs) {
    Subspace plus = kernel(inv - id), minus = kernel(inv + id);
    std::map<std::vector<int>, Subspace> next;
    for (const auto& [grade, space] : cur)
      for (int bit = 0; bit < 2; ++bit) {
        Subspace part = intersect(space, bit == 0 ? plus : minus);
        if (part.dim() == 0) continue;
        auto key = grade;
        key.push_back(bit);
        next.emplace(std::move(key), std::move(part));
      }
    cur = std::move(next);
  }
  return cur;
}

LieAlgebra graded_component_structure(const LieAlgebra& g, const std::vector<Involution>& invs,
                                      const std::vector<int>& sigma) {
  check_involutions(g, invs);
  if (sigma.size() != invs.size()) throw DimensionError("grade vector length mismatch");
  std::size_t n = g.dim();
  auto spaces = common_eigenspaces(n, matrices_of(invs));
  std::vector<Vector> rows;
  std::vector<std::vector<int>> grade_of;
  for (const auto& [grade, space] : spaces)
    for (auto& v : space.vectors()) {
      rows.push_back(std::move(v));
      grade_of.push_back(grade);
    }
  if (rows.size() != n) throw std::invalid_argument("involutions are not diagonalizable over the rationals");
  auto keep = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < sigma.size(); ++k)
      if (((grade_of[i][k] + grade_of[j][k]) & 1) != (sigma[k] & 1)) return false;
    return true;
  };
  return LieAlgebra(filter_in_basis(g.sc(), Matrix::from_rows(rows, n), keep));
}

MultiStripResult multi_involution_strip(const LieAlgebra& g, const std::vector<Involution>& invs) {
  check_involutions(g, invs);
  std::size_t n = g.dim();
  Matrix id = Matrix::identity(n);
  Subspace h = Subspace::full(n), v(n);
  LieAlgebra cur = g;
  // Built innermost-last: each stage contributes [dressing, [next stage, nilpotent part]].
  std::vector<std::pair<SchemeTree, SchemeTree>> stages;
  std::vector<StructureConstants> stage_algebras;
  for (const auto& inv : invs) {
    Subspace plus = kernel(inv.i - id), minus = kernel(inv.i + id);
    Subspace h0 = intersect(h, plus), h1 = intersect(h, minus);
    Subspace v0 = intersect(v, plus), v1 = intersect(v, minus);
    DPair dp{cur, sum(h0, v0), sum(h1, v1)};
    if (!is_valid(dp)) throw std::invalid_argument("multi_involution_strip: induced grading is not a d-pair");
    auto [semi, dress] = strip(cur, dp);
    Matrix adapted = stacked_basis({&h0, &v0, &h1, &v1}, n);
    SchemeTree dress_node = tree_with_children(dress.sc(), monomial_decompose(dress.sc(), adapted));
    Subspace ideal = sum(v0, sum(h1, v1));
    auto [next, nil] = split_semidirect(semi, h0, ideal);
    SchemeTree nil_node = disassemble_solvable_tree(nil.sc());
    stage_algebras.push_back(cur.sc());
    stages.emplace_back(std::move(dress_node), std::move(nil_node));
    stage_algebras.push_back(semi.sc());
    cur = next;
    h = h0;
    v = ideal;
  }
  SchemeTree t = leaf_tree(cur.sc());
  for (std::size_t k = stages.size(); k-- > 0;) {
    SchemeTree semi_node{stage_algebras[2 * k + 1], {}};
    semi_node.children.push_back(std::move(stages[k].second));
    semi_node.children.push_back(std::move(t));
    SchemeTree top{stage_algebras[2 * k], {}};
    top.children.push_back(std::move(stages[k].first));
    top.children.push_back(std::move(semi_node));
    t = std::move(top);
  }
  return MultiStripResult{to_scheme(normalize(std::move(t))), cur, h};
}

// ---------------------------------------------------------------- splitting operators

SplittingSpaces splitting_space(const DPair& dp, const Representation& rho) {
  if (!(rho.algebra == dp.algebra)) throw std::invalid_argument("representation of a different algebra");
  std::size_t m = rho.space_dim, mm = m * m;
  // A(p,q) is unknown p*m+q; rows of the result express (rho A -+ A rho)(p,q).
  auto constraint = [&](const Matrix& r, int sign) {
    Matrix c(mm, mm);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t k = 0; k < m; ++k) {
          c(p * m + q, k * m + q) += r(p, k);
          c(p * m + q, p * m + k) += sign * r(k, q);
        }
    return c;
  };
  auto solve_for = [&](const std::vector<std::pair<Matrix, int>>& gens) {
    Matrix stack(0, mm);
    for (const auto& [r, sign] : gens) stack = Matrix::vstack(stack, constraint(r, sign));
    std::vector<Matrix> out;
    for (const auto& v : kernel(stack).vectors()) {
      Matrix a(m, m);
      for (std::size_t i = 0; i < mm; ++i) a(i / m, i % m) = v[i];
      out.push_back(std::move(a));
    }
    return out;
  };
  std::vector<std::pair<Matrix, int>> split_gens, module_gens;
  for (const auto& s : dp.s.vectors()) {
    split_gens.emplace_back(rho.of(s), -1);
    module_gens.emplace_back(rho.of(s), -1);
  }
  for (const auto& w : dp.w.vectors()) {
    split_gens.emplace_back(rho.of(w), 1);
    module_gens.emplace_back(rho.of(w), -1);
  }
  return SplittingSpaces{solve_for(split_gens), solve_for(module_gens)};
}

// ---------------------------------------------------------------- lieon geometry

namespace {

void require(const LieonSpec& s, LieonKind k) {
  if (s.kind != k) throw std::invalid_argument("lieon predicate: kind mismatch");
}

void require_same_ambient(const LieonSpec& a, const LieonSpec& b) {
  if (a.ambient_dim != b.ambient_dim) throw DimensionError("lieon predicate: ambient mismatch");
}

}  // namespace

namespace {

// For lieons [x,y]_i = s_i w_i(x,y) v_i with w_i vanishing on C_i, the Jacobiator of the sum is
// a multiple of (w_1 ^ i(v_1) w_2) v_2 + (w_2 ^ i(v_2) w_1) v_1. With independent lines both
// terms vanish iff v_1 in C_2 or C_1 in C_2 + v_1, and symmetrically. With a common line v the
// sum is a multiple of i(v)(w_1 ^ w_2), zero iff dim C_12 > n - 4 or v in C_12.
bool incidence_compatible(const LieonSpec& a, const LieonSpec& b) {
  long n = static_cast<long>(a.ambient_dim);
  Subspace c12 = intersect(a.center, b.center);
  if (a.line == b.line) return static_cast<long>(c12.dim()) > n - 4 || c12.contains(a.line);
  auto half = [](const LieonSpec& x, const LieonSpec& y) {
    return y.center.contains(x.line) || sum(y.center, x.line).contains(x.center);
  };
  return half(a, b) && half(b, a);
}

}  // namespace

bool triadon_compatible(const LieonSpec& a, const LieonSpec& b) {
  require(a, LieonKind::Triadon);
  require(b, LieonKind::Triadon);
  require_same_ambient(a, b);
  return incidence_compatible(a, b);
}

bool dyon_triadon_compatible(const LieonSpec& dy, const LieonSpec& t) {
  require(dy, LieonKind::Dyon);
  require(t, LieonKind::Triadon);
  require_same_ambient(dy, t);
  return incidence_compatible(dy, t);
}

bool dyon_dyon_compatible(const LieonSpec& a, const LieonSpec& b) {
  require(a, LieonKind::Dyon);
  require(b, LieonKind::Dyon);
  require_same_ambient(a, b);
  return incidence_compatible(a, b);
}

bool lieons_compatible(const LieonSpec& a, const LieonSpec& b) {
  bool ta = a.kind == LieonKind::Triadon, tb = b.kind == LieonKind::Triadon;
  if (ta && tb) return triadon_compatible(a, b);
  if (!ta && !tb) return dyon_dyon_compatible(a, b);
  return ta ? dyon_triadon_compatible(b, a) : dyon_triadon_compatible(a, b);
}

IncompatiblePairError::IncompatiblePairError(std::size_t a, std::size_t b)
    : std::invalid_argument("lieons " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                            " are incompatible"),
      first(a),
      second(b) {}

LieAlgebra assemble_first_level(const std::vector<LieonSpec>& specs, const std::vector<Scalar>& coeffs) {
  if (specs.size() != coeffs.size()) throw DimensionError("assemble_first_level: one coefficient per lieon");
  if (specs.empty()) throw std::invalid_argument("assemble_first_level: no lieons");
  for (std::size_t a = 0; a < specs.size(); ++a)
    for (std::size_t b = a + 1; b < specs.size(); ++b)
      if (!lieons_compatible(specs[a], specs[b])) throw IncompatiblePairError(a, b);
  StructureConstants total(specs.front().ambient_dim);
  for (std::size_t a = 0; a < specs.size(); ++a)
    total = add(total, scaled(lieon_structure(specs[a]), coeffs[a]));
  return LieAlgebra(total);
}

}  // namespace lieon
