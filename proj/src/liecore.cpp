#include "lieon/liecore.hpp"

#include <algorithm>

namespace lieon {

// ---------------------------------------------------------------- StructureConstants

StructureConstants::StructureConstants(std::size_t n) : n_(n) {}

void StructureConstants::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) throw DimensionError("label count differs from dimension");
  labels_ = std::move(labels);
}

void StructureConstants::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  if (i >= n_ || j >= n_ || v.size() != n_) throw DimensionError("bracket index out of range");
  if (i == j) {
    if (!lieon::is_zero(v)) throw std::invalid_argument("[e_i, e_i] must vanish");
    return;
  }
  Key key = i < j ? Key{i, j} : Key{j, i};
  if (lieon::is_zero(v)) {
    br_.erase(key);
    return;
  }
  br_[key] = i < j ? v : lieon::scaled(v, -1);
}

void StructureConstants::add_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (i >= n_ || j >= n_ || k >= n_) throw DimensionError("bracket index out of range");
  if (i == j || sgn(c) == 0) return;
  Key key = i < j ? Key{i, j} : Key{j, i};
  auto it = br_.find(key);
  if (it == br_.end()) it = br_.emplace(key, Vector(n_)).first;
  it->second[k] += i < j ? c : Scalar(-c);
  if (lieon::is_zero(it->second)) br_.erase(it);
}

Vector StructureConstants::bracket(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DimensionError("bracket index out of range");
  if (i == j) return Vector(n_);
  auto it = br_.find(i < j ? Key{i, j} : Key{j, i});
  if (it == br_.end()) return Vector(n_);
  return i < j ? it->second : lieon::scaled(it->second, -1);
}

Vector StructureConstants::bracket(const Vector& u, const Vector& v) const {
  if (u.size() != n_ || v.size() != n_) throw DimensionError("bracket: vector size mismatch");
  Vector out(n_);
  for (const auto& [key, vec] : br_) {
    Scalar c = u[key.first] * v[key.second] - u[key.second] * v[key.first];
    if (sgn(c) != 0) axpy(out, c, vec);
  }
  return out;
}

Scalar StructureConstants::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  auto it = br_.find(i < j ? Key{i, j} : Key{j, i});
  if (it == br_.end()) return 0;
  return i < j ? it->second[k] : Scalar(-it->second[k]);
}

std::size_t StructureConstants::term_count() const {
  std::size_t t = 0;
  for (const auto& [key, vec] : br_)
    for (const auto& c : vec)
      if (sgn(c) != 0) ++t;
  return t;
}

// ---------------------------------------------------------------- Jacobi

namespace {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

std::vector<SparseVec> bracket_table(const StructureConstants& sc) {
  std::size_t n = sc.dim();
  std::vector<SparseVec> tab(n * n);
  for (const auto& [key, vec] : sc.entries()) {
    auto [i, j] = key;
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(vec[k]) == 0) continue;
      tab[i * n + j].emplace_back(k, vec[k]);
      tab[j * n + i].emplace_back(k, -vec[k]);
    }
  }
  return tab;
}

void accumulate_double(const std::vector<SparseVec>& tab, std::size_t n, std::size_t i, std::size_t j,
                       std::size_t k, Vector& acc) {
  // acc += [[e_i, e_j], e_k]
  for (const auto& [l, c] : tab[i * n + j])
    for (const auto& [m, d] : tab[l * n + k]) acc[m] += c * d;
}

}  // namespace

Jacobiator jacobiator(const StructureConstants& sc) {
  std::size_t n = sc.dim();
  auto tab = bracket_table(sc);
  Jacobiator out;
  Vector acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (tab[i * n + j].empty() && tab[k * n + i].empty() && tab[j * n + k].empty()) continue;
        std::fill(acc.begin(), acc.end(), Scalar(0));
        accumulate_double(tab, n, i, j, k, acc);
        accumulate_double(tab, n, k, i, j, acc);
        accumulate_double(tab, n, j, k, i, acc);
        // J(x,y,z) = [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
        if (!is_zero(acc)) out.emplace(Triple{i, j, k}, scaled(acc, Scalar(-1)));
      }
  return out;
}

bool satisfies_jacobi(const StructureConstants& sc) { return jacobiator(sc).empty(); }

StructureConstants add(const StructureConstants& a, const StructureConstants& b) {
  if (a.dim() != b.dim()) throw DimensionError("add: dimension mismatch");
  StructureConstants r = a;
  for (const auto& [key, vec] : b.entries()) r.set_bracket(key.first, key.second, lieon::add(r.bracket(key.first, key.second), vec));
  return r;
}

StructureConstants subtract(const StructureConstants& a, const StructureConstants& b) {
  return add(a, scaled(b, -1));
}

StructureConstants scaled(const StructureConstants& a, const Scalar& c) {
  StructureConstants r(a.dim());
  r.set_labels(a.labels());
  if (sgn(c) == 0) return r;
  for (const auto& [key, vec] : a.entries()) r.set_bracket(key.first, key.second, lieon::scaled(vec, c));
  return r;
}

// ---------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(StructureConstants sc) : sc_(std::move(sc)) {
  auto j = jacobiator(sc_);
  if (!j.empty()) {
    auto [i, k, l] = j.begin()->first;
    throw NotLieError("Jacobi identity fails on basis triple (" + std::to_string(i + 1) + "," +
                      std::to_string(k + 1) + "," + std::to_string(l + 1) + ")");
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t n) { return LieAlgebra(StructureConstants(n)); }

Matrix Representation::of(const Vector& x) const {
  if (x.size() != matrices.size()) throw DimensionError("representation: vector size mismatch");
  Matrix m(space_dim, space_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) m = m + matrices[i] * x[i];
  return m;
}

bool is_representation(const Representation& rho) {
  std::size_t n = rho.algebra.dim();
  if (rho.matrices.size() != n) return false;
  for (const auto& m : rho.matrices)
    if (m.rows() != rho.space_dim || m.cols() != rho.space_dim) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(rho.of(rho.algebra.sc().bracket(i, j)) == commutator(rho.matrices[i], rho.matrices[j])))
        return false;
  return true;
}

std::string to_string(LieonClass c) {
  switch (c) {
    case LieonClass::Abelian: return "abelian";
    case LieonClass::Dyon: return "dyon";
    case LieonClass::Triadon: return "triadon";
    case LieonClass::Other: return "other";
  }
  return "other";
}

// ---------------------------------------------------------------- invariants

bool compatible(const StructureConstants& a, const StructureConstants& b) {
  if (a.dim() != b.dim()) throw DimensionError("compatible: dimension mismatch");
  return satisfies_jacobi(add(a, b));
}

bool compatible(const LieAlgebra& a, const LieAlgebra& b) { return compatible(a.sc(), b.sc()); }

Subspace center(const StructureConstants& g) {
  std::size_t n = g.dim();
  Matrix m(n * n, n);
  for (const auto& [key, vec] : g.entries()) {
    auto [i, j] = key;
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(vec[k]) == 0) continue;
      // x_i c_ij^k contributes to the (j,k) entry of [x, e_j]
      m(j * n + k, i) += vec[k];
      m(i * n + k, j) -= vec[k];
    }
  }
  return kernel(m);
}

Subspace derived(const StructureConstants& g) {
  std::vector<Vector> vecs;
  for (const auto& [key, vec] : g.entries()) vecs.push_back(vec);
  return Subspace::span(vecs, g.dim());
}

Subspace bracket_span(const StructureConstants& g, const Subspace& u, const Subspace& v) {
  std::vector<Vector> vecs;
  auto uv = u.vectors(), vv = v.vectors();
  for (const auto& a : uv)
    for (const auto& b : vv) {
      Vector w = g.bracket(a, b);
      if (!is_zero(w)) vecs.push_back(std::move(w));
    }
  return Subspace::span(vecs, g.dim());
}

std::vector<Subspace> derived_series(const StructureConstants& g) {
  std::vector<Subspace> out{Subspace::full(g.dim())};
  while (true) {
    Subspace next = bracket_span(g, out.back(), out.back());
    if (next == out.back()) break;
    out.push_back(next);
  }
  return out;
}

std::vector<Subspace> lower_central_series(const StructureConstants& g) {
  std::vector<Subspace> out{Subspace::full(g.dim())};
  Subspace all = out.front();
  while (true) {
    Subspace next = bracket_span(g, all, out.back());
    if (next == out.back()) break;
    out.push_back(next);
  }
  return out;
}

bool is_solvable(const StructureConstants& g) { return derived_series(g).back().dim() == 0; }
bool is_nilpotent(const StructureConstants& g) { return lower_central_series(g).back().dim() == 0; }

Matrix ad(const StructureConstants& g, const Vector& v) {
  std::size_t n = g.dim();
  if (v.size() != n) throw DimensionError("ad: vector size mismatch");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_col(j, g.bracket(v, unit_vector(n, j)));
  return m;
}

Matrix killing_form(const StructureConstants& g) {
  std::size_t n = g.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad(g, unit_vector(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

Subspace radical(const StructureConstants& g) {
  Subspace d = derived(g);
  if (d.dim() == 0) return Subspace::full(g.dim());
  Matrix k = killing_form(g);
  std::vector<Vector> rows;
  for (const auto& v : d.vectors()) rows.push_back(k * v);
  return kernel(Matrix::from_rows(rows, g.dim()));
}

bool is_subalgebra(const StructureConstants& g, const Subspace& s) {
  auto vs = s.vectors();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!s.contains(g.bracket(vs[a], vs[b]))) return false;
  return true;
}

bool is_ideal(const StructureConstants& g, const Subspace& s) {
  auto vs = s.vectors();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Vector e = unit_vector(g.dim(), i);
    for (const auto& v : vs)
      if (!s.contains(g.bracket(e, v))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- builders

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::size_t n = a.dim() + b.dim();
  StructureConstants sc(n);
  for (const auto& [key, vec] : a.sc().entries()) {
    Vector v(n);
    std::copy(vec.begin(), vec.end(), v.begin());
    sc.set_bracket(key.first, key.second, v);
  }
  for (const auto& [key, vec] : b.sc().entries()) {
    Vector v(n);
    std::copy(vec.begin(), vec.end(), v.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    sc.set_bracket(a.dim() + key.first, a.dim() + key.second, v);
  }
  return LieAlgebra(sc);
}

LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient() != g.dim()) throw DimensionError("quotient: ambient mismatch");
  if (!is_ideal(g.sc(), ideal)) throw ClosureError("quotient: subspace is not an ideal");
  auto comp = complement_indices(ideal);
  StructureConstants sc(comp.size());
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = a + 1; b < comp.size(); ++b) {
      Vector r = ideal.reduce(g.sc().bracket(comp[a], comp[b]));
      Vector v(comp.size());
      for (std::size_t c = 0; c < comp.size(); ++c) v[c] = r[comp[c]];
      sc.set_bracket(a, b, v);
    }
  return LieAlgebra(sc);
}

namespace {

// Coordinates with respect to independent rows, via the RREF of their span.
class RowCoordinates {
 public:
  explicit RowCoordinates(const std::vector<Vector>& rows, std::size_t n)
      : span_(Subspace::span(rows, n)) {
    if (span_.dim() != rows.size()) throw std::invalid_argument("basis rows are not independent");
    std::size_t k = rows.size();
    Matrix r(k, k);
    for (std::size_t a = 0; a < k; ++a) r.set_row(a, span_.coordinates(rows[a]));
    inv_t_ = inverse(r.transpose());
  }
  std::optional<Vector> operator()(const Vector& v) const {
    if (!span_.contains(v)) return std::nullopt;
    Vector c(span_.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = v[span_.pivots()[i]];
    return inv_t_ * c;
  }

 private:
  Subspace span_;
  Matrix inv_t_;
};

}  // namespace

LieAlgebra restrict_to_basis(const LieAlgebra& g, const std::vector<Vector>& rows) {
  RowCoordinates coords(rows, g.dim());
  StructureConstants sc(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      auto y = coords(g.sc().bracket(rows[a], rows[b]));
      if (!y) throw ClosureError("restrict: subspace is not a subalgebra");
      sc.set_bracket(a, b, *y);
    }
  return LieAlgebra(sc);
}

LieAlgebra restrict(const LieAlgebra& g, const Subspace& subalgebra) {
  if (subalgebra.ambient() != g.dim()) throw DimensionError("restrict: ambient mismatch");
  return restrict_to_basis(g, subalgebra.vectors());
}

LieAlgebra semidirect(const LieAlgebra& g0, const Representation& rho) {
  if (!(rho.algebra == g0)) throw std::invalid_argument("semidirect: representation of a different algebra");
  if (!is_representation(rho)) throw ClosureError("semidirect: not a representation");
  std::size_t n0 = g0.dim(), m = rho.space_dim, n = n0 + m;
  StructureConstants sc(n);
  for (const auto& [key, vec] : g0.sc().entries()) {
    Vector v(n);
    std::copy(vec.begin(), vec.end(), v.begin());
    sc.set_bracket(key.first, key.second, v);
  }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      Vector v(n);
      for (std::size_t b = 0; b < m; ++b) v[n0 + b] = rho.matrices[i](b, a);
      sc.set_bracket(i, n0 + a, v);
    }
  return LieAlgebra(sc);
}

LieAlgebra gamma_A(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("gamma_A: operator must be square");
  std::size_t m = a.rows();
  StructureConstants sc(m + 1);
  for (std::size_t j = 0; j < m; ++j) {
    Vector v(m + 1);
    for (std::size_t i = 0; i < m; ++i) v[1 + i] = a(i, j);
    sc.set_bracket(0, 1 + j, v);
  }
  return LieAlgebra(sc);
}

StructureConstants change_basis(const StructureConstants& g, const Matrix& b) {
  std::size_t n = g.dim();
  if (b.rows() != n || b.cols() != n) throw DimensionError("change_basis: shape mismatch");
  Matrix coord = inverse(b).transpose();
  auto rows = b.row_vectors();
  StructureConstants out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      Vector u = g.bracket(rows[a], rows[c]);
      if (!is_zero(u)) out.set_bracket(a, c, coord * u);
    }
  return out;
}

StructureConstants from_basis(const StructureConstants& sc, const Matrix& b) {
  return change_basis(sc, inverse(b));
}

StructureConstants embed(const StructureConstants& h, const std::vector<Vector>& rows, std::size_t n) {
  if (rows.size() != h.dim()) throw DimensionError("embed: basis size mismatch");
  Subspace s = Subspace::span(rows, n);
  if (s.dim() != rows.size()) throw std::invalid_argument("embed: rows not independent");
  std::vector<Vector> full = rows;
  for (auto i : complement_indices(s)) full.push_back(unit_vector(n, i));
  StructureConstants padded(n);
  for (const auto& [key, vec] : h.entries()) {
    Vector v(n);
    std::copy(vec.begin(), vec.end(), v.begin());
    padded.set_bracket(key.first, key.second, v);
  }
  return from_basis(padded, Matrix::from_rows(full, n));
}

// ---------------------------------------------------------------- lieons

Classification classify_lieon(const StructureConstants& g) {
  std::size_t n = g.dim();
  if (g.is_zero()) return {LieonClass::Abelian, std::nullopt};
  if (n < 2) return {LieonClass::Other, std::nullopt};
  Subspace c = center(g);
  Subspace d = derived(g);
  if (c.dim() != n - 2 || d.dim() != 1) return {LieonClass::Other, std::nullopt};
  auto comp = complement_indices(c);
  Vector line = d.vector(0);
  Vector br = g.bracket(comp[0], comp[1]);
  LieonSpec spec;
  spec.kind = c.contains(line) ? LieonKind::Triadon : LieonKind::Dyon;
  spec.ambient_dim = n;
  spec.center = c;
  spec.line = d;
  spec.scale = br[d.pivots()[0]];
  return {spec.kind == LieonKind::Triadon ? LieonClass::Triadon : LieonClass::Dyon, spec};
}

StructureConstants lieon_structure(const LieonSpec& spec) {
  std::size_t n = spec.ambient_dim;
  if (n < 2 || spec.center.ambient() != n || spec.line.ambient() != n)
    throw DimensionError("lieon: ambient mismatch");
  if (spec.center.dim() != n - 2 || spec.line.dim() != 1)
    throw std::invalid_argument("lieon: center must have codimension 2 and line dimension 1");
  if (sgn(spec.scale) == 0) throw std::invalid_argument("lieon: zero scale");
  bool inside = spec.center.contains(spec.line);
  if (inside != (spec.kind == LieonKind::Triadon))
    throw std::invalid_argument("lieon: line incidence does not match kind");
  auto comp = complement_indices(spec.center);
  std::vector<Vector> rows = spec.center.vectors();
  rows.push_back(unit_vector(n, comp[0]));
  rows.push_back(unit_vector(n, comp[1]));
  // y(., i) are the coordinates of e_i in the adapted basis
  Matrix y = inverse(Matrix::from_rows(rows, n)).transpose();
  Vector d = spec.line.vector(0);
  StructureConstants sc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar w = y(n - 2, i) * y(n - 1, j) - y(n - 1, i) * y(n - 2, j);
      if (sgn(w) != 0) sc.set_bracket(i, j, lieon::scaled(d, spec.scale * w));
    }
  return sc;
}

}  // namespace lieon
