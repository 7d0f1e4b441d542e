#include "lieon/multivec.hpp"

#include <algorithm>
#include <bit>

namespace lieon {

namespace {

using Key = MultiVector::Key;

void check_dim(std::size_t n) {
  if (n > MultiVector::kMaxDim) throw DimensionError("multivector dimension exceeds 64");
}

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

// Sign of xi_A ^ xi_B relative to the sorted union; A and B disjoint.
int wedge_sign(std::uint64_t a, std::uint64_t b) {
  int inversions = 0;
  while (b != 0) {
    int j = std::countr_zero(b);
    b &= b - 1;
    std::uint64_t above = (j == 63) ? 0 : (a & ~((bit(static_cast<std::size_t>(j)) << 1) - 1));
    inversions += std::popcount(above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// (-1)^(number of indices in mask preceding i)
int removal_sign(std::uint64_t mask, std::size_t i) {
  return (std::popcount(mask & (bit(i) - 1)) % 2 == 0) ? 1 : -1;
}

std::vector<std::uint16_t> add_exp(const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b) {
  std::vector<std::uint16_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

void require_same_dim(const MultiVector& p, const MultiVector& q) {
  if (p.n() != q.n()) throw DimensionError("multivector dimension mismatch");
}

std::size_t homogeneous_degree(const MultiVector& p) {
  auto d = p.xi_degree();
  if (!d) throw DegreeError("multivector is not homogeneous in xi-degree");
  return *d;
}

}  // namespace

MultiVector::MultiVector(std::size_t n) : n_(n) { check_dim(n); }

MultiVector MultiVector::constant(std::size_t n, const Scalar& c) {
  MultiVector m(n);
  m.add_term(Key{0, std::vector<std::uint16_t>(n)}, c);
  return m;
}

MultiVector MultiVector::x(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("x index out of range");
  MultiVector m(n);
  Key k{0, std::vector<std::uint16_t>(n)};
  k.exp[i] = 1;
  m.add_term(k, 1);
  return m;
}

MultiVector MultiVector::xi(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("xi index out of range");
  MultiVector m(n);
  m.add_term(Key{bit(i), std::vector<std::uint16_t>(n)}, 1);
  return m;
}

MultiVector MultiVector::monomial(std::size_t n, const Scalar& c, const std::vector<std::uint16_t>& exp,
                                  const std::vector<std::size_t>& xi_indices) {
  if (exp.size() != n) throw DimensionError("exponent vector size mismatch");
  MultiVector m(n);
  std::uint64_t mask = 0;
  int sign = 1;
  for (auto i : xi_indices) {
    if (i >= n) throw DimensionError("xi index out of range");
    if (mask & bit(i)) return m;
    sign *= wedge_sign(mask, bit(i));
    mask |= bit(i);
  }
  m.add_term(Key{mask, exp}, sign > 0 ? c : Scalar(-c));
  return m;
}

void MultiVector::add_term(const Key& k, const Scalar& c) {
  if (sgn(c) == 0) return;
  if (k.exp.size() != n_) throw DimensionError("term exponent size mismatch");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

std::optional<std::size_t> MultiVector::xi_degree() const {
  if (terms_.empty()) return 0;
  auto d = static_cast<std::size_t>(std::popcount(terms_.begin()->first.xi));
  for (const auto& [k, c] : terms_)
    if (static_cast<std::size_t>(std::popcount(k.xi)) != d) return std::nullopt;
  return d;
}

std::size_t MultiVector::max_x_degree() const {
  std::size_t m = 0;
  for (const auto& [k, c] : terms_) {
    std::size_t d = 0;
    for (auto e : k.exp) d += e;
    m = std::max(m, d);
  }
  return m;
}

MultiVector MultiVector::operator+(const MultiVector& o) const {
  require_same_dim(*this, o);
  MultiVector r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

MultiVector MultiVector::operator-(const MultiVector& o) const { return *this + o * Scalar(-1); }

MultiVector MultiVector::operator*(const Scalar& c) const {
  MultiVector r(n_);
  if (sgn(c) == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

std::string MultiVector::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::string, Scalar>> items;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (k.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (k.exp[i] > 1) mono += "**" + std::to_string(k.exp[i]);
    }
    std::string xis;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!(k.xi & bit(i))) continue;
      if (!xis.empty()) xis += "^";
      xis += "xi" + std::to_string(i + 1);
    }
    if (!xis.empty()) mono += (mono.empty() ? "" : "*") + xis;
    items.emplace_back(mono, c);
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (std::size_t t = 0; t < items.size(); ++t) {
    const auto& [mono, c] = items[t];
    bool neg = sgn(c) < 0;
    Scalar a = abs(c);
    if (t == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
      out += lieon::to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += lieon::to_string(a) + "*" + mono;
    }
  }
  return out;
}

MultiVector wedge(const MultiVector& p, const MultiVector& q) {
  require_same_dim(p, q);
  MultiVector r(p.n());
  for (const auto& [ka, ca] : p.terms())
    for (const auto& [kb, cb] : q.terms()) {
      if (ka.xi & kb.xi) continue;
      Scalar c = ca * cb;
      if (wedge_sign(ka.xi, kb.xi) < 0) c = -c;
      r.add_term(Key{ka.xi | kb.xi, add_exp(ka.exp, kb.exp)}, c);
    }
  return r;
}

MultiVector schouten(const MultiVector& p, const MultiVector& q) {
  require_same_dim(p, q);
  std::size_t dp = homogeneous_degree(p);
  homogeneous_degree(q);
  std::size_t n = p.n();
  MultiVector r(n);
  const bool odd_p = dp % 2 == 1;
  for (const auto& [ka, ca] : p.terms())
    for (const auto& [kb, cb] : q.terms())
      for (std::size_t i = 0; i < n; ++i) {
        // dP/dx_i ^ dQ/dxi_i
        if (ka.exp[i] > 0 && (kb.xi & bit(i))) {
          std::uint64_t jb = kb.xi & ~bit(i);
          if (!(ka.xi & jb)) {
            Scalar c = ca * cb * ka.exp[i];
            int s = removal_sign(kb.xi, i) * wedge_sign(ka.xi, jb);
            Key k{ka.xi | jb, add_exp(ka.exp, kb.exp)};
            --k.exp[i];
            r.add_term(k, s > 0 ? Scalar(-c) : c);
          }
        }
        // (-1)^p dP/dxi_i ^ dQ/dx_i
        if ((ka.xi & bit(i)) && kb.exp[i] > 0) {
          std::uint64_t ia = ka.xi & ~bit(i);
          if (!(ia & kb.xi)) {
            Scalar c = ca * cb * kb.exp[i];
            int s = removal_sign(ka.xi, i) * wedge_sign(ia, kb.xi) * (odd_p ? -1 : 1);
            Key k{ia | kb.xi, add_exp(ka.exp, kb.exp)};
            --k.exp[i];
            r.add_term(k, s > 0 ? Scalar(-c) : c);
          }
        }
      }
  return r;
}

// ---------------------------------------------------------------- oracle

namespace {

struct Mono {
  MultiVector f;                  // xi-degree 0 coefficient
  std::vector<std::size_t> idx;   // xi indices in increasing order
};

MultiVector xi_product(std::size_t n, const std::vector<std::size_t>& idx, std::size_t from) {
  MultiVector r = MultiVector::constant(n, 1);
  for (std::size_t t = from; t < idx.size(); ++t) r = wedge(r, MultiVector::xi(n, idx[t]));
  return r;
}

MultiVector d_dx(const MultiVector& f, std::size_t j) {
  MultiVector r(f.n());
  for (const auto& [k, c] : f.terms()) {
    if (k.exp[j] == 0) continue;
    Key nk = k;
    --nk.exp[j];
    r.add_term(nk, c * k.exp[j]);
  }
  return r;
}

// [[g, xi_{idx[from]} ^ ... ]] for a function g
MultiVector function_with_xis(const MultiVector& g, const std::vector<std::size_t>& idx, std::size_t from) {
  std::size_t n = g.n();
  if (from == idx.size()) return MultiVector(n);
  std::size_t i1 = idx[from];
  // [[g, xi_i]] = -d_i g ; the second Leibniz term carries (-1)^{(0-1)*1} = -1
  MultiVector first = wedge(d_dx(g, i1) * Scalar(-1), xi_product(n, idx, from + 1));
  MultiVector second = wedge(MultiVector::xi(n, i1), function_with_xis(g, idx, from + 1));
  return first - second;
}

// [[P, xi_{idx[from]} ^ ...]]
MultiVector mono_with_xis(const Mono& p, const std::vector<std::size_t>& idx, std::size_t from) {
  std::size_t n = p.f.n();
  if (from == idx.size()) return MultiVector(n);
  std::size_t j1 = idx[from];
  std::size_t deg = p.idx.size();
  // [[P, xi_j]] = -[[xi_j, P]] = -(d_j f) xi_I
  MultiVector p_xi = wedge(d_dx(p.f, j1), xi_product(n, p.idx, 0)) * Scalar(-1);
  MultiVector first = wedge(p_xi, xi_product(n, idx, from + 1));
  MultiVector second = wedge(MultiVector::xi(n, j1), mono_with_xis(p, idx, from + 1));
  bool negative = deg % 2 == 0;  // (-1)^(deg-1)
  return negative ? first - second : first + second;
}

MultiVector mono_bracket(const Mono& p, const Mono& q) {
  std::size_t deg = p.idx.size();
  // [[P, g]] = (-1)^deg [[g, P]] and [[g, f xi_I]] = f [[g, xi_I]]
  MultiVector p_g = wedge(p.f, function_with_xis(q.f, p.idx, 0));
  if (deg % 2 == 1) p_g = p_g * Scalar(-1);
  MultiVector first = wedge(p_g, xi_product(q.f.n(), q.idx, 0));
  MultiVector second = wedge(q.f, mono_with_xis(p, q.idx, 0));
  return first + second;
}

std::vector<Mono> monomials(const MultiVector& p) {
  std::vector<Mono> out;
  for (const auto& [k, c] : p.terms()) {
    Mono m{MultiVector(p.n()), {}};
    m.f.add_term(Key{0, k.exp}, c);
    for (std::size_t i = 0; i < p.n(); ++i)
      if (k.xi & bit(i)) m.idx.push_back(i);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

MultiVector schouten_oracle(const MultiVector& p, const MultiVector& q) {
  require_same_dim(p, q);
  homogeneous_degree(p);
  homogeneous_degree(q);
  MultiVector r(p.n());
  auto mp = monomials(p), mq = monomials(q);
  for (const auto& a : mp)
    for (const auto& b : mq) r = r + mono_bracket(a, b);
  return r;
}

bool is_poisson(const MultiVector& p) {
  if (homogeneous_degree(p) != 2 && !p.is_zero()) throw DegreeError("is_poisson expects a bivector");
  return schouten(p, p).is_zero();
}

MultiVector lie_to_bivector(const StructureConstants& g) {
  std::size_t n = g.dim();
  MultiVector p(n);
  for (const auto& [key, vec] : g.entries())
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(vec[k]) == 0) continue;
      Key t{bit(key.first) | bit(key.second), std::vector<std::uint16_t>(n)};
      t.exp[k] = 1;
      p.add_term(t, vec[k]);
    }
  return p;
}

MultiVector lie_to_bivector(const LieAlgebra& g) { return lie_to_bivector(g.sc()); }

LieAlgebra bivector_to_lie(const MultiVector& p) {
  std::size_t n = p.n();
  StructureConstants sc(n);
  for (const auto& [k, c] : p.terms()) {
    if (std::popcount(k.xi) != 2) throw std::invalid_argument("bivector_to_lie: term of xi-degree other than 2");
    std::size_t deg = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (k.exp[i] > 0) {
        deg += k.exp[i];
        var = i;
      }
    if (deg != 1) throw std::invalid_argument("bivector_to_lie: coefficient is not linear");
    auto i = static_cast<std::size_t>(std::countr_zero(k.xi));
    auto j = static_cast<std::size_t>(63 - std::countl_zero(k.xi));
    sc.add_bracket(i, j, var, c);
  }
  if (!is_poisson(p)) throw std::invalid_argument("bivector_to_lie: bivector is not Poisson");
  return LieAlgebra(sc);
}

std::size_t bivector_rank(const MultiVector& p) {
  if (p.is_zero()) return 0;
  if (homogeneous_degree(p) != 2) throw DegreeError("bivector_rank expects a bivector");
  std::size_t k = 1;
  MultiVector power = p;
  while (true) {
    MultiVector next = wedge(power, p);
    if (next.is_zero()) return 2 * k;
    power = std::move(next);
    ++k;
  }
}

std::size_t lie_rank(const LieAlgebra& g) { return bivector_rank(lie_to_bivector(g)); }

}  // namespace lieon
