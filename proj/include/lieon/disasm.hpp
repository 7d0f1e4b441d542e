#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieon/liecore.hpp"

namespace lieon {

struct SchemeNode {
  std::string id;
  std::size_t level = 0;
  StructureConstants algebra;
};

// Leveled disassembling tree. Node ids are dot paths from the root ("0", "0.1", ...).
class AScheme {
 public:
  AScheme() = default;
  AScheme(std::vector<SchemeNode> nodes, std::vector<std::pair<std::string, std::string>> edges);

  const std::vector<SchemeNode>& nodes() const { return nodes_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }
  const SchemeNode* find(const std::string& id) const;
  std::vector<std::string> children(const std::string& id) const;
  const SchemeNode& root() const;
  std::size_t depth() const;
  std::vector<const SchemeNode*> leaves() const;

  bool operator==(const AScheme& o) const;

 private:
  std::vector<SchemeNode> nodes_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::map<std::string, std::size_t> index_;
};

// Tree form used while building schemes.
struct SchemeTree {
  StructureConstants algebra;
  std::vector<SchemeTree> children;
};

// Drops zero children and replaces a node that has a single child by that child's subtree.
SchemeTree normalize(SchemeTree t);
SchemeTree leaf_tree(const StructureConstants& g);
SchemeTree tree_with_children(const StructureConstants& g, const std::vector<StructureConstants>& kids);
AScheme to_scheme(const SchemeTree& t);
SchemeTree to_tree(const AScheme& s);

struct EndTerm {
  std::string id;
  Classification cls;
};

struct SchemeReport {
  bool valid = false;
  bool complete = false;          // every end term is a dyon or a triadon
  bool complete_lenient = false;  // abelian end terms also accepted
  std::vector<EndTerm> end_terms;
  std::vector<std::string> violations;
};

SchemeReport verify_scheme(const AScheme& s);

struct DPair {
  LieAlgebra algebra;
  Subspace s;
  Subspace w;
};

struct Involution {
  LieAlgebra algebra;
  Matrix i;
};

struct DegenerateDPairError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_valid(const DPair& dp);
bool is_valid(const Involution& inv);

std::pair<LieAlgebra, LieAlgebra> split_semidirect(const LieAlgebra& g, const Subspace& subalg,
                                                   const Subspace& ideal);
AScheme disassemble_solvable(const LieAlgebra& g);
SchemeTree disassemble_solvable_tree(const StructureConstants& g);

// Single-monomial pieces of g written in the basis given by the rows of b, returned in
// standard coordinates.
std::vector<StructureConstants> monomial_decompose(const StructureConstants& g, const Matrix& b);
// Monomials of g in basis b as children; if some pairs of monomials are incompatible and the
// incompatibility graph is bipartite, the two colour classes become intermediate nodes.
SchemeTree monomial_tree(const StructureConstants& g, const Matrix& b);

std::vector<LieAlgebra> gamma_decompose(const Matrix& a);
std::vector<LieAlgebra> gamma_decompose(const Matrix& a, const Matrix& basis);

// beta[k] is the dim W x dim W skew matrix of the component along the k-th basis vector of W0.
LieAlgebra dressing_algebra(const Subspace& w0, const Subspace& w, const std::vector<Matrix>& beta);
std::vector<LieAlgebra> dressing_decompose(const Subspace& w0, const Subspace& w,
                                           const std::vector<Matrix>& beta);

std::pair<LieAlgebra, LieAlgebra> strip(const LieAlgebra& g, const DPair& dp);
DPair dpair_from_involution(const Involution& inv);
Involution involution_from_dpair(const DPair& dp);
// First d-pair from the parity of m in g_m = ker(ad(h)^2 - (m^2/4) kappa); the second when
// the first has W = 0.
DPair dpair_from_h(const LieAlgebra& g, const Vector& h, const Scalar& kappa);

struct MultiStripResult {
  AScheme prefix;      // its last leaf is the residual
  LieAlgebra residual;
  Subspace base;       // common +1 eigenspace; a subalgebra of the residual acting on the rest
};

MultiStripResult multi_involution_strip(const LieAlgebra& g, const std::vector<Involution>& invs);
LieAlgebra graded_component_structure(const LieAlgebra& g, const std::vector<Involution>& invs,
                                      const std::vector<int>& sigma);
// Common eigenspaces keyed by grade vector (entries 0/1); empty spaces omitted.
std::map<std::vector<int>, Subspace> common_eigenspaces(std::size_t n, const std::vector<Matrix>& invs);

struct SplittingSpaces {
  std::vector<Matrix> s1;
  std::vector<Matrix> s0;
};

SplittingSpaces splitting_space(const DPair& dp, const Representation& rho);

bool triadon_compatible(const LieonSpec& a, const LieonSpec& b);
bool dyon_triadon_compatible(const LieonSpec& d, const LieonSpec& t);
bool dyon_dyon_compatible(const LieonSpec& a, const LieonSpec& b);
// Dispatches on kinds.
bool lieons_compatible(const LieonSpec& a, const LieonSpec& b);

struct IncompatiblePairError : std::invalid_argument {
  IncompatiblePairError(std::size_t a, std::size_t b);
  std::size_t first;
  std::size_t second;
};

LieAlgebra assemble_first_level(const std::vector<LieonSpec>& specs, const std::vector<Scalar>& coeffs);

}  // namespace lieon
