#pragma once

#include <string>

#include "lieon/disasm.hpp"

namespace lieon {

enum class Family { SO, SP, GL, SL, U, SU };

std::string to_string(Family f);
// Accepts so, sp, gl, sl, u, su in any case.
Family parse_family(const std::string& name);

// params: a_1..a_n for SO, t_1..t_n for GL/SL/U/SU, empty for SP; empty means all ones.
struct ClassicalPreset {
  Family family = Family::SO;
  std::size_t n = 2;
  Vector params;
};

void validate(const ClassicalPreset& p);
std::size_t classical_dim(const ClassicalPreset& p);
LieAlgebra build_algebra(const ClassicalPreset& p);
AScheme disassemble(const ClassicalPreset& p);

struct Census {
  std::size_t dyons = 0;
  std::size_t triadons = 0;
  std::size_t abelian = 0;
  std::size_t steps = 0;
};

// Throws std::invalid_argument when some end term is neither abelian nor a lieon.
Census lieon_census(const AScheme& s);

// The terms P_alpha of so(g) for g = sum x_i^2; for general a, P = sum a_alpha P_alpha.
std::vector<StructureConstants> so_level_one_terms(std::size_t n);

// Groups the monomials [e_a, e_b] = c e_k of g by alpha, where w(a) + w(b) - w(k) = 2 e_alpha.
// Throws std::invalid_argument if some monomial has another weight.
std::vector<StructureConstants> weight_split(const StructureConstants& g,
                                             const std::vector<std::vector<int>>& weights);

}  // namespace lieon
