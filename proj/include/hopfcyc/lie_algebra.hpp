#pragma once
#include <string>
#include <vector>

#include "hopfcyc/rational.hpp"

namespace hopfcyc {

// Finite-dimensional Lie algebra by structure constants [e_i, e_j] =
// sum_k c[i][j][k] e_k. Validated for antisymmetry and the Jacobi identity.
struct LieAlgebra {
    std::string name;
    int dim = 0;
    // c[i][j] = list of (k, coefficient); only i < j need be supplied.
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> c;

    std::vector<Rat> bracket(int i, int j) const;  // dense coefficient vector
    std::vector<Rat> bracket_vec(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
    void validate() const;  // throws JacobiFailure / InvalidTable

    static LieAlgebra abelian(int dim);
    static LieAlgebra heisenberg3();
    static LieAlgebra sl2();
};

}  // namespace hopfcyc
