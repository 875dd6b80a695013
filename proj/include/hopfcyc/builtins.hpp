#pragma once
#include <memory>
#include <string>
#include <vector>

#include "hopfcyc/lie_algebra.hpp"
#include "hopfcyc/presentation.hpp"

namespace hopfcyc {

// Group algebra C[Gamma] from a multiplication table (indices into the
// element list). Validates the group axioms; names the failing triple.
HopfPtr group_algebra(std::vector<std::string> elements, std::vector<std::vector<int>> table);
HopfPtr cyclic_group_algebra(int n);  // Z/n
HopfPtr symmetric_group_s3();

// The one-dimensional coalgebra C.rho with Delta(rho)=rho x rho (the trivial
// group algebra); "point" in CLI spelling.
HopfPtr one_grouplike();

// Enveloping algebra U(g) on the PBW basis of sorted exponent vectors.
HopfPtr enveloping(const LieAlgebra& g);

// Symmetric algebra S(V) = U(abelian V).
HopfPtr symmetric_algebra(int dim);

// U_q(sl2) at an explicit rational q (not 0, 1, -1), on the basis
// x^m y^k sigma^p with x=E, y=KF, sigma=K; power_window bounds |p| in basis().
HopfPtr uq_sl2(const Rat& q, int power_window = 2);

// "z2", "z5", "s3", "point", "sv2", "lie-abelian2", "lie-heisenberg3",
// "lie-sl2", "uqsl2". Throws BadParameter on unknown names.
HopfPtr make_builtin(const std::string& name, const Rat& q = Rat(3) / 2, int power_window = 2);

// Finite-dimensional presentation given by explicit structure-map tables,
// keys are basis indices {i}. Schema checked here; Hopf axioms are checked
// separately so that deliberately corrupted tables can be probed.
struct TableData {
    std::string name = "table";
    std::vector<std::string> basis_names;
    std::vector<int> weights;  // empty means all-zero
    int unit = 0;
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> mul;  // [i][j] -> terms
    std::vector<std::vector<std::tuple<int, int, Rat>>> comul;       // [i] -> (a,b,coeff)
    std::vector<Rat> counit;
    std::vector<std::vector<std::pair<int, Rat>>> antipode;
    std::vector<Rat> delta_values;  // optional character values per basis key
    int sigma = -1;                 // optional distinguished group-like index
};
HopfPtr table_presentation(TableData data);
const TableData* table_data_of(const Hopf& h);

// Tabulates a finite-dimensional presentation (round-trip support).
TableData tabulate(const Hopf& h);

// Group data access for modules that need it (Haar, conjugation actions).
struct GroupData {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> table;
    int identity = 0;
    std::vector<int> inverse;
};
const GroupData* group_data_of(const Hopf& h);  // null if not a group algebra

const LieAlgebra* lie_data_of(const Hopf& h);  // null if not an enveloping algebra

struct UqData {
    Rat q;
    int power_window;
};
const UqData* uq_data_of(const Hopf& h);  // null if not uq_sl2

}  // namespace hopfcyc
