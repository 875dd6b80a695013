#pragma once
#include <mutex>

#include "hopfcyc/presentation.hpp"
#include "hopfcyc/sparse_matrix.hpp"

namespace hopfcyc {

enum class Flavor { Plain, Delta, DeltaSigma };

std::string flavor_name(Flavor f);

// Cocyclic module H# (plain: level n is H^{x(n+1)}) or its localization
// H#_delta / H#_{delta,sigma} (level n is H^{xn}). Levels are truncated to
// total weight <= D; all structure maps are weight-non-increasing, so the
// truncation is an honest subcomplex for the face/cyclic operators.
class CocyclicModule {
public:
    static CocyclicModule sharp(CoalgebraPtr C, int D);
    // requires check_involutive (NotInvolutive otherwise)
    static CocyclicModule sharp_delta(HopfPtr H, Character delta, int D);
    // requires check_modular_pair (NotModular / NotGroupLike otherwise)
    static CocyclicModule sharp_delta_sigma(HopfPtr H, Character delta, Key sigma, int D);
    // the formulas of sharp_delta with sigma deliberately forced to 1 even
    // though S_delta is not involutive (an infinity-cyclic module)
    static CocyclicModule sharp_delta_unchecked(HopfPtr H, Character delta, int D);

    Flavor flavor() const { return flavor_; }
    const Coalgebra& coalgebra() const { return *C_; }
    const Hopf& hopf() const;
    const Character& delta() const { return delta_; }
    const Key& sigma() const { return sigma_; }
    int D() const { return D_; }
    std::string description() const;

    int arity(int n) const { return flavor_ == Flavor::Plain ? n + 1 : n; }

    const std::vector<TupleKey>& level_basis(int n) const;
    int level_dim(int n) const { return (int)level_basis(n).size(); }
    int index_of(int n, const TupleKey& t) const;  // TruncationEscape if absent
    SparseVec vec_of(int n, const Tensor& x) const;
    Tensor tensor_of_vec(int n, const SparseVec& v) const;

    // Exact operators on tensors (defined for arbitrary finite tensors, no
    // truncation involved).
    Tensor face(int n, int i, const TupleKey& t) const;        // level n -> n+1
    Tensor degeneracy(int n, int i, const TupleKey& t) const;  // level n -> n-1
    Tensor cyclic(int n, const TupleKey& t) const;             // unsigned t
    Tensor apply_face(int n, int i, const Tensor& x) const;
    Tensor apply_cyclic(int n, const Tensor& x) const;
    Tensor apply_b(int n, const Tensor& x) const;       // sum (-1)^i d^i
    Tensor apply_bprime(int n, const Tensor& x) const;  // omits the last coface
    Tensor apply_lambda(int n, const Tensor& x) const;  // signed cyclic (-1)^n t
    Tensor apply_B(int n, const Tensor& x) const;       // Connes B, level n -> n-1

    // Matrices on the truncated level bases.
    SparseMatrix face_matrix(int n, int i) const;
    SparseMatrix degeneracy_matrix(int n, int i) const;
    SparseMatrix cyclic_matrix(int n) const;
    SparseMatrix b_matrix(int n) const;
    SparseMatrix bprime_matrix(int n) const;
    SparseMatrix lambda_matrix(int n) const;
    SparseMatrix norm_matrix(int n) const;  // 1 + lambda + ... + lambda^n
    SparseMatrix B_matrix(int n) const;

    // Localization projection pi(h^0,...,h^n) = S_delta(h^0).(h^1,...,h^n)
    // from the plain module (levels must agree: plain level n -> this level
    // n) and its section iota(u) = (1, u).
    SparseMatrix pi_matrix(const CocyclicModule& plain, int n) const;
    SparseMatrix iota_matrix(const CocyclicModule& plain, int n) const;

    // True when every operator used by the Hochschild/cyclic assemblies is
    // weight-homogeneous on the enumerated window (checked empirically).
    bool weight_graded(int n_max) const;

    // Cosimplicial identities, cyclic compatibilities, t^{n+1} = 1 (for
    // Plain and honestly cyclic localized flavors), as matrix equations.
    void check_cocyclic_identities(int n_max) const;

private:
    CocyclicModule(CoalgebraPtr C, HopfPtr H, Flavor f, Character delta, Key sigma, int D);

    Tensor act(const Elem& h, const TupleKey& t) const;

    CoalgebraPtr C_;
    HopfPtr H_;
    Flavor flavor_;
    Character delta_;
    Key sigma_;
    int D_;
    // shared cache keeps the module cheap to copy (value semantics)
    struct Cache {
        std::mutex mu;
        std::map<int, std::vector<TupleKey>> basis;
        std::map<int, std::map<TupleKey, int>> index;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace hopfcyc
