#pragma once
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/elem.hpp"

namespace hopfcyc {

// Character: a nonzero algebra map H -> Q. "eps" is the counit; enveloping
// presentations also accept a linear form on the Lie basis (vanishing on
// [g,g]), extended multiplicatively over PBW monomials.
struct Character {
    std::string name = "eps";
    std::vector<Rat> gen_values;  // empty for the counit

    static Character counit() { return Character{}; }
    static Character lie(std::string name, std::vector<Rat> values) {
        return Character{std::move(name), std::move(values)};
    }
    bool is_counit() const { return gen_values.empty(); }
};

// Coalgebra presented by computable structure maps on a weight-filtered
// canonical basis. Structure maps must be weight-non-increasing; this is
// asserted by check_coalgebra_axioms.
class Coalgebra {
public:
    explicit Coalgebra(std::string name) : name_(std::move(name)) {}
    virtual ~Coalgebra() = default;

    const std::string& name() const { return name_; }
    virtual int weight(const Key& k) const = 0;
    // All basis keys of weight <= bound, sorted; for presentations that are
    // infinite in a weight-0 direction (U_q(sl2)) this is the windowed slice.
    virtual std::vector<Key> basis(int weight_bound) const = 0;
    // True if basis() is the whole coalgebra (finite-dimensional case).
    virtual bool finite_dimensional() const { return false; }

    PairElem comul(const Key& k) const;  // memoized
    virtual Rat counit(const Key& k) const = 0;

    PairElem comul_elem(const Elem& x) const;
    // Delta^{(nlegs-1)}: H -> H^{x nlegs}; nlegs >= 0 (0 legs = counit).
    Tensor iterated_comul(const Key& k, int nlegs) const;
    Tensor iterated_comul_elem(const Elem& x, int nlegs) const;

    int weight(const TupleKey& t) const;

    // Coassociativity, the counit law (both sides), weight monotonicity.
    void check_coalgebra_axioms(int weight_bound) const;

protected:
    virtual PairElem comul_raw(const Key& k) const = 0;

private:
    std::string name_;
    mutable std::mutex mu_;
    mutable std::map<Key, PairElem> comul_cache_;
    mutable std::map<std::pair<Key, int>, Tensor> itcomul_cache_;
};

class Hopf : public Coalgebra {
public:
    using Coalgebra::Coalgebra;

    virtual Key unit() const = 0;
    Elem mul(const Key& a, const Key& b) const;  // memoized
    Elem antipode(const Key& k) const;           // memoized

    virtual Rat character(const Character& chi, const Key& k) const;

    Elem mul_elem(const Elem& a, const Elem& b) const;
    Elem power(const Elem& a, int n) const;  // n >= 1
    Elem antipode_elem(const Elem& x) const;
    Rat character_elem(const Character& chi, const Elem& x) const;

    // S_delta = delta * S (convolution): S_delta(h) = sum delta(h0) S(h1).
    Elem twisted_antipode(const Character& delta, const Key& k) const;
    Elem twisted_antipode_elem(const Character& delta, const Elem& x) const;

    // Diagonal action of h on a tensor: h(x1,...,xn) = sum h0(x1) x ... x
    // h_{n-1}(xn); on the empty tuple h acts by counit.
    Tensor act_diagonal(const Elem& h, const TupleKey& x) const;
    Tensor act_diagonal(const Elem& h, const Tensor& x) const;

    bool is_grouplike(const Key& k) const;
    // Inverse of a group-like, when the presentation knows it.
    virtual std::optional<Key> grouplike_inverse(const Key& k) const;

    // A finite algebra generating set (unit excluded). Coinvariant spans
    // h(x) - delta(h) x over all of H are generated by these h, since
    // rel(ab, x) = rel(a, rel(b, x)) + delta(a) rel(b, x) + delta(b) rel(a, x).
    virtual std::vector<Key> algebra_generators() const;

    // Antipode law, S(1)=1, eps.S=eps, anti-homomorphism, anti-cocommutation
    // of Delta.S, unit/counit compatibility; weight monotonicity of mul/S.
    void check_hopf_axioms(int weight_bound) const;
    // delta(1)=1 and delta(xy)=delta(x)delta(y) on enumerated key pairs.
    void check_character(const Character& delta, int weight_bound) const;

protected:
    virtual Elem mul_raw(const Key& a, const Key& b) const = 0;
    virtual Elem antipode_raw(const Key& k) const = 0;

private:
    mutable std::mutex mu_;
    mutable std::map<std::pair<Key, Key>, Elem> mul_cache_;
    mutable std::map<Key, Elem> antipode_cache_;
};

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;
using HopfPtr = std::shared_ptr<const Hopf>;

struct IdentityReport {
    bool ok = true;
    int keys_checked = 0;
    std::vector<std::string> failures;  // "(id) at key ..." witnesses
};

// The six twisted-antipode identities on all keys (and key pairs for the
// anti-homomorphism law) of weight <= D. Throws IdentityFailure when
// throw_on_failure, else returns the witness list.
IdentityReport check_twisted_identities(const Hopf& H, const Character& delta, int D,
                                        bool throw_on_failure = true);

struct InvolutiveReport {
    bool holds = true;
    std::vector<std::string> witnesses;  // keys where S_delta^2 != Id
};

// Tests (i) S_delta^2 = Id and (ii) sum S_delta(h1) h0 = delta(h) 1 on keys
// of weight <= D and asserts the two agree (EquivalenceBroken otherwise).
InvolutiveReport check_involutive(const Hopf& H, const Character& delta, int D);

// Group-likeness and invertibility of sigma, delta(sigma)=1, and
// S_delta^2(h) = sigma h sigma^{-1} for keys of weight <= D.
void check_modular_pair(const Hopf& H, const Character& delta, const Key& sigma, int D);

}  // namespace hopfcyc
