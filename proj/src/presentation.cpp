#include "hopfcyc/presentation.hpp"

#include <algorithm>

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

PairElem Coalgebra::comul(const Key& k) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = comul_cache_.find(k);
        if (it != comul_cache_.end()) return it->second;
    }
    PairElem v = comul_raw(k);
    std::lock_guard<std::mutex> lock(mu_);
    return comul_cache_.emplace(k, std::move(v)).first->second;
}

PairElem Coalgebra::comul_elem(const Elem& x) const {
    PairElem r;
    for (auto& [k, c] : x) add_into(r, comul(k), c);
    return r;
}

Tensor Coalgebra::iterated_comul(const Key& k, int nlegs) const {
    if (nlegs == 0) return Tensor{{TupleKey{}, counit(k)}};
    if (nlegs == 1) return tensor_of(TupleKey{k});
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = itcomul_cache_.find({k, nlegs});
        if (it != itcomul_cache_.end()) return it->second;
    }
    // expand the last leg: Delta^{(n-1)} = (1 x ... x Delta) Delta^{(n-2)}
    Tensor prev = iterated_comul(k, nlegs - 1);
    Tensor out;
    for (auto& [t, c] : prev) {
        const Key& last = t.back();
        for (auto& [pq, d] : comul(last)) {
            TupleKey nt(t.begin(), t.end() - 1);
            nt.push_back(pq.first);
            nt.push_back(pq.second);
            add_term(out, nt, c * d);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return itcomul_cache_.emplace(std::make_pair(k, nlegs), std::move(out)).first->second;
}

Tensor Coalgebra::iterated_comul_elem(const Elem& x, int nlegs) const {
    Tensor r;
    for (auto& [k, c] : x) add_into(r, iterated_comul(k, nlegs), c);
    return r;
}

int Coalgebra::weight(const TupleKey& t) const {
    int w = 0;
    for (auto& k : t) w += weight(k);
    return w;
}

void Coalgebra::check_coalgebra_axioms(int D) const {
    for (const Key& k : basis(D)) {
        int wk = weight(k);
        // coassociativity: expand left leg vs right leg
        Tensor left, right;
        for (auto& [pq, c] : comul(k)) {
            for (auto& [rs, d] : comul(pq.first))
                add_term(left, TupleKey{rs.first, rs.second, pq.second}, c * d);
            for (auto& [rs, d] : comul(pq.second))
                add_term(right, TupleKey{pq.first, rs.first, rs.second}, c * d);
        }
        if (left != right)
            throw IdentityFailure("coassociativity fails at key " + key_str(k));
        // counit law (Eq. (1)), both sides
        Elem l, r;
        for (auto& [pq, c] : comul(k)) {
            add_term(l, pq.second, c * counit(pq.first));
            add_term(r, pq.first, c * counit(pq.second));
            if (weight(pq.first) + weight(pq.second) > wk)
                throw IdentityFailure("comultiplication raises weight at key " + key_str(k));
        }
        if (l != elem_of(k) || r != elem_of(k))
            throw IdentityFailure("counit law fails at key " + key_str(k));
    }
}

Elem Hopf::mul(const Key& a, const Key& b) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = mul_cache_.find({a, b});
        if (it != mul_cache_.end()) return it->second;
    }
    Elem v = mul_raw(a, b);
    std::lock_guard<std::mutex> lock(mu_);
    return mul_cache_.emplace(std::make_pair(a, b), std::move(v)).first->second;
}

Elem Hopf::antipode(const Key& k) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = antipode_cache_.find(k);
        if (it != antipode_cache_.end()) return it->second;
    }
    Elem v = antipode_raw(k);
    std::lock_guard<std::mutex> lock(mu_);
    return antipode_cache_.emplace(k, std::move(v)).first->second;
}

Rat Hopf::character(const Character& chi, const Key& k) const {
    if (chi.is_counit()) return counit(k);
    throw BadParameter("presentation '" + name() + "' only supports the counit character");
}

Elem Hopf::mul_elem(const Elem& a, const Elem& b) const {
    Elem r;
    for (auto& [ka, ca] : a)
        for (auto& [kb, cb] : b) add_into(r, mul(ka, kb), ca * cb);
    return r;
}

Elem Hopf::power(const Elem& a, int n) const {
    Elem r = a;
    for (int i = 1; i < n; ++i) r = mul_elem(r, a);
    return r;
}

Elem Hopf::antipode_elem(const Elem& x) const {
    Elem r;
    for (auto& [k, c] : x) add_into(r, antipode(k), c);
    return r;
}

Rat Hopf::character_elem(const Character& chi, const Elem& x) const {
    Rat s(0);
    for (auto& [k, c] : x) s += c * character(chi, k);
    return s;
}

Elem Hopf::twisted_antipode(const Character& delta, const Key& k) const {
    Elem r;
    for (auto& [pq, c] : comul(k)) add_into(r, antipode(pq.second), c * character(delta, pq.first));
    return r;
}

Elem Hopf::twisted_antipode_elem(const Character& delta, const Elem& x) const {
    Elem r;
    for (auto& [k, c] : x) add_into(r, twisted_antipode(delta, k), c);
    return r;
}

Tensor Hopf::act_diagonal(const Elem& h, const TupleKey& x) const {
    int n = (int)x.size();
    Tensor out;
    Tensor legs = iterated_comul_elem(h, n);
    if (n == 0) {
        // action on scalars through the counit
        for (auto& [t, c] : legs) add_term(out, TupleKey{}, c);
        return out;
    }
    for (auto& [t, c] : legs) {
        // slotwise products, expanded to tuple keys
        std::vector<Elem> slot(n);
        for (int i = 0; i < n; ++i) slot[i] = mul(t[i], x[i]);
        Tensor acc = tensor_of(TupleKey{});
        for (int i = 0; i < n; ++i) {
            Tensor next;
            for (auto& [tk, tc] : acc)
                for (auto& [k, kc] : slot[i]) {
                    TupleKey nt = tk;
                    nt.push_back(k);
                    add_term(next, nt, tc * kc);
                }
            acc.swap(next);
        }
        add_into(out, acc, c);
    }
    return out;
}

Tensor Hopf::act_diagonal(const Elem& h, const Tensor& x) const {
    Tensor r;
    for (auto& [t, c] : x) add_into(r, act_diagonal(h, t), c);
    return r;
}

bool Hopf::is_grouplike(const Key& k) const {
    return comul(k) == PairElem{{{k, k}, Rat(1)}} && counit(k) == 1;
}

std::optional<Key> Hopf::grouplike_inverse(const Key& k) const {
    if (k == unit()) return unit();
    return std::nullopt;
}

std::vector<Key> Hopf::algebra_generators() const {
    if (!finite_dimensional())
        throw Error("presentation '" + name() + "' must override algebra_generators");
    std::vector<Key> gens;
    for (const Key& k : basis(0))
        if (!(k == unit())) gens.push_back(k);
    return gens;
}

void Hopf::check_hopf_axioms(int D) const {
    check_coalgebra_axioms(D);
    const Key one = unit();
    if (counit(one) != 1) throw IdentityFailure("counit(1) != 1");
    if (!is_grouplike(one)) throw IdentityFailure("unit is not group-like");
    if (antipode(one) != elem_of(one)) throw IdentityFailure("S(1) != 1 (Eq. (3))");
    auto keys = basis(D);
    for (const Key& k : keys) {
        int wk = weight(k);
        // unit laws
        if (mul(one, k) != elem_of(k) || mul(k, one) != elem_of(k))
            throw IdentityFailure("unit law fails at key " + key_str(k));
        // antipode law (Eq. (2)), both sides
        Elem l, r;
        for (auto& [pq, c] : comul(k)) {
            add_into(l, mul_elem(antipode(pq.first), elem_of(pq.second)), c);
            add_into(r, mul_elem(elem_of(pq.first), antipode(pq.second)), c);
        }
        Elem eps1 = scaled(elem_of(one), counit(k));
        if (l != eps1 || r != eps1)
            throw IdentityFailure("antipode law (Eq. (2)) fails at key " + key_str(k));
        // eps(S(h)) = eps(h) (Eq. (3))
        Rat es(0);
        for (auto& [kk, c] : antipode(k)) es += c * counit(kk);
        if (es != counit(k)) throw IdentityFailure("eps.S != eps at key " + key_str(k));
        // Delta S(h) = sum S(h1) x S(h0) (Eq. (5))
        PairElem lhs = comul_elem(antipode(k));
        PairElem rhs;
        for (auto& [pq, c] : comul(k))
            for (auto& [ka, ca] : antipode(pq.second))
                for (auto& [kb, cb] : antipode(pq.first))
                    add_term(rhs, std::make_pair(ka, kb), c * ca * cb);
        if (lhs != rhs)
            throw IdentityFailure("anti-cocommutation of Delta.S (Eq. (5)) fails at key " +
                                  key_str(k));
        // weight monotonicity of S
        for (auto& [kk, c] : antipode(k))
            if (weight(kk) > wk)
                throw IdentityFailure("antipode raises weight at key " + key_str(k));
    }
    // S(gh) = S(h)S(g) (Eq. (4)) and weight monotonicity of mul
    for (const Key& a : keys)
        for (const Key& b : keys) {
            Elem lhs = antipode_elem(mul(a, b));
            Elem rhs = mul_elem(antipode(b), antipode(a));
            if (lhs != rhs)
                throw IdentityFailure("anti-homomorphism (Eq. (4)) fails at pair " + key_str(a) +
                                      ", " + key_str(b));
            for (auto& [kk, c] : mul(a, b))
                if (weight(kk) > weight(a) + weight(b))
                    throw IdentityFailure("multiplication raises weight at pair " + key_str(a) +
                                          ", " + key_str(b));
        }
}

void Hopf::check_character(const Character& delta, int D) const {
    if (character(delta, unit()) != 1) throw IdentityFailure("delta(1) != 1");
    auto keys = basis(D);
    for (const Key& a : keys)
        for (const Key& b : keys) {
            Rat lhs = character_elem(delta, mul(a, b));
            if (lhs != character(delta, a) * character(delta, b))
                throw IdentityFailure("character is not an algebra map at pair " + key_str(a) +
                                      ", " + key_str(b));
        }
}

IdentityReport check_twisted_identities(const Hopf& H, const Character& delta, int D,
                                        bool throw_on_failure) {
    IdentityReport rep;
    const Key one = H.unit();
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
        if (throw_on_failure) throw IdentityFailure(msg);
    };
    auto keys = H.basis(D);
    for (const Key& k : keys) {
        ++rep.keys_checked;
        Rat dk = H.character(delta, k);
        // (7): sum S_delta(h0) h1 = delta(h) 1
        Elem e7;
        for (auto& [pq, c] : H.comul(k))
            add_into(e7, H.mul_elem(H.twisted_antipode(delta, pq.first), elem_of(pq.second)), c);
        if (e7 != scaled(elem_of(one), dk)) fail("(7) fails at key " + key_str(k));
        // (8): S_delta(1) = 1 and eps(S_delta(h)) = delta(h)
        if (H.twisted_antipode(delta, one) != elem_of(one)) fail("(8) S_delta(1) != 1");
        Rat eS(0);
        for (auto& [kk, c] : H.twisted_antipode(delta, k)) eS += c * H.counit(kk);
        if (eS != dk) fail("(8) eps.S_delta != delta at key " + key_str(k));
        // (9): Delta S_delta(h) = sum S(h1) x S_delta(h0)
        PairElem lhs = H.comul_elem(H.twisted_antipode(delta, k));
        PairElem rhs;
        for (auto& [pq, c] : H.comul(k))
            for (auto& [ka, ca] : H.antipode(pq.second))
                for (auto& [kb, cb] : H.twisted_antipode(delta, pq.first))
                    add_term(rhs, std::make_pair(ka, kb), c * ca * cb);
        if (lhs != rhs) fail("(9) fails at key " + key_str(k));
        // (11): sum S^2(h1) S_delta(h0) = delta(h) 1
        Elem e11;
        for (auto& [pq, c] : H.comul(k))
            add_into(e11,
                     H.mul_elem(H.antipode_elem(H.antipode_elem(elem_of(pq.second))),
                                H.twisted_antipode(delta, pq.first)),
                     c);
        if (e11 != scaled(elem_of(one), dk)) fail("(11) fails at key " + key_str(k));
    }
    // (10): S_delta(gh) = S_delta(h) S_delta(g) on key pairs
    for (const Key& a : keys)
        for (const Key& b : keys) {
            Elem lhs = H.twisted_antipode_elem(delta, H.mul(a, b));
            Elem rhs = H.mul_elem(H.twisted_antipode(delta, b), H.twisted_antipode(delta, a));
            if (lhs != rhs) fail("(10) fails at pair " + key_str(a) + ", " + key_str(b));
        }
    return rep;
}

InvolutiveReport check_involutive(const Hopf& H, const Character& delta, int D) {
    InvolutiveReport rep;
    const Key one = H.unit();
    bool all_i = true, all_ii = true;
    for (const Key& k : H.basis(D)) {
        bool i1 = H.twisted_antipode_elem(delta, H.twisted_antipode(delta, k)) == elem_of(k);
        // (ii): sum S_delta(h1) h0 = delta(h) 1
        Elem e;
        for (auto& [pq, c] : H.comul(k))
            add_into(e, H.mul_elem(H.twisted_antipode(delta, pq.second), elem_of(pq.first)), c);
        bool i2 = e == scaled(elem_of(one), H.character(delta, k));
        all_i = all_i && i1;
        all_ii = all_ii && i2;
        if (!i1) rep.witnesses.push_back(key_str(k));
    }
    // The lemma equates the two conditions quantified over all of H, so the
    // verdicts must agree even though single keys may differ.
    if (all_i != all_ii)
        throw EquivalenceBroken("S_delta^2=Id and the convolution identity disagree on the window");
    rep.holds = all_i;
    return rep;
}

void check_modular_pair(const Hopf& H, const Character& delta, const Key& sigma, int D) {
    if (!H.is_grouplike(sigma)) throw NotGroupLike("sigma " + key_str(sigma) + " is not group-like");
    auto inv = H.grouplike_inverse(sigma);
    if (!inv) throw NotGroupLike("sigma " + key_str(sigma) + " has no known inverse");
    if (H.mul(sigma, *inv) != elem_of(H.unit()) || H.mul(*inv, sigma) != elem_of(H.unit()))
        throw NotGroupLike("sigma inverse check failed for " + key_str(sigma));
    if (H.character(delta, sigma) != 1)
        throw NotModular("delta(sigma) != 1 for sigma " + key_str(sigma));
    for (const Key& k : H.basis(D)) {
        Elem lhs = H.twisted_antipode_elem(delta, H.twisted_antipode(delta, k));
        Elem rhs = H.mul_elem(H.mul(sigma, k), elem_of(*inv));
        if (lhs != rhs)
            throw NotModular("S_delta^2(h) != sigma h sigma^{-1} at key " + key_str(k));
    }
}

}  // namespace hopfcyc
