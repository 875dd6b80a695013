#include "hopfcyc/charmap.hpp"

#include <algorithm>

#include "hopfcyc/builtins.hpp"
#include "hopfcyc/errors.hpp"

namespace hopfcyc {

SparseVec HAlgebraAction::mul_vec(const SparseVec& a, const SparseVec& b) const {
    SparseVec r;
    for (auto& [i, x] : a)
        for (auto& [j, y] : b) sv_axpy(r, x * y, mul[i][j]);
    return r;
}

SparseMatrix HAlgebraAction::action_of(const Elem& h) const {
    SparseMatrix m(dimA, dimA);
    for (auto& [k, c] : h) m = m + action(k).scaled(c);
    return m;
}

HAlgebraAction conjugation_action(HopfPtr group) {
    const GroupData* g = group_data_of(*group);
    if (!g) throw BadParameter("conjugation_action expects a group algebra");
    HAlgebraAction a;
    a.H = group;
    a.dimA = (int)g->elements.size();
    a.unitA = g->identity;
    a.name = "conj(" + group->name() + ")";
    a.labels = g->elements;
    a.mul.assign(a.dimA, std::vector<SparseVec>(a.dimA));
    for (int i = 0; i < a.dimA; ++i)
        for (int j = 0; j < a.dimA; ++j) a.mul[i][j] = sv_unit(g->table[i][j]);
    const GroupData* gd = g;
    int n = a.dimA;
    a.action = [gd, n](const Key& k) {
        SparseMatrix m(n, n);
        int h = k[0], hi = gd->inverse[h];
        for (int j = 0; j < n; ++j) m.add(gd->table[gd->table[h][j]][hi], j, Rat(1));
        return m;
    };
    return a;
}

PolyAlgebra PolyAlgebra::make(std::vector<int> caps, int total_cap) {
    PolyAlgebra A;
    A.caps = std::move(caps);
    A.total_cap = total_cap;
    std::vector<int> cur(A.caps.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t pos, int deg) {
        if (pos == A.caps.size()) {
            A.mons.push_back(cur);
            return;
        }
        for (int e = 0; e < A.caps[pos]; ++e) {
            if (A.total_cap >= 0 && deg + e >= A.total_cap) break;
            cur[pos] = e;
            rec(pos + 1, deg + e);
        }
        cur[pos] = 0;
    };
    rec(0, 0);
    std::sort(A.mons.begin(), A.mons.end());
    for (int i = 0; i < A.dim(); ++i) A.index[A.mons[i]] = i;
    return A;
}

SparseVec PolyAlgebra::mul_mon(int i, int j) const {
    std::vector<int> s(caps.size());
    int deg = 0;
    for (size_t v = 0; v < caps.size(); ++v) {
        s[v] = mons[i][v] + mons[j][v];
        deg += s[v];
        if (s[v] >= caps[v]) return {};
    }
    if (total_cap >= 0 && deg >= total_cap) return {};
    return sv_unit(index.at(s));
}

SparseMatrix PolyAlgebra::euler(int i, int j) const {
    // u_i d/du_j on monomials; degree-preserving, so it descends iff every
    // image monomial is inside the ideal's complement
    SparseMatrix m(dim(), dim());
    for (int a = 0; a < dim(); ++a) {
        if (mons[a][j] == 0) continue;
        std::vector<int> t = mons[a];
        t[j] -= 1;
        t[i] += 1;
        auto it = index.find(t);
        if (it == index.end())
            throw BadParameter("euler derivation u_i d/du_j escapes the truncation ideal");
        m.add(it->second, a, Rat(mons[a][j]));
    }
    return m;
}

HAlgebraAction derivation_action(HopfPtr enveloping_h, const PolyAlgebra& A,
                                 std::vector<SparseMatrix> L) {
    const LieAlgebra* g = lie_data_of(*enveloping_h);
    if (!g) throw BadParameter("derivation_action expects an enveloping algebra");
    if ((int)L.size() != g->dim) throw BadParameter("one derivation per Lie basis vector");
    // the derivations must represent the brackets
    for (int i = 0; i < g->dim; ++i)
        for (int j = 0; j < g->dim; ++j) {
            SparseMatrix lhs = L[i] * L[j] - L[j] * L[i];
            SparseMatrix rhs(A.dim(), A.dim());
            auto br = g->bracket(i, j);
            for (int k = 0; k < g->dim; ++k)
                if (!is_zero(br[k])) rhs = rhs + L[k].scaled(br[k]);
            if (!(lhs == rhs))
                throw BadParameter("derivations do not represent the bracket [e" +
                                   std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "]");
        }
    HAlgebraAction a;
    a.H = enveloping_h;
    a.dimA = A.dim();
    a.unitA = A.index.at(std::vector<int>(A.caps.size(), 0));
    a.name = "derivations(" + enveloping_h->name() + ")";
    for (auto& m : A.mons) {
        std::string s = "u^(";
        for (size_t v = 0; v < m.size(); ++v) s += (v ? "," : "") + std::to_string(m[v]);
        a.labels.push_back(s + ")");
    }
    a.mul.assign(a.dimA, std::vector<SparseVec>(a.dimA));
    for (int i = 0; i < a.dimA; ++i)
        for (int j = 0; j < a.dimA; ++j) a.mul[i][j] = A.mul_mon(i, j);
    int dim = a.dimA;
    a.action = [L, dim](const Key& k) {
        SparseMatrix m = SparseMatrix::identity(dim);
        // PBW order: action(e^a) = L_1^{a_1} ... L_m^{a_m}
        for (size_t v = 0; v < k.size(); ++v)
            for (int e = 0; e < k[v]; ++e) m = m * L[v];
        return m;
    };
    return a;
}

void check_flat(const HAlgebraAction& act, int D) {
    const Hopf& H = *act.H;
    if (!(act.action(H.unit()) == SparseMatrix::identity(act.dimA)))
        throw NotFlat("unit does not act as identity on " + act.name);
    auto keys = H.basis(D);
    for (const Key& a : keys)
        for (const Key& b : keys)
            if (!(act.action(a) * act.action(b) == act.action_of(H.mul(a, b))))
                throw NotFlat("module law fails on " + act.name + " at " + key_str(a) + ", " +
                              key_str(b));
    for (const Key& h : keys) {
        SparseMatrix ah = act.action(h);
        for (int i = 0; i < act.dimA; ++i)
            for (int j = 0; j < act.dimA; ++j) {
                SparseVec lhs = ah.apply(act.mul[i][j]);
                SparseVec rhs;
                for (auto& [pq, c] : H.comul(h)) {
                    SparseVec t = act.mul_vec(act.action(pq.first).apply(sv_unit(i)),
                                              act.action(pq.second).apply(sv_unit(j)));
                    sv_axpy(rhs, c, t);
                }
                if (!(lhs == rhs))
                    throw NotFlat("flatness fails on " + act.name + " at h=" + key_str(h) +
                                  " a=" + act.labels[i] + " b=" + act.labels[j]);
            }
    }
}

void check_invariant_trace(const HAlgebraAction& act, const std::vector<Rat>& tau,
                           const Character& delta, int D) {
    if ((int)tau.size() != act.dimA) throw PreconditionFailure("trace has wrong arity");
    auto tr = [&](const SparseVec& v) {
        Rat s(0);
        for (auto& [i, c] : v) s += c * tau[i];
        return s;
    };
    for (int i = 0; i < act.dimA; ++i)
        for (int j = 0; j < act.dimA; ++j)
            if (tr(act.mul[i][j]) != tr(act.mul[j][i]))
                throw PreconditionFailure("tau is not a trace at " + act.labels[i] + ", " +
                                          act.labels[j]);
    for (const Key& h : act.H->basis(D)) {
        Rat dh = act.H->character(delta, h);
        for (int i = 0; i < act.dimA; ++i)
            if (tr(act.action(h).apply(sv_unit(i))) != dh * tau[i])
                throw PreconditionFailure("tau is not delta-invariant at h=" + key_str(h) +
                                          " a=" + act.labels[i]);
    }
}

Cochain Cochain::zero(int n, int dimA) {
    Cochain c;
    c.n = n;
    c.dimA = dimA;
    size_t sz = 1;
    for (int i = 0; i <= n; ++i) sz *= dimA;
    c.coef.assign(sz, Rat(0));
    return c;
}

static size_t flat_index(const std::vector<int>& idx, int dimA) {
    size_t f = 0;
    for (int i = (int)idx.size() - 1; i >= 0; --i) f = f * dimA + idx[i];
    return f;
}

Rat& Cochain::at(const std::vector<int>& idx) { return coef[flat_index(idx, dimA)]; }
const Rat& Cochain::at(const std::vector<int>& idx) const { return coef[flat_index(idx, dimA)]; }

bool Cochain::is_zero() const {
    for (auto& c : coef)
        if (!hopfcyc::is_zero(c)) return false;
    return true;
}

namespace {

// iterate all multi-indices of length len over [0, dimA)
template <typename F>
void for_each_index(int len, int dimA, F f) {
    std::vector<int> idx(len, 0);
    for (;;) {
        f(idx);
        int p = 0;
        while (p < len && ++idx[p] == dimA) idx[p++] = 0;
        if (p == len) return;
    }
}

}  // namespace

Cochain cochain_face(const HAlgebraAction& act, int i, const Cochain& phi) {
    int n = phi.n;
    Cochain out = Cochain::zero(n + 1, phi.dimA);
    for_each_index(n + 2, phi.dimA, [&](const std::vector<int>& a) {
        // d_i merges slots (i, i+1), wrapping for i = n+1
        SparseVec prod = (i <= n) ? act.mul[a[i]][a[i + 1]] : act.mul[a[n + 1]][a[0]];
        Rat s(0);
        for (auto& [k, c] : prod) {
            std::vector<int> b;
            if (i <= n) {
                for (int t = 0; t <= n + 1; ++t) {
                    if (t == i) {
                        b.push_back(k);
                        ++t;  // skip slot i+1
                    } else {
                        b.push_back(a[t]);
                    }
                }
            } else {
                b.push_back(k);
                for (int t = 1; t <= n; ++t) b.push_back(a[t]);
            }
            s += c * phi.at(b);
        }
        out.at(a) = s;
    });
    return out;
}

Cochain cochain_degeneracy(const HAlgebraAction& act, int i, const Cochain& phi) {
    int n = phi.n;
    Cochain out = Cochain::zero(n - 1, phi.dimA);
    for_each_index(n, phi.dimA, [&](const std::vector<int>& a) {
        // s_i inserts the unit after slot i
        std::vector<int> b;
        for (int t = 0; t < n; ++t) {
            b.push_back(a[t]);
            if (t == i) b.push_back(act.unitA);
        }
        out.at(a) = phi.at(b);
    });
    return out;
}

Cochain cochain_cyclic(const Cochain& phi) {
    int n = phi.n;
    Cochain out = Cochain::zero(n, phi.dimA);
    for_each_index(n + 1, phi.dimA, [&](const std::vector<int>& a) {
        // t phi (a_0,...,a_n) = phi(a_n, a_0, ..., a_{n-1})
        std::vector<int> b;
        b.push_back(a[n]);
        for (int t = 0; t < n; ++t) b.push_back(a[t]);
        out.at(a) = phi.at(b);
    });
    return out;
}

Cochain cochain_b(const HAlgebraAction& act, const Cochain& phi) {
    Cochain out = Cochain::zero(phi.n + 1, phi.dimA);
    Rat sign(1);
    for (int i = 0; i <= phi.n + 1; ++i) {
        Cochain f = cochain_face(act, i, phi);
        for (size_t t = 0; t < out.coef.size(); ++t) out.coef[t] += sign * f.coef[t];
        sign = -sign;
    }
    return out;
}

Cochain cochain_lambda(const Cochain& phi) {
    Cochain out = cochain_cyclic(phi);
    if (phi.n % 2)
        for (auto& c : out.coef) c = -c;
    return out;
}

bool cochain_b_closed(const HAlgebraAction& act, const Cochain& phi) {
    return cochain_b(act, phi).is_zero();
}

bool cochain_cyclic_invariant(const Cochain& phi) { return cochain_lambda(phi) == phi; }

Cochain char_map_tau(const HAlgebraAction& act, const std::vector<Rat>& tau,
                     const Character& delta, const Tensor& c, int n) {
    Cochain out = Cochain::zero(n, act.dimA);
    for (auto& [t, coeff] : c) {
        if ((int)t.size() != n) throw PreconditionFailure("level mismatch in char_map_tau input");
        for_each_index(n + 1, act.dimA, [&](const std::vector<int>& a) {
            SparseVec v = sv_unit(a[0]);
            for (int s = 1; s <= n; ++s)
                v = act.mul_vec(v, act.action(t[s - 1]).apply(sv_unit(a[s])));
            Rat val(0);
            for (auto& [i, x] : v) val += x * tau[i];
            out.at(a) += coeff * val;
        });
    }
    return out;
}

Cochain gamma_tau(const HAlgebraAction& act, const std::vector<Rat>& tau, const Tensor& c,
                  int n) {
    Cochain out = Cochain::zero(n, act.dimA);
    for (auto& [t, coeff] : c) {
        if ((int)t.size() != n + 1) throw PreconditionFailure("level mismatch in gamma_tau input");
        for_each_index(n + 1, act.dimA, [&](const std::vector<int>& a) {
            SparseVec v = act.action(t[0]).apply(sv_unit(a[0]));
            for (int s = 1; s <= n; ++s)
                v = act.mul_vec(v, act.action(t[s]).apply(sv_unit(a[s])));
            Rat val(0);
            for (auto& [i, x] : v) val += x * tau[i];
            out.at(a) += coeff * val;
        });
    }
    return out;
}

namespace {

SparseMatrix cochain_to_matrix_col(const Cochain& c, SparseMatrix& m, int col) {
    for (size_t i = 0; i < c.coef.size(); ++i)
        if (!is_zero(c.coef[i])) m.add((int)i, col, c.coef[i]);
    return m;
}

}  // namespace

SparseMatrix char_map_matrix(const HAlgebraAction& act, const std::vector<Rat>& tau,
                             const Character& delta, const CocyclicModule& M, int n) {
    const auto& basis = M.level_basis(n);
    size_t rows = 1;
    for (int i = 0; i <= n; ++i) rows *= act.dimA;
    SparseMatrix m((int)rows, (int)basis.size());
    for (int j = 0; j < (int)basis.size(); ++j) {
        Cochain c = char_map_tau(act, tau, delta, tensor_of(basis[j]), n);
        cochain_to_matrix_col(c, m, j);
    }
    return m;
}

SparseMatrix gamma_matrix(const HAlgebraAction& act, const std::vector<Rat>& tau,
                          const CocyclicModule& M, int n) {
    const auto& basis = M.level_basis(n);
    size_t rows = 1;
    for (int i = 0; i <= n; ++i) rows *= act.dimA;
    SparseMatrix m((int)rows, (int)basis.size());
    for (int j = 0; j < (int)basis.size(); ++j) {
        Cochain c = gamma_tau(act, tau, tensor_of(basis[j]), n);
        cochain_to_matrix_col(c, m, j);
    }
    return m;
}

namespace {

SparseMatrix cochain_op_matrix(int rows_len, int cols_len, int dimA,
                               const std::function<Cochain(const Cochain&)>& op) {
    size_t rows = 1, cols = 1;
    for (int i = 0; i < rows_len; ++i) rows *= dimA;
    for (int i = 0; i < cols_len; ++i) cols *= dimA;
    SparseMatrix m((int)rows, (int)cols);
    for (size_t j = 0; j < cols; ++j) {
        Cochain e = Cochain::zero(cols_len - 1, dimA);
        e.coef[j] = Rat(1);
        Cochain img = op(e);
        for (size_t i = 0; i < img.coef.size(); ++i)
            if (!is_zero(img.coef[i])) m.add((int)i, (int)j, img.coef[i]);
    }
    return m;
}

}  // namespace

SparseMatrix cochain_face_matrix(const HAlgebraAction& act, int n, int i) {
    return cochain_op_matrix(n + 2, n + 1, act.dimA,
                             [&](const Cochain& c) { return cochain_face(act, i, c); });
}

SparseMatrix cochain_degeneracy_matrix(const HAlgebraAction& act, int n, int i) {
    return cochain_op_matrix(n, n + 1, act.dimA,
                             [&](const Cochain& c) { return cochain_degeneracy(act, i, c); });
}

SparseMatrix cochain_cyclic_matrix(const HAlgebraAction& act, int n) {
    return cochain_op_matrix(n + 1, n + 1, act.dimA,
                             [&](const Cochain& c) { return cochain_cyclic(c); });
}

Cochain lie_char_map(const HAlgebraAction& act, const std::vector<Rat>& tau, const LieAlgebra& g,
                     const std::vector<Rat>& delta, const std::vector<int>& wedge) {
    // tau must be invariant: tau(L_v a) = delta(v) tau(a) on generators
    for (int v = 0; v < g.dim; ++v) {
        Key k(g.dim, 0);
        k[v] = 1;
        SparseMatrix Lv = act.action(k);
        for (int i = 0; i < act.dimA; ++i) {
            Rat s(0);
            for (auto& [r, c] : Lv.col(i)) s += c * tau[r];
            Rat expect = delta.empty() ? Rat(0) : delta[v] * tau[i];
            if (s != expect)
                throw PreconditionFailure("tau is not invariant under the Lie action");
        }
    }
    int n = (int)wedge.size();
    Cochain out = Cochain::zero(n, act.dimA);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Rat fact(1);
    for (int i = 2; i <= n; ++i) fact *= i;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Rat sgn = (inv % 2 ? Rat(-1) : Rat(1)) / fact;
        for_each_index(n + 1, act.dimA, [&](const std::vector<int>& a) {
            SparseVec v = sv_unit(a[0]);
            for (int s = 1; s <= n; ++s) {
                Key k(g.dim, 0);
                k[wedge[perm[s - 1]]] = 1;
                v = act.mul_vec(v, act.action(k).apply(sv_unit(a[s])));
            }
            Rat val(0);
            for (auto& [i, x] : v) val += x * tau[i];
            out.at(a) += sgn * val;
        });
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace hopfcyc
