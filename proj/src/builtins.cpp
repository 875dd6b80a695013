#include "hopfcyc/builtins.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

//---------------------------------------------------------------------------
// Lie algebra data
//---------------------------------------------------------------------------

std::vector<Rat> LieAlgebra::bracket(int i, int j) const {
    std::vector<Rat> v(dim, Rat(0));
    if (i == j) return v;
    if (i < j) {
        for (auto& [k, x] : c[i][j]) v[k] += x;
    } else {
        for (auto& [k, x] : c[j][i]) v[k] -= x;
    }
    return v;
}

std::vector<Rat> LieAlgebra::bracket_vec(const std::vector<Rat>& x,
                                         const std::vector<Rat>& y) const {
    std::vector<Rat> v(dim, Rat(0));
    for (int i = 0; i < dim; ++i) {
        if (is_zero(x[i])) continue;
        for (int j = 0; j < dim; ++j) {
            if (is_zero(y[j])) continue;
            auto b = bracket(i, j);
            for (int k = 0; k < dim; ++k) v[k] += x[i] * y[j] * b[k];
        }
    }
    return v;
}

void LieAlgebra::validate() const {
    if (dim < 1) throw InvalidTable("Lie algebra must have dim >= 1");
    if ((int)c.size() != dim) throw InvalidTable("bracket table has wrong size");
    for (int i = 0; i < dim; ++i) {
        if ((int)c[i].size() != dim) throw InvalidTable("bracket table row has wrong size");
        for (int j = 0; j < dim; ++j)
            for (auto& [k, x] : c[i][j]) {
                (void)x;
                if (k < 0 || k >= dim) throw InvalidTable("bracket target index out of range");
            }
    }
    // Jacobi: [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0
    auto basis_vec = [&](int i) {
        std::vector<Rat> v(dim, Rat(0));
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                auto s = bracket_vec(bracket(i, j), basis_vec(k));
                auto t = bracket_vec(bracket(j, k), basis_vec(i));
                auto u = bracket_vec(bracket(k, i), basis_vec(j));
                for (int m = 0; m < dim; ++m)
                    if (!is_zero(s[m] + t[m] + u[m])) {
                        std::ostringstream os;
                        os << "Jacobi identity fails on triple (" << i << "," << j << "," << k
                           << ")";
                        throw JacobiFailure(os.str());
                    }
            }
}

LieAlgebra LieAlgebra::abelian(int dim) {
    LieAlgebra g;
    g.name = "abelian" + std::to_string(dim);
    g.dim = dim;
    g.c.assign(dim, std::vector<std::vector<std::pair<int, Rat>>>(dim));
    return g;
}

LieAlgebra LieAlgebra::heisenberg3() {
    LieAlgebra g = abelian(3);
    g.name = "heisenberg3";
    g.c[0][1] = {{2, Rat(1)}};  // [e1,e2] = e3
    return g;
}

LieAlgebra LieAlgebra::sl2() {
    // basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
    LieAlgebra g = abelian(3);
    g.name = "sl2";
    g.c[0][1] = {{2, Rat(1)}};
    g.c[0][2] = {{0, Rat(-2)}};  // [e,h] = -2e
    g.c[1][2] = {{1, Rat(2)}};   // [f,h] = 2f
    return g;
}

//---------------------------------------------------------------------------
// Group algebras
//---------------------------------------------------------------------------

namespace {

class GroupAlgebra final : public Hopf {
public:
    GroupAlgebra(std::string name, GroupData data) : Hopf(std::move(name)), g_(std::move(data)) {}

    int weight(const Key&) const override { return 0; }
    bool finite_dimensional() const override { return true; }

    std::vector<Key> basis(int) const override {
        std::vector<Key> keys;
        for (int i = 0; i < (int)g_.elements.size(); ++i) keys.push_back(Key{i});
        return keys;
    }

    Rat counit(const Key&) const override { return Rat(1); }
    Key unit() const override { return Key{g_.identity}; }

    std::optional<Key> grouplike_inverse(const Key& k) const override {
        return Key{g_.inverse[k[0]]};
    }

    const GroupData& data() const { return g_; }

protected:
    PairElem comul_raw(const Key& k) const override {
        return PairElem{{{k, k}, Rat(1)}};
    }
    Elem mul_raw(const Key& a, const Key& b) const override {
        return elem_of(Key{g_.table[a[0]][b[0]]});
    }
    Elem antipode_raw(const Key& k) const override { return elem_of(Key{g_.inverse[k[0]]}); }

private:
    GroupData g_;
};

}  // namespace

HopfPtr group_algebra(std::vector<std::string> elements, std::vector<std::vector<int>> table) {
    int n = (int)elements.size();
    if (n == 0) throw InvalidTable("group must be non-empty");
    if ((int)table.size() != n) throw InvalidTable("multiplication table has wrong row count");
    for (auto& row : table) {
        if ((int)row.size() != n) throw InvalidTable("multiplication table row has wrong size");
        for (int v : row)
            if (v < 0 || v >= n) throw InvalidTable("multiplication table entry out of range");
    }
    // identity
    int e = -1;
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j) ok = ok && table[i][j] == j && table[j][i] == j;
        if (ok) {
            e = i;
            break;
        }
    }
    if (e < 0) throw InvalidTable("group table has no identity element");
    // associativity
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]]) {
                    std::ostringstream os;
                    os << "associativity fails on triple (" << elements[i] << "," << elements[j]
                       << "," << elements[k] << ")";
                    throw InvalidTable(os.str());
                }
    // inverses
    GroupData d;
    d.elements = std::move(elements);
    d.table = std::move(table);
    d.identity = e;
    d.inverse.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (d.table[i][j] == e && d.table[j][i] == e) d.inverse[i] = j;
        if (d.inverse[i] < 0)
            throw InvalidTable("element " + d.elements[i] + " has no inverse");
    }
    std::string name = "group[" + std::to_string(n) + "]";
    return std::make_shared<GroupAlgebra>(name, std::move(d));
}

HopfPtr cyclic_group_algebra(int n) {
    if (n < 1) throw BadParameter("cyclic group order must be >= 1");
    std::vector<std::string> names;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    auto h = group_algebra(std::move(names), std::move(table));
    return std::make_shared<GroupAlgebra>("z" + std::to_string(n),
                                          static_cast<const GroupAlgebra&>(*h).data());
}

HopfPtr symmetric_group_s3() {
    // permutations of {0,1,2}, identity first
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto compose = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
        // (a*b)(x) = a(b(x))
        return std::array<int, 3>{a[b[0]], a[b[1]], a[b[2]]};
    };
    int n = (int)perms.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto p = compose(perms[i], perms[j]);
            table[i][j] = (int)(std::find(perms.begin(), perms.end(), p) - perms.begin());
        }
    std::vector<std::string> names = {"e", "r", "r2", "s", "sr", "sr2"};
    auto h = group_algebra(std::move(names), std::move(table));
    return std::make_shared<GroupAlgebra>("s3", static_cast<const GroupAlgebra&>(*h).data());
}

HopfPtr one_grouplike() {
    auto h = cyclic_group_algebra(1);
    GroupData d = static_cast<const GroupAlgebra&>(*h).data();
    d.elements = {"rho"};
    return std::make_shared<GroupAlgebra>("point", std::move(d));
}

const GroupData* group_data_of(const Hopf& h) {
    auto* g = dynamic_cast<const GroupAlgebra*>(&h);
    return g ? &g->data() : nullptr;
}

//---------------------------------------------------------------------------
// Enveloping algebras on the PBW basis (covers S(V) as U(abelian))
//---------------------------------------------------------------------------

namespace {

class Enveloping final : public Hopf {
public:
    Enveloping(std::string name, LieAlgebra g) : Hopf(std::move(name)), g_(std::move(g)) {
        g_.validate();
    }

    int weight(const Key& k) const override {
        return std::accumulate(k.begin(), k.end(), 0);
    }

    std::vector<Key> basis(int D) const override {
        std::vector<Key> out;
        Key cur(g_.dim, 0);
        enumerate(out, cur, 0, D);
        std::sort(out.begin(), out.end());
        return out;
    }

    Rat counit(const Key& k) const override { return weight(k) == 0 ? Rat(1) : Rat(0); }
    Key unit() const override { return Key(g_.dim, 0); }

    Rat character(const Character& chi, const Key& k) const override {
        if (chi.is_counit()) return counit(k);
        if ((int)chi.gen_values.size() != g_.dim)
            throw BadParameter("character '" + chi.name + "' has wrong arity for " + name());
        Rat v(1);
        for (int i = 0; i < g_.dim; ++i)
            for (int e = 0; e < k[i]; ++e) v *= chi.gen_values[i];
        return v;
    }

    const LieAlgebra& lie() const { return g_; }

    std::vector<Key> algebra_generators() const override {
        std::vector<Key> gens;
        for (int i = 0; i < g_.dim; ++i) {
            Key k(g_.dim, 0);
            k[i] = 1;
            gens.push_back(k);
        }
        return gens;
    }

protected:
    Elem mul_raw(const Key& a, const Key& b) const override {
        // fold right-multiplication by b's generator sequence
        Elem cur = elem_of(a);
        for (int j = 0; j < g_.dim; ++j)
            for (int rep = 0; rep < b[j]; ++rep) {
                Elem next;
                for (auto& [k, c] : cur) add_into(next, right_gen(k, j), c);
                cur.swap(next);
            }
        return cur;
    }

    PairElem comul_raw(const Key& k) const override {
        // Delta(e^a) = sum_{b <= a} prod binom(a_i, b_i) e^b x e^{a-b}
        PairElem out;
        Key b(g_.dim, 0);
        comul_rec(out, k, b, 0, Rat(1));
        return out;
    }

    Elem antipode_raw(const Key& k) const override {
        if (weight(k) == 0) return elem_of(k);
        int i = top_index(k);
        Key d = k;
        d[i] -= 1;
        // S(e^d e_i) = S(e_i) S(e^d) = -e_i S(e^d)
        Elem sd = antipode(d);
        Elem out;
        Key gen(g_.dim, 0);
        gen[i] = 1;
        for (auto& [kk, c] : sd) add_into(out, mul(gen, kk), -c);
        return out;
    }

private:
    void enumerate(std::vector<Key>& out, Key& cur, int pos, int left) const {
        if (pos == g_.dim) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = e;
            enumerate(out, cur, pos + 1, left - e);
        }
        cur[pos] = 0;
    }

    void comul_rec(PairElem& out, const Key& a, Key& b, int pos, Rat coeff) const {
        if (pos == g_.dim) {
            Key rest(g_.dim);
            for (int i = 0; i < g_.dim; ++i) rest[i] = a[i] - b[i];
            add_term(out, std::make_pair(b, rest), coeff);
            return;
        }
        Rat binom(1);
        for (int e = 0; e <= a[pos]; ++e) {
            if (e > 0) binom = binom * Rat(a[pos] - e + 1) / Rat(e);
            b[pos] = e;
            comul_rec(out, a, b, pos + 1, coeff * binom);
        }
        b[pos] = 0;
    }

    static int top_index(const Key& k) {
        for (int i = (int)k.size() - 1; i >= 0; --i)
            if (k[i] > 0) return i;
        return -1;
    }

    // e^c * e_j in the PBW basis (straightening); recursion goes through the
    // memoized public mul().
    Elem right_gen(const Key& c, int j) const {
        int i = top_index(c);
        if (i <= j) {
            Key r = c;
            r[j] += 1;
            return elem_of(r);
        }
        Key d = c;
        d[i] -= 1;
        Key gj(g_.dim, 0), gi(g_.dim, 0);
        gj[j] = 1;
        gi[i] = 1;
        // e^c e_j = (e^d e_j) e_i + e^d [e_i, e_j]
        Elem a = mul(d, gj);
        Elem out;
        for (auto& [k, x] : a) add_into(out, mul(k, gi), x);
        for (auto& [t, x] : g_.c[j][i]) {  // c[j][i] holds [e_j, e_i] for j < i
            Key gt(g_.dim, 0);
            gt[t] = 1;
            add_into(out, mul(d, gt), -x);  // [e_i, e_j] = -[e_j, e_i]
        }
        return out;
    }

    LieAlgebra g_;
};

}  // namespace

HopfPtr enveloping(const LieAlgebra& g) { return std::make_shared<Enveloping>("U(" + g.name + ")", g); }

HopfPtr symmetric_algebra(int dim) {
    if (dim < 1) throw BadParameter("symmetric algebra needs dim >= 1");
    return std::make_shared<Enveloping>("sv" + std::to_string(dim), LieAlgebra::abelian(dim));
}

const LieAlgebra* lie_data_of(const Hopf& h) {
    auto* e = dynamic_cast<const Enveloping*>(&h);
    return e ? &e->lie() : nullptr;
}

//---------------------------------------------------------------------------
// U_q(sl2), basis x^m y^k sigma^p with x = E, y = KF, sigma = K.
// Relations in this basis:
//   sigma x = q^2 x sigma,  sigma y = q^-2 y sigma,
//   y x = q^2 x y - (sigma^2 - 1)/(q - q^-1).
//---------------------------------------------------------------------------

namespace {

class UqSl2 final : public Hopf {
public:
    UqSl2(const Rat& q, int power_window) : Hopf("uqsl2"), data_{q, power_window} {
        if (q == 0 || q == 1 || q == -1)
            throw BadParameter("q must avoid 0 and the roots of unity +-1");
        if (power_window < 0) throw BadParameter("power window must be >= 0");
        c_ = Rat(1) / (q - Rat(1) / q);
    }

    int weight(const Key& k) const override { return k[0] + k[1]; }

    std::vector<Key> basis(int D) const override {
        std::vector<Key> out;
        for (int m = 0; m <= D; ++m)
            for (int k = 0; m + k <= D; ++k)
                for (int p = -data_.power_window; p <= data_.power_window; ++p)
                    out.push_back(Key{m, k, p});
        std::sort(out.begin(), out.end());
        return out;
    }

    Rat counit(const Key& k) const override {
        return (k[0] == 0 && k[1] == 0) ? Rat(1) : Rat(0);
    }
    Key unit() const override { return Key{0, 0, 0}; }

    std::optional<Key> grouplike_inverse(const Key& k) const override {
        if (k[0] == 0 && k[1] == 0) return Key{0, 0, -k[2]};
        return std::nullopt;
    }

    const UqData& data() const { return data_; }

    std::vector<Key> algebra_generators() const override {
        return {Key{1, 0, 0}, Key{0, 1, 0}, Key{0, 0, 1}, Key{0, 0, -1}};
    }

protected:
    Elem mul_raw(const Key& a, const Key& b) const override {
        Elem cur = elem_of(a);
        for (int rep = 0; rep < b[0]; ++rep) cur = apply(cur, [&](const Key& k) { return right_x(k); });
        for (int rep = 0; rep < b[1]; ++rep) cur = apply(cur, [&](const Key& k) { return right_y(k); });
        int s = b[2] >= 0 ? 1 : -1;
        for (int rep = 0; rep < std::abs(b[2]); ++rep)
            cur = apply(cur, [&](const Key& k) { return elem_of(Key{k[0], k[1], k[2] + s}); });
        return cur;
    }

    PairElem comul_raw(const Key& k) const override {
        // Delta(x) = 1 x x + x x sigma; Delta(y) = 1 x y + y x sigma;
        // Delta(sigma) = sigma x sigma.
        PairElem r{{{unit(), unit()}, Rat(1)}};
        PairElem dx{{{unit(), Key{1, 0, 0}}, Rat(1)}, {{Key{1, 0, 0}, Key{0, 0, 1}}, Rat(1)}};
        PairElem dy{{{unit(), Key{0, 1, 0}}, Rat(1)}, {{Key{0, 1, 0}, Key{0, 0, 1}}, Rat(1)}};
        for (int i = 0; i < k[0]; ++i) r = pair_mul(r, dx);
        for (int i = 0; i < k[1]; ++i) r = pair_mul(r, dy);
        if (k[2] != 0) {
            PairElem ds{{{Key{0, 0, k[2]}, Key{0, 0, k[2]}}, Rat(1)}};
            r = pair_mul(r, ds);
        }
        return r;
    }

    Elem antipode_raw(const Key& k) const override {
        // S(x) = -x sigma^-1, S(y) = -y sigma^-1, S(sigma) = sigma^-1,
        // extended anti-multiplicatively.
        Elem cur = elem_of(Key{0, 0, -k[2]});
        Elem sy = scaled(elem_of(Key{0, 1, -1}), Rat(-1));
        Elem sx = scaled(elem_of(Key{1, 0, -1}), Rat(-1));
        for (int i = 0; i < k[1]; ++i) cur = mul_elem(cur, sy);
        for (int i = 0; i < k[0]; ++i) cur = mul_elem(cur, sx);
        return cur;
    }

private:
    template <typename F>
    Elem apply(const Elem& e, F f) const {
        Elem out;
        for (auto& [k, c] : e) add_into(out, f(k), c);
        return out;
    }

    Rat qpow(long e) const {
        Rat r(1);
        for (long i = 0; i < std::abs(e); ++i) r *= data_.q;
        if (e < 0) return Rat(1) / r;
        return r;
    }

    Elem right_y(const Key& k) const {
        // (x^m y^k sigma^p) y = q^{-2p} x^m y^{k+1} sigma^p
        return scaled(elem_of(Key{k[0], k[1] + 1, k[2]}), qpow(-2L * k[2]));
    }

    // y^k x in the basis, memoized.
    const Elem& yk_x(int k) const {
        std::lock_guard<std::mutex> lock(rmu_);
        while ((int)yx_.size() <= k) {
            int n = (int)yx_.size();
            if (n == 0) {
                yx_.push_back(elem_of(Key{1, 0, 0}));
                continue;
            }
            // y^n x = q^2 (y^{n-1} x) y - c sigma^2 y^{n-1} + c y^{n-1}
            Elem t;
            for (auto& [kk, cc] : yx_[n - 1]) add_into(t, right_y(kk), cc * data_.q * data_.q);
            add_term(t, Key{0, n - 1, 2}, -c_);
            add_term(t, Key{0, n - 1, 0}, c_);
            yx_.push_back(std::move(t));
        }
        return yx_[k];
    }

    Elem right_x(const Key& k) const {
        // (x^m y^k sigma^p) x = q^{2p} x^m (y^k x) sigma^p
        Elem out;
        for (auto& [kk, cc] : yk_x(k[1]))
            add_term(out, Key{k[0] + kk[0], kk[1], kk[2] + k[2]}, cc * qpow(2L * k[2]));
        return out;
    }

    PairElem pair_mul(const PairElem& a, const PairElem& b) const {
        PairElem out;
        for (auto& [pa, ca] : a)
            for (auto& [pb, cb] : b) {
                Elem l = mul(pa.first, pb.first);
                Elem r = mul(pa.second, pb.second);
                for (auto& [kl, cl] : l)
                    for (auto& [kr, cr] : r)
                        add_term(out, std::make_pair(kl, kr), ca * cb * cl * cr);
            }
        return out;
    }

    UqData data_;
    Rat c_;  // 1/(q - q^-1)
    mutable std::mutex rmu_;
    mutable std::vector<Elem> yx_;
};

}  // namespace

HopfPtr uq_sl2(const Rat& q, int power_window) {
    return std::make_shared<UqSl2>(q, power_window);
}

const UqData* uq_data_of(const Hopf& h) {
    auto* u = dynamic_cast<const UqSl2*>(&h);
    return u ? &u->data() : nullptr;
}

//---------------------------------------------------------------------------
// Table-backed presentations
//---------------------------------------------------------------------------

namespace {

class TableHopf final : public Hopf {
public:
    explicit TableHopf(TableData d) : Hopf(d.name), t_(std::move(d)) {
        n_ = (int)t_.basis_names.size();
        if (n_ == 0) throw SchemaError("table presentation needs a non-empty basis");
        if (t_.weights.empty()) t_.weights.assign(n_, 0);
        auto arity = [&](const char* what, size_t got, size_t want) {
            if (got != want)
                throw SchemaError(std::string(what) + " table has wrong size in '" + name() + "'");
        };
        arity("weights", t_.weights.size(), n_);
        arity("mul", t_.mul.size(), n_);
        for (auto& row : t_.mul) arity("mul row", row.size(), n_);
        arity("comul", t_.comul.size(), n_);
        arity("counit", t_.counit.size(), n_);
        arity("antipode", t_.antipode.size(), n_);
        if (t_.unit < 0 || t_.unit >= n_) throw SchemaError("unit index out of range");
        auto check_idx = [&](int i) {
            if (i < 0 || i >= n_) throw SchemaError("basis index out of range in table");
        };
        for (auto& row : t_.mul)
            for (auto& cell : row)
                for (auto& [k, c] : cell) {
                    (void)c;
                    check_idx(k);
                }
        for (auto& cell : t_.comul)
            for (auto& [a, b, c] : cell) {
                (void)c;
                check_idx(a);
                check_idx(b);
            }
        for (auto& cell : t_.antipode)
            for (auto& [k, c] : cell) {
                (void)c;
                check_idx(k);
            }
        if (!t_.delta_values.empty()) arity("delta", t_.delta_values.size(), n_);
        if (t_.sigma >= n_) throw SchemaError("sigma index out of range");
    }

    int weight(const Key& k) const override { return t_.weights[k[0]]; }
    bool finite_dimensional() const override { return true; }

    std::vector<Key> basis(int) const override {
        std::vector<Key> keys;
        for (int i = 0; i < n_; ++i) keys.push_back(Key{i});
        return keys;
    }

    Rat counit(const Key& k) const override { return t_.counit[k[0]]; }
    Key unit() const override { return Key{t_.unit}; }

    Rat character(const Character& chi, const Key& k) const override {
        if (chi.is_counit()) return counit(k);
        if ((int)chi.gen_values.size() != n_)
            throw BadParameter("character '" + chi.name + "' has wrong arity for " + name());
        return chi.gen_values[k[0]];
    }

    const TableData& data() const { return t_; }

protected:
    PairElem comul_raw(const Key& k) const override {
        PairElem out;
        for (auto& [a, b, c] : t_.comul[k[0]]) add_term(out, std::make_pair(Key{a}, Key{b}), c);
        return out;
    }
    Elem mul_raw(const Key& a, const Key& b) const override {
        Elem out;
        for (auto& [k, c] : t_.mul[a[0]][b[0]]) add_term(out, Key{k}, c);
        return out;
    }
    Elem antipode_raw(const Key& k) const override {
        Elem out;
        for (auto& [kk, c] : t_.antipode[k[0]]) add_term(out, Key{kk}, c);
        return out;
    }

private:
    TableData t_;
    int n_ = 0;
};

}  // namespace

HopfPtr table_presentation(TableData data) { return std::make_shared<TableHopf>(std::move(data)); }

const TableData* table_data_of(const Hopf& h) {
    auto* t = dynamic_cast<const TableHopf*>(&h);
    return t ? &t->data() : nullptr;
}

TableData tabulate(const Hopf& h) {
    if (!h.finite_dimensional())
        throw BadParameter("only finite-dimensional presentations can be tabulated");
    TableData d;
    d.name = h.name();
    auto keys = h.basis(0);
    int n = (int)keys.size();
    std::map<Key, int> index;
    for (int i = 0; i < n; ++i) index[keys[i]] = i;
    auto idx = [&](const Key& k) {
        auto it = index.find(k);
        if (it == index.end()) throw TruncationEscape("tabulate: key outside basis " + key_str(k));
        return it->second;
    };
    d.basis_names.resize(n);
    const GroupData* g = group_data_of(h);
    const TableData* t = table_data_of(h);
    for (int i = 0; i < n; ++i) {
        if (g)
            d.basis_names[i] = g->elements[keys[i][0]];
        else if (t)
            d.basis_names[i] = t->basis_names[keys[i][0]];
        else
            d.basis_names[i] = "b" + std::to_string(i);
    }
    d.weights.resize(n);
    for (int i = 0; i < n; ++i) d.weights[i] = h.weight(keys[i]);
    d.unit = idx(h.unit());
    d.mul.assign(n, std::vector<std::vector<std::pair<int, Rat>>>(n));
    d.comul.resize(n);
    d.counit.resize(n);
    d.antipode.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            for (auto& [k, c] : h.mul(keys[i], keys[j])) d.mul[i][j].emplace_back(idx(k), c);
        for (auto& [pr, c] : h.comul(keys[i]))
            d.comul[i].emplace_back(idx(pr.first), idx(pr.second), c);
        d.counit[i] = h.counit(keys[i]);
        for (auto& [k, c] : h.antipode(keys[i])) d.antipode[i].emplace_back(idx(k), c);
    }
    return d;
}

HopfPtr make_builtin(const std::string& name, const Rat& q, int power_window) {
    if (name == "point") return one_grouplike();
    if (name == "s3") return symmetric_group_s3();
    if (name == "uqsl2") return uq_sl2(q, power_window);
    if (name.size() > 1 && name[0] == 'z') {
        int n = std::atoi(name.c_str() + 1);
        if (n >= 1) return cyclic_group_algebra(n);
    }
    if (name.size() > 2 && name.rfind("sv", 0) == 0) {
        int n = std::atoi(name.c_str() + 2);
        if (n >= 1) return symmetric_algebra(n);
    }
    if (name == "lie-abelian2") return enveloping(LieAlgebra::abelian(2));
    if (name == "lie-heisenberg3") return enveloping(LieAlgebra::heisenberg3());
    if (name == "lie-sl2") return enveloping(LieAlgebra::sl2());
    throw BadParameter("unknown builtin presentation '" + name + "'");
}

}  // namespace hopfcyc
