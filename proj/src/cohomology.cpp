#include "hopfcyc/cohomology.hpp"

#include <algorithm>
#include <set>

#include "hopfcyc/builtins.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/parallel.hpp"

namespace hopfcyc {

namespace {

bool faces_weight_homogeneous(const CocyclicModule& M, int n_max) {
    const Coalgebra& C = M.coalgebra();
    for (int n = 0; n <= n_max; ++n)
        for (const TupleKey& t : M.level_basis(n)) {
            int w = C.weight(t);
            for (int i = 0; i <= n + 1; ++i)
                for (auto& [tt, c] : M.face(n, i, t)) {
                    (void)c;
                    if (C.weight(tt) != w) return false;
                }
        }
    return true;
}

// index subset of a level basis with exact weight w
std::vector<int> weight_block(const CocyclicModule& M, int n, int w) {
    const auto& basis = M.level_basis(n);
    std::vector<int> idx;
    for (int i = 0; i < (int)basis.size(); ++i)
        if (M.coalgebra().weight(basis[i]) == w) idx.push_back(i);
    return idx;
}

// restriction of f to the given row/column subsets; throws if f leaks
// outside the row block (i.e. is not homogeneous after all)
SparseMatrix restrict_matrix(const SparseMatrix& f, const std::vector<int>& rows,
                             const std::vector<int>& cols) {
    std::map<int, int> rpos;
    for (int i = 0; i < (int)rows.size(); ++i) rpos[rows[i]] = i;
    SparseMatrix m((int)rows.size(), (int)cols.size());
    for (int j = 0; j < (int)cols.size(); ++j) {
        for (auto& [r, v] : f.col(cols[j])) {
            auto it = rpos.find(r);
            if (it == rpos.end())
                throw IdentityFailure("weight-block restriction: map is not homogeneous");
            m.add(it->second, j, v);
        }
    }
    return m;
}

}  // namespace

CohomologyReport hochschild(const CocyclicModule& M, int n_max) {
    CohomologyReport rep;
    rep.kind = "hochschild";
    rep.object = M.description();
    rep.param("D", std::to_string(M.D()));
    rep.param("n_max", std::to_string(n_max));
    bool graded = faces_weight_homogeneous(M, n_max);
    rep.exactness = graded ? "graded-exact" : "filtered";
    if (!graded) {
        rep.dims = hochschild_dims_unsplit(M, n_max);
        return rep;
    }
    std::vector<SparseMatrix> b;
    for (int n = 0; n <= n_max; ++n) b.push_back(M.b_matrix(n));
    std::set<int> weights;
    for (int n = 0; n <= n_max + 1; ++n)
        for (const TupleKey& t : M.level_basis(n)) weights.insert(M.coalgebra().weight(t));
    for (int n = 0; n <= n_max; ++n) {
        int total = 0;
        for (int w : weights) {
            auto rows_out = weight_block(M, n + 1, w);
            auto here = weight_block(M, n, w);
            if (here.empty()) continue;
            SparseMatrix d_out = restrict_matrix(b[n], rows_out, here);
            SparseMatrix d_in(0, 0);
            if (n == 0) {
                d_in = SparseMatrix((int)here.size(), 0);
            } else {
                auto below = weight_block(M, n - 1, w);
                d_in = restrict_matrix(b[n - 1], here, below);
            }
            int h = cohomology_dim(ComplexSlice{d_in, d_out});
            if (h) {
                rep.per_weight[n][w] = h;
                total += h;
            }
        }
        rep.dims[n] = total;
    }
    return rep;
}

std::map<int, int> hochschild_dims_unsplit(const CocyclicModule& M, int n_max) {
    std::map<int, int> dims;
    SparseMatrix prev(M.level_dim(0), 0);
    for (int n = 0; n <= n_max; ++n) {
        SparseMatrix out = M.b_matrix(n);
        dims[n] = cohomology_dim(ComplexSlice{prev, out});
        prev = out;
    }
    return dims;
}

namespace {

// First-quadrant cyclic bicomplex with P columns; columns alternate the b
// and -b' differentials, rows alternate 1-lambda and N.
struct Bicomplex {
    const CocyclicModule& M;
    int P, qmax;
    std::vector<SparseMatrix> b, bp, lam, norm;
    std::vector<int> ldim;

    Bicomplex(const CocyclicModule& m, int n_max) : M(m), P(n_max + 2), qmax(n_max + 1) {
        for (int q = 0; q <= qmax + 1; ++q) M.level_basis(q);  // sequential warm-up
        for (int q = 0; q <= qmax; ++q) ldim.push_back(M.level_dim(q));
        ldim.push_back(M.level_dim(qmax + 1));
        b.resize(qmax + 1);
        bp.resize(qmax + 1);
        lam.resize(qmax + 1);
        norm.resize(qmax + 1);
        // level blocks are independent jobs; results merge by index
        parallel_for(qmax + 1, [&](int q) {
            b[q] = M.b_matrix(q);
            bp[q] = M.bprime_matrix(q);
            lam[q] = M.lambda_matrix(q);
            norm[q] = M.norm_matrix(q);
        });
    }

    std::vector<std::pair<int, int>> cells(int m) const {  // (p, q), p ascending
        std::vector<std::pair<int, int>> cs;
        for (int p = 0; p <= std::min(P - 1, m); ++p) cs.emplace_back(p, m - p);
        return cs;
    }

    int dim(int m) const {
        int d = 0;
        for (auto& [p, q] : cells(m)) {
            (void)p;
            d += ldim[q];
        }
        return d;
    }

    std::vector<int> offsets(int m) const {
        std::vector<int> off;
        int d = 0;
        for (auto& [p, q] : cells(m)) {
            (void)p;
            off.push_back(d);
            d += ldim[q];
        }
        return off;
    }

    int cell_index(int m, int p) const {
        auto cs = cells(m);
        for (int i = 0; i < (int)cs.size(); ++i)
            if (cs[i].first == p) return i;
        return -1;
    }

    void add_block(SparseMatrix& D, int roff, int coff, const SparseMatrix& blk,
                   const Rat& s = Rat(1)) const {
        for (int j = 0; j < blk.cols(); ++j)
            for (auto& [r, v] : blk.col(j)) D.add(roff + r, coff + j, s * v);
    }

    SparseMatrix D(int m) const {  // Tot^m -> Tot^{m+1}
        if (m < 0) return SparseMatrix(dim(0), 0);
        SparseMatrix out(dim(m + 1), dim(m));
        auto src = cells(m);
        auto soff = offsets(m);
        auto toff = offsets(m + 1);
        for (int i = 0; i < (int)src.size(); ++i) {
            auto [p, q] = src[i];
            // vertical
            int tv = cell_index(m + 1, p);
            if (tv >= 0) {
                if (p % 2 == 0)
                    add_block(out, toff[tv], soff[i], b[q]);
                else
                    add_block(out, toff[tv], soff[i], bp[q], Rat(-1));
            }
            // horizontal
            int th = cell_index(m + 1, p + 1);
            if (th >= 0) {
                if (p % 2 == 0) {
                    add_block(out, toff[th], soff[i], SparseMatrix::identity(ldim[q]));
                    add_block(out, toff[th], soff[i], lam[q], Rat(-1));
                } else {
                    add_block(out, toff[th], soff[i], norm[q]);
                }
            }
        }
        return out;
    }

    SparseMatrix shift(int m) const {  // Tot^m -> Tot^{m+2}, two-column shift
        SparseMatrix out(dim(m + 2), dim(m));
        auto src = cells(m);
        auto soff = offsets(m);
        auto toff = offsets(m + 2);
        for (int i = 0; i < (int)src.size(); ++i) {
            auto [p, q] = src[i];
            int t = cell_index(m + 2, p + 2);
            if (t >= 0) add_block(out, toff[t], soff[i], SparseMatrix::identity(ldim[q]));
        }
        return out;
    }
};

}  // namespace

CyclicOutcome cyclic_and_periodic(const CocyclicModule& M, int n_max) {
    CyclicOutcome out;
    CohomologyReport& rep = out.report;
    rep.kind = "cyclic";
    rep.object = M.description();
    rep.param("D", std::to_string(M.D()));
    rep.param("n_max", std::to_string(n_max));
    rep.param("columns", std::to_string(n_max + 2));
    rep.exactness = M.weight_graded(std::min(n_max + 1, 2)) ? "graded-exact" : "filtered";

    Bicomplex bc(M, n_max);
    std::vector<SparseMatrix> D;
    for (int m = 0; m <= n_max; ++m) D.push_back(bc.D(m));

    for (int m = 0; m <= n_max; ++m) {
        SparseMatrix d_in = (m == 0) ? SparseMatrix(bc.dim(0), 0) : D[m - 1];
        int h = cohomology_dim(ComplexSlice{d_in, D[m]});
        out.hc_dims.push_back(h);
        rep.dims[m] = h;
    }

    // induced S on cohomology for m <= n_max - 2
    std::vector<CohomologySpace> spaces;
    for (int m = 0; m <= n_max; ++m) {
        SparseMatrix d_in = (m == 0) ? SparseMatrix(bc.dim(0), 0) : D[m - 1];
        spaces.push_back(cohomology_space(ComplexSlice{d_in, D[m]}));
    }
    for (int m = 0; m + 2 <= n_max; ++m) {
        SparseMatrix sh = bc.shift(m);
        // shift must be a chain map into the truncated bicomplex
        if (!(D[m + 2] * sh == bc.shift(m + 1) * D[m]))
            throw ChainMapFailure("column shift fails to commute with the total differential");
        SparseMatrix ind = induced_on_cohomology(sh, spaces[m], spaces[m + 2]);
        out.s_matrices.push_back(ind);
        CohomologyReport::SInfo si;
        si.degree = m;
        si.dim_from = spaces[m].dim();
        si.dim_to = spaces[m + 2].dim();
        si.rank = rank(ind);
        si.bijective = (si.rank == si.dim_from && si.rank == si.dim_to);
        rep.s_info.push_back(si);
    }

    // periodic window: top degrees per parity plus S-stability onto them
    if (n_max >= 2) {
        CohomologyReport::HPWindow hp;
        hp.even_degree = n_max - (n_max % 2);
        hp.odd_degree = n_max - ((n_max + 1) % 2);
        hp.even_dim = out.hc_dims[hp.even_degree];
        hp.odd_dim = out.hc_dims[hp.odd_degree];
        auto bij = [&](int deg) {
            for (auto& si : rep.s_info)
                if (si.degree == deg) return si.bijective;
            return false;
        };
        hp.even_stable = hp.even_degree >= 2 && bij(hp.even_degree - 2);
        hp.odd_stable = hp.odd_degree >= 2 && bij(hp.odd_degree - 2);
        rep.hp = hp;
    }
    return out;
}

CohomologyReport cotor(const HopfPtr& Hp, const Key& alpha, const Key& beta, int n_max, int D) {
    const Hopf& H = *Hp;
    if (!H.is_grouplike(alpha)) throw NotGroupLike("alpha " + key_str(alpha));
    if (!H.is_grouplike(beta)) throw NotGroupLike("beta " + key_str(beta));
    if (H.weight(alpha) != 0 || H.weight(beta) != 0)
        throw NotGroupLike("group-likes must sit in weight 0 for a closed truncation");
    // reuse the localized level enumeration (H^{xn} with weight <= D)
    CocyclicModule levels = CocyclicModule::sharp_delta_unchecked(Hp, Character::counit(), D);

    auto boundary = [&](int n, const TupleKey& u) {
        Tensor out;
        TupleKey au;
        au.push_back(alpha);
        au.insert(au.end(), u.begin(), u.end());
        add_term(out, au, Rat(1));
        // minus d'_beta(u)
        Rat sign(1);
        for (int i = 0; i < n; ++i) {
            for (auto& [pq, c] : H.comul(u[i])) {
                TupleKey nt;
                nt.insert(nt.end(), u.begin(), u.begin() + i);
                nt.push_back(pq.first);
                nt.push_back(pq.second);
                nt.insert(nt.end(), u.begin() + i + 1, u.end());
                add_term(out, nt, -sign * c);
            }
            sign = -sign;
        }
        TupleKey ub = u;
        ub.push_back(beta);
        add_term(out, ub, -sign);
        return out;
    };

    CohomologyReport rep;
    rep.kind = "cotor";
    rep.object = H.name() + " Cotor(C_" + key_str(alpha) + ", C_" + key_str(beta) + ")";
    rep.param("D", std::to_string(D));
    rep.param("n_max", std::to_string(n_max));

    std::vector<SparseMatrix> d;
    for (int n = 0; n <= n_max; ++n) {
        const auto& from = levels.level_basis(n);
        SparseMatrix m(levels.level_dim(n + 1), (int)from.size());
        for (int j = 0; j < (int)from.size(); ++j)
            m.set_col(j, levels.vec_of(n + 1, boundary(n, from[j])));
        d.push_back(m);
    }
    // weight-homogeneity (alpha, beta have weight 0 and comul is graded for
    // every matrix-assembled presentation; verified via the block restriction)
    bool graded = true;
    std::set<int> weights;
    for (int n = 0; n <= n_max + 1; ++n)
        for (const TupleKey& t : levels.level_basis(n))
            weights.insert(levels.coalgebra().weight(t));
    try {
        for (int n = 0; n <= n_max; ++n) {
            int total = 0;
            for (int w : weights) {
                auto here = weight_block(levels, n, w);
                if (here.empty()) continue;
                SparseMatrix d_out = restrict_matrix(d[n], weight_block(levels, n + 1, w), here);
                SparseMatrix d_in =
                    n == 0 ? SparseMatrix((int)here.size(), 0)
                           : restrict_matrix(d[n - 1], here, weight_block(levels, n - 1, w));
                int h = cohomology_dim(ComplexSlice{d_in, d_out});
                if (h) {
                    rep.per_weight[n][w] = h;
                    total += h;
                }
            }
            rep.dims[n] = total;
        }
    } catch (const IdentityFailure&) {
        graded = false;
        rep.per_weight.clear();
        SparseMatrix prev(levels.level_dim(0), 0);
        for (int n = 0; n <= n_max; ++n) {
            rep.dims[n] = cohomology_dim(ComplexSlice{prev, d[n]});
            prev = d[n];
        }
    }
    rep.exactness = graded ? "graded-exact" : "filtered";
    return rep;
}

void haar_contraction_check(const HopfPtr& Hp, const std::function<Rat(const Key&)>& tau,
                            int n_max, int D) {
    const Hopf& H = *Hp;
    if (tau(H.unit()) != 1) throw NotIntegral("tau(1) != 1");
    for (const Key& k : H.basis(D)) {
        Elem lhs;
        for (auto& [pq, c] : H.comul(k)) add_term(lhs, pq.second, c * tau(pq.first));
        if (lhs != scaled(elem_of(H.unit()), tau(k)))
            throw NotIntegral("left-integral law fails at key " + key_str(k));
    }
    CocyclicModule M = CocyclicModule::sharp_delta(Hp, Character::counit(), D);
    auto s_matrix = [&](int n) {
        const auto& from = M.level_basis(n);
        SparseMatrix m(M.level_dim(n - 1), (int)from.size());
        for (int j = 0; j < (int)from.size(); ++j) {
            const TupleKey& t = from[j];
            TupleKey rest(t.begin() + 1, t.end());
            Tensor img;
            add_term(img, rest, tau(t[0]));
            m.set_col(j, M.vec_of(n - 1, img));
        }
        return m;
    };
    for (int n = 1; n <= n_max; ++n) {
        SparseMatrix id = SparseMatrix::identity(M.level_dim(n));
        SparseMatrix lhs = M.b_matrix(n - 1) * s_matrix(n) + s_matrix(n + 1) * M.b_matrix(n);
        if (!(lhs == id))
            throw NotIntegral("contraction identity b s + s b = id fails at level " +
                              std::to_string(n));
    }
}

std::function<Rat(const Key&)> haar_integral(const HopfPtr& group) {
    const GroupData* g = group_data_of(*group);
    if (!g) throw BadParameter("haar_integral expects a group algebra");
    int e = g->identity;
    return [e](const Key& k) { return k[0] == e ? Rat(1) : Rat(0); };
}

UqWindow uq_sl2_window(const HopfPtr& H) {
    if (!uq_data_of(*H)) throw BadParameter("uq_sl2_window expects the uqsl2 presentation");
    UqWindow w;
    Key K{0, 0, 1}, E{1, 0, 0}, KF{0, 1, 0};
    CocyclicModule M = CocyclicModule::sharp_delta_sigma(H, Character::counit(), K, 2);
    // level 0 -> 1: b(c) = c(1 - K), so HC^0 of the window is 0
    Tensor b0 = M.apply_b(0, tensor_of(TupleKey{}));
    w.hc0_zero = !b0.empty();
    auto cocycle1 = [&](const Key& k) {
        Tensor u = tensor_of(TupleKey{k});
        return M.apply_b(1, u).empty() && M.apply_lambda(1, u) == u;
    };
    w.e_cocycle = cocycle1(E);
    w.kf_cocycle = cocycle1(KF);
    // independence of E, KF modulo the exact coboundary span {1 - K}
    SparseMatrix m(4, 3);  // rows: keys 1, K, E, KF
    m.add(2, 0, Rat(1));   // E
    m.add(3, 1, Rat(1));   // KF
    m.add(0, 2, Rat(1));   // 1 - K
    m.add(1, 2, Rat(-1));
    w.independent = rank(m) == 3;
    // Cotor^1(C, C_K): the same cocycle condition in the cobar complex
    auto cotor_closed = [&](const Key& k) {
        // boundary u -> (1, u) - [Delta(u) - (u, K)]
        Tensor out;
        add_term(out, TupleKey{H->unit(), k}, Rat(1));
        for (auto& [pq, c] : H->comul(k)) add_term(out, TupleKey{pq.first, pq.second}, -c);
        add_term(out, TupleKey{k, K}, Rat(1));
        return out.empty();
    };
    w.cotor1_contains = cotor_closed(E) && cotor_closed(KF) && w.independent;
    return w;
}

}  // namespace hopfcyc
