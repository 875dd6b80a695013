#include "hopfcyc/acceptance.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "hopfcyc/builtins.hpp"
#include "hopfcyc/charmap.hpp"
#include "hopfcyc/cohomology.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/lie.hpp"
#include "hopfcyc/weil.hpp"

namespace hopfcyc {

namespace {

struct Ctx {
    const AcceptanceOptions& opt;
    std::vector<CriterionResult> results;
    std::ostream* progress;

    void run(int id, const std::string& name, const std::function<std::string()>& body) {
        if (progress) *progress << "[" << id << "/11] " << name << " ... " << std::flush;
        CriterionResult r;
        r.id = id;
        r.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (progress) {
            std::ostringstream s;
            s.setf(std::ios::fixed);
            s.precision(1);
            s << (r.pass ? "PASS" : "FAIL") << " (" << r.seconds << "s)";
            *progress << s.str() << (r.pass ? "" : "  [" + r.detail + "]") << "\n";
        }
        results.push_back(std::move(r));
    }
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error(msg);
}

// splitmix64, matching the seeded-sample redundancy design
struct Rng {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { return lo + (long)(next() % (uint64_t)(hi - lo + 1)); }
};

// seeded random combinations re-testing identity (7) through the linear span
void sampled_identity_check(const Hopf& H, const Character& delta, int D, Rng& rng) {
    auto keys = H.basis(D);
    const Key one = H.unit();
    for (int trial = 0; trial < 4; ++trial) {
        Elem x;
        for (int t = 0; t < 3; ++t)
            add_term(x, keys[rng.range(0, (long)keys.size() - 1)], Rat(rng.range(-3, 3)));
        Elem lhs;
        for (auto& [pq, c] : H.comul_elem(x))
            add_into(lhs, H.mul_elem(H.twisted_antipode(delta, pq.first), elem_of(pq.second)), c);
        require(lhs == scaled(elem_of(one), H.character_elem(delta, x)),
                "sampled identity (7) fails on a random combination");
    }
}

std::vector<int> ce_parities(const std::vector<int>& h) {
    int even = 0, odd = 0;
    for (size_t i = 0; i < h.size(); ++i) (i % 2 ? odd : even) += h[i];
    return {even, odd};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream* progress) {
    Ctx ctx{opt, {}, progress};
    const bool quick = opt.quick;
    Character eps = Character::counit();

    ctx.run(1, "Hopf identity suite (Eqs (1)-(5), (7)-(11))", [&] {
        Rng rng{opt.seed};
        int D = quick ? 2 : 4;
        int checked = 0;
        auto run_one = [&](HopfPtr H, int d, const Character& chi) {
            H->check_hopf_axioms(d);
            H->check_character(chi, d);
            auto rep = check_twisted_identities(*H, chi, d);
            checked += rep.keys_checked;
            sampled_identity_check(*H, chi, d, rng);
        };
        for (auto& n : std::vector<std::string>{"z2", "z3", "s3"}) run_one(make_builtin(n), 0, eps);
        for (int dim = 1; dim <= (quick ? 2 : 3); ++dim)
            run_one(symmetric_algebra(dim), D, eps);
        for (auto& n :
             std::vector<std::string>{"lie-abelian2", "lie-heisenberg3", "lie-sl2"}) {
            auto U = make_builtin(n);
            run_one(U, D, eps);
            if (n != "lie-sl2") {
                std::vector<Rat> v(lie_data_of(*U)->dim, Rat(0));
                v[0] = Rat(1);
                run_one(U, D, Character::lie("d", v));
            }
        }
        run_one(uq_sl2(Rat(3) / 2, 2), quick ? 2 : 4, eps);
        return "keys checked: " + std::to_string(checked);
    });

    ctx.run(2, "cyclicity: t^{n+1} = Id (and the forced-sigma formula)", [&] {
        int nmax = quick ? 2 : 3;
        for (auto& [name, D] : std::vector<std::pair<std::string, int>>{
                 {"z2", 0}, {"z3", 0}, {"s3", 0}, {"sv2", 2},
                 {"lie-abelian2", 2}, {"lie-heisenberg3", 2}, {"lie-sl2", 2}}) {
            auto M = CocyclicModule::sharp_delta(make_builtin(name), eps, D);
            for (int n = 1; n <= nmax; ++n)
                require(M.cyclic_matrix(n).pow(n + 1) == SparseMatrix::identity(M.level_dim(n)),
                        "t^{n+1} != Id on " + name + " at level " + std::to_string(n));
        }
        // U_q(sl2) with (eps, K): elementwise-exact cyclicity
        auto Q = uq_sl2(Rat(3) / 2, 1);
        auto M = CocyclicModule::sharp_delta_sigma(Q, eps, Key{0, 0, 1}, quick ? 2 : 3);
        for (int n = 1; n <= nmax; ++n)
            for (const TupleKey& t : M.level_basis(n)) {
                Tensor cur = tensor_of(t);
                for (int i = 0; i <= n; ++i) cur = M.apply_cyclic(n, cur);
                require(cur == tensor_of(t), "t_{delta,sigma}^{n+1} != Id on uqsl2");
            }
        // sigma wrongly forced to 1: t^{n+1} = (S_delta^2)^{(x) n} verbatim
        auto F = CocyclicModule::sharp_delta_unchecked(Q, eps, 2);
        for (int n = 1; n <= (quick ? 2 : 3); ++n)
            for (const TupleKey& t : F.level_basis(n)) {
                Tensor cur = tensor_of(t);
                for (int i = 0; i <= n; ++i) cur = F.apply_cyclic(n, cur);
                Tensor expect = tensor_of(TupleKey{});
                for (int s = 0; s < n; ++s) {
                    Elem sd2 = Q->twisted_antipode_elem(eps, Q->twisted_antipode(eps, t[s]));
                    Tensor next;
                    for (auto& [tk, tc] : expect)
                        for (auto& [k, kc] : sd2) {
                            TupleKey nt = tk;
                            nt.push_back(k);
                            add_term(next, nt, tc * kc);
                        }
                    expect.swap(next);
                }
                require(cur == expect, "forced-sigma displayed formula fails on uqsl2");
            }
        return std::string("all cyclicity identities hold");
    });

    ctx.run(3, "group algebras: HH and the S-stable HC window", [&] {
        std::ostringstream det;
        for (auto& name : quick ? std::vector<std::string>{"z2", "z3"}
                                : std::vector<std::string>{"z2", "z3", "s3"}) {
            auto M = CocyclicModule::sharp_delta(make_builtin(name), eps, 0);
            auto hh = hochschild(M, 3);
            require(hh.dims.at(0) == 1, name + ": HH^0 != 1");
            for (int n = 1; n <= 3; ++n) require(hh.dims.at(n) == 0, name + ": HH^n != 0");
            auto cy = cyclic_and_periodic(M, 4);
            require(cy.hc_dims == std::vector<int>({1, 0, 1, 0, 1}),
                    name + ": HC window is not 1,0,1,0,1");
            for (auto& si : cy.report.s_info)
                require(si.bijective, name + ": S not bijective on the window");
            require(cy.report.hp && cy.report.hp->even_dim == 1 && cy.report.hp->odd_dim == 0,
                    name + ": HP window is not (1,0)");
            det << name << " ok; ";
        }
        return det.str();
    });

    ctx.run(4, "Haar contraction b s + s b = Id", [&] {
        for (auto& name : std::vector<std::string>{"point", "z2", "z3", "s3"}) {
            auto H = make_builtin(name);
            haar_contraction_check(H, haar_integral(H), name == "s3" && quick ? 2 : 3, 0);
        }
        return std::string("averaging integral contracts all group algebras");
    });

    ctx.run(5, "S(V): per-weight HH^n = binom(dim V, n) at weight n", [&] {
        int dmax = quick ? 2 : 3, nmax = quick ? 3 : 4;
        for (int dim = 1; dim <= dmax; ++dim) {
            auto M = CocyclicModule::sharp_delta(symmetric_algebra(dim), eps, nmax);
            auto hh = hochschild(M, nmax);
            require(hh.exactness == "graded-exact", "S(V) HH is not graded-exact");
            for (int n = 0; n <= nmax; ++n) {
                long binom = 1;
                for (int i = 1; i <= n; ++i) binom = binom * (dim - n + i) / i;
                if (n > dim) binom = 0;
                require(hh.dims.at(n) == (int)binom, "HH dim mismatch for S(V)");
                if (n >= 1 && binom) {
                    auto it = hh.per_weight.find(n);
                    require(it != hh.per_weight.end() && it->second.count(n) &&
                                it->second.at(n) == (int)binom,
                            "HH of S(V) not concentrated in weight n");
                }
            }
        }
        return std::string("binomial table reproduced");
    });

    ctx.run(6, "U(g): B_delta A = A d_Lie and the CE periodic window", [&] {
        std::ostringstream det;
        int nmax = quick ? 2 : 3;
        for (auto& name :
             std::vector<std::string>{"lie-abelian2", "lie-heisenberg3", "lie-sl2"}) {
            LieAlgebra g = *lie_data_of(*make_builtin(name));
            auto rep = lie_quasi_iso_check(g, {}, nmax);
            require(rep.cocycles_ok && rep.compat_ok && rep.hh_matches,
                    name + ": quasi-isomorphism data fails at delta = 0");
            // one nonzero delta on the abelianization where it exists
            if (name != "lie-sl2") {
                std::vector<Rat> d(g.dim, Rat(0));
                d[0] = Rat(1);
                auto rep2 = lie_quasi_iso_check(g, d, nmax);
                require(rep2.cocycles_ok && rep2.compat_ok,
                        name + ": quasi-isomorphism data fails at nonzero delta");
            }
        }
        for (auto& name : quick ? std::vector<std::string>{"lie-abelian2"}
                                : std::vector<std::string>{"lie-abelian2", "lie-heisenberg3"}) {
            // stabilization of the S-window needs degree 4 either way
            int D = 4;
            auto U = make_builtin(name);
            auto M = CocyclicModule::sharp_delta(U, eps, D);
            auto cy = cyclic_and_periodic(M, D);
            auto ce = ce_homology_dims(*lie_data_of(*U), {}, 3);
            auto par = ce_parities(ce);
            require(cy.report.hp.has_value(), name + ": no periodic window");
            require(cy.report.hp->even_dim == par[0] && cy.report.hp->odd_dim == par[1],
                    name + ": HP window parity dims do not match the CE oracle");
            // Stabilization evidence: the top even link must be bijective.
            // Low-degree links may legitimately drop rank: S flushes the
            // truncation artifacts of a filtered (non-graded) presentation,
            // and the full rank table is carried by the report.
            require(cy.report.hp->even_stable, name + ": S not bijective onto the even window");
            det << name << " HP=(" << par[0] << "," << par[1] << ") ";
        }
        return det.str();
    });

    ctx.run(7, "U_q(sl2) at q=3/2 with (eps,K): exact degree-0/1 window", [&] {
        auto w = uq_sl2_window(uq_sl2(Rat(3) / 2, 1));
        require(w.hc0_zero, "b(1) = 1 - K should be nonzero");
        require(w.e_cocycle && w.kf_cocycle, "E, KF are not cyclic 1-cocycles");
        require(w.independent, "E, KF not independent mod span{1-K}");
        require(w.cotor1_contains, "Cotor^1 containment fails");
        return std::string("HC^0 window = 0; E, KF independent 1-cocycles");
    });

    ctx.run(8, "Weil suite: acyclicity, exact sequences, CS, ch/cs classes", [&] {
        struct Case {
            HopfPtr C;
            int dtot;
            std::optional<Character> delta;
            Key rho;
        };
        std::vector<Case> cases;
        cases.push_back({one_grouplike(), quick ? 6 : 8, std::nullopt, Key{0}});
        cases.push_back({cyclic_group_algebra(2), quick ? 5 : 6, eps, Key{0}});
        for (auto& cs : cases) {
            TruncatedWeil W(cs.C, cs.dtot);
            check_weil_operator_identities(W);
            check_contraction(W);
            for (int n = 0; n <= 2; ++n) {
                auto ex = exactness_report(W, n, cs.dtot - 1, cs.delta);
                require(ex.all_exact, cs.C->name() + ": (seq1)-(seq4)/(dac) not exact at n=" +
                                          std::to_string(n));
            }
            int cs_nmax = quick ? 1 : 2;
            for (int n = 0; n <= cs_nmax; ++n) {
                int lo = 2 * (n + 1);
                TruncatedWeil* use = &W;
                std::optional<TruncatedWeil> bigger;
                if (lo > cs.dtot - 2 && !quick) {
                    // the window at this n needs more degrees than Dtot allows
                    bigger.emplace(cs.C, lo + 2);
                    use = &*bigger;
                }
                int hi = use->dtot() - 2;
                if (lo > hi) continue;
                auto out = contraction_and_cs(*use, n, lo, hi, cs.delta);
                require(out.bijective, cs.C->name() + ": CS not bijective at n=" +
                                           std::to_string(n));
            }
            auto ch = ch_cs_classes(W, cs.rho, cs.delta);
            require(ch.ch2_nonzero && ch.ch4_nonzero, cs.C->name() + ": ch classes vanish");
            require(ch.cs1_nonzero && ch.cs3_nonzero, cs.C->name() + ": cs classes vanish");
            require(ch.ch_vanish_in_w_natural,
                    cs.C->name() + ": ch classes fail to die in W_natural");
            require(ch.s_ch2_is_ch4, cs.C->name() + ": S(ch2) != ch4");
            require(ch.s_cs1_is_cs3, cs.C->name() + ": S(cs1) != cs3");
        }
        return std::string("both coalgebras pass the full Weil suite");
    });

    ctx.run(9, "degree -1 / degree 0 operator suite and alpha/beta", [&] {
        for (auto& [C, delta] : std::vector<std::pair<HopfPtr, std::optional<Character>>>{
                 {one_grouplike(), std::nullopt}, {cyclic_group_algebra(2), eps}}) {
            TruncatedWeil W(C, quick ? 6 : 7);
            for (int n = 1; n <= 2; ++n) {
                auto rep = grea_operators(W, n, W.dtot() - 1);
                require(rep.theta_b0 && rep.theta_d0 && rep.theta_d && rep.theta_sq,
                        C->name() + ": Lemma item (i) fails");
                require(rep.homotopy1 && rep.homotopy2, C->name() + ": Lemma item (ii) fails");
                require(rep.phi1_chain && rep.phi1_theta, C->name() + ": Lemma item (iii) fails");
                require(rep.phi0_chain, C->name() + ": Lemma item (iv) fails");
                std::vector<int> dummy;  // rank table checked in criterion 10
                auto tw = tower_check(W, n, -1, dummy, delta);
                require(tw.beta_chain && tw.alpha_chain, C->name() + ": alpha/beta not chain maps");
                require(tw.alpha_beta_id, C->name() + ": alpha beta != 1 at chain level");
                require(tw.beta_alpha_id_on_h, C->name() + ": beta alpha != 1 on cohomology");
            }
        }
        return std::string("items (i)-(iv) and alpha/beta verified for n <= 2");
    });

    ctx.run(10, "tower: dim H^{k+1}(W_n_nat) = dim HC^{k-2n}", [&] {
        int kmax = quick ? 4 : 6;
        std::ostringstream det;
        for (auto& [C, delta] : std::vector<std::pair<HopfPtr, std::optional<Character>>>{
                 {one_grouplike(), std::nullopt}, {cyclic_group_algebra(2), eps}}) {
            // HC side, computed by the cyclic-cohomology module
            CocyclicModule M = delta ? CocyclicModule::sharp_delta(C, *delta, 0)
                                     : CocyclicModule::sharp(CoalgebraPtr(C), 0);
            auto cy = cyclic_and_periodic(M, kmax);
            TruncatedWeil W(C, quick ? 6 : 8);
            for (int n = 0; n <= 2; ++n) {
                auto tw = tower_check(W, n, kmax, cy.hc_dims, delta);
                require(tw.rank_table_ok,
                        C->name() + ": tower rank table mismatch at n=" + std::to_string(n));
            }
            det << C->name() << " ok; ";
        }
        return det.str();
    });

    ctx.run(11, "characteristic maps for C[Z/3] and the Lie comparison", [&] {
        auto H = cyclic_group_algebra(3);
        auto act = conjugation_action(H);
        check_flat(act, 0);
        std::vector<Rat> tau(act.dimA, Rat(0));
        tau[act.unitA] = Rat(1);
        check_invariant_trace(act, tau, eps, 0);
        auto M = CocyclicModule::sharp_delta(H, eps, 0);
        for (int n = 0; n <= 2; ++n) {
            // cyclic cocycles -> b-closed, lambda-invariant cochains
            SparseMatrix b = M.b_matrix(n);
            SparseMatrix inv = M.lambda_matrix(n) - SparseMatrix::identity(M.level_dim(n));
            SparseMatrix stacked(b.rows() + inv.rows(), M.level_dim(n));
            for (int c = 0; c < b.cols(); ++c) {
                for (auto& [r, x] : b.col(c)) stacked.add(r, c, x);
                for (auto& [r, x] : inv.col(c)) stacked.add(b.rows() + r, c, x);
            }
            for (auto& v : kernel_basis(stacked)) {
                Cochain img = char_map_tau(act, tau, eps, M.tensor_of_vec(n, v), n);
                require(cochain_b_closed(act, img), "image not b-closed");
                require(cochain_cyclic_invariant(img), "image not lambda-invariant");
            }
            // level-wise commutation with every face/degeneracy/cyclic operator
            SparseMatrix k_n = char_map_matrix(act, tau, eps, M, n);
            SparseMatrix k_n1 = char_map_matrix(act, tau, eps, M, n + 1);
            for (int i = 0; i <= n + 1; ++i)
                require(k_n1 * M.face_matrix(n, i) == cochain_face_matrix(act, n, i) * k_n,
                        "char map does not commute with face " + std::to_string(i));
            require(k_n * M.cyclic_matrix(n) == cochain_cyclic_matrix(act, n) * k_n,
                    "char map does not commute with the cyclic operator");
            if (n >= 1) {
                SparseMatrix k_m = char_map_matrix(act, tau, eps, M, n - 1);
                for (int i = 0; i <= n - 1; ++i)
                    require(k_m * M.degeneracy_matrix(n, i) ==
                                cochain_degeneracy_matrix(act, n, i) * k_n,
                            "char map does not commute with degeneracy " + std::to_string(i));
            }
        }
        // lie_char_map coincides with char_map_tau . antisymmetrization
        auto U = make_builtin("lie-abelian2");
        LieAlgebra g = LieAlgebra::abelian(2);
        PolyAlgebra A = PolyAlgebra::make({2, 2, 2});
        auto dact = derivation_action(
            U, A, {A.euler(0, 0) - A.euler(1, 1), A.euler(1, 1) - A.euler(2, 2)});
        check_flat(dact, 2);
        std::vector<Rat> dtau(A.dim(), Rat(0));
        dtau[A.index.at({1, 1, 1})] = Rat(1);
        check_invariant_trace(dact, dtau, eps, 2);
        for (auto& w : {std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{0, 1}}) {
            Cochain direct = lie_char_map(dact, dtau, g, {}, w);
            Cochain via = char_map_tau(dact, dtau, eps, antisymmetrize(g, w), (int)w.size());
            require(direct == via, "lie_char_map disagrees with char_map_tau . A");
        }
        return std::string("all characteristic-map checks pass");
    });

    return ctx.results;
}

}  // namespace hopfcyc
