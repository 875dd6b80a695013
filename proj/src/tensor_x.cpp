#include "hopfcyc/tensor_x.hpp"

#include <algorithm>

#include "hopfcyc/builtins.hpp"
#include "hopfcyc/errors.hpp"

namespace hopfcyc {

SparseMatrix HModule::action_of(const Elem& h) const {
    SparseMatrix m(dim, dim);
    for (auto& [k, c] : h) m = m + action(k).scaled(c);
    return m;
}

void HModule::check_module_axioms(int D) const {
    if (!(action(H->unit()) == SparseMatrix::identity(dim)))
        throw NotClosedUnderStructureMaps("unit does not act as identity on module " + name);
    auto keys = H->basis(D);
    for (const Key& a : keys)
        for (const Key& b : keys)
            if (!(action(a) * action(b) == action_of(H->mul(a, b))))
                throw NotClosedUnderStructureMaps("module law fails on " + name + " at pair " +
                                                  key_str(a) + ", " + key_str(b));
}

HModule trivial_module(HopfPtr H, int dim) {
    HModule m;
    m.H = H;
    m.dim = dim;
    m.name = "trivial" + std::to_string(dim);
    const Hopf* hp = H.get();
    m.action = [hp, dim](const Key& k) {
        return SparseMatrix::identity(dim).scaled(hp->counit(k));
    };
    return m;
}

HModule regular_module(HopfPtr group) {
    const GroupData* g = group_data_of(*group);
    if (!g) throw BadParameter("regular_module expects a group algebra");
    HModule m;
    m.H = group;
    m.dim = (int)g->elements.size();
    m.name = "regular";
    const GroupData* gd = g;
    int n = m.dim;
    m.action = [gd, n](const Key& k) {
        SparseMatrix a(n, n);
        for (int j = 0; j < n; ++j) a.add(gd->table[k[0]][j], j, Rat(1));
        return a;
    };
    return m;
}

HModule uq_simple2(HopfPtr uq) {
    const UqData* d = uq_data_of(*uq);
    if (!d) throw BadParameter("uq_simple2 expects the uqsl2 presentation");
    Rat q = d->q;
    HModule m;
    m.H = uq;
    m.dim = 2;
    m.name = "simple2";
    m.action = [q](const Key& k) {
        // x = E, y = KF, sigma = K on the standard basis (v1, v2):
        // K = diag(q, 1/q), E = e12, F = e21, so KF = (1/q) e21.
        auto matE = [] {
            SparseMatrix e(2, 2);
            e.add(0, 1, Rat(1));
            return e;
        }();
        SparseMatrix out = SparseMatrix::identity(2);
        for (int i = 0; i < k[0]; ++i) out = matE * out;
        SparseMatrix matKF(2, 2);
        matKF.add(1, 0, Rat(1) / q);
        for (int i = 0; i < k[1]; ++i) out = out * matKF;
        SparseMatrix matK(2, 2);
        if (k[2] >= 0) {
            matK.add(0, 0, q);
            matK.add(1, 1, Rat(1) / q);
        } else {
            matK.add(0, 0, Rat(1) / q);
            matK.add(1, 1, q);
        }
        for (int i = 0; i < std::abs(k[2]); ++i) out = out * matK;
        return out;
    };
    return m;
}

namespace {

using WordElem = std::map<Word, Rat>;
// Omega^1(T(V)) generator x (dv) y encoded as the concatenated word with the
// marked position of v.
using Triple = std::pair<int, Word>;
using TripleElem = std::map<Triple, Rat>;

struct Ctx {
    const HModule& V;
    const Hopf& H;
    int L;
    std::vector<Word> words;  // lengths 0..L, sorted by (length, lex)
    std::map<Word, int> word_index;
    int first_len1 = 0;  // index offset of length-1 words
    std::vector<Triple> triples;
    std::map<Triple, int> triple_index;

    Ctx(const HModule& v, int max_len) : V(v), H(*v.H), L(max_len) {
        std::vector<Word> tmp;
        Word cur;
        std::function<void(int)> rec = [&](int len) {
            tmp.push_back(cur);
            if (len == L) return;
            for (int a = 0; a < V.dim; ++a) {
                cur.push_back(a);
                rec(len + 1);
                cur.pop_back();
            }
        };
        rec(0);
        std::sort(tmp.begin(), tmp.end(), [](const Word& a, const Word& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        words = std::move(tmp);
        for (int i = 0; i < (int)words.size(); ++i) word_index[words[i]] = i;
        first_len1 = 1;  // single empty word first
        for (const Word& w : words) {
            if (w.empty()) continue;
            for (int pos = 0; pos < (int)w.size(); ++pos) triples.emplace_back(pos, w);
        }
        std::sort(triples.begin(), triples.end());
        for (int i = 0; i < (int)triples.size(); ++i) triple_index[triples[i]] = i;
    }

    int nwords() const { return (int)words.size(); }
    int ntriples() const { return (int)triples.size(); }

    // diagonal action of h on a word
    WordElem act_word(const Elem& h, const Word& w) const {
        WordElem out;
        if (w.empty()) {
            Rat c(0);
            for (auto& [k, x] : h) c += x * H.counit(k);
            if (!is_zero(c)) out[w] = c;
            return out;
        }
        Tensor legs = H.iterated_comul_elem(h, (int)w.size());
        for (auto& [t, c] : legs) {
            // product over slots of column vectors
            std::map<Word, Rat> acc{{Word{}, c}};
            for (size_t s = 0; s < w.size(); ++s) {
                SparseMatrix a = V.action(t[s]);
                std::map<Word, Rat> next;
                for (auto& [pw, pc] : acc)
                    for (auto& [r, v] : a.col(w[s])) {
                        Word nw = pw;
                        nw.push_back(r);
                        add_term(next, nw, pc * v);
                    }
                acc.swap(next);
            }
            for (auto& [nw, nc] : acc) add_term(out, nw, nc);
        }
        return out;
    }

    TripleElem act_triple(const Elem& h, const Triple& t) const {
        TripleElem out;
        for (auto& [nw, c] : act_word(h, t.second)) add_term(out, Triple{t.first, nw}, c);
        return out;
    }

    SparseVec wvec(const WordElem& e) const {
        SparseVec v;
        for (auto& [w, c] : e) sv_set(v, word_index.at(w), c);
        return v;
    }
    SparseVec tvec(const TripleElem& e) const {
        SparseVec v;
        for (auto& [t, c] : e) sv_set(v, triple_index.at(t), c);
        return v;
    }

    static Word concat(const Word& a, const Word& b) {
        Word w = a;
        w.insert(w.end(), b.begin(), b.end());
        return w;
    }

    // natural form of x (dv) y: the word y.x.v
    Word phi(const Triple& t) const {
        const auto& [pos, w] = t;
        Word y(w.begin() + pos + 1, w.end());
        Word x(w.begin(), w.begin() + pos);
        Word out = concat(y, x);
        out.push_back(w[pos]);
        return out;
    }

    Word backward_shift(const Word& w) const {
        Word out;
        out.push_back(w.back());
        out.insert(out.end(), w.begin(), w.end() - 1);
        return out;
    }

    // universal derivation T(V) -> Omega^1
    TripleElem d_word(const Word& w) const {
        TripleElem out;
        for (int pos = 0; pos < (int)w.size(); ++pos) add_term(out, Triple{pos, w}, Rat(1));
        return out;
    }

    // untwisted boundary b(x dv y) = y x v - v y x
    WordElem b_triple(const Triple& t) const {
        const auto& [pos, w] = t;
        Word x(w.begin(), w.begin() + pos);
        Word y(w.begin() + pos + 1, w.end());
        Word t1 = concat(y, x);
        t1.push_back(w[pos]);
        Word t2{w[pos]};
        t2 = concat(t2, concat(y, x));
        WordElem out;
        add_term(out, t1, Rat(1));
        add_term(out, t2, Rat(-1));
        return out;
    }

    // twisted boundary b_sigma(x dv y) = y sigma(x) sigma(v) - v y sigma(x)
    WordElem b_sigma_triple(const Key& sigma, const Triple& t) const {
        const auto& [pos, w] = t;
        Word x(w.begin(), w.begin() + pos);
        Word y(w.begin() + pos + 1, w.end());
        WordElem sx = act_word(elem_of(sigma), x);
        SparseMatrix sig = V.action(sigma);
        WordElem out;
        for (auto& [xs, xc] : sx) {
            // y . sigma(x) . sigma(v)
            for (auto& [r, v] : sig.col(w[pos])) {
                Word t1 = concat(y, xs);
                t1.push_back(r);
                add_term(out, t1, xc * v);
            }
            // - v . y . sigma(x)
            Word t2{w[pos]};
            t2 = concat(t2, concat(y, xs));
            add_term(out, t2, -xc);
        }
        return out;
    }
};

}  // namespace

static TensorXReport tensor_x_impl(const HModule& V, const Character& delta,
                                   const std::optional<Key>& sigma, int max_len) {
    const Hopf& H = *V.H;
    V.check_module_axioms(1);
    if (!sigma) {
        auto inv = check_involutive(H, delta, std::min(2, max_len));
        if (!inv.holds)
            throw NotInvolutive("S_delta^2 != Id; use the sigma-twisted X-complex");
    }
    Ctx ctx(V, max_len);
    auto gens = H.algebra_generators();

    // X^0 relations: coinvariants on words
    std::vector<SparseVec> rel0;
    for (const Key& g : gens) {
        Rat dg = H.character(delta, g);
        for (const Word& w : ctx.words) {
            WordElem r = ctx.act_word(elem_of(g), w);
            add_term(r, w, -dg);
            SparseVec v = ctx.wvec(r);
            if (!v.empty()) rel0.push_back(std::move(v));
        }
    }
    QuotientPresentation X0 = quotient(ctx.nwords(), rel0);
    RrefResult rel0_span = rref_rows(rel0, ctx.nwords());

    // X^1 relations: commutators (twisted or not) plus coinvariants
    std::vector<SparseVec> rel1;
    for (const Triple& t : ctx.triples) {
        int tl = (int)t.second.size();
        for (const Word& a : ctx.words) {
            if (a.empty() || tl + (int)a.size() > ctx.L) continue;
            // a x (dv) y  vs  x (dv) y.a'  (a' = sigma(a) in the twisted case)
            TripleElem r;
            add_term(r, Triple{t.first + (int)a.size(), Ctx::concat(a, t.second)}, Rat(-1));
            if (sigma) {
                for (auto& [as, ac] : ctx.act_word(elem_of(*sigma), a))
                    add_term(r, Triple{t.first, Ctx::concat(t.second, as)}, ac);
            } else {
                add_term(r, Triple{t.first, Ctx::concat(t.second, a)}, Rat(1));
            }
            SparseVec v = ctx.tvec(r);
            if (!v.empty()) rel1.push_back(std::move(v));
        }
    }
    for (const Key& g : gens) {
        Rat dg = H.character(delta, g);
        for (const Triple& t : ctx.triples) {
            TripleElem r = ctx.act_triple(elem_of(g), t);
            add_term(r, t, -dg);
            SparseVec v = ctx.tvec(r);
            if (!v.empty()) rel1.push_back(std::move(v));
        }
    }
    QuotientPresentation X1b = quotient(ctx.ntriples(), rel1);
    RrefResult rel1_span = rref_rows(rel1, ctx.ntriples());

    TensorXReport rep;
    rep.x0_dim = X0.dim();
    rep.x1_dim = X1b.dim();

    if (!sigma) {
        // route (a): words of length >= 1 modulo the same coinvariants
        std::vector<int> amb;  // word indices of length >= 1
        for (int i = 0; i < ctx.nwords(); ++i)
            if (!ctx.words[i].empty()) amb.push_back(i);
        std::map<int, int> apos;
        for (int i = 0; i < (int)amb.size(); ++i) apos[amb[i]] = i;
        auto restrict_vec = [&](const SparseVec& v) {
            SparseVec o;
            for (auto& [i, c] : v) {
                auto it = apos.find(i);
                if (it == apos.end()) throw Error("tensor_x: unexpected empty-word coordinate");
                sv_set(o, it->second, c);
            }
            return o;
        };
        std::vector<SparseVec> rel0a;
        for (auto& v : rel0) {
            bool pure = true;
            for (auto& [i, c] : v) {
                (void)c;
                if (ctx.words[i].empty()) pure = false;
            }
            if (pure && !v.empty()) rel0a.push_back(restrict_vec(v));
        }
        QuotientPresentation X1a = quotient((int)amb.size(), rel0a);

        // phi: triples -> words of length >= 1
        SparseMatrix phi((int)amb.size(), ctx.ntriples());
        for (int j = 0; j < ctx.ntriples(); ++j)
            phi.add(apos.at(ctx.word_index.at(ctx.phi(ctx.triples[j]))), j, Rat(1));
        SparseMatrix phi_bar = induced_on_quotient(phi, X1b, X1a);
        bool iso = X1a.dim() == X1b.dim() && rank(phi_bar) == X1b.dim();

        // boundaries route (b)
        SparseMatrix d_b(ctx.ntriples(), ctx.nwords());
        for (int j = 0; j < ctx.nwords(); ++j) d_b.set_col(j, ctx.tvec(ctx.d_word(ctx.words[j])));
        SparseMatrix b_b(ctx.nwords(), ctx.ntriples());
        for (int j = 0; j < ctx.ntriples(); ++j)
            b_b.set_col(j, ctx.wvec(ctx.b_triple(ctx.triples[j])));
        SparseMatrix d_b_bar = induced_on_quotient(d_b, X0, X1b);
        SparseMatrix b_b_bar = induced_on_quotient(b_b, X1b, X0);

        // boundaries route (a): N and 1 - t on the word side
        SparseMatrix Nw((int)amb.size(), ctx.nwords());
        SparseMatrix one_minus_t(ctx.nwords(), (int)amb.size());
        for (int j = 0; j < ctx.nwords(); ++j) {
            const Word& w = ctx.words[j];
            if (w.empty()) continue;
            Word cur = w;
            SparseVec acc;
            for (size_t i = 0; i < w.size(); ++i) {
                sv_set(acc, apos.at(ctx.word_index.at(cur)),
                       sv_get(acc, apos.at(ctx.word_index.at(cur))) + 1);
                cur = ctx.backward_shift(cur);
            }
            Nw.set_col(j, acc);
        }
        for (int j = 0; j < (int)amb.size(); ++j) {
            const Word& w = ctx.words[amb[j]];
            SparseVec v;
            sv_set(v, amb[j], Rat(1));
            sv_set(v, ctx.word_index.at(ctx.backward_shift(w)),
                   sv_get(v, ctx.word_index.at(ctx.backward_shift(w))) - 1);
            one_minus_t.set_col(j, v);
        }
        SparseMatrix d_a = induced_on_quotient(Nw, X0, X1a);
        SparseMatrix b_a = induced_on_quotient(one_minus_t, X1a, X0);

        bool d_agree = (phi_bar * d_b_bar == d_a);
        bool b_agree = (b_b_bar == b_a * phi_bar);
        if (!(iso && d_agree && b_agree))
            throw MismatchedBoundaries(
                std::string("X-complex assemblies disagree for module ") + V.name +
                (iso ? "" : " [natural map not iso]") + (d_agree ? "" : " [d]") +
                (b_agree ? "" : " [b]"));
        rep.assemblies_agree = true;
        if (!(d_a * b_a).is_zero() || !(b_a * d_a).is_zero())
            throw MismatchedBoundaries("X-complex composites do not vanish");
        rep.h0_dim = cohomology_dim(ComplexSlice{b_a, d_a});
        rep.x1_dim = X1a.dim();
        return rep;
    }

    // twisted variant: verify the well-definedness identities
    rep.bsigma_d_zero = true;
    for (const Word& w : ctx.words) {
        WordElem img;
        for (auto& [t, c] : ctx.d_word(w)) add_into(img, ctx.b_sigma_triple(*sigma, t), c);
        if (!in_span(rel0_span, ctx.wvec(img))) rep.bsigma_d_zero = false;
    }
    rep.d_bsigma_zero = true;
    for (const Triple& t : ctx.triples) {
        TripleElem img;
        for (auto& [w, c] : ctx.b_sigma_triple(*sigma, t)) add_into(img, ctx.d_word(w), c);
        if (!in_span(rel1_span, ctx.tvec(img))) rep.d_bsigma_zero = false;
    }
    // b_sigma kills the twisted commutators and descends to the quotients
    SparseMatrix bs(ctx.nwords(), ctx.ntriples());
    for (int j = 0; j < ctx.ntriples(); ++j)
        bs.set_col(j, ctx.wvec(ctx.b_sigma_triple(*sigma, ctx.triples[j])));
    (void)induced_on_quotient(bs, X1b, X0);  // throws if it does not descend
    return rep;
}

TensorXReport tensor_x_complex(const HModule& V, const Character& delta, int max_len) {
    return tensor_x_impl(V, delta, std::nullopt, max_len);
}

TensorXReport tensor_x_twisted(const HModule& V, const Character& delta, const Key& sigma,
                               int max_len) {
    return tensor_x_impl(V, delta, sigma, max_len);
}

}  // namespace hopfcyc
