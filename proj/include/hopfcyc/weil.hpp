#pragma once
#include <optional>

#include "hopfcyc/linalg.hpp"
#include "hopfcyc/presentation.hpp"

namespace hopfcyc {

// Words of the free bigraded DG algebra W(H) on generator letters (bidegree
// (1,0)) and curvature letters (bidegree (1,1)) of a finite-dimensional
// coalgebra. Letters are encoded as 2*key_index + (curvature ? 1 : 0).
using WWord = std::vector<int>;
using WElem = std::map<WWord, Rat>;

// A block = an indexed set of words of one total degree (possibly filtered
// by curvature count).
struct WBlock {
    int degree = 0;
    std::vector<WWord> words;
    std::map<WWord, int> pos;
    int dim() const { return (int)words.size(); }
};

// Quotient complex (per total degree) of word blocks, with the induced
// differential.
struct QComplex {
    std::vector<WBlock> blocks;              // degree 0..dtot (degree 0 empty)
    std::vector<QuotientPresentation> quo;   // per degree
    std::vector<SparseMatrix> dbar;          // induced differential d -> d+1
    int dim(int d) const { return quo[d].dim(); }
    CohomologySpace space(int d) const;      // cohomology at degree d
    int h_dim(int d) const;
};

class TruncatedWeil {
public:
    // C must be closed under the structure maps on its enumerated basis
    // (finite-dimensional); NotClosedUnderStructureMaps otherwise.
    TruncatedWeil(HopfPtr C, int dtot);

    const Hopf& coalgebra() const { return *C_; }
    HopfPtr coalgebra_ptr() const { return C_; }
    int dtot() const { return dtot_; }
    int nkeys() const { return (int)keys_.size(); }
    const std::vector<Key>& keys() const { return keys_; }

    int letter_degree(int l) const { return 1 + (l & 1); }
    bool is_curv(int l) const { return l & 1; }
    int gen_letter(const Key& k) const;
    int curv_letter(const Key& k) const;

    int degree(const WWord& w) const;
    int curvatures(const WWord& w) const;

    // word blocks
    WBlock full_block(int d) const;
    WBlock q_block(int d, int q) const;    // exactly q curvatures
    WBlock qle_block(int d, int n) const;  // q <= n  (W_n)
    WBlock qge_block(int d, int n) const;  // q >= n  (I^n = I_{n-1})

    // operators on words (exact)
    WElem apply_d(const WWord& w) const;
    WElem apply_d0(const WWord& w) const;
    WElem apply_partial(const WWord& w) const;  // d + d0
    WElem apply_t(const WWord& w) const;
    WElem apply_N(const WWord& w) const;
    WElem apply_bt(const WWord& w) const;
    WElem apply_b(const WWord& w) const;   // partial + bt
    WElem apply_b0(const WWord& w) const;  // d0 + bt
    WElem apply_theta(const WWord& w) const;
    WElem apply_phi1(const WWord& w) const;  // on I^{(n)}, n = curvatures(w)
    WElem apply_phi0(const WWord& w) const;
    WElem apply_H(const WWord& w) const;  // Chern-Simons contraction
    // diagonal action of h (for the delta-localized variants)
    WElem act(const Elem& h, const WWord& w) const;

    // matrix of op between blocks; terms outside `to` are dropped when
    // drop_outside (used for W/I^{n+1} and fixed-q restrictions), otherwise
    // they raise TruncationEscape.
    SparseMatrix assemble(const WBlock& from, const WBlock& to,
                          const std::function<WElem(const WWord&)>& op,
                          bool drop_outside = false) const;

    // relation generators over a block
    std::vector<SparseVec> commutator_relations(const WBlock& b) const;  // (1-t)w
    // [I, I^n]: w - sign t^k(w) over splits with >= 1 curvature in the
    // prefix and >= n in the suffix
    std::vector<SparseVec> ideal_commutator_relations(const WBlock& b, int n) const;
    std::vector<SparseVec> coinvariant_relations(const WBlock& b, const Character& delta) const;

    // quotient complexes (optional delta adds coinvariant relations)
    QComplex w_natural(const std::optional<Character>& delta = std::nullopt) const;
    QComplex wn_natural(int n, const std::optional<Character>& delta = std::nullopt) const;
    QComplex in_natural(int n, const std::optional<Character>& delta = std::nullopt) const;
    QComplex in_tilde_natural(int n, const std::optional<Character>& delta = std::nullopt) const;

    // (I^{(n)}_nat / Im d, d0) and (I^{(n-1)} / Im d + Im N, b0) of the
    // S-tower proof, plus beta/alpha between them.
    QComplex tower_upper(int n, const std::optional<Character>& delta = std::nullopt) const;
    QComplex tower_lower(int n, const std::optional<Character>& delta = std::nullopt) const;

private:
    void enumerate_words();

    HopfPtr C_;
    int dtot_;
    std::vector<Key> keys_;
    std::map<Key, int> key_index_;
    std::vector<std::vector<WWord>> by_degree_;
};

// Verifies partial^2 = 0, b^2 = b0^2 = d^2 = [b0,d] = 0, b = b0 + d,
// t^p = 1 per bidegree, N(1-t) = (1-t)N = 0, d t = t d, and the
// (W,partial) ~ (W,d) conjugation. OperatorIdentityFailure on failure.
void check_weil_operator_identities(const TruncatedWeil& W);

// [H,partial] = Id on W (acyclicity witness), per degree <= dtot-1.
void check_contraction(const TruncatedWeil& W);

struct CsOutcome {
    std::vector<int> i_h_dims, w_h_dims;  // per degree, -1 where not computed
    bool bijective = true;                // CS: H^*(I_n nat) ~ H^{*-1}(W_n nat)
};
// The Chern-Simons map [x] -> [H(x)] : I_n_nat -> W_n_nat[1]; verifies
// well-definedness (H preserves the relation spans) and the chain-map
// property, then rank-bijectivity on degrees deg_lo..deg_hi.
CsOutcome contraction_and_cs(const TruncatedWeil& W, int n, int deg_lo, int deg_hi,
                             const std::optional<Character>& delta = std::nullopt);

struct ChClasses {
    // representative words of ch_{2n} = nat(omega^n / n!) and the
    // Chern-Simons transgressions cs_{2n-1} = CS(ch_{2n})
    WElem ch2, ch4, cs1, cs3;
    bool ch2_nonzero = false, ch4_nonzero = false;
    bool cs1_nonzero = false, cs3_nonzero = false;
    bool ch_vanish_in_w_natural = false;  // solved partial(x) = omega^n in W_nat
    bool s_ch2_is_ch4 = false, s_cs1_is_cs3 = false;
};
ChClasses ch_cs_classes(const TruncatedWeil& W, const Key& rho,
                        const std::optional<Character>& delta = std::nullopt);

// S-operator by the diagram chase c = nat(u), partial(u) = (t-1)(v),
// b(v) = N(w), S[c] = [nat(w)], inside W_n (in_ideal=false) or I_n.
WElem s_operator_chase(const TruncatedWeil& W, int n, bool in_ideal, const WElem& cocycle);

struct ExactnessReport {
    // seq -> degree -> spot -> exact?
    std::map<std::string, std::map<int, std::vector<bool>>> spots;
    bool all_exact = true;
};
ExactnessReport exactness_report(const TruncatedWeil& W, int n, int deg_hi,
                                 const std::optional<Character>& delta = std::nullopt);

struct GreaReport {
    bool theta_b0 = false, theta_d0 = false, theta_d = false, theta_sq = false;  // (i)
    bool homotopy1 = false, homotopy2 = false;                                   // (ii)
    bool phi1_chain = false, phi1_theta = false;                                 // (iii)
    bool phi0_chain = false;                                                     // (iv)
};
// Lemma items (i)-(iv) as exact (quotient-)matrix identities per I^{(n)}
// block, degrees <= deg_hi.
GreaReport grea_operators(const TruncatedWeil& W, int n, int deg_hi);

struct TowerOutcome {
    bool beta_chain = false, alpha_chain = false;
    bool alpha_beta_id = false;       // chain level
    bool beta_alpha_id_on_h = false;  // on cohomology, by rank
    std::vector<int> w_h_dims;        // dim H^m(W_n_nat[,delta]) for m <= k_max+1
    bool rank_table_ok = true;        // vs the supplied HC dims
};
// beta = -theta.N and alpha = -phi1.d between tower_upper(n) and
// tower_lower(n); rank table dim H^{k+1}(W_n_nat) == hc_dims[k-2n].
TowerOutcome tower_check(const TruncatedWeil& W, int n, int k_max,
                         const std::vector<int>& hc_dims,
                         const std::optional<Character>& delta = std::nullopt);

}  // namespace hopfcyc
