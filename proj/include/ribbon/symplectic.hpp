#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ribbon/rational.hpp"

// Exact multilinear algebra over a symplectic vector space: sparse tensors
// with a cyclic group action, contraction against the symplectic pairing, the
// necklace Lie bracket on cyclically invariant tensors, two-forms modulo the
// standard form, and the polygon trace pairing on wedge data built from them.
//
// Symbol glossary (documentation only; nothing here has runtime content):
//   omega      skew pairing on basis indices: +1 on (p_i, q_i), -1 on (q_i, p_i)
//   omega0     the bivector sum_i p_i ^ q_i (Wedge2::omega0)
//   C_{i,j}    contraction(x, i, j): pair slots i and j with omega, delete both
//   pi_n       degree-4 invariant tensor -> reduced two-form (pi_n)
//   e_kn       generator sum_i [p_i ^ q_i] repeated across k slots (e_kn)
//   xi         alternating polygon trace on k-fold wedge data (xi)

namespace ribbon {

// Basis encoding for the rank-n symplectic space: indices 0..n-1 are
// p_1..p_n and indices n..2n-1 are q_1..q_n, so index a pairs with a+n.
struct SymplecticSpace {
    int n = 0;

    explicit SymplecticSpace(int rank) : n(rank) {
        if (rank < 1) throw std::invalid_argument("SymplecticSpace rank must be positive");
    }

    int dimension() const { return 2 * n; }

    bool contains(int index) const { return index >= 0 && index < 2 * n; }

    // Skew pairing on basis vectors: omega(p_i, q_i) = 1 = -omega(q_i, p_i),
    // zero on every other basis pair.
    int omega(int a, int b) const {
        if (!contains(a) || !contains(b)) throw std::out_of_range("basis index out of range");
        if (b == a + n) return 1;
        if (a == b + n) return -1;
        return 0;
    }
};

// Sparse element of the degree-fold tensor power of the rank-n space. Terms
// map basis words (vectors of basis indices, length == degree) to rational
// coefficients; zero coefficients are never stored. Degree 0 holds scalars
// as the coefficient of the empty word.
class TensorElement {
public:
    using Word = std::vector<int>;

    TensorElement(int rank, int degree) : n_(rank), degree_(degree) {
        if (rank < 1) throw std::invalid_argument("TensorElement rank must be positive");
        if (degree < 0) throw std::invalid_argument("TensorElement degree must be nonnegative");
    }

    static TensorElement basis(int rank, const Word& word) {
        TensorElement t(rank, static_cast<int>(word.size()));
        t.add(word, 1);
        return t;
    }

    int rank() const { return n_; }
    int degree() const { return degree_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Word& word) const {
        auto it = terms_.find(word);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Word& word, const Rational& coeff) {
        if (static_cast<int>(word.size()) != degree_)
            throw std::invalid_argument("word length does not match tensor degree");
        for (int letter : word)
            if (letter < 0 || letter >= 2 * n_)
                throw std::invalid_argument("basis index out of range for tensor rank");
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(word, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        if (a.n_ != b.n_ || a.degree_ != b.degree_)
            throw std::invalid_argument("tensor sum requires matching rank and degree");
        TensorElement out = a;
        for (const auto& [word, coeff] : b.terms_) out.add(word, coeff);
        return out;
    }

    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) {
        return a + (-1) * b;
    }

    friend TensorElement operator*(const Rational& scalar, const TensorElement& a) {
        TensorElement out(a.n_, a.degree_);
        if (scalar == 0) return out;
        for (const auto& [word, coeff] : a.terms_) out.terms_.emplace(word, scalar * coeff);
        return out;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    int degree_;
    std::map<Word, Rational> terms_;
};

// Pair slots i and j (1-based, i < j) with the symplectic form and delete
// them, keeping the remaining slots in order: degree drops by two.
inline TensorElement contraction(const TensorElement& x, int i, int j) {
    if (i < 1 || j > x.degree() || i >= j) throw std::out_of_range("contraction slots out of range");
    SymplecticSpace space(x.rank());
    TensorElement out(x.rank(), x.degree() - 2);
    for (const auto& [word, coeff] : x.terms()) {
        int om = space.omega(word[i - 1], word[j - 1]);
        if (om == 0) continue;
        TensorElement::Word rest;
        rest.reserve(word.size() - 2);
        for (int s = 0; s < static_cast<int>(word.size()); ++s)
            if (s != i - 1 && s != j - 1) rest.push_back(word[s]);
        out.add(rest, om * coeff);
    }
    return out;
}

// Average over all cyclic rotations of the slots. Idempotent; fixes exactly
// the cyclically invariant tensors. Degrees 0 and 1 are returned unchanged.
inline TensorElement cyclic_project(const TensorElement& x) {
    if (x.degree() <= 1) return x;
    int len = x.degree();
    TensorElement out(x.rank(), len);
    Rational share(1, len);
    TensorElement::Word rotated(len);
    for (const auto& [word, coeff] : x.terms()) {
        for (int r = 0; r < len; ++r) {
            for (int s = 0; s < len; ++s) rotated[s] = word[(s + r) % len];
            out.add(rotated, share * coeff);
        }
    }
    return out;
}

inline bool is_cyclic_invariant(const TensorElement& x) { return cyclic_project(x) == x; }

// Lie bracket on cyclically invariant tensors. Every slot of u is paired
// against every slot of w with the symplectic form; the surviving slots are
// spliced into a single word (remainder of u starting after the paired slot,
// then remainder of w likewise) and the total is cyclically projected.
//
// The final projection is the averaging one. With rotation sums instead of
// averages the Jacobi identity fails for arguments of unequal degree, because
// each nested bracket would then pick up a factor of its own result length;
// the exhaustive low-degree Jacobi test pins this normalization down.
inline TensorElement bracket(const TensorElement& u, const TensorElement& w) {
    if (u.rank() != w.rank()) throw std::invalid_argument("bracket requires matching rank");
    if (u.degree() < 1 || w.degree() < 1)
        throw std::invalid_argument("bracket requires tensors of degree at least 1");
    if (!is_cyclic_invariant(u) || !is_cyclic_invariant(w))
        throw std::invalid_argument("bracket requires cyclically invariant arguments");
    SymplecticSpace space(u.rank());
    int a = u.degree();
    int b = w.degree();
    TensorElement out(u.rank(), a + b - 2);
    TensorElement::Word glued;
    glued.reserve(a + b - 2);
    for (const auto& [uw, cu] : u.terms()) {
        for (const auto& [ww, cw] : w.terms()) {
            Rational prod = cu * cw;
            for (int r = 0; r < a; ++r) {
                for (int s = 0; s < b; ++s) {
                    int om = space.omega(uw[r], ww[s]);
                    if (om == 0) continue;
                    glued.clear();
                    for (int t = 1; t < a; ++t) glued.push_back(uw[(r + t) % a]);
                    for (int t = 1; t < b; ++t) glued.push_back(ww[(s + t) % b]);
                    out.add(glued, om * prod);
                }
            }
        }
    }
    return cyclic_project(out);
}

// Sparse element of the second exterior power of the rank-n space, stored on
// ordered basis pairs a < b. Adding with indices reversed flips the sign;
// equal indices contribute nothing.
class Wedge2 {
public:
    using Pair = std::pair<int, int>;

    explicit Wedge2(int rank) : n_(rank) {
        if (rank < 1) throw std::invalid_argument("Wedge2 rank must be positive");
    }

    static Wedge2 basis(int rank, int a, int b) {
        Wedge2 w(rank);
        w.add(a, b, 1);
        return w;
    }

    // The standard form omega0 = sum_i p_i ^ q_i.
    static Wedge2 omega0(int rank) {
        Wedge2 w(rank);
        for (int i = 0; i < rank; ++i) w.add(i, rank + i, 1);
        return w;
    }

    int rank() const { return n_; }
    const std::map<Pair, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int a, int b, const Rational& coeff) {
        if (a < 0 || a >= 2 * n_ || b < 0 || b >= 2 * n_)
            throw std::invalid_argument("basis index out of range for wedge rank");
        if (a == b || coeff == 0) return;
        Rational c = coeff;
        if (a > b) {
            std::swap(a, b);
            c = -c;
        }
        auto [it, inserted] = terms_.try_emplace(Pair{a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Signed coefficient: coefficient(b, a) == -coefficient(a, b).
    Rational coefficient(int a, int b) const {
        if (a == b) return 0;
        bool flip = a > b;
        if (flip) std::swap(a, b);
        auto it = terms_.find(Pair{a, b});
        if (it == terms_.end()) return 0;
        return flip ? -it->second : it->second;
    }

    friend Wedge2 operator+(const Wedge2& x, const Wedge2& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("wedge sum requires matching rank");
        Wedge2 out = x;
        for (const auto& [pair, coeff] : y.terms_) out.add(pair.first, pair.second, coeff);
        return out;
    }

    friend Wedge2 operator-(const Wedge2& x, const Wedge2& y) { return x + (-1) * y; }

    friend Wedge2 operator*(const Rational& scalar, const Wedge2& x) {
        Wedge2 out(x.n_);
        if (scalar == 0) return out;
        for (const auto& [pair, coeff] : x.terms_) out.terms_.emplace(pair, scalar * coeff);
        return out;
    }

    friend bool operator==(const Wedge2& x, const Wedge2& y) {
        return x.n_ == y.n_ && x.terms_ == y.terms_;
    }

private:
    int n_;
    std::map<Pair, Rational> terms_;
};

// Representative of a two-form modulo the line spanned by omega0: subtract
// off the p_n ^ q_n coefficient against omega0, fixing the complement where
// that coordinate is zero. Idempotent, and constant on omega0-cosets.
inline Wedge2 reduce_mod_omega0(const Wedge2& y) {
    Rational top = y.coefficient(y.rank() - 1, 2 * y.rank() - 1);
    if (top == 0) return y;
    return y - top * Wedge2::omega0(y.rank());
}

// Send a cyclically invariant degree-4 tensor to a reduced two-form by
// h1 (x) h2 (x) h3 (x) h4 -> omega(h1, h3) h2 ^ h4 applied term by term.
inline Wedge2 pi_n(const TensorElement& x) {
    if (x.degree() != 4) throw std::invalid_argument("pi_n requires a degree-4 tensor");
    if (!is_cyclic_invariant(x))
        throw std::invalid_argument("pi_n requires a cyclically invariant tensor");
    SymplecticSpace space(x.rank());
    Wedge2 out(x.rank());
    for (const auto& [word, coeff] : x.terms()) {
        int om = space.omega(word[0], word[2]);
        if (om == 0) continue;
        out.add(word[1], word[3], om * coeff);
    }
    return reduce_mod_omega0(out);
}

// Formal rational combination of ordered k-tuples of two-form slots: the
// evaluation domain for the polygon trace pairing xi. Two constructors build
// these: wedge() antisymmetrizes its slot list, which makes every linear
// functional on the result alternating and insensitive to shifting any slot
// by a multiple of omega0; e_kn() keeps its repeated-slot generator tuples in
// their natural order, the convention under which the polygon trace returns
// its nonzero normalization on the generator instead of collapsing to zero.
class WedgeB {
public:
    using Tuple = std::pair<Rational, std::vector<Wedge2>>;

    WedgeB(int rank, int length) : n_(rank), k_(length) {
        if (rank < 1) throw std::invalid_argument("WedgeB rank must be positive");
        if (length < 1) throw std::invalid_argument("WedgeB length must be positive");
    }

    int rank() const { return n_; }
    int length() const { return k_; }
    const std::vector<Tuple>& tuples() const { return tuples_; }

    void add_tuple(const Rational& coeff, const std::vector<Wedge2>& slots) {
        if (static_cast<int>(slots.size()) != k_)
            throw std::invalid_argument("tuple length does not match wedge length");
        for (const auto& slot : slots)
            if (slot.rank() != n_) throw std::invalid_argument("slot rank does not match wedge rank");
        if (coeff == 0) return;
        tuples_.push_back({coeff, slots});
    }

private:
    int n_;
    int k_;
    std::vector<Tuple> tuples_;
};

namespace detail {

inline int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Polygon trace of an ordered slot tuple: with M_s the skew matrix of slot s
// and W the matrix of the symplectic form, returns tr(M_1 W M_2 W ... M_k W).
// Equivalently, the closed chain of contractions that pairs the right leg of
// each slot with the left leg of the next one around a k-gon. Invariant under
// cyclic rotation of the tuple and linear in each slot.
inline Rational polygon_trace(const std::vector<Wedge2>& slots) {
    if (slots.empty()) throw std::invalid_argument("polygon trace requires at least one slot");
    int n = slots.front().rank();
    int dim = 2 * n;
    SymplecticSpace space(n);
    using Matrix = std::vector<std::vector<Rational>>;
    auto slot_times_form = [&](const Wedge2& slot) {
        Matrix m(dim, std::vector<Rational>(dim, 0));
        for (const auto& [pair, coeff] : slot.terms()) {
            auto [a, b] = pair;
            // Row a of M is coeff at column b (and -coeff at row b, column a);
            // multiply by W on the right: (MW)[r][c] = sum_s M[r][s] W[s][c],
            // and W[s][c] = omega(s, c) is nonzero only at c = s -/+ n.
            for (int c = 0; c < dim; ++c) {
                int wbc = space.omega(b, c);
                if (wbc != 0) m[a][c] += coeff * wbc;
                int wac = space.omega(a, c);
                if (wac != 0) m[b][c] -= coeff * wac;
            }
        }
        return m;
    };
    Matrix acc = slot_times_form(slots.front());
    for (std::size_t s = 1; s < slots.size(); ++s) {
        Matrix next = slot_times_form(slots[s]);
        Matrix prod(dim, std::vector<Rational>(dim, 0));
        for (int r = 0; r < dim; ++r)
            for (int t = 0; t < dim; ++t) {
                if (acc[r][t] == 0) continue;
                for (int c = 0; c < dim; ++c)
                    if (next[t][c] != 0) prod[r][c] += acc[r][t] * next[t][c];
            }
        acc = std::move(prod);
    }
    Rational trace = 0;
    for (int r = 0; r < dim; ++r) trace += acc[r][r];
    return trace;
}

}  // namespace detail

// Alternating combination of the given slots: the signed average over all
// slot orderings, so the result changes sign under swapping two slots and
// vanishes when a slot repeats.
inline WedgeB wedge(const std::vector<Wedge2>& slots) {
    if (slots.empty()) throw std::invalid_argument("wedge requires at least one slot");
    int k = static_cast<int>(slots.size());
    int n = slots.front().rank();
    WedgeB out(n, k);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Rational share = 1;
    for (int i = 2; i <= k; ++i) share /= i;
    do {
        std::vector<Wedge2> arranged;
        arranged.reserve(k);
        for (int index : perm) arranged.push_back(slots[index]);
        out.add_tuple(detail::permutation_sign(perm) * share, arranged);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// The generator sum_{i=1..n} [p_i ^ q_i] placed in all k slots of one tuple
// per index i, kept in its natural slot order.
inline WedgeB e_kn(int k, int n) {
    if (k < 1) throw std::invalid_argument("e_kn requires k >= 1");
    if (n < 1) throw std::invalid_argument("e_kn requires n >= 1");
    WedgeB out(n, k);
    for (int i = 0; i < n; ++i) {
        std::vector<Wedge2> slots(k, Wedge2::basis(n, i, n + i));
        out.add_tuple(1, slots);
    }
    return out;
}

// Polygon trace pairing on k-fold wedge data, extended linearly over the
// stored tuples. Defined for k in {5, 9, 13, ...}: smaller or misaligned k
// have no nonzero alternating value and are rejected.
inline Rational xi(int k, int n, const WedgeB& w) {
    if (k < 5 || k % 4 != 1)
        throw std::invalid_argument("xi requires k >= 5 with k = 1 mod 4");
    if (w.length() != k) throw std::invalid_argument("wedge length does not match k");
    if (w.rank() != n) throw std::invalid_argument("wedge rank does not match n");
    Rational total = 0;
    for (const auto& [coeff, slots] : w.tuples()) total += coeff * detail::polygon_trace(slots);
    return total;
}

}  // namespace ribbon
