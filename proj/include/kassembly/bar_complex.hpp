#pragma once

#include "kassembly/errors.hpp"
#include "kassembly/graded_algebra.hpp"
#include "kassembly/linalg.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kassembly {

// Word a0 ⊗ a1 ⊗ ... ⊗ an of the normalized Hochschild complex: the head a0
// is any basis monomial, tail letters have positive internal degree. Total
// degree is homological degree n plus the sum of internal degrees.
struct BarWord {
    Monomial head;
    std::vector<Monomial> tail;

    int homological_degree() const { return static_cast<int>(tail.size()); }

    int total_degree() const {
        int d = head.degree() + homological_degree();
        for (const auto& m : tail) d += m.degree();
        return d;
    }

    friend bool operator==(const BarWord&, const BarWord&) = default;
    friend auto operator<=>(const BarWord&, const BarWord&) = default;
};

using BarChain = std::map<BarWord, Rat>;

inline void add_term(BarChain& c, const BarWord& w, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

// All normalized words of the given total degree, ordered by homological
// degree and then lexicographically. Finite because every generator has
// degree >= 2, so each tail letter costs at least 3.
inline std::vector<BarWord> bar_basis(const FreeGradedAlgebra& a, int total_degree) {
    for (const auto& g : a.generators())
        if (g.degree < 2)
            throw unbounded_basis("generator '" + g.name +
                                  "' has degree 1; bar words of bounded degree would be infinite");
    std::vector<BarWord> out;
    if (total_degree < 0) return out;

    std::vector<Monomial> tail;
    auto extend = [&](auto&& self, const Monomial& head, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(BarWord{head, tail});
            return;
        }
        // Next tail letter of internal degree k consumes k+1.
        for (int k = 1; k + 1 <= remaining; ++k) {
            for (const Monomial& m : a.basis(k)) {
                tail.push_back(m);
                self(self, head, remaining - k - 1);
                tail.pop_back();
            }
        }
    };
    for (int k0 = 0; k0 <= total_degree; ++k0)
        for (const Monomial& head : a.basis(k0)) extend(extend, head, total_degree - k0);

    std::sort(out.begin(), out.end(), [](const BarWord& x, const BarWord& y) {
        if (x.homological_degree() != y.homological_degree())
            return x.homological_degree() < y.homological_degree();
        return x < y;
    });
    return out;
}

// Hochschild boundary: the alternating sum of adjacent multiplications
//   d_i(a0 ⊗ ... ⊗ an) = a0 ⊗ ... ⊗ a_i·a_{i+1} ⊗ ... ⊗ an,  sign (-1)^i,
// plus the cyclic face multiplying an into a0 with sign
//   (-1)^n · (-1)^{|an|·(|a0|+...+|a_{n-1}|)}.
// Products contribute their own Koszul sign; zero products drop out. Internal
// degree is preserved and one suspension is lost, so total degree drops by 1.
inline BarChain b_boundary(const FreeGradedAlgebra& a, const BarWord& w) {
    BarChain out;
    const int n = w.homological_degree();
    if (n == 0) return out;

    for (int i = 0; i < n; ++i) {
        const Monomial& left = i == 0 ? w.head : w.tail[static_cast<std::size_t>(i - 1)];
        const Monomial& right = w.tail[static_cast<std::size_t>(i)];
        SignedMonomial p = a.multiply(left, right);
        if (p.is_zero()) continue;
        BarWord nw;
        if (i == 0) {
            nw.head = p.value;
            nw.tail.assign(w.tail.begin() + 1, w.tail.end());
        } else {
            nw.head = w.head;
            nw.tail.assign(w.tail.begin(), w.tail.end());
            nw.tail[static_cast<std::size_t>(i - 1)] = p.value;
            nw.tail.erase(nw.tail.begin() + i);
        }
        int sgn = (i % 2 == 0 ? 1 : -1) * p.sign;
        add_term(out, nw, Rat(sgn));
    }

    SignedMonomial p = a.multiply(w.tail[static_cast<std::size_t>(n - 1)], w.head);
    if (!p.is_zero()) {
        long rot = static_cast<long>(w.tail[static_cast<std::size_t>(n - 1)].degree()) * w.head.degree();
        for (int j = 0; j + 1 < n; ++j)
            rot += static_cast<long>(w.tail[static_cast<std::size_t>(n - 1)].degree()) *
                   w.tail[static_cast<std::size_t>(j)].degree();
        int sgn = ((n + rot) % 2 == 0 ? 1 : -1) * p.sign;
        BarWord nw;
        nw.head = p.value;
        nw.tail.assign(w.tail.begin(), w.tail.end() - 1);
        add_term(out, nw, Rat(sgn));
    }
    return out;
}

inline BarChain b_boundary(const FreeGradedAlgebra& a, const BarChain& c) {
    BarChain out;
    for (const auto& [w, coeff] : c)
        for (const auto& [w2, c2] : b_boundary(a, w)) add_term(out, w2, coeff * c2);
    return out;
}

// Connes boundary: for each cyclic rotation, insert the unit in slot zero,
//   a0 ⊗ ... ⊗ an  ↦  Σ_i ± 1 ⊗ a_i ⊗ ... ⊗ an ⊗ a0 ⊗ ... ⊗ a_{i-1},
// with sign (-1)^{i·n} times the Koszul sign of moving the block
// a0..a_{i-1} past a_i..a_n. Words whose head is the unit die (the rotated
// head would become a unit tail letter, which normalization kills).
inline BarChain connes_boundary(const FreeGradedAlgebra& a, const BarWord& w) {
    BarChain out;
    if (w.head.is_unit()) return out;
    const int n = w.homological_degree();

    std::vector<const Monomial*> letters;
    letters.reserve(static_cast<std::size_t>(n) + 1);
    letters.push_back(&w.head);
    for (const auto& m : w.tail) letters.push_back(&m);

    long pre = 0, post = 0;
    for (const auto* m : letters) post += m->degree();

    for (int i = 0; i <= n; ++i) {
        long sgn_exp = static_cast<long>(i) * n + pre * post;
        BarWord nw;
        nw.head = a.unit();
        nw.tail.reserve(static_cast<std::size_t>(n) + 1);
        for (int j = i; j <= n; ++j) nw.tail.push_back(*letters[static_cast<std::size_t>(j)]);
        for (int j = 0; j < i; ++j) nw.tail.push_back(*letters[static_cast<std::size_t>(j)]);
        add_term(out, nw, Rat(sgn_exp % 2 == 0 ? 1 : -1));
        pre += letters[static_cast<std::size_t>(i)]->degree();
        post -= letters[static_cast<std::size_t>(i)]->degree();
    }
    return out;
}

inline BarChain connes_boundary(const FreeGradedAlgebra& a, const BarChain& c) {
    BarChain out;
    for (const auto& [w, coeff] : c)
        for (const auto& [w2, c2] : connes_boundary(a, w)) add_term(out, w2, coeff * c2);
    return out;
}

inline BarChain b_diff(const FreeGradedAlgebra& a, const BarChain& c) { return b_boundary(a, c); }

inline BarChain connes_B_diff(const FreeGradedAlgebra& a, const BarChain& c) {
    return connes_boundary(a, c);
}

namespace detail {

inline RatMatrix chain_map_matrix(const std::vector<BarWord>& src, const std::vector<BarWord>& dst,
                                  const std::vector<BarChain>& images) {
    std::map<BarWord, int> row_of;
    for (int i = 0; i < static_cast<int>(dst.size()); ++i) row_of.emplace(dst[static_cast<std::size_t>(i)], i);
    RatMatrix out(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        for (const auto& [w, coeff] : images[static_cast<std::size_t>(j)]) {
            auto it = row_of.find(w);
            if (it == row_of.end()) throw std::logic_error("bar image escaped the expected degree");
            out.at(it->second, j) = coeff;
        }
    }
    return out;
}

} // namespace detail

// Matrix of b from total degree d to total degree d-1.
inline RatMatrix bar_b_matrix(const FreeGradedAlgebra& a, int d) {
    std::vector<BarWord> src = bar_basis(a, d);
    std::vector<BarWord> dst = bar_basis(a, d - 1);
    std::vector<BarChain> images;
    images.reserve(src.size());
    for (const auto& w : src) images.push_back(b_boundary(a, w));
    return detail::chain_map_matrix(src, dst, images);
}

// Matrix of B from total degree d to total degree d+1.
inline RatMatrix bar_connes_matrix(const FreeGradedAlgebra& a, int d) {
    std::vector<BarWord> src = bar_basis(a, d);
    std::vector<BarWord> dst = bar_basis(a, d + 1);
    std::vector<BarChain> images;
    images.reserve(src.size());
    for (const auto& w : src) images.push_back(connes_boundary(a, w));
    return detail::chain_map_matrix(src, dst, images);
}

struct OracleReport {
    int max_degree = 0;
    std::vector<int> chain_dims;      // |bar_basis(d)|, d = 0..max_degree
    std::vector<int> homology_dims;   // d = 0..max_degree
    std::vector<int> induced_b_ranks; // rank of B on homology, d = 0..max_degree-1
    bool identities_hold = false;     // b² = 0, B² = 0, bB + Bb = 0
    bool induced_well_defined = false; // B(boundaries) ⊆ boundaries
};

// Brute-force Hochschild homology through the given total degree, plus the
// rank of the induced Connes operator on homology. Works two degrees past
// max_degree internally so every composite identity is checked on honest
// matrices.
inline OracleReport hh_via_bar(const FreeGradedAlgebra& a, int max_degree) {
    const int top = max_degree + 2;
    std::vector<std::vector<BarWord>> bases;
    bases.reserve(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) bases.push_back(bar_basis(a, d));

    // b[d]: C(d) -> C(d-1); B[d]: C(d) -> C(d+1).
    std::vector<RatMatrix> b(static_cast<std::size_t>(top) + 1);
    std::vector<RatMatrix> B(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        std::vector<BarChain> bimg, Bimg;
        bimg.reserve(bases[static_cast<std::size_t>(d)].size());
        Bimg.reserve(bases[static_cast<std::size_t>(d)].size());
        for (const auto& w : bases[static_cast<std::size_t>(d)]) {
            bimg.push_back(b_boundary(a, w));
            Bimg.push_back(connes_boundary(a, w));
        }
        std::vector<BarWord> below = d == 0 ? std::vector<BarWord>{} : bases[static_cast<std::size_t>(d - 1)];
        b[static_cast<std::size_t>(d)] =
            detail::chain_map_matrix(bases[static_cast<std::size_t>(d)], below, bimg);
        if (d < top)
            B[static_cast<std::size_t>(d)] = detail::chain_map_matrix(
                bases[static_cast<std::size_t>(d)], bases[static_cast<std::size_t>(d + 1)], Bimg);
    }

    OracleReport rep;
    rep.max_degree = max_degree;
    rep.identities_hold = true;
    for (int d = 0; d <= top; ++d) {
        if (d >= 1 && !(b[static_cast<std::size_t>(d - 1)] * b[static_cast<std::size_t>(d)]).is_zero())
            rep.identities_hold = false;
        if (d + 1 < top && !(B[static_cast<std::size_t>(d + 1)] * B[static_cast<std::size_t>(d)]).is_zero())
            rep.identities_hold = false;
        if (d + 1 <= top && d < top) {
            // bB + Bb: C(d) -> C(d), with B on C(d-1) absent at d = 0.
            RatMatrix sum = b[static_cast<std::size_t>(d + 1)] * B[static_cast<std::size_t>(d)];
            if (d >= 1) {
                RatMatrix other = B[static_cast<std::size_t>(d - 1)] * b[static_cast<std::size_t>(d)];
                for (int i = 0; i < sum.rows(); ++i)
                    for (int j = 0; j < sum.cols(); ++j) sum.at(i, j) += other.at(i, j);
            }
            if (!sum.is_zero()) rep.identities_hold = false;
        }
    }

    std::vector<int> b_rank(static_cast<std::size_t>(top) + 1, 0);
    for (int d = 0; d <= top; ++d) b_rank[static_cast<std::size_t>(d)] = rank(b[static_cast<std::size_t>(d)]);

    for (int d = 0; d <= max_degree; ++d) {
        int dim = static_cast<int>(bases[static_cast<std::size_t>(d)].size());
        rep.chain_dims.push_back(dim);
        // cycles = dim - rank(b out of d); boundaries = rank(b into d).
        rep.homology_dims.push_back(dim - b_rank[static_cast<std::size_t>(d)] -
                                    b_rank[static_cast<std::size_t>(d + 1)]);
    }

    rep.induced_well_defined = true;
    for (int d = 0; d + 1 <= max_degree; ++d) {
        const RatMatrix& Bd = B[static_cast<std::size_t>(d)];
        RatMatrix cycles = nullspace(b[static_cast<std::size_t>(d)]);
        RatMatrix b_cycles = Bd * cycles;
        const RatMatrix& bnd = b[static_cast<std::size_t>(d + 2)]; // image spans boundaries in degree d+1
        int rank_bnd = b_rank[static_cast<std::size_t>(d + 2)];
        int rank_together = rank(hconcat(b_cycles, bnd));
        rep.induced_b_ranks.push_back(rank_together - rank_bnd);
        // Well-definedness: B of a boundary must again be a boundary.
        RatMatrix b_boundaries = Bd * b[static_cast<std::size_t>(d + 1)];
        if (rank(hconcat(b_boundaries, bnd)) != rank_bnd) rep.induced_well_defined = false;
    }
    return rep;
}

} // namespace kassembly
