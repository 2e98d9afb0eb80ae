#pragma once

#include "kassembly/errors.hpp"
#include "kassembly/graded_algebra.hpp"
#include "kassembly/linalg.hpp"
#include "kassembly/series.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kassembly {

// Closed-form Hochschild homology of a free graded-commutative Q-algebra on
// even generators {x_i}: the algebra Q[x_i] ⊗ E(dx_i) with |dx_i| = |x_i|+1,
// carrying the degree +1 derivation x_i ↦ dx_i, dx_i ↦ 0.
//
// basis_valid_through bounds the degrees where the generator list is
// complete; models built from a truncated infinite family set it, finite
// models leave it empty (valid everywhere).
struct HHModel {
    FreeGradedAlgebra base;
    FreeGradedAlgebra hh;
    Derivation connes;
    std::optional<int> basis_valid_through;
};

inline void require_bases(const HHModel& m, int degree, const std::string& what) {
    if (m.basis_valid_through && degree > *m.basis_valid_through) {
        std::ostringstream os;
        os << what << " needs bases through degree " << degree << ", but the model is only valid through "
           << *m.basis_valid_through;
        throw insufficient_window(os.str());
    }
}

inline HHModel hh_model(const FreeGradedAlgebra& base,
                        std::optional<int> basis_valid_through = std::nullopt) {
    std::vector<GeneratorSpec> gens;
    gens.reserve(static_cast<std::size_t>(base.generator_count()) * 2);
    for (const auto& g : base.generators()) {
        if (g.odd())
            throw unsupported_algebra("generator '" + g.name +
                                      "' has odd degree; the closed form needs even generators");
        gens.push_back(g);
        gens.push_back(GeneratorSpec{"d" + g.name, g.degree + 1});
    }
    FreeGradedAlgebra hh(std::move(gens));
    std::vector<Combination> images(static_cast<std::size_t>(hh.generator_count()));
    for (int i = 0; i < base.generator_count(); ++i) {
        Combination img;
        img.emplace(hh.generator_monomial(2 * i + 1), Rat(1));
        images[static_cast<std::size_t>(2 * i)] = std::move(img);
        // d-generators map to zero
    }
    Derivation connes(hh, std::move(images));
    return HHModel{base, std::move(hh), std::move(connes), basis_valid_through};
}

// Matrix of the Connes derivation from degree d to degree d+1, in the
// canonical per-degree bases.
inline RatMatrix b_matrix(const HHModel& m, int d) {
    require_bases(m, d + 1, "b_matrix");
    std::vector<Monomial> src = m.hh.basis(d);
    std::vector<Monomial> dst = m.hh.basis(d + 1);
    std::map<Monomial, int> row_of;
    for (int i = 0; i < static_cast<int>(dst.size()); ++i) row_of.emplace(dst[static_cast<std::size_t>(i)], i);
    RatMatrix out(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        for (const auto& [mono, coeff] : m.connes.apply(src[static_cast<std::size_t>(j)])) {
            auto it = row_of.find(mono);
            if (it == row_of.end())
                throw std::logic_error("derivation image escaped the expected degree");
            out.at(it->second, j) = coeff;
        }
    }
    return out;
}

namespace detail {

struct DegreeData {
    std::vector<int> hh_dim; // |basis(hh, d)|, d = 0..D
    std::vector<int> b_rank; // rank of b_matrix at d, d = 0..D
};

inline DegreeData degree_data(const HHModel& m, int max_degree) {
    require_bases(m, max_degree + 1, "rank computation");
    DegreeData out;
    out.hh_dim.reserve(static_cast<std::size_t>(max_degree) + 1);
    out.b_rank.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        RatMatrix b = b_matrix(m, d);
        out.hh_dim.push_back(b.cols());
        out.b_rank.push_back(rank(b));
    }
    return out;
}

} // namespace detail

// Nullity of b_matrix in each degree 0..max_degree.
inline std::vector<int> kernel_dims(const HHModel& m, int max_degree) {
    detail::DegreeData data = detail::degree_data(m, max_degree);
    std::vector<int> out(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d)
        out[static_cast<std::size_t>(d)] =
            data.hh_dim[static_cast<std::size_t>(d)] - data.b_rank[static_cast<std::size_t>(d)];
    return out;
}

// Rank of b_matrix out of each degree 0..max_degree (the image sits in d+1).
inline std::vector<int> image_dims(const HHModel& m, int max_degree) {
    return detail::degree_data(m, max_degree).b_rank;
}

// ker(B)/im(B) per degree; the image landing in degree d is the rank at d-1.
inline std::vector<int> derham_dims(const HHModel& m, int max_degree) {
    detail::DegreeData data = detail::degree_data(m, max_degree);
    std::vector<int> out(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        int ker = data.hh_dim[static_cast<std::size_t>(d)] - data.b_rank[static_cast<std::size_t>(d)];
        int im = d > 0 ? data.b_rank[static_cast<std::size_t>(d - 1)] : 0;
        out[static_cast<std::size_t>(d)] = ker - im;
    }
    return out;
}

inline TruncatedSeries hh_series(const HHModel& m, int cutoff) {
    require_bases(m, cutoff, "hh_series");
    return m.hh.poincare_series(cutoff);
}

inline TruncatedSeries kernel_series(const HHModel& m, int cutoff) {
    std::vector<int> dims = kernel_dims(m, cutoff);
    std::vector<Rat> coeffs(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) coeffs[i] = dims[i];
    return TruncatedSeries(cutoff, std::move(coeffs));
}

inline TruncatedSeries positive_kernel_series(const HHModel& m, int cutoff) {
    return kernel_series(m, cutoff).positive_part();
}

// Per-degree summary; im_dim is the image dimension inside this degree, so
// derham_dim = kernel_dim - im_dim row by row.
struct DegreeRow {
    int degree = 0;
    int hh_dim = 0;
    int kernel_dim = 0;
    int im_dim = 0;
    int derham_dim = 0;
};

inline std::vector<DegreeRow> degree_table(const HHModel& m, int max_degree) {
    detail::DegreeData data = detail::degree_data(m, max_degree);
    std::vector<DegreeRow> out;
    out.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        DegreeRow row;
        row.degree = d;
        row.hh_dim = data.hh_dim[static_cast<std::size_t>(d)];
        row.kernel_dim = row.hh_dim - data.b_rank[static_cast<std::size_t>(d)];
        row.im_dim = d > 0 ? data.b_rank[static_cast<std::size_t>(d - 1)] : 0;
        row.derham_dim = row.kernel_dim - row.im_dim;
        out.push_back(row);
    }
    return out;
}

inline std::string degree_table_tsv(const std::vector<DegreeRow>& rows) {
    std::ostringstream os;
    os << "degree\thh-dim\tker\tim\tde Rham\n";
    for (const auto& r : rows)
        os << r.degree << '\t' << r.hh_dim << '\t' << r.kernel_dim << '\t' << r.im_dim << '\t'
           << r.derham_dim << '\n';
    return os.str();
}

struct ImKerReport {
    int max_degree = 0;
    std::vector<int> kernel_dims; // degrees 1..max_degree
    std::vector<int> image_dims;  // image inside degrees 1..max_degree
    bool all_equal = false;
};

// Checks im(B) = ker(B) dimensionwise in every positive degree 1..max_degree.
inline ImKerReport im_equals_ker_positive(const HHModel& m, int max_degree) {
    detail::DegreeData data = detail::degree_data(m, max_degree);
    ImKerReport rep;
    rep.max_degree = max_degree;
    rep.all_equal = true;
    for (int d = 1; d <= max_degree; ++d) {
        int ker = data.hh_dim[static_cast<std::size_t>(d)] - data.b_rank[static_cast<std::size_t>(d)];
        int im = data.b_rank[static_cast<std::size_t>(d - 1)];
        rep.kernel_dims.push_back(ker);
        rep.image_dims.push_back(im);
        if (ker != im) rep.all_equal = false;
    }
    return rep;
}

// Truncated second-page computation for the tower interpolating between
// ker(B) and de Rham homology: the page is Q[t] ⊗ HH_{>0} with differential
// t^i·x ↦ t^{i+1}·B(x), filtration column i pairing with internal degree
// n = d + 2i at total degree d. The third page has, per column and degree,
//   column 0:   ker(B) ∩ HH_n            (nullity of B at n)
//   column i>0: ker(B)/im(B) at degree n (nullity at n minus rank at n-1)
// and the check asserts column 0 reproduces the positive-degree kernel
// dimensions while every higher column vanishes.
struct CollapseReport {
    int max_degree = 0; // total degrees 1..max_degree
    int max_column = 0; // columns 0..max_column
    std::vector<std::vector<int>> dims; // dims[column][degree-1]
    bool column0_matches_kernel = false;
    bool positive_columns_vanish = false;

    bool passed() const { return column0_matches_kernel && positive_columns_vanish; }
};

inline CollapseReport collapse_check(const HHModel& m, int max_degree, int max_column) {
    if (max_degree < 1 || max_column < 0)
        throw std::invalid_argument("collapse_check: need max_degree >= 1 and max_column >= 0");
    const int top_internal = max_degree + 2 * max_column;
    require_bases(m, top_internal + 2, "collapse_check");

    detail::DegreeData data = detail::degree_data(m, top_internal + 1);
    auto nullity = [&data](int n) {
        return data.hh_dim[static_cast<std::size_t>(n)] - data.b_rank[static_cast<std::size_t>(n)];
    };

    // The differential squares to zero; fail loudly if the model ever breaks that.
    for (int n = 1; n <= top_internal; ++n)
        if (!(b_matrix(m, n) * b_matrix(m, n - 1)).is_zero())
            throw std::logic_error("B composed with B is nonzero");

    CollapseReport rep;
    rep.max_degree = max_degree;
    rep.max_column = max_column;
    rep.dims.assign(static_cast<std::size_t>(max_column) + 1,
                    std::vector<int>(static_cast<std::size_t>(max_degree), 0));
    for (int i = 0; i <= max_column; ++i) {
        for (int d = 1; d <= max_degree; ++d) {
            const int n = d + 2 * i;
            int dim = nullity(n);
            if (i > 0) dim -= data.b_rank[static_cast<std::size_t>(n - 1)];
            rep.dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)] = dim;
        }
    }

    rep.column0_matches_kernel = true;
    for (int d = 1; d <= max_degree; ++d)
        if (rep.dims[0][static_cast<std::size_t>(d - 1)] != nullity(d)) rep.column0_matches_kernel = false;
    rep.positive_columns_vanish = true;
    for (int i = 1; i <= max_column; ++i)
        for (int d = 1; d <= max_degree; ++d)
            if (rep.dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)] != 0)
                rep.positive_columns_vanish = false;
    return rep;
}

} // namespace kassembly
