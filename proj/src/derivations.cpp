#include "gradalg/derivations.hpp"

namespace gradalg {

DerivationSpace derivations(const AlgebraRep& a) {
    const std::size_t d = a.dim;
    // Unknown D[r][c] at column r*d+c; one equation per (i,j,l):
    //   sum_k c(i,j,k) D[l][k] - (D(b_i) b_j)[l] - (b_i D(b_j))[l] = 0.
    Mat sys(a.field, d * d * d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        Mat li = a.left_mult(a.basis_vec(i));
        for (std::size_t j = 0; j < d; ++j) {
            Mat rj = a.right_mult(a.basis_vec(j));
            const std::size_t base = (i * d + j) * d;
            for (auto& [k, c] : a.prod_row(i, j))
                for (std::size_t l = 0; l < d; ++l) sys.at(base + l, l * d + k) += c;
            for (std::size_t l = 0; l < d; ++l)
                for (std::size_t r = 0; r < d; ++r) {
                    // -(R_j D)[l][i] and -(L_i D)[l][j]
                    if (!rj.at(l, r).is_zero()) sys.at(base + l, r * d + i) -= rj.at(l, r);
                    if (!li.at(l, r).is_zero()) sys.at(base + l, r * d + j) -= li.at(l, r);
                }
        }
    }
    Mat ns = mat_nullspace(sys);
    DerivationSpace out;
    for (std::size_t c = 0; c < ns.cols(); ++c) {
        Mat m(a.field, d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t cc = 0; cc < d; ++cc) m.at(r, cc) = ns.at(r * d + cc, c);
        out.basis.push_back(std::move(m));
    }
    return out;
}

DerivationSpace inner_derivations(const AlgebraRep& a) {
    const std::size_t d = a.dim;
    std::vector<std::vector<Scalar>> cols;
    for (std::size_t i = 0; i < d; ++i) {
        auto b = a.basis_vec(i);
        Mat ad = a.left_mult(b) - a.right_mult(b);
        std::vector<Scalar> flat(d * d, Scalar::zero(a.field));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) flat[r * d + c] = ad.at(r, c);
        cols.push_back(std::move(flat));
    }
    Mat basis = col_basis(Mat::from_columns(a.field, d * d, cols));
    DerivationSpace out;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
        Mat m(a.field, d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t cc = 0; cc < d; ++cc) m.at(r, cc) = basis.at(r * d + cc, c);
        out.basis.push_back(std::move(m));
    }
    return out;
}

std::size_t out_lie_dim(const AlgebraRep& a) {
    std::size_t der = derivations(a).dim();
    std::size_t inner = inner_derivations(a).dim();
    if (inner > der) throw alg_error(errc::internal, "inner derivations escape the derivation space");
    return der - inner;
}

}  // namespace gradalg
