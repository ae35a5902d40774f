#include "gradalg/grading.hpp"

#include <sstream>

namespace gradalg {

ValidationReport validate_grading(const AlgebraRep& a, const Grading& g) {
    ValidationReport rep;
    if (g.size() != a.dim) {
        rep.violations.push_back("grading has wrong length");
        return rep;
    }
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (auto& [k, c] : a.prod_row(i, j)) {
                (void)c;
                if (g[k] != g[i] + g[j]) {
                    std::ostringstream os;
                    os << "homogeneity fails at (" << i << "," << j << "," << k << "): " << g[i] << "+" << g[j]
                       << " != " << g[k];
                    rep.violations.push_back(os.str());
                    if (rep.violations.size() > 64) return rep;
                }
            }
    for (std::size_t k = 0; k < a.dim; ++k)
        if (!a.unit[k].is_zero() && g[k] != 0)
            rep.violations.push_back("unit has a component of degree " + std::to_string(g[k]) + " at basis " +
                                     std::to_string(k));
    return rep;
}

void require_valid_grading(const AlgebraRep& a, const Grading& g) {
    ValidationReport rep = validate_grading(a, g);
    if (!rep.ok()) throw alg_error(errc::invalid_grading, rep.violations.front());
}

Grading trivial_grading(const AlgebraRep& a) { return Grading(a.dim, 0); }

DegreeProfile degree_profile(const AlgebraRep& a, const Grading& g) {
    require_valid_grading(a, g);
    if (a.dim == 0) throw alg_error(errc::validation_error, "degree profile of the zero algebra");
    DegreeProfile p;
    for (std::size_t k = 0; k < a.dim; ++k) p.dims[g[k]]++;
    p.min_degree = p.dims.begin()->first;
    p.max_degree = p.dims.rbegin()->first;
    return p;
}

DegreeZeroPart degree_zero_part(const AlgebraRep& a, const Grading& g) {
    require_valid_grading(a, g);
    DegreeZeroPart out;
    std::vector<long> back(a.dim, -1);
    for (std::size_t k = 0; k < a.dim; ++k)
        if (g[k] == 0) {
            back[k] = static_cast<long>(out.basis_index.size());
            out.basis_index.push_back(k);
        }
    const std::size_t d0 = out.basis_index.size();
    AlgebraRep& sub = out.algebra;
    sub.field = a.field;
    sub.dim = d0;
    sub.table.resize(d0 * d0);
    for (std::size_t i = 0; i < d0; ++i) {
        sub.basis_labels.push_back(a.basis_labels[out.basis_index[i]]);
        for (std::size_t j = 0; j < d0; ++j) {
            SparseVec row;
            for (auto& [k, c] : a.prod_row(out.basis_index[i], out.basis_index[j])) {
                if (back[k] < 0) throw alg_error(errc::internal, "degree-zero part not closed");
                row.emplace_back(static_cast<std::size_t>(back[k]), c);
            }
            sub.table[i * d0 + j] = std::move(row);
        }
    }
    sub.unit.assign(d0, Scalar::zero(a.field));
    for (std::size_t k = 0; k < a.dim; ++k)
        if (!a.unit[k].is_zero()) {
            if (back[k] < 0) throw alg_error(errc::invalid_grading, "unit not supported in degree 0");
            sub.unit[back[k]] = a.unit[k];
        }
    if (a.idempotents) {
        std::vector<std::pair<std::string, std::vector<Scalar>>> idems;
        for (auto& [label, vec] : *a.idempotents) {
            std::vector<Scalar> v(d0, Scalar::zero(a.field));
            for (std::size_t k = 0; k < a.dim; ++k)
                if (!vec[k].is_zero()) {
                    if (back[k] < 0)
                        throw alg_error(errc::invalid_grading, "idempotent '" + label + "' not supported in degree 0");
                    v[back[k]] = vec[k];
                }
            idems.emplace_back(label, std::move(v));
        }
        sub.idempotents = std::move(idems);
    }
    return out;
}

std::pair<AlgebraRep, Grading> associated_graded(const AlgebraRep& a) {
    RadicalSeries rs = radical_series(a);
    const std::size_t layers = rs.powers.size() - 1;  // indices 0..layers-1 carry content

    // Per layer: representatives extending a basis of J^{m+1} to J^m.
    std::vector<Mat> reps(layers, Mat(a.field, a.dim, 0));
    std::vector<std::size_t> layer_offset(layers + 1, 0);
    for (std::size_t m = 0; m < layers; ++m) {
        IncrementalSpan span(a.field, a.dim);
        const Mat& next = rs.powers[m + 1];
        for (std::size_t c = 0; c < next.cols(); ++c) span.insert(next.column(c));
        std::vector<std::vector<Scalar>> chosen;
        const Mat& cur = rs.powers[m];
        for (std::size_t c = 0; c < cur.cols(); ++c) {
            auto v = cur.column(c);
            if (span.insert(v)) chosen.push_back(v);
        }
        reps[m] = Mat::from_columns(a.field, a.dim, chosen);
    }
    for (std::size_t m = 0; m < layers; ++m) layer_offset[m + 1] = layer_offset[m] + reps[m].cols();
    const std::size_t dim = layer_offset[layers];
    if (dim != a.dim) throw alg_error(errc::internal, "associated graded dimension mismatch");

    // Coordinates of w in J^m relative to [reps_m | J^{m+1}], first block only.
    auto layer_coords = [&](std::size_t m, const std::vector<Scalar>& w) {
        Mat sys = reps[m].hcat(rs.powers[m + 1]);
        auto x = mat_solve_vec(sys, w);
        if (!x) throw alg_error(errc::internal, "element missing from its radical layer");
        std::vector<Scalar> out(reps[m].cols(), Scalar::zero(a.field));
        for (std::size_t c = 0; c < reps[m].cols(); ++c) out[c] = (*x)[c];
        return out;
    };

    AlgebraRep gr;
    gr.field = a.field;
    gr.dim = dim;
    gr.table.resize(dim * dim);
    Grading deg(dim, 0);
    for (std::size_t m = 0; m < layers; ++m)
        for (std::size_t c = 0; c < reps[m].cols(); ++c) {
            gr.basis_labels.push_back("gr" + std::to_string(m) + "_" + std::to_string(c));
            deg[layer_offset[m] + c] = static_cast<long>(m);
        }

    for (std::size_t mi = 0; mi < layers; ++mi)
        for (std::size_t ci = 0; ci < reps[mi].cols(); ++ci)
            for (std::size_t mj = 0; mj < layers; ++mj) {
                if (mi + mj >= layers) continue;  // product lands in J^N = 0
                for (std::size_t cj = 0; cj < reps[mj].cols(); ++cj) {
                    auto w = a.mul(reps[mi].column(ci), reps[mj].column(cj));
                    auto coords = layer_coords(mi + mj, w);
                    SparseVec row;
                    for (std::size_t c = 0; c < coords.size(); ++c)
                        if (!coords[c].is_zero()) row.emplace_back(layer_offset[mi + mj] + c, coords[c]);
                    gr.table[(layer_offset[mi] + ci) * dim + (layer_offset[mj] + cj)] = std::move(row);
                }
            }

    gr.unit.assign(dim, Scalar::zero(a.field));
    {
        auto coords = layer_coords(0, a.unit);
        for (std::size_t c = 0; c < coords.size(); ++c) gr.unit[layer_offset[0] + c] = coords[c];
    }
    if (a.idempotents) {
        std::vector<std::pair<std::string, std::vector<Scalar>>> idems;
        for (auto& [label, vec] : *a.idempotents) {
            auto coords = layer_coords(0, vec);
            std::vector<Scalar> v(dim, Scalar::zero(a.field));
            for (std::size_t c = 0; c < coords.size(); ++c) v[layer_offset[0] + c] = coords[c];
            idems.emplace_back(label, std::move(v));
        }
        gr.idempotents = std::move(idems);
    }
    {
        std::vector<std::vector<Scalar>> cols;
        for (std::size_t k = layer_offset[1]; k < dim; ++k) cols.push_back(gr.basis_vec(k));
        gr.known_radical = Mat::from_columns(a.field, dim, cols);
    }
    return {std::move(gr), std::move(deg)};
}

std::optional<std::pair<std::size_t, std::size_t>> peirce_type(const AlgebraRep& a, std::size_t k) {
    const std::size_t r = a.simple_count();
    auto b = a.basis_vec(k);
    auto is_nonzero = [](const std::vector<Scalar>& v) {
        for (auto& x : v)
            if (!x.is_zero()) return true;
        return false;
    };
    std::optional<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t v = 0; v < r; ++v) {
        auto ev_b = a.mul(a.idempotent(v), b);
        if (!is_nonzero(ev_b)) continue;
        for (std::size_t w = 0; w < r; ++w) {
            auto comp = a.mul(ev_b, a.idempotent(w));
            if (!is_nonzero(comp)) continue;
            if (found || comp != b) return std::nullopt;  // spread over several components
            found = std::make_pair(v, w);
        }
    }
    return found;
}

Grading regrade_by_shifts(const AlgebraRep& a, const Grading& g, const ShiftVector& d) {
    require_valid_grading(a, g);
    const std::size_t r = a.simple_count();
    std::vector<long> shift(r, 0);
    for (std::size_t v = 0; v < r; ++v) {
        auto it = d.d.find(a.simple_label(v));
        if (it == d.d.end())
            throw alg_error(errc::validation_error, "shift vector misses simple '" + a.simple_label(v) + "'");
        shift[v] = it->second;
    }
    Grading out(a.dim, 0);
    for (std::size_t k = 0; k < a.dim; ++k) {
        auto type = peirce_type(a, k);
        if (!type)
            throw alg_error(errc::invalid_grading,
                            "basis element " + std::to_string(k) + " is not Peirce-homogeneous");
        auto [v, w] = *type;
        out[k] = g[k] + shift[w] - shift[v];
    }
    // The sign convention is locked by revalidating on every call.
    ValidationReport rep = validate_grading(a, out);
    if (!rep.ok()) throw alg_error(errc::internal, "regraded algebra fails validation: " + rep.violations.front());
    return out;
}

}  // namespace gradalg
