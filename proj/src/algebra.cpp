#include "gradalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gradalg {

Scalar AlgebraRep::structure(std::size_t i, std::size_t j, std::size_t k) const {
    for (auto& [m, c] : prod_row(i, j))
        if (m == k) return c;
    return Scalar::zero(field);
}

std::vector<Scalar> AlgebraRep::basis_vec(std::size_t i) const {
    auto v = zero_vec();
    v[i] = Scalar::one(field);
    return v;
}

std::vector<Scalar> AlgebraRep::mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    if (x.size() != dim || y.size() != dim) throw alg_error(errc::shape_error, "algebra mul");
    auto r = zero_vec();
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar f = x[i] * y[j];
            for (auto& [k, c] : prod_row(i, j)) r[k] += f * c;
        }
    }
    return r;
}

Mat AlgebraRep::left_mult(const std::vector<Scalar>& x) const {
    Mat m(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (auto& [k, c] : prod_row(i, j)) m.at(k, j) += x[i] * c;
        }
    }
    return m;
}

Mat AlgebraRep::right_mult(const std::vector<Scalar>& x) const {
    Mat m(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (x[j].is_zero()) continue;
            for (auto& [k, c] : prod_row(i, j)) m.at(k, i) += x[j] * c;
        }
    }
    return m;
}

std::size_t AlgebraRep::simple_count() const {
    if (!idempotents) throw alg_error(errc::missing_idempotents, "algebra has no idempotent data");
    return idempotents->size();
}

const std::vector<Scalar>& AlgebraRep::idempotent(std::size_t v) const {
    if (!idempotents) throw alg_error(errc::missing_idempotents, "algebra has no idempotent data");
    return (*idempotents)[v].second;
}

const std::string& AlgebraRep::simple_label(std::size_t v) const {
    if (!idempotents) throw alg_error(errc::missing_idempotents, "algebra has no idempotent data");
    return (*idempotents)[v].first;
}

AlgebraRep AlgebraRep::from_dense(FieldDesc fd, std::vector<std::string> labels,
                                  const std::vector<Scalar>& dense, std::vector<Scalar> unit) {
    AlgebraRep a;
    a.field = fd;
    a.dim = labels.size();
    a.basis_labels = std::move(labels);
    if (dense.size() != a.dim * a.dim * a.dim) throw alg_error(errc::shape_error, "dense table size");
    a.table.resize(a.dim * a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            SparseVec row;
            for (std::size_t k = 0; k < a.dim; ++k) {
                const Scalar& c = dense[(i * a.dim + j) * a.dim + k];
                if (!c.is_zero()) row.emplace_back(k, c);
            }
            a.table[i * a.dim + j] = std::move(row);
        }
    a.unit = std::move(unit);
    return a;
}

// ---------------------------------------------------------------------------
// Quiver presentations

namespace {

struct PathEntry {
    std::size_t source = 0, target = 0;   // vertex indices
    std::vector<std::size_t> arrows;      // apply order
    long degree = 0;
};

struct PathTable {
    std::vector<PathEntry> paths;                      // ordered by length, then creation
    std::map<std::vector<std::size_t>, std::size_t> by_arrows;  // nontrivial paths
    std::vector<std::size_t> trivial;                  // vertex -> path index

    std::size_t size() const { return paths.size(); }
};

constexpr std::size_t kMaxPaths = 100000;

PathTable enumerate_paths(const QuiverPresentation& p, const std::vector<std::size_t>& arrow_src,
                          const std::vector<std::size_t>& arrow_tgt) {
    PathTable t;
    t.trivial.resize(p.vertices.size());
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        t.trivial[v] = t.paths.size();
        t.paths.push_back(PathEntry{v, v, {}, 0});
    }
    std::size_t level_begin = 0, level_end = t.paths.size();
    for (std::size_t len = 1; len <= p.path_length_bound; ++len) {
        for (std::size_t i = level_begin; i < level_end; ++i) {
            PathEntry base = t.paths[i];
            for (std::size_t a = 0; a < p.arrows.size(); ++a) {
                if (arrow_src[a] != base.target) continue;
                PathEntry np = base;
                np.arrows.push_back(a);
                np.target = arrow_tgt[a];
                np.degree += p.arrows[a].degree;
                if (t.paths.size() >= kMaxPaths)
                    throw alg_error(errc::unsupported, "path count exceeds limit; tighten relations or bound");
                t.by_arrows[np.arrows] = t.paths.size();
                t.paths.push_back(std::move(np));
            }
        }
        level_begin = level_end;
        level_end = t.paths.size();
    }
    return t;
}

// Coordinates are reversed so that echelon pivots prefer long paths, keeping
// short monomials as quotient representatives.
class IdealSpan {
public:
    IdealSpan(FieldDesc fd, std::size_t n) : n_(n), span_(fd, n) {}

    bool insert(const std::vector<Scalar>& v) { return span_.insert(reverse(v)); }
    std::vector<Scalar> reduce(const std::vector<Scalar>& v) const { return reverse(span_.reduce(reverse(v))); }
    bool contains(const std::vector<Scalar>& v) const { return span_.contains(reverse(v)); }
    bool is_pivot(std::size_t coord) const {
        std::size_t rc = n_ - 1 - coord;
        return std::find(span_.pivots().begin(), span_.pivots().end(), rc) != span_.pivots().end();
    }
    std::size_t dim() const { return span_.dim(); }

private:
    std::size_t n_;
    IncrementalSpan span_;
    std::vector<Scalar> reverse(std::vector<Scalar> v) const {
        std::reverse(v.begin(), v.end());
        return v;
    }
};

}  // namespace

PresentedAlgebra build_from_presentation(const QuiverPresentation& p) {
    FieldDesc fd = p.field;
    if (p.vertices.empty()) throw alg_error(errc::validation_error, "presentation needs at least one vertex");
    if (p.path_length_bound == 0) throw alg_error(errc::validation_error, "path_length_bound must be positive");
    std::map<std::string, std::size_t> vidx;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        if (vidx.count(p.vertices[v])) throw alg_error(errc::validation_error, "duplicate vertex '" + p.vertices[v] + "'");
        vidx[p.vertices[v]] = v;
    }
    std::map<std::string, std::size_t> aidx;
    std::vector<std::size_t> arrow_src(p.arrows.size()), arrow_tgt(p.arrows.size());
    for (std::size_t a = 0; a < p.arrows.size(); ++a) {
        const Arrow& ar = p.arrows[a];
        if (aidx.count(ar.name)) throw alg_error(errc::validation_error, "duplicate arrow '" + ar.name + "'");
        if (!vidx.count(ar.source)) throw alg_error(errc::validation_error, "arrow '" + ar.name + "' has unknown source '" + ar.source + "'");
        if (!vidx.count(ar.target)) throw alg_error(errc::validation_error, "arrow '" + ar.name + "' has unknown target '" + ar.target + "'");
        aidx[ar.name] = a;
        arrow_src[a] = vidx[ar.source];
        arrow_tgt[a] = vidx[ar.target];
    }

    PathTable pt = enumerate_paths(p, arrow_src, arrow_tgt);
    const std::size_t N = pt.size();

    // Relations as vectors on path coordinates.
    std::vector<std::vector<Scalar>> relvecs;
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        std::vector<Scalar> vec(N, Scalar::zero(fd));
        bool nonzero = false;
        std::optional<long> rel_degree;
        for (auto& [coeff, names] : p.relations[r].terms) {
            if (names.size() < 2)
                throw alg_error(errc::not_admissible,
                                "relation " + std::to_string(r) + " contains a path of length " + std::to_string(names.size()));
            std::vector<std::size_t> arrows;
            for (auto& nm : names) {
                auto it = aidx.find(nm);
                if (it == aidx.end()) throw alg_error(errc::invalid_relation, "unknown arrow '" + nm + "' in relation " + std::to_string(r));
                arrows.push_back(it->second);
            }
            for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
                if (arrow_tgt[arrows[i]] != arrow_src[arrows[i + 1]])
                    throw alg_error(errc::invalid_relation,
                                    "non-composable path in relation " + std::to_string(r) + " at '" + names[i] + "','" + names[i + 1] + "'");
            if (arrows.size() > p.path_length_bound)
                throw alg_error(errc::validation_error, "relation " + std::to_string(r) + " is longer than path_length_bound");
            long deg = 0;
            for (std::size_t a : arrows) deg += p.arrows[a].degree;
            if (rel_degree && *rel_degree != deg)
                throw alg_error(errc::invalid_grading, "relation " + std::to_string(r) + " mixes arrow degrees");
            rel_degree = deg;
            std::size_t idx = pt.by_arrows.at(arrows);
            vec[idx] += coeff;
            nonzero = true;
        }
        if (nonzero) relvecs.push_back(std::move(vec));
    }

    // Close the relation span under multiplication by arrows, truncating past
    // the bound.
    IdealSpan W(fd, N);
    std::vector<std::vector<Scalar>> work;
    for (auto& v : relvecs)
        if (W.insert(v)) work.push_back(v);
    auto mult_arrow = [&](const std::vector<Scalar>& v, std::size_t a, bool on_left) {
        std::vector<Scalar> out(N, Scalar::zero(fd));
        for (std::size_t i = 0; i < N; ++i) {
            if (v[i].is_zero()) continue;
            const PathEntry& pe = pt.paths[i];
            if (pe.arrows.size() + 1 > p.path_length_bound) continue;  // truncated
            std::vector<std::size_t> seq;
            if (on_left) {  // arrow * path: apply path, then arrow
                if (arrow_src[a] != pe.target) continue;
                seq = pe.arrows;
                seq.push_back(a);
            } else {  // path * arrow: apply arrow, then path
                if (arrow_tgt[a] != pe.source) continue;
                seq.push_back(a);
                seq.insert(seq.end(), pe.arrows.begin(), pe.arrows.end());
            }
            out[pt.by_arrows.at(seq)] += v[i];
        }
        return out;
    };
    while (!work.empty()) {
        std::vector<Scalar> v = std::move(work.back());
        work.pop_back();
        for (std::size_t a = 0; a < p.arrows.size(); ++a) {
            for (bool left : {true, false}) {
                std::vector<Scalar> w = mult_arrow(v, a, left);
                if (W.insert(w)) work.push_back(std::move(w));
            }
        }
    }

    // Finite-dimensionality certificate: every path at the bound dies.
    for (std::size_t i = 0; i < N; ++i) {
        if (pt.paths[i].arrows.size() != p.path_length_bound) continue;
        std::vector<Scalar> e(N, Scalar::zero(fd));
        e[i] = Scalar::one(fd);
        if (!W.contains(e)) {
            std::ostringstream msg;
            msg << "path of length " << p.path_length_bound << " does not vanish modulo relations (";
            for (std::size_t a : pt.paths[i].arrows) msg << p.arrows[a].name << " ";
            msg << ")";
            throw alg_error(errc::not_finite_dimensional, msg.str());
        }
    }

    // Quotient basis: non-pivot path coordinates.
    std::vector<std::size_t> basis_paths;
    std::vector<long> coord_to_basis(N, -1);
    for (std::size_t i = 0; i < N; ++i) {
        if (!W.is_pivot(i)) {
            if (pt.paths[i].arrows.size() >= p.path_length_bound)
                throw alg_error(errc::internal, "certified path survived reduction");
            coord_to_basis[i] = static_cast<long>(basis_paths.size());
            basis_paths.push_back(i);
        }
    }
    const std::size_t dim = basis_paths.size();

    AlgebraRep alg;
    alg.field = fd;
    alg.dim = dim;
    alg.table.resize(dim * dim);
    std::vector<long> degrees(dim, 0);
    std::vector<std::size_t> lengths(dim, 0);
    for (std::size_t b = 0; b < dim; ++b) {
        const PathEntry& pe = pt.paths[basis_paths[b]];
        degrees[b] = pe.degree;
        lengths[b] = pe.arrows.size();
        if (pe.arrows.empty()) {
            alg.basis_labels.push_back("e_" + p.vertices[pe.source]);
        } else {
            std::string lbl;
            for (std::size_t k = 0; k < pe.arrows.size(); ++k) {
                if (k) lbl += "*";
                lbl += p.arrows[pe.arrows[k]].name;
            }
            alg.basis_labels.push_back(lbl);
        }
    }

    auto reduce_to_sparse = [&](std::size_t path_idx) {
        std::vector<Scalar> e(N, Scalar::zero(fd));
        e[path_idx] = Scalar::one(fd);
        std::vector<Scalar> red = W.reduce(e);
        SparseVec out;
        for (std::size_t c = 0; c < N; ++c) {
            if (red[c].is_zero()) continue;
            if (coord_to_basis[c] < 0) throw alg_error(errc::internal, "reduction left a pivot coordinate");
            out.emplace_back(static_cast<std::size_t>(coord_to_basis[c]), red[c]);
        }
        return out;
    };

    for (std::size_t i = 0; i < dim; ++i) {
        const PathEntry& pi = pt.paths[basis_paths[i]];
        for (std::size_t j = 0; j < dim; ++j) {
            const PathEntry& pj = pt.paths[basis_paths[j]];
            // b_i * b_j: apply path j, then path i.
            if (pj.target != pi.source) continue;
            std::vector<std::size_t> seq = pj.arrows;
            seq.insert(seq.end(), pi.arrows.begin(), pi.arrows.end());
            if (seq.size() > p.path_length_bound) continue;  // dies past the bound
            std::size_t idx = seq.empty() ? pt.trivial[pi.source] : pt.by_arrows.at(seq);
            alg.table[i * dim + j] = reduce_to_sparse(idx);
        }
    }

    alg.unit = alg.zero_vec();
    std::vector<std::pair<std::string, std::vector<Scalar>>> idems;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        long b = coord_to_basis[pt.trivial[v]];
        if (b < 0) throw alg_error(errc::internal, "trivial path eliminated");
        alg.unit[b] = Scalar::one(fd);
        auto e = alg.zero_vec();
        e[b] = Scalar::one(fd);
        idems.emplace_back(p.vertices[v], e);
    }
    alg.idempotents = std::move(idems);

    // Radical = span of classes of paths of length >= 1.
    Mat rad(fd, dim, 0);
    {
        std::vector<std::vector<Scalar>> cols;
        for (std::size_t b = 0; b < dim; ++b)
            if (lengths[b] >= 1) cols.push_back(alg.basis_vec(b));
        rad = Mat::from_columns(fd, dim, cols);
    }
    alg.known_radical = rad;

    return PresentedAlgebra{std::move(alg), std::move(degrees), std::move(lengths)};
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_algebra(const AlgebraRep& a) {
    ValidationReport rep;
    const std::size_t d = a.dim;
    // Associativity: (b_i b_j) b_k == b_i (b_j b_k), sparse expansion.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const SparseVec& ij = a.prod_row(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                auto lhs = a.zero_vec();
                for (auto& [m, c] : ij)
                    for (auto& [l, c2] : a.prod_row(m, k)) lhs[l] += c * c2;
                auto rhs = a.zero_vec();
                for (auto& [m, c] : a.prod_row(j, k))
                    for (auto& [l, c2] : a.prod_row(i, m)) rhs[l] += c * c2;
                if (lhs != rhs) {
                    rep.violations.push_back("associativity fails at basis triple (" + std::to_string(i) + "," +
                                             std::to_string(j) + "," + std::to_string(k) + ")");
                    if (rep.violations.size() > 64) return rep;
                }
            }
        }
    if (a.unit.size() != d) {
        rep.violations.push_back("unit vector has wrong length");
        return rep;
    }
    for (std::size_t i = 0; i < d; ++i) {
        auto b = a.basis_vec(i);
        if (a.mul(a.unit, b) != b) rep.violations.push_back("unit fails on the left at basis " + std::to_string(i));
        if (a.mul(b, a.unit) != b) rep.violations.push_back("unit fails on the right at basis " + std::to_string(i));
    }
    if (a.idempotents) {
        auto& idems = *a.idempotents;
        auto sum = a.zero_vec();
        for (std::size_t u = 0; u < idems.size(); ++u) {
            for (std::size_t v = 0; v < idems.size(); ++v) {
                auto prod = a.mul(idems[u].second, idems[v].second);
                auto expect = (u == v) ? idems[u].second : a.zero_vec();
                if (prod != expect)
                    rep.violations.push_back("idempotent axiom fails at (" + idems[u].first + "," + idems[v].first + ")");
            }
            for (std::size_t i = 0; i < d; ++i) sum[i] += idems[u].second[i];
        }
        if (sum != a.unit) rep.violations.push_back("idempotents do not sum to the unit");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Radical and friends

namespace {

Mat radical_product(const AlgebraRep& a, const Mat& u, const Mat& v) {
    std::vector<std::vector<Scalar>> cols;
    for (std::size_t i = 0; i < u.cols(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) cols.push_back(a.mul(u.column(i), v.column(j)));
    return col_basis(Mat::from_columns(a.field, a.dim, cols));
}

void assert_nilpotent(const AlgebraRep& a, const Mat& j) {
    Mat power = j;
    for (std::size_t step = 0; step <= a.dim; ++step) {
        if (power.cols() == 0) return;
        power = radical_product(a, power, j);
    }
    throw alg_error(errc::internal, "claimed radical is not nilpotent");
}

}  // namespace

Mat radical(const AlgebraRep& a) {
    if (a.known_radical) {
        Mat j = col_basis(*a.known_radical);
        assert_nilpotent(a, j);
        return j;
    }
    if (a.field.is_prime() && a.field.p <= a.dim)
        throw alg_error(errc::radical_method_unavailable,
                        "trace form needs char 0 or p > dim; supply a presentation");
    // Trace form of the left regular representation: J = rad{x : tr(L_x L_y) = 0}.
    std::vector<Scalar> trL(a.dim, Scalar::zero(a.field));
    for (std::size_t m = 0; m < a.dim; ++m) {
        Scalar t = Scalar::zero(a.field);
        for (std::size_t k = 0; k < a.dim; ++k) t += a.structure(m, k, k);
        trL[m] = t;
    }
    Mat gram(a.field, a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Scalar t = Scalar::zero(a.field);
            for (auto& [m, c] : a.prod_row(i, j)) t += c * trL[m];
            gram.at(i, j) = t;
        }
    Mat j = mat_nullspace(gram);
    assert_nilpotent(a, j);
    return j;
}

RadicalSeries radical_series(const AlgebraRep& a) {
    RadicalSeries s;
    s.powers.push_back(Mat::identity(a.field, a.dim));
    Mat j = radical(a);
    Mat power = j;
    while (true) {
        if (power.cols() >= s.powers.back().cols())
            throw alg_error(errc::internal, "radical series fails to decrease");
        s.powers.push_back(power);
        if (power.cols() == 0) break;
        power = radical_product(a, power, j);
    }
    return s;
}

std::vector<std::size_t> RadicalSeries::dims() const {
    std::vector<std::size_t> d;
    for (auto& m : powers) d.push_back(m.cols());
    return d;
}

std::vector<Mat> socle_series(const AlgebraRep& a) {
    RadicalSeries rs = radical_series(a);
    std::vector<Mat> soc;
    for (auto& jp : rs.powers) {
        if (jp.cols() == 0) {
            soc.push_back(Mat::identity(a.field, a.dim));
            continue;
        }
        // {x : (J^i) x = 0}: stack left-multiplication matrices of a basis of J^i.
        Mat stacked(a.field, jp.cols() * a.dim, a.dim);
        for (std::size_t c = 0; c < jp.cols(); ++c) {
            Mat lm = a.left_mult(jp.column(c));
            for (std::size_t i = 0; i < a.dim; ++i)
                for (std::size_t k = 0; k < a.dim; ++k) stacked.at(c * a.dim + i, k) = lm.at(i, k);
        }
        soc.push_back(mat_nullspace(stacked));
    }
    return soc;
}

Mat center(const AlgebraRep& a) {
    Mat stacked(a.field, a.dim * a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        auto b = a.basis_vec(i);
        Mat diff = a.left_mult(b) - a.right_mult(b);
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t c = 0; c < a.dim; ++c) stacked.at(i * a.dim + r, c) = diff.at(r, c);
    }
    return mat_nullspace(stacked);
}

Mat homogeneous_span(const Mat& m, const std::vector<long>& degrees) {
    if (degrees.size() != m.rows()) throw alg_error(errc::shape_error, "homogeneous_span");
    std::set<long> degs(degrees.begin(), degrees.end());
    std::vector<std::vector<Scalar>> cols;
    for (long d : degs) {
        IncrementalSpan span(m.field(), m.rows());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            std::vector<Scalar> comp(m.rows(), Scalar::zero(m.field()));
            bool nz = false;
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (degrees[i] == d && !m.at(i, c).is_zero()) { comp[i] = m.at(i, c); nz = true; }
            if (nz) span.insert(comp);
        }
        Mat b = span.basis_columns();
        for (std::size_t c = 0; c < b.cols(); ++c) cols.push_back(b.column(c));
    }
    return Mat::from_columns(m.field(), m.rows(), cols);
}

}  // namespace gradalg
