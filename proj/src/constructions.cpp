#include "gradalg/constructions.hpp"

#include <algorithm>
#include <sstream>

namespace gradalg {

// ---------------------------------------------------------------------------
// Groups

bool GroupRep::is_abelian() const {
    for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = i + 1; j < order(); ++j)
            if (mult[i][j] != mult[j][i]) return false;
    return true;
}

GroupRep GroupRep::generate(FieldDesc fd, std::size_t n, const std::vector<Mat>& gens, std::size_t order_bound) {
    GroupRep g;
    g.field = fd;
    g.n = n;
    g.generators = gens;
    for (auto& m : gens) {
        if (m.rows() != n || m.cols() != n) throw alg_error(errc::dimension_mismatch, "generator is not n x n");
        if (m.field() != fd) throw alg_error(errc::field_mismatch, "generator over the wrong field");
        if (mat_rank(m) != n) throw alg_error(errc::validation_error, "generator is singular");
    }
    g.elements.push_back(Mat::identity(fd, n));
    g.identity = 0;
    auto find = [&](const Mat& m) -> long {
        for (std::size_t i = 0; i < g.elements.size(); ++i)
            if (g.elements[i] == m) return static_cast<long>(i);
        return -1;
    };
    std::size_t head = 0;
    while (head < g.elements.size()) {
        Mat cur = g.elements[head];
        for (auto& gen : gens) {
            Mat next = cur * gen;
            if (find(next) < 0) {
                if (g.elements.size() >= order_bound)
                    throw alg_error(errc::group_too_large, "group closure exceeds " + std::to_string(order_bound));
                g.elements.push_back(std::move(next));
            }
        }
        ++head;
    }
    const std::size_t ord = g.elements.size();
    g.mult.assign(ord, std::vector<std::size_t>(ord, 0));
    for (std::size_t i = 0; i < ord; ++i)
        for (std::size_t j = 0; j < ord; ++j) {
            long k = find(g.elements[i] * g.elements[j]);
            if (k < 0) throw alg_error(errc::internal, "group closure is not closed");
            g.mult[i][j] = static_cast<std::size_t>(k);
        }
    g.inverse.assign(ord, 0);
    for (std::size_t i = 0; i < ord; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < ord; ++j)
            if (g.mult[i][j] == g.identity) {
                g.inverse[i] = j;
                found = true;
                break;
            }
        if (!found) throw alg_error(errc::internal, "group element has no inverse");
    }
    return g;
}

AlgebraRep group_algebra(const GroupRep& g) {
    AlgebraRep a;
    a.field = g.field;
    a.dim = g.order();
    a.table.resize(a.dim * a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        a.basis_labels.push_back("g" + std::to_string(i));
        for (std::size_t j = 0; j < a.dim; ++j)
            a.table[i * a.dim + j] = {{g.mult[i][j], Scalar::one(g.field)}};
    }
    a.unit = a.zero_vec();
    a.unit[g.identity] = Scalar::one(g.field);
    return a;
}

// ---------------------------------------------------------------------------
// Idempotent splitting for commutative semisimple algebras

namespace {

bool vec_nonzero(const std::vector<Scalar>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return true;
    return false;
}

std::optional<std::vector<std::vector<Scalar>>> split_berlekamp(const AlgebraRep& c) {
    const unsigned long p = c.field.p;
    if (p > 257) return std::nullopt;  // eigenvalue scan would be too wide
    // Frobenius x -> x^p is linear over F_p on a commutative algebra.
    Mat frob(c.field, c.dim, c.dim);
    for (std::size_t i = 0; i < c.dim; ++i) {
        auto r = c.unit;
        auto b = c.basis_vec(i);
        unsigned long e = p;
        while (e) {
            if (e & 1) r = c.mul(r, b);
            b = c.mul(b, b);
            e >>= 1;
        }
        frob.set_column(i, r);
    }
    Mat fixed = mat_nullspace(frob - Mat::identity(c.field, c.dim));

    std::vector<std::vector<Scalar>> idems = {c.unit};
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t bcol = 0; bcol < fixed.cols() && !changed; ++bcol) {
            auto beta = fixed.column(bcol);
            for (std::size_t ei = 0; ei < idems.size() && !changed; ++ei) {
                const auto e = idems[ei];
                // Component e*C; beta acts diagonalizably with eigenvalues in F_p.
                std::vector<std::vector<Scalar>> comp_cols;
                for (std::size_t i = 0; i < c.dim; ++i) {
                    auto x = c.mul(e, c.basis_vec(i));
                    if (vec_nonzero(x)) comp_cols.push_back(std::move(x));
                }
                Mat comp = col_basis(Mat::from_columns(c.field, c.dim, comp_cols));
                if (comp.cols() <= 1) continue;
                auto be = c.mul(beta, e);
                std::vector<unsigned long> eigen;
                for (unsigned long lam = 0; lam < p; ++lam) {
                    // ker(mult_by(be) - lam) on the component
                    Mat op(c.field, c.dim, comp.cols());
                    for (std::size_t j = 0; j < comp.cols(); ++j) {
                        auto col = c.mul(be, comp.column(j));
                        for (std::size_t i = 0; i < c.dim; ++i)
                            col[i] -= Scalar::from_int(c.field, static_cast<long>(lam)) * comp.at(i, j);
                        op.set_column(j, col);
                    }
                    if (mat_nullspace(op).cols() > 0) eigen.push_back(lam);
                }
                if (eigen.size() <= 1) continue;
                // CRT projections: e_lam = e * prod_{mu != lam} (be - mu e)/(lam - mu)
                std::vector<std::vector<Scalar>> parts;
                for (unsigned long lam : eigen) {
                    auto proj = e;
                    for (unsigned long mu : eigen) {
                        if (mu == lam) continue;
                        auto factor = be;
                        for (std::size_t i = 0; i < c.dim; ++i)
                            factor[i] -= Scalar::from_int(c.field, static_cast<long>(mu)) * e[i];
                        proj = c.mul(proj, factor);
                        Scalar denom = Scalar::from_int(c.field, static_cast<long>(lam)) -
                                       Scalar::from_int(c.field, static_cast<long>(mu));
                        Scalar inv = denom.inverse();
                        for (auto& x : proj) x *= inv;
                    }
                    parts.push_back(std::move(proj));
                }
                idems.erase(idems.begin() + static_cast<long>(ei));
                for (auto& q : parts) idems.push_back(std::move(q));
                changed = true;
            }
        }
    }
    // Sanity: orthogonal idempotents summing to 1.
    auto sum = c.zero_vec();
    for (auto& e : idems) {
        if (c.mul(e, e) != e) return std::nullopt;
        for (std::size_t i = 0; i < c.dim; ++i) sum[i] += e[i];
    }
    if (sum != c.unit) return std::nullopt;
    for (std::size_t i = 0; i < idems.size(); ++i)
        for (std::size_t j = i + 1; j < idems.size(); ++j)
            if (vec_nonzero(c.mul(idems[i], idems[j]))) return std::nullopt;
    return idems;
}

// Q route: rational characters with values +-1 (complete for exponent-2 groups).
std::optional<std::vector<std::vector<Scalar>>> split_rational_characters(const AlgebraRep& c,
                                                                          const GroupRep& grp) {
    const std::size_t ord = grp.order();
    // Greedy generating set.
    std::vector<std::size_t> gens;
    std::vector<bool> generated(ord, false);
    generated[grp.identity] = true;
    std::size_t covered = 1;
    for (std::size_t g = 0; g < ord && covered < ord; ++g) {
        if (generated[g]) continue;
        gens.push_back(g);
        // closure of currently generated set with g
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t x = 0; x < ord; ++x)
                if (generated[x]) {
                    for (std::size_t y = 0; y < ord; ++y)
                        if (generated[y] && !generated[grp.mult[x][y]]) {
                            generated[grp.mult[x][y]] = true;
                            ++covered;
                            grew = true;
                        }
                    if (!generated[grp.mult[x][g]]) {
                        generated[grp.mult[x][g]] = true;
                        ++covered;
                        grew = true;
                    }
                }
            if (!generated[g]) {
                generated[g] = true;
                ++covered;
                grew = true;
            }
        }
    }
    if (gens.size() > 16) return std::nullopt;

    std::vector<std::vector<long>> characters;
    for (std::size_t mask = 0; mask < (1u << gens.size()); ++mask) {
        std::vector<long> chi(ord, 0);
        chi[grp.identity] = 1;
        for (std::size_t k = 0; k < gens.size(); ++k) chi[gens[k]] = (mask >> k) & 1 ? -1 : 1;
        // Propagate multiplicatively until stable; reject on conflict.
        bool conflict = false, grew = true;
        while (grew && !conflict) {
            grew = false;
            for (std::size_t x = 0; x < ord && !conflict; ++x) {
                if (chi[x] == 0) continue;
                for (std::size_t y = 0; y < ord; ++y) {
                    if (chi[y] == 0) continue;
                    long v = chi[x] * chi[y];
                    std::size_t xy = grp.mult[x][y];
                    if (chi[xy] == 0) { chi[xy] = v; grew = true; }
                    else if (chi[xy] != v) { conflict = true; break; }
                }
            }
        }
        if (conflict) continue;
        bool complete = true;
        for (auto v : chi)
            if (v == 0) { complete = false; break; }
        if (complete && std::find(characters.begin(), characters.end(), chi) == characters.end())
            characters.push_back(chi);
    }

    std::vector<std::vector<Scalar>> idems;
    Scalar inv_ord = Scalar::from_int(c.field, static_cast<long>(ord)).inverse();
    for (auto& chi : characters) {
        auto e = c.zero_vec();
        for (std::size_t g = 0; g < ord; ++g) e[g] = Scalar::from_int(c.field, chi[g]) * inv_ord;
        idems.push_back(std::move(e));
    }
    auto sum = c.zero_vec();
    for (auto& e : idems)
        for (std::size_t i = 0; i < c.dim; ++i) sum[i] += e[i];
    if (sum != c.unit) return std::nullopt;  // non-rational characters exist
    return idems;
}

// Dispatch: Berlekamp over F_p, rational characters over Q. Idempotents are
// sorted for deterministic labels.
std::optional<std::vector<std::vector<Scalar>>> split_group_algebra(const AlgebraRep& kg, const GroupRep& grp) {
    if (!grp.is_abelian()) return std::nullopt;
    std::optional<std::vector<std::vector<Scalar>>> idems;
    if (kg.field.is_prime()) idems = split_berlekamp(kg);
    else idems = split_rational_characters(kg, grp);
    if (!idems) return std::nullopt;
    std::sort(idems->begin(), idems->end(), [](const auto& x, const auto& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == y[i]) continue;
            return x[i].str() < y[i].str();
        }
        return false;
    });
    return idems;
}

}  // namespace

std::optional<std::vector<std::vector<Scalar>>> split_commutative_semisimple(const AlgebraRep& c) {
    for (std::size_t i = 0; i < c.dim; ++i)
        for (std::size_t j = i + 1; j < c.dim; ++j) {
            auto ij = c.mul(c.basis_vec(i), c.basis_vec(j));
            auto ji = c.mul(c.basis_vec(j), c.basis_vec(i));
            if (ij != ji) return std::nullopt;
        }
    if (c.field.is_prime()) return split_berlekamp(c);
    return std::nullopt;  // over Q, characters are handled through the group
}

// ---------------------------------------------------------------------------
// Symmetrizing-form check shared by the constructions

bool is_symmetrizing(const AlgebraRep& a, const std::vector<Scalar>& t) {
    Mat gram(a.field, a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Scalar s = Scalar::zero(a.field);
            for (auto& [k, c] : a.prod_row(i, j)) s += c * t[k];
            gram.at(i, j) = s;
        }
    if (!(gram == gram.transpose())) return false;
    return mat_rank(gram) == a.dim;
}

// ---------------------------------------------------------------------------
// Trivial extensions

TrivialExtensionResult trivial_extension(const AlgebraRep& b, const std::optional<Grading>& gb) {
    {
        ValidationReport rep = validate_algebra(b);
        if (!rep.ok()) throw alg_error(errc::invalid_algebra, rep.violations.front());
    }
    if (gb) require_valid_grading(b, *gb);
    const std::size_t n = b.dim, dim = 2 * n;

    AlgebraRep t;
    t.field = b.field;
    t.dim = dim;
    t.table.resize(dim * dim);
    for (std::size_t i = 0; i < n; ++i) t.basis_labels.push_back(b.basis_labels[i]);
    for (std::size_t i = 0; i < n; ++i) t.basis_labels.push_back(b.basis_labels[i] + "*");

    // B x B: the table of B.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.table[i * dim + j] = b.prod_row(i, j);
    // b_i * f_j = sum_m c(m,i,j) f_m     [(a f)(x) = f(x a)]
    // f_i * b_j = sum_m c(j,m,i) f_m     [(f b)(x) = f(b x)]
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SparseVec left, right;
            for (std::size_t m = 0; m < n; ++m) {
                Scalar cl = b.structure(m, i, j);
                if (!cl.is_zero()) left.emplace_back(n + m, cl);
                Scalar cr = b.structure(j, m, i);
                if (!cr.is_zero()) right.emplace_back(n + m, cr);
            }
            t.table[i * dim + (n + j)] = std::move(left);
            t.table[(n + i) * dim + j] = std::move(right);
            // duals square to zero
        }

    t.unit = t.zero_vec();
    for (std::size_t i = 0; i < n; ++i) t.unit[i] = b.unit[i];
    if (b.idempotents) {
        std::vector<std::pair<std::string, std::vector<Scalar>>> idems;
        for (auto& [label, vec] : *b.idempotents) {
            auto v = t.zero_vec();
            for (std::size_t i = 0; i < n; ++i) v[i] = vec[i];
            idems.emplace_back(label, std::move(v));
        }
        t.idempotents = std::move(idems);
    }

    // J(T(B)) = J(B) (+) B*.
    try {
        Mat jb = radical(b);
        Mat rad(b.field, dim, jb.cols() + n);
        for (std::size_t c = 0; c < jb.cols(); ++c)
            for (std::size_t i = 0; i < n; ++i) rad.at(i, c) = jb.at(i, c);
        for (std::size_t i = 0; i < n; ++i) rad.at(n + i, jb.cols() + i) = Scalar::one(b.field);
        t.known_radical = rad;
    } catch (const alg_error& e) {
        if (e.code() != errc::radical_method_unavailable) throw;
    }

    Grading deg(dim, 0);
    for (std::size_t i = 0; i < n; ++i) {
        deg[i] = gb ? (*gb)[i] : 0;
        deg[n + i] = 1 - (gb ? (*gb)[i] : 0);
    }
    require_valid_grading(t, deg);

    SymmetrizingForm form;
    form.t = t.zero_vec();
    for (std::size_t i = 0; i < n; ++i) form.t[n + i] = b.unit[i];  // (a, f) -> f(1)
    form.top_degree = 1;
    if (!is_symmetrizing(t, form.t))
        throw alg_error(errc::internal, "canonical form of the trivial extension is not symmetrizing");

    return TrivialExtensionResult{std::move(t), std::move(deg), std::move(form)};
}

RecognitionResult recognize_trivial_extension(const AlgebraRep& a, const Grading& g, const SymmetrizingForm& t) {
    require_valid_grading(a, g);
    DegreeProfile prof = degree_profile(a, g);
    if (prof.min_degree < 0 || prof.max_degree > 1)
        throw alg_error(errc::degrees_out_of_range,
                        "degrees occupy [" + std::to_string(prof.min_degree) + "," + std::to_string(prof.max_degree) +
                            "], expected {0,1}");
    if (t.t.size() != a.dim) throw alg_error(errc::form_shift_mismatch, "form has the wrong length");
    for (std::size_t k = 0; k < a.dim; ++k)
        if (g[k] != 1 && !t.t[k].is_zero())
            throw alg_error(errc::form_shift_mismatch, "form does not vanish off degree 1");
    if (!is_symmetrizing(a, t.t))
        throw alg_error(errc::hypothesis_violated, "the given functional is not a symmetrizing form");

    DegreeZeroPart a0 = degree_zero_part(a, g);
    const std::size_t n0 = a0.algebra.dim;
    if (2 * n0 != a.dim)
        return RecognitionResult{false, Mat(), "dim A_1 = " + std::to_string(a.dim - n0) +
                                                   " differs from dim A_0 = " + std::to_string(n0)};
    TrivialExtensionResult tb = trivial_extension(a0.algebra, std::nullopt);

    // phi: A -> T(A_0); identity on A_0, t-hat on A_1 with t-hat(b)(x) = t(x b).
    Mat phi(a.field, 2 * n0, a.dim);
    for (std::size_t k = 0; k < a.dim; ++k) {
        std::vector<Scalar> img(2 * n0, Scalar::zero(a.field));
        if (g[k] == 0) {
            bool placed = false;
            for (std::size_t i = 0; i < n0; ++i)
                if (a0.basis_index[i] == k) {
                    img[i] = Scalar::one(a.field);
                    placed = true;
                    break;
                }
            if (!placed) throw alg_error(errc::internal, "degree-0 basis element missing from A_0");
        } else {
            auto bk = a.basis_vec(k);
            for (std::size_t i = 0; i < n0; ++i) {
                auto prod = a.mul(a.basis_vec(a0.basis_index[i]), bk);  // x * b
                Scalar val = Scalar::zero(a.field);
                for (std::size_t m = 0; m < a.dim; ++m)
                    if (!prod[m].is_zero()) val += prod[m] * t.t[m];
                img[n0 + i] = val;
            }
        }
        phi.set_column(k, img);
    }
    if (mat_rank(phi) != a.dim)
        return RecognitionResult{false, Mat(),
                                 "the pairing A_1 x A_0 induced by the form is degenerate"};

    // Verify phi is an algebra isomorphism; failure here is a bug, not an input.
    auto apply = [&](const std::vector<Scalar>& x) { return mat_vec(phi, x); };
    if (apply(a.unit) != tb.algebra.unit)
        throw alg_error(errc::internal, "recognition map does not preserve the unit");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            auto lhs = apply(a.mul(a.basis_vec(i), a.basis_vec(j)));
            auto rhs = tb.algebra.mul(apply(a.basis_vec(i)), apply(a.basis_vec(j)));
            if (lhs != rhs)
                throw alg_error(errc::internal, "recognition map is not multiplicative at (" + std::to_string(i) +
                                                    "," + std::to_string(j) + ")");
        }
    return RecognitionResult{true, phi, ""};
}

// ---------------------------------------------------------------------------
// Exterior skew-group algebras

namespace {

// Wedge product e_S ^ e_U: zero on overlap, else the interleaving sign.
std::pair<int, unsigned> wedge(unsigned s, unsigned u, std::size_t n) {
    if (s & u) return {0, 0};
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(u >> i & 1)) continue;
        unsigned above = s >> (i + 1);
        int cnt = 0;
        while (above) { cnt += above & 1; above >>= 1; }
        if (cnt % 2) sign = -sign;
    }
    return {sign, s | u};
}

// Lambda^{|T|}(g) e_T = sum_U det(g[U, T]) e_U over |U| = |T|.
std::vector<std::pair<unsigned, Scalar>> wedge_action(const Mat& g, unsigned t, std::size_t n) {
    std::vector<std::size_t> tcols;
    for (std::size_t i = 0; i < n; ++i)
        if (t >> i & 1) tcols.push_back(i);
    std::vector<std::pair<unsigned, Scalar>> out;
    if (tcols.empty()) {
        out.emplace_back(0u, Scalar::one(g.field()));
        return out;
    }
    for (unsigned u = 0; u < (1u << n); ++u) {
        if (static_cast<std::size_t>(__builtin_popcount(u)) != tcols.size()) continue;
        std::vector<std::size_t> urows;
        for (std::size_t i = 0; i < n; ++i)
            if (u >> i & 1) urows.push_back(i);
        Mat minor(g.field(), urows.size(), tcols.size());
        for (std::size_t r = 0; r < urows.size(); ++r)
            for (std::size_t c = 0; c < tcols.size(); ++c) minor.at(r, c) = g.at(urows[r], tcols[c]);
        Scalar d = mat_det(minor);
        if (!d.is_zero()) out.emplace_back(u, d);
    }
    return out;
}

}  // namespace

ExteriorSkewResult exterior_skew(std::size_t n, const GroupRep& grp) {
    if (grp.n != n) throw alg_error(errc::dimension_mismatch, "group matrices are not n x n");
    const FieldDesc fd = grp.field;
    if (fd.is_prime() && grp.order() % fd.p == 0)
        throw alg_error(errc::order_not_invertible, "|G| = " + std::to_string(grp.order()) + " vanishes in " + fd.str());
    const std::size_t ord = grp.order();
    const std::size_t masks = std::size_t{1} << n;
    const std::size_t dim = masks * ord;

    AlgebraRep a;
    a.field = fd;
    a.dim = dim;
    a.table.resize(dim * dim);
    auto index = [&](unsigned mask, std::size_t gi) { return static_cast<std::size_t>(mask) * ord + gi; };
    for (unsigned mask = 0; mask < masks; ++mask)
        for (std::size_t gi = 0; gi < ord; ++gi) {
            std::string lbl;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) {
                    if (!lbl.empty()) lbl += "^";
                    lbl += "v" + std::to_string(i);
                }
            if (lbl.empty()) lbl = "1";
            a.basis_labels.push_back(lbl + "|g" + std::to_string(gi));
        }

    for (unsigned s = 0; s < masks; ++s)
        for (std::size_t gi = 0; gi < ord; ++gi)
            for (unsigned t = 0; t < masks; ++t)
                for (std::size_t hi = 0; hi < ord; ++hi) {
                    // (e_S (x) g)(e_T (x) h) = e_S ^ (g . e_T) (x) gh
                    SparseVec row;
                    for (auto& [u, coef] : wedge_action(grp.elements[gi], t, n)) {
                        auto [sign, mask] = wedge(s, u, n);
                        if (sign == 0) continue;
                        Scalar c = coef;
                        if (sign < 0) c = -c;
                        row.emplace_back(index(mask, grp.mult[gi][hi]), c);
                    }
                    std::sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
                    SparseVec merged;
                    for (auto& [k, c] : row) {
                        if (!merged.empty() && merged.back().first == k) merged.back().second += c;
                        else merged.emplace_back(k, c);
                    }
                    SparseVec final_row;
                    for (auto& [k, c] : merged)
                        if (!c.is_zero()) final_row.emplace_back(k, c);
                    a.table[index(s, gi) * dim + index(t, hi)] = std::move(final_row);
                }

    a.unit = a.zero_vec();
    a.unit[index(0, grp.identity)] = Scalar::one(fd);

    // Radical = Lambda^{>=1} (x) kG (the quotient kG is semisimple by Maschke).
    {
        std::vector<std::vector<Scalar>> cols;
        for (unsigned mask = 1; mask < masks; ++mask)
            for (std::size_t gi = 0; gi < ord; ++gi) cols.push_back(a.basis_vec(index(mask, gi)));
        a.known_radical = Mat::from_columns(fd, dim, cols);
    }

    Grading deg(dim, 0);
    for (unsigned mask = 0; mask < masks; ++mask)
        for (std::size_t gi = 0; gi < ord; ++gi) deg[index(mask, gi)] = __builtin_popcount(mask);
    require_valid_grading(a, deg);

    SymmetrizingForm form;
    form.t = a.zero_vec();
    form.t[index(static_cast<unsigned>(masks - 1), grp.identity)] = Scalar::one(fd);
    form.top_degree = static_cast<long>(n);
    {
        // Frobenius check: the pairing t(ab) must be nondegenerate.
        Mat gram(fd, dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                Scalar sv = Scalar::zero(fd);
                for (auto& [k, c] : a.prod_row(i, j)) sv += c * form.t[k];
                gram.at(i, j) = sv;
            }
        if (mat_rank(gram) != dim) throw alg_error(errc::internal, "exterior skew form is degenerate");
    }

    // Idempotents from the degree-0 part kG, when it splits over the field.
    std::optional<NakayamaData> nak;
    AlgebraRep kg = group_algebra(grp);
    auto kg_idems = split_group_algebra(kg, grp);
    if (kg_idems) {
        std::vector<std::pair<std::string, std::vector<Scalar>>> idems;
        for (std::size_t c = 0; c < kg_idems->size(); ++c) {
            auto v = a.zero_vec();
            for (std::size_t gi = 0; gi < ord; ++gi) v[index(0, gi)] = (*kg_idems)[c][gi];
            idems.emplace_back("chi" + std::to_string(c), std::move(v));
        }
        a.idempotents = std::move(idems);

        // Nakayama permutation from nu(g) = det(g) g on the idempotents.
        const auto& idlist = *a.idempotents;
        std::vector<std::size_t> perm(idlist.size(), 0);
        bool perm_ok = true;
        for (std::size_t c = 0; c < idlist.size() && perm_ok; ++c) {
            auto img = a.zero_vec();
            for (std::size_t gi = 0; gi < ord; ++gi) {
                const Scalar& coef = idlist[c].second[index(0, gi)];
                if (!coef.is_zero()) img[index(0, gi)] = coef * mat_det(grp.elements[gi]);
            }
            bool found = false;
            for (std::size_t c2 = 0; c2 < idlist.size(); ++c2)
                if (idlist[c2].second == img) {
                    perm[c] = c2;
                    found = true;
                    break;
                }
            if (!found) perm_ok = false;
        }
        if (perm_ok) nak = NakayamaData{perm, static_cast<long>(n)};
    }

    return ExteriorSkewResult{std::move(a), std::move(deg), std::move(form), nak};
}

bool exterior_symmetric_predicate(std::size_t n, const GroupRep& grp) {
    if (grp.n != n) throw alg_error(errc::dimension_mismatch, "group matrices are not n x n");
    if (grp.field.is_prime() && grp.order() % grp.field.p == 0)
        throw alg_error(errc::order_not_invertible, "|G| vanishes in the field");
    for (auto& g : grp.elements)
        if (!mat_det(g).is_one()) return false;  // rho(G) <= SL(V) fails
    Scalar c = Scalar::from_int(grp.field, (n + 1) % 2 == 0 ? 1 : -1);
    Mat scalar_mat(grp.field, n, n);
    for (std::size_t i = 0; i < n; ++i) scalar_mat.at(i, i) = c;
    for (auto& g : grp.elements)
        if (g == scalar_mat) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Abelian p-group algebras

namespace {

// The honest group algebra kP for P = prod Z/p^{r_i}, basis indexed by
// exponent tuples, with the augmentation ideal as the known radical.
AlgebraRep pgroup_group_algebra(FieldDesc fd, unsigned long p, const std::vector<unsigned long>& orders) {
    std::size_t dim = 1;
    for (unsigned long d : orders) dim *= d;
    AlgebraRep a;
    a.field = fd;
    a.dim = dim;
    a.table.resize(dim * dim);
    auto decode = [&](std::size_t idx) {
        std::vector<unsigned long> t(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) {
            t[i] = idx % orders[i];
            idx /= orders[i];
        }
        return t;
    };
    auto encode = [&](const std::vector<unsigned long>& t) {
        std::size_t idx = 0;
        for (std::size_t i = orders.size(); i-- > 0;) idx = idx * orders[i] + t[i];
        return idx;
    };
    for (std::size_t i = 0; i < dim; ++i) {
        auto ti = decode(i);
        std::string lbl = "s(";
        for (std::size_t k = 0; k < ti.size(); ++k) lbl += (k ? "," : "") + std::to_string(ti[k]);
        a.basis_labels.push_back(lbl + ")");
        for (std::size_t j = 0; j < dim; ++j) {
            auto tj = decode(j);
            std::vector<unsigned long> s(ti.size());
            for (std::size_t k = 0; k < ti.size(); ++k) s[k] = (ti[k] + tj[k]) % orders[k];
            a.table[i * dim + j] = {{encode(s), Scalar::one(fd)}};
        }
    }
    a.unit = a.zero_vec();
    a.unit[0] = Scalar::one(fd);
    {
        // Augmentation ideal: sigma^a - 1 for a != 0.
        std::vector<std::vector<Scalar>> cols;
        for (std::size_t i = 1; i < dim; ++i) {
            auto v = a.zero_vec();
            v[i] = Scalar::one(fd);
            v[0] = -Scalar::one(fd);
            cols.push_back(std::move(v));
        }
        a.known_radical = Mat::from_columns(fd, dim, cols);
    }
    (void)p;
    return a;
}

}  // namespace

std::pair<AlgebraRep, Grading> abelian_pgroup_algebra(FieldDesc fd, const PGroupSpec& spec) {
    if (!fd.is_prime() || fd.p != spec.p)
        throw alg_error(errc::char_mismatch, "field " + fd.str() + " does not have characteristic " +
                                                 std::to_string(spec.p));
    if (spec.invariants.empty()) throw alg_error(errc::validation_error, "empty invariant list");
    const std::size_t r = spec.invariants.size();
    std::vector<unsigned long> orders;
    std::size_t dim = 1;
    for (unsigned e : spec.invariants) {
        unsigned long d = 1;
        for (unsigned k = 0; k < e; ++k) d *= spec.p;
        orders.push_back(d);
        dim *= d;
    }

    // Truncated polynomial model k[x_1..x_r]/(x_i^{d_i}), deg x_i = 1.
    AlgebraRep a;
    a.field = fd;
    a.dim = dim;
    a.table.resize(dim * dim);
    auto decode = [&](std::size_t idx) {
        std::vector<unsigned long> t(r);
        for (std::size_t i = 0; i < r; ++i) {
            t[i] = idx % orders[i];
            idx /= orders[i];
        }
        return t;
    };
    auto encode = [&](const std::vector<unsigned long>& t) {
        std::size_t idx = 0;
        for (std::size_t i = r; i-- > 0;) idx = idx * orders[i] + t[i];
        return idx;
    };
    Grading deg(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        auto ti = decode(i);
        std::string lbl;
        long total = 0;
        for (std::size_t k = 0; k < r; ++k) {
            total += static_cast<long>(ti[k]);
            if (ti[k] == 0) continue;
            if (!lbl.empty()) lbl += "*";
            lbl += "x" + std::to_string(k + 1);
            if (ti[k] > 1) lbl += "^" + std::to_string(ti[k]);
        }
        if (lbl.empty()) lbl = "1";
        a.basis_labels.push_back(lbl);
        deg[i] = total;
        for (std::size_t j = 0; j < dim; ++j) {
            auto tj = decode(j);
            std::vector<unsigned long> s(r);
            bool dead = false;
            for (std::size_t k = 0; k < r; ++k) {
                s[k] = ti[k] + tj[k];
                if (s[k] >= orders[k]) { dead = true; break; }
            }
            if (!dead) a.table[i * dim + j] = {{encode(s), Scalar::one(fd)}};
        }
    }
    a.unit = a.zero_vec();
    a.unit[0] = Scalar::one(fd);
    a.idempotents = std::vector<std::pair<std::string, std::vector<Scalar>>>{{"1", a.unit}};
    {
        std::vector<std::vector<Scalar>> cols;
        for (std::size_t i = 1; i < dim; ++i) cols.push_back(a.basis_vec(i));
        a.known_radical = Mat::from_columns(fd, dim, cols);
    }
    require_valid_grading(a, deg);

    // Assert the model against the group algebra: graded dimensions of the
    // associated graded of kP match, and the monomials prod (sigma_i - 1)^{a_i}
    // form a basis of kP (so x_i -> sigma_i - 1 is an isomorphism onto kP
    // compatible with the radical filtration).
    AlgebraRep kp = pgroup_group_algebra(fd, spec.p, orders);
    {
        auto [gr, gdeg] = associated_graded(kp);
        std::map<long, std::size_t> gr_dims, model_dims;
        for (std::size_t i = 0; i < gr.dim; ++i) gr_dims[gdeg[i]]++;
        for (std::size_t i = 0; i < dim; ++i) model_dims[deg[i]]++;
        if (gr_dims != model_dims)
            throw alg_error(errc::internal, "graded dimensions of gr(kP) differ from the truncated model");

        // sigma_i - 1 in kP coordinates.
        std::vector<std::vector<Scalar>> gens;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<unsigned long> t(r, 0);
            t[i] = 1;
            std::size_t idx = 0;
            for (std::size_t k = r; k-- > 0;) idx = idx * orders[k] + t[k];
            auto v = kp.zero_vec();
            v[idx] = Scalar::one(fd);
            v[0] = -Scalar::one(fd);
            gens.push_back(std::move(v));
        }
        Mat monomials(fd, dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            auto ti = decode(i);
            auto prod = kp.unit;
            for (std::size_t k = 0; k < r; ++k)
                for (unsigned long e = 0; e < ti[k]; ++e) prod = kp.mul(prod, gens[k]);
            monomials.set_column(i, prod);
        }
        if (mat_rank(monomials) != dim)
            throw alg_error(errc::internal, "monomials in sigma_i - 1 do not span kP");
    }
    return {std::move(a), std::move(deg)};
}

std::pair<AlgebraRep, Grading> pgroup_semidirect(FieldDesc fd, const PGroupSpec& spec) {
    if (!spec.action) return abelian_pgroup_algebra(fd, spec);
    if (!fd.is_prime() || fd.p != spec.p)
        throw alg_error(errc::char_mismatch, "field " + fd.str() + " does not have characteristic " +
                                                 std::to_string(spec.p));
    for (unsigned e : spec.invariants)
        if (e != 1)
            throw alg_error(errc::action_not_homocyclic,
                            "group actions are supported on elementary abelian P only");
    const GroupRep& egrp = *spec.action;
    const std::size_t m = spec.invariants.size();
    if (egrp.n != m) throw alg_error(errc::dimension_mismatch, "action matrices do not match the rank of P");
    if (egrp.field != fd) throw alg_error(errc::field_mismatch, "action matrices over the wrong field");
    if (egrp.order() % spec.p == 0)
        throw alg_error(errc::order_not_coprime, "|E| is divisible by p");
    const unsigned long p = spec.p;
    const std::size_t ord = egrp.order();

    // kP on exponent vectors in F_p^m.
    std::size_t pdim = 1;
    for (std::size_t i = 0; i < m; ++i) pdim *= p;
    auto decode = [&](std::size_t idx) {
        std::vector<unsigned long> t(m);
        for (std::size_t i = 0; i < m; ++i) {
            t[i] = idx % p;
            idx /= p;
        }
        return t;
    };
    auto encode = [&](const std::vector<unsigned long>& t) {
        std::size_t idx = 0;
        for (std::size_t i = m; i-- > 0;) idx = idx * p + t[i];
        return idx;
    };
    std::vector<unsigned long> orders(m, p);
    AlgebraRep kp = pgroup_group_algebra(fd, p, orders);

    // Permutation action of E on group-element coordinates.
    auto act_on_exponent = [&](std::size_t gi, const std::vector<unsigned long>& t) {
        std::vector<unsigned long> s(m, 0);
        const Mat& mat = egrp.elements[gi];
        for (std::size_t row = 0; row < m; ++row) {
            unsigned long acc = 0;
            for (std::size_t col = 0; col < m; ++col)
                acc = (acc + mat.at(row, col).residue() * t[col]) % p;
            s[row] = acc;
        }
        return s;
    };
    auto permute = [&](std::size_t gi, const std::vector<Scalar>& v) {
        auto out = kp.zero_vec();
        for (std::size_t i = 0; i < pdim; ++i)
            if (!v[i].is_zero()) out[encode(act_on_exponent(gi, decode(i)))] = v[i];
        return out;
    };

    // E-stable complement V of J^2 in J by averaging the coordinate projection.
    Mat j1 = radical(kp);
    std::vector<std::vector<Scalar>> j2cols;
    for (std::size_t c1 = 0; c1 < j1.cols(); ++c1)
        for (std::size_t c2 = 0; c2 < j1.cols(); ++c2) j2cols.push_back(kp.mul(j1.column(c1), j1.column(c2)));
    Mat j2 = col_basis(Mat::from_columns(fd, pdim, j2cols));

    std::vector<std::vector<Scalar>> xs;  // sigma_i - 1
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<unsigned long> t(m, 0);
        t[i] = 1;
        auto v = kp.zero_vec();
        v[encode(t)] = Scalar::one(fd);
        v[0] = -Scalar::one(fd);
        xs.push_back(std::move(v));
    }
    Mat x_and_j2 = Mat::from_columns(fd, pdim, xs).hcat(j2);
    auto project0 = [&](const std::vector<Scalar>& v) {
        // projection of J onto span(x_i) along J^2
        auto sol = mat_solve_vec(x_and_j2, v);
        if (!sol) throw alg_error(errc::internal, "element outside J in complement projection");
        auto out = kp.zero_vec();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < pdim; ++k) out[k] += (*sol)[i] * xs[i][k];
        return out;
    };
    Scalar inv_ord = Scalar::from_int(fd, static_cast<long>(ord)).inverse();
    std::vector<std::vector<Scalar>> vs(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto acc = kp.zero_vec();
        for (std::size_t gi = 0; gi < ord; ++gi) {
            auto inner = project0(permute(egrp.inverse[gi], xs[i]));
            auto outer = permute(gi, inner);
            for (std::size_t k = 0; k < pdim; ++k) acc[k] += outer[k];
        }
        for (auto& x : acc) x *= inv_ord;
        vs[i] = std::move(acc);
    }
    Mat vspan = Mat::from_columns(fd, pdim, vs);
    for (std::size_t gi = 0; gi < ord; ++gi)
        for (std::size_t i = 0; i < m; ++i)
            if (!span_contains(vspan, permute(gi, vs[i])))
                throw alg_error(errc::internal, "averaged complement is not E-stable");

    // Monomial basis of kP in the v_i.
    const std::size_t mondim = pdim;
    Mat monomials(fd, pdim, mondim);
    Grading mon_deg(mondim, 0);
    std::vector<std::string> mon_labels(mondim);
    for (std::size_t i = 0; i < mondim; ++i) {
        auto ti = decode(i);
        auto prod = kp.unit;
        long total = 0;
        std::string lbl;
        for (std::size_t k = 0; k < m; ++k) {
            total += static_cast<long>(ti[k]);
            for (unsigned long e = 0; e < ti[k]; ++e) prod = kp.mul(prod, vs[k]);
            if (ti[k]) {
                if (!lbl.empty()) lbl += "*";
                lbl += "v" + std::to_string(k + 1);
                if (ti[k] > 1) lbl += "^" + std::to_string(ti[k]);
            }
        }
        if (lbl.empty()) lbl = "1";
        monomials.set_column(i, prod);
        mon_deg[i] = total;
        mon_labels[i] = lbl;
    }
    if (mat_rank(monomials) != pdim)
        throw alg_error(errc::internal, "v-monomials do not form a basis of kP");

    // kP x| E on (monomial, group element) pairs.
    const std::size_t dim = mondim * ord;
    AlgebraRep a;
    a.field = fd;
    a.dim = dim;
    a.table.resize(dim * dim);
    auto index = [&](std::size_t mono, std::size_t gi) { return mono * ord + gi; };
    Grading deg(dim, 0);
    for (std::size_t mono = 0; mono < mondim; ++mono)
        for (std::size_t gi = 0; gi < ord; ++gi) {
            a.basis_labels.push_back(mon_labels[mono] + "|g" + std::to_string(gi));
            deg[index(mono, gi)] = mon_deg[mono];
        }
    for (std::size_t mi = 0; mi < mondim; ++mi)
        for (std::size_t gi = 0; gi < ord; ++gi)
            for (std::size_t mj = 0; mj < mondim; ++mj)
                for (std::size_t hi = 0; hi < ord; ++hi) {
                    // (m_i (x) g)(m_j (x) h) = m_i g(m_j) (x) gh
                    auto prod = kp.mul(monomials.column(mi), permute(gi, monomials.column(mj)));
                    auto coords = mat_solve_vec(monomials, prod);
                    if (!coords) throw alg_error(errc::internal, "product escapes the monomial basis");
                    SparseVec row;
                    for (std::size_t k = 0; k < mondim; ++k)
                        if (!(*coords)[k].is_zero()) row.emplace_back(index(k, egrp.mult[gi][hi]), (*coords)[k]);
                    a.table[index(mi, gi) * dim + index(mj, hi)] = std::move(row);
                }
    a.unit = a.zero_vec();
    a.unit[index(0, egrp.identity)] = Scalar::one(fd);
    {
        std::vector<std::vector<Scalar>> cols;
        for (std::size_t mono = 1; mono < mondim; ++mono)
            for (std::size_t gi = 0; gi < ord; ++gi) cols.push_back(a.basis_vec(index(mono, gi)));
        a.known_radical = Mat::from_columns(fd, dim, cols);
    }
    require_valid_grading(a, deg);

    // Idempotents from kE when it splits.
    AlgebraRep ke = group_algebra(egrp);
    if (auto idems = split_group_algebra(ke, egrp)) {
        std::vector<std::pair<std::string, std::vector<Scalar>>> out;
        for (std::size_t c = 0; c < idems->size(); ++c) {
            auto v = a.zero_vec();
            for (std::size_t gi = 0; gi < ord; ++gi) v[index(0, gi)] = (*idems)[c][gi];
            out.emplace_back("chi" + std::to_string(c), std::move(v));
        }
        a.idempotents = std::move(out);
    }
    return {std::move(a), std::move(deg)};
}

}  // namespace gradalg
