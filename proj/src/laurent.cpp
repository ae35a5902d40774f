#include "gradalg/laurent.hpp"

#include <sstream>

namespace gradalg {

Laurent::Laurent(long long constant) {
    if (constant != 0) c_[0] = constant;
}

Laurent Laurent::monomial(long exp, long long coeff) {
    Laurent l;
    if (coeff != 0) l.c_[exp] = coeff;
    return l;
}

void Laurent::trim() {
    for (auto it = c_.begin(); it != c_.end();)
        it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

long long Laurent::coeff(long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
}

long Laurent::min_exp() const {
    if (c_.empty()) throw alg_error(errc::internal, "min_exp of zero polynomial");
    return c_.begin()->first;
}

long Laurent::max_exp() const {
    if (c_.empty()) throw alg_error(errc::internal, "max_exp of zero polynomial");
    return c_.rbegin()->first;
}

long long Laurent::eval_one() const {
    long long s = 0;
    for (auto& [e, c] : c_) s += c;
    return s;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.c_) r.c_[e] += c;
    r.trim();
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.c_) r.c_[e] -= c;
    r.trim();
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) r.c_[e1 + e2] += c1 * c2;
    r.trim();
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

Laurent Laurent::shifted(long by) const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[e + by] = c;
    return r;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : c_) {
        long long a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

namespace {

Laurent det_rec(const std::vector<std::vector<Laurent>>& m, std::vector<std::size_t> cols, std::size_t row) {
    if (cols.empty()) return Laurent(1);
    Laurent acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Laurent& a = m[row][cols[k]];
        if (a.is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Laurent sub = a * det_rec(m, rest, row + 1);
        acc = (k % 2 == 0) ? acc + sub : acc - sub;
    }
    return acc;
}

}  // namespace

Laurent laurent_det(const std::vector<std::vector<Laurent>>& m) {
    std::size_t n = m.size();
    for (auto& r : m)
        if (r.size() != n) throw alg_error(errc::shape_error, "determinant of non-square matrix");
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return det_rec(m, cols, 0);
}

}  // namespace gradalg
