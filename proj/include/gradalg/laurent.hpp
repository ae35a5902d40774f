// laurent.hpp — integer Laurent polynomials in one variable q, with the bar
// involution q <-> q^-1. Canonical form stores no zero coefficients.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gradalg/field.hpp"

namespace gradalg {

class Laurent {
public:
    Laurent() = default;
    explicit Laurent(long long constant);
    static Laurent monomial(long exp, long long coeff = 1);

    bool is_zero() const { return c_.empty(); }
    long long coeff(long exp) const;
    long min_exp() const;  // throws on zero polynomial
    long max_exp() const;
    long long eval_one() const;  // sum of coefficients

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    bool operator==(const Laurent& o) const { return c_ == o.c_; }

    Laurent bar() const;              // q -> q^-1
    Laurent shifted(long by) const;   // multiply by q^by

    const std::map<long, long long>& terms() const { return c_; }

    // Ascending exponents: "1 + q + q^2", "q^-1 + 2".
    std::string str() const;

private:
    std::map<long, long long> c_;
    void trim();
};

Laurent laurent_det(const std::vector<std::vector<Laurent>>& m);

}  // namespace gradalg
