// field.hpp — exact scalar arithmetic: arbitrary-precision rationals and
// prime fields F_p. Every value carries its field descriptor; mixing fields
// in one operation raises field_mismatch. No rounding anywhere.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gradalg {

enum class errc {
    field_mismatch,
    shape_error,
    not_split,
    not_finite_dimensional,
    invalid_relation,
    not_admissible,
    radical_method_unavailable,
    invalid_grading,
    missing_idempotents,
    not_self_injective,
    not_indecomposable,
    negative_degrees,
    non_uniform_shift,
    global_dimension_infinite,
    negative_cycle,
    hypothesis_violated,
    simples_not_degree_zero,
    degrees_out_of_range,
    form_shift_mismatch,
    order_not_invertible,
    dimension_mismatch,
    char_mismatch,
    action_not_homocyclic,
    order_not_coprime,
    group_too_large,
    invalid_algebra,
    unsupported,
    parse_error,
    validation_error,
    internal,
};

const char* errc_name(errc c);

class alg_error : public std::runtime_error {
public:
    alg_error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

bool is_prime_u64(unsigned long n);

struct FieldDesc {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    unsigned long p = 0;

    static FieldDesc rational() { return FieldDesc{Kind::rational, 0}; }
    static FieldDesc prime(unsigned long p);

    bool is_rational() const { return kind == Kind::rational; }
    bool is_prime() const { return kind == Kind::prime; }
    unsigned long characteristic() const { return is_prime() ? p : 0; }

    bool operator==(const FieldDesc&) const = default;
    std::string str() const;
};

// Scalar in canonical form: reduced fraction over Q, residue in [0, p) over F_p.
class Scalar {
public:
    Scalar() : fd_(FieldDesc::rational()) {}
    explicit Scalar(FieldDesc fd) : fd_(fd) {}  // zero of the field

    static Scalar zero(FieldDesc fd) { return Scalar(fd); }
    static Scalar one(FieldDesc fd);
    static Scalar from_int(FieldDesc fd, long v);
    static Scalar from_mpq(FieldDesc fd, const mpq_class& q);
    // Accepts "-3", "1/2", ... ; over F_p the fraction is mapped via inverse mod p.
    static Scalar from_string(FieldDesc fd, const std::string& s);

    const FieldDesc& field() const { return fd_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // division by zero throws
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Only meaningful for the matching kind.
    const mpq_class& rational_value() const { return q_; }
    unsigned long residue() const { return r_; }

    std::string str() const;

private:
    FieldDesc fd_;
    mpq_class q_;
    unsigned long r_ = 0;

    void check_same(const Scalar& o) const;
};

}  // namespace gradalg
