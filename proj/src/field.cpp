#include "gradalg/field.hpp"

namespace gradalg {

const char* errc_name(errc c) {
    switch (c) {
        case errc::field_mismatch: return "FieldMismatch";
        case errc::shape_error: return "ShapeError";
        case errc::not_split: return "NotSplit";
        case errc::not_finite_dimensional: return "NotFiniteDimensional";
        case errc::invalid_relation: return "InvalidRelation";
        case errc::not_admissible: return "NotAdmissible";
        case errc::radical_method_unavailable: return "RadicalMethodUnavailable";
        case errc::invalid_grading: return "InvalidGrading";
        case errc::missing_idempotents: return "MissingIdempotents";
        case errc::not_self_injective: return "NotSelfInjective";
        case errc::not_indecomposable: return "NotIndecomposable";
        case errc::negative_degrees: return "NegativeDegrees";
        case errc::non_uniform_shift: return "NonUniformShift";
        case errc::global_dimension_infinite: return "GlobalDimensionInfinite";
        case errc::negative_cycle: return "NegativeCycle";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::simples_not_degree_zero: return "SimplesNotDegreeZero";
        case errc::degrees_out_of_range: return "DegreesOutOfRange";
        case errc::form_shift_mismatch: return "FormShiftMismatch";
        case errc::order_not_invertible: return "OrderNotInvertible";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::char_mismatch: return "CharMismatch";
        case errc::action_not_homocyclic: return "ActionNotHomocyclic";
        case errc::order_not_coprime: return "OrderNotCoprime";
        case errc::group_too_large: return "GroupTooLarge";
        case errc::invalid_algebra: return "InvalidAlgebra";
        case errc::unsupported: return "Unsupported";
        case errc::parse_error: return "ParseError";
        case errc::validation_error: return "ValidationError";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

namespace {

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long m) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % m);
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long m) {
    unsigned long r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n % q == 0) return n == q;
    }
    unsigned long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin witness set for 64-bit integers.
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        unsigned long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FieldDesc FieldDesc::prime(unsigned long p) {
    if (!is_prime_u64(p)) throw alg_error(errc::validation_error, "characteristic must be prime, got " + std::to_string(p));
    return FieldDesc{Kind::prime, p};
}

std::string FieldDesc::str() const {
    return is_rational() ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::one(FieldDesc fd) {
    Scalar s(fd);
    if (fd.is_rational()) s.q_ = 1;
    else s.r_ = 1 % fd.p;
    return s;
}

Scalar Scalar::from_int(FieldDesc fd, long v) {
    Scalar s(fd);
    if (fd.is_rational()) {
        s.q_ = v;
    } else {
        long m = v % static_cast<long>(fd.p);
        if (m < 0) m += static_cast<long>(fd.p);
        s.r_ = static_cast<unsigned long>(m);
    }
    return s;
}

Scalar Scalar::from_mpq(FieldDesc fd, const mpq_class& q) {
    Scalar s(fd);
    if (fd.is_rational()) {
        s.q_ = q;
        s.q_.canonicalize();
        return s;
    }
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(fd.p));
    mpz_class nr = num % pz, dr = den % pz;
    if (nr < 0) nr += pz;
    if (dr < 0) dr += pz;
    unsigned long n = nr.get_ui(), d = dr.get_ui();
    if (d == 0) throw alg_error(errc::validation_error, "denominator vanishes mod " + std::to_string(fd.p));
    s.r_ = mulmod(n, powmod(d, fd.p - 2, fd.p), fd.p);
    return s;
}

Scalar Scalar::from_string(FieldDesc fd, const std::string& str) {
    mpq_class q;
    if (q.set_str(str, 10) != 0) throw alg_error(errc::parse_error, "bad scalar literal '" + str + "'");
    q.canonicalize();
    return from_mpq(fd, q);
}

bool Scalar::is_zero() const { return fd_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return fd_.is_rational() ? q_ == 1 : r_ == 1 % fd_.p; }

void Scalar::check_same(const Scalar& o) const {
    if (fd_ != o.fd_)
        throw alg_error(errc::field_mismatch, fd_.str() + " vs " + o.fd_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(fd_);
    if (fd_.is_rational()) s.q_ = q_ + o.q_;
    else { s.r_ = r_ + o.r_; if (s.r_ >= fd_.p) s.r_ -= fd_.p; }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s(fd_);
    if (fd_.is_rational()) s.q_ = q_ - o.q_;
    else s.r_ = (r_ >= o.r_) ? r_ - o.r_ : r_ + fd_.p - o.r_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(fd_);
    if (fd_.is_rational()) s.q_ = q_ * o.q_;
    else s.r_ = mulmod(r_, o.r_, fd_.p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s(fd_);
    if (fd_.is_rational()) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : fd_.p - r_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw alg_error(errc::validation_error, "division by zero");
    Scalar s(fd_);
    if (fd_.is_rational()) s.q_ = 1 / q_;
    else s.r_ = powmod(r_, fd_.p - 2, fd_.p);
    return s;
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar r = one(fd_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (fd_ != o.fd_) return false;
    return fd_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    return fd_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace gradalg
