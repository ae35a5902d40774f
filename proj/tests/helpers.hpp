// helpers.hpp — shared builders for the test suites: standard presentations
// (k[x]/x^n, type-A path algebras), small groups, and deterministic RNG.
#pragma once

#include <random>

#include "gradalg/constructions.hpp"
#include "gradalg/io.hpp"

namespace testutil {

using namespace gradalg;

inline QuiverPresentation truncated_poly(FieldDesc fd, unsigned n, long deg_x = 1) {
    // k[x]/x^n: one vertex, loop x, relation x^n.
    QuiverPresentation p;
    p.field = fd;
    p.vertices = {"1"};
    p.arrows = {{"x", "1", "1", deg_x}};
    Relation r;
    r.terms.emplace_back(Scalar::one(fd), std::vector<std::string>(n, "x"));
    p.relations = {r};
    p.path_length_bound = n + 1;
    return p;
}

// Type-A quiver on m vertices; orientation[i] = true means arrow i+1 -> i+2,
// false means arrow i+2 -> i+1. No relations (hereditary).
inline QuiverPresentation type_a(FieldDesc fd, unsigned m, const std::vector<bool>& orientation,
                                 const std::vector<long>& degrees = {}) {
    QuiverPresentation p;
    p.field = fd;
    for (unsigned v = 1; v <= m; ++v) p.vertices.push_back(std::to_string(v));
    for (unsigned i = 0; i + 1 < m; ++i) {
        Arrow a;
        a.name = "a" + std::to_string(i + 1);
        a.source = std::to_string(orientation[i] ? i + 1 : i + 2);
        a.target = std::to_string(orientation[i] ? i + 2 : i + 1);
        a.degree = degrees.empty() ? 0 : degrees[i];
        p.arrows.push_back(a);
    }
    p.path_length_bound = m;
    return p;
}

inline QuiverPresentation ka2(FieldDesc fd, long arrow_degree = 0) {
    return type_a(fd, 2, {true}, {arrow_degree});
}

inline AlgebraRep build(const QuiverPresentation& p) { return build_from_presentation(p).algebra; }

inline GroupRep pm1_group(FieldDesc fd, std::size_t n) {
    Mat neg(fd, n, n);
    for (std::size_t i = 0; i < n; ++i) neg.at(i, i) = -Scalar::one(fd);
    return GroupRep::generate(fd, n, {neg});
}

inline GroupRep trivial_group(FieldDesc fd, std::size_t n) { return GroupRep::generate(fd, n, {}); }

// Order-3 matrix over F_2 cycling the three involutions of (Z/2)^2.
inline GroupRep z3_on_f2_square() {
    FieldDesc f2 = FieldDesc::prime(2);
    Mat m(f2, 2, 2);
    m.at(0, 0) = Scalar::zero(f2);
    m.at(0, 1) = Scalar::one(f2);
    m.at(1, 0) = Scalar::one(f2);
    m.at(1, 1) = Scalar::one(f2);
    return GroupRep::generate(f2, 2, {m});
}

inline std::mt19937_64 rng(std::uint64_t seed = 0) { return std::mt19937_64(seed); }

}  // namespace testutil
