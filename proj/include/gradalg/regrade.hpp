// regrade.hpp — grading positivity: weighted Ext digraph, negative-cycle
// detection, shortest-path potentials, the finite-set potential lemma, and the
// full normalization pipeline producing a nonnegative regrading.
#pragma once

#include "gradalg/homology.hpp"

namespace gradalg {

struct WeightedDigraph {
    struct Edge {
        std::size_t from = 0, to = 0;
        long weight = 0;
        std::size_t multiplicity = 1;  // parallel arrows collapsed to the min weight
    };
    std::vector<std::string> nodes;
    std::vector<Edge> edges;
};

// Edge i -> j present iff some Ext^1(S_i, S_j<-d>) != 0, weighted by the
// minimum such d.
WeightedDigraph ext_weight_graph(const ExtQuiver& e);

struct NegativeCycleWitness {
    std::vector<std::size_t> cycle;  // node indices, consecutive edges, closing back to front
    long total = 0;
};

// nullopt = every directed cycle has nonnegative weight (Bellman-Ford with an
// extra detection round).
std::optional<NegativeCycleWitness> cycle_positivity(const WeightedDigraph& g);

// d with weight + d(from) - d(to) >= 0 on every edge. Throws negative_cycle
// when the precondition fails.
ShiftVector potential_shifts(const WeightedDigraph& g);

struct DistanceTable {
    std::vector<std::string> nodes;
    std::vector<std::vector<long>> f;  // f[x][y], diagonal 0
};

// Validates the triangle and pair inequalities, then runs the iterative
// proof: repeatedly add the indicator of E_- = {x : exists y, f'(x,y) < 0}.
std::map<std::string, long> lemmefonction_solve(const DistanceTable& t);

struct NormalizeResult {
    bool positive = false;
    Grading grading;      // valid, all degrees >= 0 when positive
    ShiftVector shifts;
    std::optional<NegativeCycleWitness> witness;  // set when not positive
    std::vector<std::string> node_labels;         // for printing witnesses
};

NormalizeResult normalize_positive(const AlgebraRep& a, const Grading& g);

}  // namespace gradalg
