#pragma once

#include <utility>
#include <vector>

#include "rnaforge/structure.hpp"
#include "rnaforge/thermo.hpp"

namespace rnaforge {

// Base-pair marginals from the inside-outside pass.
struct PairProbs {
    int n = 0;
    std::vector<double> p;  // n*n, symmetric, p[i*n+j] = P(pair (i,j))
    std::vector<double> q;  // q[i] = P(i unpaired) = 1 - sum_j p[i][j]

    double pair(int i, int j) const { return p[static_cast<size_t>(i) * n + j]; }
};

// Exhaustive thermodynamic evaluation of one sequence.
struct FoldSummary {
    int mfe_value = 0;            // deci-kcal/mol
    Structure mfe_structure;      // deterministic tie-broken representative
    BigInt mfe_count = 1;         // |MFEs(x)|
    double q = 1.0;               // partition function
    PairProbs probs;
};

// FoldSummary plus the per-design metrics against a target structure.
struct DesignEval {
    FoldSummary summary;
    double prob = 0.0;  // p(y|x)
    double ned = 0.0;
    bool is_mfe = false;
    bool is_umfe = false;
};

// All well-formed dot-bracket strings of length n under the hairpin
// constraint, in lexicographic (ASCII) order. Guarded at n <= 18.
std::vector<Structure> enumerate_structures(int n, int h_min);

std::pair<int, Structure> mfe(const Sequence& x, const EnergyParams& p);
BigInt count_mfe(const Sequence& x, const EnergyParams& p);
double partition_function(const Sequence& x, const EnergyParams& p);
double boltzmann_prob(const Sequence& x, const Structure& y, const EnergyParams& p);
PairProbs pair_probabilities(const Sequence& x, const EnergyParams& p);
double ned(const Sequence& x, const Structure& y, const EnergyParams& p);
DesignEval fold_summary(const Sequence& x, const Structure& y, const EnergyParams& p);

}  // namespace rnaforge
