#pragma once

#include <cstdint>
#include <vector>

#include "hsc/hypergraph.hpp"

namespace hsc {

// Numeric instance of a sparsity pattern. values_a runs parallel to
// pattern.nonzeros_a, values_b to pattern.nonzeros_b; every coefficient is
// nonzero with magnitude in [0.1, 1].
struct Realization {
  SparsityPattern pattern;
  std::vector<double> values_a;
  std::vector<double> values_b;
  std::uint64_t seed = 0;
};

// Independent coefficients per support entry, uniform on
// [-1,-0.1] union [0.1,1]. Deterministic per (pattern, seed).
Realization realize_random(const SparsityPattern& p, std::uint64_t seed);

// Evaluates A v1 ... v_{k-1}: component h accumulates, over support tuples
// (h, t2..tk), the coefficient times prod_i args[i][t_{i+1}]. args must hold
// k-1 vectors of length n. Iterates the sparse support only.
std::vector<double> apply_polynomial(const Realization& r,
                                     const std::vector<std::vector<double>>& args);

struct RankReport {
  std::uint32_t rank = 0;
  std::uint32_t sweeps = 0;  // candidate sweeps executed
};

// Rank of the nonlinear controllability matrix by basis growth. Block 0 is
// the driver columns (a random nonzero at each driver row); each sweep
// applies the polynomial to every multiset of k-1 vectors from the basis at
// sweep start and admits candidates whose orthogonal residual exceeds
// tol times the candidate norm. Stops at rank n, after a sweep without
// growth, or after n-1 sweeps. Capacity cap: n <= 8.
RankReport controllability_rank(const Realization& r,
                                const std::vector<NodeId>& drivers,
                                double tol = 1e-8);

struct CrossValidation {
  double fraction_full_rank = 0.0;
  std::vector<std::uint32_t> per_trial_ranks;
  bool structural_verdict = false;
};

// Draws `trials` seeded realizations, ranks each against the driver set and
// compares with the structural verifier's verdict on the same instance.
CrossValidation cross_validate(const SparsityPattern& p,
                               const std::vector<NodeId>& drivers,
                               std::uint32_t trials, std::uint64_t seed);

}  // namespace hsc
