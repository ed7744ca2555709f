#include "hsc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hsc/rng.hpp"
#include "hsc/select.hpp"

namespace hsc {

namespace {

constexpr std::uint32_t kMaxOracleN = 8;

void check_oracle_size(const SparsityPattern& p) {
  if (p.n > kMaxOracleN) {
    throw CapacityError("numeric rank check is capped at n = " +
                        std::to_string(kMaxOracleN) + "; got n = " +
                        std::to_string(p.n));
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Subtracts the projection onto each basis vector, twice for stability.
void orthogonalize(std::vector<double>& w,
                   const std::vector<std::vector<double>>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      double c = dot(w, b);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * b[i];
    }
  }
}

}  // namespace

Realization realize_random(const SparsityPattern& p, std::uint64_t seed) {
  Realization r;
  r.pattern = p;
  canonicalize_pattern(r.pattern);
  r.seed = seed;
  Rng rng = Rng::stream(seed, 0);
  // One draw per tail-permutation class, shared across the class: the
  // realized tensor is then symmetric in modes 2..k. Symmetrizing never
  // changes the induced dynamics, and it keeps the rank sweep's multiset
  // enumeration span-exact.
  std::map<std::vector<NodeId>, double> class_coeff;
  r.values_a.reserve(r.pattern.nonzeros_a.size());
  for (const auto& tup : r.pattern.nonzeros_a) {
    std::vector<NodeId> key = tup;
    std::sort(key.begin() + 1, key.end());
    auto it = class_coeff.find(key);
    if (it == class_coeff.end()) {
      it = class_coeff.emplace(std::move(key), rng.signed_coeff()).first;
    }
    r.values_a.push_back(it->second);
  }
  r.values_b.reserve(r.pattern.nonzeros_b.size());
  for (std::size_t i = 0; i < r.pattern.nonzeros_b.size(); ++i) {
    r.values_b.push_back(rng.signed_coeff());
  }
  return r;
}

std::vector<double> apply_polynomial(const Realization& r,
                                     const std::vector<std::vector<double>>& args) {
  const auto& p = r.pattern;
  if (args.size() != static_cast<std::size_t>(p.k) - 1) {
    throw ValidationError("expected " + std::to_string(p.k - 1) +
                          " argument vectors, got " + std::to_string(args.size()));
  }
  for (const auto& v : args) {
    if (v.size() != p.n) {
      throw ValidationError("argument vector length does not match n = " +
                            std::to_string(p.n));
    }
  }
  std::vector<double> out(p.n, 0.0);
  for (std::size_t i = 0; i < p.nonzeros_a.size(); ++i) {
    const auto& tup = p.nonzeros_a[i];
    double prod = r.values_a[i];
    for (std::uint32_t pos = 1; pos < p.k && prod != 0.0; ++pos) {
      prod *= args[pos - 1][tup[pos]];
    }
    out[tup[0]] += prod;
  }
  return out;
}

RankReport controllability_rank(const Realization& r,
                                const std::vector<NodeId>& drivers,
                                double tol) {
  const auto& p = r.pattern;
  check_oracle_size(p);
  const std::uint32_t n = p.n;
  RankReport report;
  if (n == 0) return report;

  std::vector<NodeId> ds = drivers;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  for (NodeId d : ds) {
    if (d >= n) {
      throw ValidationError("driver node id " + std::to_string(d + 1) +
                            " out of range (n = " + std::to_string(n) + ")");
    }
  }

  // Block 0: one column per driver with a random nonzero at that row.
  // Orthonormalized these are just unit coordinate vectors.
  std::vector<std::vector<double>> basis;
  Rng rng = Rng::stream(r.seed, 0xb);
  for (NodeId d : ds) {
    std::vector<double> col(n, 0.0);
    double c = rng.signed_coeff();
    col[d] = (c < 0.0) ? -1.0 : 1.0;
    basis.push_back(std::move(col));
  }
  if (basis.empty()) return report;

  std::vector<std::uint32_t> pick(p.k - 1, 0);
  std::vector<std::vector<double>> args(p.k - 1);
  for (std::uint32_t sweep = 1; sweep < std::max<std::uint32_t>(n, 2); ++sweep) {
    std::size_t r0 = basis.size();
    if (r0 >= n) break;
    report.sweeps = sweep;

    // Every multiset of k-1 basis indices below r0, nondecreasing order.
    std::fill(pick.begin(), pick.end(), 0);
    bool grown = false;
    while (true) {
      for (std::uint32_t i = 0; i + 1 < p.k; ++i) args[i] = basis[pick[i]];
      std::vector<double> w = apply_polynomial(r, args);
      double mag = 0.0;
      for (double x : w) mag += std::abs(x);
      double wn = norm(w);
      // Skip candidates annihilated by cancellation: their direction is
      // numerically meaningless.
      if (wn > 0.0 && wn > 1e-12 * mag) {
        orthogonalize(w, basis);
        double res = norm(w);
        if (res > tol * wn) {
          for (double& x : w) x /= res;
          basis.push_back(std::move(w));
          grown = true;
          if (basis.size() >= n) break;
        }
      }
      // Next nondecreasing index tuple over [0, r0).
      std::int64_t i = static_cast<std::int64_t>(pick.size()) - 1;
      while (i >= 0 && pick[i] == r0 - 1) --i;
      if (i < 0) break;
      std::uint32_t next = pick[i] + 1;
      for (std::size_t j = static_cast<std::size_t>(i); j < pick.size(); ++j)
        pick[j] = next;
    }
    if (!grown || basis.size() >= n) break;
  }
  report.rank = static_cast<std::uint32_t>(basis.size());
  return report;
}

CrossValidation cross_validate(const SparsityPattern& p,
                               const std::vector<NodeId>& drivers,
                               std::uint32_t trials, std::uint64_t seed) {
  check_oracle_size(p);
  CrossValidation cv;
  DirectedHypergraph h = build_hypergraph(p);
  cv.structural_verdict =
      verify_structural_controllability(h, drivers).controllable;
  std::uint32_t full = 0;
  for (std::uint32_t t = 0; t < trials; ++t) {
    std::uint64_t s = seed;
    splitmix64(s);
    s ^= 0x9e3779b97f4a7c15ULL * (t + 1);
    Realization r = realize_random(p, splitmix64(s));
    RankReport rep = controllability_rank(r, drivers);
    cv.per_trial_ranks.push_back(rep.rank);
    if (rep.rank == p.n) ++full;
  }
  cv.fraction_full_rank =
      trials == 0 ? 0.0 : static_cast<double>(full) / trials;
  return cv;
}

}  // namespace hsc
