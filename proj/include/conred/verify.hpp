#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conred/classify.hpp"
#include "conred/moment.hpp"
#include "conred/rng.hpp"

namespace conred {

struct SampleConfig {
    std::int64_t samples = 1000;
    std::uint64_t seed = 12345;
    double tol_alg = 1e-12;     // algebraic identities
    double tol_eig = 1e-9;      // eigenvalue-based checks
    double fd_step = 1e-4;      // finite-difference step
    double rank_rel_tol = 1e-8; // relative singular-value threshold
};

struct PropertyReport {
    std::string property;
    bool pass = false;
    std::int64_t samples = 0;
    double max_residual = 0.0;
    std::string witness; // serialized input attaining the max, empty if none
    std::string error;   // precondition failure code, empty if the check ran
};

// Unit vector with complex standard-normal entries; deterministic per rng.
Eigen::VectorXcd sample_unit(std::int64_t dim, SplitMix64& rng);

// Point on the torus level set: the P and N blocks of a random unit vector
// are rescaled so that sum_P |n| |z|^2 = sum_N |n| |z|^2, then renormalized.
ProjVector sample_mtnu(const RepDescriptor& rep, RayDir nu, SplitMix64& rng);

// Same, with an injectable raw draw (resampling and failure paths testable).
ProjVector sample_mtnu_with(const RepDescriptor& rep, RayDir nu,
                            const std::function<Eigen::VectorXcd()>& draw);

// Random point with sum w_j |v_j|^2 = 1.
Eigen::VectorXcd sample_weighted_sphere(std::span<const double> weights, SplitMix64& rng);

// Realified tangent vectors of the four basis fields (eta, xi, rho, gamma).
std::array<Eigen::VectorXd, 4> fundamental_fields(const RepDescriptor& rep, const ProjVector& Z);

// Count of singular values above rank_rel_tol times the largest one.
int numeric_rank(const std::vector<Eigen::VectorXd>& vectors, double rank_rel_tol);

// Run every applicable property; errors from preconditions are captured in
// the corresponding report rather than thrown.
std::vector<PropertyReport> run_suite(const RepDescriptor& rep, std::optional<RayDir> nu,
                                      const SampleConfig& config);

} // namespace conred
