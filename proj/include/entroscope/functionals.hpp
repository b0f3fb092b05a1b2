#pragma once

#include <Eigen/Dense>

#include "entroscope/state_space.hpp"

namespace entroscope {

/// x log x extended by continuity at 0.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

/// Two-point entropy psi(a,b) = a/2 log a + b/2 log b - (a+b)/2 log((a+b)/2).
/// Symmetric, 1-homogeneous, vanishes iff a = b.
double psi(double a, double b);

/// Entropy of the pair (a,b) against Bernoulli(rho):
/// rho a log(a/m) + (1-rho) b log(b/m), m = rho a + (1-rho) b.
double psi_rho(double a, double b, double rho);

/// Symmetrization (psi_rho(a,b) + psi_rho(b,a)) / 2; reduces to psi at rho = 1/2.
double psi_bar_rho(double a, double b, double rho);

/// Shannon entropy of Bernoulli(rho).
double shannon_h(double rho);

/// mean of (a,b) under Bernoulli(rho)
inline double mu_rho(double a, double b, double rho) { return rho * a + (1.0 - rho) * b; }

/// (1/n) sum_i psi_rho(a_i, abar_i) where abar_i averages the other entries.
double psi_hat(const Eigen::ArrayXd& a, double rho);

/// Leave-one-out averages abar_i = (sum_{j != i} a_j) / (n-1).
Eigen::ArrayXd leave_one_out_mean(const Eigen::ArrayXd& a);

struct LocalEdgeTerms {
  double var_sqrt;   // (sqrt a - sqrt b)^2 / 4
  double ent;        // psi(a, b)
  double cov_flogf;  // (a - b) log(a/b) / 4, +inf when exactly one of a,b is 0
  bool cov_infinite;
};
LocalEdgeTerms local_edge_functionals(double a, double b);

// Global functionals under the uniform measure (mean over entries).
double entropy(const Eigen::ArrayXd& f);
double variance(const Eigen::ArrayXd& f);

void validate_density(const Eigen::ArrayXd& f);

/// Local functional applied inside each conditioning class.
enum class LocalFunctional { Entropy, Variance, VarSqrt, CovFlogF };

/// mu[Ent_A f]: measure-weighted sum over classes of within-class relative entropy.
double block_entropy(const Eigen::ArrayXd& f, const BlockPartition& part);
double block_variance(const Eigen::ArrayXd& f, const BlockPartition& part);
double block_var_sqrt(const Eigen::ArrayXd& f, const BlockPartition& part);
/// +inf when some class mixes zeros with positive values.
double block_cov_flogf(const Eigen::ArrayXd& f, const BlockPartition& part);

double block_functional(LocalFunctional kind, const Eigen::ArrayXd& f, const BlockPartition& part);

/// Class-wise conditional mean of f, constant on each class (the operator mu_A / nu_A).
Eigen::ArrayXd conditional_mean(const Eigen::ArrayXd& f, const BlockPartition& part);

/// Per-class means as a vector indexed by class.
Eigen::ArrayXd class_means(const Eigen::ArrayXd& f, const BlockPartition& part);

/// Entropy of the vector of class means under the class-size-weighted measure,
/// i.e. Ent[mu(f | partition)].
double entropy_of_class_means(const Eigen::ArrayXd& f, const BlockPartition& part);
double variance_of_class_means(const Eigen::ArrayXd& f, const BlockPartition& part);

const char* local_functional_name(LocalFunctional kind);

}  // namespace entroscope
