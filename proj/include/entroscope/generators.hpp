#pragma once

#include <Eigen/Dense>

#include "entroscope/functionals.hpp"
#include "entroscope/state_space.hpp"
#include "entroscope/weights.hpp"

namespace entroscope {

/// Dense infinitesimal generator L on a finite state space. Off-diagonals are
/// nonnegative, rows sum to zero, and L is symmetric (self-adjoint w.r.t. the
/// uniform measure).
struct GeneratorMatrix {
  StateSpace space;
  Eigen::MatrixXd L;
};

/// Weighted sum of block conditioning terms: D_sel(f) = sum_A alpha_A mu[Sel_A f].
/// The same terms, assembled as sum_A alpha_A (P_A - I), give the generator.
struct DirichletForm {
  StateSpace space;
  std::vector<double> weights;          // alpha_A per term, positive
  std::vector<BlockPartition> parts;    // aligned with weights
};

/// Single-particle random walk, L[x][y] = c_xy.
GeneratorMatrix gen_single_graph(const WeightedGraph& g);

/// Hypergraph walk L_alpha f(x) = sum_{A owns x} alpha_A [mean_A f - f(x)].
GeneratorMatrix gen_single_hypergraph(const HypergraphWeights& h);

/// Synchronous updates of N labeled particles: Q_alpha = sum_A alpha_A (nu_A - I).
GeneratorMatrix gen_synchronous(const HypergraphWeights& h, int N);

/// Block shuffle on permutations: G_alpha = sum_A alpha_A (mu_A - I).
GeneratorMatrix gen_shuffle(const HypergraphWeights& h);

/// Pair-swap dynamics of r unlabeled particles on n sites, unit rate per pair.
GeneratorMatrix gen_bernoulli_laplace(int n, int r);

/// Block terms of the corresponding dynamics on the given space kind.
DirichletForm dirichlet_form(const StateSpace& space, const HypergraphWeights& h);
DirichletForm bernoulli_laplace_form(int n, int r);

GeneratorMatrix generator_of(const DirichletForm& form);

double dirichlet(const DirichletForm& form, LocalFunctional sel, const Eigen::ArrayXd& f);

/// -mu(f L f), the quadratic Dirichlet energy of the generator.
double quadratic_energy(const GeneratorMatrix& gen, const Eigen::ArrayXd& f);

void check_generator(const GeneratorMatrix& gen, double tol = 1e-12);

}  // namespace entroscope
