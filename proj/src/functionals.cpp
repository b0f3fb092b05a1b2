#include "entroscope/functionals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace entroscope {

double psi(double a, double b) {
  if (a < 0 || b < 0) throw std::domain_error("psi: negative argument");
  if (a == b || a + b <= 0) return 0.0;
  // stable form: a/2 log(a/m) + b/2 log(b/m), m = (a+b)/2, via log1p of the
  // relative deviation so near-equal pairs do not cancel catastrophically
  double r = (a - b) / (a + b);
  double ta = a > 0 ? a * std::log1p(r) : 0.0;
  double tb = b > 0 ? b * std::log1p(-r) : 0.0;
  return 0.5 * (ta + tb);
}

double psi_rho(double a, double b, double rho) {
  if (rho < 0 || rho > 1) throw std::domain_error("psi_rho: rho outside [0,1]");
  if (a < 0 || b < 0) throw std::domain_error("psi_rho: negative argument");
  if (a == b) return 0.0;
  double m = mu_rho(a, b, rho);
  if (m <= 0) return 0.0;
  double ta = a > 0 ? rho * a * std::log1p((1.0 - rho) * (a - b) / m) : 0.0;
  double tb = b > 0 ? (1.0 - rho) * b * std::log1p(rho * (b - a) / m) : 0.0;
  return ta + tb;
}

double psi_bar_rho(double a, double b, double rho) {
  return 0.5 * (psi_rho(a, b, rho) + psi_rho(b, a, rho));
}

double shannon_h(double rho) {
  if (rho < 0 || rho > 1) throw std::domain_error("shannon_h: rho outside [0,1]");
  return -xlogx(rho) - xlogx(1.0 - rho);
}

Eigen::ArrayXd leave_one_out_mean(const Eigen::ArrayXd& a) {
  long n = a.size();
  if (n < 2) throw std::domain_error("leave_one_out_mean: need n >= 2");
  double total = a.sum();
  return (total - a) / static_cast<double>(n - 1);
}

double psi_hat(const Eigen::ArrayXd& a, double rho) {
  long n = a.size();
  if (n < 2) throw std::domain_error("psi_hat: need n >= 2");
  Eigen::ArrayXd abar = leave_one_out_mean(a);
  double s = 0.0;
  for (long i = 0; i < n; ++i) s += psi_rho(a[i], abar[i], rho);
  return s / static_cast<double>(n);
}

LocalEdgeTerms local_edge_functionals(double a, double b) {
  if (a < 0 || b < 0) throw std::domain_error("local_edge_functionals: negative argument");
  LocalEdgeTerms t;
  double d = std::sqrt(a) - std::sqrt(b);
  t.var_sqrt = 0.25 * d * d;
  t.ent = psi(a, b);
  t.cov_infinite = false;
  if (a == b) {
    t.cov_flogf = 0.0;
  } else if (a == 0.0 || b == 0.0) {
    t.cov_flogf = std::numeric_limits<double>::infinity();
    t.cov_infinite = true;
  } else {
    t.cov_flogf = 0.25 * (a - b) * std::log(a / b);
  }
  return t;
}

namespace {

// sum over the range of f log(f/m) - f + m: the Gibbs form of relative
// entropy with every term nonnegative, so near-constant inputs do not cancel
template <class Range>
double gibbs_entropy_sum(const Eigen::ArrayXd& f, const Range& idx, double m) {
  double s = 0.0;
  for (int i : idx) {
    double t = m - f[i];
    if (f[i] > 0) t += f[i] * std::log1p((f[i] - m) / m);
    s += t;
  }
  return s;
}

struct AllIndices {
  long n;
  struct It {
    long i;
    int operator*() const { return static_cast<int>(i); }
    It& operator++() { ++i; return *this; }
    bool operator!=(const It& o) const { return i != o.i; }
  };
  It begin() const { return {0}; }
  It end() const { return {n}; }
};

}  // namespace

double entropy(const Eigen::ArrayXd& f) {
  double m = f.mean();
  if (m <= 0) return 0.0;
  return gibbs_entropy_sum(f, AllIndices{f.size()}, m) / static_cast<double>(f.size());
}

double variance(const Eigen::ArrayXd& f) {
  double m = f.mean();
  return (f - m).square().mean();
}

void validate_density(const Eigen::ArrayXd& f) {
  if (f.size() == 0) throw std::invalid_argument("density: empty");
  if (f.minCoeff() < 0) throw std::invalid_argument("density: negative entry");
  if (f.maxCoeff() <= 0) throw std::invalid_argument("density: identically zero");
}

namespace {

void check_sizes(const Eigen::ArrayXd& f, const BlockPartition& part) {
  if (f.size() != static_cast<long>(part.class_of.size()))
    throw std::domain_error("block functional: density size does not match partition");
}

template <class ClassTerm>
double accumulate_classes(const Eigen::ArrayXd& f, const BlockPartition& part, ClassTerm term) {
  check_sizes(f, part);
  double total = 0.0;
  for (long c = 0; c < part.num_classes(); ++c) total += term(part.class_members(c));
  return total / static_cast<double>(f.size());
}

}  // namespace

double block_entropy(const Eigen::ArrayXd& f, const BlockPartition& part) {
  return accumulate_classes(f, part, [&](std::span<const int> cls) {
    double sum = 0.0;
    for (int i : cls) sum += f[i];
    double m = sum / static_cast<double>(cls.size());
    if (m <= 0) return 0.0;
    return gibbs_entropy_sum(f, cls, m);
  });
}

double block_variance(const Eigen::ArrayXd& f, const BlockPartition& part) {
  return accumulate_classes(f, part, [&](std::span<const int> cls) {
    double sum = 0.0;
    for (int i : cls) sum += f[i];
    double m = sum / static_cast<double>(cls.size());
    double s = 0.0;
    for (int i : cls) s += (f[i] - m) * (f[i] - m);
    return s;
  });
}

double block_var_sqrt(const Eigen::ArrayXd& f, const BlockPartition& part) {
  return accumulate_classes(f, part, [&](std::span<const int> cls) {
    double ssqrt = 0.0;
    for (int i : cls) ssqrt += std::sqrt(f[i]);
    double ms = ssqrt / static_cast<double>(cls.size());
    double s = 0.0;
    for (int i : cls) {
      double d = std::sqrt(f[i]) - ms;
      s += d * d;
    }
    return s;
  });
}

double block_cov_flogf(const Eigen::ArrayXd& f, const BlockPartition& part) {
  check_sizes(f, part);
  double total = 0.0;
  for (long c = 0; c < part.num_classes(); ++c) {
    auto cls = part.class_members(c);
    double fmin = std::numeric_limits<double>::infinity();
    double fmax = 0.0;
    for (int i : cls) {
      fmin = std::min(fmin, f[i]);
      fmax = std::max(fmax, f[i]);
    }
    if (fmax == fmin) continue;  // constant class contributes zero
    if (fmin <= 0.0) return std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int i : cls) sum += f[i];
    double m = sum / static_cast<double>(cls.size());
    // sum of (f - m) log(f/m): both factors share sign, so terms are >= 0
    for (int i : cls) total += (f[i] - m) * std::log1p((f[i] - m) / m);
  }
  return total / static_cast<double>(f.size());
}

double block_functional(LocalFunctional kind, const Eigen::ArrayXd& f, const BlockPartition& part) {
  switch (kind) {
    case LocalFunctional::Entropy:
      return block_entropy(f, part);
    case LocalFunctional::Variance:
      return block_variance(f, part);
    case LocalFunctional::VarSqrt:
      return block_var_sqrt(f, part);
    case LocalFunctional::CovFlogF:
      return block_cov_flogf(f, part);
  }
  throw std::logic_error("block_functional: bad kind");
}

Eigen::ArrayXd conditional_mean(const Eigen::ArrayXd& f, const BlockPartition& part) {
  check_sizes(f, part);
  Eigen::ArrayXd out(f.size());
  for (long c = 0; c < part.num_classes(); ++c) {
    auto cls = part.class_members(c);
    double sum = 0.0;
    for (int i : cls) sum += f[i];
    double m = sum / static_cast<double>(cls.size());
    for (int i : cls) out[i] = m;
  }
  return out;
}

Eigen::ArrayXd class_means(const Eigen::ArrayXd& f, const BlockPartition& part) {
  check_sizes(f, part);
  Eigen::ArrayXd out(part.num_classes());
  for (long c = 0; c < part.num_classes(); ++c) {
    auto cls = part.class_members(c);
    double sum = 0.0;
    for (int i : cls) sum += f[i];
    out[c] = sum / static_cast<double>(cls.size());
  }
  return out;
}

double entropy_of_class_means(const Eigen::ArrayXd& f, const BlockPartition& part) {
  Eigen::ArrayXd g = conditional_mean(f, part);
  return entropy(g);
}

double variance_of_class_means(const Eigen::ArrayXd& f, const BlockPartition& part) {
  Eigen::ArrayXd g = conditional_mean(f, part);
  return variance(g);
}

const char* local_functional_name(LocalFunctional kind) {
  switch (kind) {
    case LocalFunctional::Entropy:
      return "entropy";
    case LocalFunctional::Variance:
      return "variance";
    case LocalFunctional::VarSqrt:
      return "var_sqrt";
    case LocalFunctional::CovFlogF:
      return "cov_flogf";
  }
  return "?";
}

}  // namespace entroscope
