#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace hypcover {

/// Finite pseudo-metric space on {0, ..., size-1}. Axioms are checked by validate().
class FinitePseudoMetric {
 public:
  explicit FinitePseudoMetric(Eigen::MatrixXd d);

  Eigen::Index size() const { return d_.rows(); }
  const Eigen::MatrixXd& d() const { return d_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return d_(i, j); }

  bool identically_zero() const { return (d_.array() == 0.0).all(); }

 private:
  Eigen::MatrixXd d_;
};

using Permutation = std::vector<int>;

/// Finite group given by its elements as permutations of the point set.
struct FreeIsometricAction {
  std::vector<Permutation> perms;
};

struct ValidationReport {
  bool shapes = true;
  bool pseudo_metric = true;  ///< zero diagonal, nonnegative, symmetric
  bool triangle = true;       ///< within 1e-12 slack
  bool group = true;          ///< identity, closure under composition and inverse
  bool isometric = true;      ///< exact
  bool free = true;           ///< no fixed points off the identity
  std::vector<std::string> failures;

  bool ok() const { return shapes && pseudo_metric && triangle && group && isometric && free; }
};

inline constexpr double kTriangleSlack = 1e-12;

/// Pseudo-metric axioms only.
ValidationReport validate_metric(const FinitePseudoMetric& space);
ValidationReport validate(const FinitePseudoMetric& space, const FreeIsometricAction& action);

struct Quotient {
  FinitePseudoMetric metric;
  std::vector<int> representatives;  ///< minimal index of each orbit, ascending
  std::vector<int> orbit_of;         ///< orbit index of every point
  Eigen::MatrixXi witness;           ///< group element attaining each minimum
};

/**
 * Quotient by the deck group: d(orbit i, orbit j) = min_g d(rep_i, g rep_j).
 * The minimum is over a finite group, so it is attained. Throws
 * InvalidModel when validate() fails.
 */
Quotient quotient_metric(const FinitePseudoMetric& space, const FreeIsometricAction& action);

/// Classes of the relation d(x, y) == 0, each sorted, ordered by first element.
std::vector<std::vector<int>> zero_classes(const FinitePseudoMetric& space);

/// True when every zero class meets every orbit of the action.
bool zero_classes_surject(const FinitePseudoMetric& space, const FreeIsometricAction& action);

struct FiniteModel {
  FinitePseudoMetric space;
  FreeIsometricAction action;
};

/// Path metric of a 4-cycle with the antipodal swap.
FiniteModel demo_model();

/**
 * Random valid model: size <= 12, group order in {1, 2, 3, 4} acting freely,
 * metric from the shortest-path closure of a random symmetric matrix and
 * averaged over the group. Models whose total space splits into several
 * copies of the quotient are resampled.
 */
FiniteModel random_model(std::uint64_t seed);

}  // namespace hypcover
