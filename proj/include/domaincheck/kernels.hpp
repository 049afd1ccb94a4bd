#pragma once

#include <span>
#include <vector>

#include "domaincheck/poset.hpp"

/// Brute-force inner loops, each in a plain serial reference form and an
/// OpenMP form. Both return families sorted ascending, so results compare
/// with ==.
namespace domaincheck::kernels {

/// Subsets U that are upper and meet every directed D with sup D ∈ U.
std::vector<Mask> scott_opens_serial(const FinitePoset& p);
std::vector<Mask> scott_opens_omp(const FinitePoset& p);

/// rows[x] = {y : x ≪ y}, deciding each pair over all directed subsets.
std::vector<Mask> way_below_rows_serial(const FinitePoset& p);
std::vector<Mask> way_below_rows_omp(const FinitePoset& p);

/// Subsets U such that every Smyth-directed family 𝓕 of at most
/// `family_bound` antichains, and every x ∈ U with ∩↑F ⊆ ↑x, has some
/// F ∈ 𝓕 with ↑F ⊆ U.
std::vector<Mask> glim_opens_serial(const FinitePoset& p, std::size_t family_bound);
std::vector<Mask> glim_opens_omp(const FinitePoset& p, std::size_t family_bound);

/// A convergent net: it converges to every point of `limits`, and its level
/// set {j : x_j ∉ U} is negligible exactly when `required` ⊆ U.
struct LimitConstraint {
  Mask limits = 0;
  Mask required = 0;
  friend auto operator<=>(const LimitConstraint&, const LimitConstraint&) = default;
};

/// Subsets U with required ⊆ U for every constraint whose limits meet U.
std::vector<Mask> constrained_opens_serial(std::size_t carrier_size,
                                           std::span<const LimitConstraint> constraints);
std::vector<Mask> constrained_opens_omp(std::size_t carrier_size,
                                        std::span<const LimitConstraint> constraints);

}  // namespace domaincheck::kernels
