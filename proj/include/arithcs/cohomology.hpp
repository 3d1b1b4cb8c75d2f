#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "arithcs/cochain.hpp"
#include "arithcs/howell.hpp"

namespace arithcs {

/// Default cap on the degree passed to cohomology().
inline constexpr std::size_t kDefaultCohomologyDegree = 3;

/// H^i(G, M) = Z^i / B^i as a sum of cyclic groups Z/d1 + Z/d2 + ... with
/// d1 | d2 | ..., every dj > 1.
class CohomologyGroup {
 public:
  CohomologyGroup(ModulePtr coeffs, std::size_t degree);

  std::size_t degree() const { return degree_; }
  const ModulePtr& coeffs() const { return coeffs_; }
  const std::vector<std::uint32_t>& invariant_factors() const { return factors_; }
  const std::vector<Cochain>& generators() const { return generators_; }
  bool is_trivial() const { return factors_.empty(); }
  std::uint64_t order() const;

  /// Coordinates of a cocycle's class; throws NotACocycle otherwise.
  VectorZn coordinates(const Cochain& f) const;
  /// The cocycle sum_j coords[j] * generator_j.
  Cochain element(std::span<const Residue> coords) const;

 private:
  ModulePtr coeffs_;
  std::size_t degree_;
  std::vector<std::uint32_t> factors_;
  std::vector<Cochain> generators_;
  std::shared_ptr<const LinearSystem> presentation_;  // [Z | B]
  std::size_t cycle_count_ = 0;
  MatrixZn change_;        // V from the Smith form of the relations
  std::vector<std::size_t> factor_index_;  // diagonal positions with dj > 1
};

CohomologyGroup cohomology(const ModulePtr& coeffs, std::size_t degree,
                           std::size_t max_degree = kDefaultCohomologyDegree);

struct NonCocycle {
  std::vector<Element> witness;  // a tuple where df does not vanish
};
struct Coboundary {
  std::optional<Cochain> preimage;  // empty only for the zero 0-cochain
};
struct NontrivialClass {
  VectorZn coords;
};
using Classification = std::variant<NonCocycle, Coboundary, NontrivialClass>;

/// First tuple on which df is nonzero, if any.
std::optional<std::vector<Element>> cocycle_witness(const Cochain& f);

/// Cached solver for coboundary questions in one degree. `variable_order`
/// permutes the unknowns of d beta = f and so selects a different, still
/// deterministic, preimage.
class Classifier {
 public:
  Classifier(ModulePtr coeffs, std::size_t degree, std::span<const std::size_t> variable_order = {});

  std::size_t degree() const { return degree_; }
  std::size_t unknowns() const;

  /// beta with d beta = f, or nullopt. Does not check that f is a cocycle.
  std::optional<Cochain> preimage(const Cochain& f) const;
  Classification classify(const Cochain& f) const;
  /// Computed on first use.
  const CohomologyGroup& cohomology() const;

 private:
  struct Lazy;
  ModulePtr coeffs_;
  std::size_t degree_;
  std::shared_ptr<const LinearSystem> system_;
  std::shared_ptr<Lazy> lazy_;
};

Classification classify(const Cochain& f);

/// Shorthand: beta with d beta = f under the default variable order.
std::optional<Cochain> solve_coboundary(const Cochain& f);

bool is_cocycle(const Cochain& f);
bool is_coboundary(const Cochain& f);

}  // namespace arithcs
