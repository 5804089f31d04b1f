#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bihomega/algebra.hpp"
#include "bihomega/checkers.hpp"

namespace bihomega {

struct ConstructOptions {
  /// Run the target kind's checker on the output. Preconditions are always checked.
  bool post_check = true;
  CheckOptions check;
};

struct Provenance {
  std::string construction;
  std::vector<std::string> input_digests;
  std::optional<Rational> weight;
  /// Inverse structure maps, when the construction needed them.
  std::optional<LinearFamily> p_inverse;
  std::optional<LinearFamily> q_inverse;
};

struct Constructed {
  AlgebraInstance instance;
  Provenance provenance;
};

/// A checker rejected an input or output; the full verdict is attached.
class CheckFailed : public Error {
 public:
  CheckFailed(const std::string& what, Verdict verdict)
      : Error(what + "\n" + describe_failures(verdict)), verdict_(std::move(verdict)) {}
  [[nodiscard]] const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

class MorphismCheckFailed : public CheckFailed {
 public:
  using CheckFailed::CheckFailed;
};

class PreconditionCheckFailed : public CheckFailed {
 public:
  using CheckFailed::CheckFailed;
};

class PostconditionCheckFailed : public CheckFailed {
 public:
  using CheckFailed::CheckFailed;
};

/// Two of the families handed to a twist do not commute at some element.
class NonCommutingFamilies : public Error {
 public:
  NonCommutingFamilies(std::string first, std::string second, std::size_t element, const std::string& label)
      : Error("families " + first + " and " + second + " do not commute at element '" + label + "'"),
        first_(std::move(first)),
        second_(std::move(second)),
        element_(element) {}
  [[nodiscard]] const std::string& first() const { return first_; }
  [[nodiscard]] const std::string& second() const { return second_; }
  [[nodiscard]] std::size_t element() const { return element_; }

 private:
  std::string first_;
  std::string second_;
  std::size_t element_;
};

/// Every product becomes (x, y) -> p2_a(x) o_{a,b} q2_b(y) and the structure
/// maps become p_a p2_a, q_a q2_a. Requires p2 and q2 to be morphisms of `a`
/// and {p, q, p2, q2} to commute pairwise. An omega_associative input whose
/// new maps are not identities comes back with the associative (BiHom) kind.
Constructed yau_twist(const AlgebraInstance& a, const LinearFamily& p2, const LinearFamily& q2,
                      const ConstructOptions& opts = {});

/// x * y = x R_b(y) + R_a(x) y + w xy on an associative algebra.
Constructed rb_star_associative(const AlgebraInstance& a, const RotaBaxterFamily& r, const ConstructOptions& opts = {});

/// x y = x prec y + x succ y.
Constructed dendriform_total(const AlgebraInstance& a, const ConstructOptions& opts = {});

/// prec = x R_b(y) + w xy, succ = R_a(x) y.
Constructed rb_split_dendriform(const AlgebraInstance& a, const RotaBaxterFamily& r, const ConstructOptions& opts = {});

/// x tri y = x succ_{a,b} y - (p_b^-1 q_b y) prec_{b,a} (p_a q_a^-1 x).
Constructed dendriform_to_prelie(const AlgebraInstance& a, const ConstructOptions& opts = {});

/// The associative product re-tagged as a pre-Lie product.
Constructed assoc_as_prelie(const AlgebraInstance& a, const ConstructOptions& opts = {});

/// {x, y} = x tri_{a,b} y - (p_b^-1 q_b y) tri_{b,a} (p_a q_a^-1 x).
Constructed prelie_to_lie(const AlgebraInstance& a, const ConstructOptions& opts = {});

/// {x, y} = x y - (p_b^-1 q_b y) (p_a q_a^-1 x), the twisted commutator.
Constructed assoc_to_lie(const AlgebraInstance& a, const ConstructOptions& opts = {});

/// <x, y> = {R_a x, y} + {x, R_b y} + w {x, y}.
Constructed rb_bracket_lie(const AlgebraInstance& a, const RotaBaxterFamily& r, const ConstructOptions& opts = {});

/// x tri y = {R_a x, y}; the weight must be 0 (NonzeroWeight).
Constructed rb_lie_to_prelie(const AlgebraInstance& a, const RotaBaxterFamily& r, const ConstructOptions& opts = {});

/// <x, y> = x tri_{a,b} y - (p_b^-1 q_b y) tri_{b,a} (p_a q_a^-1 x) + {x, y}.
Constructed postlie_to_lie(const AlgebraInstance& a, const ConstructOptions& opts = {});

/// Bracket w {x, y} and triangle x tri y = {R_a x, y}.
Constructed lie_rb_to_postlie(const AlgebraInstance& a, const RotaBaxterFamily& r, const ConstructOptions& opts = {});

/// Arguments for run_construction; which ones a construction needs is listed
/// by construction_inputs.
struct ConstructionArgs {
  std::optional<RotaBaxterFamily> rb;
  std::optional<LinearFamily> p2;
  std::optional<LinearFamily> q2;
};

enum class ConstructionInput { None, RotaBaxter, Twist };

/// Names accepted by run_construction, in a fixed order.
const std::vector<std::string_view>& construction_names();
/// std::nullopt for an unknown name.
std::optional<ConstructionInput> construction_inputs(std::string_view name);
/// Dispatch by name. Throws std::invalid_argument for an unknown name or missing argument.
Constructed run_construction(std::string_view name, const AlgebraInstance& a, const ConstructionArgs& args,
                             const ConstructOptions& opts = {});

}  // namespace bihomega
