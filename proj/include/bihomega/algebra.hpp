#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bihomega/errors.hpp"
#include "bihomega/matrix.hpp"
#include "bihomega/semigroup.hpp"

namespace bihomega {

/// One bilinear map per pair (a, b) of semigroup elements, stored as dense
/// structure constants: at(a, b, i, j, k) is the coefficient of e_k in
/// e_i o_{a,b} e_j.
class BilinearFamily {
 public:
  BilinearFamily(SemigroupPtr omega, std::size_t dim);

  [[nodiscard]] const SemigroupPtr& omega() const { return omega_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }

  Rational& at(std::size_t a, std::size_t b, std::size_t i, std::size_t j, std::size_t k) {
    return data_[offset(a, b, i, j) + k];
  }
  [[nodiscard]] const Rational& at(std::size_t a, std::size_t b, std::size_t i, std::size_t j, std::size_t k) const {
    return data_[offset(a, b, i, j) + k];
  }
  /// e_i o_{a,b} e_j as a coefficient span.
  [[nodiscard]] std::span<const Rational> cell(std::size_t a, std::size_t b, std::size_t i, std::size_t j) const {
    return {data_.data() + offset(a, b, i, j), dim_};
  }
  [[nodiscard]] std::span<const Rational> data() const { return data_; }

  /// x o_{a,b} y. Throws DimensionMismatch.
  [[nodiscard]] Vector apply(std::size_t a, std::size_t b, std::span<const Rational> x, std::span<const Rational> y) const;

  [[nodiscard]] bool is_zero() const;

  BilinearFamily& operator+=(const BilinearFamily& o);
  BilinearFamily& operator*=(const Rational& s);
  friend BilinearFamily operator+(BilinearFamily a, const BilinearFamily& b) { return a += b; }
  friend BilinearFamily operator*(const Rational& s, BilinearFamily a) { return a *= s; }

  friend bool operator==(const BilinearFamily& a, const BilinearFamily& b);

 private:
  [[nodiscard]] std::size_t offset(std::size_t a, std::size_t b, std::size_t i, std::size_t j) const {
    return (((a * omega_->order() + b) * dim_ + i) * dim_ + j) * dim_;
  }

  SemigroupPtr omega_;
  std::size_t dim_;
  std::vector<Rational> data_;
};

/// One d x d matrix per semigroup element.
class LinearFamily {
 public:
  LinearFamily(SemigroupPtr omega, std::size_t dim, std::vector<Matrix> maps);

  static LinearFamily identity(SemigroupPtr omega, std::size_t dim);
  static LinearFamily zero(SemigroupPtr omega, std::size_t dim);
  static LinearFamily scalar(SemigroupPtr omega, std::size_t dim, const Rational& s);
  /// The same matrix at every element.
  static LinearFamily constant(SemigroupPtr omega, const Matrix& m);

  [[nodiscard]] const SemigroupPtr& omega() const { return omega_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Matrix& operator[](std::size_t a) const { return maps_.at(a); }
  [[nodiscard]] const std::vector<Matrix>& maps() const { return maps_; }

  [[nodiscard]] bool is_identity() const;
  /// Elementwise composition: (this o other)_a = this_a * other_a.
  [[nodiscard]] LinearFamily compose(const LinearFamily& other) const;
  /// Elementwise inverse; throws Singular naming the offending element.
  [[nodiscard]] LinearFamily inverse() const;
  [[nodiscard]] LinearFamily power(unsigned k) const;

  friend bool operator==(const LinearFamily& a, const LinearFamily& b);

 private:
  SemigroupPtr omega_;
  std::size_t dim_;
  std::vector<Matrix> maps_;
};

/// The first element index a at which a_f and b_f fail to commute, if any.
std::optional<std::size_t> first_noncommuting(const LinearFamily& f, const LinearFamily& g);

enum class AlgebraKind {
  OmegaAssociative,
  BiHomOmegaAssociative,
  Dendriform,
  PreLie,
  Lie,
  PostLie,
  Zinbiel,
  PrePoisson,
};

inline constexpr AlgebraKind kAllKinds[] = {
    AlgebraKind::OmegaAssociative, AlgebraKind::BiHomOmegaAssociative, AlgebraKind::Dendriform,
    AlgebraKind::PreLie,           AlgebraKind::Lie,                   AlgebraKind::PostLie,
    AlgebraKind::Zinbiel,          AlgebraKind::PrePoisson,
};

/// DSL keyword of a kind, e.g. "omega_associative", "lie".
std::string_view kind_keyword(AlgebraKind kind);
std::optional<AlgebraKind> kind_from_keyword(std::string_view keyword);
bool is_associative_kind(AlgebraKind kind);

/// Names of the product components a kind carries, in storage order:
/// associative "dot"; dendriform "prec","succ"; pre-Lie "tri"; Lie "bracket";
/// PostLie "bracket","tri"; zinbiel "star"; pre-Poisson "tri","star".
std::span<const std::string_view> product_roles(AlgebraKind kind);

/// Tagged algebra: kind, carrier dimension, product components and the pair of
/// structure-map families. Only structural invariants are enforced here; the
/// kind's axioms are the checkers' business.
class AlgebraInstance {
 public:
  /// new_instance. Throws ShapeMismatch, or NonCommutingStructureMaps naming
  /// the first element a with p_a q_a != q_a p_a.
  static AlgebraInstance make(AlgebraKind kind, std::vector<BilinearFamily> products, LinearFamily p, LinearFamily q);
  /// Same, with identity structure maps.
  static AlgebraInstance make(AlgebraKind kind, std::vector<BilinearFamily> products);
  /// All products zero, identity structure maps.
  static AlgebraInstance zero(AlgebraKind kind, SemigroupPtr omega, std::size_t dim);

  [[nodiscard]] AlgebraKind kind() const { return kind_; }
  [[nodiscard]] const SemigroupPtr& omega() const { return omega_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<BilinearFamily>& products() const { return products_; }
  [[nodiscard]] const BilinearFamily& product(std::size_t i = 0) const { return products_.at(i); }
  /// Component by role name; throws KindMismatch if the kind has no such role.
  [[nodiscard]] const BilinearFamily& product(std::string_view role) const;
  [[nodiscard]] const LinearFamily& p() const { return p_; }
  [[nodiscard]] const LinearFamily& q() const { return q_; }

  /// Same data under another tag with the same number of components.
  [[nodiscard]] AlgebraInstance retagged(AlgebraKind kind) const;

  friend bool operator==(const AlgebraInstance& a, const AlgebraInstance& b);

 private:
  AlgebraInstance(AlgebraKind kind, std::vector<BilinearFamily> products, LinearFamily p, LinearFamily q);

  AlgebraKind kind_;
  SemigroupPtr omega_;
  std::size_t dim_;
  std::vector<BilinearFamily> products_;
  LinearFamily p_;
  LinearFamily q_;
};

class NonCommutingStructureMaps : public Error {
 public:
  NonCommutingStructureMaps(std::size_t element, const std::string& label)
      : Error("structure maps p and q do not commute at element '" + label + "'"), element_(element) {}
  [[nodiscard]] std::size_t element() const { return element_; }

 private:
  std::size_t element_;
};

struct RotaBaxterFamily {
  LinearFamily maps;
  Rational weight;

  friend bool operator==(const RotaBaxterFamily&, const RotaBaxterFamily&) = default;
};

/// x o_{a,b} y for a product family (free-function form of BilinearFamily::apply).
inline Vector apply_product(const BilinearFamily& f, std::size_t a, std::size_t b, std::span<const Rational> x,
                            std::span<const Rational> y) {
  return f.apply(a, b, x, y);
}

/// Tensor of (x, y) -> left_a(x) o_{a,b} right_b(y).
BilinearFamily precompose(const BilinearFamily& f, const LinearFamily& left, const LinearFamily& right);

/// Tensor of (x, y) -> (x o_{b,a} y) taken with swapped arguments and indices:
/// result_{a,b}(x, y) = left_b(y) o_{b,a} right_a(x). Used for the twisted commutators.
BilinearFamily twisted_opposite(const BilinearFamily& f, const LinearFamily& left, const LinearFamily& right);

/// Stable 64-bit FNV-1a digest of an instance's kind, shape, tensors and maps, as 16 hex digits.
std::string digest(const AlgebraInstance& a);
std::string digest(const LinearFamily& f);

}  // namespace bihomega
