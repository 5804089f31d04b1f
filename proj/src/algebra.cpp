#include "bihomega/algebra.hpp"

#include <array>
#include <cstdio>

namespace bihomega {

BilinearFamily::BilinearFamily(SemigroupPtr omega, std::size_t dim) : omega_(std::move(omega)), dim_(dim) {
  if (!omega_) throw ShapeMismatch("bilinear family needs a semigroup");
  if (dim_ == 0) throw ShapeMismatch("carrier dimension must be positive");
  const std::size_t n = omega_->order();
  data_.resize(n * n * dim_ * dim_ * dim_);
}

Vector BilinearFamily::apply(std::size_t a, std::size_t b, std::span<const Rational> x,
                             std::span<const Rational> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("product argument has the wrong length");
  if (a >= omega_->order() || b >= omega_->order()) throw IndexOutOfRange("semigroup element index out of range");
  Vector out = zero_vector(dim_);
  Rational xy;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      xy = x[i] * y[j];
      const auto c = cell(a, b, i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!c[k].is_zero()) out[k].add_product(xy, c[k]);
      }
    }
  }
  return out;
}

bool BilinearFamily::is_zero() const { return bihomega::is_zero(data_); }

BilinearFamily& BilinearFamily::operator+=(const BilinearFamily& o) {
  if (*omega_ != *o.omega_ || dim_ != o.dim_) throw ShapeMismatch("bilinear families have different shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

BilinearFamily& BilinearFamily::operator*=(const Rational& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

bool operator==(const BilinearFamily& a, const BilinearFamily& b) {
  return a.dim_ == b.dim_ && *a.omega_ == *b.omega_ && a.data_ == b.data_;
}

LinearFamily::LinearFamily(SemigroupPtr omega, std::size_t dim, std::vector<Matrix> maps)
    : omega_(std::move(omega)), dim_(dim), maps_(std::move(maps)) {
  if (!omega_) throw ShapeMismatch("linear family needs a semigroup");
  if (dim_ == 0) throw ShapeMismatch("carrier dimension must be positive");
  if (maps_.size() != omega_->order()) throw ShapeMismatch("linear family needs one matrix per semigroup element");
  for (const auto& m : maps_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw ShapeMismatch("linear family matrix has the wrong size");
  }
}

LinearFamily LinearFamily::identity(SemigroupPtr omega, std::size_t dim) {
  return scalar(std::move(omega), dim, 1);
}

LinearFamily LinearFamily::zero(SemigroupPtr omega, std::size_t dim) { return scalar(std::move(omega), dim, 0); }

LinearFamily LinearFamily::scalar(SemigroupPtr omega, std::size_t dim, const Rational& s) {
  const std::size_t n = omega ? omega->order() : 0;
  return {std::move(omega), dim, std::vector<Matrix>(n, Matrix::scalar(dim, s))};
}

LinearFamily LinearFamily::constant(SemigroupPtr omega, const Matrix& m) {
  const std::size_t n = omega ? omega->order() : 0;
  return {std::move(omega), m.rows(), std::vector<Matrix>(n, m)};
}

bool LinearFamily::is_identity() const {
  for (const auto& m : maps_) {
    if (!m.is_identity()) return false;
  }
  return true;
}

LinearFamily LinearFamily::compose(const LinearFamily& other) const {
  if (*omega_ != *other.omega_ || dim_ != other.dim_) throw ShapeMismatch("linear families have different shapes");
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < maps_.size(); ++a) out.push_back(maps_[a] * other.maps_[a]);
  return {omega_, dim_, std::move(out)};
}

LinearFamily LinearFamily::inverse() const {
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    try {
      out.push_back(mat_inverse(maps_[a]));
    } catch (const Singular&) {
      throw Singular("map at element '" + omega_->label(a) + "' is not invertible");
    }
  }
  return {omega_, dim_, std::move(out)};
}

LinearFamily LinearFamily::power(unsigned k) const {
  std::vector<Matrix> out;
  for (const auto& m : maps_) out.push_back(mat_power(m, k));
  return {omega_, dim_, std::move(out)};
}

bool operator==(const LinearFamily& a, const LinearFamily& b) {
  return a.dim_ == b.dim_ && *a.omega_ == *b.omega_ && a.maps_ == b.maps_;
}

std::optional<std::size_t> first_noncommuting(const LinearFamily& f, const LinearFamily& g) {
  if (*f.omega() != *g.omega() || f.dim() != g.dim()) throw ShapeMismatch("linear families have different shapes");
  for (std::size_t a = 0; a < f.maps().size(); ++a) {
    if (!mats_commute(f[a], g[a])) return a;
  }
  return std::nullopt;
}

namespace {

constexpr std::array<std::string_view, 8> kKeywords = {
    "omega_associative", "associative", "dendriform", "prelie", "lie", "postlie", "zinbiel", "prepoisson",
};

constexpr std::string_view kDot[] = {"dot"};
constexpr std::string_view kDend[] = {"prec", "succ"};
constexpr std::string_view kTri[] = {"tri"};
constexpr std::string_view kBracket[] = {"bracket"};
constexpr std::string_view kPost[] = {"bracket", "tri"};
constexpr std::string_view kStar[] = {"star"};
constexpr std::string_view kPoisson[] = {"tri", "star"};

}  // namespace

std::string_view kind_keyword(AlgebraKind kind) { return kKeywords.at(static_cast<std::size_t>(kind)); }

std::optional<AlgebraKind> kind_from_keyword(std::string_view keyword) {
  for (std::size_t i = 0; i < kKeywords.size(); ++i) {
    if (kKeywords[i] == keyword) return static_cast<AlgebraKind>(i);
  }
  return std::nullopt;
}

bool is_associative_kind(AlgebraKind kind) {
  return kind == AlgebraKind::OmegaAssociative || kind == AlgebraKind::BiHomOmegaAssociative;
}

std::span<const std::string_view> product_roles(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::OmegaAssociative:
    case AlgebraKind::BiHomOmegaAssociative:
      return kDot;
    case AlgebraKind::Dendriform:
      return kDend;
    case AlgebraKind::PreLie:
      return kTri;
    case AlgebraKind::Lie:
      return kBracket;
    case AlgebraKind::PostLie:
      return kPost;
    case AlgebraKind::Zinbiel:
      return kStar;
    case AlgebraKind::PrePoisson:
      return kPoisson;
  }
  return {};
}

AlgebraInstance::AlgebraInstance(AlgebraKind kind, std::vector<BilinearFamily> products, LinearFamily p,
                                 LinearFamily q)
    : kind_(kind),
      omega_(p.omega()),
      dim_(p.dim()),
      products_(std::move(products)),
      p_(std::move(p)),
      q_(std::move(q)) {}

AlgebraInstance AlgebraInstance::make(AlgebraKind kind, std::vector<BilinearFamily> products, LinearFamily p,
                                      LinearFamily q) {
  if (products.size() != product_roles(kind).size()) {
    throw ShapeMismatch("a " + std::string(kind_keyword(kind)) + " algebra has " +
                        std::to_string(product_roles(kind).size()) + " product component(s), got " +
                        std::to_string(products.size()));
  }
  const SemigroupTable& omega = *p.omega();
  if (*q.omega() != omega || q.dim() != p.dim()) throw ShapeMismatch("structure maps p and q have different shapes");
  for (const auto& f : products) {
    if (*f.omega() != omega || f.dim() != p.dim()) {
      throw ShapeMismatch("product and structure maps have different shapes");
    }
  }
  if (auto a = first_noncommuting(p, q)) throw NonCommutingStructureMaps(*a, omega.label(*a));
  if (kind == AlgebraKind::OmegaAssociative && !(p.is_identity() && q.is_identity())) {
    throw KindMismatch("an omega_associative algebra has identity structure maps; use the associative kind");
  }
  return {kind, std::move(products), std::move(p), std::move(q)};
}

AlgebraInstance AlgebraInstance::make(AlgebraKind kind, std::vector<BilinearFamily> products) {
  if (products.empty()) throw ShapeMismatch("an algebra needs at least one product component");
  auto omega = products.front().omega();
  const std::size_t dim = products.front().dim();
  return make(kind, std::move(products), LinearFamily::identity(omega, dim), LinearFamily::identity(omega, dim));
}

AlgebraInstance AlgebraInstance::zero(AlgebraKind kind, SemigroupPtr omega, std::size_t dim) {
  std::vector<BilinearFamily> products(product_roles(kind).size(), BilinearFamily(omega, dim));
  return make(kind, std::move(products), LinearFamily::identity(omega, dim), LinearFamily::identity(omega, dim));
}

const BilinearFamily& AlgebraInstance::product(std::string_view role) const {
  const auto roles = product_roles(kind_);
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == role) return products_[i];
  }
  throw KindMismatch("a " + std::string(kind_keyword(kind_)) + " algebra has no product '" + std::string(role) + "'");
}

AlgebraInstance AlgebraInstance::retagged(AlgebraKind kind) const {
  return make(kind, products_, p_, q_);
}

bool operator==(const AlgebraInstance& a, const AlgebraInstance& b) {
  return a.kind_ == b.kind_ && a.dim_ == b.dim_ && *a.omega_ == *b.omega_ && a.products_ == b.products_ &&
         a.p_ == b.p_ && a.q_ == b.q_;
}

BilinearFamily precompose(const BilinearFamily& f, const LinearFamily& left, const LinearFamily& right) {
  const std::size_t n = f.omega()->order();
  const std::size_t d = f.dim();
  BilinearFamily out(f.omega(), d);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < d; ++i) {
        const Vector x = left[a].column(i);
        for (std::size_t j = 0; j < d; ++j) {
          const Vector v = f.apply(a, b, x, right[b].column(j));
          for (std::size_t k = 0; k < d; ++k) out.at(a, b, i, j, k) = v[k];
        }
      }
    }
  }
  return out;
}

BilinearFamily twisted_opposite(const BilinearFamily& f, const LinearFamily& left, const LinearFamily& right) {
  const std::size_t n = f.omega()->order();
  const std::size_t d = f.dim();
  BilinearFamily out(f.omega(), d);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < d; ++i) {
        const Vector x = right[a].column(i);
        for (std::size_t j = 0; j < d; ++j) {
          const Vector v = f.apply(b, a, left[b].column(j), x);
          for (std::size_t k = 0; k < d; ++k) out.at(a, b, i, j, k) = v[k];
        }
      }
    }
  }
  return out;
}

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void bytes(std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  }
};

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void feed(Fnv& f, const LinearFamily& fam) {
  for (const auto& m : fam.maps()) {
    for (const auto& v : m.entries()) f.bytes(v.str());
  }
}

}  // namespace

std::string digest(const LinearFamily& fam) {
  Fnv f;
  f.bytes(std::to_string(fam.dim()));
  feed(f, fam);
  return hex(f.h);
}

std::string digest(const AlgebraInstance& a) {
  Fnv f;
  f.bytes(kind_keyword(a.kind()));
  f.bytes(std::to_string(a.dim()));
  for (const auto& row : a.omega()->table()) {
    for (std::size_t v : row) f.bytes(std::to_string(v));
  }
  for (const auto& prod : a.products()) {
    for (const auto& v : prod.data()) f.bytes(v.str());
  }
  feed(f, a.p());
  feed(f, a.q());
  return hex(f.h);
}

}  // namespace bihomega
