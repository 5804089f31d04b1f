#include "bihomega/constructions.hpp"

#include <stdexcept>

namespace bihomega {
namespace {

void require_kind(const AlgebraInstance& a, bool ok, const char* construction) {
  if (!ok) {
    throw KindMismatch(std::string(construction) + " does not accept kind " + std::string(kind_keyword(a.kind())));
  }
}

void require_commutative(const AlgebraInstance& a, const char* construction) {
  if (!a.omega()->is_commutative()) {
    throw NonCommutativeOmega(std::string(construction) + " needs a commutative semigroup, '" + a.omega()->name() +
                              "' is not");
  }
}

void require_valid(const AlgebraInstance& a, const ConstructOptions& opts, const char* construction) {
  Verdict v = check_kind(a, opts.check);
  if (!v.passed()) {
    throw PreconditionCheckFailed(std::string(construction) + ": input fails the " +
                                      std::string(kind_keyword(a.kind())) + " axioms",
                                  std::move(v));
  }
}

void require_rota_baxter(const AlgebraInstance& a, const RotaBaxterFamily& r, const ConstructOptions& opts,
                         const char* construction) {
  Verdict v = check_rota_baxter(a, r, opts.check);
  if (!v.passed()) {
    throw PreconditionCheckFailed(std::string(construction) + ": not a Rota-Baxter family of weight " +
                                      r.weight.str() + " on the input",
                                  std::move(v));
  }
}

Constructed finish(AlgebraInstance out, Provenance prov, const ConstructOptions& opts) {
  if (opts.post_check) {
    Verdict v = check_kind(out, opts.check);
    if (!v.passed()) {
      throw PostconditionCheckFailed(prov.construction + ": output fails the " +
                                         std::string(kind_keyword(out.kind())) + " axioms",
                                     std::move(v));
    }
  }
  return {std::move(out), std::move(prov)};
}

Provenance provenance(const char* name, const AlgebraInstance& a) { return {name, {digest(a)}, {}, {}, {}}; }

Provenance provenance(const char* name, const AlgebraInstance& a, const RotaBaxterFamily& r) {
  Provenance p{name, {digest(a), digest(r.maps)}, r.weight, {}, {}};
  return p;
}

// Inverses of the structure maps, computed once per construction.
struct Inverses {
  LinearFamily p;
  LinearFamily q;
};

Inverses invert(const AlgebraInstance& a) {
  try {
    return {a.p().inverse(), a.q().inverse()};
  } catch (const Singular& e) {
    throw Singular(std::string("structure ") + e.what());
  }
}

// x o_{a,b} y - (p_b^-1 q_b y) o'_{b,a} (p_a q_a^-1 x)
BilinearFamily twisted_commutator(const BilinearFamily& left, const BilinearFamily& right, const AlgebraInstance& a,
                                  const Inverses& inv) {
  BilinearFamily out = left;
  out += Rational(-1) * twisted_opposite(right, inv.p.compose(a.q()), a.p().compose(inv.q));
  return out;
}

// The three Rota-Baxter terms {R x, y} + {x, R y} + w {x, y}.
BilinearFamily rb_sum(const BilinearFamily& mu, const RotaBaxterFamily& r) {
  const auto id = LinearFamily::identity(mu.omega(), mu.dim());
  BilinearFamily out = precompose(mu, id, r.maps);
  out += precompose(mu, r.maps, id);
  out += r.weight * mu;
  return out;
}

AlgebraKind associative_kind_for(const LinearFamily& p, const LinearFamily& q) {
  return p.is_identity() && q.is_identity() ? AlgebraKind::OmegaAssociative : AlgebraKind::BiHomOmegaAssociative;
}

}  // namespace

Constructed yau_twist(const AlgebraInstance& a, const LinearFamily& p2, const LinearFamily& q2,
                      const ConstructOptions& opts) {
  if (*p2.omega() != *a.omega() || p2.dim() != a.dim() || *q2.omega() != *a.omega() || q2.dim() != a.dim()) {
    throw ShapeMismatch("yau_twist: twisting maps and algebra have different shapes");
  }
  const std::pair<const char*, const LinearFamily*> fams[] = {{"p", &a.p()}, {"q", &a.q()}, {"p2", &p2}, {"q2", &q2}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (auto e = first_noncommuting(*fams[i].second, *fams[j].second)) {
        throw NonCommutingFamilies(fams[i].first, fams[j].first, *e, a.omega()->label(*e));
      }
    }
  }
  for (const auto& [name, f] : {std::pair{"p2", &p2}, std::pair{"q2", &q2}}) {
    Verdict v = check_morphism(*f, a, a, opts.check);
    if (!v.passed()) throw MorphismCheckFailed(std::string("yau_twist: ") + name + " is not a morphism of the input", std::move(v));
  }
  std::vector<BilinearFamily> products;
  for (const auto& mu : a.products()) products.push_back(precompose(mu, p2, q2));
  LinearFamily p = a.p().compose(p2);
  LinearFamily q = a.q().compose(q2);
  AlgebraKind kind = a.kind();
  if (kind == AlgebraKind::OmegaAssociative) kind = associative_kind_for(p, q);
  Provenance prov{"yau_twist", {digest(a), digest(p2), digest(q2)}, {}, {}, {}};
  return finish(AlgebraInstance::make(kind, std::move(products), std::move(p), std::move(q)), std::move(prov), opts);
}

Constructed rb_star_associative(const AlgebraInstance& a, const RotaBaxterFamily& r, const ConstructOptions& opts) {
  require_kind(a, is_associative_kind(a.kind()), "rb_star_associative");
  require_valid(a, opts, "rb_star_associative");
  require_rota_baxter(a, r, opts, "rb_star_associative");
  auto out = AlgebraInstance::make(a.kind(), {rb_sum(a.product(0), r)}, a.p(), a.q());
  return finish(std::move(out), provenance("rb_star_associative", a, r), opts);
}

Constructed dendriform_total(const AlgebraInstance& a, const ConstructOptions& opts) {
  require_kind(a, a.kind() == AlgebraKind::Dendriform, "dendriform_total");
  require_valid(a, opts, "dendriform_total");
  auto out = AlgebraInstance::make(associative_kind_for(a.p(), a.q()), {a.product(0) + a.product(1)}, a.p(), a.q());
  return finish(std::move(out), provenance("dendriform_total", a), opts);
}

Constructed rb_split_dendriform(const AlgebraInstance& a, const RotaBaxterFamily& r, const ConstructOptions& opts) {
  require_kind(a, is_associative_kind(a.kind()), "rb_split_dendriform");
  require_valid(a, opts, "rb_split_dendriform");
  require_rota_baxter(a, r, opts, "rb_split_dendriform");
  const auto& mu = a.product(0);
  const auto id = LinearFamily::identity(a.omega(), a.dim());
  BilinearFamily prec = precompose(mu, id, r.maps);
  prec += r.weight * mu;
  BilinearFamily succ = precompose(mu, r.maps, id);
  auto out = AlgebraInstance::make(AlgebraKind::Dendriform, {std::move(prec), std::move(succ)}, a.p(), a.q());
  return finish(std::move(out), provenance("rb_split_dendriform", a, r), opts);
}

Constructed dendriform_to_prelie(const AlgebraInstance& a, const ConstructOptions& opts) {
  require_kind(a, a.kind() == AlgebraKind::Dendriform, "dendriform_to_prelie");
  require_commutative(a, "dendriform_to_prelie");
  const Inverses inv = invert(a);
  require_valid(a, opts, "dendriform_to_prelie");
  auto out = AlgebraInstance::make(AlgebraKind::PreLie, {twisted_commutator(a.product(1), a.product(0), a, inv)},
                                   a.p(), a.q());
  Provenance prov = provenance("dendriform_to_prelie", a);
  prov.p_inverse = inv.p;
  prov.q_inverse = inv.q;
  return finish(std::move(out), std::move(prov), opts);
}

Constructed assoc_as_prelie(const AlgebraInstance& a, const ConstructOptions& opts) {
  require_kind(a, is_associative_kind(a.kind()), "assoc_as_prelie");
  require_commutative(a, "assoc_as_prelie");
  require_valid(a, opts, "assoc_as_prelie");
  return finish(a.retagged(AlgebraKind::PreLie), provenance("assoc_as_prelie", a), opts);
}

Constructed prelie_to_lie(const AlgebraInstance& a, const ConstructOptions& opts) {
  require_kind(a, a.kind() == AlgebraKind::PreLie, "prelie_to_lie");
  require_commutative(a, "prelie_to_lie");
  const Inverses inv = invert(a);
  require_valid(a, opts, "prelie_to_lie");
  auto out = AlgebraInstance::make(AlgebraKind::Lie, {twisted_commutator(a.product(0), a.product(0), a, inv)}, a.p(),
                                   a.q());
  Provenance prov = provenance("prelie_to_lie", a);
  prov.p_inverse = inv.p;
  prov.q_inverse = inv.q;
  return finish(std::move(out), std::move(prov), opts);
}

Constructed assoc_to_lie(const AlgebraInstance& a, const ConstructOptions& opts) {
  require_kind(a, is_associative_kind(a.kind()), "assoc_to_lie");
  require_commutative(a, "assoc_to_lie");
  const Inverses inv = invert(a);
  require_valid(a, opts, "assoc_to_lie");
  auto out = AlgebraInstance::make(AlgebraKind::Lie, {twisted_commutator(a.product(0), a.product(0), a, inv)}, a.p(),
                                   a.q());
  Provenance prov = provenance("assoc_to_lie", a);
  prov.p_inverse = inv.p;
  prov.q_inverse = inv.q;
  return finish(std::move(out), std::move(prov), opts);
}

Constructed rb_bracket_lie(const AlgebraInstance& a, const RotaBaxterFamily& r, const ConstructOptions& opts) {
  require_kind(a, a.kind() == AlgebraKind::Lie, "rb_bracket_lie");
  require_valid(a, opts, "rb_bracket_lie");
  require_rota_baxter(a, r, opts, "rb_bracket_lie");
  auto out = AlgebraInstance::make(AlgebraKind::Lie, {rb_sum(a.product(0), r)}, a.p(), a.q());
  return finish(std::move(out), provenance("rb_bracket_lie", a, r), opts);
}

Constructed rb_lie_to_prelie(const AlgebraInstance& a, const RotaBaxterFamily& r, const ConstructOptions& opts) {
  require_kind(a, a.kind() == AlgebraKind::Lie, "rb_lie_to_prelie");
  if (!r.weight.is_zero()) {
    throw NonzeroWeight("rb_lie_to_prelie needs a Rota-Baxter family of weight 0, got " + r.weight.str());
  }
  require_valid(a, opts, "rb_lie_to_prelie");
  require_rota_baxter(a, r, opts, "rb_lie_to_prelie");
  const auto id = LinearFamily::identity(a.omega(), a.dim());
  auto out = AlgebraInstance::make(AlgebraKind::PreLie, {precompose(a.product(0), r.maps, id)}, a.p(), a.q());
  return finish(std::move(out), provenance("rb_lie_to_prelie", a, r), opts);
}

Constructed postlie_to_lie(const AlgebraInstance& a, const ConstructOptions& opts) {
  require_kind(a, a.kind() == AlgebraKind::PostLie, "postlie_to_lie");
  require_commutative(a, "postlie_to_lie");
  const Inverses inv = invert(a);
  require_valid(a, opts, "postlie_to_lie");
  BilinearFamily bracket = twisted_commutator(a.product(1), a.product(1), a, inv);
  bracket += a.product(0);
  auto out = AlgebraInstance::make(AlgebraKind::Lie, {std::move(bracket)}, a.p(), a.q());
  Provenance prov = provenance("postlie_to_lie", a);
  prov.p_inverse = inv.p;
  prov.q_inverse = inv.q;
  return finish(std::move(out), std::move(prov), opts);
}

Constructed lie_rb_to_postlie(const AlgebraInstance& a, const RotaBaxterFamily& r, const ConstructOptions& opts) {
  require_kind(a, a.kind() == AlgebraKind::Lie, "lie_rb_to_postlie");
  require_valid(a, opts, "lie_rb_to_postlie");
  require_rota_baxter(a, r, opts, "lie_rb_to_postlie");
  const auto id = LinearFamily::identity(a.omega(), a.dim());
  auto out = AlgebraInstance::make(AlgebraKind::PostLie,
                                   {r.weight * a.product(0), precompose(a.product(0), r.maps, id)}, a.p(), a.q());
  return finish(std::move(out), provenance("lie_rb_to_postlie", a, r), opts);
}

const std::vector<std::string_view>& construction_names() {
  static const std::vector<std::string_view> names = {
      "yau_twist",      "rb_star_associative", "dendriform_total", "rb_split_dendriform",
      "dendriform_to_prelie", "assoc_as_prelie", "prelie_to_lie", "assoc_to_lie",
      "rb_bracket_lie", "rb_lie_to_prelie",    "postlie_to_lie",   "lie_rb_to_postlie",
  };
  return names;
}

std::optional<ConstructionInput> construction_inputs(std::string_view name) {
  if (name == "yau_twist") return ConstructionInput::Twist;
  if (name == "rb_star_associative" || name == "rb_split_dendriform" || name == "rb_bracket_lie" ||
      name == "rb_lie_to_prelie" || name == "lie_rb_to_postlie") {
    return ConstructionInput::RotaBaxter;
  }
  for (auto n : construction_names()) {
    if (n == name) return ConstructionInput::None;
  }
  return std::nullopt;
}

Constructed run_construction(std::string_view name, const AlgebraInstance& a, const ConstructionArgs& args,
                             const ConstructOptions& opts) {
  const auto inputs = construction_inputs(name);
  if (!inputs) throw std::invalid_argument("unknown construction '" + std::string(name) + "'");
  if (*inputs == ConstructionInput::Twist) {
    if (!args.p2 || !args.q2) throw std::invalid_argument("yau_twist needs both twisting families");
    return yau_twist(a, *args.p2, *args.q2, opts);
  }
  if (*inputs == ConstructionInput::RotaBaxter) {
    if (!args.rb) throw std::invalid_argument(std::string(name) + " needs a Rota-Baxter family");
    const auto& r = *args.rb;
    if (name == "rb_star_associative") return rb_star_associative(a, r, opts);
    if (name == "rb_split_dendriform") return rb_split_dendriform(a, r, opts);
    if (name == "rb_bracket_lie") return rb_bracket_lie(a, r, opts);
    if (name == "rb_lie_to_prelie") return rb_lie_to_prelie(a, r, opts);
    return lie_rb_to_postlie(a, r, opts);
  }
  if (name == "dendriform_total") return dendriform_total(a, opts);
  if (name == "dendriform_to_prelie") return dendriform_to_prelie(a, opts);
  if (name == "assoc_as_prelie") return assoc_as_prelie(a, opts);
  if (name == "prelie_to_lie") return prelie_to_lie(a, opts);
  if (name == "assoc_to_lie") return assoc_to_lie(a, opts);
  return postlie_to_lie(a, opts);
}

}  // namespace bihomega
