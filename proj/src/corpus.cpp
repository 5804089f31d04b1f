#include "bihomega/corpus.hpp"

#include <stdexcept>

#include "bihomega/constructions.hpp"

namespace bihomega {

BilinearFamily constant_product(const SemigroupPtr& omega, std::size_t dim, const std::vector<Term>& terms) {
  BilinearFamily f(omega, dim);
  for (std::size_t a = 0; a < omega->order(); ++a) {
    for (std::size_t b = 0; b < omega->order(); ++b) {
      for (const auto& t : terms) f.at(a, b, t.i, t.j, t.k) += t.coeff;
    }
  }
  return f;
}

namespace {

struct Semigroups {
  SemigroupPtr t1 = trivial_semigroup("T1");
  SemigroupPtr c2 = cyclic_group(2, "C2");
  SemigroupPtr l2 = semilattice2("L2");
  SemigroupPtr n2 = null_semigroup2("N2");
  SemigroupPtr lz2 = left_zero_semigroup(2, "LZ2");
  SemigroupPtr c3 = cyclic_group(3, "C3");
};

const Semigroups& semigroups() {
  static const Semigroups s;
  return s;
}

// x y scaled by f(a) f(b) / f(ab), a coboundary, so associativity and the
// Jacobi identity survive.
BilinearFamily coboundary_scaled(const BilinearFamily& mu, const std::vector<Rational>& f) {
  BilinearFamily out = mu;
  const auto& w = *mu.omega();
  const std::size_t d = mu.dim();
  for (std::size_t a = 0; a < w.order(); ++a) {
    for (std::size_t b = 0; b < w.order(); ++b) {
      const Rational s = f[a] * f[b] / f[w(a, b)];
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) out.at(a, b, i, j, k) *= s;
        }
      }
    }
  }
  return out;
}

std::vector<Term> dual_terms() { return {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}; }

AlgebraInstance assoc(const SemigroupPtr& w, std::size_t d, const std::vector<Term>& terms) {
  return AlgebraInstance::make(AlgebraKind::OmegaAssociative, {constant_product(w, d, terms)});
}

AlgebraInstance single(AlgebraKind kind, const SemigroupPtr& w, std::size_t d, const std::vector<Term>& terms) {
  return AlgebraInstance::make(kind, {constant_product(w, d, terms)});
}

RotaBaxterFamily constant_rb(const SemigroupPtr& w, const Matrix& m, const Rational& weight) {
  return {LinearFamily::constant(w, m), weight};
}

bool invertible(const LinearFamily& f) {
  try {
    (void)f.inverse();
    return true;
  } catch (const Singular&) {
    return false;
  }
}

// The first twisting pair with invertible, not both identity maps; pairs with
// p2 != q2 are preferred.
std::optional<AlgebraInstance> first_twist(const AlgebraInstance& a) {
  const auto pairs = make_endomorphism_pairs(a, SearchConfig{});
  const std::pair<LinearFamily, LinearFamily>* pick = nullptr;
  for (const auto& pr : pairs) {
    if (pr.first.is_identity() && pr.second.is_identity()) continue;
    if (!invertible(pr.first) || !invertible(pr.second)) continue;
    if (!pick || (pick->first == pick->second && !(pr.first == pr.second))) pick = &pr;
    if (!(pick->first == pick->second)) break;
  }
  if (!pick) return std::nullopt;
  return yau_twist(a, pick->first, pick->second).instance;
}

std::vector<CorpusEntry> build() {
  const auto& s = semigroups();
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, AlgebraInstance a) { out.push_back({std::move(name), std::move(a)}); };

  // Associative.
  const auto dual = assoc(s.t1, 2, dual_terms());
  add("dual", dual);
  const auto diag2 = assoc(s.t1, 2, {{0, 0, 0, 1}, {1, 1, 1, 1}});
  add("diag2", diag2);
  // Upper triangular 2x2 matrices on E11, E12, E22.
  const auto upper2 = assoc(s.t1, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}});
  add("upper2", upper2);
  const auto dual_c2 = AlgebraInstance::make(
      AlgebraKind::OmegaAssociative, {coboundary_scaled(constant_product(s.c2, 2, dual_terms()), {1, 2})});
  add("dual_c2_cocycle", dual_c2);
  add("dual_l2", assoc(s.l2, 2, dual_terms()));
  const auto dual_lz2 = assoc(s.lz2, 2, dual_terms());
  add("dual_lz2", dual_lz2);
  add("nil_n2", assoc(s.n2, 2, {{0, 0, 1, 1}}));
  add("dual_c3", assoc(s.c3, 2, dual_terms()));
  const auto two_dim = make_two_dim_example(corpus_two_dim_params(), TwoDimReading::Corrected);
  add("two_dim_c2", two_dim);
  add("two_dim_c2_verbatim", make_two_dim_example(corpus_two_dim_params(), TwoDimReading::Verbatim));

  // Dendriform, split by Rota-Baxter families.
  Matrix lower(2, 2);
  lower(1, 0) = 1;
  const auto dend_dual = rb_split_dendriform(dual, constant_rb(s.t1, lower, 0)).instance;
  add("dend_dual", dend_dual);
  Matrix proj(2, 2);
  proj(0, 0) = 1;
  add("dend_diag", rb_split_dendriform(diag2, constant_rb(s.t1, proj, -1)).instance);
  add("dend_dual_lz2", rb_split_dendriform(dual_lz2, constant_rb(s.lz2, lower, 0)).instance);

  // Pre-Lie.
  add("prelie_dual", assoc_as_prelie(dual).instance);
  const auto witt = single(AlgebraKind::PreLie, s.t1, 2, {{0, 1, 0, 1}, {1, 1, 1, 1}});
  add("prelie_witt", witt);
  add("prelie_nonassoc", single(AlgebraKind::PreLie, s.t1, 2, {{0, 1, 0, -1}, {1, 0, 0, 1}, {1, 1, 1, -1}}));
  add("prelie_from_dend", dendriform_to_prelie(dend_dual).instance);
  add("prelie_two_dim", assoc_as_prelie(two_dim).instance);

  // Lie.
  // sl2 on h, e, f.
  const auto sl2 = single(AlgebraKind::Lie, s.t1, 3,
                          {{0, 1, 1, 2}, {1, 0, 1, -2}, {0, 2, 2, -2}, {2, 0, 2, 2}, {1, 2, 0, 1}, {2, 1, 0, -1}});
  add("sl2", sl2);
  const auto aff2 = single(AlgebraKind::Lie, s.t1, 2, {{0, 1, 1, 1}, {1, 0, 1, -1}});
  add("aff2", aff2);
  add("heisenberg", single(AlgebraKind::Lie, s.t1, 3, {{0, 1, 2, 1}, {1, 0, 2, -1}}));
  add("lie_upper", assoc_to_lie(upper2).instance);
  add("lie_two_dim", assoc_to_lie(two_dim).instance);
  const auto aff2_c2 = AlgebraInstance::make(
      AlgebraKind::Lie, {coboundary_scaled(constant_product(s.c2, 2, {{0, 1, 1, 1}, {1, 0, 1, -1}}), {1, 2})});
  add("aff2_c2", aff2_c2);

  // PostLie.
  Matrix neg_e1(2, 2);
  neg_e1(0, 0) = -1;
  add("postlie_aff2", lie_rb_to_postlie(aff2, constant_rb(s.t1, neg_e1, 1)).instance);
  add("postlie_prelie",
      AlgebraInstance::make(AlgebraKind::PostLie, {BilinearFamily(s.t1, 2), witt.product(0)}));
  add("postlie_lie", AlgebraInstance::make(AlgebraKind::PostLie, {sl2.product(0), BilinearFamily(s.t1, 3)}));

  // Zinbiel.
  const auto nil = single(AlgebraKind::Zinbiel, s.t1, 2, {{0, 0, 1, 1}});
  add("zinbiel_nil", nil);
  add("zinbiel_divided", single(AlgebraKind::Zinbiel, s.t1, 3, {{0, 0, 1, 1}, {0, 1, 2, 2}, {1, 0, 2, 1}}));
  add("zinbiel_nil_c2", single(AlgebraKind::Zinbiel, s.c2, 2, {{0, 0, 1, 1}}));

  // Pre-Poisson.
  add("prepoisson_prelie",
      AlgebraInstance::make(AlgebraKind::PrePoisson, {witt.product(0), BilinearFamily(s.t1, 2)}));
  add("prepoisson_zinbiel",
      AlgebraInstance::make(AlgebraKind::PrePoisson, {BilinearFamily(s.t1, 2), nil.product(0)}));
  add("prepoisson_mixed",
      AlgebraInstance::make(AlgebraKind::PrePoisson,
                            {constant_product(s.t1, 2, {{0, 0, 0, -1}, {0, 1, 1, -1}, {1, 0, 1, -1}}), nil.product(0)}));

  // Yau twists of the untwisted entries.
  const std::size_t untwisted = out.size();
  for (std::size_t i = 0; i < untwisted; ++i) {
    const auto& a = out[i].instance;
    if (!a.p().is_identity() || !a.q().is_identity()) continue;
    if (auto t = first_twist(a)) add(out[i].name + "_twisted", std::move(*t));
  }
  return out;
}

}  // namespace

const std::vector<SemigroupPtr>& corpus_semigroups() {
  static const std::vector<SemigroupPtr> all = [] {
    const auto& s = semigroups();
    return std::vector<SemigroupPtr>{s.t1, s.c2, s.l2, s.n2, s.lz2, s.c3};
  }();
  return all;
}

const std::vector<CorpusEntry>& standard_corpus() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

const AlgebraInstance& corpus_instance(const std::string& name) {
  for (const auto& e : standard_corpus()) {
    if (e.name == name) return e.instance;
  }
  throw std::out_of_range("no corpus instance named '" + name + "'");
}

const Workspace& corpus_workspace() {
  static const Workspace w = [] {
    Workspace out;
    for (const auto& s : corpus_semigroups()) out.semigroups.emplace(s->name(), s);
    for (const auto& e : standard_corpus()) out.add_algebra(e.name, e.instance);
    for (const auto& e : standard_corpus()) {
      const SearchConfig cfg;
      std::size_t n = 0;
      for (const auto& f : find_endomorphisms(e.instance, cfg)) {
        if (f.is_identity()) continue;
        out.families.emplace(e.name + "_end" + std::to_string(++n), Workspace::Family{e.name, f});
        if (n == 2) break;
      }
      for (int weight : {0, 1}) {
        SearchConfig rcfg;
        rcfg.weight = weight;
        std::size_t m = 0;
        for (const auto& r : brute_force_rb_search(e.instance, rcfg)) {
          if (LinearFamily::zero(e.instance.omega(), e.instance.dim()) == r.maps) continue;
          out.rbs.emplace(e.name + "_rb" + std::to_string(weight) + "_" + std::to_string(++m),
                          Workspace::RotaBaxter{e.name, r});
          if (m == 2) break;
        }
      }
    }
    return out;
  }();
  return w;
}

TwoDimExampleParams corpus_two_dim_params() {
  return {semigroups().c2, {{1, -1}, {-1, 2}}, {1, -1}, {1, -1}};
}

AlgebraInstance matrix_algebra_c3() {
  // E11, E12, E21, E22 with Eij Ejk = Eik.
  std::vector<Term> terms;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) terms.push_back({2 * i + j, 2 * j + k, 2 * i + k, 1});
    }
  }
  return assoc(semigroups().c3, 4, terms);
}

}  // namespace bihomega
