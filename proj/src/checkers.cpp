#include "bihomega/checkers.hpp"

#include <utility>

namespace bihomega {
namespace {

using Images = std::vector<std::vector<Vector>>;

// images[a][i] = f_a(e_i)
Images images(const LinearFamily& f) {
  Images out(f.maps().size());
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t i = 0; i < f.dim(); ++i) out[a].push_back(f[a].column(i));
  }
  return out;
}

class Recorder {
 public:
  Recorder(std::string axiom, const CheckOptions& opts) : opts_(opts) { report_.axiom = std::move(axiom); }

  void cell(std::vector<std::size_t> omega, std::vector<std::size_t> basis, Vector lhs, Vector rhs) {
    ++report_.cells;
    if (lhs == rhs) return;
    if (report_.violations++ < opts_.max_witnesses) {
      report_.witnesses.push_back({std::move(omega), std::move(basis), std::move(lhs), std::move(rhs)});
    }
  }

  CheckReport take() { return std::move(report_); }

 private:
  const CheckOptions& opts_;
  CheckReport report_;
};

template <class Fn>
CheckReport binary(const std::string& axiom, std::size_t n, std::size_t d, const CheckOptions& opts, Fn&& fn) {
  Recorder rec(axiom, opts);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          auto [lhs, rhs] = fn(a, b, i, j);
          rec.cell({a, b}, {i, j}, std::move(lhs), std::move(rhs));
        }
      }
    }
  }
  return rec.take();
}

template <class Fn>
CheckReport ternary(const std::string& axiom, std::size_t n, std::size_t d, const CheckOptions& opts, Fn&& fn) {
  Recorder rec(axiom, opts);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
              auto [lhs, rhs] = fn(a, b, c, i, j, k);
              rec.cell({a, b, c}, {i, j, k}, std::move(lhs), std::move(rhs));
            }
          }
        }
      }
    }
  }
  return rec.take();
}

Vector flatten(const Matrix& m) { return {m.entries().begin(), m.entries().end()}; }

std::string tagged(const std::string& name, std::string_view role) { return name + "[" + std::string(role) + "]"; }

void require_kind(const AlgebraInstance& a, std::initializer_list<AlgebraKind> kinds, const char* checker) {
  for (AlgebraKind k : kinds) {
    if (a.kind() == k) return;
  }
  throw KindMismatch(std::string(checker) + " cannot check a " + std::string(kind_keyword(a.kind())) + " algebra");
}

void require_commutative(const SemigroupTable& w, const char* what) {
  if (!w.is_commutative()) {
    throw NonCommutativeOmega(std::string(what) + " needs a commutative semigroup, '" + w.name() + "' is not");
  }
}

// The shared view of one instance's structure maps.
struct Twists {
  const SemigroupTable& w;
  std::size_t n;
  std::size_t d;
  Images p;
  Images q;
  Images pq;  // p_a(q_a(e_i))
  Images qq;  // q_a(q_a(e_i))

  Twists(const SemigroupTable& table, const LinearFamily& pf, const LinearFamily& qf)
      : w(table),
        n(table.order()),
        d(pf.dim()),
        p(images(pf)),
        q(images(qf)),
        pq(images(pf.compose(qf))),
        qq(images(qf.compose(qf))) {}
};

CheckReport multiplicative(const std::string& axiom, const BilinearFamily& mu, const LinearFamily& f,
                           const CheckOptions& opts) {
  const auto& w = *mu.omega();
  const Images img = images(f);
  return binary(axiom, w.order(), mu.dim(), opts, [&](std::size_t a, std::size_t b, std::size_t i, std::size_t j) {
    return std::pair{f[w(a, b)].apply(mu.cell(a, b, i, j)), mu.apply(a, b, img[a][i], img[b][j])};
  });
}

void add_multiplicativity(Verdict& v, const BilinearFamily& mu, std::string_view role, const LinearFamily& p,
                          const LinearFamily& q, const CheckOptions& opts) {
  v.reports.push_back(multiplicative(tagged("p-multiplicative", role), mu, p, opts));
  v.reports.push_back(multiplicative(tagged("q-multiplicative", role), mu, q, opts));
}

Verdict associative_axioms(const BilinearFamily& mu, const LinearFamily& pf, const LinearFamily& qf,
                           const CheckOptions& opts) {
  Verdict v;
  add_multiplicativity(v, mu, "dot", pf, qf, opts);
  const Twists t(*mu.omega(), pf, qf);
  const auto& w = t.w;
  v.reports.push_back(ternary("bihom-associativity", t.n, t.d, opts,
                              [&](std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j,
                                  std::size_t k) {
                                return std::pair{mu.apply(a, w(b, c), t.p[a][i], mu.cell(b, c, j, k)),
                                                 mu.apply(w(a, b), c, mu.cell(a, b, i, j), t.q[c][k])};
                              }));
  return v;
}

Verdict prelie_axioms(const BilinearFamily& tri, const LinearFamily& pf, const LinearFamily& qf,
                      const CheckOptions& opts) {
  Verdict v;
  add_multiplicativity(v, tri, "tri", pf, qf, opts);
  const Twists t(*tri.omega(), pf, qf);
  const auto& w = t.w;
  const auto& T = tri;
  v.reports.push_back(ternary(
      "bihom-left-symmetry", t.n, t.d, opts,
      [&](std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j, std::size_t k) {
        const auto z = basis_vector(t.d, k);
        Vector lhs = T.apply(a, w(b, c), t.pq[a][i], T.apply(b, c, t.p[b][j], z));
        sub_from(lhs, T.apply(w(a, b), c, T.apply(a, b, t.q[a][i], t.p[b][j]), t.q[c][k]));
        Vector rhs = T.apply(b, w(a, c), t.pq[b][j], T.apply(a, c, t.p[a][i], z));
        sub_from(rhs, T.apply(w(b, a), c, T.apply(b, a, t.q[b][j], t.p[a][i]), t.q[c][k]));
        return std::pair{std::move(lhs), std::move(rhs)};
      }));
  return v;
}

Verdict lie_axioms(const BilinearFamily& bracket, const LinearFamily& pf, const LinearFamily& qf,
                   const CheckOptions& opts) {
  Verdict v;
  add_multiplicativity(v, bracket, "bracket", pf, qf, opts);
  const Twists t(*bracket.omega(), pf, qf);
  const auto& w = t.w;
  const auto& B = bracket;
  v.reports.push_back(binary("bihom-skew-symmetry", t.n, t.d, opts,
                             [&](std::size_t a, std::size_t b, std::size_t i, std::size_t j) {
                               return std::pair{B.apply(a, b, t.q[a][i], t.p[b][j]),
                                                negated(B.apply(b, a, t.q[b][j], t.p[a][i]))};
                             }));
  v.reports.push_back(ternary(
      "bihom-jacobi", t.n, t.d, opts,
      [&](std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j, std::size_t k) {
        Vector lhs = B.apply(a, w(b, c), t.qq[a][i], B.apply(b, c, t.q[b][j], t.p[c][k]));
        add_to(lhs, B.apply(b, w(c, a), t.qq[b][j], B.apply(c, a, t.q[c][k], t.p[a][i])));
        add_to(lhs, B.apply(c, w(a, b), t.qq[c][k], B.apply(a, b, t.q[a][i], t.p[b][j])));
        return std::pair{std::move(lhs), zero_vector(t.d)};
      }));
  return v;
}

Verdict zinbiel_axioms(const BilinearFamily& star, const LinearFamily& pf, const LinearFamily& qf,
                       const CheckOptions& opts) {
  Verdict v;
  add_multiplicativity(v, star, "star", pf, qf, opts);
  const Twists t(*star.omega(), pf, qf);
  const auto& w = t.w;
  const auto& Z = star;
  v.reports.push_back(ternary(
      "bihom-zinbiel", t.n, t.d, opts,
      [&](std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j, std::size_t k) {
        const auto z = basis_vector(t.d, k);
        Vector lhs = Z.apply(a, w(b, c), t.pq[a][i], Z.apply(b, c, t.p[b][j], z));
        Vector rhs = Z.apply(w(a, b), c, Z.apply(a, b, t.q[a][i], t.p[b][j]), t.q[c][k]);
        add_to(rhs, Z.apply(w(b, a), c, Z.apply(b, a, t.q[b][j], t.p[a][i]), t.q[c][k]));
        return std::pair{std::move(lhs), std::move(rhs)};
      }));
  return v;
}

}  // namespace

Verdict check_bihom_associative(const AlgebraInstance& a, const CheckOptions& opts) {
  require_kind(a, {AlgebraKind::OmegaAssociative, AlgebraKind::BiHomOmegaAssociative}, "check_bihom_associative");
  return associative_axioms(a.product(0), a.p(), a.q(), opts);
}

Verdict check_dendriform(const AlgebraInstance& a, const CheckOptions& opts) {
  require_kind(a, {AlgebraKind::Dendriform}, "check_dendriform");
  Verdict v;
  const auto& L = a.product(0);
  const auto& R = a.product(1);
  add_multiplicativity(v, L, "prec", a.p(), a.q(), opts);
  add_multiplicativity(v, R, "succ", a.p(), a.q(), opts);
  const BilinearFamily S = L + R;
  const Twists t(*a.omega(), a.p(), a.q());
  const auto& w = t.w;
  v.reports.push_back(ternary(
      "dendriform-1", t.n, t.d, opts,
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j, std::size_t k) {
        return std::pair{L.apply(w(x, y), z, L.cell(x, y, i, j), t.q[z][k]),
                         L.apply(x, w(y, z), t.p[x][i], S.cell(y, z, j, k))};
      }));
  v.reports.push_back(ternary(
      "dendriform-2", t.n, t.d, opts,
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j, std::size_t k) {
        return std::pair{L.apply(w(x, y), z, R.cell(x, y, i, j), t.q[z][k]),
                         R.apply(x, w(y, z), t.p[x][i], L.cell(y, z, j, k))};
      }));
  v.reports.push_back(ternary(
      "dendriform-3", t.n, t.d, opts,
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j, std::size_t k) {
        return std::pair{R.apply(x, w(y, z), t.p[x][i], R.cell(y, z, j, k)),
                         R.apply(w(x, y), z, S.cell(x, y, i, j), t.q[z][k])};
      }));
  return v;
}

Verdict check_prelie(const AlgebraInstance& a, const CheckOptions& opts) {
  require_kind(a, {AlgebraKind::PreLie}, "check_prelie");
  require_commutative(*a.omega(), "check_prelie");
  return prelie_axioms(a.product(0), a.p(), a.q(), opts);
}

Verdict check_lie(const AlgebraInstance& a, const CheckOptions& opts) {
  require_kind(a, {AlgebraKind::Lie}, "check_lie");
  require_commutative(*a.omega(), "check_lie");
  return lie_axioms(a.product(0), a.p(), a.q(), opts);
}

Verdict check_postlie(const AlgebraInstance& a, const CheckOptions& opts) {
  require_kind(a, {AlgebraKind::PostLie}, "check_postlie");
  require_commutative(*a.omega(), "check_postlie");
  Verdict v;
  const auto& B = a.product(0);
  const auto& T = a.product(1);
  v.absorb(lie_axioms(B, a.p(), a.q(), opts), "lie");
  add_multiplicativity(v, T, "tri", a.p(), a.q(), opts);
  const Twists t(*a.omega(), a.p(), a.q());
  const auto& w = t.w;
  v.reports.push_back(ternary(
      "postlie-1", t.n, t.d, opts,
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j, std::size_t k) {
        const auto e = basis_vector(t.d, k);
        Vector lhs = T.apply(w(x, y), z, B.apply(x, y, t.q[x][i], t.p[y][j]), t.q[z][k]);
        Vector rhs = T.apply(x, w(y, z), t.pq[x][i], T.apply(y, z, t.p[y][j], e));
        sub_from(rhs, T.apply(w(x, y), z, T.apply(x, y, t.q[x][i], t.p[y][j]), t.q[z][k]));
        sub_from(rhs, T.apply(y, w(x, z), t.pq[y][j], T.apply(x, z, t.p[x][i], e)));
        add_to(rhs, T.apply(w(y, x), z, T.apply(y, x, t.q[y][j], t.p[x][i]), t.q[z][k]));
        return std::pair{std::move(lhs), std::move(rhs)};
      }));
  v.reports.push_back(ternary(
      "postlie-2", t.n, t.d, opts,
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j, std::size_t k) {
        const auto ej = basis_vector(t.d, j);
        const auto ek = basis_vector(t.d, k);
        Vector lhs = T.apply(x, w(y, z), t.pq[x][i], B.cell(y, z, j, k));
        Vector rhs = B.apply(w(x, y), z, T.apply(x, y, t.q[x][i], ej), t.q[z][k]);
        add_to(rhs, B.apply(y, w(x, z), t.q[y][j], T.apply(x, z, t.p[x][i], ek)));
        return std::pair{std::move(lhs), std::move(rhs)};
      }));
  return v;
}

Verdict check_zinbiel(const AlgebraInstance& a, const CheckOptions& opts) {
  require_kind(a, {AlgebraKind::Zinbiel}, "check_zinbiel");
  require_commutative(*a.omega(), "check_zinbiel");
  return zinbiel_axioms(a.product(0), a.p(), a.q(), opts);
}

Verdict check_prepoisson(const AlgebraInstance& a, const CheckOptions& opts) {
  require_kind(a, {AlgebraKind::PrePoisson}, "check_prepoisson");
  require_commutative(*a.omega(), "check_prepoisson");
  Verdict v;
  const auto& T = a.product(0);
  const auto& Z = a.product(1);
  v.absorb(prelie_axioms(T, a.p(), a.q(), opts), "prelie");
  v.absorb(zinbiel_axioms(Z, a.p(), a.q(), opts), "zinbiel");
  const Twists t(*a.omega(), a.p(), a.q());
  const auto& w = t.w;
  v.reports.push_back(ternary(
      "prepoisson-1", t.n, t.d, opts,
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j, std::size_t k) {
        const auto e = basis_vector(t.d, k);
        Vector inner = T.apply(x, y, t.q[x][i], t.p[y][j]);
        sub_from(inner, T.apply(y, x, t.q[y][j], t.p[x][i]));
        Vector lhs = Z.apply(w(x, y), z, inner, t.q[z][k]);
        Vector rhs = T.apply(x, w(y, z), t.pq[x][i], Z.apply(y, z, t.p[y][j], e));
        sub_from(rhs, Z.apply(y, w(x, z), t.pq[y][j], T.apply(x, z, t.p[x][i], e)));
        return std::pair{std::move(lhs), std::move(rhs)};
      }));
  v.reports.push_back(ternary(
      "prepoisson-2", t.n, t.d, opts,
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j, std::size_t k) {
        const auto e = basis_vector(t.d, k);
        Vector inner = Z.apply(x, y, t.q[x][i], t.p[y][j]);
        add_to(inner, Z.apply(y, x, t.q[y][j], t.p[x][i]));
        Vector lhs = T.apply(w(x, y), z, inner, t.q[z][k]);
        Vector rhs = Z.apply(x, w(y, z), t.pq[x][i], T.apply(y, z, t.p[y][j], e));
        add_to(rhs, Z.apply(y, w(x, z), t.pq[y][j], T.apply(x, z, t.p[x][i], e)));
        return std::pair{std::move(lhs), std::move(rhs)};
      }));
  return v;
}

Verdict check_kind(const AlgebraInstance& a, const CheckOptions& opts) {
  switch (a.kind()) {
    case AlgebraKind::OmegaAssociative:
    case AlgebraKind::BiHomOmegaAssociative:
      return check_bihom_associative(a, opts);
    case AlgebraKind::Dendriform:
      return check_dendriform(a, opts);
    case AlgebraKind::PreLie:
      return check_prelie(a, opts);
    case AlgebraKind::Lie:
      return check_lie(a, opts);
    case AlgebraKind::PostLie:
      return check_postlie(a, opts);
    case AlgebraKind::Zinbiel:
      return check_zinbiel(a, opts);
    case AlgebraKind::PrePoisson:
      return check_prepoisson(a, opts);
  }
  throw KindMismatch("unknown algebra kind");
}

Verdict check_rota_baxter(const AlgebraInstance& a, const RotaBaxterFamily& r, const CheckOptions& opts) {
  const auto& R = r.maps;
  if (*R.omega() != *a.omega() || R.dim() != a.dim()) {
    throw ShapeMismatch("Rota-Baxter family and algebra have different shapes");
  }
  const auto& w = *a.omega();
  const std::size_t n = w.order();
  const std::size_t d = a.dim();
  const Images img = images(R);
  Verdict v;
  const auto roles = product_roles(a.kind());
  for (std::size_t m = 0; m < roles.size(); ++m) {
    const auto& mu = a.product(m);
    v.reports.push_back(
        binary(tagged("rota-baxter", roles[m]), n, d, opts, [&](std::size_t x, std::size_t y, std::size_t i, std::size_t j) {
          const auto ei = basis_vector(d, i);
          const auto ej = basis_vector(d, j);
          Vector sum = mu.apply(x, y, img[x][i], ej);
          add_to(sum, mu.apply(x, y, ei, img[y][j]));
          add_to(sum, scaled(Vector(mu.cell(x, y, i, j).begin(), mu.cell(x, y, i, j).end()), r.weight));
          return std::pair{mu.apply(x, y, img[x][i], img[y][j]), R[w(x, y)].apply(sum)};
        }));
  }
  for (const auto& [name, f] : {std::pair{"commutes-p", &a.p()}, std::pair{"commutes-q", &a.q()}}) {
    Recorder rec(name, opts);
    for (std::size_t x = 0; x < n; ++x) rec.cell({x}, {}, flatten(R[x] * (*f)[x]), flatten((*f)[x] * R[x]));
    v.reports.push_back(rec.take());
  }
  return v;
}

Verdict check_morphism(const LinearFamily& f, const AlgebraInstance& src, const AlgebraInstance& dst,
                       const CheckOptions& opts) {
  if (src.kind() != dst.kind()) throw KindMismatch("morphism source and target have different kinds");
  if (*src.omega() != *dst.omega() || src.dim() != dst.dim() || *f.omega() != *src.omega() ||
      f.dim() != src.dim()) {
    throw ShapeMismatch("morphism, source and target have different shapes");
  }
  const auto& w = *src.omega();
  const Images img = images(f);
  Verdict v;
  const auto roles = product_roles(src.kind());
  for (std::size_t m = 0; m < roles.size(); ++m) {
    const auto& mu = src.product(m);
    const auto& nu = dst.product(m);
    v.reports.push_back(binary(tagged("morphism", roles[m]), w.order(), src.dim(), opts,
                               [&](std::size_t a, std::size_t b, std::size_t i, std::size_t j) {
                                 return std::pair{f[w(a, b)].apply(mu.cell(a, b, i, j)),
                                                  nu.apply(a, b, img[a][i], img[b][j])};
                               }));
  }
  const std::pair<const char*, std::pair<const LinearFamily*, const LinearFamily*>> maps[] = {
      {"intertwines-p", {&src.p(), &dst.p()}},
      {"intertwines-q", {&src.q(), &dst.q()}},
  };
  for (const auto& [name, pair] : maps) {
    Recorder rec(name, opts);
    for (std::size_t a = 0; a < w.order(); ++a) {
      rec.cell({a}, {}, flatten((*pair.second)[a] * f[a]), flatten(f[a] * (*pair.first)[a]));
    }
    v.reports.push_back(rec.take());
  }
  return v;
}

Verdict filter_axiom(const Verdict& v, const std::string& axiom) {
  Verdict out;
  for (const auto& r : v.reports) {
    const bool suffix = r.axiom.size() > axiom.size() &&
                        r.axiom.compare(r.axiom.size() - axiom.size(), axiom.size(), axiom) == 0 &&
                        r.axiom[r.axiom.size() - axiom.size() - 1] == '/';
    if (r.axiom == axiom || suffix) out.reports.push_back(r);
  }
  return out;
}

}  // namespace bihomega
