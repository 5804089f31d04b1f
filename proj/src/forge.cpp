#include "bihomega/forge.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "bihomega/constructions.hpp"

namespace bihomega {

std::string_view reading_name(TwoDimReading r) { return r == TwoDimReading::Verbatim ? "verbatim" : "corrected"; }

std::optional<ConditionFailure> two_dim_condition_failure(const TwoDimExampleParams& params) {
  if (!params.omega) throw ShapeMismatch("two-dim example needs a semigroup");
  const auto& w = *params.omega;
  const std::size_t n = w.order();
  if (params.rthree.size() != n || params.lthree.size() != n || params.c.size() != n) {
    throw ShapeMismatch("two-dim example parameters need one value per semigroup element");
  }
  for (const auto& row : params.c) {
    if (row.size() != n) throw ShapeMismatch("two-dim example needs c as a square table");
  }
  const auto& r = params.rthree;
  const auto& l = params.lthree;
  const auto& c = params.c;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (r[w(a, b)] != r[a] * r[b]) return ConditionFailure{"rthree-multiplicative", {a, b}};
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (l[w(a, b)] != l[a] * l[b]) return ConditionFailure{"lthree-multiplicative", {a, b}};
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t g = 0; g < n; ++g) {
        if (c[a][b] * l[g] * c[w(a, b)][g] != c[a][w(b, g)] * r[a] * c[b][g]) {
          return ConditionFailure{"c-compatibility", {a, b, g}};
        }
      }
    }
  }
  return std::nullopt;
}

AlgebraInstance two_dim_example_unchecked(const TwoDimExampleParams& params, TwoDimReading reading) {
  two_dim_condition_failure(params);  // shape validation only
  const auto& omega = params.omega;
  const std::size_t n = omega->order();
  BilinearFamily dot(omega, 2);
  std::vector<Matrix> p;
  std::vector<Matrix> q;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& c = params.c[a][b];
      // e_i e_j = c e_i
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) dot.at(a, b, i, j, i) = c;
      }
    }
    p.push_back(Matrix::scalar(2, params.rthree[a]));
    const Rational& l = params.lthree[a];
    Matrix qa(2, 2);
    qa(0, 0) = l;
    if (reading == TwoDimReading::Verbatim) {
      qa(0, 1) = l;
    } else {
      qa(1, 1) = l;
    }
    q.push_back(std::move(qa));
  }
  return AlgebraInstance::make(AlgebraKind::BiHomOmegaAssociative, {std::move(dot)},
                               LinearFamily(omega, 2, std::move(p)), LinearFamily(omega, 2, std::move(q)));
}

AlgebraInstance make_two_dim_example(const TwoDimExampleParams& params, TwoDimReading reading) {
  if (auto f = two_dim_condition_failure(params)) {
    std::ostringstream msg;
    msg << "side condition " << f->condition << " fails at (";
    for (std::size_t i = 0; i < f->indices.size(); ++i) {
      msg << (i ? "," : "") << params.omega->label(f->indices[i]);
    }
    msg << ")";
    throw ConditionViolated(*f, msg.str());
  }
  return two_dim_example_unchecked(params, reading);
}

std::vector<ReadingOutcome> two_dim_ambiguity_report(const TwoDimExampleParams& params, const CheckOptions& opts) {
  std::vector<ReadingOutcome> out;
  for (auto reading : {TwoDimReading::Verbatim, TwoDimReading::Corrected}) {
    auto inst = make_two_dim_example(params, reading);
    auto verdict = check_bihom_associative(inst, opts);
    out.push_back({reading, std::move(inst), std::move(verdict)});
  }
  return out;
}

std::string format_ambiguity_report(const std::vector<ReadingOutcome>& outcomes) {
  std::ostringstream out;
  for (const auto& o : outcomes) {
    out << reading_name(o.reading) << ": ";
    if (o.verdict.passed()) {
      out << "PASS\n";
    } else {
      out << "FAIL (" << o.verdict.violations() << " violations)\n";
    }
  }
  return out.str();
}

AlgebraInstance embed_omega_as_bihom(const AlgebraInstance& a) {
  if (!a.p().is_identity() || !a.q().is_identity()) {
    throw KindMismatch("only an instance with identity structure maps can be embedded");
  }
  const AlgebraKind kind =
      a.kind() == AlgebraKind::OmegaAssociative ? AlgebraKind::BiHomOmegaAssociative : a.kind();
  return AlgebraInstance::make(kind, a.products(), LinearFamily::identity(a.omega(), a.dim()),
                               LinearFamily::identity(a.omega(), a.dim()));
}

unsigned search_threads() {
  if (const char* env = std::getenv("BIHOMEGA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

void check_budget(const AlgebraInstance& a, const SearchConfig& cfg) {
  if (cfg.entries.empty()) throw std::invalid_argument("search entry set is empty");
  const std::size_t n = a.omega()->order();
  const std::size_t d = a.dim();
  if (d > cfg.max_dim || n > cfg.max_omega) {
    throw BudgetExceeded("search bounds are dim <= " + std::to_string(cfg.max_dim) + " and order <= " +
                         std::to_string(cfg.max_omega) + ", got dim " + std::to_string(d) + " and order " +
                         std::to_string(n));
  }
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), cfg.entries.size(), n * d * d);
  if (space > mpz_class(std::to_string(cfg.budget))) {
    throw BudgetExceeded("search space has " + space.get_str() + " candidates, budget is " +
                         std::to_string(cfg.budget));
  }
}

// Every d x d matrix over `entries`, first entry most significant.
std::vector<Matrix> all_matrices(std::size_t d, const std::vector<Rational>& entries,
                                 const std::function<bool(const Matrix&)>& keep) {
  const std::size_t cells = d * d;
  std::vector<std::size_t> digit(cells, 0);
  std::vector<Matrix> out;
  Matrix m(d, d);
  for (std::size_t c = 0; c < cells; ++c) m(c / d, c % d) = entries[0];
  while (true) {
    if (keep(m)) out.push_back(m);
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < entries.size()) {
        m(pos / d, pos % d) = entries[digit[pos]];
        break;
      }
      digit[pos] = 0;
      m(pos / d, pos % d) = entries[0];
      if (pos == 0) return out;
    }
    if (cells == 0) return out;
  }
}

using PairCheck = std::function<bool(const std::vector<const Matrix*>&, std::size_t, std::size_t)>;

// Depth-first assignment of one matrix per element, checking each pair
// constraint as soon as all three of its matrices are fixed.
std::vector<std::vector<Matrix>> backtrack(const SemigroupTable& w, const std::vector<std::vector<Matrix>>& cands,
                                           const PairCheck& ok) {
  const std::size_t n = w.order();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> due(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) due[std::max({x, y, w(x, y)})].emplace_back(x, y);
  }
  const std::size_t top = cands[0].size();
  std::vector<std::vector<std::vector<Matrix>>> found(top);
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    std::vector<const Matrix*> chosen(n, nullptr);
    auto admissible = [&](std::size_t level) {
      for (const auto& [x, y] : due[level]) {
        if (!ok(chosen, x, y)) return false;
      }
      return true;
    };
    std::function<void(std::size_t, std::vector<std::vector<Matrix>>&)> descend =
        [&](std::size_t level, std::vector<std::vector<Matrix>>& sink) {
          if (level == n) {
            std::vector<Matrix> fam;
            for (const auto* m : chosen) fam.push_back(*m);
            sink.push_back(std::move(fam));
            return;
          }
          for (const auto& m : cands[level]) {
            chosen[level] = &m;
            if (admissible(level)) descend(level + 1, sink);
          }
        };
    for (std::size_t t = next++; t < top; t = next++) {
      chosen[0] = &cands[0][t];
      if (admissible(0)) descend(1, found[t]);
    }
  };

  const unsigned threads = std::min<std::size_t>(search_threads(), std::max<std::size_t>(top, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<std::vector<Matrix>> out;
  for (auto& bucket : found) {
    for (auto& fam : bucket) out.push_back(std::move(fam));
  }
  return out;
}

std::vector<std::vector<Matrix>> commuting_candidates(const AlgebraInstance& a, const SearchConfig& cfg) {
  std::vector<std::vector<Matrix>> cands;
  for (std::size_t x = 0; x < a.omega()->order(); ++x) {
    cands.push_back(all_matrices(a.dim(), cfg.entries, [&](const Matrix& m) {
      return mats_commute(m, a.p()[x]) && mats_commute(m, a.q()[x]);
    }));
  }
  return cands;
}

void require_valid(const AlgebraInstance& a, const CheckOptions& opts) {
  Verdict v = check_kind(a, opts);
  if (!v.passed()) throw PreconditionCheckFailed("search input fails its own axioms", std::move(v));
}

}  // namespace

std::vector<RotaBaxterFamily> brute_force_rb_search(const AlgebraInstance& a, const SearchConfig& cfg) {
  check_budget(a, cfg);
  require_valid(a, {});
  const auto& w = *a.omega();
  const std::size_t d = a.dim();
  const Rational weight = cfg.weight;
  auto ok = [&](const std::vector<const Matrix*>& R, std::size_t x, std::size_t y) {
    const Matrix& Rx = *R[x];
    const Matrix& Ry = *R[y];
    const Matrix& Rxy = *R[w(x, y)];
    for (const auto& mu : a.products()) {
      for (std::size_t i = 0; i < d; ++i) {
        const Vector rx = Rx.column(i);
        const Vector ei = basis_vector(d, i);
        for (std::size_t j = 0; j < d; ++j) {
          const Vector ry = Ry.column(j);
          Vector sum = mu.apply(x, y, rx, basis_vector(d, j));
          add_to(sum, mu.apply(x, y, ei, ry));
          if (!weight.is_zero()) {
            const auto cell = mu.cell(x, y, i, j);
            add_to(sum, scaled(Vector(cell.begin(), cell.end()), weight));
          }
          if (mu.apply(x, y, rx, ry) != Rxy.apply(sum)) return false;
        }
      }
    }
    return true;
  };
  std::vector<RotaBaxterFamily> out;
  for (auto& maps : backtrack(w, commuting_candidates(a, cfg), ok)) {
    RotaBaxterFamily r{LinearFamily(a.omega(), d, std::move(maps)), weight};
    if (check_rota_baxter(a, r, {0}).passed()) out.push_back(std::move(r));
  }
  return out;
}

std::vector<LinearFamily> find_endomorphisms(const AlgebraInstance& a, const SearchConfig& cfg) {
  check_budget(a, cfg);
  const auto& w = *a.omega();
  const std::size_t d = a.dim();
  auto ok = [&](const std::vector<const Matrix*>& f, std::size_t x, std::size_t y) {
    const Matrix& fx = *f[x];
    const Matrix& fy = *f[y];
    const Matrix& fxy = *f[w(x, y)];
    for (const auto& mu : a.products()) {
      for (std::size_t i = 0; i < d; ++i) {
        const Vector ix = fx.column(i);
        for (std::size_t j = 0; j < d; ++j) {
          if (fxy.apply(mu.cell(x, y, i, j)) != mu.apply(x, y, ix, fy.column(j))) return false;
        }
      }
    }
    return true;
  };
  std::vector<LinearFamily> out;
  for (auto& maps : backtrack(w, commuting_candidates(a, cfg), ok)) {
    LinearFamily f(a.omega(), d, std::move(maps));
    if (check_morphism(f, a, a, {0}).passed()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::pair<LinearFamily, LinearFamily>> make_endomorphism_pairs(const AlgebraInstance& a,
                                                                            const SearchConfig& cfg) {
  require_valid(a, {});
  const auto id = LinearFamily::identity(a.omega(), a.dim());
  std::vector<std::pair<LinearFamily, LinearFamily>> out;
  auto push = [&](const LinearFamily& f, const LinearFamily& g) {
    if (out.size() >= cfg.target_count) return;
    for (const auto& [u, v] : out) {
      if (u == f && v == g) return;
    }
    out.emplace_back(f, g);
  };
  push(id, id);
  // Invertible endomorphisms first, each group in search order.
  std::vector<LinearFamily> endos;
  std::vector<LinearFamily> singular;
  for (auto& f : find_endomorphisms(a, cfg)) {
    if (f.is_identity()) continue;
    try {
      (void)f.inverse();
      endos.push_back(std::move(f));
    } catch (const Singular&) {
      singular.push_back(std::move(f));
    }
  }
  for (auto& f : singular) endos.push_back(std::move(f));
  for (const auto& f : endos) {
    push(f, id);
    push(id, f);
    push(f, f);
    push(f, f.power(2));
  }
  for (std::size_t i = 0; i < endos.size(); ++i) {
    for (std::size_t j = 0; j < endos.size(); ++j) {
      if (i != j && !first_noncommuting(endos[i], endos[j])) push(endos[i], endos[j]);
    }
  }
  return out;
}

}  // namespace bihomega
