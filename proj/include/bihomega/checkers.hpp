#pragma once

#include <string>

#include "bihomega/algebra.hpp"
#include "bihomega/report.hpp"

namespace bihomega {

// Every checker enumerates semigroup indices and basis tuples in
// lexicographic order (alpha, beta, gamma, i, j, k) and returns one report per
// axiom. Throws KindMismatch when the instance carries another kind.
//
// Axiom names: "p-multiplicative[role]" and "q-multiplicative[role]" for each
// product the kind requires the structure maps to respect, then the kind's
// identities. Sub-structures checked as a whole are prefixed: "lie/" inside
// PostLie, "prelie/" and "zinbiel/" inside pre-Poisson.

/// Associative kinds: multiplicativity and p(x)(yz) = (xy)q(z).
Verdict check_bihom_associative(const AlgebraInstance& a, const CheckOptions& opts = {});
/// Multiplicativity over both products and "dendriform-1".."dendriform-3".
Verdict check_dendriform(const AlgebraInstance& a, const CheckOptions& opts = {});

// The remaining kinds need a commutative semigroup; they throw
// NonCommutativeOmega when the table is not commutative.

/// Multiplicativity and "bihom-left-symmetry".
Verdict check_prelie(const AlgebraInstance& a, const CheckOptions& opts = {});
/// Multiplicativity, "bihom-skew-symmetry" and "bihom-jacobi".
Verdict check_lie(const AlgebraInstance& a, const CheckOptions& opts = {});
/// The bracket as a Lie algebra ("lie/..."), multiplicativity over the
/// triangle product, "postlie-1" and "postlie-2".
Verdict check_postlie(const AlgebraInstance& a, const CheckOptions& opts = {});
/// Multiplicativity and "bihom-zinbiel".
Verdict check_zinbiel(const AlgebraInstance& a, const CheckOptions& opts = {});
/// "prelie/...", "zinbiel/...", "prepoisson-1" and "prepoisson-2".
Verdict check_prepoisson(const AlgebraInstance& a, const CheckOptions& opts = {});

/// The checker belonging to the instance's own kind.
Verdict check_kind(const AlgebraInstance& a, const CheckOptions& opts = {});

/// "rota-baxter[role]" for every product of `a`, then "commutes-p" and
/// "commutes-q" (R_a p_a = p_a R_a, R_a q_a = q_a R_a; matrices are reported
/// flattened row-major). Throws ShapeMismatch.
Verdict check_rota_baxter(const AlgebraInstance& a, const RotaBaxterFamily& r, const CheckOptions& opts = {});

/// "morphism[role]" (f_ab(x o y) = f_a(x) o' f_b(y)) for every product, then
/// "intertwines-p" and "intertwines-q" (p'_a f_a = f_a p_a). Throws
/// KindMismatch or ShapeMismatch.
Verdict check_morphism(const LinearFamily& f, const AlgebraInstance& src, const AlgebraInstance& dst,
                       const CheckOptions& opts = {});

/// Reports whose axiom name equals `axiom` or ends with "/" + axiom.
Verdict filter_axiom(const Verdict& v, const std::string& axiom);

}  // namespace bihomega
