#pragma once

#include "pek/partitions.hpp"
#include "pek/weights.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pek {

/// The three root sets of a parabolic decomposition of pe(n), cut out of
/// the full root list by the sign of the pairing against a rational
/// functional.  Cartan part is implicit.
struct ParabolicDecomposition {
    int n = 0;
    std::vector<Root> uminus;
    std::vector<Root> levi;
    std::vector<Root> uplus;

    std::vector<Root> parabolic_roots() const;  // levi + uplus, sorted

    bool operator==(const ParabolicDecomposition&) const = default;
};

/// pe(k0) + sum of gl(k_i|l_i) blocks; `blocks[i-1]` counts the mu and nu
/// parts equal to i, trailing empty blocks trimmed.
struct LeviType {
    int k0 = 0;
    std::vector<std::pair<int, int>> blocks;

    bool operator==(const LeviType&) const = default;
};

const RootDatum& pe_datum(int n);

/// zeta_x = sum mu_i eps_i - sum nu_j eps_{n+1-j}
Weight zeta(const Bipartition& x, int n);

ParabolicDecomposition decompose(const Weight& delta, int n);

/// The unique BRP_n bipartition inducing the same decomposition as a
/// weakly decreasing rational delta: scale/round to integers, then apply
/// the three sign-preserving manipulations until none fires.  Output is
/// validated against the input by sign-pattern equality over all roots.
Bipartition canonicalize(const Weight& delta, int n);

bool is_brp00(const Bipartition& x, int n);

/// Odd roots of the Borel subalgebra labelled by x in BRP00_n, by the
/// closed-form description; cross-checked in tests against the sign test.
std::vector<Root> borel_odd_roots(const Bipartition& x, int n);

/// n(n-1)/2 + length(mu)
long long borel_odd_dim(const Bipartition& x, int n);

/// Strict inclusion b(x) < b(x'): mu' = (mu,1) and nu = (nu',1).
bool borel_included(const Bipartition& x, const Bipartition& xp, int n);

/// Decomposition attached to a BRP0_n sign form.  Asserts the odd part of
/// the parabolic equals the odd part of the Borel with the same f.
ParabolicDecomposition reduced_parabolic(const SignForm& s, int n);

/// p(s) contained in p(s'), evaluated through the sign-form order.
bool parabolic_included(const SignForm& s, const SignForm& sp, int n);

/// Label of the dual parabolic: (mu,nu) -> (nu,mu).
Bipartition hat_dual(const Bipartition& x, int n);

LeviType levi_type(const Bipartition& x, int n);

/// Levi block sizes of the decomposition induced by a sign form (runs of
/// equal coordinates of zeta).
std::vector<int> levi_blocks(const SignForm& s, int n);

/// -w0^p(lambda) + 2 rho_signed(u^-), the label map of Ringel duality.
/// An involution: w0^p stabilises the u^- root set.
Weight ringel_weight_map(const SignForm& s, const Weight& lambda, int n);

/// -w0(lambda): coordinate reversal and negation.  Borel labels travel by
/// hat_dual alongside.
Weight duality_weight_map(const Weight& lambda, int n);

/// Highest-weight change of a tilting module across an odd reflection:
/// lambda+alpha for alpha = 2eps_i, lambda+alpha or lambda+2alpha for
/// alpha = eps_i + eps_{i+1} depending on lambda_i - lambda_{i+1}.
Weight tilting_odd_reflection(const Weight& lambda, const Root& alpha, int n);

struct PiPredicates {
    bool injective = false;
    Weight injective_label;                 // lambda + 2 omega_n
    Bipartition tilting_borel;              // hat dual label
    Weight tilting_weight;                  // w0 lambda - 2 rho_signed(hat Borel)
    std::optional<bool> selfdual;           // only defined at the b^s label
};

/// Projective-injective data at a Borel label: injectivity test via the
/// odd shift of b cap g^-, the injective-hull label, the tilting
/// realisation, and (at b^s only) self-duality.
PiPredicates pi_predicates(const Bipartition& x, const Weight& lambda, int n);

/// mu + odd_sum(b cap g^-): the b-socle label sitting inside the standard
/// Verma of highest weight mu.
Weight verma_socle_label(const Bipartition& x, const Weight& mu, int n);

/// (ringel(mu), ringel(lambda)): the (costandard, simple) label pair whose
/// composition multiplicity equals (T(lambda) : Delta(mu)).
std::pair<Weight, Weight> ringel_multiplicity_pair(const SignForm& s, const Weight& lambda,
                                                   const Weight& mu, int n);

}  // namespace pek
