#pragma once

#include "pek/periplectic.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace pek {

/// One monomial of a truncated formal character.  `height` counts the
/// product steps taken from the base weight (geometric-series exponents
/// plus odd factors), which is the truncation grade: the same weight can
/// occur at several heights and the entries are kept separate so that
/// restricting to a smaller depth is exact.
struct CharTerm {
    long long height = 0;
    Weight weight;
    int parity = 0;

    auto key() const { return std::tie(height, weight, parity); }
    bool operator<(const CharTerm& o) const { return key() < o.key(); }
    bool operator==(const CharTerm&) const = default;
};

/// Finitely supported character truncated at a fixed height, tagged with
/// the Borel label whose triangular decomposition anchors it.
struct FormalCharacter {
    ParityWeight base;
    long long depth = 0;
    Bipartition positive_system;
    int n = 0;
    std::map<CharTerm, long long> terms;

    static FormalCharacter monomial(const ParityWeight& base, long long depth,
                                    const Bipartition& system, int n);

    long long coefficient(const Weight& w, int parity) const;  // summed over heights
    long long coefficient_sum() const;

    /// Drop every term of height > new_depth.
    FormalCharacter truncated(long long new_depth) const;

    /// Collapse heights: (weight, parity) -> coefficient.
    std::map<std::pair<Weight, int>, long long> collapsed() const;
};

FormalCharacter char_add(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter char_mult(const FormalCharacter& a, const FormalCharacter& b);

/// Character of the Verma module induced from the Borel labelled by
/// b in BRP00_n: e^lambda times the PBW product over the opposite
/// nilradical, geometric factors for even roots and (1 + e^gamma) for odd
/// ones, expanded to the stated height.
FormalCharacter verma_character(const Bipartition& b, const ParityWeight& lambda,
                                long long depth, int n);

/// Character of the Verma module of the underlying even Lie algebra gl(n)
/// with respect to its standard Borel, tagged with `system` for later
/// induction.
FormalCharacter even_verma_character(const ParityWeight& lambda, long long depth,
                                     const Bipartition& system, int n);

/// Multiply by prod over all odd roots of pe(n) of (1 + e^(alpha,1)), the
/// character effect of inducing from the even subalgebra.  Result is
/// re-anchored at base + sum of the raising odd roots so the terms stay in
/// the downward cone of the positive system.
FormalCharacter induced_character(const FormalCharacter& m, int n);

/// { (lambda + sum S, |S| mod 2) : S subset of the odd roots of b }, the
/// multiset of standard labels in the flag of the induced even Verma.
std::vector<ParityWeight> delta_flag_labels(const Bipartition& b, const Weight& lambda, int n);

struct FlagCheck {
    bool ok = true;
    std::string diff;  // first few mismatching terms when !ok
};

/// Compare ch Ind Delta_0(lambda) with the sum of Verma characters over the
/// flag labels.  Both sides are expanded independently and compared exactly
/// on the cone slice { nu : (zeta_b, top - nu) <= depth }, top being the
/// maximal flag label.
FlagCheck verify_flag_identity(const Bipartition& b, const Weight& lambda, long long depth,
                               int n);

}  // namespace pek
