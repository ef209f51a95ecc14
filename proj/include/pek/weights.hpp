#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pek {

using Rat = boost::rational<long long>;

/// Exact weight in the (delta | eps) coordinate basis.  Families with a
/// single coordinate block (pe(n), q(n)) leave `delta` empty.
struct Weight {
    std::vector<Rat> delta;
    std::vector<Rat> eps;

    Weight() = default;
    Weight(std::vector<Rat> d, std::vector<Rat> e)
        : delta(std::move(d)), eps(std::move(e)) {}

    /// eps-only weight, the shape used throughout the pe(n) code paths.
    static Weight eps_only(std::vector<Rat> e) { return Weight({}, std::move(e)); }
    static Weight zero_pe(int n) { return Weight({}, std::vector<Rat>(n, Rat(0))); }

    bool same_shape(const Weight& o) const {
        return delta.size() == o.delta.size() && eps.size() == o.eps.size();
    }
    bool is_zero() const;
    bool integral_coords() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rat& c, Weight w);
    Weight operator-() const;

    bool operator==(const Weight&) const = default;
    bool operator<(const Weight& o) const;
};

struct ParityWeight {
    Weight weight;
    int parity = 0;  // element of Z_2, stored as 0 or 1

    bool operator==(const ParityWeight&) const = default;
    bool operator<(const ParityWeight& o) const;
};

struct Root {
    Weight weight;
    int parity = 0;

    bool is_odd() const { return parity == 1; }
    bool operator==(const Root&) const = default;
    bool operator<(const Root& o) const;
};

enum class Family { PE, GL, Q, SPO_EVEN, SPO_ODD, D21, G3, F31 };

std::string family_name(Family f);

/// Root list, even simple system and bilinear form rule of one algebra.
///
/// PE(n):         eps rank n, form (eps_i, eps_j) = +delta_ij
/// GL(m|n):       delta rank m, eps rank n, (d,d) = +I, (e,e) = -I
/// Q(n):          eps rank n, (e,e) = +I; every root carries both parities
/// SPO_EVEN(n,m): spo(2n|2m), delta rank n, eps rank m, (d,d)=+I, (e,e)=-I
/// SPO_ODD(n,m):  spo(2n|2m+1), same form as SPO_EVEN
///
/// D21/G3/F31 carry no root datum here: the form normalisation for them is
/// out of scope and their classifiers are purely coordinate-level.
struct RootDatum {
    Family family;
    int delta_rank = 0;
    int eps_rank = 0;
    std::optional<Rat> zeta;  // D21 parameter, unused elsewhere
    std::vector<Root> roots;
    std::vector<Root> even_simple;
};

RootDatum build_root_datum(Family family, const std::vector<int>& ranks,
                           std::optional<Rat> zeta = std::nullopt);

/// The invariant symmetric bilinear form of the datum.
Rat pairing(const RootDatum& datum, const Weight& a, const Weight& b);

/// (lambda, alpha^vee) with alpha^vee = 2 alpha / (alpha, alpha).
Rat coroot_pairing(const RootDatum& datum, const Weight& lambda, const Root& alpha);

/// rho of a root subset with the even-minus-odd sign convention:
/// (1/2) * (sum of even roots - sum of odd roots).
Weight rho_signed(std::span<const Root> subset);

/// Plain sum over a set of odd roots (the weight of the top symmetric
/// power of the corresponding odd space).  Errors if an even root sneaks in.
Weight odd_sum(std::span<const Root> subset);

/// Signed permutation acting on the two coordinate blocks.  Entry map[i]
/// holds a one-based target index, negated when the coordinate changes
/// sign.  Plain permutations use positive entries only.
struct WeylElement {
    std::vector<int> delta_map;
    std::vector<int> eps_map;

    static WeylElement identity(int delta_rank, int eps_rank);
    /// Longest element of S_n acting on the eps block (coordinate reversal).
    static WeylElement eps_reversal(int n);
    /// Blockwise reversal for Levi blocks of the given sizes.
    static WeylElement eps_block_reversal(const std::vector<int>& block_sizes);
};

Weight weyl_apply(const WeylElement& w, const Weight& lambda);
WeylElement longest_element(const RootDatum& datum);

/// True iff (lambda, alpha^vee) is not a natural number (0 included) for
/// every even simple root.  Errors on non-integral lambda, naming the
/// offending pairing.
bool is_antidominant(const RootDatum& datum, const Weight& lambda);

/// Odd reflection rule for contragredient families: lambda when
/// (lambda, gamma) = 0, else lambda - gamma.  gamma must be an odd
/// isotropic root of the datum.
Weight odd_reflection(const Weight& lambda, const Root& gamma, const RootDatum& datum);

}  // namespace pek
