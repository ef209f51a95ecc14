#pragma once

#include <string>
#include <vector>

namespace pek {

/// Partition stored without trailing zeros, parts weakly decreasing.
using Partition = std::vector<int>;

void validate_partition(const Partition& p);

/// Multiset union of parts, sorted decreasing (the * operation).
Partition merge(const Partition& mu, const Partition& nu);

/// 0 <= p_i - p_{i+1} <= 1 for all i, with one virtual trailing zero.
bool is_two_restricted(const Partition& p);

/// (n, n-1, ..., 1)
Partition staircase(int n);

struct Bipartition {
    Partition mu;
    Partition nu;

    bool operator==(const Bipartition&) const = default;
};

/// Canonical listing order: lexicographic on (mu, nu), parts compared
/// numerically descending, with the longer partition first on a prefix tie.
bool canonical_less(const Partition& a, const Partition& b);
bool canonical_less(const Bipartition& a, const Bipartition& b);

struct BipartitionClasses {
    bool brp = false;    // mu * nu is 2-restricted of length <= n
    bool brp0 = false;   // + no common positive part, length exactly n
    bool brp00 = false;  // + mu * nu equals the staircase
};

BipartitionClasses classify_bipartition(const Bipartition& x, int n);

enum class BrpClass { BRP, BRP0, BRP00 };

/// Complete duplicate-free enumeration in canonical order.
std::vector<Bipartition> enumerate_bipartitions(int n, BrpClass cls);

/// 2-restricted partitions of length exactly r.
std::vector<Partition> enumerate_rp0(int r);

/// (kappa, f) pair of Lemma LemRPBij: kappa = mu * nu of length exactly r,
/// f(i) = '+' iff kappa_i came from mu.  f constant on equal parts.
struct SignForm {
    Partition kappa;
    std::string f;  // string over {+,-}, same length as kappa

    bool operator==(const SignForm&) const = default;
};

void validate_sign_form(const SignForm& s);

SignForm to_sign_form(const Bipartition& x, int n);
Bipartition from_sign_form(const SignForm& s);

/// Partial order on BRP^0_n sign forms: kappa - kappa' is a partition,
/// f agrees below n, and (f(n), f'(n)) is not (+,-).  Per the subalgebra
/// classification this is equivalent to inclusion of the associated
/// reduced parabolic subalgebras, a <= b iff p(a) is contained in p(b).
bool brp_leq(const SignForm& a, const SignForm& b);

/// (mu, nu) -> (nu, mu), the label-level duality.
Bipartition dual(const Bipartition& x);

std::string bipartition_label(const Bipartition& x);

}  // namespace pek
