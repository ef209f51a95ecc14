#include "pek/periplectic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pek {

namespace {

void check_pe_weight(const Weight& w, int n, const char* what) {
    if (!w.delta.empty() || (int)w.eps.size() != n)
        throw std::invalid_argument(std::string(what) + ": expected an eps-only weight of rank " +
                                    std::to_string(n));
}

Weight eps_units(int n, std::initializer_list<std::pair<int, int>> terms) {
    Weight w = Weight::zero_pe(n);
    for (auto [i, c] : terms) w.eps[i] += Rat(c);
    return w;
}

Weight omega(int n) {
    return Weight::eps_only(std::vector<Rat>(n, Rat(1)));
}

int sign_of(const Rat& r) {
    if (r.numerator() > 0) return 1;
    if (r.numerator() < 0) return -1;
    return 0;
}

Rat pe_dot(const Weight& a, const Weight& b) {
    Rat acc(0);
    for (size_t i = 0; i < a.eps.size(); ++i) acc += a.eps[i] * b.eps[i];
    return acc;
}

bool weakly_decreasing(const std::vector<Rat>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

}  // namespace

const RootDatum& pe_datum(int n) {
    static std::map<int, RootDatum> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_root_datum(Family::PE, {n})).first;
    return it->second;
}

std::vector<Root> ParabolicDecomposition::parabolic_roots() const {
    std::vector<Root> out = levi;
    out.insert(out.end(), uplus.begin(), uplus.end());
    std::sort(out.begin(), out.end());
    return out;
}

Weight zeta(const Bipartition& x, int n) {
    validate_partition(x.mu);
    validate_partition(x.nu);
    if ((int)(x.mu.size() + x.nu.size()) > n)
        throw std::invalid_argument("zeta: length overflow, l(mu)+l(nu) > n");
    Weight w = Weight::zero_pe(n);
    for (size_t i = 0; i < x.mu.size(); ++i) w.eps[i] += Rat(x.mu[i]);
    for (size_t j = 0; j < x.nu.size(); ++j) w.eps[n - 1 - j] -= Rat(x.nu[j]);
    return w;
}

ParabolicDecomposition decompose(const Weight& delta, int n) {
    check_pe_weight(delta, n, "decompose");
    ParabolicDecomposition d;
    d.n = n;
    for (const Root& alpha : pe_datum(n).roots) {
        switch (sign_of(pe_dot(delta, alpha.weight))) {
            case 1: d.uplus.push_back(alpha); break;
            case 0: d.levi.push_back(alpha); break;
            default: d.uminus.push_back(alpha); break;
        }
    }
    std::sort(d.uminus.begin(), d.uminus.end());
    std::sort(d.levi.begin(), d.levi.end());
    std::sort(d.uplus.begin(), d.uplus.end());
    return d;
}

namespace {

// One pass of the three manipulations from the classification proof, on an
// integer weakly decreasing vector d.  Conventions: mu_0 = +inf and
// mu_{p+1} = 0 on the nonnegative side, v_0 = 0 and v_{n-p+1} = -inf on
// the negative side.  Returns false when d is already reduced.
bool apply_manipulation(std::vector<long long>& d) {
    int n = (int)d.size();
    int p = 0;
    while (p < n && d[p] >= 0) ++p;
    auto mu = [&](int i) -> long long {  // one-based, mu(p+1) = 0 sentinel
        if (i == 0) return std::numeric_limits<long long>::max();
        if (i > p) return 0;
        return d[i - 1];
    };
    auto v = [&](int j) -> long long {  // one-based, v(0) = 0 sentinel
        if (j == 0) return 0;
        if (j > n - p) return std::numeric_limits<long long>::min();
        return d[p + j - 1];
    };

    // maximal constant blocks [i, i+s] of the mu side with a gap >= 2 below
    for (int i = 1; i <= p; ++i) {
        if (mu(i - 1) <= mu(i)) continue;
        int s = 0;
        while (mu(i + s + 1) == mu(i)) ++s;
        if (mu(i + s) <= mu(i + s + 1) + 1) continue;
        // (1): -mu_i falls strictly inside a v-gap of width >= 2
        bool gap = false;
        for (int j = 0; j <= n - p && !gap; ++j)
            gap = v(j) - 1 > -mu(i) && -mu(i) > v(j + 1);
        if (gap) {
            for (int k = i; k <= i + s; ++k) --d[k - 1];
            return true;
        }
        // (3): matching v-block with the same absolute value
        for (int j = 1; j <= n - p; ++j) {
            if (mu(i) != -v(j)) continue;
            if (v(j - 1) - 1 <= v(j)) continue;
            int t = 0;
            while (v(j + t + 1) == v(j)) ++t;
            if (v(j + t) <= v(j + t + 1)) continue;
            for (int k = i; k <= i + s; ++k) --d[k - 1];
            for (int k = j; k <= j + t; ++k) ++d[p + k - 1];
            return true;
        }
    }
    // (2): maximal v-blocks with a gap >= 2 above and -v_j inside a mu-gap
    for (int j = 1; j <= n - p; ++j) {
        if (v(j - 1) - 1 <= v(j)) continue;
        int t = 0;
        while (v(j + t + 1) == v(j)) ++t;
        if (v(j + t) <= v(j + t + 1)) continue;
        bool gap = false;
        for (int i = 0; i <= p && !gap; ++i)
            gap = mu(i) > -v(j) && -v(j) > mu(i + 1) + 1;
        if (gap) {
            for (int k = j; k <= j + t; ++k) ++d[p + k - 1];
            return true;
        }
    }
    return false;
}

}  // namespace

Bipartition canonicalize(const Weight& delta, int n) {
    check_pe_weight(delta, n, "canonicalize");
    if (!weakly_decreasing(delta.eps))
        throw std::invalid_argument("canonicalize: delta must be weakly decreasing");

    // Scale so every nonzero |delta_i - delta_j| and |delta_i + delta_j|
    // is >= 2 (i = j included, which gives nonzero |delta_i| >= 1), then
    // round away from zero.  This keeps every sign unchanged.
    Rat minval(0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            for (Rat val : {delta.eps[i] - delta.eps[j], delta.eps[i] + delta.eps[j]}) {
                Rat a = abs(val);
                if (a != 0 && (minval == 0 || a < minval)) minval = a;
            }
        }
    std::vector<long long> d(n, 0);
    if (minval != 0) {
        Rat scale = Rat(2) / minval;
        if (scale < 1) scale = Rat(1);
        for (int i = 0; i < n; ++i) {
            Rat x = scale * delta.eps[i];
            long long q = x.numerator() / x.denominator();  // trunc toward zero
            if (x.numerator() % x.denominator() != 0 && x > 0) ++q;  // ceil
            if (x.numerator() % x.denominator() != 0 && x < 0) --q;  // floor
            d[i] = q;
        }
    }

    while (apply_manipulation(d)) {}

    Bipartition x;
    for (long long c : d)
        if (c > 0) x.mu.push_back((int)c);
    for (int i = n - 1; i >= 0; --i)
        if (d[i] < 0) x.nu.push_back((int)-d[i]);

    if (!classify_bipartition(x, n).brp)
        throw std::logic_error("canonicalize: reduction left the BRP class");
    Weight zx = zeta(x, n);
    for (const Root& alpha : pe_datum(n).roots)
        if (sign_of(pe_dot(zx, alpha.weight)) != sign_of(pe_dot(delta, alpha.weight)))
            throw std::logic_error("canonicalize: sign pattern changed during reduction");
    return x;
}

bool is_brp00(const Bipartition& x, int n) { return classify_bipartition(x, n).brp00; }

std::vector<Root> borel_odd_roots(const Bipartition& x, int n) {
    if (!is_brp00(x, n))
        throw std::invalid_argument("borel_odd_roots: label not in BRP00_n");
    int p = (int)x.mu.size();
    std::vector<Root> out;
    for (int i = 1; i <= p; ++i)
        for (int j = i; j <= x.mu[i - 1] + i - 1; ++j)
            out.push_back({eps_units(n, {{i - 1, 1}, {j - 1, 1}}), 1});
    for (int k = 1; k <= n - p; ++k)
        for (int l = k + 1; l <= x.nu[k - 1] + k - 1; ++l)
            out.push_back({eps_units(n, {{n - l, -1}, {n - k, -1}}), 1});
    std::sort(out.begin(), out.end());
    return out;
}

long long borel_odd_dim(const Bipartition& x, int n) {
    if (!is_brp00(x, n))
        throw std::invalid_argument("borel_odd_dim: label not in BRP00_n");
    return (long long)n * (n - 1) / 2 + (long long)x.mu.size();
}

bool borel_included(const Bipartition& x, const Bipartition& xp, int n) {
    if (!is_brp00(x, n) || !is_brp00(xp, n))
        throw std::invalid_argument("borel_included: labels not in BRP00_n");
    Partition mu1 = x.mu;
    mu1.push_back(1);
    Partition nup1 = xp.nu;
    nup1.push_back(1);
    return xp.mu == mu1 && x.nu == nup1;
}

ParabolicDecomposition reduced_parabolic(const SignForm& s, int n) {
    Bipartition x = from_sign_form(s);
    if (!classify_bipartition(x, n).brp0)
        throw std::invalid_argument("reduced_parabolic: sign form not in BRP0_n");
    ParabolicDecomposition d = decompose(zeta(x, n), n);

    // p(kappa, f)_1 = b(f)_1: the odd part only remembers f
    std::vector<Root> odd;
    for (const Root& r : d.uplus)
        if (r.is_odd()) odd.push_back(r);
    Bipartition borel = from_sign_form({staircase(n), s.f});
    if (odd != borel_odd_roots(borel, n))
        throw std::logic_error("reduced_parabolic: odd part disagrees with the f-Borel");
    return d;
}

bool parabolic_included(const SignForm& s, const SignForm& sp, int n) {
    Bipartition x = from_sign_form(s), xp = from_sign_form(sp);
    if (!classify_bipartition(x, n).brp0 || !classify_bipartition(xp, n).brp0)
        throw std::invalid_argument("parabolic_included: sign forms not in BRP0_n");
    return brp_leq(s, sp);
}

Bipartition hat_dual(const Bipartition& x, int n) {
    if (!classify_bipartition(x, n).brp0)
        throw std::invalid_argument("hat_dual: label not in BRP0_n");
    return dual(x);
}

LeviType levi_type(const Bipartition& x, int n) {
    if (!classify_bipartition(x, n).brp)
        throw std::invalid_argument("levi_type: bipartition not in BRP_n");
    LeviType t;
    std::vector<std::pair<int, int>> blocks(n, {0, 0});
    for (int a : x.mu) blocks[a - 1].first++;
    for (int b : x.nu) blocks[b - 1].second++;
    int used = 0;
    for (auto [k, l] : blocks) used += k + l;
    t.k0 = n - used;
    while (!blocks.empty() && blocks.back() == std::pair<int, int>{0, 0}) blocks.pop_back();
    t.blocks = std::move(blocks);
    return t;
}

std::vector<int> levi_blocks(const SignForm& s, int n) {
    Weight z = zeta(from_sign_form(s), n);
    std::vector<int> sizes;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && z.eps[i] == z.eps[i - 1])
            ++sizes.back();
        else
            sizes.push_back(1);
    }
    return sizes;
}

Weight ringel_weight_map(const SignForm& s, const Weight& lambda, int n) {
    check_pe_weight(lambda, n, "ringel_weight_map");
    ParabolicDecomposition d = reduced_parabolic(s, n);
    WeylElement w0p = WeylElement::eps_block_reversal(levi_blocks(s, n));
    return -weyl_apply(w0p, lambda) + Rat(2) * rho_signed(d.uminus);
}

Weight duality_weight_map(const Weight& lambda, int n) {
    check_pe_weight(lambda, n, "duality_weight_map");
    return -weyl_apply(WeylElement::eps_reversal(n), lambda);
}

Weight tilting_odd_reflection(const Weight& lambda, const Root& alpha, int n) {
    check_pe_weight(lambda, n, "tilting_odd_reflection");
    check_pe_weight(alpha.weight, n, "tilting_odd_reflection");
    if (!alpha.is_odd())
        throw std::invalid_argument("tilting_odd_reflection: alpha must be odd");
    // alpha = 2 eps_i
    for (int i = 0; i < n; ++i)
        if (alpha.weight == eps_units(n, {{i, 2}})) return lambda + alpha.weight;
    // alpha = eps_i + eps_{i+1}
    for (int i = 0; i + 1 < n; ++i)
        if (alpha.weight == eps_units(n, {{i, 1}, {i + 1, 1}})) {
            if (lambda.eps[i] != lambda.eps[i + 1]) return lambda + alpha.weight;
            return lambda + Rat(2) * alpha.weight;
        }
    throw std::invalid_argument(
        "tilting_odd_reflection: alpha must be 2eps_i or eps_i + eps_{i+1}");
}

namespace {

std::vector<Root> borel_cap_gminus(const Bipartition& x, int n) {
    std::vector<Root> out;
    for (const Root& r : borel_odd_roots(x, n)) {
        Rat total(0);
        for (const Rat& c : r.weight.eps) total += c;
        if (total < 0) out.push_back(r);  // g^- roots are the -eps_i-eps_j
    }
    return out;
}

}  // namespace

PiPredicates pi_predicates(const Bipartition& x, const Weight& lambda, int n) {
    check_pe_weight(lambda, n, "pi_predicates");
    if (!lambda.integral_coords())
        throw std::invalid_argument("pi_predicates: lambda must lie in the integral lattice X");
    if (!is_brp00(x, n)) throw std::invalid_argument("pi_predicates: label not in BRP00_n");

    PiPredicates out;
    Weight shift = Weight::zero_pe(n);
    auto down = borel_cap_gminus(x, n);
    if (!down.empty()) shift = odd_sum(down);
    out.injective = is_antidominant(pe_datum(n), lambda - shift);
    out.injective_label = lambda + Rat(2) * omega(n);
    out.tilting_borel = hat_dual(x, n);
    std::vector<Root> hat_roots = decompose(zeta(out.tilting_borel, n), n).uplus;
    out.tilting_weight = weyl_apply(WeylElement::eps_reversal(n), lambda) -
                         Rat(2) * rho_signed(hat_roots);
    if (x.mu == staircase(n)) {
        Weight sum = lambda + weyl_apply(WeylElement::eps_reversal(n), lambda);
        out.selfdual = is_antidominant(pe_datum(n), lambda) && sum == Rat(n - 3) * omega(n);
    }
    return out;
}

Weight verma_socle_label(const Bipartition& x, const Weight& mu, int n) {
    check_pe_weight(mu, n, "verma_socle_label");
    auto down = borel_cap_gminus(x, n);
    if (down.empty()) return mu;
    return mu + odd_sum(down);
}

std::pair<Weight, Weight> ringel_multiplicity_pair(const SignForm& s, const Weight& lambda,
                                                   const Weight& mu, int n) {
    return {ringel_weight_map(s, mu, n), ringel_weight_map(s, lambda, n)};
}

}  // namespace pek
