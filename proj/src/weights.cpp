#include "pek/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pek {

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

void check_shape(const Weight& a, const Weight& b, const char* what) {
    if (!a.same_shape(b))
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

bool Weight::is_zero() const {
    auto z = [](const Rat& r) { return r == 0; };
    return std::all_of(delta.begin(), delta.end(), z) &&
           std::all_of(eps.begin(), eps.end(), z);
}

bool Weight::integral_coords() const {
    auto ok = [](const Rat& r) { return r.denominator() == 1; };
    return std::all_of(delta.begin(), delta.end(), ok) &&
           std::all_of(eps.begin(), eps.end(), ok);
}

Weight& Weight::operator+=(const Weight& o) {
    check_shape(*this, o, "Weight::operator+=");
    for (size_t i = 0; i < delta.size(); ++i) delta[i] += o.delta[i];
    for (size_t i = 0; i < eps.size(); ++i) eps[i] += o.eps[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    check_shape(*this, o, "Weight::operator-=");
    for (size_t i = 0; i < delta.size(); ++i) delta[i] -= o.delta[i];
    for (size_t i = 0; i < eps.size(); ++i) eps[i] -= o.eps[i];
    return *this;
}

Weight operator*(const Rat& c, Weight w) {
    for (auto& x : w.delta) x *= c;
    for (auto& x : w.eps) x *= c;
    return w;
}

Weight Weight::operator-() const { return Rat(-1) * (*this); }

bool Weight::operator<(const Weight& o) const {
    if (delta != o.delta) return delta < o.delta;
    return eps < o.eps;
}

bool ParityWeight::operator<(const ParityWeight& o) const {
    if (weight == o.weight) return parity < o.parity;
    return weight < o.weight;
}

bool Root::operator<(const Root& o) const {
    if (weight == o.weight) return parity < o.parity;
    return weight < o.weight;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::PE: return "pe";
        case Family::GL: return "gl";
        case Family::Q: return "q";
        case Family::SPO_EVEN: return "spo-even";
        case Family::SPO_ODD: return "spo-odd";
        case Family::D21: return "d21";
        case Family::G3: return "g3";
        case Family::F31: return "f31";
    }
    return "?";
}

namespace {

Weight unit_delta(int n, int m, int i, Rat c = Rat(1)) {
    Weight w(std::vector<Rat>(n, Rat(0)), std::vector<Rat>(m, Rat(0)));
    w.delta[i] = c;
    return w;
}

Weight unit_eps(int n, int m, int j, Rat c = Rat(1)) {
    Weight w(std::vector<Rat>(n, Rat(0)), std::vector<Rat>(m, Rat(0)));
    w.eps[j] = c;
    return w;
}

Weight pe_vec(int n, int i, int j, int si, int sj) {
    // si*eps_i + sj*eps_j
    Weight w = Weight::zero_pe(n);
    w.eps[i] += Rat(si);
    w.eps[j] += Rat(sj);
    return w;
}

std::vector<Root> pe_roots(int n) {
    std::vector<Root> roots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) roots.push_back({pe_vec(n, i, j, 1, -1), 0});
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) roots.push_back({pe_vec(n, i, j, 1, 1), 1});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) roots.push_back({pe_vec(n, i, j, -1, -1), 1});
    return roots;
}

}  // namespace

RootDatum build_root_datum(Family family, const std::vector<int>& ranks,
                           std::optional<Rat> zeta) {
    auto need_ranks = [&](size_t k) {
        if (ranks.size() != k)
            throw std::invalid_argument("build_root_datum: " + family_name(family) +
                                        " expects " + std::to_string(k) + " rank(s)");
        for (int r : ranks)
            if (r <= 0) throw std::invalid_argument("build_root_datum: ranks must be positive");
    };
    if (zeta && family != Family::D21)
        throw std::invalid_argument("build_root_datum: zeta is only meaningful for D(2|1,zeta)");

    RootDatum d;
    d.family = family;

    switch (family) {
        case Family::PE: {
            need_ranks(1);
            int n = ranks[0];
            d.eps_rank = n;
            d.roots = pe_roots(n);
            for (int i = 0; i + 1 < n; ++i)
                d.even_simple.push_back({pe_vec(n, i, i + 1, 1, -1), 0});
            return d;
        }
        case Family::Q: {
            need_ranks(1);
            int n = ranks[0];
            d.eps_rank = n;
            // every root space of q(n) is (1|1)-dimensional
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) {
                        d.roots.push_back({pe_vec(n, i, j, 1, -1), 0});
                        d.roots.push_back({pe_vec(n, i, j, 1, -1), 1});
                    }
            for (int i = 0; i + 1 < n; ++i)
                d.even_simple.push_back({pe_vec(n, i, i + 1, 1, -1), 0});
            return d;
        }
        case Family::GL: {
            need_ranks(2);
            int m = ranks[0], n = ranks[1];
            d.delta_rank = m;
            d.eps_rank = n;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (i != j)
                        d.roots.push_back({unit_delta(m, n, i) - unit_delta(m, n, j), 0});
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) d.roots.push_back({unit_eps(m, n, i) - unit_eps(m, n, j), 0});
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) {
                    d.roots.push_back({unit_delta(m, n, i) - unit_eps(m, n, j), 1});
                    d.roots.push_back({unit_eps(m, n, j) - unit_delta(m, n, i), 1});
                }
            for (int i = 0; i + 1 < m; ++i)
                d.even_simple.push_back({unit_delta(m, n, i) - unit_delta(m, n, i + 1), 0});
            for (int j = 0; j + 1 < n; ++j)
                d.even_simple.push_back({unit_eps(m, n, j) - unit_eps(m, n, j + 1), 0});
            return d;
        }
        case Family::SPO_EVEN:
        case Family::SPO_ODD: {
            need_ranks(2);
            int n = ranks[0], m = ranks[1];
            d.delta_rank = n;
            d.eps_rank = m;
            // sp(2n) block
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            d.roots.push_back({unit_delta(n, m, i, Rat(si)) +
                                                   unit_delta(n, m, j, Rat(sj)),
                                               0});
            for (int i = 0; i < n; ++i)
                for (int s : {2, -2}) d.roots.push_back({unit_delta(n, m, i, Rat(s)), 0});
            // so block
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            d.roots.push_back(
                                {unit_eps(n, m, i, Rat(si)) + unit_eps(n, m, j, Rat(sj)), 0});
            if (family == Family::SPO_ODD)
                for (int i = 0; i < m; ++i)
                    for (int s : {1, -1}) d.roots.push_back({unit_eps(n, m, i, Rat(s)), 0});
            // odd roots
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            d.roots.push_back({unit_delta(n, m, i, Rat(si)) +
                                                   unit_eps(n, m, j, Rat(sj)),
                                               1});
            if (family == Family::SPO_ODD)
                for (int i = 0; i < n; ++i)
                    for (int s : {1, -1}) d.roots.push_back({unit_delta(n, m, i, Rat(s)), 1});
            // even simple system of the triangular decompositions in use
            for (int i = 0; i + 1 < n; ++i)
                d.even_simple.push_back({unit_delta(n, m, i) - unit_delta(n, m, i + 1), 0});
            d.even_simple.push_back({unit_delta(n, m, n - 1, Rat(2)), 0});
            for (int j = 0; j + 1 < m; ++j)
                d.even_simple.push_back({unit_eps(n, m, j) - unit_eps(n, m, j + 1), 0});
            if (family == Family::SPO_EVEN) {
                if (m >= 2)
                    d.even_simple.push_back(
                        {unit_eps(n, m, m - 2) + unit_eps(n, m, m - 1), 0});
            } else {
                d.even_simple.push_back({unit_eps(n, m, m - 1), 0});
            }
            return d;
        }
        case Family::D21:
        case Family::G3:
        case Family::F31:
            throw std::invalid_argument(
                "build_root_datum: no root datum for " + family_name(family) +
                " (form normalisation out of scope; its classifier is coordinate-level)");
    }
    throw std::invalid_argument("build_root_datum: unsupported family");
}

Rat pairing(const RootDatum& datum, const Weight& a, const Weight& b) {
    if ((int)a.delta.size() != datum.delta_rank || (int)a.eps.size() != datum.eps_rank ||
        (int)b.delta.size() != datum.delta_rank || (int)b.eps.size() != datum.eps_rank)
        throw std::invalid_argument("pairing: dimension mismatch with root datum");
    // delta block contributes +1 per coordinate; eps block is -1 for the
    // two-block families and +1 for pe(n) and q(n).
    Rat eps_sign = (datum.family == Family::PE || datum.family == Family::Q) ? Rat(1) : Rat(-1);
    Rat acc(0);
    for (size_t i = 0; i < a.delta.size(); ++i) acc += a.delta[i] * b.delta[i];
    for (size_t i = 0; i < a.eps.size(); ++i) acc += eps_sign * a.eps[i] * b.eps[i];
    return acc;
}

Rat coroot_pairing(const RootDatum& datum, const Weight& lambda, const Root& alpha) {
    Rat norm = pairing(datum, alpha.weight, alpha.weight);
    if (norm == 0)
        throw std::invalid_argument("coroot_pairing: isotropic root has no coroot");
    return Rat(2) * pairing(datum, lambda, alpha.weight) / norm;
}

Weight rho_signed(std::span<const Root> subset) {
    if (subset.empty()) return Weight{};
    Weight acc(std::vector<Rat>(subset[0].weight.delta.size(), Rat(0)),
               std::vector<Rat>(subset[0].weight.eps.size(), Rat(0)));
    for (const Root& r : subset) acc += (r.is_odd() ? Rat(-1) : Rat(1)) * r.weight;
    return Rat(1, 2) * acc;
}

Weight odd_sum(std::span<const Root> subset) {
    if (subset.empty()) return Weight{};
    Weight acc(std::vector<Rat>(subset[0].weight.delta.size(), Rat(0)),
               std::vector<Rat>(subset[0].weight.eps.size(), Rat(0)));
    for (const Root& r : subset) {
        if (!r.is_odd()) throw std::invalid_argument("odd_sum: even root in subset");
        acc += r.weight;
    }
    return acc;
}

namespace {

void check_perm(const std::vector<int>& map, const char* block) {
    std::vector<bool> seen(map.size(), false);
    for (int v : map) {
        int idx = std::abs(v);
        if (v == 0 || idx > (int)map.size() || seen[idx - 1])
            throw std::invalid_argument(std::string("WeylElement: invalid ") + block +
                                        " permutation");
        seen[idx - 1] = true;
    }
}

std::vector<Rat> apply_block(const std::vector<int>& map, const std::vector<Rat>& coords) {
    if (map.empty()) return coords;
    if (map.size() != coords.size())
        throw std::invalid_argument("weyl_apply: dimension mismatch");
    // w maps coordinate position map[i] to position i (with sign), i.e.
    // (w.lambda)_i = sign * lambda_{|map[i]|}.
    std::vector<Rat> out(coords.size());
    for (size_t i = 0; i < map.size(); ++i) {
        int v = map[i];
        Rat x = coords[std::abs(v) - 1];
        out[i] = v < 0 ? -x : x;
    }
    return out;
}

}  // namespace

WeylElement WeylElement::identity(int delta_rank, int eps_rank) {
    WeylElement w;
    for (int i = 1; i <= delta_rank; ++i) w.delta_map.push_back(i);
    for (int i = 1; i <= eps_rank; ++i) w.eps_map.push_back(i);
    return w;
}

WeylElement WeylElement::eps_reversal(int n) {
    WeylElement w;
    for (int i = n; i >= 1; --i) w.eps_map.push_back(i);
    return w;
}

WeylElement WeylElement::eps_block_reversal(const std::vector<int>& block_sizes) {
    WeylElement w;
    int base = 0;
    for (int sz : block_sizes) {
        if (sz <= 0) throw std::invalid_argument("eps_block_reversal: block sizes must be positive");
        for (int i = sz; i >= 1; --i) w.eps_map.push_back(base + i);
        base += sz;
    }
    return w;
}

Weight weyl_apply(const WeylElement& w, const Weight& lambda) {
    check_perm(w.delta_map, "delta");
    check_perm(w.eps_map, "eps");
    return Weight(apply_block(w.delta_map, lambda.delta), apply_block(w.eps_map, lambda.eps));
}

WeylElement longest_element(const RootDatum& datum) {
    switch (datum.family) {
        case Family::PE:
        case Family::Q:
            return WeylElement::eps_reversal(datum.eps_rank);
        case Family::GL: {
            WeylElement w;
            for (int i = datum.delta_rank; i >= 1; --i) w.delta_map.push_back(i);
            for (int i = datum.eps_rank; i >= 1; --i) w.eps_map.push_back(i);
            return w;
        }
        default:
            throw std::invalid_argument(
                "longest_element: implemented for the permutation-type Weyl groups only");
    }
}

bool is_antidominant(const RootDatum& datum, const Weight& lambda) {
    for (const Root& alpha : datum.roots) {
        if (alpha.is_odd()) continue;
        Rat v = coroot_pairing(datum, lambda, alpha);
        if (v.denominator() != 1)
            throw std::invalid_argument("is_antidominant: non-integral pairing " + rat_str(v) +
                                        " against an even root");
    }
    for (const Root& alpha : datum.even_simple) {
        Rat v = coroot_pairing(datum, lambda, alpha);
        if (v.numerator() >= 0) return false;  // N includes 0
    }
    return true;
}

Weight odd_reflection(const Weight& lambda, const Root& gamma, const RootDatum& datum) {
    if (!gamma.is_odd()) throw std::invalid_argument("odd_reflection: gamma must be odd");
    if (pairing(datum, gamma.weight, gamma.weight) != 0)
        throw std::invalid_argument("odd_reflection: gamma must be isotropic");
    if (pairing(datum, lambda, gamma.weight) == 0) return lambda;
    return lambda - gamma.weight;
}

}  // namespace pek
