#include "pek/characters.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pek {

namespace {

Rat pe_dot(const Weight& a, const Weight& b) {
    Rat acc(0);
    for (size_t i = 0; i < a.eps.size(); ++i) acc += a.eps[i] * b.eps[i];
    return acc;
}

void check_system(const FormalCharacter& a, const FormalCharacter& b) {
    if (a.n != b.n || !(a.positive_system == b.positive_system))
        throw std::invalid_argument("characters: positive-system mismatch");
}

}  // namespace

FormalCharacter FormalCharacter::monomial(const ParityWeight& base, long long depth,
                                          const Bipartition& system, int n) {
    FormalCharacter c;
    c.base = base;
    c.depth = depth;
    c.positive_system = system;
    c.n = n;
    c.terms[{0, base.weight, base.parity & 1}] = 1;
    return c;
}

long long FormalCharacter::coefficient(const Weight& w, int parity) const {
    long long acc = 0;
    for (const auto& [t, c] : terms)
        if (t.weight == w && t.parity == parity) acc += c;
    return acc;
}

long long FormalCharacter::coefficient_sum() const {
    long long acc = 0;
    for (const auto& [t, c] : terms) acc += c;
    return acc;
}

FormalCharacter FormalCharacter::truncated(long long new_depth) const {
    FormalCharacter out = *this;
    out.depth = std::min(depth, new_depth);
    std::erase_if(out.terms, [&](const auto& e) { return e.first.height > out.depth; });
    return out;
}

std::map<std::pair<Weight, int>, long long> FormalCharacter::collapsed() const {
    std::map<std::pair<Weight, int>, long long> out;
    for (const auto& [t, c] : terms) out[{t.weight, t.parity}] += c;
    return out;
}

FormalCharacter char_add(const FormalCharacter& a, const FormalCharacter& b) {
    check_system(a, b);
    FormalCharacter out = a.truncated(std::min(a.depth, b.depth));
    for (const auto& [t, c] : b.terms) {
        if (t.height > out.depth) continue;
        auto& slot = out.terms[t];
        slot += c;
        if (slot == 0) out.terms.erase(t);
    }
    return out;
}

FormalCharacter char_mult(const FormalCharacter& a, const FormalCharacter& b) {
    check_system(a, b);
    FormalCharacter out;
    out.base = {a.base.weight + b.base.weight, (a.base.parity + b.base.parity) & 1};
    out.depth = std::min(a.depth, b.depth);
    out.positive_system = a.positive_system;
    out.n = a.n;
    for (const auto& [ta, ca] : a.terms) {
        if (ta.height > out.depth) continue;
        for (const auto& [tb, cb] : b.terms) {
            long long h = ta.height + tb.height;
            if (h > out.depth) continue;
            CharTerm t{h, ta.weight + tb.weight, (ta.parity + tb.parity) & 1};
            auto& slot = out.terms[t];
            slot += ca * cb;
            if (slot == 0) out.terms.erase(t);
        }
    }
    return out;
}

namespace {

// 1 + e^{root} + e^{2 root} + ... for even roots, 1 + e^{root} for odd.
FormalCharacter pbw_factor(const Root& r, long long depth, const Bipartition& system, int n) {
    FormalCharacter f;
    f.base = {Weight::zero_pe(n), 0};
    f.depth = depth;
    f.positive_system = system;
    f.n = n;
    long long top = r.is_odd() ? std::min<long long>(1, depth) : depth;
    Weight acc = Weight::zero_pe(n);
    for (long long k = 0; k <= top; ++k) {
        f.terms[{k, acc, r.is_odd() ? (int)(k & 1) : 0}] = 1;
        acc += r.weight;
    }
    return f;
}

}  // namespace

FormalCharacter verma_character(const Bipartition& b, const ParityWeight& lambda,
                                long long depth, int n) {
    if (!is_brp00(b, n)) throw std::invalid_argument("verma_character: label not in BRP00_n");
    if (depth < 0) throw std::invalid_argument("verma_character: negative depth");
    FormalCharacter out = FormalCharacter::monomial(lambda, depth, b, n);
    for (const Root& r : decompose(zeta(b, n), n).uminus)
        out = char_mult(out, pbw_factor(r, depth, b, n));
    return out;
}

FormalCharacter even_verma_character(const ParityWeight& lambda, long long depth,
                                     const Bipartition& system, int n) {
    if (depth < 0) throw std::invalid_argument("even_verma_character: negative depth");
    FormalCharacter out = FormalCharacter::monomial(lambda, depth, system, n);
    for (const Root& r : pe_datum(n).roots)
        if (!r.is_odd()) {
            // negative even roots eps_j - eps_i, i < j
            Rat first;
            for (const Rat& c : r.weight.eps)
                if (c != 0) {
                    first = c;
                    break;
                }
            if (first < 0) out = char_mult(out, pbw_factor(r, depth, system, n));
        }
    return out;
}

FormalCharacter induced_character(const FormalCharacter& m, int n) {
    FormalCharacter out = m;
    Weight raising = Weight::zero_pe(n);
    Weight zb = zeta(m.positive_system, n);
    for (const Root& r : pe_datum(n).roots)
        if (r.is_odd()) {
            out = char_mult(out, pbw_factor(r, m.depth, m.positive_system, n));
            if (pe_dot(zb, r.weight) > 0) raising += r.weight;
        }
    out.base = {m.base.weight + raising, out.base.parity};
    return out;
}

std::vector<ParityWeight> delta_flag_labels(const Bipartition& b, const Weight& lambda, int n) {
    std::vector<Root> odd = borel_odd_roots(b, n);
    if (odd.size() > 20)
        throw std::invalid_argument("delta_flag_labels: rank too large to enumerate subsets");
    std::vector<ParityWeight> out;
    for (size_t mask = 0; mask < (size_t(1) << odd.size()); ++mask) {
        Weight w = lambda;
        int par = 0;
        for (size_t i = 0; i < odd.size(); ++i)
            if (mask >> i & 1) {
                w += odd[i].weight;
                par ^= 1;
            }
        out.push_back({w, par});
    }
    std::sort(out.begin(), out.end());
    return out;
}

FlagCheck verify_flag_identity(const Bipartition& b, const Weight& lambda, long long depth,
                               int n) {
    if (!is_brp00(b, n))
        throw std::invalid_argument("verify_flag_identity: label not in BRP00_n");
    long long odd_count = (long long)n * n;

    // Left side: induce the even Verma.  The even series is exact for all
    // terms within functional drop <= depth; the odd product is finite.
    FormalCharacter lhs = induced_character(
        even_verma_character({lambda, 0}, depth + odd_count, b, n), n);

    // Right side: one Verma per subset of the odd Borel roots.
    FormalCharacter rhs;
    bool first = true;
    for (const ParityWeight& label : delta_flag_labels(b, lambda, n)) {
        FormalCharacter v = verma_character(b, label, depth + odd_count, n);
        rhs = first ? v : char_add(rhs, v);
        first = false;
    }

    // Exact comparison slice: every product step drops the pairing against
    // zeta_b by at least 1, so coefficients of terms with
    // (zeta_b, top - nu) <= depth are complete on both sides.
    Weight zb = zeta(b, n);
    Weight top = lambda;
    std::vector<Root> bodd = borel_odd_roots(b, n);
    if (!bodd.empty()) top += odd_sum(bodd);
    auto slice = [&](const FormalCharacter& c) {
        std::map<std::pair<Weight, int>, long long> out;
        for (const auto& [t, coeff] : c.terms) {
            Rat drop = pe_dot(zb, top - t.weight);
            if (drop.denominator() == 1 && drop.numerator() >= 0 && drop.numerator() <= depth)
                out[{t.weight, t.parity}] += coeff;
        }
        return out;
    };

    auto l = slice(lhs), r = slice(rhs);
    FlagCheck res;
    if (l == r) return res;
    res.ok = false;
    std::ostringstream os;
    int shown = 0;
    for (const auto& [k, c] : l) {
        auto it = r.find(k);
        long long rc = it == r.end() ? 0 : it->second;
        if (rc != c && shown < 5) {
            os << "coeff mismatch (lhs " << c << ", rhs " << rc << "); ";
            ++shown;
        }
    }
    for (const auto& [k, c] : r)
        if (!l.count(k) && shown < 5) {
            os << "term only on rhs (coeff " << c << "); ";
            ++shown;
        }
    res.diff = os.str();
    return res;
}

}  // namespace pek
