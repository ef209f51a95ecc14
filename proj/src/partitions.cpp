#include "pek/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pek {

void validate_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
        if (i + 1 < p.size() && p[i] < p[i + 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
}

Partition merge(const Partition& mu, const Partition& nu) {
    Partition out = mu;
    out.insert(out.end(), nu.begin(), nu.end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

bool is_two_restricted(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        int next = (i + 1 < p.size()) ? p[i + 1] : 0;
        int step = p[i] - next;
        if (step < 0 || step > 1) return false;
    }
    return true;
}

Partition staircase(int n) {
    Partition p;
    for (int k = n; k >= 1; --k) p.push_back(k);
    return p;
}

bool canonical_less(const Partition& a, const Partition& b) {
    size_t k = std::min(a.size(), b.size());
    for (size_t i = 0; i < k; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return a.size() > b.size();  // longer first on prefix tie
}

bool canonical_less(const Bipartition& a, const Bipartition& b) {
    if (a.mu != b.mu) return canonical_less(a.mu, b.mu);
    return canonical_less(a.nu, b.nu);
}

BipartitionClasses classify_bipartition(const Bipartition& x, int n) {
    validate_partition(x.mu);
    validate_partition(x.nu);
    BipartitionClasses c;
    Partition k = merge(x.mu, x.nu);
    if (!is_two_restricted(k) || (int)k.size() > n) return c;
    c.brp = true;
    bool common = false;
    for (int a : x.mu)
        for (int b : x.nu)
            if (a == b) common = true;
    if (!common && (int)k.size() == n) {
        c.brp0 = true;
        c.brp00 = (k == staircase(n));
    }
    return c;
}

std::vector<Partition> enumerate_rp0(int r) {
    // Built from the bottom part up: kappa_r = 1 and each step up is 0 or 1.
    std::vector<Partition> out;
    if (r <= 0) return out;
    std::vector<int> rev(r, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            Partition p(rev.rbegin(), rev.rend());
            out.push_back(p);
            return;
        }
        for (int step : {0, 1}) {
            rev[i] = (i == 0) ? 1 : rev[i - 1] + step;
            rec(i + 1);
            if (i == 0) break;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return canonical_less(a, b); });
    return out;
}

namespace {

std::vector<Partition> enumerate_rp_upto(int n) {
    std::vector<Partition> out = {{}};
    for (int r = 1; r <= n; ++r) {
        auto v = enumerate_rp0(r);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// All (mu, nu) with mu * nu = kappa: one choice per maximal run of equal
// parts, how many of its copies go to mu.
void splittings(const Partition& kappa, std::vector<Bipartition>& out) {
    std::vector<std::pair<int, int>> runs;  // (value, count)
    for (int v : kappa) {
        if (!runs.empty() && runs.back().first == v)
            ++runs.back().second;
        else
            runs.push_back({v, 1});
    }
    std::vector<int> take(runs.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == runs.size()) {
            Bipartition x;
            for (size_t k = 0; k < runs.size(); ++k) {
                for (int c = 0; c < take[k]; ++c) x.mu.push_back(runs[k].first);
                for (int c = take[k]; c < runs[k].second; ++c) x.nu.push_back(runs[k].first);
            }
            out.push_back(std::move(x));
            return;
        }
        for (take[i] = 0; take[i] <= runs[i].second; ++take[i]) rec(i + 1);
        take[i] = 0;
    };
    rec(0);
}

}  // namespace

std::vector<Bipartition> enumerate_bipartitions(int n, BrpClass cls) {
    if (n < 1) throw std::invalid_argument("enumerate_bipartitions: n must be >= 1");
    std::vector<Partition> kappas;
    switch (cls) {
        case BrpClass::BRP: kappas = enumerate_rp_upto(n); break;
        case BrpClass::BRP0: kappas = enumerate_rp0(n); break;
        case BrpClass::BRP00: kappas = {staircase(n)}; break;
    }
    std::vector<Bipartition> out;
    for (const Partition& k : kappas) {
        std::vector<Bipartition> all;
        splittings(k, all);
        for (auto& x : all) {
            if (cls != BrpClass::BRP) {
                // splitting a run between mu and nu creates a common part
                bool common = false;
                for (int a : x.mu)
                    for (int b : x.nu)
                        if (a == b) common = true;
                if (common) continue;
            }
            out.push_back(std::move(x));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Bipartition& a, const Bipartition& b) { return canonical_less(a, b); });
    return out;
}

void validate_sign_form(const SignForm& s) {
    validate_partition(s.kappa);
    if (s.kappa.size() != s.f.size())
        throw std::invalid_argument("sign form: kappa and f length mismatch");
    if (!is_two_restricted(s.kappa))
        throw std::invalid_argument("sign form: kappa must be 2-restricted");
    for (char c : s.f)
        if (c != '+' && c != '-') throw std::invalid_argument("sign form: f must be over {+,-}");
    for (size_t i = 0; i + 1 < s.kappa.size(); ++i)
        if (s.kappa[i] == s.kappa[i + 1] && s.f[i] != s.f[i + 1])
            throw std::invalid_argument("sign form: f must be constant on equal parts");
}

SignForm to_sign_form(const Bipartition& x, int n) {
    if (!classify_bipartition(x, n).brp0)
        throw std::invalid_argument("to_sign_form: bipartition not in BRP0_n");
    SignForm s;
    s.kappa = merge(x.mu, x.nu);
    for (int part : s.kappa) {
        bool in_mu = std::find(x.mu.begin(), x.mu.end(), part) != x.mu.end();
        s.f.push_back(in_mu ? '+' : '-');
    }
    return s;
}

Bipartition from_sign_form(const SignForm& s) {
    validate_sign_form(s);
    Bipartition x;
    for (size_t i = 0; i < s.kappa.size(); ++i)
        (s.f[i] == '+' ? x.mu : x.nu).push_back(s.kappa[i]);
    return x;
}

bool brp_leq(const SignForm& a, const SignForm& b) {
    validate_sign_form(a);
    validate_sign_form(b);
    if (a.kappa.size() != b.kappa.size())
        throw std::invalid_argument("brp_leq: sign forms of different length");
    size_t n = a.kappa.size();
    int prev = -1;
    for (size_t i = 0; i < n; ++i) {
        int d = a.kappa[i] - b.kappa[i];
        if (d < 0) return false;
        if (prev >= 0 && d > prev) return false;  // difference must weakly decrease
        prev = d;
    }
    for (size_t i = 0; i + 1 < n; ++i)
        if (a.f[i] != b.f[i]) return false;
    return !(a.f[n - 1] == '+' && b.f[n - 1] == '-');
}

Bipartition dual(const Bipartition& x) { return {x.nu, x.mu}; }

std::string bipartition_label(const Bipartition& x) {
    auto fmt = [](const Partition& p) {
        std::string s;
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(p[i]);
        }
        return s;
    };
    return "(" + fmt(x.mu) + "|" + fmt(x.nu) + ")";
}

}  // namespace pek
