#include "lefschetz/sequences.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

bool is_symmetric(const HilbertVector& h) {
    const size_t n = h.size();
    for (size_t i = 0; i < n / 2; ++i)
        if (h[i] != h[n - 1 - i]) return false;
    return true;
}

bool is_unimodal(const HilbertVector& h) {
    size_t i = 1;
    while (i < h.size() && h[i - 1] <= h[i]) ++i;
    while (i < h.size() && h[i - 1] >= h[i]) ++i;
    return i >= h.size();
}

namespace {

long long binom_ll(long long n, int k) {
    if (n < k) return 0;
    Integer b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b.get_si();
}

}  // namespace

std::vector<std::pair<long long, int>> sth_expansion(long long m, int s) {
    if (m < 1 || s < 1) throw InvalidInput("s-th expansion needs m >= 1 and s >= 1");
    std::vector<std::pair<long long, int>> out;
    long long rest = m;
    int j = s;
    while (rest > 0 && j >= 1) {
        long long mj = j;  // smallest value with C(mj, j) >= 1
        while (binom_ll(mj + 1, j) <= rest) ++mj;
        out.emplace_back(mj, j);
        rest -= binom_ll(mj, j);
        --j;
    }
    if (rest != 0) throw InvalidInput("no binomial expansion");
    return out;
}

long long m_bracket(long long m, int s) {
    long long total = 0;
    for (const auto& [mj, j] : sth_expansion(m, s)) total += binom_ll(mj + 1, j + 1);
    return total;
}

bool is_O_sequence(const HilbertVector& h) {
    if (h.empty() || h[0] != 1) return false;
    for (size_t i = 1; i + 1 < h.size(); ++i) {
        if (h[i] < 0 || h[i + 1] < 0) return false;
        if (h[i] == 0) {
            if (h[i + 1] != 0) return false;
            continue;
        }
        if (h[i + 1] > m_bracket(h[i], static_cast<int>(i))) return false;
    }
    return true;
}

bool is_SI_sequence(const HilbertVector& h) {
    if (h.empty() || !is_symmetric(h) || !is_unimodal(h)) return false;
    size_t t = h.size() - 1;
    for (size_t i = 0; i + 1 < h.size(); ++i)
        if (h[i] >= h[i + 1]) {
            t = i;
            break;
        }
    HilbertVector diff;
    diff.push_back(h[0]);
    for (size_t i = 1; i <= t; ++i) diff.push_back(h[i] - h[i - 1]);
    return is_O_sequence(diff);
}

HilbertVector stanley_doubling(const HilbertVector& hT, int t) {
    if (static_cast<long long>(hT.size()) != static_cast<long long>(t) + 1)
        throw LengthMismatch("expected a vector of length t+1");
    HilbertVector out(static_cast<size_t>(t) + 2, 0);
    for (int i = 0; i <= t + 1; ++i) {
        long long v = 0;
        if (i <= t) v += hT[static_cast<size_t>(i)];
        const int j = t + 1 - i;
        if (j >= 0 && j <= t) v += hT[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = v;
    }
    return out;
}

}  // namespace lefschetz
