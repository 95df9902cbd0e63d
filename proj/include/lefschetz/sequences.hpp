#pragma once

#include <utility>
#include <vector>

namespace lefschetz {

using HilbertVector = std::vector<long long>;

bool is_symmetric(const HilbertVector& h);
bool is_unimodal(const HilbertVector& h);

// Macaulay's s-th binomial expansion of m: the unique decreasing sequence
// m = C(m_s, s) + C(m_{s-1}, s-1) + ... + C(m_i, i). Returned as (m_j, j)
// pairs, largest j first. m must be >= 1.
std::vector<std::pair<long long, int>> sth_expansion(long long m, int s);

// m^<s> = C(m_s + 1, s + 1) + C(m_{s-1} + 1, s) + ...
long long m_bracket(long long m, int s);

// h_0 = 1 and h_{i+1} <= h_i^<i> for every i >= 1 (h_1 is unconstrained).
bool is_O_sequence(const HilbertVector& h);

// symmetric, unimodal, and the first difference up to t = min{i : h_i >=
// h_{i+1}} is an O-sequence.
bool is_SI_sequence(const HilbertVector& h);

// values[i] = hT[i] + hT[t+1-i] for 0 <= i <= t+1, out-of-range terms zero.
// hT must have length t+1.
HilbertVector stanley_doubling(const HilbertVector& hT, int t);

}  // namespace lefschetz
