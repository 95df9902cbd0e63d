#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/form.hpp"
#include "lefschetz/hessians.hpp"
#include "lefschetz/sequences.hpp"

namespace lefschetz {

enum class VerdictStatus { Holds, Fails, Inconclusive };
std::string verdict_status_name(VerdictStatus s);

struct WlpVerdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::optional<Form> witness;          // Holds: an explicit Lefschetz element
    std::string certificate;              // Fails: which criterion fired
    std::optional<unsigned> hessian_k;    // Fails via a vanishing Hessian
    std::optional<VanishingVerdict> hessian_verdict;
    int trials = 0;
};

struct SlpVerdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::optional<std::vector<Rational>> witness_point;
    std::optional<unsigned> failing_k;
    std::vector<std::pair<unsigned, VanishingVerdict>> verdicts;
};

struct LefschetzReport {
    HilbertVector h;
    WlpVerdict wlp;
    SlpVerdict slp;
};

// Full scan: every multiplication x L : A_i -> A_{i+1} has full rank.
bool is_weak_lefschetz_element_full(const Form& f, const Form& L);

// Pivotal-degree shortcut: with the strictly-increasing / flat / strictly-
// decreasing profile, only the middle map needs checking. Falls back to the
// full scan when the profile does not apply.
bool is_weak_lefschetz_element(const Form& f, const Form& L);

// Random trials give an exact Holds witness; Fails needs a certificate
// (non-SI h-vector, structural zero block, or a vanishing middle Hessian);
// otherwise Inconclusive.
WlpVerdict wlp_verdict(const Form& f, int trials = 5, uint64_t seed = 1);

// SLP holds iff every k-th Hessian is nonzero, k = 1..floor(d/2).
SlpVerdict slp_verdict(const Form& f, uint64_t seed = 1);

// Perazzo shape only: the monomial basis of A_k has z elements of positive
// x-degree whose pairwise products annihilate f; 2z > h_k forces the k-th
// Hessian determinant to vanish.
bool structural_zero_block(const Form& f, unsigned k);

LefschetzReport lefschetz_report(const Form& f, int trials = 5, uint64_t seed = 1);

}  // namespace lefschetz
