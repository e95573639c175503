#pragma once

#include <cstddef>

#include <json.hpp>

#include "matsuo/scalar.hpp"

// Reproducible verification campaigns over the named space families. Every
// runner returns a deterministic report: same inputs, same bytes, except for
// the "timestamp" field. Reports carry "schema": "matsuo-lab/1", a "verdict"
// of pass, fail or partial, and per-check expected/computed pairs so a
// mismatch is machine-readable without rerunning.
namespace matsuo {
namespace cases {

// Closed forms for the eigenvalues met along the nested chain of pair
// subspaces inside a doubled pair space, as functions of the step index.
template <class K>
K chain_eta(int i, const K& a) {
    return a * K(i + 1) / (K(2) + K(2) * a * K(i - 1));
}

template <class K>
K chain_etahat(int i, const K& a) {
    return a * K(i) / (K(1) + a * K(i - 1));
}

// Central charge of the coset element id_i - id_{i-1} of the chain.
template <class K>
K chain_step_cc(int i, const K& a, const K& c) {
    return c / K(2) * K(i) * (K(2) + a * K(i - 3)) /
           ((K(1) + a * K(i - 1)) * (K(1) + a * K(i - 2)));
}

// Central charge of the coset element lifting the single copy to the doubled
// copy at level i. The denominators carry the index i-1; the variant with
// i+1 in both denominators is reported alongside for reference because it
// circulates in print, and it disagrees with the computed value.
template <class K>
K chain_lift_cc(int i, const K& a, const K& c) {
    return c / K(2) * K(i) * K(i + 1) /
           ((K(1) + K(2) * a * K(i - 1)) * (K(1) + a * K(i - 1)));
}

template <class K>
K chain_lift_cc_index_shifted(int i, const K& a, const K& c) {
    return c / K(2) * K(i) * K(i + 1) /
           ((K(1) + K(2) * a * K(i + 1)) * (K(1) + a * K(i + 1)));
}

// Closed forms for the two non-trivial eigenvalues of the level-i parabolic
// identity in a doubled space; the _odd value spans the sign-flip part.
template <class K>
K double_eta(int i, const K& a) {
    return a * K(i) / (K(1) + K(2) * a * K(i - 2));
}

template <class K>
K double_eta_odd(int i, const K& a) {
    return a * K(i - 1) / (K(1) + K(2) * a * K(i - 2));
}

// Adjacency spectra of the complete graphs and of the pair and doubled
// families against their closed-form integer eigenvalue tables, plus the
// constant boundary degree of each maximal pair subspace.
nlohmann::ordered_json run_spectra_tables(int max_complete, int max_pair, int max_doubled);

// Nested chain analysis inside the doubled pair space on n+1 letters:
// parabolic identities, coset spectra against the closed forms above,
// central charges, and eigenspace nesting. Needs n >= 5.
nlohmann::ordered_json run_an_chain(int n, const Scalar& alpha, const Rat& charge);

// Level-by-level analysis of the doubled space on m letters: parabolic
// identity eigendecompositions, fusion against the graded table, the induced
// sign-flip involutions, and their pairwise signature comparison. Needs
// m >= 5.
nlohmann::ordered_json run_dn_involutions(int m, const Scalar& alpha);

struct VregPlan {
    int max_pair = 6;    // pair spaces up to this index
    int max_doubled = 6; // doubled spaces up to this index
    int max_affine = 4;  // ternary affine spaces up to this dimension
    int max_weyl = 3;    // affine pair-reflection spaces up to this rank
    bool include_e6 = false;
};

// Very-regularity sweep over maximal pairs of connected closed subspaces of
// each planned space. cap bounds the subspace enumeration per space; hitting
// it marks the space as skipped and the verdict as partial, not failed.
nlohmann::ordered_json run_vreg_campaign(const VregPlan& plan, std::size_t cap);

} // namespace cases
} // namespace matsuo
