#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matsuo/matsuo_algebra.hpp"

namespace matsuo {
namespace axial {

template <class K>
struct Eigenspace {
    K value;
    MatX<K> basis; // columns
    int dim() const { return static_cast<int>(basis.cols()); }
};

// Eigenspaces are ordered 1 first, then 0, then the rest by canonical string,
// so reports built from a decomposition are deterministic.
template <class K>
struct Eigendecomposition {
    std::vector<Eigenspace<K>> spaces;
    int ambient_dim = 0;
    int total_dim = 0;
    bool diagonalisable = false;

    int index_of(const K& v) const {
        for (std::size_t i = 0; i < spaces.size(); ++i)
            if (spaces[i].value == v) return static_cast<int>(i);
        return -1;
    }
    std::vector<K> values() const {
        std::vector<K> r;
        r.reserve(spaces.size());
        for (const auto& s : spaces) r.push_back(s.value);
        return r;
    }
};

// Exact eigendecomposition of ad(e) over the rationals: integer charpoly of
// the denominator-cleared matrix, Gershgorin-bounded integer root scan, then
// one exact kernel per eigenvalue. Throws NotIdempotent when e*e != e and
// IncompleteSpectrum when the characteristic polynomial has an irrational
// factor.
Eigendecomposition<Rat> eigendecompose(const algebra::MatsuoAlgebra<Rat>& a, const VecX<Rat>& e);

// Eigendecomposition from a caller-supplied candidate eigenvalue list, for
// fields where root-finding is unavailable. Each candidate is settled by an
// exact kernel; a rational probe specialization prunes candidates whose
// shifted matrix is already full-rank there. Throws IncompleteSpectrum when
// the surviving eigenspaces do not span.
template <class K>
Eigendecomposition<K> eigendecompose_with_candidates(const algebra::MatsuoAlgebra<K>& a,
                                                     const VecX<K>& e,
                                                     const std::vector<K>& candidates);

enum class SignConvention { minus, plus };

// Candidate eigenvalues for the identity of the closed subset h: {1, 0} plus
// alpha*mu/(2 + alpha*k) where k is the component regularity and mu ranges
// over the integer spectrum of (degree diagonal -/+ boundary adjacency) of
// the component. Disconnected h contributes the sumset over its components.
// Throws DegenerateAlpha when a denominator vanishes or a boundary candidate
// collides with 1, IrrationalSpectrum when a boundary spectrum is irrational.
template <class K>
std::vector<K> id_spectrum_candidates(const algebra::MatsuoAlgebra<K>& a,
                                      const std::vector<int>& h, SignConvention sign);

template <class K>
struct ParabolicAxis {
    VecX<K> element;
    std::vector<K> candidates;
    SignConvention sign = SignConvention::minus;
    Eigendecomposition<K> decomposition;
};

// Identity of the parabolic on h, decomposed. Tries the minus sign
// convention first and falls back to plus, recording which one spans.
template <class K>
ParabolicAxis<K> decompose_parabolic(const algebra::MatsuoAlgebra<K>& a,
                                     const std::vector<int>& h);

// rule[i][j] lists the eigenvalue indices that products from eigenspaces i
// and j actually hit; symmetric, computed from one shared basis
// factorization.
template <class K>
struct FusionTable {
    std::vector<K> eigenvalues;
    std::vector<std::vector<std::vector<int>>> rule;
};

template <class K>
FusionTable<K> fusion_table(const algebra::MatsuoAlgebra<K>& a, const Eigendecomposition<K>& d);

struct SeressVerdict {
    bool seress = false;
    bool vacuous = false; // neither 1 nor 0 occurs, so the condition is empty
};

template <class K>
SeressVerdict is_seress(const FusionTable<K>& t);

// Direct associativity probe (ex)u = e(xu) for every point x and column u,
// with e and u in the outer positions.
template <class K>
bool associates_check(const algebra::MatsuoAlgebra<K>& a, const VecX<K>& e, const MatX<K>& s);

template <class K>
struct LinearIdempotent {
    VecX<K> element;
    std::vector<K> candidates;
    int depth = 0;
    std::string provenance;
    // positions of the parents e, f of a difference e - f; -1 for seeds
    int parent_e = -1;
    int parent_f = -1;
};

template <class K>
struct LinearIdempotentSet {
    std::vector<LinearIdempotent<K>> elements;
    bool truncated = false;
};

// Closure of l0 under e - f whenever multiply(e, f) = f, deduplicated by
// exact coordinates, up to depth_cap difference steps. Candidate eigenvalue
// sets propagate as sumset differences.
template <class K>
LinearIdempotentSet<K> linear_idempotents(const algebra::MatsuoAlgebra<K>& a,
                                          std::vector<LinearIdempotent<K>> l0, int depth_cap);

// Two-coloring of the eigenvalues making the fusion rule Z/2-graded with a
// nonempty odd part: even*even and odd*odd land in even, even*odd in odd,
// and 1 is even. Among valid colorings the largest odd part wins (ties to
// the lexicographically first). nullopt when only the trivial all-even
// coloring works.
template <class K>
std::optional<std::pair<std::vector<int>, std::vector<int>>>
grading_partition(const FusionTable<K>& t);

// Linear map acting as +1 on the even eigenspaces and -1 on the odd ones,
// verified multiplicative on all basis pairs. Throws NotAnAutomorphism.
template <class K>
MatX<K> miyamoto(const algebra::MatsuoAlgebra<K>& a, const Eigendecomposition<K>& d,
                 const std::vector<int>& odd_indices);

// Point-axis involution as a permutation matrix: collinear y maps to x^y,
// everything else is fixed.
template <class K>
MatX<K> point_miyamoto(const algebra::MatsuoAlgebra<K>& a, int x);

struct InvolutionSignature {
    bool permutation = false;     // acts as a permutation of the point basis
    int moved_points = 0;
    int neg_dim = 0;              // dimension of the -1-eigenspace
    int moved_pairs_collinear = 0;
    int moved_pairs_noncollinear = 0;
};

// Throws NotInvolution unless t*t = 1.
template <class K>
InvolutionSignature involution_signature(const algebra::MatsuoAlgebra<K>& a, const MatX<K>& t);

} // namespace axial
} // namespace matsuo
