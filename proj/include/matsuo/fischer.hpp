#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "matsuo/groups.hpp"

namespace matsuo {
namespace spaces {

// Partial linear space with all lines of size 3, stored as a wedge table:
// wedge(i,j) is the third point of the line through i and j, or -1 when i,j
// are not collinear. Optional point labels carry the generating involutions.
class FischerSpace {
    int n_ = 0;
    Eigen::MatrixXi wedge_;
    std::vector<std::array<int, 3>> lines_;
    std::vector<GroupElement> labels_;

    FischerSpace() = default;

public:
    // Checks the triple consistency of the table (wedge(i,j)=k forces
    // wedge(i,k)=j and wedge(j,k)=i) but not the two-line closure axiom; see
    // validate().
    static FischerSpace from_wedge(Eigen::MatrixXi wedge, std::vector<GroupElement> labels = {});

    int points() const { return n_; }
    bool collinear(int i, int j) const { return wedge_(i, j) >= 0; }
    int wedge(int i, int j) const { return wedge_(i, j); }
    const Eigen::MatrixXi& wedge_table() const { return wedge_; }
    const std::vector<std::array<int, 3>>& lines() const { return lines_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<GroupElement>& labels() const { return labels_; }

    int degree(int i) const {
        int d = 0;
        for (int j = 0; j < n_; ++j)
            if (wedge_(i, j) >= 0) ++d;
        return d;
    }
    std::vector<int> neighbors(int i) const {
        std::vector<int> r;
        for (int j = 0; j < n_; ++j)
            if (wedge_(i, j) >= 0) r.push_back(j);
        return r;
    }
};

enum class Family { A, D, E6, E7, E8, Affine3, W3AffineA };

inline constexpr std::size_t kDefaultSizeCap = 10000;

FischerSpace build_named(Family f, int n, std::size_t cap = kDefaultSizeCap);
FischerSpace build_from_involutions(const std::vector<GroupElement>& generators,
                                    std::size_t cap = kDefaultSizeCap);

Eigen::MatrixXi complete_graph(int n);
Eigen::MatrixXi adjacency(const FischerSpace& g);

// Indices of the pairs drawn from the first sub letters, in the lex order
// the pair-space builder uses over letters_total letters. These are the
// closed letter-block subspaces of the pair families.
std::vector<int> letter_block_pairs(int letters_total, int sub);

// Throws Not3Transposition when some pair of intersecting lines fails to
// close into the 6-point or 9-point plane.
void validate(const FischerSpace& g);

std::vector<std::vector<int>> components(const FischerSpace& g);
bool is_connected(const FischerSpace& g);
std::optional<int> regularity(const FischerSpace& g);

std::vector<int> subspace_closure(const FischerSpace& g, const std::vector<int>& seed);
bool is_closed_subspace(const FischerSpace& g, const std::vector<int>& set);

// Restriction of the space to a closed subset, with points reindexed in the
// order given.
FischerSpace induced_subspace(const FischerSpace& g, const std::vector<int>& set);

// Doubled space: points split into a plus copy [0,n) and minus copy [n,2n);
// each base line {x,y,z} lifts to the four sign patterns with product rule.
FischerSpace double_graph(const FischerSpace& g);

struct BoundaryGraph {
    std::vector<int> points;      // ambient indices of the boundary, sorted
    Eigen::MatrixXi adjacency;    // lines through the subspace, between boundary points
    std::vector<int> degree_to_h; // |y~ /\ h| per boundary point
};

BoundaryGraph boundary_graph(const FischerSpace& g, const std::vector<int>& h);

struct RegularityVerdict {
    bool ambient_connected = false;
    bool subspace_connected = false;
    bool subspace_closed = false;
    bool proper = false;
    bool maximal = false;
    bool boundary_connected = false;
    std::optional<int> boundary_regular_degree; // degree within the boundary graph
    std::optional<int> degree_to_subspace;      // |y~ /\ h|, when constant

    bool very_regular() const {
        return ambient_connected && subspace_connected && subspace_closed && proper && maximal &&
               boundary_connected;
    }
};

RegularityVerdict is_very_regular(const FischerSpace& g, const std::vector<int>& h);

struct VregFailure {
    std::vector<int> subspace;
    std::vector<int> ambient; // the closed connected overspace it fails in
    std::string reason;
};

struct VregReport {
    int connected_closed_count = 0;
    int maximal_pairs_checked = 0;
    std::vector<VregFailure> failures;
};

// All connected closed subspaces as sorted point lists, ordered by size then
// lexicographically. Throws SizeLimitExceeded when more than cap exist.
std::vector<std::vector<int>> connected_closed_subspaces(const FischerSpace& g,
                                                         std::size_t cap = 100000);

// Enumerates all connected closed subspaces, finds the maximal-inclusion
// pairs, and checks very-regularity of each. Throws SizeLimitExceeded when
// the enumeration grows past cap.
VregReport check_hypothesis_vreg(const FischerSpace& g, std::size_t cap = 100000);

std::optional<std::vector<int>> isomorphic(const FischerSpace& a, const FischerSpace& b);
std::optional<std::vector<int>> graph_isomorphic(const Eigen::MatrixXi& a,
                                                 const Eigen::MatrixXi& b);

std::string to_text(const FischerSpace& g);
FischerSpace from_text(const std::string& text);
FischerSpace load_space_file(const std::string& path);

} // namespace spaces
} // namespace matsuo
