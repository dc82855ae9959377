#pragma once

#include "looprep/lattices.hpp"

#include <compare>

namespace looprep {

// Dynkin diagram extended by the affine node alpha_0 = -theta.
struct ExtendedDiagram {
    Mat nodes;    // rows alpha_0..alpha_n (ambient coordinates)
    IMat pairing; // <alpha_i, alpha_j^vee> over all node pairs
    Vec node_len2;

    std::size_t node_count() const { return nodes.size(); }
    // bond multiplicity <alpha_i,alpha_j^vee><alpha_j,alpha_i^vee>
    long long bond(std::size_t i, std::size_t j) const { return pairing[i][j] * pairing[j][i]; }
};

struct WeylElement {
    Mat matrix; // exact orthogonal map in ambient coordinates
    std::vector<std::size_t> node_permutation; // image node of alpha_0..alpha_n
};

struct AlcoveWeight {
    IVec labels;     // n_i = <lambda, alpha_i^vee>, all >= 0
    long long level; // sum n_i comark_i <= level

    auto operator<=>(const AlcoveWeight&) const = default;
};

struct Orbit {
    std::vector<AlcoveWeight> members; // lexicographically sorted
    CentralSubgroup stabilizer;

    const AlcoveWeight& canonical() const { return members.front(); }
};

ExtendedDiagram extended_diagram(const RootSystem& rs);

// The unique Weyl element preserving the extended diagram with
// w alpha_0 = alpha_i, for the special root attached to z; identity for z = 1.
WeylElement weyl_element(const RootSystem& rs, const CentralElement& z);

std::vector<AlcoveWeight> alcove(const RootSystem& rs, long long level);

bool in_alcove(const RootSystem& rs, const AlcoveWeight& w);
long long height(const RootSystem& rs, const IVec& labels); // <lambda, theta>
IVec affine_labels(const RootSystem& rs, const AlcoveWeight& w); // (n_0, n_1..n_n)

// lambda -> level*lambda_i^vee + w_i(lambda), in Dynkin labels.
AlcoveWeight act(const RootSystem& rs, const CentralElement& z, long long level,
                 const AlcoveWeight& w);

// Same action evaluated through the closed coordinate formulas available
// for the classical families; an independent route used to check act.
// Throws DomainError for families E, F, G.
AlcoveWeight act_classical(const RootSystem& rs, const CentralElement& z, long long level,
                           const AlcoveWeight& w);

std::vector<Orbit> orbits(const RootSystem& rs, const CentralSubgroup& z, long long level);

} // namespace looprep
