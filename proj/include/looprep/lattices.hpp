#pragma once

#include "looprep/rootsys.hpp"

#include <string>
#include <vector>

namespace looprep {

// An element of Z(G) = P^vee/Q^vee, held as its minimal dominant coweight:
// the zero vector or the fundamental coweight of a special root.
struct CentralElement {
    int special_index = 0; // 0 = identity, else 1-based simple root index
    Vec rep;               // ambient coordinates of the representative

    bool operator==(const CentralElement& o) const { return special_index == o.special_index; }
};

struct CentralSubgroup {
    std::string name; // "triv", "full", "k<d>", or "v"/"s"/"c" for even D
    std::vector<CentralElement> elements; // identity first, deterministic order
    std::vector<std::size_t> generators;  // indices into elements
    std::vector<std::vector<std::size_t>> product; // product[i][j] = index of z_i z_j
    std::vector<long long> element_orders;

    std::size_t size() const { return elements.size(); }
    std::size_t inverse(std::size_t i) const;
    std::size_t power(std::size_t i, long long k) const;
    bool is_cyclic() const;
    bool same_elements(const CentralSubgroup& o) const;
};

struct Lattice {
    Mat basis; // rows, canonical (Hermite) form
    std::size_t ambient = 0;

    std::size_t lattice_rank() const { return basis.size(); }
};

// Canonical lattice from a rational generating set (rows).
Lattice make_lattice(const Mat& generator_rows, std::size_t ambient);
bool lattice_contains(const Lattice& l, const Vec& v);
// index [super : sub]; throws if sub is not a finite-index sublattice
long long lattice_index(const Lattice& sub, const Lattice& super);
Mat lattice_gram(const RootSystem& rs, const Lattice& l);

CentralSubgroup center(const RootSystem& rs);
std::vector<CentralSubgroup> subgroups(const RootSystem& rs);
const CentralSubgroup& find_subgroup(const std::vector<CentralSubgroup>& subs,
                                     const std::string& name);

// Indices i with mark m_i = 1; these fundamental coweights are exactly the
// non-identity element representatives.
std::vector<int> special_coweight_indices(const RootSystem& rs);

// Dominant representative of the minimal-length Weyl orbit in mu + Q^vee.
// Accepts any vector pairing integrally with the roots; components
// orthogonal to the root span are projected away.
Vec minimal_representative(const RootSystem& rs, const Vec& mu);

Lattice coroot_lattice(const RootSystem& rs);
Lattice coweight_lattice(const RootSystem& rs);
Lattice lattice_for(const RootSystem& rs, const CentralSubgroup& z);
Lattice dual_lattice(const RootSystem& rs, const Lattice& l);

long long largest_cyclic_order(const CentralSubgroup& z);

} // namespace looprep
