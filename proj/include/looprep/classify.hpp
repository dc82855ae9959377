#pragma once

#include "looprep/alcove.hpp"
#include "looprep/forms.hpp"

namespace looprep {

// One irreducible positive-energy class of L_Z G: a compatible commutator
// map together with an alcove orbit, plus the derived invariants.
struct PERClass {
    std::size_t omega_index = 0; // position in enumerate_admissible output
    CommutatorMap omega;
    Orbit orbit;
    int multiplicity = 1;
    std::vector<IVec> characters; // reduced weight classes mod (Lambda_Z)*
    bool factors_through_quotient = false;
};

std::vector<PERClass> classify_lzg(const RootSystem& rs, const CentralSubgroup& z,
                                   long long level);

// The classes whose level is a multiple of the basic level, i.e. those
// descending to L(G/Z).
std::vector<PERClass> classify_quotient(const RootSystem& rs, const CentralSubgroup& z,
                                        long long level);

// Central characters of a class: the classes of lambda + level*lambda_i^vee
// modulo the dual lattice of Lambda_Z, as reduced Dynkin-label vectors.
std::vector<IVec> characters_of_center(const RootSystem& rs, const CentralSubgroup& z,
                                       long long level, const AlcoveWeight& canonical);

bool factors_through_quotient(const RootSystem& rs, const CentralSubgroup& z, long long level);

// Number of central extensions of L(G/Z) pulling back to level ell.
long long extension_count_quotient(const RootSystem& rs, const CentralSubgroup& z,
                                   long long level);

// For even-rank D with full center: fixed orbits occur only at even level,
// and their multiplicity is 1 for the trivial induced center form and 2
// for the non-trivial one.
bool mackey_consistency(const RootSystem& rs, const CentralSubgroup& z, long long level);

} // namespace looprep
