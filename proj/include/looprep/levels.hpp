#pragma once

#include "looprep/lattices.hpp"

#include <string>
#include <vector>

namespace looprep {

struct LevelRecord {
    SimpleType group;
    std::string subgroup;
    std::string quotient; // "SO7", "PSO8", ... when conventionally named
    int fundamental = 0;  // always 1 or 2
    long long basic = 0;
};

// Least level in {1,2} admitting a compatible commutator map.
int fundamental_level(const RootSystem& rs, const CentralSubgroup& z);

// Least ell making ell<.,.> integral on Lambda_Z.
long long basic_level(const RootSystem& rs, const CentralSubgroup& z);

// Whether the reparametrization action descends to Diff(S^1) at this
// level: ell<x,x> must be even across Lambda_Z. Requires basic | ell.
bool diff_action_descends(const RootSystem& rs, const CentralSubgroup& z, long long level);

// One row per (group, non-trivial subgroup) with rank <= max_rank.
std::vector<LevelRecord> levels_table(int max_rank);

std::string quotient_name(const RootSystem& rs, const CentralSubgroup& z);

} // namespace looprep
