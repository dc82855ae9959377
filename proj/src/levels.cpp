#include "looprep/levels.hpp"

#include "looprep/errors.hpp"
#include "looprep/forms.hpp"

#include <stdexcept>

namespace looprep {

int fundamental_level(const RootSystem& rs, const CentralSubgroup& z) {
    return enumerate_admissible(rs, z, 1).empty() ? 2 : 1;
}

long long basic_level(const RootSystem& rs, const CentralSubgroup& z) {
    return lcm_of_denominators(lattice_gram(rs, lattice_for(rs, z)));
}

bool diff_action_descends(const RootSystem& rs, const CentralSubgroup& z, long long level) {
    if (level % basic_level(rs, z) != 0)
        throw DomainError("level must be a multiple of the basic level");
    Lattice l = lattice_for(rs, z);
    Mat probes = l.basis;
    for (std::size_t i = 0; i < l.basis.size(); ++i)
        for (std::size_t j = i + 1; j < l.basis.size(); ++j)
            probes.push_back(add(l.basis[i], l.basis[j]));
    for (const Vec& x : probes)
        if (!is_even_integer(Rat(level) * inner(rs, x, x))) return false;
    return true;
}

std::string quotient_name(const RootSystem& rs, const CentralSubgroup& z) {
    const int n = rs.type.rank;
    if (rs.type.family == Family::B && z.size() == 2) return "SO" + std::to_string(2 * n + 1);
    if (rs.type.family == Family::D) {
        const bool even = n % 2 == 0;
        if (even && z.name == "v") return "SO" + std::to_string(2 * n);
        if (!even && z.name == "k2") return "SO" + std::to_string(2 * n);
        if (z.name == "full") return "PSO" + std::to_string(2 * n);
    }
    return "";
}

std::vector<LevelRecord> levels_table(int max_rank) {
    if (max_rank < 2) throw DomainError("max_rank must be at least 2");
    std::vector<SimpleType> types;
    for (int n = 1; n <= max_rank; ++n) types.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) types.push_back({Family::B, n});
    for (int n = 1; n <= max_rank; ++n) types.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) types.push_back({Family::D, n});
    for (int n = 6; n <= 8; ++n)
        if (n <= max_rank) types.push_back({Family::E, n});
    if (4 <= max_rank) types.push_back({Family::F, 4});
    if (2 <= max_rank) types.push_back({Family::G, 2});

    std::vector<LevelRecord> rows;
    for (const auto& t : types) {
        RootSystem rs = build(t);
        for (const auto& z : subgroups(rs)) {
            if (z.size() == 1) continue;
            LevelRecord r;
            r.group = t;
            r.subgroup = z.name;
            r.quotient = quotient_name(rs, z);
            r.fundamental = fundamental_level(rs, z);
            r.basic = basic_level(rs, z);
            if (r.basic % r.fundamental != 0)
                throw std::logic_error("basic level is not a multiple of the fundamental level");
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

} // namespace looprep
