#include "looprep/classify.hpp"

#include "looprep/errors.hpp"
#include "looprep/levels.hpp"

#include <algorithm>
#include <stdexcept>

namespace looprep {

namespace {

std::vector<IVec> characters_mod_dual(const RootSystem& rs, const CentralSubgroup& z,
                                      long long level, const AlcoveWeight& canonical,
                                      const Lattice& dual) {
    Vec lambda = from_dynkin_labels(rs, Vec(canonical.labels.begin(), canonical.labels.end()));
    std::vector<IVec> classes;
    for (const auto& e : z.elements) {
        // lambda_i^vee is a weight here: the special roots are long,
        // so coweight and weight representatives coincide.
        Vec wt = add(lambda, scale(Rat(level), e.rep));
        auto coords = solve_columns(transpose(dual.basis), wt);
        if (!coords) throw std::logic_error("weight escaped the span of (Lambda_Z)*");
        Vec reduced = zero_vec(rs.ambient_dim);
        for (std::size_t j = 0; j < dual.basis.size(); ++j)
            reduced = add(reduced, scale((*coords)[j] - Rat(floor_int((*coords)[j])),
                                         dual.basis[j]));
        IVec labels;
        for (const Rat& c : to_dynkin_labels(rs, reduced)) labels.push_back(to_integer(c));
        classes.push_back(std::move(labels));
    }
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    if (z.size() % classes.size() != 0)
        throw std::logic_error("character class count does not divide |Z|");
    return classes;
}

} // namespace

std::vector<IVec> characters_of_center(const RootSystem& rs, const CentralSubgroup& z,
                                       long long level, const AlcoveWeight& canonical) {
    return characters_mod_dual(rs, z, level, canonical, dual_lattice(rs, lattice_for(rs, z)));
}

bool factors_through_quotient(const RootSystem& rs, const CentralSubgroup& z, long long level) {
    return level % basic_level(rs, z) == 0;
}

long long extension_count_quotient(const RootSystem& rs, const CentralSubgroup& z,
                                   long long level) {
    if (level < 0) throw DomainError("level must be non-negative");
    if (level % basic_level(rs, z) != 0) return 0;
    return static_cast<long long>(enumerate_admissible(rs, z, level).size()) *
           static_cast<long long>(z.size());
}

namespace {

int multiplicity_of(const RootSystem& rs, const CentralSubgroup& z, long long level,
                    const CommutatorMap& omega, const Orbit& orbit) {
    if (rs.type.family != Family::D || rs.type.rank % 2 != 0) return 1;
    if (z.size() != static_cast<std::size_t>(rs.center_order)) return 1; // quotient is PSO only for the full center
    if (orbit.members.size() != 1 || level % 2 != 0) return 1;
    auto cf = pulled_back_center_form(rs, omega);
    return cf && cf->nontrivial ? 2 : 1;
}

} // namespace

std::vector<PERClass> classify_lzg(const RootSystem& rs, const CentralSubgroup& z,
                                   long long level) {
    if (level < 0) throw DomainError("level must be non-negative");
    std::vector<PERClass> out;
    auto omegas = enumerate_admissible(rs, z, level);
    if (omegas.empty()) return out;
    auto orbs = orbits(rs, z, level);
    const bool factors = factors_through_quotient(rs, z, level);
    const Lattice dual = dual_lattice(rs, lattice_for(rs, z));
    for (std::size_t oi = 0; oi < omegas.size(); ++oi)
        for (const auto& orb : orbs) {
            PERClass c;
            c.omega_index = oi;
            c.omega = omegas[oi];
            c.orbit = orb;
            c.multiplicity = multiplicity_of(rs, z, level, omegas[oi], orb);
            c.characters = characters_mod_dual(rs, z, level, orb.canonical(), dual);
            c.factors_through_quotient = factors;
            out.push_back(std::move(c));
        }
    return out;
}

std::vector<PERClass> classify_quotient(const RootSystem& rs, const CentralSubgroup& z,
                                        long long level) {
    std::vector<PERClass> out;
    for (auto& c : classify_lzg(rs, z, level))
        if (c.factors_through_quotient) out.push_back(std::move(c));
    return out;
}

bool mackey_consistency(const RootSystem& rs, const CentralSubgroup& z, long long level) {
    if (rs.type.family != Family::D || rs.type.rank % 2 != 0)
        throw DomainError("applies to even-rank D only");
    if (!z.same_elements(center(rs)) || z.size() != 4)
        throw DomainError("applies to the full center only");
    auto classes = classify_lzg(rs, z, level);
    for (const auto& c : classes) {
        if (c.orbit.members.size() != 1) continue;
        if (level % 2 != 0) return false; // a fixed orbit at odd level
        auto cf = pulled_back_center_form(rs, c.omega);
        if (!cf) return false; // even level must make omega a pull-back
        int expected = cf->nontrivial ? 2 : 1;
        if (c.multiplicity != expected) return false;
    }
    return true;
}

} // namespace looprep
