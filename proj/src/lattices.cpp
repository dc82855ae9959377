#include "looprep/lattices.hpp"

#include "looprep/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <stdexcept>

namespace looprep {

std::size_t CentralSubgroup::inverse(std::size_t i) const {
    for (std::size_t j = 0; j < size(); ++j)
        if (product[i][j] == 0) return j;
    throw std::logic_error("group element without inverse");
}

std::size_t CentralSubgroup::power(std::size_t i, long long k) const {
    long long n = static_cast<long long>(element_orders[i]);
    k %= n;
    if (k < 0) k += n;
    std::size_t acc = 0;
    for (long long step = 0; step < k; ++step) acc = product[acc][i];
    return acc;
}

bool CentralSubgroup::is_cyclic() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (element_orders[i] == static_cast<long long>(size())) return true;
    return false;
}

bool CentralSubgroup::same_elements(const CentralSubgroup& o) const {
    if (size() != o.size()) return false;
    for (const auto& e : elements) {
        bool found = false;
        for (const auto& f : o.elements) found = found || e == f;
        if (!found) return false;
    }
    return true;
}

Lattice make_lattice(const Mat& generator_rows, std::size_t ambient) {
    Lattice l;
    l.ambient = ambient;
    if (generator_rows.empty()) return l;
    long long scale_den = lcm_of_denominators(generator_rows);
    IMat cols(ambient, IVec(generator_rows.size(), 0));
    for (std::size_t g = 0; g < generator_rows.size(); ++g)
        for (std::size_t i = 0; i < ambient; ++i)
            cols[i][g] = to_integer(generator_rows[g][i] * scale_den);
    IMat h = hnf_columns(std::move(cols));
    const std::size_t r = h.empty() ? 0 : h[0].size();
    l.basis.assign(r, zero_vec(ambient));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < ambient; ++i)
            l.basis[j][i] = Rat(h[i][j], scale_den);
    return l;
}

bool lattice_contains(const Lattice& l, const Vec& v) {
    if (is_zero(v)) return true;
    if (l.basis.empty()) return false;
    auto x = solve_columns(transpose(l.basis), v);
    if (!x) return false;
    return std::all_of(x->begin(), x->end(), [](const Rat& c) { return is_integer(c); });
}

long long lattice_index(const Lattice& sub, const Lattice& super) {
    if (sub.lattice_rank() != super.lattice_rank())
        throw DomainError("lattices of different rank have infinite index");
    Mat coords;
    for (const Vec& b : sub.basis) {
        auto x = solve_columns(transpose(super.basis), b);
        if (!x) throw DomainError("not a sublattice");
        for (const Rat& c : *x)
            if (!is_integer(c)) throw DomainError("not a sublattice");
        coords.push_back(*x);
    }
    Rat d = det(coords);
    return std::llabs(to_integer(d));
}

Mat lattice_gram(const RootSystem& rs, const Lattice& l) {
    const std::size_t r = l.lattice_rank();
    Mat g = zero_mat(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) g[i][j] = inner(rs, l.basis[i], l.basis[j]);
    return g;
}

std::vector<int> special_coweight_indices(const RootSystem& rs) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (rs.marks[i] == 1) idx.push_back(static_cast<int>(i) + 1);
    return idx;
}

Lattice coroot_lattice(const RootSystem& rs) {
    return make_lattice(rs.simple_coroots, rs.ambient_dim);
}

Lattice coweight_lattice(const RootSystem& rs) {
    return make_lattice(rs.fundamental_coweights, rs.ambient_dim);
}

namespace {

bool in_coroot_lattice(const RootSystem& rs, const Vec& v) {
    auto x = solve_columns(transpose(rs.simple_coroots), v);
    if (!x) return false;
    return std::all_of(x->begin(), x->end(), [](const Rat& c) { return is_integer(c); });
}

CentralElement element_for_index(const RootSystem& rs, int special_index) {
    CentralElement e;
    e.special_index = special_index;
    e.rep = special_index == 0 ? zero_vec(rs.ambient_dim)
                               : rs.fundamental_coweights[special_index - 1];
    return e;
}

// the family's distinguished generator of a cyclic center
int cyclic_generator_index(const RootSystem& rs) {
    const int n = rs.type.rank;
    switch (rs.type.family) {
        case Family::A: return 1;
        case Family::B: return 1;
        case Family::C: return n;
        case Family::D: return n; // n odd here; even D centers are not cyclic
        case Family::E: return n == 6 ? 6 : 7;
        default: throw std::logic_error("trivial center has no generator");
    }
}

void fill_group_structure(const RootSystem& rs, CentralSubgroup& z) {
    const std::size_t m = z.size();
    z.product.assign(m, std::vector<std::size_t>(m, m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec rep = minimal_representative(rs, add(z.elements[i].rep, z.elements[j].rep));
            bool found = false;
            for (std::size_t k = 0; k < m; ++k)
                if (z.elements[k].rep == rep) {
                    z.product[i][j] = k;
                    found = true;
                }
            if (!found) throw std::logic_error("central subgroup is not closed");
        }
    z.element_orders.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t acc = i;
        long long ord = 1;
        while (acc != 0) {
            acc = z.product[acc][i];
            ++ord;
        }
        z.element_orders[i] = ord;
    }
}

} // namespace

Vec minimal_representative(const RootSystem& rs, const Vec& mu) {
    Vec p = project_to_root_span(rs, mu);
    for (const Rat& c : to_colabels(rs, p))
        if (!is_integer(c))
            throw DomainError("vector does not lie in the coweight lattice");
    if (in_coroot_lattice(rs, p)) return zero_vec(rs.ambient_dim);
    for (int i : special_coweight_indices(rs)) {
        const Vec& rep = rs.fundamental_coweights[i - 1];
        if (in_coroot_lattice(rs, sub(p, rep))) return rep;
    }
    throw std::logic_error("coweight matches no coroot coset representative");
}

CentralSubgroup center(const RootSystem& rs) {
    CentralSubgroup z;
    z.name = rs.center_order == 1 ? "triv" : "full";
    z.elements.push_back(element_for_index(rs, 0));
    auto specials = special_coweight_indices(rs);
    if (static_cast<long long>(specials.size()) + 1 != rs.center_order)
        throw std::logic_error("special root count disagrees with the Cartan determinant");
    if (rs.center_order == 1) {
        fill_group_structure(rs, z);
        return z;
    }
    if (rs.type.family == Family::D && rs.type.rank % 2 == 0) {
        const int n = rs.type.rank;
        z.elements.push_back(element_for_index(rs, 1));     // v
        z.elements.push_back(element_for_index(rs, n - 1)); // s
        z.elements.push_back(element_for_index(rs, n));     // c
        z.generators = {1, 2};
    } else {
        const int g = cyclic_generator_index(rs);
        Vec acc = rs.fundamental_coweights[g - 1];
        z.elements.push_back(element_for_index(rs, g));
        while (true) {
            acc = minimal_representative(rs, add(acc, rs.fundamental_coweights[g - 1]));
            if (is_zero(acc)) break;
            bool matched = false;
            for (int i : specials)
                if (rs.fundamental_coweights[i - 1] == acc) {
                    z.elements.push_back(element_for_index(rs, i));
                    matched = true;
                }
            if (!matched) throw std::logic_error("center power outside special coweights");
        }
        z.generators = {1};
    }
    if (static_cast<long long>(z.elements.size()) != rs.center_order)
        throw std::logic_error("center has wrong order");
    fill_group_structure(rs, z);
    return z;
}

std::vector<CentralSubgroup> subgroups(const RootSystem& rs) {
    std::vector<CentralSubgroup> subs;
    CentralSubgroup full = center(rs);

    CentralSubgroup triv;
    triv.name = "triv";
    triv.elements.push_back(element_for_index(rs, 0));
    fill_group_structure(rs, triv);
    subs.push_back(triv);
    if (full.size() == 1) return subs;

    if (rs.type.family == Family::D && rs.type.rank % 2 == 0) {
        const int n = rs.type.rank;
        const char* names[3] = {"v", "s", "c"};
        const int reps[3] = {1, n - 1, n};
        for (int k = 0; k < 3; ++k) {
            CentralSubgroup s;
            s.name = names[k];
            s.elements.push_back(element_for_index(rs, 0));
            s.elements.push_back(element_for_index(rs, reps[k]));
            s.generators = {1};
            fill_group_structure(rs, s);
            subs.push_back(s);
        }
    } else {
        const long long order = static_cast<long long>(full.size());
        for (long long d = 2; d < order; ++d) {
            if (order % d != 0) continue;
            CentralSubgroup s;
            s.name = "k" + std::to_string(d);
            std::size_t gen = full.power(1, order / d); // full.elements[1] generates
            std::size_t acc = 0;
            for (long long k = 0; k < d; ++k) {
                s.elements.push_back(full.elements[acc]);
                acc = full.product[acc][gen];
            }
            s.generators = {1};
            fill_group_structure(rs, s);
            subs.push_back(s);
        }
    }
    subs.push_back(full);
    return subs;
}

const CentralSubgroup& find_subgroup(const std::vector<CentralSubgroup>& subs,
                                     const std::string& name) {
    std::string lower;
    for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (const auto& s : subs)
        if (s.name == lower) return s;
    // accept k<d> aliases of triv/full in cyclic centers
    if (lower == "k1") return find_subgroup(subs, "triv");
    if (!lower.empty() && lower[0] == 'k') {
        const CentralSubgroup& full = subs.back();
        if (full.is_cyclic() && lower == "k" + std::to_string(full.size()))
            return full;
    }
    std::string known;
    for (const auto& s : subs) known += (known.empty() ? "" : ", ") + s.name;
    throw UsageError("unknown subgroup '" + name + "'; valid subgroups: " + known);
}

Lattice lattice_for(const RootSystem& rs, const CentralSubgroup& z) {
    Mat gens = rs.simple_coroots;
    for (const auto& e : z.elements)
        if (e.special_index != 0) gens.push_back(e.rep);
    Lattice l = make_lattice(gens, rs.ambient_dim);
    if (lattice_index(coroot_lattice(rs), l) != static_cast<long long>(z.size()))
        throw std::logic_error("[Lambda_Z : Q^vee] differs from |Z|");
    return l;
}

Lattice dual_lattice(const RootSystem& rs, const Lattice& l) {
    Mat g = lattice_gram(rs, l);
    Mat coeff = inverse(g);
    Mat dual_rows;
    for (std::size_t i = 0; i < l.lattice_rank(); ++i) {
        Vec row = zero_vec(l.ambient);
        for (std::size_t j = 0; j < l.lattice_rank(); ++j)
            row = add(row, scale(coeff[i][j], l.basis[j]));
        dual_rows.push_back(row);
    }
    return make_lattice(dual_rows, l.ambient);
}

long long largest_cyclic_order(const CentralSubgroup& z) {
    long long best = 1;
    for (long long o : z.element_orders) best = std::max(best, o);
    return best;
}

} // namespace looprep
