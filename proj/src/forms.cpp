#include "looprep/forms.hpp"

#include "looprep/errors.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace looprep {

namespace {

bool in_coroot_lattice(const RootSystem& rs, const Vec& v) {
    if (is_zero(v)) return true;
    auto x = solve_columns(transpose(rs.simple_coroots), v);
    if (!x) return false;
    return std::all_of(x->begin(), x->end(), [](const Rat& c) { return is_integer(c); });
}

// exponent of (-1)^{ell <a, x>}; a must pair integrally with x
long long base_exponent(const RootSystem& rs, long long level, const Vec& a, const Vec& x) {
    return to_integer(Rat(level) * inner(rs, a, x));
}

Rat half_mod1(long long exponent) { return mod1(Rat(exponent, 2)); }

} // namespace

CommutatorMap make_form(const RootSystem& rs, const CentralSubgroup& z, long long level) {
    CommutatorMap f;
    f.subgroup = z;
    f.level = level;
    for (const auto& e : z.elements)
        f.section.push_back(e.special_index == 0 ? zero_vec(rs.ambient_dim) : e.rep);
    f.table = zero_mat(z.size(), z.size());
    return f;
}

bool is_admissible(const RootSystem& rs, const CommutatorMap& omega) {
    const auto& z = omega.subgroup;
    const std::size_t m = z.size();
    if (omega.table.size() != m || omega.section.size() != m)
        throw std::invalid_argument("table/section size does not match the subgroup");
    for (std::size_t i = 0; i < m; ++i) {
        if (omega.table[i].size() != m) throw std::invalid_argument("table is not square");
        if (omega.section[i].size() != rs.ambient_dim)
            throw std::invalid_argument("section vector of wrong dimension");
        if (!in_coroot_lattice(rs, sub(omega.section[i], z.elements[i].rep)))
            throw std::invalid_argument("section does not lift the subgroup elements");
        for (std::size_t j = 0; j < m; ++j) {
            const Rat& q = omega.table[i][j];
            if (q < Rat(0) || q >= Rat(1))
                throw std::invalid_argument("table entries must be reduced into [0,1)");
            if (mod1(q + omega.table[j][i]) != Rat(0))
                throw std::invalid_argument("table is not skew-symmetric");
        }
        if (omega.table[i][i] != Rat(0))
            throw std::invalid_argument("a commutator map vanishes on the diagonal");
    }

    // Biadditivity across the section: for all i, j, k,
    //   q(z_i z_j, z_k) = q(i,k) + q(j,k) + (1/2) ell <s_i + s_j - s_{ij}, s_k>  (mod 1).
    // This simultaneously forces the coroot-lattice base rule on generators.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t ij = z.product[i][j];
            Vec delta = sub(add(omega.section[i], omega.section[j]), omega.section[ij]);
            if (!in_coroot_lattice(rs, delta))
                throw std::invalid_argument("section violates the subgroup relations");
            for (std::size_t k = 0; k < m; ++k) {
                Rat expected = mod1(omega.table[i][k] + omega.table[j][k] +
                                    half_mod1(base_exponent(rs, omega.level, delta,
                                                            omega.section[k])));
                if (omega.table[ij][k] != expected) return false;
            }
        }
    return true;
}

FormChecker::FormChecker(const RootSystem& rs, const CentralSubgroup& z, long long level) {
    CommutatorMap f = make_form(rs, z, level);
    product_ = z.product;
    const std::size_t m = z.size();
    twist_.assign(m, zero_mat(m, m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec delta = sub(add(f.section[i], f.section[j]), f.section[z.product[i][j]]);
            for (std::size_t k = 0; k < m; ++k)
                twist_[i][j][k] = half_mod1(base_exponent(rs, level, delta, f.section[k]));
        }
}

bool FormChecker::table_admissible(const Mat& table) const {
    const std::size_t m = product_.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t ij = product_[i][j];
            for (std::size_t k = 0; k < m; ++k)
                if (table[ij][k] != mod1(table[i][k] + table[j][k] + twist_[i][j][k]))
                    return false;
        }
    return true;
}

Rat evaluate(const RootSystem& rs, const CommutatorMap& omega, const Vec& mu, const Vec& nu) {
    const auto& z = omega.subgroup;
    auto decompose = [&](const Vec& x) -> std::pair<std::size_t, Vec> {
        for (std::size_t i = 0; i < z.size(); ++i) {
            Vec a = sub(x, omega.section[i]);
            if (in_coroot_lattice(rs, a)) return {i, a};
        }
        throw DomainError("vector does not lie in Lambda_Z");
    };
    auto [i, a] = decompose(mu);
    auto [j, b] = decompose(nu);
    long long e = base_exponent(rs, omega.level, a, omega.section[j]) +
                  base_exponent(rs, omega.level, b, omega.section[i]) +
                  base_exponent(rs, omega.level, a, b);
    return mod1(omega.table[i][j] + half_mod1(e));
}

std::vector<CommutatorMap> enumerate_admissible(const RootSystem& rs, const CentralSubgroup& z,
                                                long long level) {
    std::vector<CommutatorMap> found;
    auto consider = [&](CommutatorMap f) {
        if (is_admissible(rs, f)) found.push_back(std::move(f));
    };

    if (z.size() == 1) {
        consider(make_form(rs, z, level));
    } else if (z.is_cyclic()) {
        // The base rule and biadditivity bind the whole table once the
        // generator column is fixed, so there is a single candidate.
        CommutatorMap f = make_form(rs, z, level);
        const Vec& gen = f.section[1];
        std::vector<Vec> alpha; // s(g^a) - a g, a coroot-lattice correction
        for (std::size_t a = 0; a < z.size(); ++a)
            alpha.push_back(sub(f.section[a], scale(Rat(static_cast<long long>(a)), gen)));
        for (std::size_t a = 0; a < z.size(); ++a)
            for (std::size_t b = 0; b < z.size(); ++b) {
                long long e =
                    base_exponent(rs, level, alpha[a], alpha[b]) +
                    to_integer(Rat(level) *
                               (Rat(static_cast<long long>(a)) * inner(rs, gen, alpha[b]) +
                                Rat(static_cast<long long>(b)) * inner(rs, gen, alpha[a])));
                f.table[a][b] = half_mod1(e);
            }
        consider(std::move(f));
    } else {
        // Klein case: elements 1, v, s, c = vs. The value x = omega(v, s)
        // determines everything and satisfies x^2 = (-1)^level, so x runs
        // over fourth roots of unity.
        if (z.size() != 4) throw std::logic_error("unexpected non-cyclic central subgroup");
        const int pq[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        CommutatorMap base = make_form(rs, z, level);
        const Vec lv = base.section[1], ls = base.section[2];
        std::vector<Vec> alpha;
        for (std::size_t i = 0; i < 4; ++i) {
            Vec lift = add(scale(Rat(pq[i][0]), lv), scale(Rat(pq[i][1]), ls));
            alpha.push_back(sub(base.section[i], lift));
        }
        for (int qx_num = 0; qx_num < 4; ++qx_num) {
            CommutatorMap f = base;
            const Rat qx(qx_num, 4); // omega(v,s) = exp(2 pi i qx)
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    Vec li = add(scale(Rat(pq[i][0]), lv), scale(Rat(pq[i][1]), ls));
                    Vec lj = add(scale(Rat(pq[j][0]), lv), scale(Rat(pq[j][1]), ls));
                    long long e = base_exponent(rs, level, alpha[i], alpha[j]) +
                                  base_exponent(rs, level, alpha[i], lj) +
                                  base_exponent(rs, level, alpha[j], li);
                    long long sympl = pq[i][0] * pq[j][1] - pq[i][1] * pq[j][0];
                    f.table[i][j] = mod1(Rat(sympl) * qx + half_mod1(e));
                }
            consider(std::move(f));
        }
    }
    std::sort(found.begin(), found.end(),
              [](const CommutatorMap& a, const CommutatorMap& b) { return a.table < b.table; });
    return found;
}

CommutatorMap canonical_form(const RootSystem& rs, const CentralSubgroup& z, long long level) {
    CommutatorMap f = make_form(rs, z, level);
    const std::size_t m = z.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rat e = Rat(level) * inner(rs, f.section[i], f.section[j]) +
                    Rat(level) * Rat(level) * inner(rs, f.section[i], f.section[i]) *
                        inner(rs, f.section[j], f.section[j]);
            if (!is_integer(e))
                throw DomainError("canonical form needs the basic level to divide the level");
            f.table[i][j] = half_mod1(num(e));
        }
    if (!is_admissible(rs, f)) throw std::logic_error("canonical form is not admissible");
    return f;
}

std::optional<CenterForm> pulled_back_center_form(const RootSystem& rs,
                                                  const CommutatorMap& omega) {
    // invariance under coroot shifts: every base value must be +1
    Mat gens = rs.simple_coroots;
    for (const auto& s : omega.section) gens.push_back(s);
    for (const auto& coroot : rs.simple_coroots)
        for (const auto& x : gens)
            if (base_exponent(rs, omega.level, coroot, x) % 2 != 0) return std::nullopt;
    CenterForm cf;
    cf.table = omega.table;
    for (const auto& row : omega.table)
        for (const Rat& q : row)
            if (q != Rat(0)) cf.nontrivial = true;
    return cf;
}

} // namespace looprep
