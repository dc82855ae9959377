#include "looprep/alcove.hpp"

#include "looprep/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace looprep {

namespace {

Mat reflection_matrix(const RootSystem& rs, const Vec& root) {
    const std::size_t d = rs.ambient_dim;
    Vec coroot = scale(Rat(2) / inner(rs, root, root), root);
    Mat m = identity_mat(d);
    // sigma(x) = x - <x, root^vee> root, column by column
    for (std::size_t j = 0; j < d; ++j) {
        Vec e(d, Rat(0));
        e[j] = 1;
        Vec img = sub(e, scale(inner(rs, e, coroot), root));
        for (std::size_t i = 0; i < d; ++i) m[i][j] = img[i];
    }
    return m;
}

std::size_t match_node(const ExtendedDiagram& dia, const Vec& v) {
    for (std::size_t k = 0; k < dia.node_count(); ++k)
        if (dia.nodes[k] == v) return k;
    throw std::logic_error("Weyl element does not permute the extended diagram");
}

} // namespace

ExtendedDiagram extended_diagram(const RootSystem& rs) {
    ExtendedDiagram dia;
    dia.nodes.push_back(scale(Rat(-1), rs.highest_root));
    for (const auto& a : rs.simple_roots) dia.nodes.push_back(a);
    const std::size_t m = dia.node_count();
    dia.pairing.assign(m, IVec(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        dia.node_len2.push_back(inner(rs, dia.nodes[i], dia.nodes[i]));
        for (std::size_t j = 0; j < m; ++j) {
            Vec coroot_j = scale(Rat(2) / inner(rs, dia.nodes[j], dia.nodes[j]), dia.nodes[j]);
            dia.pairing[i][j] = to_integer(inner(rs, dia.nodes[i], coroot_j));
        }
    }
    return dia;
}

WeylElement weyl_element(const RootSystem& rs, const CentralElement& z) {
    const std::size_t d = rs.ambient_dim;
    const std::size_t n = rs.rank();
    ExtendedDiagram dia = extended_diagram(rs);
    WeylElement w;
    if (z.special_index == 0) {
        w.matrix = identity_mat(d);
        for (std::size_t k = 0; k <= n; ++k) w.node_permutation.push_back(k);
        return w;
    }
    const std::size_t i = static_cast<std::size_t>(z.special_index); // 1-based

    // A strictly dominant vector for the basis Delta_i = Delta \ {alpha_i} + {alpha_0}:
    // the sum of its dual basis, -lambda_i^vee + sum_{j != i} (lambda_j^vee - m_j lambda_i^vee).
    Vec v = scale(Rat(-1), rs.fundamental_coweights[i - 1]);
    for (std::size_t j = 1; j <= n; ++j) {
        if (j == i) continue;
        v = add(v, rs.fundamental_coweights[j - 1]);
        v = sub(v, scale(Rat(rs.marks[j - 1]), rs.fundamental_coweights[i - 1]));
    }

    // Chamber descent: make v dominant by simple reflections. The resulting
    // word maps Delta_i to Delta, and its inverse is the element wanted.
    Mat m = identity_mat(d);
    std::size_t guard = 0, max_steps = rs.all_roots.size();
    for (;;) {
        std::size_t neg = n;
        for (std::size_t j = 0; j < n; ++j)
            if (inner(rs, v, rs.simple_roots[j]) < Rat(0)) {
                neg = j;
                break;
            }
        if (neg == n) break;
        Mat refl = reflection_matrix(rs, rs.simple_roots[neg]);
        v = mat_vec(refl, v);
        m = mat_mul(refl, m);
        if (++guard > max_steps) throw std::logic_error("chamber descent did not terminate");
    }
    w.matrix = transpose(m); // inverse of an orthogonal map

    for (std::size_t k = 0; k <= n; ++k)
        w.node_permutation.push_back(match_node(dia, mat_vec(w.matrix, dia.nodes[k])));
    if (w.node_permutation[0] != i)
        throw std::logic_error("descent produced an element with w(alpha_0) != alpha_i");
    return w;
}

long long height(const RootSystem& rs, const IVec& labels) {
    long long h = 0;
    for (std::size_t j = 0; j < labels.size(); ++j) h += labels[j] * rs.comarks[j];
    return h;
}

bool in_alcove(const RootSystem& rs, const AlcoveWeight& w) {
    if (w.labels.size() != rs.rank() || w.level < 0) return false;
    for (long long x : w.labels)
        if (x < 0) return false;
    return height(rs, w.labels) <= w.level;
}

IVec affine_labels(const RootSystem& rs, const AlcoveWeight& w) {
    IVec a;
    a.push_back(w.level - height(rs, w.labels));
    a.insert(a.end(), w.labels.begin(), w.labels.end());
    return a;
}

std::vector<AlcoveWeight> alcove(const RootSystem& rs, long long level) {
    if (level < 0) throw DomainError("level must be non-negative");
    std::vector<AlcoveWeight> out;
    IVec labels(rs.rank(), 0);
    // lexicographic enumeration of tuples with sum n_i comark_i <= level
    auto rec = [&](auto&& self, std::size_t pos, long long budget) -> void {
        if (pos == rs.rank()) {
            out.push_back(AlcoveWeight{labels, level});
            return;
        }
        for (long long v = 0; v * rs.comarks[pos] <= budget; ++v) {
            labels[pos] = v;
            self(self, pos + 1, budget - v * rs.comarks[pos]);
        }
        labels[pos] = 0;
    };
    rec(rec, 0, level);
    return out;
}

namespace {

AlcoveWeight apply_action(const RootSystem& rs, const WeylElement& w, int special_index,
                          long long level, const AlcoveWeight& lambda) {
    Vec x = from_dynkin_labels(rs, Vec(lambda.labels.begin(), lambda.labels.end()));
    Vec y = mat_vec(w.matrix, x);
    if (special_index != 0)
        y = add(y, scale(Rat(level), rs.fundamental_coweights[special_index - 1]));
    Vec labels = to_dynkin_labels(rs, y);
    AlcoveWeight out;
    out.level = level;
    for (const Rat& c : labels) out.labels.push_back(to_integer(c));
    if (!in_alcove(rs, out)) throw std::logic_error("action left the alcove");
    return out;
}

} // namespace

AlcoveWeight act(const RootSystem& rs, const CentralElement& z, long long level,
                 const AlcoveWeight& w) {
    if (!in_alcove(rs, AlcoveWeight{w.labels, level}))
        throw DomainError("weight is outside the level " + std::to_string(level) + " alcove");
    return apply_action(rs, weyl_element(rs, z), z.special_index, level, w);
}

AlcoveWeight act_classical(const RootSystem& rs, const CentralElement& z, long long level,
                           const AlcoveWeight& w) {
    const Family fam = rs.type.family;
    if (fam != Family::A && fam != Family::B && fam != Family::C && fam != Family::D)
        throw DomainError("explicit coordinate formulas cover the classical families only");
    if (!in_alcove(rs, AlcoveWeight{w.labels, level}))
        throw DomainError("weight is outside the level " + std::to_string(level) + " alcove");
    const std::size_t n = rs.rank();
    const Rat l(level);
    if (z.special_index == 0) return AlcoveWeight{w.labels, level};
    const std::size_t i = static_cast<std::size_t>(z.special_index);

    // coordinates mu_1..mu_d of the weight in the standard realization
    Vec mu = from_dynkin_labels(rs, Vec(w.labels.begin(), w.labels.end()));
    const std::size_t d = rs.ambient_dim;
    Vec nu(d, Rat(0));
    switch (fam) {
        case Family::A: {
            // A_k(mu) = (l+mu_{d+1-k}, ..., l+mu_d, mu_1, ..., mu_{d-k})
            for (std::size_t p = 0; p < i; ++p) nu[p] = l + mu[d - i + p];
            for (std::size_t p = i; p < d; ++p) nu[p] = mu[p - i];
            break;
        }
        case Family::B: {
            if (i != 1) throw std::logic_error("B_n has a single non-trivial central element");
            nu = mu;
            nu[0] = l - mu[0];
            break;
        }
        case Family::C: {
            if (i != n) throw std::logic_error("C_n has a single non-trivial central element");
            for (std::size_t p = 0; p < d; ++p) nu[p] = l - mu[d - 1 - p];
            break;
        }
        case Family::D: {
            const Rat h = l / 2;
            const bool even = n % 2 == 0;
            if (i == 1) {
                nu = mu;
                nu[0] = l - mu[0];
                nu[n - 1] = -mu[n - 1];
            } else if (i == n - 1) {
                if (even) {
                    nu[0] = h + mu[n - 1];
                    for (std::size_t p = 1; p + 1 < n; ++p) nu[p] = h - mu[n - 1 - p];
                    nu[n - 1] = -h + mu[0];
                } else {
                    for (std::size_t p = 0; p + 1 < n; ++p) nu[p] = h - mu[n - 1 - p];
                    nu[n - 1] = -h + mu[0];
                }
            } else if (i == n) {
                if (even) {
                    for (std::size_t p = 0; p < n; ++p) nu[p] = h - mu[n - 1 - p];
                } else {
                    nu[0] = h + mu[n - 1];
                    for (std::size_t p = 1; p < n; ++p) nu[p] = h - mu[n - 1 - p];
                }
            } else {
                throw std::logic_error("not a special index for D_n");
            }
            break;
        }
        default: break;
    }

    // back to Dynkin labels; the A_n all-ones ambiguity drops out in the differences
    AlcoveWeight out;
    out.level = level;
    auto push = [&](const Rat& c) { out.labels.push_back(to_integer(c)); };
    switch (fam) {
        case Family::A:
            for (std::size_t p = 0; p + 1 < d; ++p) push(nu[p] - nu[p + 1]);
            break;
        case Family::B:
            for (std::size_t p = 0; p + 1 < n; ++p) push(nu[p] - nu[p + 1]);
            push(nu[n - 1] * 2);
            break;
        case Family::C:
            for (std::size_t p = 0; p + 1 < n; ++p) push(nu[p] - nu[p + 1]);
            push(nu[n - 1]);
            break;
        case Family::D:
            for (std::size_t p = 0; p + 2 < n; ++p) push(nu[p] - nu[p + 1]);
            push(nu[n - 2] - nu[n - 1]);
            push(nu[n - 2] + nu[n - 1]);
            break;
        default: break;
    }
    if (!in_alcove(rs, out)) throw std::logic_error("coordinate formula left the alcove");
    return out;
}

std::vector<Orbit> orbits(const RootSystem& rs, const CentralSubgroup& z, long long level) {
    std::vector<AlcoveWeight> weights = alcove(rs, level);
    std::vector<WeylElement> weyl;
    for (const auto& e : z.elements) weyl.push_back(weyl_element(rs, e));

    auto all_subgroups = subgroups(rs);
    std::map<AlcoveWeight, bool> seen;
    std::vector<Orbit> out;
    for (const auto& lam : weights) {
        if (seen.count(lam)) continue;
        Orbit orb;
        std::vector<std::size_t> stab_idx;
        std::vector<AlcoveWeight> members;
        for (std::size_t k = 0; k < z.size(); ++k) {
            AlcoveWeight img =
                apply_action(rs, weyl[k], z.elements[k].special_index, level, lam);
            if (img == lam) stab_idx.push_back(k);
            members.push_back(img);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (const auto& m : members) seen[m] = true;
        if (members.size() * stab_idx.size() != z.size())
            throw std::logic_error("orbit-stabilizer identity failed");
        orb.members = std::move(members);

        CentralSubgroup stab_set;
        for (std::size_t k : stab_idx) stab_set.elements.push_back(z.elements[k]);
        bool named = false;
        for (const auto& s : all_subgroups)
            if (s.same_elements(stab_set)) {
                orb.stabilizer = s;
                named = true;
            }
        if (!named) throw std::logic_error("stabilizer is not a recognized central subgroup");
        out.push_back(std::move(orb));
    }
    std::sort(out.begin(), out.end(),
              [](const Orbit& a, const Orbit& b) { return a.canonical() < b.canonical(); });
    return out;
}

} // namespace looprep
