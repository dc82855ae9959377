#include "looprep/rootsys.hpp"

#include "looprep/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <stdexcept>

namespace looprep {

namespace {

void validate_rank(const SimpleType& t) {
    const int n = t.rank;
    bool ok = false;
    switch (t.family) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 2; break;
        case Family::C: ok = n >= 1; break;
        case Family::D: ok = n >= 3; break;
        case Family::E: ok = n == 6 || n == 7 || n == 8; break;
        case Family::F: ok = n == 4; break;
        case Family::G: ok = n == 2; break;
    }
    if (!ok)
        throw UsageError("invalid rank " + std::to_string(n) + " for family " +
                         std::string(1, static_cast<char>(t.family)) +
                         " (allowed: A n>=1, B n>=2, C n>=1, D n>=3, E 6|7|8, F 4, G 2)");
}

Vec unit(std::size_t dim, std::size_t i, Rat v = 1) {
    Vec e(dim, Rat(0));
    e[i] = v;
    return e;
}

// Standard orthonormal realizations (Bourbaki planches).
void realize(RootSystem& rs) {
    const std::size_t n = rs.rank();
    switch (rs.type.family) {
        case Family::A: {
            rs.ambient_dim = n + 1;
            rs.basic_scale = 1;
            for (std::size_t i = 0; i < n; ++i) {
                Vec a(n + 1, Rat(0));
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_roots.push_back(a);
            }
            break;
        }
        case Family::B: {
            rs.ambient_dim = n;
            rs.basic_scale = 1;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                Vec a(n, Rat(0));
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_roots.push_back(a);
            }
            rs.simple_roots.push_back(unit(n, n - 1));
            break;
        }
        case Family::C: {
            rs.ambient_dim = n;
            rs.basic_scale = Rat(1, 2);
            for (std::size_t i = 0; i + 1 < n; ++i) {
                Vec a(n, Rat(0));
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_roots.push_back(a);
            }
            rs.simple_roots.push_back(unit(n, n - 1, 2));
            break;
        }
        case Family::D: {
            rs.ambient_dim = n;
            rs.basic_scale = 1;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                Vec a(n, Rat(0));
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_roots.push_back(a);
            }
            Vec a(n, Rat(0));
            a[n - 2] = 1;
            a[n - 1] = 1;
            rs.simple_roots.push_back(a);
            break;
        }
        case Family::E: {
            rs.ambient_dim = 8;
            rs.basic_scale = 1;
            Vec a1(8, Rat(-1, 2));
            a1[0] = Rat(1, 2);
            a1[7] = Rat(1, 2);
            rs.simple_roots.push_back(a1);
            Vec a2(8, Rat(0));
            a2[0] = 1;
            a2[1] = 1;
            rs.simple_roots.push_back(a2);
            for (std::size_t k = 3; k <= n; ++k) {
                Vec a(8, Rat(0));
                a[k - 2] = 1;
                a[k - 3] = -1;
                rs.simple_roots.push_back(a);
            }
            break;
        }
        case Family::F: {
            rs.ambient_dim = 4;
            rs.basic_scale = 1;
            rs.simple_roots = {
                {0, 1, -1, 0},
                {0, 0, 1, -1},
                {0, 0, 0, 1},
                {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)},
            };
            break;
        }
        case Family::G: {
            rs.ambient_dim = 3;
            rs.basic_scale = Rat(1, 3);
            rs.simple_roots = {
                {1, -1, 0},
                {-2, 1, 1},
            };
            break;
        }
    }
}

Vec coroot_of(const RootSystem& rs, const Vec& root) {
    Rat len2 = inner(rs, root, root);
    return scale(Rat(2) / len2, root);
}

void enumerate_roots(RootSystem& rs) {
    std::set<Vec> roots(rs.simple_roots.begin(), rs.simple_roots.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> frontier(roots.begin(), roots.end());
        for (const Vec& r : frontier) {
            for (std::size_t i = 0; i < rs.rank(); ++i) {
                Rat c = inner(rs, r, rs.simple_coroots[i]);
                Vec refl = sub(r, scale(c, rs.simple_roots[i]));
                if (roots.insert(refl).second) grew = true;
                Vec neg = scale(Rat(-1), r);
                if (roots.insert(neg).second) grew = true;
            }
        }
    }
    rs.all_roots.assign(roots.begin(), roots.end());
}

} // namespace

bool RootSystem::simply_laced() const {
    Rat len2 = inner(*this, simple_roots[0], simple_roots[0]);
    for (const auto& a : simple_roots)
        if (inner(*this, a, a) != len2) return false;
    return true;
}

RootSystem build(const SimpleType& type) {
    validate_rank(type);
    RootSystem rs;
    rs.type = type;
    realize(rs);
    const std::size_t n = rs.rank();

    for (const auto& a : rs.simple_roots) rs.simple_coroots.push_back(coroot_of(rs, a));
    enumerate_roots(rs);

    // highest root: the dominant long root
    {
        Rat max_len2(0);
        for (const auto& r : rs.all_roots) max_len2 = std::max(max_len2, inner(rs, r, r));
        std::vector<Vec> candidates;
        for (const auto& r : rs.all_roots) {
            if (inner(rs, r, r) != max_len2) continue;
            bool dominant = true;
            for (std::size_t i = 0; i < n; ++i)
                if (inner(rs, r, rs.simple_coroots[i]) < Rat(0)) dominant = false;
            if (dominant) candidates.push_back(r);
        }
        if (candidates.size() != 1) throw std::logic_error("highest root is not unique");
        rs.highest_root = candidates[0];
        if (inner(rs, rs.highest_root, rs.highest_root) != Rat(2))
            throw std::logic_error("basic normalization <theta,theta>=2 violated");
    }

    // marks: theta = sum m_i alpha_i
    {
        auto coeffs = solve_columns(transpose(rs.simple_roots), rs.highest_root);
        if (!coeffs) throw std::logic_error("highest root outside root span");
        for (const Rat& c : *coeffs) {
            if (!is_integer(c) || num(c) < 1) throw std::logic_error("non-integral mark");
            rs.marks.push_back(num(c));
        }
    }

    // Cartan matrix and center order
    rs.cartan.assign(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rs.cartan[i][j] = to_integer(inner(rs, rs.simple_roots[i], rs.simple_coroots[j]));
    {
        Mat c = zero_mat(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) c[i][j] = rs.cartan[i][j];
        rs.center_order = to_integer(det(c));
        if (rs.center_order < 1) throw std::logic_error("Cartan determinant must be positive");
    }

    // fundamental coweights, solved in the root span: lambda_i^vee = sum_j c_j alpha_j
    // with R c = e_i, R the Gram matrix of the simple roots
    Mat root_gram = zero_mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            root_gram[i][j] = inner(rs, rs.simple_roots[i], rs.simple_roots[j]);
    Mat root_gram_inv = inverse(root_gram);
    for (std::size_t i = 0; i < n; ++i) {
        Vec cw = zero_vec(rs.ambient_dim);
        for (std::size_t j = 0; j < n; ++j)
            cw = add(cw, scale(root_gram_inv[i][j], rs.simple_roots[j]));
        rs.fundamental_coweights.push_back(cw);
        Rat half_len2 = inner(rs, rs.simple_roots[i], rs.simple_roots[i]) / 2;
        rs.fundamental_weights.push_back(scale(half_len2, cw));
    }

    // gram two ways: from the Cartan data and from the realized coweights;
    // a mismatch means the realization and the abstract data disagree
    {
        Mat r_from_cartan = zero_mat(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r_from_cartan[i][j] = Rat(rs.cartan[i][j]) *
                                      inner(rs, rs.simple_roots[j], rs.simple_roots[j]) / 2;
        rs.gram = inverse(r_from_cartan);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rs.gram[i][j] !=
                    inner(rs, rs.fundamental_coweights[i], rs.fundamental_coweights[j]))
                    throw std::logic_error("gram cross-check failed");
    }

    // comarks <lambda_i, theta> = m_i <alpha_i,alpha_i>/2
    for (std::size_t i = 0; i < n; ++i) {
        Rat cm = inner(rs, rs.fundamental_weights[i], rs.highest_root);
        if (!is_integer(cm) || num(cm) < 1) throw std::logic_error("non-integral comark");
        if (cm != Rat(rs.marks[i]) * inner(rs, rs.simple_roots[i], rs.simple_roots[i]) / 2)
            throw std::logic_error("comark cross-check failed");
        rs.comarks.push_back(num(cm));
    }

    // duality and evenness invariants
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_even_integer(inner(rs, rs.simple_coroots[i], rs.simple_coroots[i])))
            throw std::logic_error("coroot lattice is not even");
        for (std::size_t j = 0; j < n; ++j) {
            Rat d1 = inner(rs, rs.fundamental_weights[i], rs.simple_coroots[j]);
            Rat d2 = inner(rs, rs.fundamental_coweights[i], rs.simple_roots[j]);
            if (d1 != Rat(i == j ? 1 : 0) || d2 != d1)
                throw std::logic_error("weight/coroot duality failed");
        }
    }
    return rs;
}

Rat inner(const RootSystem& rs, const Vec& x, const Vec& y) {
    if (x.size() != rs.ambient_dim || y.size() != rs.ambient_dim)
        throw DomainError("dimension mismatch in inner product");
    return rs.basic_scale * dot(x, y);
}

Vec to_dynkin_labels(const RootSystem& rs, const Vec& x) {
    Vec labels(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) labels[i] = inner(rs, x, rs.simple_coroots[i]);
    return labels;
}

Vec from_dynkin_labels(const RootSystem& rs, const Vec& labels) {
    if (labels.size() != rs.rank()) throw DomainError("label count must equal the rank");
    Vec x = zero_vec(rs.ambient_dim);
    for (std::size_t i = 0; i < rs.rank(); ++i) x = add(x, scale(labels[i], rs.fundamental_weights[i]));
    return x;
}

Vec to_colabels(const RootSystem& rs, const Vec& x) {
    Vec c(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) c[i] = inner(rs, x, rs.simple_roots[i]);
    return c;
}

Vec from_colabels(const RootSystem& rs, const Vec& colabels) {
    if (colabels.size() != rs.rank()) throw DomainError("colabel count must equal the rank");
    Vec x = zero_vec(rs.ambient_dim);
    for (std::size_t i = 0; i < rs.rank(); ++i)
        x = add(x, scale(colabels[i], rs.fundamental_coweights[i]));
    return x;
}

Vec project_to_root_span(const RootSystem& rs, const Vec& x) {
    // coordinates c with Gram c = (<x, alpha_i>), then sum c_i alpha_i
    const std::size_t n = rs.rank();
    Mat root_gram = zero_mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            root_gram[i][j] = inner(rs, rs.simple_roots[i], rs.simple_roots[j]);
    Vec rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = inner(rs, x, rs.simple_roots[i]);
    Vec c = mat_vec(inverse(root_gram), rhs);
    Vec p = zero_vec(rs.ambient_dim);
    for (std::size_t i = 0; i < n; ++i) p = add(p, scale(c[i], rs.simple_roots[i]));
    return p;
}

SimpleType parse_group_name(const std::string& name) {
    std::string up;
    for (char ch : name) up += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    auto split = [&](const std::string& prefix) -> int {
        if (up.size() <= prefix.size() || up.compare(0, prefix.size(), prefix) != 0) return -1;
        int value = 0;
        for (std::size_t i = prefix.size(); i < up.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(up[i]))) return -1;
            value = value * 10 + (up[i] - '0');
            if (value > 1000) return -1;
        }
        return value;
    };
    const std::string grammar =
        "valid names: A<n>/SU<n+1>, B<n>/Spin<2n+1>, C<n>/Sp<n>, D<n>/Spin<2n>, E6, E7, E8, F4, G2";
    SimpleType t{};
    int v;
    if ((v = split("SPIN")) >= 0) {
        if (v >= 5 && v % 2 == 1)
            t = {Family::B, (v - 1) / 2};
        else if (v >= 6 && v % 2 == 0)
            t = {Family::D, v / 2};
        else
            throw UsageError("unknown group '" + name + "'; " + grammar);
    } else if ((v = split("SU")) >= 0) {
        if (v < 2) throw UsageError("unknown group '" + name + "'; " + grammar);
        t = {Family::A, v - 1};
    } else if ((v = split("SP")) >= 0) {
        t = {Family::C, v};
    } else if (up.size() >= 2 && up[0] >= 'A' && up[0] <= 'G' && (v = split(up.substr(0, 1))) >= 0) {
        t = {static_cast<Family>(up[0]), v};
    } else {
        throw UsageError("unknown group '" + name + "'; " + grammar);
    }
    validate_rank(t);
    return t;
}

std::string type_name(const SimpleType& t) {
    return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

std::string classical_alias(const SimpleType& t) {
    switch (t.family) {
        case Family::A: return "SU" + std::to_string(t.rank + 1);
        case Family::B: return "Spin" + std::to_string(2 * t.rank + 1);
        case Family::C: return "Sp" + std::to_string(t.rank);
        case Family::D: return "Spin" + std::to_string(2 * t.rank);
        default: return type_name(t);
    }
}

} // namespace looprep
