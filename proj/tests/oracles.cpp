#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace looprep::oracle {

namespace {

Mat reflection(const RootSystem& rs, const Vec& root) {
    const std::size_t d = rs.ambient_dim;
    Vec coroot = scale(Rat(2) / inner(rs, root, root), root);
    Mat m = identity_mat(d);
    for (std::size_t j = 0; j < d; ++j) {
        Vec e(d, Rat(0));
        e[j] = 1;
        Vec img = sub(e, scale(inner(rs, e, coroot), root));
        for (std::size_t i = 0; i < d; ++i) m[i][j] = img[i];
    }
    return m;
}

} // namespace

std::vector<Mat> enumerate_weyl_group(const RootSystem& rs) {
    std::vector<Mat> gens;
    for (const auto& a : rs.simple_roots) gens.push_back(reflection(rs, a));
    std::set<Mat> seen{identity_mat(rs.ambient_dim)};
    std::vector<Mat> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                Mat wg = mat_mul(g, w);
                if (seen.insert(wg).second) next.push_back(wg);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<Mat> diagram_preserving_elements(const RootSystem& rs) {
    std::set<Vec> nodes(rs.simple_roots.begin(), rs.simple_roots.end());
    nodes.insert(scale(Rat(-1), rs.highest_root));
    std::vector<Mat> out;
    for (const auto& w : enumerate_weyl_group(rs)) {
        bool preserves = true;
        for (const auto& n : nodes) preserves = preserves && nodes.count(mat_vec(w, n)) > 0;
        if (preserves) out.push_back(w);
    }
    return out;
}

std::vector<Vec> coset_ball(const RootSystem& rs, const Vec& mu, const Rat& slack) {
    const std::size_t n = rs.rank();
    const Rat bound = inner(rs, mu, mu) + slack;
    // coefficient box: |c_i| = |<x, lambda_i>| <= |x| |lambda_i|
    std::vector<long long> box(n);
    for (std::size_t i = 0; i < n; ++i) {
        double b2 = boost::rational_cast<double>(
            bound * inner(rs, rs.fundamental_weights[i], rs.fundamental_weights[i]));
        box[i] = static_cast<long long>(std::floor(std::sqrt(std::max(0.0, b2)))) + 1;
    }
    std::vector<Vec> found;
    IVec c(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, const Vec& acc) -> void {
        if (pos == n) {
            if (inner(rs, acc, acc) <= bound) found.push_back(acc);
            return;
        }
        for (long long k = -box[pos]; k <= box[pos]; ++k)
            self(self, pos + 1, add(acc, scale(Rat(k), rs.simple_coroots[pos])));
    };
    rec(rec, 0, mu);
    std::sort(found.begin(), found.end());
    return found;
}

Vec brute_minimal_representative(const RootSystem& rs, const Vec& mu) {
    auto ball = coset_ball(rs, mu, Rat(4));
    Rat best = inner(rs, ball.front(), ball.front());
    for (const auto& v : ball) best = std::min(best, inner(rs, v, v));
    for (const auto& v : ball) {
        if (inner(rs, v, v) != best) continue;
        bool dominant = true;
        for (const auto& a : rs.simple_roots)
            if (inner(rs, v, a) < Rat(0)) dominant = false;
        if (dominant) return v;
    }
    throw std::logic_error("no dominant vector among the minimal ones");
}

std::vector<CommutatorMap> brute_admissible_forms(const RootSystem& rs,
                                                  const CentralSubgroup& z, long long level,
                                                  long long den) {
    const std::size_t m = z.size();
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) cells.emplace_back(i, j);
    std::vector<CommutatorMap> found;
    CommutatorMap f = make_form(rs, z, level);
    const FormChecker checker(rs, z, level);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == cells.size()) {
            if (checker.table_admissible(f.table)) {
                if (!is_admissible(rs, f)) throw std::logic_error("checker disagrees");
                found.push_back(f);
            }
            return;
        }
        auto [i, j] = cells[pos];
        for (long long k = 0; k < den; ++k) {
            f.table[i][j] = Rat(k, den);
            f.table[j][i] = mod1(-f.table[i][j]);
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end(),
              [](const CommutatorMap& a, const CommutatorMap& b) { return a.table < b.table; });
    return found;
}

} // namespace looprep::oracle
