#include "looprep/alcove.hpp"
#include "looprep/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace looprep;

namespace {

std::vector<SimpleType> types_up_to(int max_rank) {
    std::vector<SimpleType> t;
    for (int n = 1; n <= max_rank; ++n) t.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) t.push_back({Family::B, n});
    for (int n = 1; n <= max_rank; ++n) t.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) t.push_back({Family::D, n});
    if (max_rank >= 6) t.push_back({Family::E, 6});
    if (max_rank >= 4) t.push_back({Family::F, 4});
    if (max_rank >= 2) t.push_back({Family::G, 2});
    return t;
}

AlcoveWeight w_of(IVec labels, long long level) { return AlcoveWeight{std::move(labels), level}; }

} // namespace

TEST_CASE("extended diagram shapes") {
    RootSystem a1 = build({Family::A, 1});
    ExtendedDiagram da1 = extended_diagram(a1);
    CHECK(da1.pairing[0][1] == -2);
    CHECK(da1.pairing[1][0] == -2);
    CHECK(da1.bond(0, 1) == 4);

    RootSystem d4 = build({Family::D, 4});
    ExtendedDiagram dd4 = extended_diagram(d4);
    for (std::size_t j = 1; j <= 4; ++j) CHECK(dd4.bond(0, j) == (j == 2 ? 1 : 0));

    RootSystem c2 = build({Family::C, 2});
    ExtendedDiagram dc2 = extended_diagram(c2);
    CHECK(dc2.bond(0, 1) == 2);
    CHECK(dc2.bond(1, 2) == 2);
    CHECK(dc2.bond(0, 2) == 0);
    CHECK(dc2.pairing[0][1] == -2); // <alpha_0, alpha_1^vee>, arrow towards the short root
    CHECK(dc2.node_len2[0] > dc2.node_len2[1]);

    // restriction to nodes 1..n is the Cartan matrix
    for (const auto& t : types_up_to(5)) {
        RootSystem rs = build(t);
        ExtendedDiagram dia = extended_diagram(rs);
        for (std::size_t i = 0; i < rs.rank(); ++i)
            for (std::size_t j = 0; j < rs.rank(); ++j)
                CHECK(dia.pairing[i + 1][j + 1] == rs.cartan[i][j]);
    }
}

TEST_CASE("weyl elements for the classical families") {
    // SU_n: powers of the cyclic node shift
    for (int n : {2, 3, 5}) {
        RootSystem rs = build({Family::A, n - 1});
        CentralSubgroup z = center(rs);
        for (std::size_t k = 1; k < z.size(); ++k) {
            WeylElement w = weyl_element(rs, z.elements[k]);
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
                CHECK(w.node_permutation[j] == (j + k) % n);
        }
    }
    // B_n: the sign change theta_1 -> -theta_1 swapping alpha_0, alpha_1
    RootSystem b3 = build({Family::B, 3});
    WeylElement wb = weyl_element(b3, center(b3).elements[1]);
    CHECK(wb.node_permutation == std::vector<std::size_t>{1, 0, 2, 3});
    Mat sign = identity_mat(3);
    sign[0][0] = -1;
    CHECK(wb.matrix == sign);

    // C_n: theta_i -> -theta_{n+1-i}
    RootSystem c3 = build({Family::C, 3});
    WeylElement wc = weyl_element(c3, center(c3).elements[1]);
    CHECK(wc.node_permutation == std::vector<std::size_t>{3, 2, 1, 0});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(wc.matrix[i][j] == Rat(i + j == 2 ? -1 : 0));
}

TEST_CASE("even D weyl elements factor through the stated reflections") {
    for (int n : {4, 6}) {
        RootSystem rs = build({Family::D, n});
        CentralSubgroup z = center(rs);
        // w_1 = sigma_{theta_1+theta_n} sigma_{theta_1-theta_n}
        Vec plus = zero_vec(n), minus = zero_vec(n);
        plus[0] = 1;
        plus[n - 1] = 1;
        minus[0] = 1;
        minus[n - 1] = -1;
        auto reflect = [&](const Vec& root, const Vec& x) {
            return sub(x, scale(inner(rs, x, root), root)); // long roots are their own coroots
        };
        WeylElement w1 = weyl_element(rs, z.elements[1]);
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
            Vec e = zero_vec(n);
            e[j] = 1;
            CHECK(mat_vec(w1.matrix, e) == reflect(plus, reflect(minus, e)));
        }
        CHECK(w1.node_permutation[0] == 1);
        CHECK(w1.node_permutation[static_cast<std::size_t>(n) - 1] ==
              static_cast<std::size_t>(n));
    }
}

TEST_CASE("odd D weyl elements act as the stated 4-cycle") {
    RootSystem d5 = build({Family::D, 5});
    CentralSubgroup z = center(d5); // cyclic, generated by lambda_5
    WeylElement wn = weyl_element(d5, z.elements[1]);      // rep lambda_5
    WeylElement wn1 = weyl_element(d5, z.elements[3]);     // rep lambda_4
    // w_{n-1} is the cycle (alpha_1 alpha_n alpha_0 alpha_{n-1}); w_n its inverse
    CHECK(wn1.node_permutation[1] == 5);
    CHECK(wn1.node_permutation[5] == 0);
    CHECK(wn1.node_permutation[0] == 4);
    CHECK(wn1.node_permutation[4] == 1);
    CHECK(wn.node_permutation[5] == 1);
    CHECK(wn.node_permutation[1] == 4);
    CHECK(wn.node_permutation[4] == 0);
    CHECK(wn.node_permutation[0] == 5);
}

TEST_CASE("weyl elements against the brute-forced diagram stabilizer") {
    for (const auto& t : types_up_to(4)) {
        CAPTURE(type_name(t));
        RootSystem rs = build(t);
        auto w0 = oracle::diagram_preserving_elements(rs);
        CHECK(w0.size() == static_cast<std::size_t>(rs.center_order));
        CentralSubgroup z = center(rs);
        std::set<Mat> images;
        for (const auto& e : z.elements) {
            WeylElement w = weyl_element(rs, e);
            images.insert(w.matrix);
            bool in_w0 = false;
            for (const auto& m : w0) in_w0 = in_w0 || m == w.matrix;
            CHECK(in_w0);
            if (e.special_index != 0) {
                Vec alpha0 = scale(Rat(-1), rs.highest_root);
                CHECK(mat_vec(w.matrix, alpha0) == rs.simple_roots[e.special_index - 1]);
            }
        }
        CHECK(images.size() == z.size()); // the map into W_0 is bijective
        // and it is a homomorphism
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t j = 0; j < z.size(); ++j) {
                Mat lhs = mat_mul(weyl_element(rs, z.elements[i]).matrix,
                                  weyl_element(rs, z.elements[j]).matrix);
                CHECK(lhs == weyl_element(rs, z.elements[z.product[i][j]]).matrix);
            }
    }
}

TEST_CASE("alcove enumeration") {
    RootSystem a1 = build({Family::A, 1});
    auto al = alcove(a1, 2);
    CHECK(al == std::vector<AlcoveWeight>{w_of({0}, 2), w_of({1}, 2), w_of({2}, 2)});

    RootSystem a2 = build({Family::A, 2});
    CHECK(alcove(a2, 1) ==
          std::vector<AlcoveWeight>{w_of({0, 0}, 1), w_of({0, 1}, 1), w_of({1, 0}, 1)});

    CHECK(alcove(build({Family::D, 4}), 2).size() == 11);
    CHECK(alcove(build({Family::C, 2}), 3).size() == 10);
    CHECK(alcove(a2, 0).size() == 1);
    CHECK_THROWS_AS(alcove(a2, -1), DomainError);

    // lexicographic order
    auto weights = alcove(build({Family::B, 3}), 3);
    CHECK(std::is_sorted(weights.begin(), weights.end()));
}

TEST_CASE("action examples") {
    RootSystem a1 = build({Family::A, 1});
    CentralElement g = center(a1).elements[1];
    CHECK(act(a1, g, 2, w_of({0}, 2)) == w_of({2}, 2));
    CHECK(act(a1, g, 2, w_of({1}, 2)) == w_of({1}, 2));
    CHECK(act(a1, g, 2, w_of({2}, 2)) == w_of({0}, 2));
    CHECK(act(a1, center(a1).elements[0], 2, w_of({1}, 2)) == w_of({1}, 2));
    CHECK_THROWS_AS(act(a1, g, 2, w_of({3}, 2)), DomainError);

    RootSystem a2 = build({Family::A, 2});
    CentralElement g2 = center(a2).elements[1];
    CHECK(act(a2, g2, 1, w_of({0, 0}, 1)) == w_of({1, 0}, 1));

    RootSystem b3 = build({Family::B, 3});
    CentralElement gb = center(b3).elements[1];
    // A_1(mu) = (l - mu_1, mu_2, mu_3) on coordinates
    CHECK(act(b3, gb, 2, w_of({0, 0, 0}, 2)) == act_classical(b3, gb, 2, w_of({0, 0, 0}, 2)));
    CHECK(act(b3, gb, 2, w_of({0, 0, 0}, 2)) == w_of({2, 0, 0}, 2));

    CHECK_THROWS_AS(act_classical(build({Family::G, 2}), center(build({Family::G, 2})).elements[0],
                                  1, w_of({0, 0}, 1)),
                    DomainError);
}

TEST_CASE("E7 action laws at small level") {
    RootSystem rs = build({Family::E, 7});
    CentralSubgroup z = center(rs);
    for (long long level = 0; level <= 2; ++level) {
        for (const auto& lam : alcove(rs, level)) {
            AlcoveWeight img = act(rs, z.elements[1], level, lam);
            CHECK(act(rs, z.elements[1], level, img) == lam); // order 2
        }
        for (const auto& orb : orbits(rs, z, level))
            CHECK(orb.members.size() * orb.stabilizer.size() == z.size());
    }
}

TEST_CASE("action agrees with the coordinate formulas on a spot sample") {
    for (const auto& t : std::vector<SimpleType>{{Family::A, 3},
                                                 {Family::B, 2},
                                                 {Family::C, 3},
                                                 {Family::D, 3},
                                                 {Family::D, 4},
                                                 {Family::D, 5}}) {
        CAPTURE(type_name(t));
        RootSystem rs = build(t);
        CentralSubgroup z = center(rs);
        for (long long level = 0; level <= 3; ++level)
            for (const auto& lam : alcove(rs, level))
                for (const auto& e : z.elements)
                    CHECK(act(rs, e, level, lam) == act_classical(rs, e, level, lam));
    }
}

TEST_CASE("action laws, order, affine-label equivariance") {
    for (const auto& t : types_up_to(4)) {
        CAPTURE(type_name(t));
        RootSystem rs = build(t);
        CentralSubgroup z = center(rs);
        for (long long level = 0; level <= 2; ++level) {
            auto weights = alcove(rs, level);
            for (const auto& lam : weights) {
                for (std::size_t i = 0; i < z.size(); ++i) {
                    AlcoveWeight zi = act(rs, z.elements[i], level, lam);
                    for (std::size_t j = 0; j < z.size(); ++j)
                        CHECK(act(rs, z.elements[j], level, zi) ==
                              act(rs, z.elements[z.product[j][i]], level, lam));
                    // applying z ord(z) times is the identity
                    AlcoveWeight acc = lam;
                    for (long long k = 0; k < z.element_orders[i]; ++k)
                        acc = act(rs, z.elements[i], level, acc);
                    CHECK(acc == lam);
                    // affine labels move by the diagram permutation
                    WeylElement w = weyl_element(rs, z.elements[i]);
                    IVec before = affine_labels(rs, lam);
                    IVec after = affine_labels(rs, zi);
                    for (std::size_t nidx = 0; nidx < before.size(); ++nidx)
                        CHECK(after[w.node_permutation[nidx]] == before[nidx]);
                }
            }
        }
    }
}

TEST_CASE("orbit partitions") {
    RootSystem a1 = build({Family::A, 1});
    CentralSubgroup z2 = center(a1);
    auto o2 = orbits(a1, z2, 2);
    REQUIRE(o2.size() == 2);
    CHECK(o2[0].members == std::vector<AlcoveWeight>{w_of({0}, 2), w_of({2}, 2)});
    CHECK(o2[0].stabilizer.name == "triv");
    CHECK(o2[1].members == std::vector<AlcoveWeight>{w_of({1}, 2)});
    CHECK(o2[1].stabilizer.name == "full");

    auto o1 = orbits(a1, z2, 1);
    REQUIRE(o1.size() == 1);
    CHECK(o1[0].members.size() == 2);
    CHECK(o1[0].stabilizer.name == "triv");

    RootSystem d4 = build({Family::D, 4});
    auto od = orbits(d4, center(d4), 2);
    REQUIRE(od.size() == 5);
    std::multiset<std::size_t> sizes;
    for (const auto& orb : od) sizes.insert(orb.members.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 2, 2, 4});
    bool found_fixed = false;
    for (const auto& orb : od)
        if (orb.members.size() == 1) {
            found_fixed = true;
            CHECK(orb.canonical() == w_of({0, 1, 0, 0}, 2));
            CHECK(orb.stabilizer.name == "full");
        }
    CHECK(found_fixed);

    // trivial subgroup: every weight is its own orbit
    auto ot = orbits(d4, subgroups(d4).front(), 2);
    CHECK(ot.size() == alcove(d4, 2).size());

    // fixed points of the full even-D centre exist only at even level
    for (int n : {4, 6, 8}) {
        RootSystem rs = build({Family::D, n});
        CentralSubgroup z = center(rs);
        for (long long level = 0; level <= 5; ++level) {
            bool fixed = false;
            for (const auto& orb : orbits(rs, z, level))
                fixed = fixed || orb.members.size() == 1;
            CHECK(fixed == (level % 2 == 0));
        }
    }
}

TEST_CASE("node permutations are diagram automorphisms") {
    for (const auto& t : types_up_to(6)) {
        CAPTURE(type_name(t));
        RootSystem rs = build(t);
        ExtendedDiagram dia = extended_diagram(rs);
        CentralSubgroup z = center(rs);
        std::set<std::vector<std::size_t>> perms;
        for (const auto& e : z.elements) {
            WeylElement w = weyl_element(rs, e);
            perms.insert(w.node_permutation);
            for (std::size_t i = 0; i < dia.node_count(); ++i) {
                CHECK(dia.node_len2[w.node_permutation[i]] == dia.node_len2[i]);
                for (std::size_t j = 0; j < dia.node_count(); ++j) {
                    CHECK(dia.bond(w.node_permutation[i], w.node_permutation[j]) ==
                          dia.bond(i, j));
                    CHECK(dia.pairing[w.node_permutation[i]][w.node_permutation[j]] ==
                          dia.pairing[i][j]);
                }
            }
        }
        CHECK(perms.size() == z.size()); // injective into the automorphisms
    }
}
