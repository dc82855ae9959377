#include "looprep/errors.hpp"
#include "looprep/rootsys.hpp"

#include <doctest.h>

#include <random>

using namespace looprep;

namespace {

std::vector<SimpleType> standard_types(int max_rank) {
    std::vector<SimpleType> t;
    for (int n = 1; n <= max_rank; ++n) t.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) t.push_back({Family::B, n});
    for (int n = 1; n <= max_rank; ++n) t.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) t.push_back({Family::D, n});
    for (int n = 6; n <= std::min(8, max_rank); ++n) t.push_back({Family::E, n});
    if (max_rank >= 4) t.push_back({Family::F, 4});
    if (max_rank >= 2) t.push_back({Family::G, 2});
    return t;
}

std::size_t expected_root_count(const SimpleType& t) {
    const std::size_t n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1);
        case Family::B:
        case Family::C: return 2 * n * n;
        case Family::D: return 2 * n * (n - 1);
        case Family::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
        case Family::F: return 48;
        case Family::G: return 12;
    }
    return 0;
}

long long expected_center_order(const SimpleType& t) {
    switch (t.family) {
        case Family::A: return t.rank + 1;
        case Family::B:
        case Family::C: return 2;
        case Family::D: return 4;
        case Family::E: return t.rank == 6 ? 3 : (t.rank == 7 ? 2 : 1);
        default: return 1;
    }
}

} // namespace

TEST_CASE("rank validation") {
    CHECK_THROWS_AS(build({Family::A, 0}), UsageError);
    CHECK_THROWS_AS(build({Family::B, 1}), UsageError);
    CHECK_THROWS_AS(build({Family::D, 2}), UsageError);
    CHECK_THROWS_AS(build({Family::E, 5}), UsageError);
    CHECK_THROWS_AS(build({Family::F, 3}), UsageError);
    CHECK_THROWS_AS(build({Family::G, 3}), UsageError);
    CHECK(build({Family::C, 1}).rank() == 1);
}

TEST_CASE("group name grammar") {
    CHECK(parse_group_name("A5") == SimpleType{Family::A, 5});
    CHECK(parse_group_name("su6") == SimpleType{Family::A, 5});
    CHECK(parse_group_name("Spin7") == SimpleType{Family::B, 3});
    CHECK(parse_group_name("SPIN8") == SimpleType{Family::D, 4});
    CHECK(parse_group_name("Sp2") == SimpleType{Family::C, 2});
    CHECK(parse_group_name("e6") == SimpleType{Family::E, 6});
    CHECK_THROWS_AS(parse_group_name("H3"), UsageError);
    CHECK_THROWS_AS(parse_group_name("SU1"), UsageError);
    CHECK_THROWS_AS(parse_group_name("Spin4"), UsageError);
    CHECK_THROWS_AS(parse_group_name(""), UsageError);
    CHECK(classical_alias({Family::D, 4}) == "Spin8");
    CHECK(type_name({Family::E, 7}) == "E7");
}

TEST_CASE("construction invariants across all types") {
    for (const auto& t : standard_types(8)) {
        CAPTURE(type_name(t));
        RootSystem rs = build(t);
        CHECK(rs.all_roots.size() == expected_root_count(t));
        CHECK(rs.center_order == expected_center_order(t));
        CHECK(inner(rs, rs.highest_root, rs.highest_root) == Rat(2));
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            Rat c2 = inner(rs, rs.simple_coroots[i], rs.simple_coroots[i]);
            CHECK(is_even_integer(c2));
            for (std::size_t j = 0; j < rs.rank(); ++j) {
                Rat d = Rat(i == j ? 1 : 0);
                CHECK(inner(rs, rs.fundamental_weights[i], rs.simple_coroots[j]) == d);
                CHECK(inner(rs, rs.fundamental_coweights[i], rs.simple_roots[j]) == d);
            }
        }
        // theta = sum m_i alpha_i, coordinatewise
        Vec theta = zero_vec(rs.ambient_dim);
        for (std::size_t i = 0; i < rs.rank(); ++i)
            theta = add(theta, scale(Rat(rs.marks[i]), rs.simple_roots[i]));
        CHECK(theta == rs.highest_root);
        if (rs.simply_laced()) CHECK(rs.marks == rs.comarks);
        // gram is symmetric positive definite: leading principal minors > 0
        for (std::size_t k = 1; k <= rs.rank(); ++k) {
            Mat minor(k, Vec(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) minor[i][j] = rs.gram[i][j];
            CHECK(det(minor) > Rat(0));
        }
    }
}

TEST_CASE("family-specific Cartan data") {
    RootSystem a1 = build({Family::A, 1});
    CHECK(inner(a1, a1.simple_roots[0], a1.simple_roots[0]) == Rat(2));
    CHECK(a1.fundamental_coweights[0] == scale(Rat(1, 2), a1.simple_roots[0]));
    CHECK(a1.gram[0][0] == Rat(1, 2));

    RootSystem c3 = build({Family::C, 3});
    CHECK(c3.basic_scale == Rat(1, 2)); // half the standard product
    CHECK(c3.highest_root == Vec{2, 0, 0});
    CHECK(c3.comarks == IVec{1, 1, 1});

    for (int n : {4, 5, 6}) {
        RootSystem d = build({Family::D, n});
        IVec expect(n, 2);
        expect[0] = expect[n - 2] = expect[n - 1] = 1;
        CHECK(d.marks == expect);
    }

    RootSystem e6 = build({Family::E, 6});
    CHECK(inner(e6, e6.fundamental_coweights[5], e6.fundamental_coweights[5]) == Rat(4, 3));
    Vec l6 = {0, 0, 0, 0, 1, Rat(-1, 3), Rat(-1, 3), Rat(1, 3)};
    CHECK(e6.fundamental_coweights[5] == l6);

    RootSystem e7 = build({Family::E, 7});
    Vec l7 = {0, 0, 0, 0, 0, 1, Rat(-1, 2), Rat(1, 2)};
    CHECK(e7.fundamental_coweights[6] == l7);
    CHECK(inner(e7, l7, l7) == Rat(3, 2));
}

TEST_CASE("inner product") {
    for (const auto& t : standard_types(6)) {
        RootSystem rs = build(t);
        CHECK(inner(rs, rs.highest_root, rs.highest_root) == Rat(2));
        CHECK(inner(rs, rs.highest_root, zero_vec(rs.ambient_dim)) == Rat(0));
    }
    RootSystem b2 = build({Family::B, 2});
    CHECK_THROWS_AS(inner(b2, Vec{1, 2, 3}, b2.highest_root), DomainError);
}

TEST_CASE("dynkin label conversions") {
    RootSystem a2 = build({Family::A, 2});
    // labels (1,1) give the highest root theta_1 - theta_3
    CHECK(from_dynkin_labels(a2, {1, 1}) == Vec{1, 0, -1});
    CHECK(from_dynkin_labels(a2, {1, 1}) == a2.highest_root);
    CHECK(to_dynkin_labels(a2, a2.fundamental_weights[0]) == Vec{1, 0});

    RootSystem b2 = build({Family::B, 2});
    CHECK(to_dynkin_labels(b2, b2.highest_root) == Vec{0, 2});
    CHECK(from_dynkin_labels(b2, {0, 2}) == b2.highest_root);

    // mutually inverse on the weight lattice; A_n works modulo all-ones
    std::mt19937 rng(7);
    for (const auto& t : standard_types(5)) {
        RootSystem rs = build(t);
        for (int trial = 0; trial < 5; ++trial) {
            Vec labels(rs.rank());
            for (auto& x : labels) x = Rat(static_cast<long long>(rng() % 7) - 3);
            Vec w = from_dynkin_labels(rs, labels);
            CHECK(to_dynkin_labels(rs, w) == labels);
            CHECK(project_to_root_span(rs, w) == w);
        }
        Vec shifted = add(from_dynkin_labels(rs, Vec(rs.rank(), Rat(1))),
                          Vec(rs.ambient_dim, Rat(1)));
        CHECK(from_dynkin_labels(rs, to_dynkin_labels(rs, shifted)) ==
              project_to_root_span(rs, shifted));
    }
}

TEST_CASE("comark identity for random dominant weights") {
    std::mt19937 rng(11);
    for (const auto& t : standard_types(6)) {
        RootSystem rs = build(t);
        for (int trial = 0; trial < 10; ++trial) {
            Vec labels(rs.rank());
            Rat expected(0);
            for (std::size_t i = 0; i < rs.rank(); ++i) {
                long long n = rng() % 4;
                labels[i] = n;
                expected += Rat(n * rs.comarks[i]);
            }
            Vec w = from_dynkin_labels(rs, labels);
            CHECK(inner(rs, w, rs.highest_root) == expected);
        }
    }
}
