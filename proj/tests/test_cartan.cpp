#include <doctest.h>

#include "kmk/cartan.hpp"
#include "kmk/errors.hpp"

using namespace kmk;

namespace {

// Independent minor oracle: determinant by cofactor expansion over rationals.
Rat det_cofactor(const std::vector<std::vector<long long>>& m) {
    size_t n = m.size();
    if (n == 1) return Rat(m[0][0]);
    Rat acc(0);
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<long long>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Rat term = Rat(m[0][j]) * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace

TEST_CASE("validate classifies rank-1 and rank-2 matrices") {
    CartanDatum a1 = CartanDatum::validate({{2}});
    CHECK(a1.kind() == AlgebraKind::Finite);
    CHECK(a1.symmetrizer(0) == 1);

    // det = 0 and kernel (1,1): untwisted affine A1~
    std::vector<std::vector<long long>> a1t{{2, -2}, {-2, 2}};
    CHECK(det_cofactor(a1t) == Rat(0));
    CartanDatum aff = CartanDatum::validate(a1t);
    CHECK(aff.kind() == AlgebraKind::UntwistedAffine);
    CHECK(aff.marks() == std::vector<long long>{1, 1});
    CHECK(aff.dual_marks() == std::vector<long long>{1, 1});

    std::vector<std::vector<long long>> a2{{2, -1}, {-1, 2}};
    CHECK(det_cofactor(a2) > Rat(0));
    CHECK(CartanDatum::validate(a2).kind() == AlgebraKind::Finite);
}

TEST_CASE("validate rejects bad input") {
    CHECK_THROWS_AS(CartanDatum::validate({{1}}), NotGCM);
    CHECK_THROWS_AS(CartanDatum::validate({{2, 1}, {1, 2}}), NotGCM);
    CHECK_THROWS_AS(CartanDatum::validate({{2, -1}, {0, 2}}), NotGCM);
    // indefinite type
    CHECK_THROWS_AS(CartanDatum::validate({{2, -3}, {-3, 2}}), UnsupportedType);
    // twisted affine A2(2)
    CHECK_THROWS_AS(CartanDatum::validate({{2, -4}, {-1, 2}}), UnsupportedType);
    // decomposable
    CHECK_THROWS_AS(CartanDatum::validate({{2, 0}, {0, 2}}), UnsupportedType);
    // non-symmetrizable 3-cycle with asymmetric weights
    CHECK_THROWS_AS(CartanDatum::validate({{2, -1, -2}, {-2, 2, -1}, {-1, -2, 2}}), NotSymmetrizable);
}

TEST_CASE("named data and symmetrizers") {
    CartanDatum a2 = CartanDatum::from_name("A2");
    CHECK(a2.rank() == 2);
    CHECK(a2.symmetrizer(0) == 1);
    CHECK(a2.symmetrizer(1) == 1);

    CartanDatum b2 = CartanDatum::from_name("B2");
    CHECK(b2.cartan(0, 1) == -1);
    CHECK(b2.cartan(1, 0) == -2);
    // d_i A_ij symmetric
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(b2.symmetrizer(i) * b2.cartan(i, j) == b2.symmetrizer(j) * b2.cartan(j, i));

    CartanDatum g2 = CartanDatum::from_name("G2");
    CHECK(g2.simple_norm2(0) == Rat(2));      // long root
    CHECK(g2.simple_norm2(1) == Rat(2, 3));   // short root

    CHECK_THROWS_AS(CartanDatum::from_name("Z9"), UnsupportedType);
    CHECK_THROWS_AS(CartanDatum::from_name("E9"), UnsupportedType);
}

TEST_CASE("untwisted extensions carry the expected marks") {
    CartanDatum a2t = CartanDatum::from_name("A2~");
    CHECK(a2t.rank() == 3);
    CHECK(a2t.marks() == std::vector<long long>{1, 1, 1});
    CHECK(a2t.delta_height() == 3);

    CartanDatum c2t = CartanDatum::from_name("C2~");
    CHECK(c2t.kind() == AlgebraKind::UntwistedAffine);
    // theta = 2 alpha_1 + alpha_2 in C2
    CHECK(c2t.marks() == std::vector<long long>{1, 2, 1});

    CartanDatum g2t = CartanDatum::from_name("G2~");
    CHECK(g2t.marks() == std::vector<long long>{1, 2, 3});

    CartanDatum d4t = CartanDatum::from_name("D4~");
    CHECK(d4t.marks() == std::vector<long long>{1, 1, 2, 1, 1});

    // A.a = 0 componentwise
    for (const auto& d : {a2t, c2t, g2t, d4t})
        for (int i = 0; i < d.rank(); ++i) {
            long long acc = 0;
            for (int j = 0; j < d.rank(); ++j) acc += d.cartan(i, j) * d.marks()[static_cast<size_t>(j)];
            CHECK(acc == 0);
        }
}

TEST_CASE("bilinear form: normalization, symmetry, null root") {
    CartanDatum a2 = CartanDatum::from_name("A2");
    RootVector a1({1, 0}), a12({1, 1});
    CHECK(a2.bilinear(a1, a1) == Rat(2));
    CHECK(a2.bilinear(a1, RootVector({0, 1})) == Rat(-1));

    // (rho, theta^vee) = 2 for A2: theta = alpha1 + alpha2
    Weight rho = a2.weyl_vector();
    CHECK(a2.coroot_pairing(rho, a12) == Rat(2));

    CartanDatum a1t = CartanDatum::from_name("A1~");
    Weight delta = a1t.root_to_weight(a1t.delta_vector());
    Weight alpha0 = a1t.root_to_weight(RootVector({1, 0}));
    CHECK(a1t.bilinear(delta, alpha0) == Rat(0));
    CHECK(a1t.bilinear(delta, delta) == Rat(0));
    Weight L0 = a1t.fundamental_weight(0);
    CHECK(a1t.bilinear(delta, L0) == Rat(1));
    CHECK(a1t.bilinear(L0, delta) == Rat(1));
    CHECK(a1t.bilinear(L0, L0) == Rat(0));

    // symmetry on an assortment of weights
    CartanDatum g2t = CartanDatum::from_name("G2~");
    std::vector<Weight> ws{g2t.weyl_vector(), g2t.fundamental_weight(0), g2t.fundamental_weight(2),
                           g2t.root_to_weight(RootVector({1, 2, 0})),
                           g2t.weight_from_labels({1, -2, 3}, Rat(2))};
    for (const auto& x : ws)
        for (const auto& y : ws) CHECK(g2t.bilinear(x, y) == g2t.bilinear(y, x));
}

TEST_CASE("weight/root conversion round trips") {
    for (const auto& name : {"A2", "B2", "G2", "A1~", "A2~", "C2~"}) {
        CartanDatum d = CartanDatum::from_name(name);
        RootVector r(std::vector<long long>(static_cast<size_t>(d.rank()), 0));
        for (int i = 0; i < d.rank(); ++i) r.c[static_cast<size_t>(i)] = i + 1;
        auto back = d.weight_to_root(d.root_to_weight(r));
        REQUIRE(back.has_value());
        CHECK(*back == r);
    }
    // weights off the root lattice have no root coordinates (affine level != 0)
    CartanDatum a1t = CartanDatum::from_name("A1~");
    CHECK_FALSE(a1t.weight_root_coords(a1t.fundamental_weight(0)).has_value());
}

TEST_CASE("root slices: A2 and A1~") {
    CartanDatum a2 = CartanDatum::from_name("A2");
    RootSlice s = a2.roots_up_to(2);
    REQUIRE(s.real_roots.size() == 3);
    CHECK(s.real_roots[0] == RootVector({0, 1}));
    CHECK(s.real_roots[1] == RootVector({1, 0}));
    CHECK(s.real_roots[2] == RootVector({1, 1}));
    CHECK(s.imaginary_roots.empty());

    CartanDatum a1t = CartanDatum::from_name("A1~");
    RootSlice s2 = a1t.roots_up_to(2);
    REQUIRE(s2.real_roots.size() == 2); // alpha0, alpha1; alpha0+alpha1 = delta is imaginary
    CHECK(s2.real_roots[0] == RootVector({0, 1}));
    CHECK(s2.real_roots[1] == RootVector({1, 0}));
    REQUIRE(s2.imaginary_roots.size() == 1);
    CHECK(s2.imaginary_roots[0] == RootVector({1, 1}));
    CHECK(s2.imaginary_multiplicity == 1);

    RootSlice s3 = a1t.roots_up_to(3);
    REQUIRE(s3.real_roots.size() == 4); // adds 2a0+a1 and a0+2a1
    CHECK(s3.real_roots[2] == RootVector({1, 2}));
    CHECK(s3.real_roots[3] == RootVector({2, 1}));

    // monotone in H as multisets
    for (const auto& r : s2.real_roots)
        CHECK(std::count(s3.real_roots.begin(), s3.real_roots.end(), r) == 1);
}

TEST_CASE("coroot height counts, exponents, degrees") {
    CartanDatum a1 = CartanDatum::from_name("A1");
    CHECK(a1.coroot_height_counts() == std::map<long long, long long>{{1, 1}});
    CHECK(a1.exponents() == std::vector<long long>{1});
    CHECK(a1.degrees() == std::vector<long long>{2});

    CartanDatum a2 = CartanDatum::from_name("A2");
    CHECK(a2.coroot_height_counts() == std::map<long long, long long>{{1, 2}, {2, 1}});
    CHECK(a2.exponents() == std::vector<long long>{1, 2});

    CartanDatum g2 = CartanDatum::from_name("G2");
    CHECK(g2.exponents() == std::vector<long long>{1, 5});
    auto p = g2.coroot_height_counts();
    long long total = 0;
    for (const auto& [j, pj] : p) total += pj;
    CHECK(total == 6); // #positive roots of G2

    CartanDatum b2 = CartanDatum::from_name("B2");
    CHECK(b2.exponents() == std::vector<long long>{1, 3});
    CHECK(b2.degrees() == std::vector<long long>{2, 4});

    CartanDatum a3 = CartanDatum::from_name("A3");
    CHECK(a3.exponents() == std::vector<long long>{1, 2, 3});
}

TEST_CASE("weyl vector and dominance predicates") {
    CartanDatum a1t = CartanDatum::from_name("A1~");
    Weight rho = a1t.weyl_vector();
    CHECK(rho.labels == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(rho.delta == Rat(0));
    CHECK(a1t.is_regular_dominant(rho));
    CHECK(a1t.is_dominant(a1t.zero_weight()));
    CHECK_FALSE(a1t.is_regular_dominant(a1t.fundamental_weight(0)));
    CHECK(a1t.level(a1t.fundamental_weight(0)) == Rat(1));
    CHECK(a1t.level(rho) == Rat(2)); // dual Coxeter number of A1~
}
