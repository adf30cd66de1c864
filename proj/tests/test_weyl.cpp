#include <doctest.h>

#include <random>
#include <set>

#include "kmk/errors.hpp"
#include "kmk/weyl.hpp"

using namespace kmk;

namespace {

// Independent oracle: the full orbit of a weight by unpruned closure.
std::set<Weight> full_orbit(const CartanDatum& d, const Weight& w, size_t cap = 4096) {
    std::set<Weight> orbit{w};
    std::vector<Weight> queue{w};
    while (!queue.empty()) {
        Weight x = queue.back();
        queue.pop_back();
        for (int i = 0; i < d.rank(); ++i) {
            Weight y = reflect(d, i, x);
            if (orbit.insert(y).second) queue.push_back(y);
            if (orbit.size() > cap) throw std::runtime_error("orbit oracle cap");
        }
    }
    return orbit;
}

} // namespace

TEST_CASE("simple reflections") {
    CartanDatum a2 = CartanDatum::from_name("A2");
    RootVector a1({1, 0});
    CHECK(reflect(a2, 0, a1) == RootVector({-1, 0}));
    Weight rho = a2.weyl_vector();
    CHECK(reflect(a2, 0, rho) == rho - a2.root_to_weight(a1));
    Weight l1 = a2.fundamental_weight(0);
    CHECK(reflect(a2, 0, l1) == l1 - a2.root_to_weight(a1));
    CHECK_THROWS_AS(reflect(a2, 2, rho), Error);
}

TEST_CASE("reflection involutivity and invariance on random weights") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long long> lab(-3, 3);
    for (const auto& name : {"A2", "B2", "A1~", "A2~"}) {
        CartanDatum d = CartanDatum::from_name(name);
        for (int iter = 0; iter < 40; ++iter) {
            std::vector<long long> labels(static_cast<size_t>(d.rank()));
            for (auto& x : labels) x = lab(rng);
            Weight w = d.weight_from_labels(labels, Rat(lab(rng)));
            std::vector<long long> labels2(static_cast<size_t>(d.rank()));
            for (auto& x : labels2) x = lab(rng);
            Weight v = d.weight_from_labels(labels2, Rat(lab(rng)));
            for (int i = 0; i < d.rank(); ++i) {
                CHECK(reflect(d, i, reflect(d, i, w)) == w);
                CHECK(d.bilinear(reflect(d, i, w), reflect(d, i, v)) == d.bilinear(w, v));
            }
        }
    }
}

TEST_CASE("to_dominant: A2 hand cases against the 6-element orbit oracle") {
    CartanDatum a2 = CartanDatum::from_name("A2");
    Weight rho = a2.weyl_vector();

    // already dominant: zero steps
    auto r = to_dominant(a2, rho);
    CHECK(r.dominant == rho);
    CHECK(r.sign == 1);
    CHECK(r.steps == 0);

    // -alpha1 lies in the orbit of theta = alpha1+alpha2, labels (1,1)
    Weight neg_a1 = a2.root_to_weight(RootVector({-1, 0}));
    CHECK(neg_a1.labels == std::vector<Rat>{Rat(-2), Rat(1)});
    auto r2 = to_dominant(a2, neg_a1);
    Weight theta_w = a2.root_to_weight(RootVector({1, 1}));
    CHECK(r2.dominant == theta_w);
    // the orbit oracle agrees that theta is the dominant representative
    auto orbit = full_orbit(a2, neg_a1);
    CHECK(orbit.size() == 6);
    CHECK(orbit.count(theta_w) == 1);
    for (const auto& w : orbit)
        if (w != theta_w) CHECK_FALSE(a2.is_dominant(w));

    // a singular weight: Lambda_1 has label 0 at node 2, so sign collapses to 0
    Weight l1 = a2.fundamental_weight(0);
    auto r3 = to_dominant(a2, l1);
    CHECK(r3.sign == 0);
    CHECK(r3.finite_stabilizer);
    auto r4 = to_dominant(a2, reflect(a2, 0, l1));
    CHECK(r4.dominant == l1);
    CHECK(r4.sign == 0);

    // regular orbit points carry the parity of their chamber
    Weight s1rho = reflect(a2, 0, rho);
    auto r5 = to_dominant(a2, s1rho);
    CHECK(r5.dominant == rho);
    CHECK(r5.sign == -1);
    CHECK(r5.steps == 1);
}

TEST_CASE("to_dominant is idempotent on its first output") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> lab(-4, 4);
    CartanDatum d = CartanDatum::from_name("A2~");
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<long long> labels(static_cast<size_t>(d.rank()));
        for (auto& x : labels) x = lab(rng);
        // keep positive level so the weight lies in the Tits cone
        labels[0] = 9;
        Weight w = d.weight_from_labels(labels);
        auto r = to_dominant(d, w);
        auto r2 = to_dominant(d, r.dominant);
        CHECK(r2.dominant == r.dominant);
        CHECK(r2.steps == 0);
    }
}

TEST_CASE("to_dominant guard trips outside the Tits cone") {
    CartanDatum a1t = CartanDatum::from_name("A1~");
    // level-zero non-delta weight: oscillates forever
    Weight bad = a1t.weight_from_labels({4, -4});
    CHECK_THROWS_AS(to_dominant(a1t, bad), NotInTitsCone);
}

TEST_CASE("stabilizer Poincare polynomials") {
    CartanDatum a2 = CartanDatum::from_name("A2");
    CHECK(stabilizer_poincare(a2, a2.weyl_vector()) == Poly::one());
    // full W(t) for S3: (1+t)(1+t+t^2)
    Poly full = stabilizer_poincare(a2, a2.zero_weight());
    CHECK(full == Poly({1, 2, 2, 1}));
    // one wall: {e, r2}
    CHECK(stabilizer_poincare(a2, a2.fundamental_weight(0)) == Poly({1, 1}));

    CartanDatum a1t = CartanDatum::from_name("A1~");
    CHECK(stabilizer_poincare(a1t, a1t.fundamental_weight(0)) == Poly({1, 1}));
    CHECK_THROWS_AS(stabilizer_poincare(a1t, a1t.zero_weight()), InfiniteStabilizer);

    CartanDatum b2 = CartanDatum::from_name("B2");
    // full W(t) for B2: (1+t)(1+t+t^2+t^3)
    CHECK(stabilizer_poincare(b2, b2.zero_weight()) == Poly({1, 1}) * Poly({1, 1, 1, 1}));
}

TEST_CASE("orbit_interval: rank-1 hand enumeration") {
    CartanDatum a1 = CartanDatum::from_name("A1");
    Weight top = a1.weight_from_labels({3});   // 3*omega = (2omega) + rho
    Weight floor = a1.weight_from_labels({1}); // rho
    auto pts = orbit_interval(a1, top, floor);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].weight == top);
    CHECK(pts[0].parity == 1);
    CHECK(pts[0].length == 0);

    // floor = top keeps only the top
    auto pts2 = orbit_interval(a1, top, top);
    REQUIRE(pts2.size() == 1);

    // dropping the floor to -3omega admits the reflected point
    auto pts3 = orbit_interval(a1, top, a1.weight_from_labels({-3}));
    REQUIRE(pts3.size() == 2);
    CHECK(pts3[1].parity == -1);
    CHECK(pts3[1].length == 1);
}

TEST_CASE("orbit_interval: A1~ three-point interval") {
    CartanDatum d = CartanDatum::from_name("A1~");
    Weight rho = d.weyl_vector();
    Weight floor = rho - d.root_to_weight(d.delta_vector());
    auto pts = orbit_interval(d, rho, floor);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].weight == rho);
    CHECK(pts[0].parity == 1);
    CHECK(pts[1].parity == -1);
    CHECK(pts[2].parity == -1);
    CHECK(pts[1].length == 1);
    CHECK(pts[2].length == 1);
}

TEST_CASE("orbit_interval: finite full orbit matches Poincare data") {
    for (const auto& name : {"A2", "B2"}) {
        CartanDatum d = CartanDatum::from_name(name);
        Weight rho = d.weyl_vector();
        // floor low enough (in rho + Q) to keep the whole orbit
        RootVector low(std::vector<long long>(static_cast<size_t>(d.rank()), 20));
        auto pts = orbit_interval(d, rho, rho - d.root_to_weight(low));
        Poly w_t = stabilizer_poincare(d, d.zero_weight());
        long long order = 0;
        for (long long c : w_t.coeffs()) order += c;
        CHECK(static_cast<long long>(pts.size()) == order);
        // sum of t^len equals W(t), sum of parity * t^len equals W(-t)
        Poly sum_t, sum_signed;
        std::set<Weight> distinct;
        for (const auto& p : pts) {
            sum_t += Poly::monomial(1, static_cast<int>(p.length));
            sum_signed += Poly::monomial(p.parity, static_cast<int>(p.length));
            distinct.insert(p.weight);
            CHECK(p.parity == (p.length % 2 == 0 ? 1 : -1));
        }
        CHECK(distinct.size() == pts.size());
        CHECK(sum_t == w_t);
        CHECK(sum_signed == w_t.negate_t());
    }
}

TEST_CASE("orbit_interval rejects non-regular tops and unrelated floors") {
    CartanDatum a2 = CartanDatum::from_name("A2");
    CHECK_THROWS_AS(orbit_interval(a2, a2.fundamental_weight(0), a2.zero_weight()),
                    NotRegularDominant);
    // floor not below top: empty
    CHECK(orbit_interval(a2, a2.weyl_vector(), a2.weight_from_labels({5, 5})).empty());
    // floor not in the root-lattice coset of top: empty
    CHECK(orbit_interval(a2, a2.weyl_vector(), a2.fundamental_weight(0)).empty());
}
