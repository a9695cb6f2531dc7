#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "../support/gen.hpp"
#include "newtonsys/core/bipoly.hpp"
#include "newtonsys/core/decompose.hpp"
#include "newtonsys/core/sturm.hpp"

using namespace newtonsys;

namespace {

RatPoly X() { return RatPoly::x(); }
RatPoly C(long a, long b = 1) { return RatPoly::constant(rat(a, b)); }

// Builds prod (x - r) over distinct rationals times prod (x^2 + c) with c > 0;
// the number of real roots is known by construction.
struct Planted {
    RatPoly poly;
    std::vector<Rational> roots;
};

Planted planted(testgen::Gen& g) {
    std::set<Rational> roots;
    const int k = g.integer(0, 4);
    while (static_cast<int>(roots.size()) < k) roots.insert(g.rational(6, 3));
    RatPoly p = C(g.integer(1, 3) * (g.coin() ? 1 : -1));
    for (const auto& r : roots) {
        const int mult = g.integer(1, 2);
        for (int m = 0; m < mult; ++m) p *= (X() - RatPoly::constant(r));
    }
    for (int q = g.integer(0, 2); q > 0; --q) {
        const Rational c = g.nonzero_rational(4);
        p *= (X() * X() + RatPoly::constant(c * c));
    }
    return {p, {roots.begin(), roots.end()}};
}

}  // namespace

TEST(Rational, CanonicalForm) {
    const Rational r = rat(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(to_fraction_string(rat(0, 5)), "0/1");
    EXPECT_EQ(to_fraction_string(rat(3)), "3/1");
    EXPECT_EQ(parse_rational("10/4"), rat(5, 2));
    EXPECT_THROW(parse_rational("1/0"), InputError);
}

TEST(Reverse, Examples) {
    const RatPoly p{rat(-1), 0, 0, rat(-1)};
    EXPECT_EQ(reverse(p, 3), p);
    EXPECT_EQ(reverse(-X(), 5), RatPoly::monomial(-1, 4));
    EXPECT_TRUE(reverse(RatPoly{}, 4).is_zero());
    EXPECT_THROW(reverse(X() * X(), 1), InputError);
}

TEST(Reverse, Involution) {
    testgen::Gen g(11);
    for (int t = 0; t < 200; ++t) {
        RatPoly p = g.poly(6);
        if (p.coeff(0) == 0) p += C(1);
        const int n = std::max(p.degree(), 0) + g.integer(0, 3);
        EXPECT_EQ(reverse(reverse(p, n), n), p);
    }
}

TEST(Calculus, DerivativeOfAntiderivative) {
    testgen::Gen g(12);
    for (int t = 0; t < 200; ++t) {
        const RatPoly p = g.poly(8);
        EXPECT_EQ(derivative(antiderivative(p)), p);
        EXPECT_EQ(antiderivative(p).coeff(0), 0);
    }
}

TEST(Arithmetic, DivmodReconstructs) {
    testgen::Gen g(13);
    for (int t = 0; t < 200; ++t) {
        const RatPoly a = g.poly(7);
        RatPoly b = g.poly(4);
        if (b.is_zero()) b = C(1);
        auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(Arithmetic, GcdOfPlantedFactor) {
    testgen::Gen g(14);
    for (int t = 0; t < 100; ++t) {
        const RatPoly common = X() - RatPoly::constant(g.rational());
        const RatPoly a = common * (X() * X() + C(1));
        const RatPoly b = common * (X() - RatPoly::constant(g.rational() + 100));
        EXPECT_EQ(gcd(a, b), common);
    }
}

TEST(Arithmetic, ComposeMatchesEvaluation) {
    testgen::Gen g(15);
    for (int t = 0; t < 100; ++t) {
        const RatPoly a = g.poly(4), b = g.poly(3);
        const Rational x = g.rational();
        EXPECT_EQ(compose(a, b)(x), a(b(x)));
    }
}

TEST(Sturm, SpecExamples) {
    EXPECT_EQ(sturm_real_root_count(X() * X() * X() + X()), 1);
    EXPECT_EQ(sturm_real_root_count(X() * X() - C(2), Interval::positive()), 1);
    EXPECT_EQ(sturm_real_root_count(X() * X() + X() + C(1)), 0);
    EXPECT_THROW(sturm_real_root_count(RatPoly{}), std::domain_error);
}

TEST(Sturm, Endpoints) {
    const RatPoly p = (X() - C(1)) * (X() - C(2)) * (X() - C(3));
    EXPECT_EQ(sturm_real_root_count(p, {Endpoint::open(1), Endpoint::open(3)}), 1);
    EXPECT_EQ(sturm_real_root_count(p, {Endpoint::closed_at(1), Endpoint::open(3)}), 2);
    EXPECT_EQ(sturm_real_root_count(p, {Endpoint::closed_at(1), Endpoint::closed_at(3)}), 3);
    EXPECT_EQ(sturm_real_root_count(p, {Endpoint::closed_at(2), Endpoint::closed_at(2)}), 1);
    EXPECT_EQ(sturm_real_root_count(p, {Endpoint::infinite(), Endpoint::open(2)}), 1);
}

// Oracle: roots are planted, so the count is known independently.
TEST(Sturm, PlantedRootCounts) {
    testgen::Gen g(16);
    for (int t = 0; t < 300; ++t) {
        const auto pl = planted(g);
        if (pl.poly.degree() < 1) continue;
        EXPECT_EQ(sturm_real_root_count(pl.poly), static_cast<int>(pl.roots.size())) << pl.poly;
        const long pos = std::count_if(pl.roots.begin(), pl.roots.end(), [](const Rational& r) { return r > 0; });
        EXPECT_EQ(sturm_real_root_count(pl.poly, Interval::positive()), pos);
    }
}

// Oracle: exact sign-change scan on a grid finer than the root separation.
TEST(Sturm, GridScanAgreesOnSeparatedRoots) {
    testgen::Gen g(17);
    for (int t = 0; t < 100; ++t) {
        std::set<int> ints;
        const int k = g.integer(1, 4);
        while (static_cast<int>(ints.size()) < k) ints.insert(g.integer(-10, 10));
        RatPoly p = C(1);
        for (int r : ints) p *= (RatPoly{rat(-2 * r - 1, 2), Rational(1)});  // roots at r + 1/2
        p *= (X() * X() + C(1));
        int changes = 0;
        int last = 0;
        for (int i = -24; i <= 24; ++i) {
            const int s = sign(p(Rational(i)));
            if (s != 0 && last != 0 && s != last) ++changes;
            if (s != 0) last = s;
        }
        EXPECT_EQ(sturm_real_root_count(p), changes);
    }
}

TEST(DoubleRoot, SpecExamples) {
    const auto a = double_root_factor(X() * (X() - C(1)) * (X() - C(1)));
    ASSERT_EQ(a.pattern, RootPattern::Double);
    EXPECT_EQ(*a.phi, 1);
    EXPECT_EQ(a.multiplicity, 2);
    EXPECT_EQ(double_root_factor(-X() * X() * X() - X()).pattern, RootPattern::NoNonzeroRealRoots);
    EXPECT_EQ(double_root_factor(X() * X() - C(1)).pattern, RootPattern::SimpleExists);
    EXPECT_EQ(double_root_factor(pow(X() - C(2), 3)).pattern, RootPattern::Other);
    EXPECT_EQ(double_root_factor(pow(X() - C(2), 2) * pow(X() + C(1), 2)).pattern, RootPattern::Other);
}

TEST(DoubleRoot, PropertyAtReportedRoot) {
    testgen::Gen g(18);
    int doubles = 0;
    for (int t = 0; t < 300; ++t) {
        const Rational phi = g.nonzero_rational();
        RatPoly p = pow(X(), static_cast<unsigned>(g.integer(0, 2))) * pow(X() - RatPoly::constant(phi), 2) *
                    RatPoly::constant(g.nonzero_rational());
        if (g.coin()) p *= (X() * X() + C(g.integer(1, 4)));
        const auto r = double_root_factor(p);
        ASSERT_EQ(r.pattern, RootPattern::Double);
        ++doubles;
        EXPECT_EQ(*r.phi, phi);
        EXPECT_EQ(p(*r.phi), 0);
        EXPECT_EQ(derivative(p)(*r.phi), 0);
        EXPECT_NE(derivative(derivative(p))(*r.phi), 0);
    }
    EXPECT_EQ(doubles, 300);
}

TEST(Decompose, SpecExamples) {
    const auto d4 = decompose_complete(pow(X(), 4));
    ASSERT_EQ(d4.size(), 1u);
    EXPECT_EQ(d4[0].h, X() * X());
    EXPECT_EQ(d4[0].g, X() * X());

    const RatPoly f6 = pow(X(), 6) + C(2) * pow(X(), 3);
    const auto d6 = decompose_complete(f6);
    bool found = false;
    for (const auto& d : d6)
        if (d.h == pow(X(), 3)) {
            found = true;
            EXPECT_EQ(d.g, X() * X() + C(2) * X());
        }
    EXPECT_TRUE(found);

    EXPECT_TRUE(decompose_complete(pow(X(), 3) + X()).empty());
    EXPECT_THROW(decompose_complete(X()), std::domain_error);
}

// Oracle: compose random (g,h) and check that a right component of deg h is recovered.
TEST(Decompose, RecoversPlantedComposition) {
    testgen::Gen g(19);
    for (int t = 0; t < 150; ++t) {
        RatPoly outer = g.poly(3);
        while (outer.degree() < 2) outer = g.poly(3);
        RatPoly inner = g.poly(3);
        while (inner.degree() < 2) inner = g.poly(3);
        const RatPoly F = compose(outer, inner);
        const auto ds = decompose_complete(F);
        bool found = false;
        for (const auto& d : ds) {
            EXPECT_EQ(compose(d.g, d.h), F);
            EXPECT_EQ(d.h.coeff(0), 0);
            EXPECT_EQ(d.h.coeff(d.h.valuation()), 1);
            if (d.h.degree() == inner.degree()) found = true;
        }
        EXPECT_TRUE(found) << F;
    }
}

TEST(BiPoly, TranslateAndNegate) {
    testgen::Gen g(20);
    for (int t = 0; t < 100; ++t) {
        const BiRatPoly p = g.bipoly(6, 4, 4);
        const Rational c = g.rational(), u = g.rational(), v = g.rational();
        EXPECT_EQ(p.translate_v(c)(u, v), p(u, v + c));
        EXPECT_EQ(p.negate_u()(u, v), p(-u, v));
        EXPECT_EQ(p.negate_v()(u, v), p(u, -v));
    }
}
