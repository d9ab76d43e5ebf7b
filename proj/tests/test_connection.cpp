#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "pvi/connection.hpp"

using namespace pvi;
using namespace pvi::connection;
using monodromy::MonodromyTriple;
using monodromy::equivalent;

namespace {

constexpr double kPi = std::numbers::pi;
const double kRt2 = std::sqrt(2.0);
const Complex kI(0.0, 1.0);

struct RandomCaseI {
    Complex sigma, a;
    Mu mu{0.3};
};

RandomCaseI random_case_i(std::mt19937& rng) {
    std::uniform_real_distribution<double> d01(0.0, 1.0);
    while (true) {
        RandomCaseI r;
        r.sigma = Complex(0.05 + 0.9 * d01(rng), 0.6 * (d01(rng) - 0.5));
        double mod = 0.1 + 9.9 * d01(rng);
        r.a = std::polar(mod, 2.0 * kPi * d01(rng));
        r.mu = Mu(Complex(0.15 + 0.7 * d01(rng), 0.4 * (d01(rng) - 0.5)));
        bool ill = false;
        if (classify_sigma(r.sigma, r.mu, &ill).kind == CaseKind::GenericI && !ill)
            return r;
    }
}

}  // namespace

TEST_CASE("sigma_from_x0 examples") {
    CHECK(std::abs(sigma_from_x0(0.0)) < 1e-14);
    CHECK(std::abs(sigma_from_x0(kRt2) - 0.5) < 1e-14);
    Complex s333 = sigma_from_x0(3.0);
    CHECK(std::abs(s333.real() - 1.0) < 1e-12);
    CHECK(std::abs(s333.imag() - 0.61267) < 5e-5);
    CHECK(std::abs(s333 - Complex(1.0, 0.6126979250600662)) < 1e-12);
    CHECK_THROWS_AS(sigma_from_x0(2.0), validation_error);
    CHECK_THROWS_AS(sigma_from_x0(-2.0), validation_error);
}

TEST_CASE("f and G factors") {
    Mu half(0.5);
    CHECK(std::abs(f_factor(0.5, half) - 1.0) < 1e-14);
    CHECK(std::abs(G_factor(0.5, half) - 1.0) < 1e-14);
    // pole of the case split at sigma = 2 mu (m = 0)
    Mu mu(0.3);
    CHECK_THROWS_AS(f_factor(0.6, mu), validation_error);
    CHECK_THROWS_AS(G_factor(0.6, mu), validation_error);
}

TEST_CASE("forward examples") {
    ForwardResult r = forward(0.5, 1.0, Mu(0.5));
    CHECK(r.tag.kind == CaseKind::GenericI);
    CHECK(equivalent(r.triple, {kRt2, 0.0, kRt2}, 1e-12));

    ForwardResult z = forward(0.0, 0.5, Mu(0.25));
    CHECK(z.tag.kind == CaseKind::ZeroII);
    CHECK(equivalent(z.triple, {0.0, 1.0, 1.0}, 1e-12));

    CHECK_THROWS_AS(forward(0.0, 0.5, Mu(1.0)), validation_error);  // degenerate family
}

TEST_CASE("forward sign freedom of sqrt(a)") {
    // Changing the sign of sqrt(a) flips both x1 and xinf: same class.
    Mu mu(0.37);
    Complex sigma(0.42, 0.13), a(1.3, -0.4);
    Complex f = f_factor(sigma, mu), G = G_factor(sigma, mu);
    Complex sa = -std::sqrt(a);  // the other branch
    MonodromyTriple flipped{2.0 * std::sin(0.5 * kPi * sigma),
                            kI * (sa / (f * G) - G / sa),
                            sa * std::exp(0.5 * kI * kPi * sigma) / (f * G) +
                                G * std::exp(-0.5 * kI * kPi * sigma) / sa};
    CHECK(equivalent(monodromy::canonicalize(flipped), forward(sigma, a, mu).triple, 1e-12));
}

TEST_CASE("forward output satisfies the relation") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 200; ++i) {
        RandomCaseI r = random_case_i(rng);
        ForwardResult fr = forward(r.sigma, r.a, r.mu);
        CHECK(relation_residual(fr.triple, r.mu) < 1e-10);
        CHECK(monodromy::is_admissible(fr.triple));
    }
}

TEST_CASE("inverse examples") {
    InverseResult a = inverse({kRt2, 0.0, kRt2}, Mu(0.5));
    CHECK(std::abs(a.cd.sigma - 0.5) < 1e-12);
    CHECK(std::abs(a.cd.a - 1.0) < 1e-12);
    CHECK(a.tag.kind == CaseKind::GenericI);

    InverseResult b = inverse({0.0, 1.0, 1.0}, Mu(0.25));
    CHECK(std::abs(b.cd.sigma) < 1e-12);
    CHECK(std::abs(b.cd.a - 0.5) < 1e-12);
    CHECK(b.tag.kind == CaseKind::ZeroII);

    InverseResult c = inverse({3.0, 3.0, 3.0}, Mu(-1.0));
    CHECK(std::abs(c.cd.sigma.real() - 1.0) < 1e-12);
    CHECK(std::abs(c.cd.sigma.imag() - 0.6126979250600662) < 1e-12);
    CHECK(std::abs(c.cd.a) > 1e-6);
    // frozen high-precision oracle for the quantum cohomology amplitude
    CHECK(std::abs(c.cd.a - Complex(-0.352521601564140607, -0.227050490768213380)) < 1e-12);

    CHECK_THROWS_AS(inverse({2.0, 0.5, 0.5}, Mu(0.3)), validation_error);
}

TEST_CASE("round trip inverse(forward) on 200 generic instances") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        RandomCaseI r = random_case_i(rng);
        ForwardResult fr = forward(r.sigma, r.a, r.mu);
        InverseResult ir = inverse(fr.triple, r.mu);
        CHECK(std::abs(ir.cd.sigma - r.sigma) < 1e-9 * (1.0 + std::abs(r.sigma)));
        CHECK(std::abs(ir.cd.a - r.a) < 1e-9 * std::abs(r.a));
    }
}

TEST_CASE("round trip forward(inverse) reproduces the canonical triple") {
    std::mt19937 rng(100);
    for (int i = 0; i < 50; ++i) {
        RandomCaseI r = random_case_i(rng);
        MonodromyTriple t = forward(r.sigma, r.a, r.mu).triple;
        InverseResult ir = inverse(t, r.mu);
        MonodromyTriple t2 = forward(ir.cd.sigma, ir.cd.a, r.mu).triple;
        CHECK(equivalent(t2, t, 1e-9));
    }
}

TEST_CASE("resonant mu: generic formulas verbatim") {
    for (Complex muv : {Complex(0.5), Complex(1.5), Complex(1.0), Complex(-1.0)}) {
        Mu mu(muv);
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> d01(0.0, 1.0);
        for (int i = 0; i < 25; ++i) {
            Complex sigma(0.05 + 0.9 * d01(rng), 0.5 * (d01(rng) - 0.5));
            Complex a = std::polar(0.2 + 3.0 * d01(rng), 2.0 * kPi * d01(rng));
            ForwardResult fr = forward(sigma, a, mu);
            CHECK(relation_residual(fr.triple, mu) < 1e-10);
            InverseResult ir = inverse(fr.triple, mu);
            CHECK(std::abs(ir.cd.sigma - sigma) < 1e-9);
            CHECK(std::abs(ir.cd.a - a) < 1e-9 * std::abs(a));
        }
    }
}

TEST_CASE("case III round trips") {
    struct Probe {
        double mu;
        double sigma;
        CaseKind want;
        int m;
    };
    const Probe probes[] = {
        {0.3, 0.6, CaseKind::III1, 0},    // sigma = 2 mu
        {1.2, 0.4, CaseKind::III2, -1},   // sigma = 2 mu - 2
        {0.8, 0.4, CaseKind::III3, 1},    // sigma = -2 mu + 2
        {-0.3, 0.6, CaseKind::III4, 0},   // sigma = -2 mu
    };
    for (const Probe& p : probes) {
        Mu mu(p.mu);
        Complex a(0.7, 0.3);
        ForwardResult fr = forward(p.sigma, a, mu);
        CHECK(fr.tag.kind == p.want);
        CHECK(fr.tag.m == p.m);
        CHECK(relation_residual(fr.triple, mu) < 1e-10);
        InverseResult ir = inverse(fr.triple, mu);
        CHECK(ir.tag.kind == p.want);
        CHECK(std::abs(ir.cd.sigma - p.sigma) < 1e-9);
        CHECK(std::abs(ir.cd.a - a) < 1e-9 * std::abs(a));
    }
}

TEST_CASE("connection at one and infinity") {
    MonodromyTriple t{kRt2, 0.0, kRt2};
    Mu half(0.5);

    InverseResult one = connect_at_one(t, half);
    CHECK(one.cd.point == CriticalPoint::one);
    CHECK(std::abs(one.cd.sigma) < 1e-12);
    CHECK(std::abs(one.cd.a - 0.5) < 1e-12);

    InverseResult inf = connect_at_infinity(t, half);
    CHECK(inf.cd.point == CriticalPoint::infinity);
    CHECK(std::abs(inf.cd.sigma - 0.5) < 1e-12);

    InverseResult third = connect_at_one({0.0, 1.0, 1.0}, Mu(0.25));
    CHECK(std::abs(third.cd.sigma - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("braid action on (sigma, a)") {
    CriticalData cd0{0.0, Complex(0.7, 0.1), CriticalPoint::zero};
    CriticalData b0 = braid_on_sigma_a(cd0);
    CHECK(std::abs(b0.a - cd0.a) < 1e-15);

    CriticalData cd1{0.5, 1.0, CriticalPoint::zero};
    CriticalData b1 = braid_on_sigma_a(cd1);
    CHECK(std::abs(b1.sigma - 0.5) < 1e-15);
    CHECK(std::abs(b1.a - Complex(-1.0)) < 1e-14);

    CriticalData wrong{0.5, 1.0, CriticalPoint::one};
    CHECK_THROWS_AS(braid_on_sigma_a(wrong), validation_error);
}

TEST_CASE("braid coherence through triple space") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        RandomCaseI r = random_case_i(rng);
        MonodromyTriple t = forward(r.sigma, r.a, r.mu).triple;
        MonodromyTriple tb = monodromy::braid_beta1_sq(t);
        InverseResult ir = inverse(tb, r.mu);
        Complex want = r.a * std::exp(-2.0 * kI * kPi * r.sigma);
        CHECK(std::abs(ir.cd.sigma - r.sigma) < 1e-9);
        CHECK(std::abs(ir.cd.a - want) < 1e-9 * std::abs(want));
    }
}

TEST_CASE("alias identity and Remark-2 law") {
    Mu half(0.5);
    MonodromyTriple t = forward(0.5, 1.0, half).triple;
    CriticalData cd{0.5, 1.0, CriticalPoint::zero};

    CriticalData same = alias(cd, 0, +1, t, half);
    CHECK(std::abs(same.a - cd.a) < 1e-15);

    CriticalData neg = alias(cd, 0, -1, t, half);
    CHECK(std::abs(neg.sigma + 0.5) < 1e-14);
    CHECK(std::abs(neg.a - 1.0 / 16.0) < 1e-12);
}

TEST_CASE("alias 16 a(s) a(-s) = 1 on 50 instances and involution") {
    std::mt19937 rng(8);
    int done = 0;
    while (done < 50) {
        RandomCaseI r = random_case_i(rng);
        if (std::abs(r.sigma.imag()) < 1e-3) continue;  // -sigma must leave the rays
        MonodromyTriple t = forward(r.sigma, r.a, r.mu).triple;
        CriticalData cd{r.sigma, r.a, CriticalPoint::zero};
        CriticalData neg;
        try {
            neg = alias(cd, 0, -1, t, r.mu);
        } catch (const validation_error&) {
            continue;  // -sigma collided with the case split
        }
        CHECK(std::abs(16.0 * r.a * neg.a - 1.0) < 1e-10);
        // alias back: a(-(-sigma)) recomputed from the same triple
        CriticalData back = alias(neg, 0, -1, t, r.mu);
        CHECK(std::abs(back.sigma - r.sigma) < 1e-12);
        CHECK(std::abs(back.a - r.a) < 1e-10 * std::abs(r.a));
        ++done;
    }
}

TEST_CASE("alias rejects real forbidden rays") {
    Mu mu(0.3);
    MonodromyTriple t = forward(0.4, 1.0, mu).triple;
    CriticalData cd{0.4, 1.0, CriticalPoint::zero};
    CHECK_THROWS_AS(alias(cd, 1, +1, t, mu), validation_error);   // 2.4 real
    CHECK_THROWS_AS(alias(cd, 0, -1, t, mu), validation_error);   // -0.4 real
}

TEST_CASE("compatibility X Y = 1 on 100 case-I instances") {
    std::mt19937 rng(55);
    for (int i = 0; i < 100; ++i) {
        RandomCaseI r = random_case_i(rng);
        MonodromyTriple t = forward(r.sigma, r.a, r.mu).triple;
        Complex sig = r.sigma;
        Complex f = f_factor(sig, r.mu);
        Complex F = F_factor(sig, r.mu);
        Complex ph = std::exp(-kI * kPi * sig);
        Complex x1sq = t.x1 * t.x1, xisq = t.xinf * t.xinf;
        Complex X = (2.0 * (1.0 + ph) - f * (x1sq + xisq * ph)) / (F * (ph * ph - 1.0));
        Complex Y = F * (f * ph * (ph * x1sq + xisq) - 2.0 * ph * (1.0 + ph)) /
                    (ph * ph - 1.0);
        CHECK(std::abs(X * Y - 1.0) < 1e-10);
    }
}

TEST_CASE("Picard monodromy formulas cross-check (nu1, nu2) = (1, 1/2)") {
    // x_i = -2 cos(pi r_i), r1 = nu2/2, r2 = 1 - nu1/2, r3 = (nu1 - nu2)/2
    // for Re nu1 > Re nu2.
    double nu1 = 1.0, nu2 = 0.5;
    MonodromyTriple picard{-2.0 * std::cos(kPi * nu2 / 2.0),
                           -2.0 * std::cos(kPi * (1.0 - nu1 / 2.0)),
                           -2.0 * std::cos(kPi * (nu1 - nu2) / 2.0)};
    // identification sigma = 1 - nu2, a = -(1/4) e^{i pi nu1} 16^{1 - nu2}
    Complex a = -0.25 * std::exp(kI * kPi * nu1) * std::pow(16.0, 1.0 - nu2);
    CHECK(std::abs(a - 1.0) < 1e-14);
    MonodromyTriple fwd = forward(1.0 - nu2, a, Mu(0.5)).triple;
    CHECK(equivalent(monodromy::canonicalize(picard), fwd, 1e-12));
}
