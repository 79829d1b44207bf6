#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace linf;
using namespace linf::testing;

namespace {

Cochain random_cochain(std::mt19937& rng, const GradedSpace& w, int arity,
                       Parity parity) {
    Cochain c(w);
    for (const Monomial& m : enumerate_monomials(w, arity))
        for (int t = 0; t < w.dim(); ++t) {
            if (w.parity(t) + m.parity(w) != parity) continue;
            if (rng() % 2) c.add_value(m, t, rand_rat(rng));
        }
    return c;
}

}  // namespace

TEST_SUITE("cochain") {

TEST_CASE("basis cochains carry the factorial normalization") {
    GradedSpace w10 = sp10();
    Cochain phi2 = phi_k(w10, 2);
    const auto* v = phi2.value(mono(w10, "e^2"));
    REQUIRE(v);
    CHECK(v->at(0) == 2);  // phi_2(e^2) = 2! e
    CHECK(phi2.value(mono(w10, "e^3")) == nullptr);

    GradedSpace w11 = sp11();
    Cochain p4e = psie(w11, 4);
    const auto* v2 = p4e.value(mono(w11, "e^3 f"));
    REQUIRE(v2);
    CHECK(v2->at(0) == 6);  // psi^4_e(e^3 f) = 3! e
    CHECK(psie(w11, 4).parity() == Parity::odd);
    CHECK(phie(w11, 3).parity() == Parity::even);

    CHECK_THROWS_AS(Cochain::basis(w10, mono(w10, "e"), 5), NameError);
}

TEST_CASE("tilde lift on the pinned examples") {
    GradedSpace w10 = sp10();
    Cochain id1 = phi_k(w10, 1);
    for (int n = 1; n <= 5; ++n) {
        SignedMonomialSum s =
            tilde_apply(id1, mono(w10, "e^" + std::to_string(n)));
        REQUIRE(s.size() == 1);
        CHECK(s.begin()->second == n);
    }

    SignedMonomialSum s2 = tilde_apply(phi_k(w10, 2), mono(w10, "e^3"));
    REQUIRE(s2.size() == 1);
    CHECK(s2.begin()->first == mono(w10, "e^2"));
    CHECK(s2.begin()->second == 6);

    GradedSpace w02 = sp02();
    SignedMonomialSum s3 = tilde_apply(psi_i(w02, 1), mono(w02, "f1 f2"));
    REQUIRE(s3.size() == 1);
    CHECK(s3.begin()->first == mono(w02, "f1"));
    CHECK(s3.begin()->second == 1);
}

TEST_CASE("tilde is a coderivation for the coproduct") {
    // coproduct(tilde(phi)(m)) = (tilde(phi) (x) I + I (x) tilde(phi))
    // applied to coproduct(m), for degrees <= 4
    std::mt19937 rng(555);
    for (const GradedSpace& w : {sp11(), sp02(), sp20()}) {
        for (int arity = 1; arity <= 2; ++arity) {
            for (Parity p : {Parity::even, Parity::odd}) {
                Cochain phi = random_cochain(rng, w, arity, p);
                if (phi.is_zero()) continue;
                for (int deg = 2; deg <= 4; ++deg) {
                    for (const Monomial& m : enumerate_monomials(w, deg)) {
                        std::map<std::pair<Monomial, Monomial>, Rat> lhs, rhs;
                        for (const auto& [mm, c] : tilde_apply(phi, m))
                            for (const auto& [c2, a, b] : coproduct(w, mm))
                                lhs[{a, b}] += c * c2;
                        for (const auto& [c, a, b] : coproduct(w, m)) {
                            // tilde(phi) (x) I
                            for (const auto& [am, c2] : tilde_apply(phi, a))
                                rhs[{am, b}] += c * c2;
                            // I (x) tilde(phi), phi crossing a
                            int cross =
                                sign_pow(phi.parity(), a.parity(w));
                            for (const auto& [bm, c2] : tilde_apply(phi, b))
                                rhs[{a, bm}] += cross * c * c2;
                        }
                        for (auto it = lhs.begin(); it != lhs.end();)
                            it = it->second == 0 ? lhs.erase(it) : ++it;
                        for (auto it = rhs.begin(); it != rhs.end();)
                            it = it->second == 0 ? rhs.erase(it) : ++it;
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("one-dimensional even space bracket constants") {
    // [phi_k, phi_l] = (k - l) phi_{k+l-1} for 1 <= k, l <= 8
    GradedSpace w = sp10();
    ArityWindow win(1, 15);
    for (int k = 1; k <= 8; ++k)
        for (int l = 1; l <= 8; ++l) {
            Cochain br = bracket(phi_k(w, k), phi_k(w, l), win);
            Cochain expect = Rat(k - l) * phi_k(w, k + l - 1);
            CHECK(br == expect);
        }
}

TEST_CASE("completely odd two-dimensional space bracket table") {
    GradedSpace w = sp02();
    ArityWindow win(1, 4);
    auto phi = [&](int i, int j) { return phi_ij(w, i, j); };
    auto psi = [&](int i) { return psi_i(w, i); };
    auto br = [&](const Cochain& a, const Cochain& b) {
        return bracket(a, b, win);
    };
    Cochain zero(w);

    CHECK(br(phi(1, 1), phi(1, 1)) == zero);
    CHECK(br(phi(1, 1), phi(1, 2)) == Rat(-1) * phi(1, 2));
    CHECK(br(phi(1, 1), phi(2, 1)) == phi(2, 1));
    CHECK(br(phi(1, 2), phi(2, 1)) == phi(2, 2) - phi(1, 1));
    CHECK(br(phi(1, 1), phi(2, 2)) == zero);
    CHECK(br(phi(1, 2), phi(2, 2)) == Rat(-1) * phi(1, 2));
    CHECK(br(phi(2, 1), phi(2, 2)) == phi(2, 1));
    CHECK(br(phi(1, 1), psi(1)) == zero);
    CHECK(br(phi(1, 2), psi(1)) == psi(2));
    CHECK(br(phi(2, 1), psi(1)) == zero);
    CHECK(br(phi(2, 2), psi(1)) == Rat(-1) * psi(1));
    CHECK(br(phi(1, 1), psi(2)) == Rat(-1) * psi(2));
    CHECK(br(phi(1, 2), psi(2)) == zero);
    CHECK(br(phi(2, 1), psi(2)) == psi(1));
    CHECK(br(phi(2, 2), psi(2)) == zero);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) CHECK(br(psi(i), psi(j)) == zero);
}

TEST_CASE("1|1 space bracket table families") {
    GradedSpace w = sp11();
    ArityWindow win(1, 14);
    Cochain zero(w);
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            int s = m + n - 1;
            CHECK(bracket(phie(w, m), phie(w, n), win) ==
                  Rat(m - n) * phie(w, s));
            CHECK(bracket(phie(w, m), phif(w, n), win) ==
                  Rat(1 - n) * phif(w, s));
            CHECK(bracket(phif(w, m), phif(w, n), win) == zero);
            CHECK(bracket(phie(w, m), psie(w, n), win) ==
                  Rat(m - n + 1) * psie(w, s));
            CHECK(bracket(phif(w, m), psie(w, n), win) ==
                  Rat(-1) * psie(w, s));
            CHECK(bracket(phie(w, m), psif(w, n), win) ==
                  Rat(-n) * psif(w, s));
            CHECK(bracket(phif(w, m), psif(w, n), win) == psif(w, s));
            CHECK(bracket(psie(w, m), psif(w, n), win) ==
                  phie(w, s) + Rat(n) * phif(w, s));
            CHECK(bracket(psie(w, m), psie(w, n), win) == zero);
            CHECK(bracket(psif(w, m), psif(w, n), win) == zero);
        }
}

TEST_CASE("h^k bracket table for the L-family") {
    GradedSpace w = sp11();
    ArityWindow win(1, 12);
    for (int L = 2; L <= 4; ++L)
        for (int k = 1; k <= 4; ++k)
            for (int l = 1; l <= 4; ++l) {
                int s = k + l - 1;
                CHECK(bracket(hk(w, k, L), hk(w, l, L), win) ==
                      Rat(k - l) * hk(w, s, L));
                CHECK(bracket(hk(w, k, L), psie(w, l), win) ==
                      Rat(L - l) * psie(w, s));
                CHECK(bracket(hk(w, k, L), phif(w, l), win) ==
                      Rat(1 - l) * phif(w, s));
                CHECK(bracket(hk(w, k, L), psif(w, l), win) ==
                      Rat(k - l - L + 1) * psif(w, s));
                // [psi^k_e, psi^l_f] = h^{k+l-1} + (L-k) phi^{k+l-1}_f
                CHECK(bracket(psie(w, k), psif(w, l), win) ==
                      hk(w, s, L) + Rat(L - k) * phif(w, s));
            }
}

TEST_CASE("two-dimensional even space bracket constants") {
    // [phi_{I,k}, phi_{J,l}] = i_l phi_{J+(I-l),k} - j_k phi_{I+(J-k),l}
    GradedSpace w = sp20();
    ArityWindow win(1, 8);
    auto phiI = [&](int i1, int i2, int t) {
        return Cochain::basis(
            w, make_monomial(w, {{0, i1}, {1, i2}}), t - 1);
    };
    for (int i1 = 0; i1 <= 2; ++i1)
        for (int i2 = 0; i2 <= 2 - i1 + 1; ++i2) {
            if (i1 + i2 < 1) continue;
            for (int j1 = 0; j1 <= 2; ++j1)
                for (int j2 = 0; j2 <= 2; ++j2) {
                    if (j1 + j2 < 1) continue;
                    for (int k = 1; k <= 2; ++k)
                        for (int l = 1; l <= 2; ++l) {
                            Cochain lhs = bracket(phiI(i1, i2, k),
                                                  phiI(j1, j2, l), win);
                            Cochain rhs(w);
                            int il = (l == 1) ? i1 : i2;
                            if (il > 0) {
                                int a1 = j1 + i1 - (l == 1 ? 1 : 0);
                                int a2 = j2 + i2 - (l == 2 ? 1 : 0);
                                rhs += Rat(il) * phiI(a1, a2, k);
                            }
                            int jk = (k == 1) ? j1 : j2;
                            if (jk > 0) {
                                int b1 = i1 + j1 - (k == 1 ? 1 : 0);
                                int b2 = i2 + j2 - (k == 2 ? 1 : 0);
                                rhs -= Rat(jk) * phiI(b1, b2, l);
                            }
                            CHECK(lhs == rhs);
                        }
                }
        }
}

TEST_CASE("bracket is graded antisymmetric") {
    std::mt19937 rng(808);
    ArityWindow win(1, 8);
    for (const GradedSpace& w : {sp11(), sp02(), sp20(), sp01()}) {
        for (int trial = 0; trial < 6; ++trial) {
            int ka = 1 + static_cast<int>(rng() % 4);
            int kb = 1 + static_cast<int>(rng() % 4);
            Parity pa = rng() % 2 ? Parity::odd : Parity::even;
            Parity pb = rng() % 2 ? Parity::odd : Parity::even;
            Cochain a = random_cochain(rng, w, ka, pa);
            Cochain b = random_cochain(rng, w, kb, pb);
            if (a.is_zero() || b.is_zero()) continue;
            int sgn = sign_pow(a.parity(), b.parity());
            CHECK(bracket(a, b, win) ==
                  Rat(-sgn) * bracket(b, a, win));
        }
    }
}

TEST_CASE("bracket satisfies the graded Jacobi identity") {
    // (-1)^{|a||c|}[[a,b],c] + (-1)^{|b||a|}[[b,c],a]
    //   + (-1)^{|c||b|}[[c,a],b] = 0
    std::mt19937 rng(909);
    ArityWindow win(1, 9);
    for (const GradedSpace& w : {sp11(), sp02()}) {
        for (int trial = 0; trial < 8; ++trial) {
            Cochain a = random_cochain(rng, w, 1 + rng() % 3,
                                       rng() % 2 ? Parity::odd : Parity::even);
            Cochain b = random_cochain(rng, w, 1 + rng() % 3,
                                       rng() % 2 ? Parity::odd : Parity::even);
            Cochain c = random_cochain(rng, w, 1 + rng() % 3,
                                       rng() % 2 ? Parity::odd : Parity::even);
            if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
            Cochain sum =
                Rat(sign_pow(a.parity(), c.parity())) *
                    bracket(bracket(a, b, win), c, win) +
                Rat(sign_pow(b.parity(), a.parity())) *
                    bracket(bracket(b, c, win), a, win) +
                Rat(sign_pow(c.parity(), b.parity())) *
                    bracket(bracket(c, a, win), b, win);
            // truncation can cut inner brackets: compare on arities that
            // are fully represented
            ArityWindow safe(1, 5);
            Cochain truncated(w);
            for (const auto& [m, vec] : sum.terms())
                if (safe.contains(m.degree()))
                    for (const auto& [t, v] : vec)
                        truncated.add_value(m, t, v);
            CHECK(truncated == Cochain(w));
        }
    }
}

TEST_CASE("composition bracket agrees with the word-formula oracle") {
    std::mt19937 rng(616);
    ArityWindow win(1, 7);
    int done = 0;
    while (done < 200) {
        const GradedSpace w = (done % 3 == 0)   ? sp11()
                              : (done % 3 == 1) ? sp02()
                                                : sp20();
        int ka = 1 + static_cast<int>(rng() % 3);
        int kb = 1 + static_cast<int>(rng() % 3);
        Parity pa = rng() % 2 ? Parity::odd : Parity::even;
        Parity pb = rng() % 2 ? Parity::odd : Parity::even;
        Cochain a = random_cochain(rng, w, ka, pa);
        Cochain b = random_cochain(rng, w, kb, pb);
        if (a.is_zero() || b.is_zero()) continue;
        ++done;
        Cochain br = bracket(a, b, win);
        int n = ka + kb - 1;
        for (const Monomial& m : enumerate_monomials(w, n)) {
            std::map<int, Rat> oracle = word_bracket_value(a, ka, b, kb, m);
            const auto* got = br.value(m);
            std::map<int, Rat> engine = got ? *got : std::map<int, Rat>{};
            CHECK(engine == oracle);
        }
    }
}

TEST_CASE("bracket coefficients are stable when the window grows") {
    GradedSpace w = sp10();
    Cochain small = bracket(phi_k(w, 2), phi_k(w, 3), ArityWindow(1, 5));
    Cochain large = bracket(phi_k(w, 2), phi_k(w, 3), ArityWindow(1, 9));
    CHECK(small == large);  // the result sits at arity 4 either way
}

TEST_CASE("differential and codifferential checks") {
    GradedSpace w02 = sp02();
    ArityWindow win(1, 4);
    Cochain d = psi_i(w02, 1);
    // D = [psi_1, .], so D(phi^1_2) = -[phi^1_2, psi_1] = -psi_2
    CHECK(differential(d, phi_ij(w02, 1, 2), win) == Rat(-1) * psi_i(w02, 2));
    CHECK(bracket(phi_ij(w02, 1, 2), d, win) == psi_i(w02, 2));

    GradedSpace w11 = sp11();
    ArityWindow win11(1, 10);
    for (int L = 1; L <= 4; ++L)
        for (int k = 1; k <= 4; ++k)
            CHECK(differential(psie(w11, L), psie(w11, k), win11) ==
                  Cochain(w11));

    // D^2 = 0 for random arguments
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 10; ++trial) {
        Cochain x = random_cochain(rng, w11, 1 + rng() % 3,
                                   rng() % 2 ? Parity::odd : Parity::even);
        Cochain d2 = psie(w11, 2);
        Cochain dd = differential(d2, differential(d2, x, win11), win11);
        // drop arities whose first application was cut by the window
        Cochain safe(w11);
        for (const auto& [m, vec] : dd.terms())
            if (m.degree() <= win11.hi - 2)
                for (const auto& [t, v] : vec) safe.add_value(m, t, v);
        CHECK(safe == Cochain(w11));
    }

    CHECK(check_codifferential(psie(w11, 3), win11).ok);
    CHECK(check_codifferential(psif(w11, 2), win11).ok);

    Cochain mixed = psie(w11, 2) + psif(w11, 3);
    CodifferentialCheck chk = check_codifferential(mixed, ArityWindow(1, 6));
    CHECK(!chk.ok);
    CHECK(chk.parity_ok);
    CHECK(!chk.residual.is_zero());

    CHECK(!check_codifferential(phie(w11, 2), win11).ok);
    CHECK(!check_codifferential(phie(w11, 2), win11).parity_ok);
}

TEST_CASE("cocycle brackets stay cocycles") {
    GradedSpace w02 = sp02();
    ArityWindow win(1, 4);
    Cochain d = psi_i(w02, 1);
    std::vector<Cochain> cocycles{phi_ij(w02, 1, 1), phi_ij(w02, 2, 1),
                                  psi_i(w02, 1), psi_i(w02, 2)};
    for (const Cochain& x : cocycles)
        for (const Cochain& y : cocycles) {
            Cochain b = bracket(x, y, win);
            CHECK(differential(d, b, win) == Cochain(w02));
        }

    GradedSpace w11 = sp11();
    ArityWindow win11(1, 9);
    int L = 3;
    Cochain d11 = psie(w11, L);
    std::vector<Cochain> cz;
    for (int k = 1; k < L; ++k) {
        cz.push_back(hk(w11, k, L));
        cz.push_back(psie(w11, k));
    }
    for (const Cochain& x : cz)
        for (const Cochain& y : cz) {
            Cochain b = bracket(x, y, ArityWindow(1, 5));
            CHECK(differential(d11, b, win11) == Cochain(w11));
        }
}

TEST_CASE("Jacobi correspondence on all-odd spaces") {
    GradedSpace w02 = sp02();
    CHECK(jacobi_correspondence(psi_i(w02, 1)));
    CHECK(jacobi_correspondence(Cochain(w02)));

    // On a 0|3 space a generic arity-2 structure violates Jacobi.
    GradedSpace w03 = sp03();
    std::mt19937 rng(11);
    bool found_bad = false, found_good = false;
    for (int trial = 0; trial < 60 && !(found_bad && found_good); ++trial) {
        Cochain d = random_cochain(rng, w03, 2, Parity::odd);
        if (d.is_zero()) continue;
        bool ok = jacobi_correspondence(d);
        bool square = check_codifferential(d, ArityWindow(1, 3)).residual
                          .is_zero();
        CHECK(ok == square);
        if (ok) found_good = true;
        if (!ok) found_bad = true;
    }
    CHECK(found_bad);

    CHECK_THROWS_AS(jacobi_correspondence(phie(sp11(), 2)), MismatchError);
}

}  // TEST_SUITE
