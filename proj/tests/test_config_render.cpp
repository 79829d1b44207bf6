#include "doctest.h"
#include "helpers.hpp"

#include "linf/config.hpp"
#include "linf/render.hpp"

using namespace linf;
using namespace linf::testing;

TEST_SUITE("config_render") {

TEST_CASE("a full configuration parses to the expected objects") {
    std::string text = R"(# the cubic structure
space even: e
space odd: f
diff: e^2 f -> e
window: 1..9
max-order: 4
format: latex
)";
    JobConfig cfg = parse_config(text);
    CHECK(cfg.space == sp11());
    CHECK(cfg.window.has_value());
    CHECK(cfg.window->hi == 9);
    CHECK(cfg.max_order == 4);
    CHECK(cfg.format == Format::latex);
    CHECK(cfg.effective_truncation() == 6);
    CHECK(cfg.differential.augmented() == psie(sp11(), 3));
}

TEST_CASE("diagnostics carry positions and specifics") {
    // odd basis vector squared
    try {
        parse_config("space odd: f1 f2\ndiff: f1^2 -> f1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("squared") != std::string::npos);
    }
    // unknown basis name
    try {
        parse_config("space odd: f1 f2\ndiff: g -> f1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("unknown basis name") !=
              std::string::npos);
    }
    // an even differential term
    try {
        parse_config("space odd: f1 f2\ndiff: f1 -> f1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("parity") != std::string::npos);
    }
    // undeclared parameter
    try {
        parse_config("space odd: f1 f2\ndiff: f1 f2 -> f1 * q\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("unknown name") !=
              std::string::npos);
    }
    // division by a non-unit
    try {
        parse_config(
            "space odd: f1 f2\nparams even: t1\n"
            "diff: f1 f2 -> f1 * (1 / t1)\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("non-unit") != std::string::npos);
    }
    // parameters may not shadow basis names
    CHECK_THROWS_AS(parse_config("space odd: f\nparams even: f\n"),
                    ParseError);
}

TEST_CASE("coefficient expressions support series division") {
    std::string text = R"(space odd: f1 f2
params even: t1
diff: f1 f2 -> f1 * (1 + t1)
diff: f1 -> f2 * t1 / (1 + t1)
truncation-degree: 3
)";
    JobConfig cfg = parse_config(text);
    RingPtr r = cfg.ring;
    ParamPoly t1 = ParamPoly::gen(r, "t1");
    ParamPoly series = truncate(
        poly_mul(t1, invert_unit(ParamPoly::constant(r, 1) + t1, 3)), 3);
    GradedSpace w = cfg.space;
    CHECK(cfg.differential.coefficient(
              {mono(w, "f1"), w.index_of("f2")}) == series);
    CHECK(cfg.differential.coefficient(
              {mono(w, "f1 f2"), w.index_of("f1")}) ==
          ParamPoly::constant(r, 1) + t1);
}

TEST_CASE("renderer uses the established notation per space") {
    Format p = Format::plain, l = Format::latex;
    GradedSpace w11 = sp11();
    CHECK(key_name(w11, {mono(w11, "e^3"), 0}, p) == "psi^3_e" + std::string());
    CHECK(key_name(w11, {mono(w11, "e^3"), w11.index_of("e")}, p) ==
          "phi^3_e");
    CHECK(key_name(w11, {mono(w11, "e^2 f"), w11.index_of("e")}, p) ==
          "psi^3_e");
    CHECK(key_name(w11, {mono(w11, "e^2 f"), w11.index_of("f")}, l) ==
          "\\varphi^{3}_{f}");
    GradedSpace w02 = sp02();
    CHECK(key_name(w02, {mono(w02, "f1"), w02.index_of("f2")}, p) ==
          "phi^1_2");
    CHECK(key_name(w02, {mono(w02, "f1 f2"), w02.index_of("f1")}, l) ==
          "\\psi_{1}");
    GradedSpace w10 = sp10();
    CHECK(key_name(w10, {mono(w10, "e^4"), 0}, l) == "\\varphi_{4}");
    GradedSpace w20 = sp20();
    CHECK(key_name(w20, {mono(w20, "e1^2 e2"), 1}, p) == "phi_(2,1),2");
    GradedSpace w03 = sp03();
    CHECK(key_name(w03, {mono(w03, "f1 f2"), 2}, p) == "c[f1 f2 -> f3]");

    CHECK(param_name("th12", l) == "\\theta_{12}");
    CHECK(param_name("t3", l) == "t_{3}");
    CHECK(param_name("u1", l) == "u1");
}

TEST_CASE("deformation rendering matches the printed cubic formula") {
    GradedSpace w = sp11();
    Deformation defm = miniversal(psie(w, 3), 4, ArityWindow(1, 9));
    std::string latex = deformation_string(defm, Format::latex);
    CHECK(latex.find("d = \\psi^{3}_{e} + h^{1} \\theta_{1} + h^{2} "
                     "\\theta_{2} + \\psi^{1}_{e} t_{1} + \\psi^{2}_{e} "
                     "t_{2} + \\varphi^{1}_{f} \\theta_{2}t_{2}") !=
          std::string::npos);
    CHECK(latex.find("\\theta_{1}\\theta_{2} = 0") != std::string::npos);
    std::string plain = deformation_string(defm, Format::plain);
    CHECK(plain.find("status: miniversal at order 2") != std::string::npos);
}

TEST_CASE("empty relation sets render as such") {
    GradedSpace w = sp01();
    Deformation defm = miniversal(Cochain(w), 3, ArityWindow(1, 1));
    std::string s = deformation_string(defm, Format::plain);
    CHECK(s.find("no relations") != std::string::npos);
}

TEST_CASE("structured deformation output round-trips") {
    GradedSpace w = sp11();
    for (int L : {2, 3, 4}) {
        Deformation defm = miniversal(psie(w, L), 6, ArityWindow(1, 9));
        std::string blob = deformation_structured(defm);
        Deformation back = deformation_from_structured(blob);
        CHECK(back.space == defm.space);
        CHECK(*back.ring == *defm.ring);
        CHECK(back.window.lo == defm.window.lo);
        CHECK(back.window.hi == defm.window.hi);
        CHECK(back.truncation_degree == defm.truncation_degree);
        CHECK(back.base == defm.base);
        CHECK(back.current == defm.current);
        CHECK(back.order == defm.order);
        CHECK(back.status == defm.status);
        REQUIRE(back.relations.size() == defm.relations.size());
        for (size_t i = 0; i < back.relations.size(); ++i)
            CHECK(back.relations[i] == defm.relations[i]);
        REQUIRE(back.deltas.size() == defm.deltas.size());
        for (size_t i = 0; i < back.deltas.size(); ++i) {
            CHECK(back.deltas[i].rep == defm.deltas[i].rep);
            CHECK(back.deltas[i].param_name == defm.deltas[i].param_name);
        }
    }
}

TEST_CASE("structured parameter cochains round-trip") {
    GradedSpace w = sp02();
    RingPtr r = std::make_shared<ParamRing>(
        std::vector<std::string>{"t1"}, std::vector<std::string>{"th1"});
    ParamCochain pc(w, r);
    pc.add_cochain(psi_i(w, 1),
                   ParamPoly::constant(r, 1) + ParamPoly::gen(r, "t1"));
    pc.add_cochain(phi_ij(w, 1, 1), ParamPoly::gen(r, "th1"));
    std::string blob = param_cochain_structured(pc, ArityWindow(1, 2), 4);
    CHECK(param_cochain_from_structured(blob) == pc);
}

}  // TEST_SUITE
