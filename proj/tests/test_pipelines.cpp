#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvar/pipelines.hpp"

using namespace charvar;

namespace {

EPoly cat(const std::string& id) { return Catalog::instance().lookup(id).epoly; }

EPoly intermediate(const ModuliResult& r, const std::string& name) {
    for (const auto& [n, p] : r.intermediates)
        if (n == name) return p;
    FAIL("missing intermediate ", name);
    return {};
}

// every total must equal the recombination of its intermediates; evaluation
// points give an independent second guard
void check_eval_guard(const EPoly& poly, const EPoly& recombined) {
    CHECK(poly == recombined);
    for (long long x : {2, 3, 5})
        CHECK(poly.eval(Integer(x)) == recombined.eval(Integer(x)));
}

}  // namespace

TEST_CASE("genus-1 table") {
    CHECK(genus1(Holonomy::Id).epoly == EPoly::desc({1, 0, 1}));
    CHECK(genus1(Holonomy::MinusId).epoly == EPoly::constant(1));
    CHECK(genus1(Holonomy::Jplus).epoly == EPoly::desc({1, -2, -3}));
    CHECK(genus1(Holonomy::Jminus).epoly == EPoly::desc({1, 3, 0}));
    CHECK(genus1(Holonomy::DiagLambda).epoly == EPoly::desc({1, 4, 1}));
    for (Holonomy h : {Holonomy::Id, Holonomy::MinusId, Holonomy::Jplus,
                       Holonomy::Jminus, Holonomy::DiagLambda}) {
        ModuliResult r = genus1(h);
        CHECK(r.epoly == cat(r.space));
        CHECK(r.discrepancies.empty());
    }
}

TEST_CASE("genus-1 intermediates recombine") {
    ModuliResult jm = genus1(Holonomy::Jminus);
    check_eval_guard(jm.epoly, intermediate(jm, "trace_zero_part") +
                                   intermediate(jm, "trace_nonzero_part"));
    ModuliResult dl = genus1(Holonomy::DiagLambda);
    check_eval_guard(intermediate(dl, "X4bar_lambda"),
                     dl.epoly * intermediate(dl, "stabilizer"));
}

TEST_CASE("genus-1 adjoint-group comparison") {
    CHECK(genus1_langlands(Holonomy::Id) == EPoly::desc({1, 0, 1}));
    CHECK(genus1_langlands(Holonomy::MinusId) == EPoly::constant(1));
    CHECK(genus1_langlands(Holonomy::Jplus) == EPoly::desc({1, -2, 0}));
    CHECK(genus1_langlands(Holonomy::Jminus) == EPoly::desc({1, 0, 0}));
    CHECK_THROWS_AS(genus1_langlands(Holonomy::DiagLambda), NotComputed);
    // the parabolic rows differ from the ordinary table: duality fails there
    CHECK(genus1_langlands(Holonomy::Jplus) != genus1(Holonomy::Jplus).epoly);
    CHECK(genus1_langlands(Holonomy::Jminus) != genus1(Holonomy::Jminus).epoly);
    CHECK(genus1_langlands(Holonomy::Id) == genus1(Holonomy::Id).epoly);
}

TEST_CASE("genus-1 mixed Hodge data") {
    MixedHodgeData id = genus1_mixed_hodge(Holonomy::Id);
    REQUIRE(id.hodge_numbers.size() == 2);
    CHECK(e_from_hodge_numbers(id.hodge_numbers) == genus1(Holonomy::Id).epoly);
    CHECK_FALSE(id.ambiguity_flag);

    MixedHodgeData jp = genus1_mixed_hodge(Holonomy::Jplus);
    CHECK(e_from_hodge_numbers(jp.hodge_numbers) ==
          genus1(Holonomy::Jplus).epoly);
    bool has4 = false;
    for (const HodgeNumber& h : jp.hodge_numbers)
        if (h.k == 1 && h.p == 0 && h.q == 0 && h.value == 4) has4 = true;
    CHECK(has4);

    MixedHodgeData jm = genus1_mixed_hodge(Holonomy::Jminus);
    CHECK(jm.ambiguity_flag);
    CHECK(e_from_hodge_numbers(jm.hodge_numbers) ==
          genus1(Holonomy::Jminus).epoly);
    CHECK(e_from_hodge_numbers(jm.alternative) ==
          genus1(Holonomy::Jminus).epoly);

    MixedHodgeData dl = genus1_mixed_hodge(Holonomy::DiagLambda);
    CHECK(e_from_hodge_numbers(dl.hodge_numbers) ==
          genus1(Holonomy::DiagLambda).epoly);
    REQUIRE(dl.discrepancies.size() == 1);
    CHECK(dl.discrepancies[0].known);
    CHECK(dl.discrepancies[0].id == "hc_mlambda_display");
    CHECK(dl.discrepancies[0].computed != dl.discrepancies[0].stated);

    // compact-support Poincare polynomials at t = -1 give Euler numbers
    CHECK(jp.poincare_c.eval(Integer(-1)).to_int64() == -4);
    CHECK(jm.poincare_c.eval(Integer(-1)).to_int64() == 4);
}

TEST_CASE("genus-2 equal-commutator strata") {
    ModuliResult y = genus2_Y();
    CHECK(intermediate(y, "Y0") ==
          EPoly::desc({1, 8, 14, -16, -31, 8, 16, 0, 0}));
    CHECK(intermediate(y, "Y4") == cat("Y4"));
    CHECK(y.epoly == cat("Y"));
    check_eval_guard(y.epoly,
                     intermediate(y, "Y0") + intermediate(y, "Y1") +
                         intermediate(y, "Y2") + intermediate(y, "Y3") +
                         intermediate(y, "Y4"));
    // the recomputation is flagged against the displayed values
    REQUIRE(y.discrepancies.size() == 2);
    for (const Discrepancy& d : y.discrepancies) {
        CHECK(d.known);
        CHECK(d.id == "y4_display");
        CHECK(d.computed != d.stated);
    }
    CHECK(intermediate(y, "Y4bar_mod_Z2") == cat("Y4bar_mod_Z2"));
}

TEST_CASE("genus-2 identity holonomy with discrepancy record") {
    ModuliResult m = genus2_M_Id();
    CHECK(m.epoly == EPoly::desc({1, 0, 17, 0, 1, 0, 1}));
    CHECK(intermediate(m, "I1") == EPoly::desc({1, -1, -6, 2, 9, -9}));
    CHECK(intermediate(m, "reducibles") == EPoly::desc({1, 0, 6, 0, 1}));
    CHECK(intermediate(m, "irreducibles") ==
          EPoly::desc({1, 7, 10, -14, -7, -1}));
    CHECK(intermediate(m, "free_part") == cat("MId_J"));
    check_eval_guard(m.epoly, intermediate(m, "reducibles") +
                                  intermediate(m, "irreducibles") +
                                  intermediate(m, "free_part"));
    REQUIRE(m.discrepancies.size() == 1);
    const Discrepancy& d = m.discrepancies[0];
    CHECK(d.known);
    CHECK(d.id == "m_id_theorem_row");
    CHECK(d.computed == m.epoly);
    CHECK(d.stated == EPoly::desc({1, 0, 17, -26, 67, 26, -65}));
}

TEST_CASE("genus-2 twisted holonomy") {
    ModuliResult m = genus2_M_minus_Id();
    CHECK(m.epoly == EPoly::desc({1, 0, -2, -30, -2, 0, 1}));
    CHECK(intermediate(m, "W2") ==
          EPoly::desc({1, 1, -10, -10, 9, 9, 0, 0, 0}));
    CHECK(intermediate(m, "W") == cat("W"));
    check_eval_guard(intermediate(m, "W"),
                     intermediate(m, "W0") + intermediate(m, "W1") +
                         intermediate(m, "W2") + intermediate(m, "W3") +
                         intermediate(m, "W4"));
    check_eval_guard(intermediate(m, "W"), m.epoly * cat("PGL2"));
    CHECK(m.discrepancies.empty());
}

TEST_CASE("genus-2 diagonal holonomy") {
    ModuliResult m = genus2_M_diag();
    CHECK(m.epoly == EPoly::desc({1, 1, -2, 13, -26, 13, -2, 1, 1}));
    CHECK(is_palindromic(m.epoly));
    CHECK(intermediate(m, "Z6bar") == cat("Z6bar"));
    CHECK(intermediate(m, "Z6") == cat("Zdiag_6"));
    CHECK(intermediate(m, "Z7") == cat("Zdiag_7"));
    CHECK(intermediate(m, "Z") == cat("Z_lambda0"));
    EPoly zsum;
    for (const char* n : {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7"})
        zsum += intermediate(m, n);
    check_eval_guard(intermediate(m, "Z"), zsum);
}

TEST_CASE("genus-2 positive parabolic holonomy") {
    ModuliResult m = genus2_M_Jplus();
    CHECK(m.epoly == EPoly::desc({1, 0, -3, -4, -39, -4, -15, 0, 0}));
    CHECK(intermediate(m, "Z5") ==
          EPoly::desc({1, -3, -3, -35, 69, -15, -11, -3, 0}));
    CHECK(intermediate(m, "Z6") == cat("ZJp_6"));
    CHECK(intermediate(m, "Z") == cat("Z_Jplus"));
    check_eval_guard(intermediate(m, "Z"), m.epoly * EPoly::q());
}

TEST_CASE("genus-2 negative parabolic holonomy") {
    ModuliResult m = genus2_M_Jminus();
    CHECK(m.epoly == EPoly::desc({1, 0, -3, 15, 6, 45, 0, 0, 0}));
    CHECK(intermediate(m, "Z3") == EPoly::desc({2, 2, 7, 12, 9, 0, 0, 0}));
    CHECK(intermediate(m, "W4bar_mod_Z2") ==
          EPoly::desc({1, -2, -6, -21, 38, -3, -5, -2}));
    CHECK(intermediate(m, "Z") == cat("Z_Jminus"));
    check_eval_guard(intermediate(m, "Z"), m.epoly * EPoly::q());
}

TEST_CASE("genus-2 table matches the catalog rows") {
    for (Holonomy h : {Holonomy::MinusId, Holonomy::Jplus, Holonomy::Jminus,
                       Holonomy::DiagLambda}) {
        ModuliResult r = genus2(h);
        CHECK(r.epoly == cat(r.space));
    }
    CHECK(genus2(Holonomy::Id).epoly == cat("M_Id_g2"));
}

TEST_CASE("every result carries its provenance") {
    for (int g : {1, 2})
        for (Holonomy h : {Holonomy::Id, Holonomy::MinusId, Holonomy::Jplus,
                           Holonomy::Jminus, Holonomy::DiagLambda}) {
            ModuliResult r = moduli(g, h);
            CHECK_FALSE(r.citations.empty());
            for (const std::string& c : r.citations)
                CHECK(c.find(": ") != std::string::npos);
        }
}

TEST_CASE("sum rule across both genera") {
    SumRule g1 = sum_rule(1);
    CHECK(g1.pass);
    CHECK(g1.lhs == EPoly::desc({1, 4, 1}));
    SumRule g2 = sum_rule(2);
    CHECK(g2.pass);
    CHECK(g2.lhs == EPoly::desc({1, 1, -2, 13, -26, 13, -2, 1, 1}));
    // dropping the twisted term breaks the identity
    CHECK(genus1(Holonomy::Jminus).epoly != genus1(Holonomy::DiagLambda).epoly);
    CHECK_THROWS_AS(sum_rule(3), std::invalid_argument);
}
