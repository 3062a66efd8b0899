#pragma once

// Executable re-derivations of the genus-1 and genus-2 moduli E-polynomials
// from catalog strata and the monodromy calculus, with every intermediate
// recorded and each known conflict surfaced as a structured discrepancy.

#include <string>
#include <utility>
#include <vector>

#include "charvar/catalog.hpp"
#include "charvar/epoly.hpp"
#include "charvar/hodge_rep.hpp"

namespace charvar {

enum class Holonomy { Id, MinusId, Jplus, Jminus, DiagLambda };

inline const char* holonomy_name(Holonomy h) {
    switch (h) {
        case Holonomy::Id: return "id";
        case Holonomy::MinusId: return "-id";
        case Holonomy::Jplus: return "j+";
        case Holonomy::Jminus: return "j-";
        case Holonomy::DiagLambda: return "diag";
    }
    return "?";
}

struct NotComputed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Discrepancy {
    std::string id;        // matches a registry entry when known
    std::string what;
    EPoly computed;
    EPoly stated;
    bool known = false;
};

struct ModuliResult {
    std::string space;
    Holonomy holonomy;
    int genus;
    EPoly epoly;
    std::vector<std::pair<std::string, EPoly>> intermediates;
    std::vector<Discrepancy> discrepancies;
    std::vector<std::string> citations;  // catalog refs consumed by the run
};

struct HodgeNumber {
    int k, p, q;
    long long value;
};

struct MixedHodgeData {
    std::string space;
    std::vector<HodgeNumber> hodge_numbers;
    std::vector<HodgeNumber> alternative;  // populated when ambiguous
    EPoly poincare_c;
    bool ambiguity_flag = false;
    std::vector<Discrepancy> discrepancies;
};

inline EPoly e_from_hodge_numbers(const std::vector<HodgeNumber>& hs) {
    EPoly acc;
    for (const HodgeNumber& h : hs) {
        EPoly term = EPoly::q(h.p, Integer(h.value));
        acc = (h.k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

namespace detail {
inline const EPoly& cat(const std::string& id) {
    return Catalog::instance().lookup(id).epoly;
}
inline const RepZ2& cat_rep_z2(const std::string& id) {
    return *Catalog::instance().lookup(id).mono_z2;
}
inline const RepZ2xZ2& cat_rep_z2z2(const std::string& id) {
    return *Catalog::instance().lookup(id).mono_z2z2;
}
inline void cite(ModuliResult& r, std::initializer_list<const char*> ids) {
    for (const char* id : ids)
        r.citations.push_back(std::string(id) + ": " +
                              Catalog::instance().lookup(id).ref);
}
}  // namespace detail

inline ModuliResult genus1(Holonomy h) {
    using detail::cat;
    const EPoly q = EPoly::q();
    ModuliResult r{"", h, 1, {}, {}, {}};
    switch (h) {
        case Holonomy::Id: {
            r.space = "M_Id_g1";
            EquivPair torus = *Catalog::instance().lookup("Cstar").equiv;
            r.epoly = quotient_fibration_e(torus, torus);
            r.intermediates = {{"torus_plus", torus.plus},
                               {"torus_minus", torus.minus}};
            detail::cite(r, {"Cstar"});
            break;
        }
        case Holonomy::MinusId: {
            r.space = "M_minusId_g1";
            r.epoly = EPoly::constant(1);
            r.intermediates = {{"point", r.epoly}};
            detail::cite(r, {"X1"});
            break;
        }
        case Holonomy::Jplus: {
            r.space = "M_Jplus_g1";
            r.epoly = exact_div(cat("X2bar"), q);
            r.intermediates = {{"X2bar", cat("X2bar")}, {"stabilizer", q}};
            detail::cite(r, {"X2bar"});
            break;
        }
        case Holonomy::Jminus: {
            r.space = "M_Jminus_g1";
            EPoly zero_trace = exact_div(cat("X3bar_prime"), q);
            EPoly nonzero_trace = exact_div(cat("X3bar_dprime"), q);
            r.epoly = zero_trace + nonzero_trace;
            r.intermediates = {{"trace_zero_part", zero_trace},
                               {"trace_nonzero_part", nonzero_trace}};
            detail::cite(r, {"X3bar_prime", "X3bar_dprime"});
            break;
        }
        case Holonomy::DiagLambda: {
            r.space = "M_lambda_g1";
            r.epoly = exact_div(cat("X4bar_lambda"), q - EPoly::constant(1));
            r.intermediates = {{"X4bar_lambda", cat("X4bar_lambda")},
                               {"stabilizer", q - EPoly::constant(1)}};
            detail::cite(r, {"X4bar_lambda"});
            break;
        }
    }
    return r;
}

// Adjoint-group values for genus 1; the regular diagonal case is not
// recorded anywhere and is reported as such.
inline EPoly genus1_langlands(Holonomy h) {
    switch (h) {
        case Holonomy::Id: return detail::cat("ML_Id_g1");
        case Holonomy::MinusId: return detail::cat("ML_minusId_g1");
        case Holonomy::Jplus: return detail::cat("ML_Jplus_g1");
        case Holonomy::Jminus: return detail::cat("ML_Jminus_g1");
        case Holonomy::DiagLambda:
            throw NotComputed(
                "adjoint-group genus-1 value for diagonal holonomy is not "
                "recorded");
    }
    throw NotComputed("unreachable");
}

inline MixedHodgeData genus1_mixed_hodge(Holonomy h) {
    MixedHodgeData d;
    switch (h) {
        case Holonomy::Id:
            d.space = "M_Id_g1";
            d.hodge_numbers = {{4, 2, 2, 1}, {2, 0, 0, 1}};
            break;
        case Holonomy::MinusId:
            d.space = "M_minusId_g1";
            d.hodge_numbers = {{0, 0, 0, 1}};
            break;
        case Holonomy::Jplus:
            d.space = "M_Jplus_g1";
            d.hodge_numbers = {{4, 2, 2, 1}, {3, 1, 1, 2}, {2, 0, 0, 1}, {1, 0, 0, 4}};
            break;
        case Holonomy::Jminus:
            d.space = "M_Jminus_g1";
            d.hodge_numbers = {
                {4, 2, 2, 1}, {3, 1, 1, 1}, {2, 1, 1, 4}, {2, 0, 0, 1}, {1, 0, 0, 1}};
            d.alternative = {
                {4, 2, 2, 1}, {3, 0, 0, 1}, {2, 1, 1, 3}, {2, 0, 0, 2}, {1, 0, 0, 1}};
            d.ambiguity_flag = true;
            break;
        case Holonomy::DiagLambda: {
            d.space = "M_lambda_g1";
            d.hodge_numbers = {{4, 2, 2, 1}, {2, 1, 1, 4}, {2, 0, 0, 1}};
            Discrepancy disc;
            disc.id = "hc_mlambda_display";
            disc.what =
                "displayed mixed Hodge polynomial omits the multiplicity 4 "
                "of the (2,1,1) class; values at t=-1 shown";
            disc.computed = e_from_hodge_numbers(d.hodge_numbers);
            disc.stated = EPoly::desc({1, 1, 1});
            disc.known = true;
            d.discrepancies.push_back(std::move(disc));
            break;
        }
    }
    d.poincare_c = *Catalog::instance().lookup(d.space).poincare_c;
    return d;
}

inline ModuliResult genus2_Y() {
    using detail::cat;
    ModuliResult r{"Y", Holonomy::Id, 2, {}, {}, {}};
    EPoly y0 = cat("X0") * cat("X0");
    EPoly y1 = cat("X1") * cat("X1");
    EPoly y2 = cat("GL2_mod_U") * cat("X2bar") * cat("X2bar");
    EPoly y3 = cat("GL2_mod_U") * cat("X3bar") * cat("X3bar");
    RepZ2xZ2 ry = tensor_z2z2(detail::cat_rep_z2z2("R_X4bar_mod_Z2"),
                              detail::cat_rep_z2z2("R_X4bar_mod_Z2"));
    EPoly y4 = conjugation_closure_e(ry);
    r.epoly = y0 + y1 + y2 + y3 + y4;
    r.intermediates = {{"Y0", y0}, {"Y1", y1}, {"Y2", y2}, {"Y3", y3},
                       {"Y4", y4},
                       {"Y4bar_mod_Z2", total_e_z2z2(ry).plus}};
    detail::cite(r, {"X0", "X1", "GL2_mod_U", "X2bar", "X3bar",
                     "R_X4bar_mod_Z2"});
    r.discrepancies.push_back(
        {"y4_display",
         "matched regular semisimple stratum: recomputed value differs from "
         "the displayed one; finite-field counts confirm the recomputation",
         y4, EPoly::desc({1, -2, 2, -12, 8, 16, -12, -2, 1, 0}), true});
    r.discrepancies.push_back(
        {"y4_display",
         "equal-commutator total: recomputed value differs from the "
         "displayed one; finite-field counts confirm the recomputation",
         r.epoly, EPoly::desc({1, 1, 12, 8, 2, -15, -16, 6, 1, 0}), true});
    return r;
}

inline ModuliResult genus2_M_Id() {
    using detail::cat;
    const EPoly q = EPoly::q();
    const EPoly one = EPoly::constant(1);
    ModuliResult r{"M_Id_g2", Holonomy::Id, 2, {}, {}, {}};

    // reducible locus: four torus factors modulo simultaneous inversion
    EPoly tp = q, tm = -one;  // e(C*)^+/-
    EPoly reducibles = tp * tp * tp * tp +
                       6 * (tp * tp) * (tm * tm) + tm * tm * tm * tm;

    EPoly qm1 = q - one;
    EPoly u_pairs = EPoly::desc({1, 0, -3});  // e of a regular torus pair orbit space
    EPoly i1 = u_pairs * u_pairs * qm1 - EPoly::desc({4, 0, 0});
    EPoly i2 = 8 * qm1 * u_pairs + 4 * qm1 * qm1 * u_pairs;
    EPoly i3 = i2;
    EPoly i4 = 64 * qm1;
    EPoly i5 = 64 * qm1 * qm1;
    EPoly i6 = 16 * qm1 * qm1 * qm1;
    EPoly irreducibles = i1 + i2 + i3 + i4 + i5 + i6;

    EPoly y1 = cat("X1") * cat("X1");
    EPoly y3 = cat("GL2_mod_U") * cat("X3bar") * cat("X3bar");
    RepZ2xZ2 ry = tensor_z2z2(detail::cat_rep_z2z2("R_X4bar_mod_Z2"),
                              detail::cat_rep_z2z2("R_X4bar_mod_Z2"));
    EPoly y4 = conjugation_closure_e(ry);
    EPoly free_part = exact_div(y1 + y3 + y4, cat("PGL2"));

    r.epoly = reducibles + irreducibles + free_part;
    r.intermediates = {{"reducibles", reducibles}, {"I1", i1}, {"I2", i2},
                       {"I3", i3},   {"I4", i4},   {"I5", i5}, {"I6", i6},
                       {"irreducibles", irreducibles},
                       {"free_part", free_part}};
    detail::cite(r, {"Cstar", "X1", "GL2_mod_U", "X3bar", "R_X4bar_mod_Z2",
                     "PGL2"});
    r.discrepancies.push_back(
        {"m_id_theorem_row",
         "component-sum value conflicts with the stated theorem-table row; "
         "irreducible-locus counts support the component sum",
         r.epoly, cat("M_Id_g2_thm"), true});
    return r;
}

inline ModuliResult genus2_M_minus_Id() {
    using detail::cat;
    ModuliResult r{"M_minusId_g2", Holonomy::MinusId, 2, {}, {}, {}};
    EPoly w0 = cat("X0") * cat("X1");
    EPoly w1 = cat("X1") * cat("X0");
    EPoly w2 = cat("GL2_mod_U") * cat("X2bar") * cat("X3bar");
    EPoly w3 = cat("GL2_mod_U") * cat("X3bar") * cat("X2bar");
    RepZ2xZ2 rq = detail::cat_rep_z2z2("R_X4bar_mod_Z2");
    RepZ2xZ2 rw = tensor_z2z2(rq, pullback_tau(rq));
    EPoly w4 = conjugation_closure_e(rw);
    EPoly w = w0 + w1 + w2 + w3 + w4;
    r.epoly = exact_div(w, cat("PGL2"));
    r.intermediates = {{"W0", w0}, {"W1", w1}, {"W2", w2}, {"W3", w3},
                       {"W4", w4}, {"W", w},
                       {"W4bar_mod_Z2", total_e_z2z2(rw).plus}};
    detail::cite(r, {"X0", "X1", "GL2_mod_U", "X2bar", "X3bar",
                     "R_X4bar_mod_Z2", "PGL2"});
    return r;
}

inline ModuliResult genus2_M_diag() {
    using detail::cat;
    const EPoly q = EPoly::q();
    const EPoly one = EPoly::constant(1);
    ModuliResult r{"M_lambda_g2", Holonomy::DiagLambda, 2, {}, {}, {}};
    EPoly qm1 = q - one;
    const EPoly& x2b = cat("X2bar");
    const EPoly& x3b = cat("X3bar");
    const EPoly& x4bl = cat("X4bar_lambda");
    EPoly x4bz2 = total_e_z2z2(detail::cat_rep_z2z2("R_X4bar_mod_Z2")).plus;

    EPoly z1 = qm1 * (x2b + x3b) * (x2b + x3b);
    EPoly z2 = 2 * (cat("X0") + 2 * qm1 * x2b) * x4bl;
    EPoly z3 = 2 * (cat("X1") + 2 * qm1 * x3b) * x4bl;
    EPoly z4 = 2 * qm1 * x2b * (x4bz2 - x4bl);
    EPoly z5 = 2 * qm1 * x3b * (x4bz2 - x4bl);
    RepZ2 rx4 = detail::cat_rep_z2(std::string("R_X4bar"));
    RepZ2 rz6 = tensor_z2(rx4, rx4);
    EPoly z6bar = total_e_punctured_line(rz6, 5);
    EPoly z6 = (2 * q - one) * z6bar;
    EPoly z7 = qm1 * (x4bz2 * x4bz2 - z6bar);
    EPoly z = z1 + z2 + z3 + z4 + z5 + z6 + z7;
    r.epoly = exact_div(z, qm1);
    r.intermediates = {{"Z1", z1}, {"Z2", z2}, {"Z3", z3}, {"Z4", z4},
                       {"Z5", z5}, {"Z6bar", z6bar}, {"Z6", z6}, {"Z7", z7},
                       {"Z", z}};
    detail::cite(r, {"X0", "X1", "X2bar", "X3bar", "X4bar_lambda", "R_X4bar",
                     "R_X4bar_mod_Z2"});
    return r;
}

inline ModuliResult genus2_M_Jplus() {
    using detail::cat;
    const EPoly q = EPoly::q();
    ModuliResult r{"M_Jplus_g2", Holonomy::Jplus, 2, {}, {}, {}};
    EPoly qm2 = q - EPoly::constant(2);
    const EPoly& x2b = cat("X2bar");
    const EPoly& x3b = cat("X3bar");
    RepZ2xZ2 rq = detail::cat_rep_z2z2("R_X4bar_mod_Z2");
    EPoly x4bz2 = total_e_z2z2(rq).plus;

    EPoly z1 = qm2 * x2b * x2b + 2 * x2b * cat("X0");
    EPoly z2 = qm2 * x3b * x3b + 2 * x3b * cat("X1");
    EPoly z3 = 2 * q * x2b * x3b;
    EPoly z4 = 2 * q * (x2b + x3b) * x4bz2;
    RepZ2 rx4 = detail::cat_rep_z2(std::string("R_X4bar"));
    EPoly z5bar = total_e_punctured_line(tensor_z2(rx4, rx4), 3);
    EPoly z5 = q * z5bar;
    EPoly y4bz2 = total_e_z2z2(tensor_z2z2(rq, rq)).plus;
    EPoly z6 = q * (x4bz2 * x4bz2 - y4bz2);
    EPoly z = z1 + z2 + z3 + z4 + z5 + z6;
    r.epoly = exact_div(z, q);
    r.intermediates = {{"Z1", z1}, {"Z2", z2}, {"Z3", z3}, {"Z4", z4},
                       {"Z5bar", z5bar}, {"Z5", z5},
                       {"Y4bar_mod_Z2", y4bz2}, {"Z6", z6}, {"Z", z}};
    detail::cite(r, {"X0", "X1", "X2bar", "X3bar", "R_X4bar",
                     "R_X4bar_mod_Z2"});
    return r;
}

inline ModuliResult genus2_M_Jminus() {
    using detail::cat;
    const EPoly q = EPoly::q();
    ModuliResult r{"M_Jminus_g2", Holonomy::Jminus, 2, {}, {}, {}};
    EPoly qm2 = q - EPoly::constant(2);
    const EPoly& x2b = cat("X2bar");
    const EPoly& x3b = cat("X3bar");
    RepZ2xZ2 rq = detail::cat_rep_z2z2("R_X4bar_mod_Z2");
    EPoly x4bz2 = total_e_z2z2(rq).plus;

    EPoly z1 = qm2 * x2b * x3b + x2b * cat("X1") + x3b * cat("X0");
    EPoly z2 = z1;
    EPoly z3 = q * (x2b * x2b + x3b * x3b);
    EPoly z4 = 2 * q * (x2b + x3b) * x4bz2;
    RepZ2 rx4 = detail::cat_rep_z2(std::string("R_X4bar"));
    EPoly z5 = q * total_e_punctured_line(tensor_z2(rx4, rx4), 3);
    EPoly w4bz2 = total_e_z2z2(tensor_z2z2(rq, pullback_tau(rq))).plus;
    EPoly z6 = q * (x4bz2 * x4bz2 - w4bz2);
    EPoly z = z1 + z2 + z3 + z4 + z5 + z6;
    r.epoly = exact_div(z, q);
    r.intermediates = {{"Z1", z1}, {"Z2", z2}, {"Z3", z3}, {"Z4", z4},
                       {"Z5", z5}, {"W4bar_mod_Z2", w4bz2}, {"Z6", z6},
                       {"Z", z}};
    detail::cite(r, {"X0", "X1", "X2bar", "X3bar", "R_X4bar",
                     "R_X4bar_mod_Z2"});
    return r;
}

inline ModuliResult genus2(Holonomy h) {
    switch (h) {
        case Holonomy::Id: return genus2_M_Id();
        case Holonomy::MinusId: return genus2_M_minus_Id();
        case Holonomy::Jplus: return genus2_M_Jplus();
        case Holonomy::Jminus: return genus2_M_Jminus();
        case Holonomy::DiagLambda: return genus2_M_diag();
    }
    throw std::logic_error("unreachable");
}

inline ModuliResult moduli(int genus, Holonomy h) {
    if (genus == 1) return genus1(h);
    if (genus == 2) return genus2(h);
    throw std::invalid_argument("moduli: genus must be 1 or 2");
}

struct SumRule {
    EPoly lhs;  // e(M_J-) + (q+1) e(M_-Id)
    EPoly rhs;  // e(M_lambda)
    bool pass;
};

inline SumRule sum_rule(int genus) {
    EPoly jm = moduli(genus, Holonomy::Jminus).epoly;
    EPoly mid = moduli(genus, Holonomy::MinusId).epoly;
    EPoly lam = moduli(genus, Holonomy::DiagLambda).epoly;
    EPoly lhs = jm + (EPoly::q() + EPoly::constant(1)) * mid;
    bool pass = lhs == lam;
    return {std::move(lhs), std::move(lam), pass};
}

}  // namespace charvar
