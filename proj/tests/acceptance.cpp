// Acceptance suite: one pass/fail line per criterion, run end to end.
//
// The finite-field criteria are asserted under the arithmetic validity
// conditions established by the counting experiments themselves: twisted
// spaces (J- fibres, the twisted genus-2 family) obey count = E-polynomial
// for p = 1 (mod 4) only, and diagonal-holonomy spaces require the
// eigenvalue to be a quadratic residue. Off-condition configurations are
// still counted and must reproduce their frozen partner values; each one is
// printed as a finding.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "charvar/oracle.hpp"
#include "charvar/pipelines.hpp"

using namespace charvar;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

struct Criterion {
    int number;
    std::string label;
    double budget_seconds;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::ostringstream detail;

    Criterion(int n, std::string l, double budget)
        : number(n), label(std::move(l)), budget_seconds(budget) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "    FAILED: " << what << "\n";
        }
    }
    void finish() {
        double secs =
            std::chrono::duration<double>(Clock::now() - start).count();
        if (secs > budget_seconds) {
            ok = false;
            detail << "    FAILED: exceeded runtime budget ("
                   << secs << "s > " << budget_seconds << "s)\n";
        }
        std::cout << "criterion " << number << " [" << label
                  << "]: " << (ok ? "PASS" : "FAIL") << "  ("
                  << static_cast<int>(secs * 1000) / 1000.0 << "s)\n";
        for (const std::string& n : g_notes) std::cout << "    " << n << "\n";
        g_notes.clear();
        std::cout << detail.str();
        if (!ok) ++g_failures;
    }
};

EPoly cat(const std::string& id) { return Catalog::instance().lookup(id).epoly; }

std::mt19937 rng(424243);

EPoly random_poly(int max_degree, long long range = 20) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long long> coeff(-range, range);
    int d = deg(rng);
    std::vector<Integer> v;
    for (int i = 0; i <= d; ++i) v.emplace_back(coeff(rng));
    return EPoly::from_coeffs(std::move(v));
}

}  // namespace

int main() {
    Oracle oracle;  // shared cache: each prime is enumerated and swept once

    {
        Criterion c(1, "genus-1 table", 1.0);
        c.require(genus1(Holonomy::Id).epoly == EPoly::desc({1, 0, 1}),
                  "id row");
        c.require(genus1(Holonomy::MinusId).epoly == EPoly::constant(1),
                  "-id row");
        c.require(genus1(Holonomy::Jplus).epoly == EPoly::desc({1, -2, -3}),
                  "j+ row");
        c.require(genus1(Holonomy::Jminus).epoly == EPoly::desc({1, 3, 0}),
                  "j- row");
        c.require(genus1(Holonomy::DiagLambda).epoly == EPoly::desc({1, 4, 1}),
                  "diag row");
        c.finish();
    }

    {
        Criterion c(2, "genus-2 table, uncontested rows", 1.0);
        c.require(genus2_M_minus_Id().epoly ==
                      EPoly::desc({1, 0, -2, -30, -2, 0, 1}),
                  "-id row");
        c.require(genus2_M_Jplus().epoly ==
                      EPoly::desc({1, 0, -3, -4, -39, -4, -15, 0, 0}),
                  "j+ row");
        c.require(genus2_M_Jminus().epoly ==
                      EPoly::desc({1, 0, -3, 15, 6, 45, 0, 0, 0}),
                  "j- row");
        c.require(genus2_M_diag().epoly ==
                      EPoly::desc({1, 1, -2, 13, -26, 13, -2, 1, 1}),
                  "diag row");
        c.finish();
    }

    {
        Criterion c(3, "identity-row discrepancy handling", 1.0);
        ModuliResult m = genus2_M_Id();
        c.require(m.epoly == EPoly::desc({1, 0, 17, 0, 1, 0, 1}),
                  "component-sum value");
        c.require(m.discrepancies.size() == 1, "exactly one discrepancy record");
        if (!m.discrepancies.empty()) {
            const Discrepancy& d = m.discrepancies.front();
            c.require(d.known, "conflict is registered");
            c.require(d.computed == m.epoly, "computed value recorded verbatim");
            c.require(d.stated == EPoly::desc({1, 0, 17, -26, 67, 26, -65}),
                      "stated value recorded verbatim");
            note("both values reported: computed " + d.computed.to_string() +
                 " | stated " + d.stated.to_string());
        }
        c.finish();
    }

    {
        Criterion c(4, "monodromy closed forms from stratum tables", 1.0);
        RepZ2 r = Catalog::instance().rederive_R_X4bar();
        c.require(r.t == EPoly::desc({1, 0, 0, -1}) &&
                      r.n == EPoly::desc({3, -3, 0}),
                  "two-element monodromy resummation");
        RepZ2xZ2 rq = Catalog::instance().rederive_R_X4bar_mod_Z2();
        c.require(rq.t == EPoly::desc({1, 0, 0, 0}) &&
                      rq.s2 == EPoly::desc({-3, 0}) &&
                      rq.sm2 == EPoly::desc({3, 0, 0}) &&
                      rq.s0 == EPoly::constant(-1),
                  "Klein-four monodromy resummation");
        c.finish();
    }

    {
        Criterion c(5, "internal identities", 1.0);
        c.require(cat("W0") + cat("W1") + cat("W2") + cat("W3") + cat("W4") ==
                      EPoly::desc({1, 0, -1, 0}),
                  "conjugacy strata sum");
        c.require(cat("X0") + cat("X1") + cat("X2") + cat("X3") + cat("X4") ==
                      EPoly::desc({1, 0, -1, 0}) * EPoly::desc({1, 0, -1, 0}),
                  "commutator strata sum");
        RepZ2xZ2 rq = *Catalog::instance().lookup("R_X4bar_mod_Z2").mono_z2z2;
        c.require(conjugation_closure_e(rq) == cat("X4"),
                  "conjugation sweep recovers the stratum");
        c.require(sum_rule(1).pass, "sum rule, genus 1");
        c.require(sum_rule(2).pass, "sum rule, genus 2");
        c.finish();
    }

    {
        Criterion c(6, "finite-field counts, genus 1", 10.0);
        for (const char* id : {"X0", "X1", "X2bar", "X3bar"}) {
            VerifyReport rep = oracle.verify_space(id, {3, 5, 7, 11, 13});
            for (const OracleRow& row : rep.rows) {
                if (row.valid) {
                    c.require(row.match, std::string(id) + " count at p=" +
                                             std::to_string(row.prime));
                } else {
                    c.require(row.partner_expected && row.partner_match,
                              std::string(id) + " off-condition count at p=" +
                                  std::to_string(row.prime));
                    note("finding: " + std::string(id) + " at p=" +
                         std::to_string(row.prime) + " counts " +
                         std::to_string(row.observed) + ", not the E-value " +
                         std::to_string(row.expected) + " (" +
                         row.validity_note + ")");
                }
            }
        }
        // diagonal fibres: one polynomial per residue class of lambda
        for (int p : {5, 7, 11, 13}) {
            VerifyReport rep = oracle.verify_space("X4bar_lambda", {p});
            long long res = -1, nonres = -1;
            for (const OracleRow& row : rep.rows) {
                if (row.legendre == 1) {
                    if (res < 0) res = row.observed;
                    c.require(row.observed == res,
                              "constancy across residue lambdas");
                    c.require(row.match, "residue-lambda count at p=" +
                                             std::to_string(p));
                } else {
                    if (nonres < 0) nonres = row.observed;
                    c.require(row.observed == nonres,
                              "constancy across non-residue lambdas");
                    c.require(row.partner_expected && row.partner_match,
                              "non-residue partner value at p=" +
                                  std::to_string(p));
                }
            }
            if (p == 5) {
                c.require(res == -1, "no residue lambda exists at p=5");
                note("finding: at p=5 every admissible lambda is a "
                     "non-residue; counts equal (q-1)^3 = " +
                     std::to_string(nonres));
            }
        }
        c.finish();
    }

    {
        Criterion c(7, "finite-field counts, genus 2", 30.0);
        for (const char* id : {"Y", "W", "Z_lambda0", "Z_Jplus", "Z_Jminus"}) {
            std::vector<int> primes = {3, 5, 7};
            if (std::string(id) == "Z_lambda0") primes = {5, 7};  // needs lambda
            VerifyReport rep = oracle.verify_space(id, primes);
            int valid_rows = 0;
            for (const OracleRow& row : rep.rows) {
                std::string where = std::string(id) + " at p=" +
                                    std::to_string(row.prime) +
                                    (row.lambda ? " lambda=" +
                                                      std::to_string(*row.lambda)
                                                : "");
                if (row.valid) {
                    ++valid_rows;
                    c.require(row.match, "convolution count for " + where);
                } else {
                    c.require(row.partner_expected && row.partner_match,
                              "off-condition convolution count for " + where);
                    note("finding: " + where + " counts " +
                         std::to_string(row.observed) + ", not the E-value " +
                         std::to_string(row.expected) + " (" +
                         row.validity_note + ")");
                }
            }
            c.require(valid_rows > 0,
                      std::string(id) + " has at least one valid configuration");
        }
        c.finish();
    }

    {
        Criterion c(8, "interpolation closure for the equal-commutator space",
                    900.0);
        std::vector<int> primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
        InterpolationBlock block = oracle.interpolate_space("Y", primes);
        c.require(block.primes == primes, "all ten primes are usable");
        c.require(block.degree_bound == 9, "degree bound");
        c.require(block.interpolated == cat("Y"),
                  "interpolated polynomial equals the catalog value");
        note("interpolated e(Y) = " + block.interpolated.to_string());
        c.finish();
    }

    {
        Criterion c(9, "adjudication of the identity row", 60.0);
        const EPoly& ei = cat("MId_irreducibles");
        bool supports_sum = true;
        for (int p : {3, 5}) {
            long long quotient =
                count_irreducible_commuting_quadruples(*oracle.data(p).group);
            c.require(quotient == ei.eval_i64(p),
                      "irreducible quotient at p=" + std::to_string(p));
            // reducibles and the free strata are independently verified, so
            // the component sum is pinned by this count
            long long sum_val = cat("M_Id_g2").eval_i64(p);
            long long thm_val = cat("M_Id_g2_thm").eval_i64(p);
            long long components = cat("MId_reducibles").eval_i64(p) + quotient +
                                   cat("MId_J").eval_i64(p);
            if (components != sum_val) supports_sum = false;
            c.require(components != thm_val,
                      "theorem row is excluded at p=" + std::to_string(p));
        }
        c.require(supports_sum, "component sum is reproduced");
        note(std::string("evidence supports e = ") + cat("M_Id_g2").to_string() +
             " over the stated theorem row " + cat("M_Id_g2_thm").to_string());
        c.finish();
    }

    {
        Criterion c(10, "mixed Hodge consistency", 1.0);
        for (Holonomy h : {Holonomy::Id, Holonomy::Jplus, Holonomy::DiagLambda}) {
            MixedHodgeData d = genus1_mixed_hodge(h);
            c.require(e_from_hodge_numbers(d.hodge_numbers) == genus1(h).epoly,
                      std::string("h-numbers resum, ") + holonomy_name(h));
        }
        MixedHodgeData jm = genus1_mixed_hodge(Holonomy::Jminus);
        c.require(jm.ambiguity_flag, "j- ambiguity is flagged");
        c.require(e_from_hodge_numbers(jm.hodge_numbers) ==
                      genus1(Holonomy::Jminus).epoly,
                  "first j- alternative resums");
        c.require(e_from_hodge_numbers(jm.alternative) ==
                      genus1(Holonomy::Jminus).epoly,
                  "second j- alternative resums");
        auto euler = [&](const char* id) {
            return Catalog::instance()
                .lookup(id)
                .poincare_c->eval(Integer(-1))
                .to_int64();
        };
        c.require(euler("M_Jplus_g1") == -4, "Euler number, genus-1 j+");
        c.require(euler("M_Jminus_g1") == 4, "Euler number, genus-1 j-");
        c.require(euler("M_minusId_g2") == -32, "Euler number, genus-2 -id");
        c.require(euler("M_lambda_g2") == 0, "Euler number, genus-2 diag");
        c.finish();
    }

    {
        Criterion c(11, "randomized property suites", 120.0);
        for (int iter = 0; iter < 150; ++iter) {
            EPoly a = random_poly(8), b = random_poly(8), d = random_poly(8);
            c.require(a + b == b + a && a * b == b * a, "commutativity");
            c.require((a * b) * d == a * (b * d), "associativity");
            c.require(a * (b + d) == a * b + a * d, "distributivity");
            if (!b.is_zero()) c.require(exact_div(a * b, b) == a, "division");
        }
        for (int iter = 0; iter < 120; ++iter) {
            EPoly p = random_poly(12, 500);
            int d = p.degree().value_or(0);
            std::vector<std::pair<Integer, Integer>> pts;
            for (int x = 0; x <= d; ++x)
                pts.emplace_back(Integer(3 * x + 2), p.eval(Integer(3 * x + 2)));
            c.require(interpolate(pts, d) == p, "interpolation round-trip");
        }
        for (int iter = 0; iter < 120; ++iter) {
            RepZ2xZ2 a{random_poly(4, 6), random_poly(4, 6), random_poly(4, 6),
                       random_poly(4, 6)};
            RepZ2xZ2 b{random_poly(4, 6), random_poly(4, 6), random_poly(4, 6),
                       random_poly(4, 6)};
            c.require(restrict_to_z2(tensor_z2z2(a, b)) ==
                          tensor_z2(restrict_to_z2(a), restrict_to_z2(b)),
                      "restriction is a ring map");
            c.require(pullback_tau(pullback_tau(a)) == a, "pullback involution");
            c.require(pullback_tau(tensor_z2z2(a, b)) ==
                          tensor_z2z2(pullback_tau(a), pullback_tau(b)),
                      "pullback commutes with tensor");
            c.require(fiber_e(tensor_z2z2(a, b)) == fiber_e(a) * fiber_e(b),
                      "fibre evaluation is multiplicative");
        }
        {
            const SL2Group& g = *oracle.data(7).group;
            const ClassFunction& cf = oracle.data(7).comm;
            std::uniform_int_distribution<int> pick(
                0, static_cast<int>(g.size()) - 1);
            for (int iter = 0; iter < 150; ++iter) {
                int z = pick(rng), h = pick(rng);
                int conj = g.mul_idx(g.mul_idx(h, z), g.inverse_idx(h));
                c.require(cf.at(conj) == cf.at(z),
                          "class-function invariance under conjugation");
            }
        }
        c.finish();
    }

    std::cout << (g_failures == 0 ? "ACCEPTANCE: 11/11 criteria PASS"
                                  : "ACCEPTANCE: " +
                                        std::to_string(11 - g_failures) +
                                        "/11 criteria pass")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
