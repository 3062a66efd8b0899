#pragma once

// Independent verification backend: exhaustive counting of commutator
// equations over SL(2,F_p). The genus-1 counts come straight from the
// commutator distribution; genus-2 counts are its convolution square.
//
// A character-formula backend (|G| sum over irreducibles of chi(z)/chi(1))
// would shortcut the |G|^2 sweep, but the exhaustive sweep is kept as the
// trusted, assumption-free route.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "charvar/catalog.hpp"
#include "charvar/epoly.hpp"
#include "charvar/pipelines.hpp"

namespace charvar {

struct PrimeTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidLambda : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultPrimeBound = 31;

class PrimeField {
public:
    explicit PrimeField(int p, int bound = kDefaultPrimeBound) : p_(p) {
        if (p < 3 || p % 2 == 0)
            throw std::invalid_argument("PrimeField: need an odd prime");
        for (int d = 3; d * d <= p; d += 2)
            if (p % d == 0) throw std::invalid_argument("PrimeField: not prime");
        if (p > bound)
            throw PrimeTooLarge("PrimeField: prime exceeds configured bound");
    }
    int p() const { return p_; }
    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return (a - b % p_ + p_) % p_; }
    int mul(int a, int b) const { return (a * b) % p_; }
    int neg(int a) const { return (p_ - a % p_) % p_; }
    int inv(int a) const {
        int r = 1, base = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    int legendre(int a) const {
        a %= p_;
        if (a < 0) a += p_;
        if (a == 0) return 0;
        int r = 1, base = a, e = (p_ - 1) / 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r == 1 ? 1 : -1;
    }

private:
    int p_;
};

struct SL2Element {
    uint8_t a, b, c, d;
};

class SL2Group {
public:
    explicit SL2Group(const PrimeField& field) : f_(field), p_(field.p()) {
        const int p = p_;
        red_.resize(static_cast<size_t>(2 * p * p));
        for (int x = 0; x < 2 * p * p; ++x)
            red_[static_cast<size_t>(x)] = static_cast<uint8_t>(x % p);
        index_of_.assign(static_cast<size_t>(p) * p * p * p, -1);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                for (int c = 0; c < p; ++c)
                    for (int d = 0; d < p; ++d)
                        if ((a * d - b * c) % p == 1 ||
                            (a * d - b * c) % p == 1 - p) {
                            index_of_[pack(a, b, c, d)] =
                                static_cast<int32_t>(elements_.size());
                            elements_.push_back({static_cast<uint8_t>(a),
                                                 static_cast<uint8_t>(b),
                                                 static_cast<uint8_t>(c),
                                                 static_cast<uint8_t>(d)});
                        }
        inverse_.resize(elements_.size());
        for (size_t i = 0; i < elements_.size(); ++i)
            inverse_[i] = idx(inv(elements_[i]));
        enumerate_classes();
    }

    const PrimeField& field() const { return f_; }
    int p() const { return p_; }
    size_t size() const { return elements_.size(); }
    const std::vector<SL2Element>& elements() const { return elements_; }
    const SL2Element& element(int i) const { return elements_[static_cast<size_t>(i)]; }

    SL2Element mul(const SL2Element& x, const SL2Element& y) const {
        return {red_[static_cast<size_t>(x.a * y.a + x.b * y.c)],
                red_[static_cast<size_t>(x.a * y.b + x.b * y.d)],
                red_[static_cast<size_t>(x.c * y.a + x.d * y.c)],
                red_[static_cast<size_t>(x.c * y.b + x.d * y.d)]};
    }
    SL2Element inv(const SL2Element& x) const {
        auto n = [this](int v) { return static_cast<uint8_t>((p_ - v) % p_); };
        return {x.d, n(x.b), n(x.c), x.a};
    }
    SL2Element commutator(const SL2Element& x, const SL2Element& y) const {
        SL2Element m = mul(x, y);
        SL2Element n = mul(y, x);
        return mul(m, inv(n));  // (xy)(yx)^{-1}
    }

    int idx(const SL2Element& e) const {
        return index_of_[pack(e.a, e.b, e.c, e.d)];
    }
    int inverse_idx(int i) const { return inverse_[static_cast<size_t>(i)]; }
    int mul_idx(int i, int j) const {
        return idx(mul(element(i), element(j)));
    }

    int num_classes() const { return static_cast<int>(class_rep_.size()); }
    int class_of(int i) const { return class_of_[static_cast<size_t>(i)]; }
    int class_rep(int cls) const { return class_rep_[static_cast<size_t>(cls)]; }
    long long class_size(int cls) const { return class_size_[static_cast<size_t>(cls)]; }

    SL2Element identity() const { return {1, 0, 0, 1}; }
    SL2Element minus_identity() const {
        return {static_cast<uint8_t>(p_ - 1), 0, 0, static_cast<uint8_t>(p_ - 1)};
    }
    SL2Element jplus() const { return {1, 1, 0, 1}; }
    SL2Element jminus() const {
        return {static_cast<uint8_t>(p_ - 1), 1, 0, static_cast<uint8_t>(p_ - 1)};
    }
    SL2Element diag(int lambda) const {
        int l = ((lambda % p_) + p_) % p_;
        if (l == 0 || l == 1 || l == p_ - 1)
            throw InvalidLambda("diag: lambda must avoid 0 and +-1");
        return {static_cast<uint8_t>(l), 0, 0,
                static_cast<uint8_t>(f_.inv(l))};
    }
    SL2Element holonomy_element(Holonomy h, std::optional<int> lambda = {}) const {
        switch (h) {
            case Holonomy::Id: return identity();
            case Holonomy::MinusId: return minus_identity();
            case Holonomy::Jplus: return jplus();
            case Holonomy::Jminus: return jminus();
            case Holonomy::DiagLambda:
                if (!lambda) throw InvalidLambda("diagonal holonomy needs lambda");
                return diag(*lambda);
        }
        throw std::logic_error("unreachable");
    }

private:
    PrimeField f_;
    int p_;
    std::vector<uint8_t> red_;
    std::vector<SL2Element> elements_;
    std::vector<int32_t> index_of_;
    std::vector<int32_t> inverse_;
    std::vector<int32_t> class_of_;
    std::vector<int32_t> class_rep_;
    std::vector<int64_t> class_size_;

    size_t pack(int a, int b, int c, int d) const {
        return static_cast<size_t>(((a * p_ + b) * p_ + c)) * p_ + d;
    }
    void enumerate_classes() {
        class_of_.assign(elements_.size(), -1);
        for (size_t i = 0; i < elements_.size(); ++i) {
            if (class_of_[i] >= 0) continue;
            int cls = static_cast<int>(class_rep_.size());
            class_rep_.push_back(static_cast<int32_t>(i));
            int64_t count = 0;
            for (const SL2Element& g : elements_) {
                SL2Element conj = mul(mul(g, elements_[i]), inv(g));
                int j = idx(conj);
                if (class_of_[static_cast<size_t>(j)] < 0) {
                    class_of_[static_cast<size_t>(j)] = cls;
                    ++count;
                }
            }
            class_size_.push_back(count);
        }
    }
};

// c(z) = number of pairs (A,B) with [A,B] = z, indexed by group element.
struct ClassFunction {
    std::vector<uint64_t> counts;

    uint64_t at(int i) const { return counts[static_cast<size_t>(i)]; }
    unsigned long long total() const {
        unsigned long long t = 0;
        for (uint64_t c : counts) t += c;
        return t;
    }
};

// Full |G|^2 sweep, partitioned over the outer index into per-thread
// histograms that are merged at the end.
inline ClassFunction commutator_distribution(const SL2Group& g, int threads = 0) {
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    const size_t n = g.size();
    threads = std::min<int>(threads, static_cast<int>(n));
    std::vector<std::vector<uint64_t>> partial(
        static_cast<size_t>(threads), std::vector<uint64_t>(n, 0));
    auto work = [&](int t) {
        std::vector<uint64_t>& hist = partial[static_cast<size_t>(t)];
        size_t lo = n * static_cast<size_t>(t) / static_cast<size_t>(threads);
        size_t hi = n * (static_cast<size_t>(t) + 1) / static_cast<size_t>(threads);
        for (size_t i = lo; i < hi; ++i) {
            const SL2Element a = g.element(static_cast<int>(i));
            for (size_t j = 0; j < n; ++j) {
                const SL2Element& b = g.element(static_cast<int>(j));
                SL2Element m = g.mul(a, b);
                SL2Element w = g.mul(b, a);
                ++hist[static_cast<size_t>(g.idx(g.mul(m, g.inv(w))))];
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    ClassFunction cf;
    cf.counts.assign(n, 0);
    for (const auto& hist : partial)
        for (size_t i = 0; i < n; ++i) cf.counts[i] += hist[i];
    return cf;
}

inline unsigned long long count_genus1_fiber(const SL2Group& g,
                                             const ClassFunction& cf, Holonomy h,
                                             std::optional<int> lambda = {}) {
    return cf.at(g.idx(g.holonomy_element(h, lambda)));
}

// N(xi) = sum_z c(z) c(z^{-1} xi)
inline unsigned long long count_genus2_fiber(const SL2Group& g,
                                             const ClassFunction& cf, Holonomy h,
                                             std::optional<int> lambda = {}) {
    int xi = g.idx(g.holonomy_element(h, lambda));
    unsigned long long total = 0;
    for (size_t i = 0; i < g.size(); ++i) {
        uint64_t ci = cf.counts[i];
        if (ci == 0) continue;
        int w = g.mul_idx(g.inverse_idx(static_cast<int>(i)), xi);
        total += ci * cf.counts[static_cast<size_t>(w)];
    }
    return total;
}

// Eigenlines of m over P^1(F_{p^2}) as a bitmask: bit k is set when the
// k-th projective point spans an eigenspace. The quadratic extension is
// F_p[s]/(s^2 - n) for the smallest positive non-residue n; the points are
// (1, u + v s) ordered by (u, v), followed by (0, 1). Intersecting
// eigenspaces of several matrices is intersecting their masks.
inline uint64_t eigenline_mask(const SL2Group& g, const SL2Element& m) {
    const int p = g.p();
    if (p > 7)
        throw PrimeTooLarge("eigenline masks support p <= 7 (64-bit masks)");
    const PrimeField& f = g.field();
    int nonres = 2;
    while (f.legendre(nonres) != -1) ++nonres;
    auto f2mul = [&](std::pair<int, int> x, std::pair<int, int> y) {
        return std::pair<int, int>(
            f.add(f.mul(x.first, y.first), f.mul(nonres, f.mul(x.second, y.second))),
            f.add(f.mul(x.first, y.second), f.mul(x.second, y.first)));
    };
    uint64_t mask = 0;
    size_t k = 0;
    auto test_point = [&](std::pair<int, int> v0, std::pair<int, int> v1) {
        std::pair<int, int> x0(
            f.add(f.mul(m.a, v0.first), f.mul(m.b, v1.first)),
            f.add(f.mul(m.a, v0.second), f.mul(m.b, v1.second)));
        std::pair<int, int> x1(
            f.add(f.mul(m.c, v0.first), f.mul(m.d, v1.first)),
            f.add(f.mul(m.c, v0.second), f.mul(m.d, v1.second)));
        // m.v parallel to v: cross product over F_{p^2} vanishes
        if (f2mul(x0, v1) == f2mul(x1, v0)) mask |= (uint64_t{1} << k);
        ++k;
    };
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < p; ++v) test_point({1, 0}, {u, v});
    test_point({0, 0}, {1, 0});
    return mask;
}

// Quadruples (A,B,C,D) with AB=BA, CD=DC and no common eigenvector over the
// quadratic extension, divided exactly by |PGL(2,F_p)|.
inline long long count_irreducible_commuting_quadruples(const SL2Group& g) {
    std::vector<uint64_t> matrix_mask(g.size());
    for (size_t i = 0; i < g.size(); ++i)
        matrix_mask[i] = eigenline_mask(g, g.element(static_cast<int>(i)));

    std::map<uint64_t, long long> pair_masks;
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) {
            const SL2Element& a = g.element(static_cast<int>(i));
            const SL2Element& b = g.element(static_cast<int>(j));
            SL2Element ab = g.mul(a, b), ba = g.mul(b, a);
            if (ab.a == ba.a && ab.b == ba.b && ab.c == ba.c && ab.d == ba.d)
                ++pair_masks[matrix_mask[i] & matrix_mask[j]];
        }
    long long raw = 0;
    for (const auto& [m1, c1] : pair_masks)
        for (const auto& [m2, c2] : pair_masks)
            if ((m1 & m2) == 0) raw += c1 * c2;
    const long long p = g.p();
    long long pgl = p * p * p - p;
    if (raw % pgl != 0)
        throw NotDivisible(
            "irreducible quadruple count not divisible by |PGL(2,F_p)|");
    return raw / pgl;
}

// ---------------------------------------------------------------------------
// verify/interpolate front end

struct OracleRow {
    std::string space;
    int prime = 0;
    std::optional<int> lambda;
    int legendre = 0;       // of lambda, when present
    bool valid = true;      // configuration satisfies the counting conditions
    std::string validity_note;
    long long expected = 0;  // catalog E-polynomial at p
    long long observed = 0;  // oracle count
    bool match = false;
    std::optional<long long> partner_expected;  // frozen off-condition value
    bool partner_match = true;
};

struct InterpolationBlock {
    bool attempted = false;
    std::vector<int> primes;
    int degree_bound = 0;
    EPoly interpolated;
    bool matches_catalog = false;
    std::string note;
};

struct VerifyReport {
    std::string space;
    std::vector<OracleRow> rows;
    InterpolationBlock interpolation;
    bool all_valid_match = true;
    bool has_findings = false;  // off-condition configurations present
};

struct SpaceSpec {
    std::string id;          // catalog id
    int genus;               // 1 = fibre count, 2 = convolution count
    Holonomy holonomy;
    bool needs_lambda = false;
    bool requires_p1mod4 = false;  // counting matches only for p = 1 mod 4
    std::optional<EPoly> partner;  // observed count on off-condition configs
};

inline const std::vector<SpaceSpec>& oracle_spaces() {
    static const std::vector<SpaceSpec> specs = [] {
        auto P = [](std::initializer_list<long long> d) { return EPoly::desc(d); };
        std::vector<SpaceSpec> v;
        v.push_back({"X0", 1, Holonomy::Id, false, false, {}});
        v.push_back({"X1", 1, Holonomy::MinusId, false, false, {}});
        v.push_back({"X2bar", 1, Holonomy::Jplus, false, false, {}});
        v.push_back({"X3bar", 1, Holonomy::Jminus, false, true,
                     P({1, -3, 0, 0})});
        v.push_back({"X4bar_lambda", 1, Holonomy::DiagLambda, true, false,
                     P({1, -3, 3, -1})});
        v.push_back({"Y", 2, Holonomy::Id, false, false, {}});
        v.push_back({"W", 2, Holonomy::MinusId, false, true,
                     P({1, 0, -3, 30, 0, -30, 3, 0, -1, 0})});
        v.push_back({"Z_lambda0", 2, Holonomy::DiagLambda, true, false,
                     P({1, 0, -3, -15, 51, -51, 15, 3, 0, -1})});
        v.push_back({"Z_Jplus", 2, Holonomy::Jplus, false, false, {}});
        v.push_back({"Z_Jminus", 2, Holonomy::Jminus, false, true,
                     P({1, 0, -3, -15, 6, -45, 0, 0, 0, 0})});
        return v;
    }();
    return specs;
}

inline const SpaceSpec& oracle_space(const std::string& id) {
    for (const SpaceSpec& s : oracle_spaces())
        if (s.id == id) return s;
    throw UnknownSpace("no oracle procedure for space: " + id);
}

// Caches one enumeration + distribution per prime.
class Oracle {
public:
    explicit Oracle(int threads = 0, int prime_bound = kDefaultPrimeBound)
        : threads_(threads), bound_(prime_bound) {}

    struct PrimeData {
        std::unique_ptr<SL2Group> group;
        ClassFunction comm;
    };

    const PrimeData& data(int p) {
        auto it = cache_.find(p);
        if (it != cache_.end()) return it->second;
        PrimeField f(p, bound_);
        PrimeData d;
        d.group = std::make_unique<SL2Group>(f);
        d.comm = commutator_distribution(*d.group, threads_);
        return cache_.emplace(p, std::move(d)).first->second;
    }

    unsigned long long count(const SpaceSpec& spec, int p,
                             std::optional<int> lambda = {}) {
        const PrimeData& d = data(p);
        return spec.genus == 1
                   ? count_genus1_fiber(*d.group, d.comm, spec.holonomy, lambda)
                   : count_genus2_fiber(*d.group, d.comm, spec.holonomy, lambda);
    }

    VerifyReport verify_space(const std::string& id, const std::vector<int>& primes) {
        const SpaceSpec& spec = oracle_space(id);
        const EPoly& epoly = Catalog::instance().lookup(id).epoly;
        VerifyReport rep;
        rep.space = id;
        for (int p : primes) {
            if (spec.needs_lambda && p < 5)
                throw InvalidLambda(id + ": no admissible lambda in F_" +
                                    std::to_string(p));
            const PrimeData& d = data(p);
            std::vector<std::optional<int>> lambdas;
            if (spec.needs_lambda) {
                for (int l = 2; l <= p - 2; ++l) lambdas.emplace_back(l);
            } else {
                lambdas.emplace_back(std::nullopt);
            }
            for (const auto& lam : lambdas) {
                OracleRow row;
                row.space = id;
                row.prime = p;
                row.lambda = lam;
                row.expected = epoly.eval_i64(p);
                row.observed = static_cast<long long>(count(spec, p, lam));
                row.match = row.expected == row.observed;
                row.valid = true;
                if (spec.requires_p1mod4 && p % 4 == 3) {
                    row.valid = false;
                    row.validity_note = "count equals the E-polynomial only for "
                                        "p = 1 (mod 4)";
                }
                if (lam) {
                    row.legendre = d.group->field().legendre(*lam);
                    if (row.legendre != 1) {
                        row.valid = false;
                        row.validity_note =
                            "count equals the E-polynomial only when lambda is "
                            "a quadratic residue";
                    }
                }
                if (!row.valid && spec.partner) {
                    row.partner_expected = spec.partner->eval_i64(p);
                    row.partner_match = *row.partner_expected == row.observed;
                }
                if (row.valid && !row.match) rep.all_valid_match = false;
                if (!row.valid) rep.has_findings = true;
                rep.rows.push_back(std::move(row));
            }
        }
        return rep;
    }

    // Reconstruct the counting polynomial from valid configurations only.
    InterpolationBlock interpolate_space(const std::string& id,
                                         const std::vector<int>& primes) {
        const SpaceSpec& spec = oracle_space(id);
        const EPoly& epoly = Catalog::instance().lookup(id).epoly;
        InterpolationBlock block;
        block.degree_bound = epoly.degree().value_or(0);
        std::vector<std::pair<Integer, Integer>> pts;
        for (int p : primes) {
            if (spec.requires_p1mod4 && p % 4 == 3) continue;
            std::optional<int> lam;
            if (spec.needs_lambda) {
                const PrimeData& d = data(p);
                for (int l = 2; l <= p - 2; ++l)
                    if (d.group->field().legendre(l) == 1) {
                        lam = l;
                        break;
                    }
                if (!lam) continue;  // no residue lambda available (p = 5)
            }
            pts.emplace_back(Integer(p),
                             Integer(static_cast<long long>(count(spec, p, lam))));
            block.primes.push_back(p);
        }
        block.attempted = true;
        block.interpolated = interpolate(pts, block.degree_bound);
        block.matches_catalog = block.interpolated == epoly;
        return block;
    }

private:
    int threads_;
    int bound_;
    std::map<int, PrimeData> cache_;
};

}  // namespace charvar
