#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "properties.hpp"

namespace skewlab {

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
    std::string name;
    RingPtr ring;
    EndoPtr endo;
    std::vector<std::pair<Property, Status>> expected;
    std::string note;
};

// Re-derives every expected-profile claim; a mismatch means the build is
// inconsistent with itself and aborts with CatalogError.
inline void check_profile(const CatalogEntry& e, const DeciderOptions& opt = {}) {
    auto axioms = verify_ring_axioms(*e.ring);
    if (!axioms.ok) throw CatalogError(e.name + ": " + axioms.detail);
    auto endo_check = verify_endomorphism(*e.ring, e.endo->table());
    if (!endo_check.ok())
        throw CatalogError(e.name + ": endomorphism fails verification: " + endo_check.detail);
    for (auto& [p, want] : e.expected) {
        Verdict v = decide(p, *e.ring, e.endo.get(), opt);
        if (v.status != want)
            throw CatalogError(e.name + ": expected " + property_id(p) + "=" + to_string(want) +
                               ", decider returned " + to_string(v.status));
    }
}

inline std::vector<CatalogEntry> load_catalog(const DeciderOptions& opt = {}) {
    using P = Property;
    const Status H = Status::Holds, F = Status::Fails;
    std::vector<CatalogEntry> out;
    auto z2 = make_zn(2);

    auto add = [&](std::string name, RingPtr ring, EndoPtr endo,
                   std::vector<std::pair<Property, Status>> expected, std::string note) {
        out.push_back({std::move(name), std::move(ring), std::move(endo), std::move(expected),
                       std::move(note)});
    };

    {
        auto r = make_zn(2);
        add("Z2-identity", r, Endomorphism::identity(r),
            {{P::Reduced, H}, {P::Reversible, H}, {P::Symmetric, H}, {P::Baer, H}, {P::SigmaRigid, H}},
            "prime field, identity baseline");
    }
    {
        auto r = make_zn(3);
        add("Z3-identity", r, Endomorphism::identity(r), {{P::Reduced, H}, {P::Baer, H}},
            "prime field, identity baseline");
    }
    {
        auto r = make_zn(4);
        add("Z4-identity", r, Endomorphism::identity(r),
            {{P::Reduced, F}, {P::Reversible, H}, {P::Symmetric, H}, {P::Baer, F},
             {P::QuasiBaer, F}, {P::PpRight, F}},
            "nilpotents but commutative; fails every annihilator-generation property");
    }
    {
        auto r = make_zn(6);
        add("Z6-identity", r, Endomorphism::identity(r),
            {{P::Reduced, H}, {P::Baer, H}, {P::PpRight, H}},
            "squarefree modulus, product of two fields");
    }
    {
        auto r = make_galois_field(2, 2);
        add("GF4-frobenius", r, Endomorphism::frobenius(r, 2),
            {{P::Reduced, H}, {P::SigmaRigid, H}, {P::CSigma, H}, {P::Baer, H},
             {P::SigmaSymmetricRight, H}},
            "field with the squaring automorphism");
    }
    {
        auto r = make_product(z2, z2);
        add("Z2xZ2-identity", r, Endomorphism::identity(r),
            {{P::Reduced, H}, {P::Reversible, H}, {P::Baer, H}}, "product of fields, identity baseline");
        add("Z2xZ2-swap", r, Endomorphism::swap(r),
            {{P::Reduced, H}, {P::SigmaReversibleRight, F}, {P::SigmaRigid, F}, {P::CSigma, F}},
            "factor swap: reduced but not right sigma-reversible");
    }
    {
        auto r = make_poly_quotient(z2, {0, 0, 1});
        add("dual-const", r, Endomorphism::constant_term(r),
            {{P::Reduced, F}, {P::Reversible, H}, {P::SigmaReversibleRight, H},
             {P::SigmaSymmetricRight, H}, {P::CSigma, F}, {P::Baer, F}},
            "dual numbers with constant-term projection");
    }
    {
        auto r = make_matrix(2, z2);
        add("M2Z2-identity", r, Endomorphism::identity(r),
            {{P::Reduced, F}, {P::Reversible, F}, {P::Semiprime, H}, {P::Abelian, F}, {P::Baer, H}},
            "full matrix ring: Baer without reversibility");
    }
    {
        auto r = make_upper_triangular(2, z2);
        add("T2Z2-identity", r, Endomorphism::identity(r),
            {{P::Reduced, F}, {P::Reversible, F}, {P::Semiprime, F}, {P::Abelian, F}, {P::Baer, H}},
            "upper triangular matrices");
    }
    {
        auto r = make_bounded_poly(z2, 2);
        add("Z2t-eval0", r, Endomorphism::eval_at_zero(r),
            {{P::Reduced, H}, {P::Reversible, H}, {P::SigmaReversibleRight, H}, {P::CSigma, F}},
            "degree-capped window of a polynomial ring with evaluation at zero");
    }

    for (auto& e : out) check_profile(e, opt);
    return out;
}

// ---------------------------------------------------------------------------
// Theorem verification

enum class TheoremStatus { Confirmed, HypothesisNotMet, Violation };

inline const char* to_string(TheoremStatus s) {
    switch (s) {
        case TheoremStatus::Confirmed: return "Confirmed";
        case TheoremStatus::HypothesisNotMet: return "HypothesisNotMet";
        case TheoremStatus::Violation: return "VIOLATION";
    }
    return "?";
}

struct TheoremBounds {
    int degree = 2;
    int trunc = 3;
    DeciderOptions decider = {};
};

struct TheoremReport {
    std::string theorem;
    std::string entry;
    std::vector<std::string> hypotheses;   // "name: verdict" lines
    std::vector<std::string> conclusions;  // human-readable confirmations
    Bounds bounds;
    TheoremStatus status = TheoremStatus::Confirmed;
    std::string note;  // single line, no tabs
    std::optional<Witness> witness;
};

inline const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {"T2.3", "L2.4", "P2.5", "L2.6", "T2.7",
                                                 "L3.1", "L3.2", "T-BAER", "T-PP", "COR-RIGID"};
    return ids;
}

namespace detail {

inline bool truthy(const Verdict& v) { return v.status != Status::Fails; }

// decoded polynomial space of degree <= D over R
struct PolySpace {
    const Ring* R;
    int D;
    std::uint64_t count;

    PolySpace(const Ring& ring, int degree, std::uint64_t budget) : R(&ring), D(degree) {
        const std::uint64_t sat = std::numeric_limits<std::uint64_t>::max();
        count = 1;
        for (int i = 0; i <= D; ++i) {
            if (count > sat / ring.order()) throw BudgetExceeded(ring.name() + ": tuple space too large");
            count *= ring.order();
        }
        if (count > budget)
            throw BudgetExceeded(ring.name() + ": " + std::to_string(count) +
                                 " coefficient tuples exceed the budget");
    }

    void decode(std::uint64_t ix, std::vector<Element>& out) const {
        out.resize(D + 1);
        for (auto& e : out) {
            e = Element{R, ix % R->order()};
            ix /= R->order();
        }
    }
};

inline std::string render_poly_tuple(const Ring& R, const Endomorphism& s,
                                     std::span<const Element> coeffs) {
    SkewPoly p(R, s, std::vector<Element>(coeffs.begin(), coeffs.end()));
    return p.render();
}

// q == e*q, overflow-aware
inline bool equals_e_times(const Ring& R, Element e, std::span<const Element> q) {
    for (auto& c : q) {
        auto p = R.try_mul(e, c);
        if (!p || !(*p == c)) return false;
    }
    return true;
}

struct MechanismCaps {
    std::size_t family = 512;      // largest enumerated tuple family
    std::size_t pair_pool = 64;    // subsets of size two draw from this prefix
    std::size_t triple_pool = 16;  // quasi-clause generator triples draw from this prefix
};

// First (A, q) violating the annihilator correspondence: with e generating
// r_R(A*), the conditions "p q = 0 for every p in A" and "q = e q" must agree
// for every q of degree <= D. Also insists sigma fixes e. Shared by T-BAER and
// by tests that point it at rings violating the hypotheses.
inline std::optional<Witness> baer_mechanism_counterexample(const Ring& R, const Endomorphism& s,
                                                            int D, const MechanismCaps& caps = {}) {
    ExactMul X(R);
    PolySpace space(R, D, std::numeric_limits<std::uint64_t>::max());
    std::size_t fam = static_cast<std::size_t>(std::min<std::uint64_t>(space.count, caps.family));
    std::vector<std::vector<Element>> F(fam);
    for (std::size_t i = 0; i < fam; ++i) space.decode(i, F[i]);

    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t i = 0; i < fam; ++i) subsets.push_back({i});
    std::size_t pool = std::min(fam, caps.pair_pool);
    for (std::size_t i = 0; i < pool; ++i)
        for (std::size_t j = i + 1; j < pool; ++j) subsets.push_back({i, j});
    if (fam > 1) {
        std::vector<std::size_t> all(fam);
        for (std::size_t i = 0; i < fam; ++i) all[i] = i;
        subsets.push_back(std::move(all));
    }

    for (auto& subset : subsets) {
        std::set<std::uint64_t> coeffs;
        for (auto ix : subset)
            for (auto& c : F[ix]) coeffs.insert(c.index);
        std::vector<std::uint64_t> star(coeffs.begin(), coeffs.end());
        auto ann = right_annihilator(R, star);
        auto e = generated_by_idempotent(R, ann);

        auto witness_for = [&](const std::string& what,
                               const std::vector<Element>* q) -> Witness {
            Witness w;
            for (auto ix : subset) {
                w.polys.push_back({});
                for (auto& c : F[ix]) w.polys.back().push_back(c.index);
            }
            w.set_a = star;
            std::string subset_text;
            for (auto ix : subset) {
                if (!subset_text.empty()) subset_text += ", ";
                subset_text += render_poly_tuple(R, s, F[ix]);
                if (subset_text.size() > 120) {
                    subset_text += ", ...";
                    break;
                }
            }
            w.text = what + " for A = {" + subset_text + "}";
            if (q) {
                w.polys.push_back({});
                for (auto& c : *q) w.polys.back().push_back(c.index);
                w.text += " at q = " + render_poly_tuple(R, s, *q);
            }
            return w;
        };

        if (!e) return witness_for("r_R(A*) has no idempotent generator", nullptr);
        if (!(s.apply(*e) == *e)) return witness_for("sigma moves the generator idempotent", nullptr);

        for (auto& q : F) {
            bool lhs = true;
            for (auto ix : subset)
                if (!ore_product_is_zero(X, s, F[ix], q)) {
                    lhs = false;
                    break;
                }
            bool rhs = equals_e_times(R, *e, q);
            if (lhs != rhs) return witness_for("annihilator correspondence breaks", &q);
        }
    }
    return std::nullopt;
}

// right ideal generated by a coefficient set: closure under sums and right
// multiples
inline std::vector<std::uint64_t> right_ideal_closure(const Ring& R,
                                                      const std::set<std::uint64_t>& seed) {
    std::set<std::uint64_t> s(seed.begin(), seed.end());
    s.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> cur(s.begin(), s.end());
        for (auto a : cur) {
            for (std::uint64_t r = 0; r < R.order(); ++r)
                if (s.insert(R.mul_ix(a, r)).second) grew = true;
            for (auto b : cur)
                if (s.insert(R.add_ix(a, b)).second) grew = true;
        }
    }
    return {s.begin(), s.end()};
}

// Quasi-Baer clause: generator families stand in for right ideals of the skew
// ring; A* is the right ideal generated by all their coefficients and the
// ideal itself is represented by the generators' right multiples of degree <= 1.
inline std::optional<Witness> quasi_baer_mechanism_counterexample(const Ring& R,
                                                                  const Endomorphism& s, int D,
                                                                  const MechanismCaps& caps = {}) {
    ExactMul X(R);
    PolySpace space(R, D, std::numeric_limits<std::uint64_t>::max());
    std::size_t fam = static_cast<std::size_t>(std::min<std::uint64_t>(space.count, caps.family));
    std::vector<std::vector<Element>> F(fam);
    for (std::size_t i = 0; i < fam; ++i) space.decode(i, F[i]);

    // right multiples g*s for every s of degree <= 1, computed once per generator
    PolySpace s1(R, 1, std::numeric_limits<std::uint64_t>::max());
    std::size_t pool = std::min(fam, caps.triple_pool);
    std::vector<std::vector<std::vector<Element>>> multiples(pool);
    std::vector<Element> sbuf;
    for (std::size_t g = 0; g < pool; ++g) {
        std::set<std::vector<std::uint64_t>> seen;
        for (std::uint64_t ix = 0; ix < s1.count; ++ix) {
            s1.decode(ix, sbuf);
            SkewPoly prod = skew_mul(SkewPoly(R, s, F[g]), SkewPoly(R, s, sbuf));
            std::vector<std::uint64_t> key = prod.coeff_indices();
            if (!seen.insert(key).second) continue;
            std::vector<Element> cs(prod.coeffs().begin(), prod.coeffs().end());
            multiples[g].push_back(std::move(cs));
        }
    }

    std::vector<std::vector<std::size_t>> families;
    for (std::size_t i = 0; i < pool; ++i) {
        families.push_back({i});
        for (std::size_t j = i + 1; j < pool; ++j) {
            families.push_back({i, j});
            for (std::size_t k = j + 1; k < pool; ++k) families.push_back({i, j, k});
        }
    }

    for (auto& gens : families) {
        std::set<std::uint64_t> coeffs;
        for (auto g : gens)
            for (auto& c : F[g]) coeffs.insert(c.index);
        auto star = right_ideal_closure(R, coeffs);
        auto ann = right_annihilator(R, star);
        auto e = generated_by_idempotent(R, ann);

        auto witness_for = [&](const std::string& what, const std::vector<Element>* q) -> Witness {
            Witness w;
            for (auto g : gens) {
                w.polys.push_back({});
                for (auto& c : F[g]) w.polys.back().push_back(c.index);
            }
            w.set_a = star;
            std::string text;
            for (auto g : gens) {
                if (!text.empty()) text += ", ";
                text += render_poly_tuple(R, s, F[g]);
            }
            w.text = what + " for the right ideal generated by {" + text + "}";
            if (q) {
                w.polys.push_back({});
                for (auto& c : *q) w.polys.back().push_back(c.index);
                w.text += " at q = " + render_poly_tuple(R, s, *q);
            }
            return w;
        };

        if (!e) return witness_for("r_R(A*) has no idempotent generator", nullptr);
        if (!(s.apply(*e) == *e)) return witness_for("sigma moves the generator idempotent", nullptr);

        for (auto& q : F) {
            bool lhs = true;
            for (auto g : gens) {
                for (auto& t : multiples[g])
                    if (!ore_product_is_zero(X, s, t, q)) {
                        lhs = false;
                        break;
                    }
                if (!lhs) break;
            }
            bool rhs = equals_e_times(R, *e, q);
            if (lhs != rhs) return witness_for("annihilator correspondence breaks", &q);
        }
    }
    return std::nullopt;
}

// p.p. mechanism: single-element annihilators with idempotent generators must
// match the series-level correspondence a*q = 0 iff q = e*q. Elements whose
// annihilator has no idempotent generator do not participate; their count is
// reported.
struct PpMechanismResult {
    std::optional<Witness> violation;
    std::size_t skipped = 0;
};

inline PpMechanismResult pp_mechanism(const Ring& R, const Endomorphism& s, int D) {
    ExactMul X(R);
    PolySpace space(R, D, std::numeric_limits<std::uint64_t>::max());
    std::size_t fam = static_cast<std::size_t>(std::min<std::uint64_t>(space.count, std::uint64_t(512)));
    std::vector<std::vector<Element>> F(fam);
    for (std::size_t i = 0; i < fam; ++i) space.decode(i, F[i]);

    PpMechanismResult result;
    for (std::uint64_t a = 0; a < R.order(); ++a) {
        std::uint64_t one[1] = {a};
        auto ann = right_annihilator(R, one);
        auto e = generated_by_idempotent(R, ann);
        if (!e) {
            ++result.skipped;
            continue;
        }
        std::vector<Element> ap = {R.element(a)};
        for (auto& q : F) {
            bool lhs = ore_product_is_zero(X, s, ap, q);
            bool rhs = equals_e_times(R, *e, q);
            if (lhs != rhs) {
                Witness w;
                w.elems = {a};
                w.polys.push_back({});
                for (auto& c : q) w.polys.back().push_back(c.index);
                w.text = "a=" + R.render(R.element(a)) + " with e=" + R.render(*e) +
                         ": correspondence breaks at q = " + render_poly_tuple(R, s, q);
                result.violation = std::move(w);
                return result;
            }
        }
        if (!(s.apply(*e) == *e)) {
            Witness w;
            w.elems = {a};
            w.text = "sigma moves the annihilator idempotent of a=" + R.render(R.element(a));
            result.violation = std::move(w);
            return result;
        }
    }
    return result;
}

}  // namespace detail

inline TheoremReport verify_theorem(const std::string& id, const CatalogEntry& entry,
                                    const TheoremBounds& bounds = {}) {
    using detail::truthy;
    const Ring& R = *entry.ring;
    const Endomorphism& s = *entry.endo;
    DeciderOptions opt = bounds.decider;
    opt.degree = bounds.degree;

    TheoremReport rep;
    rep.theorem = id;
    rep.entry = entry.name;
    rep.bounds.degree = bounds.degree;
    rep.bounds.trunc = bounds.trunc;
    if (s.is_identity()) rep.note = "sigma=identity (baseline)";

    auto hyp = [&](const std::string& name, bool met) {
        rep.hypotheses.push_back(name + ": " + (met ? "met" : "not met"));
        return met;
    };
    auto confirm = [&](const std::string& line) { rep.conclusions.push_back(line); };
    auto violate = [&](Witness w) {
        rep.status = TheoremStatus::Violation;
        rep.witness = std::move(w);
        rep.note = rep.witness->text;
        return rep;
    };
    auto not_met = [&](const std::string& why) {
        rep.status = TheoremStatus::HypothesisNotMet;
        if (rep.note.empty())
            rep.note = why;
        else
            rep.note += "; " + why;
        return rep;
    };

    if (id == "T2.3") {
        // sigma-(sps) Armendariz iff sigma-skew (sps) Armendariz and C_sigma,
        // compared at the shared degree bound
        Verdict sps = is_sigma_sps_armendariz_bounded(R, s, opt);
        Verdict skew = is_sigma_skew_sps_armendariz_bounded(R, s, opt);
        Verdict csig = satisfies_c_sigma(R, s);
        bool lhs = truthy(sps), rhs = truthy(skew) && truthy(csig);
        rep.hypotheses.push_back("none (the statement itself is the check)");
        confirm("sigma_sps_armendariz=" + std::string(to_string(sps.status)) +
                " sigma_skew_sps_armendariz=" + to_string(skew.status) + " c_sigma=" +
                to_string(csig.status));
        if (lhs != rhs) {
            Witness w = lhs ? (truthy(skew) ? *csig.witness : *skew.witness) : *sps.witness;
            w.text = "equivalence fails: " + w.text;
            return violate(std::move(w));
        }
        return rep;
    }

    if (id == "L2.4") {
        Verdict sps = is_sigma_sps_armendariz_bounded(R, s, opt);
        if (!hyp("sigma-(sps) Armendariz up to D", truthy(sps)))
            return not_met("sps witness: " + sps.witness->text);
        detail::PolySpace space(R, bounds.degree, 1u << 10);
        std::uint64_t T = space.count;
        if (T > (1u << 10) || T * T * T > opt.budget)
            throw BudgetExceeded(R.name() + ": triple scan exceeds budget");
        ExactMul X(R);
        std::vector<Element> f, g, h;
        for (std::uint64_t fi = 0; fi < T; ++fi) {
            space.decode(fi, f);
            for (std::uint64_t gi = 0; gi < T; ++gi) {
                space.decode(gi, g);
                SkewPoly fg = skew_mul(SkewPoly(R, s, f), SkewPoly(R, s, g));
                for (std::uint64_t hi = 0; hi < T; ++hi) {
                    space.decode(hi, h);
                    if (!detail::ore_product_is_zero(X, s, fg.coeffs(), h)) continue;
                    for (auto& a : f)
                        for (auto& b : g)
                            for (auto& c : h)
                                if (X.mul3(a, b, c) != 0) {
                                    Witness w;
                                    w.polys = {{}, {}, {}};
                                    for (auto& x : f) w.polys[0].push_back(x.index);
                                    for (auto& x : g) w.polys[1].push_back(x.index);
                                    for (auto& x : h) w.polys[2].push_back(x.index);
                                    w.text = "fgh=0 but a*b*c != 0 with a=" + R.render(a) +
                                             " b=" + R.render(b) + " c=" + R.render(c);
                                    return violate(std::move(w));
                                }
                }
            }
        }
        confirm("all vanishing triple products have vanishing coefficient products");
        return rep;
    }

    if (id == "P2.5" || id == "T2.7") {
        Verdict sps = is_sigma_sps_armendariz_bounded(R, s, opt);
        if (!hyp("sigma-(sps) Armendariz up to D", truthy(sps)))
            return not_met("sps witness: " + sps.witness->text);
        detail::PolySpace space(R, bounds.degree, 1u << 10);
        std::uint64_t T = space.count;
        ExactMul X(R);

        // bounded reversibility of the skew ring: fg = 0 forces gf = 0
        std::optional<Witness> rev_gap;
        std::vector<Element> f, g, h;
        for (std::uint64_t fi = 0; fi < T && !rev_gap; ++fi) {
            space.decode(fi, f);
            for (std::uint64_t gi = 0; gi < T; ++gi) {
                space.decode(gi, g);
                if (!detail::ore_product_is_zero(X, s, f, g)) continue;
                if (!detail::ore_product_is_zero(X, s, g, f)) {
                    Witness w;
                    w.polys = {{}, {}};
                    for (auto& x : f) w.polys[0].push_back(x.index);
                    for (auto& x : g) w.polys[1].push_back(x.index);
                    w.text = "fg=0 but gf!=0 with f=" + detail::render_poly_tuple(R, s, f) + " g=" +
                             detail::render_poly_tuple(R, s, g);
                    rev_gap = std::move(w);
                    break;
                }
            }
        }
        // bounded symmetry: fgh = 0 forces fhg = 0
        std::optional<Witness> sym_gap;
        if (T * T * T > opt.budget) throw BudgetExceeded(R.name() + ": triple scan exceeds budget");
        for (std::uint64_t fi = 0; fi < T && !sym_gap; ++fi) {
            space.decode(fi, f);
            for (std::uint64_t gi = 0; gi < T && !sym_gap; ++gi) {
                space.decode(gi, g);
                SkewPoly fg = skew_mul(SkewPoly(R, s, f), SkewPoly(R, s, g));
                for (std::uint64_t hi = 0; hi < T; ++hi) {
                    space.decode(hi, h);
                    if (!detail::ore_product_is_zero(X, s, fg.coeffs(), h)) continue;
                    SkewPoly fh = skew_mul(SkewPoly(R, s, f), SkewPoly(R, s, h));
                    if (!detail::ore_product_is_zero(X, s, fh.coeffs(), g)) {
                        Witness w;
                        w.polys = {{}, {}, {}};
                        for (auto& x : f) w.polys[0].push_back(x.index);
                        for (auto& x : g) w.polys[1].push_back(x.index);
                        for (auto& x : h) w.polys[2].push_back(x.index);
                        w.text = "fgh=0 but fhg!=0";
                        sym_gap = std::move(w);
                        break;
                    }
                }
            }
        }

        Verdict rev = is_reversible(R), sym = is_symmetric(R);
        if (id == "P2.5") {
            if (truthy(rev) != !rev_gap.has_value()) {
                Witness w = rev_gap ? *rev_gap : *rev.witness;
                w.text = "reversibility transfer fails: " + w.text;
                return violate(std::move(w));
            }
            confirm(std::string("R reversible=") + to_string(rev.status) +
                    ", skew ring reversible up to D=" + (rev_gap ? "false" : "true"));
            if (truthy(sym) != !sym_gap.has_value()) {
                Witness w = sym_gap ? *sym_gap : *sym.witness;
                w.text = "symmetry transfer fails: " + w.text;
                return violate(std::move(w));
            }
            confirm(std::string("R symmetric=") + to_string(sym.status) +
                    ", skew ring symmetric up to D=" + (sym_gap ? "false" : "true"));
            return rep;
        }

        // T2.7 chains; C_sigma follows from the hypothesis, checked rather than assumed
        Verdict csig = satisfies_c_sigma(R, s);
        bool chain_closes = truthy(csig);
        if (!chain_closes) rep.note = "(3)=>(1) untested: C_sigma fails on this entry";

        struct Leg {
            const char* label;
            bool b1, b2, b3, b4;
            std::optional<Witness>* gap;
            Verdict* classical;
        };
        Verdict srr = is_right_sigma_reversible(R, s);
        Verdict sr = is_sigma_reversible(R, s);
        Verdict ssr = is_right_sigma_symmetric(R, s);
        Verdict ss = is_sigma_symmetric(R, s);
        Leg legs[2] = {
            {"reversible", truthy(rev), truthy(sr), truthy(srr), !rev_gap.has_value(), &rev_gap, &rev},
            {"symmetric", truthy(sym), truthy(ss), truthy(ssr), !sym_gap.has_value(), &sym_gap, &sym},
        };
        for (auto& leg : legs) {
            bool consistent;
            if (chain_closes) {
                consistent = leg.b1 == leg.b2 && leg.b2 == leg.b3 && leg.b1 == leg.b4;
            } else {
                consistent = (!leg.b1 || leg.b2) && (!leg.b2 || leg.b3) && leg.b1 == leg.b4;
            }
            if (!consistent) {
                Witness w;
                if (*leg.gap)
                    w = **leg.gap;
                else if ((*leg.classical).witness)
                    w = *(*leg.classical).witness;
                w.text = std::string(leg.label) + " chain breaks (1)=" + std::to_string(leg.b1) +
                         " (2)=" + std::to_string(leg.b2) + " (3)=" + std::to_string(leg.b3) +
                         " (4)=" + std::to_string(leg.b4) + (w.text.empty() ? "" : "; " + w.text);
                return violate(std::move(w));
            }
            confirm(std::string(leg.label) + " chain agrees at (1)(2)(3)(4)=" +
                    std::to_string(leg.b1) + std::to_string(leg.b2) + std::to_string(leg.b3) +
                    std::to_string(leg.b4));
        }
        return rep;
    }

    if (id == "L2.6") {
        Verdict csig = satisfies_c_sigma(R, s);
        if (!hyp("condition C_sigma", truthy(csig)))
            return not_met("C_sigma witness: " + csig.witness->text);
        Verdict rev = is_reversible(R), srev = is_sigma_reversible(R, s);
        Verdict sym = is_symmetric(R), ssym = is_sigma_symmetric(R, s);
        if (truthy(rev) != truthy(srev)) {
            Witness w = truthy(rev) ? *srev.witness : *rev.witness;
            w.text = "reversible vs sigma-reversible disagree: " + w.text;
            return violate(std::move(w));
        }
        if (truthy(sym) != truthy(ssym)) {
            Witness w = truthy(sym) ? *ssym.witness : *sym.witness;
            w.text = "symmetric vs sigma-symmetric disagree: " + w.text;
            return violate(std::move(w));
        }
        confirm("reversible=" + std::string(to_string(rev.status)) + " sigma_reversible=" +
                to_string(srev.status));
        confirm("symmetric=" + std::string(to_string(sym.status)) + " sigma_symmetric=" +
                to_string(ssym.status));
        return rep;
    }

    if (id == "L3.1") {
        Verdict srr = is_right_sigma_reversible(R, s);
        bool h1 = hyp("right sigma-reversible", truthy(srr));
        bool h2 = hyp("sigma(1)=1", s.preserves_unity());
        if (!h1 || !h2) return not_met("hypotheses fail");
        for (auto e : idempotents(R))
            if (!(s.apply(R.element(e)) == R.element(e))) {
                Witness w;
                w.elems = {e};
                w.text = "sigma moves the idempotent " + R.render(R.element(e));
                return violate(std::move(w));
            }
        confirm("sigma fixes all " + std::to_string(idempotents(R).size()) + " idempotents");
        Verdict ab = is_abelian(R, &s);
        if (!truthy(ab)) {
            Witness w = *ab.witness;
            w.text = "ring is not abelian: " + w.text;
            return violate(std::move(w));
        }
        confirm("ring is abelian");
        return rep;
    }

    if (id == "L3.2") {
        Verdict srr = is_right_sigma_reversible(R, s);
        bool h1 = hyp("right sigma-reversible", truthy(srr));
        bool h2 = hyp("sigma(1)=1", s.preserves_unity());
        if (!h1 || !h2) return not_met("hypotheses fail");

        const int N = bounds.trunc;
        std::uint64_t count = 1;
        for (int i = 0; i < N; ++i) {
            count *= R.order();
            if (count > opt.budget) throw BudgetExceeded(R.name() + ": series space exceeds budget");
        }
        auto idem = idempotents(R);
        std::size_t found = 0;
        std::vector<std::uint64_t> cs(N);
        for (std::uint64_t ix = 0; ix < count; ++ix) {
            std::uint64_t v = ix;
            bool constant = true;
            for (int i = 0; i < N; ++i) {
                cs[i] = v % R.order();
                v /= R.order();
                if (i > 0 && cs[i] != 0) constant = false;
            }
            TruncSeries f = TruncSeries::from_indices(R, s, N, cs);
            bool is_idem = is_idempotent_trunc(f).idempotent;
            bool expect = constant && std::binary_search(idem.begin(), idem.end(), cs[0]);
            if (is_idem != expect) {
                Witness w;
                w.polys = {cs};
                w.text = std::string(is_idem ? "unexpected truncated idempotent "
                                             : "constant idempotent fails the truncated square ") +
                         f.render();
                return violate(std::move(w));
            }
            if (is_idem) ++found;
        }
        confirm("idempotent series at N=" + std::to_string(N) + " are exactly the " +
                std::to_string(found) + " constant idempotents");

        // abelian clause: constant idempotents commute with every series mod x^N
        for (auto e : idem) {
            TruncSeries es = TruncSeries::from_indices(R, s, N, std::vector<std::uint64_t>{e});
            for (std::uint64_t ix = 0; ix < count; ++ix) {
                std::uint64_t v = ix;
                for (int i = 0; i < N; ++i) {
                    cs[i] = v % R.order();
                    v /= R.order();
                }
                TruncSeries g = TruncSeries::from_indices(R, s, N, cs);
                if (!(trunc_mul(es, g) == trunc_mul(g, es))) {
                    Witness w;
                    w.elems = {e};
                    w.polys = {cs};
                    w.text = "idempotent " + R.render(R.element(e)) +
                             " is not central in the truncated ring at " + g.render();
                    return violate(std::move(w));
                }
            }
        }
        confirm("truncated ring is abelian over its idempotents");
        return rep;
    }

    if (id == "T-BAER") {
        Verdict srr = is_right_sigma_reversible(R, s);
        bool h1 = hyp("right sigma-reversible", truthy(srr));
        bool h2 = hyp("sigma(1)=1", s.preserves_unity());
        if (!h1 || !h2) return not_met("hypotheses fail");
        Verdict baer;
        try {
            baer = is_baer(R);
        } catch (const NotFinite&) {
            rep.hypotheses.push_back("Baer(R): not decidable on a graded window");
            return not_met("Baer requires a total finite ring; the annihilator mechanism is not run");
        }
        if (!hyp("Baer(R)", truthy(baer))) return not_met("Baer witness: " + baer.witness->text);

        if (auto w = detail::baer_mechanism_counterexample(R, s, bounds.degree)) return violate(*w);
        confirm("subset annihilators of skew polynomials match eR[[x;sigma]] up to D");
        Verdict qb = is_quasi_baer(R);
        if (!truthy(qb)) {
            Witness w = *qb.witness;
            w.text = "Baer ring fails quasi-Baer: " + w.text;
            return violate(std::move(w));
        }
        if (auto w = detail::quasi_baer_mechanism_counterexample(R, s, bounds.degree))
            return violate(*w);
        confirm("right-ideal annihilators match eR[[x;sigma]] up to D");
        return rep;
    }

    if (id == "T-PP") {
        Verdict srr = is_right_sigma_reversible(R, s);
        bool h1 = hyp("right sigma-reversible", truthy(srr));
        bool h2 = hyp("sigma(1)=1", s.preserves_unity());
        if (!h1 || !h2) return not_met("hypotheses fail");
        detail::PpMechanismResult result;
        try {
            result = detail::pp_mechanism(R, s, bounds.degree);
        } catch (const NotFinite&) {
            rep.hypotheses.push_back("annihilator layer: not decidable on a graded window");
            return not_met("p.p. correspondence requires a total finite ring");
        }
        if (result.violation) return violate(*result.violation);
        confirm("element annihilators with idempotent generators match at series level" +
                (result.skipped ? " (" + std::to_string(result.skipped) + " elements skipped)" : ""));
        return rep;
    }

    if (id == "COR-RIGID") {
        Verdict rigid = is_sigma_rigid(R, s);
        if (!hyp("sigma-rigid", truthy(rigid))) return not_met("rigidity witness: " + rigid.witness->text);
        Verdict srr = is_right_sigma_reversible(R, s);
        if (!truthy(srr)) {
            Witness w = *srr.witness;
            w.text = "rigid entry is not right sigma-reversible: " + w.text;
            return violate(std::move(w));
        }
        if (!s.preserves_unity()) {
            Witness w;
            w.text = "rigid entry has sigma(1) != 1";
            return violate(std::move(w));
        }
        Verdict red = is_reduced(R);
        if (!truthy(red)) {
            Witness w = *red.witness;
            w.text = "rigid entry is not reduced: " + w.text;
            return violate(std::move(w));
        }
        confirm("rigid entry satisfies the Baer-transfer hypotheses and is reduced");
        // the characterization through semiprimeness and one-sided symmetry
        Verdict sp = is_semiprime(R);
        Verdict ssr = is_right_sigma_symmetric(R, s);
        bool rhs = truthy(sp) && truthy(ssr) && s.injective();
        if (!rhs) {
            Witness w;
            w.text = std::string("rigid entry misses the characterization: semiprime=") +
                     to_string(sp.status) + " right_sigma_symmetric=" + to_string(ssr.status) +
                     " injective=" + (s.injective() ? "1" : "0");
            return violate(std::move(w));
        }
        confirm("semiprime, right sigma-symmetric, injective twist");
        return rep;
    }

    throw Error("unknown theorem id: " + id);
}

// ---------------------------------------------------------------------------
// Negative control: a truncated window of a power series ring is a different
// ring; Baer transfer lives in the annihilator mechanism, never in running the
// Baer decider on a truncation.

struct CaveatReport {
    bool ok = true;
    std::vector<std::string> lines;
};

inline CaveatReport truncation_caveat_check() {
    CaveatReport rep;
    auto z2 = make_zn(2);
    auto dual = make_poly_quotient(z2, {0, 0, 1});  // Z2[t]/(t^2): the N=2 truncation of Z2[[t]]

    Verdict base = is_baer(*z2);
    rep.ok &= base.status == Status::Holds;
    rep.lines.push_back("baer(Z2) = " + std::string(to_string(base.status)));

    Verdict trunc = is_baer(*dual);
    rep.ok &= trunc.status == Status::Fails;
    rep.lines.push_back("baer(Z2[t]/(t^2)) = " + std::string(to_string(trunc.status)) +
                        (trunc.witness ? " with " + trunc.witness->text : ""));

    CatalogEntry e{"Z2-identity", z2, Endomorphism::identity(z2), {}, ""};
    TheoremReport t = verify_theorem("T-BAER", e, {});
    rep.ok &= t.status == TheoremStatus::Confirmed;
    rep.lines.push_back("T-BAER on (Z2, identity) = " + std::string(to_string(t.status)));

    rep.lines.push_back(
        "truncating a series ring destroys Baerness; the transfer statement is about the full "
        "series ring and is exercised through the degree-bounded annihilator correspondence");
    return rep;
}

// ---------------------------------------------------------------------------
// Counterexample search

struct SearchCaps {
    std::uint64_t max_order = 8;
    DeciderOptions decider = {};
};

struct SearchHit {
    std::string ring;
    std::string endo;
    RingPtr ring_ptr;
    EndoPtr endo_ptr;
    Verdict q_verdict;  // the Fails verdict for Q, witness included
};

namespace detail {

inline std::vector<RingPtr> search_rings(std::uint64_t max_order) {
    std::vector<RingPtr> out;
    auto keep = [&](RingPtr r) {
        if (r->order() <= max_order) out.push_back(std::move(r));
    };
    for (std::uint64_t n = 2; n <= max_order; ++n) keep(make_zn(n));
    for (auto [p, k] : {std::pair<std::uint64_t, std::uint64_t>{2, 2}, {2, 3}, {3, 2}, {2, 4}})
        if (detail::checked_pow(p, k, 1u << 20, "search") <= max_order) keep(make_galois_field(p, k));
    for (std::uint64_t a = 2; a * 2 <= max_order; ++a)
        for (std::uint64_t b = a; a * b <= max_order; ++b) keep(make_product(make_zn(a), make_zn(b)));
    for (std::uint64_t p : {2, 3}) {
        if (p * p <= max_order) keep(make_poly_quotient(make_zn(p), {0, 0, 1}));          // t^2
        if (p * p * p <= max_order) keep(make_poly_quotient(make_zn(p), {0, 0, 0, 1}));   // t^3
    }
    if (16 <= max_order) keep(make_matrix(2, make_zn(2)));
    if (8 <= max_order) keep(make_upper_triangular(2, make_zn(2)));
    return out;
}

inline std::vector<EndoPtr> search_endos(RingPtr r) {
    std::vector<EndoPtr> out;
    out.push_back(Endomorphism::identity(r));
    if (r->kind() == RingKind::GaloisField) {
        auto* q = dynamic_cast<const PolyQuotientRing*>(r.get());
        std::uint64_t p = q->base().order();
        if (p < r->order()) out.push_back(Endomorphism::frobenius(r, p));
    }
    if (r->kind() == RingKind::PolyQuotient) {
        try {
            out.push_back(Endomorphism::constant_term(r));
        } catch (const NotAnEndomorphism&) {
        }
    }
    if (auto* p = dynamic_cast<const ProductRing*>(r.get()); p && p->symmetric_factors())
        out.push_back(Endomorphism::swap(r));
    if (r->order() <= 4) {
        // every verified self-map on the smallest rings
        std::uint64_t n = r->order(), maps = 1;
        for (std::uint64_t i = 0; i < n; ++i) maps *= n;
        for (std::uint64_t code = 0; code < maps; ++code) {
            std::vector<std::uint64_t> table(n);
            std::uint64_t v = code;
            for (auto& t : table) {
                t = v % n;
                v /= n;
            }
            if (!verify_endomorphism(*r, table).ok()) continue;
            bool dup = false;
            for (auto& have : out)
                if (std::equal(table.begin(), table.end(), have->table().begin())) dup = true;
            if (!dup) out.push_back(Endomorphism::from_table(r, std::move(table)));
        }
    }
    return out;
}

}  // namespace detail

// All (ring, endomorphism) pairs in the search family where P holds (or is
// verified up to its bound) and Q fails, in deterministic construction order.
inline std::vector<SearchHit> search_counterexamples(Property P, Property Q,
                                                     const SearchCaps& caps = {}) {
    std::vector<SearchHit> hits;
    for (auto& ring : detail::search_rings(caps.max_order)) {
        for (auto& endo : detail::search_endos(ring)) {
            Verdict vp, vq;
            try {
                vp = decide(P, *ring, endo.get(), caps.decider);
                if (vp.status == Status::Fails) continue;
                vq = decide(Q, *ring, endo.get(), caps.decider);
            } catch (const NotFinite&) {
                continue;
            }
            if (vq.status != Status::Fails) continue;
            hits.push_back({ring->name(), endo->name(), ring, endo, std::move(vq)});
        }
    }
    return hits;
}

}  // namespace skewlab
