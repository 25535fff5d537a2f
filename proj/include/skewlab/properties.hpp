#pragma once

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "skew.hpp"
#include "structure.hpp"

namespace skewlab {

enum class Status { Holds, Fails, VerifiedUpToBound };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Fails: return "Fails";
        case Status::VerifiedUpToBound: return "VerifiedUpToBound";
    }
    return "?";
}

struct Bounds {
    std::optional<int> degree;
    std::optional<int> trunc;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;

    std::string render() const {
        std::string out;
        auto put = [&](const char* k, auto v) {
            if (!out.empty()) out += ";";
            out += std::string(k) + "=" + std::to_string(v);
        };
        if (degree) put("D", *degree);
        if (trunc) put("N", *trunc);
        if (samples) put("samples", *samples);
        if (seed) put("seed", *seed);
        return out.empty() ? "-" : out;
    }
};

// Structured counterexample data, enough to replay the defining implication.
struct Witness {
    std::vector<std::uint64_t> elems;                // element indices, role order
    std::vector<std::vector<std::uint64_t>> polys;   // coefficient tuples, low to high
    std::vector<std::uint64_t> set_a, set_b;         // ideal / source sets
    int i = -1, j = -1;                              // coefficient positions
    std::string text;                                // rendered one-liner, no tabs
};

struct Verdict {
    std::string property;
    std::string ring;
    std::string endo;  // "-" when no twist participates
    Status status = Status::Holds;
    Bounds bounds;
    std::optional<Witness> witness;

    bool ok() const { return status != Status::Fails; }
};

enum class Property {
    Reduced,
    Reversible,
    Symmetric,
    Semiprime,
    Abelian,
    SigmaReversibleRight,
    SigmaReversibleLeft,
    SigmaSymmetricRight,
    SigmaSymmetricLeft,
    SigmaRigid,
    CSigma,
    SigmaCompatible,
    Baer,
    QuasiBaer,
    PpRight,
    PpLeft,
    Armendariz,
    SigmaSkewSpsArmendariz,
    SigmaSpsArmendariz,
};

inline const std::vector<std::pair<Property, const char*>>& property_table() {
    static const std::vector<std::pair<Property, const char*>> t = {
        {Property::Reduced, "reduced"},
        {Property::Reversible, "reversible"},
        {Property::Symmetric, "symmetric"},
        {Property::Semiprime, "semiprime"},
        {Property::Abelian, "abelian"},
        {Property::SigmaReversibleRight, "sigma_reversible_right"},
        {Property::SigmaReversibleLeft, "sigma_reversible_left"},
        {Property::SigmaSymmetricRight, "sigma_symmetric_right"},
        {Property::SigmaSymmetricLeft, "sigma_symmetric_left"},
        {Property::SigmaRigid, "sigma_rigid"},
        {Property::CSigma, "c_sigma"},
        {Property::SigmaCompatible, "sigma_compatible"},
        {Property::Baer, "baer"},
        {Property::QuasiBaer, "quasi_baer"},
        {Property::PpRight, "pp_right"},
        {Property::PpLeft, "pp_left"},
        {Property::Armendariz, "armendariz"},
        {Property::SigmaSkewSpsArmendariz, "sigma_skew_sps_armendariz"},
        {Property::SigmaSpsArmendariz, "sigma_sps_armendariz"},
    };
    return t;
}

inline const char* property_id(Property p) {
    for (auto& [q, id] : property_table())
        if (q == p) return id;
    return "?";
}

inline std::optional<Property> property_from_id(const std::string& id) {
    for (auto& [p, s] : property_table())
        if (id == s) return p;
    return std::nullopt;
}

inline bool property_needs_endo(Property p) {
    switch (p) {
        case Property::SigmaReversibleRight:
        case Property::SigmaReversibleLeft:
        case Property::SigmaSymmetricRight:
        case Property::SigmaSymmetricLeft:
        case Property::SigmaRigid:
        case Property::CSigma:
        case Property::SigmaCompatible:
        case Property::SigmaSkewSpsArmendariz:
        case Property::SigmaSpsArmendariz:
            return true;
        default:
            return false;
    }
}

struct DeciderOptions {
    int degree = 2;                      // D for the Armendariz family
    std::uint64_t budget = 50'000'000;   // largest exhaustive pair enumeration
    std::uint64_t samples = 10'000;      // fallback sample count when over budget
    std::uint64_t seed = 0;
};

namespace detail {

inline void guard_ring(const Ring& R) {
    if (R.order() < 2) throw DegenerateRing(R.name() + ": deciders require 1 != 0");
}

// Non-owning view used when a decider needs the untwisted product structure.
inline EndoPtr identity_on(const Ring& R) {
    return Endomorphism::identity(RingPtr(std::shared_ptr<void>(), &R));
}

inline Verdict holds(Property p, const Ring& R, const Endomorphism* s) {
    return {property_id(p), R.name(), s ? s->name() : "-", Status::Holds, {}, std::nullopt};
}

inline Verdict fails(Property p, const Ring& R, const Endomorphism* s, Witness w) {
    return {property_id(p), R.name(), s ? s->name() : "-", Status::Fails, {}, std::move(w)};
}

inline Witness pair_witness(const Ring& R, std::uint64_t a, std::uint64_t b) {
    Witness w;
    w.elems = {a, b};
    w.text = "a=" + R.render(R.element(a)) + " b=" + R.render(R.element(b));
    return w;
}

inline Witness triple_witness(const Ring& R, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    Witness w;
    w.elems = {a, b, c};
    w.text = "a=" + R.render(R.element(a)) + " b=" + R.render(R.element(b)) + " c=" +
             R.render(R.element(c));
    return w;
}

}  // namespace detail

// --- element-level deciders (exact on graded windows) ---------------------

inline Verdict is_reduced(const Ring& R) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto a : R.elements())
        if (!R.is_zero(a) && X.zero_product(a, a)) {
            Witness w;
            w.elems = {a.index};
            w.text = "a=" + R.render(a) + " with a^2=0";
            return detail::fails(Property::Reduced, R, nullptr, std::move(w));
        }
    return detail::holds(Property::Reduced, R, nullptr);
}

inline Verdict is_reversible(const Ring& R) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto a : R.elements())
        for (auto b : R.elements())
            if (X.zero_product(a, b) && !X.zero_product(b, a))
                return detail::fails(Property::Reversible, R, nullptr,
                                     detail::pair_witness(R, a.index, b.index));
    return detail::holds(Property::Reversible, R, nullptr);
}

inline Verdict is_symmetric(const Ring& R) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto a : R.elements())
        for (auto b : R.elements())
            for (auto c : R.elements())
                if (X.zero_product3(a, b, c) && !X.zero_product3(a, c, b))
                    return detail::fails(Property::Symmetric, R, nullptr,
                                         detail::triple_witness(R, a.index, b.index, c.index));
    return detail::holds(Property::Symmetric, R, nullptr);
}

inline Verdict is_semiprime(const Ring& R) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto a : R.elements()) {
        if (R.is_zero(a)) continue;
        bool all = true;
        for (auto r : R.elements())
            if (!X.zero_product3(a, r, a)) {
                all = false;
                break;
            }
        if (all) {
            Witness w;
            w.elems = {a.index};
            w.text = "a=" + R.render(a) + " with aRa=0";
            return detail::fails(Property::Semiprime, R, nullptr, std::move(w));
        }
    }
    return detail::holds(Property::Semiprime, R, nullptr);
}

inline Verdict is_abelian(const Ring& R, const Endomorphism* sigma_context = nullptr) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto e_ix : idempotents(R)) {
        Element e = R.element(e_ix);
        for (auto r : R.elements())
            if (!X.commute(e, r)) {
                Witness w;
                w.elems = {e.index, r.index};
                w.text = "idempotent e=" + R.render(e) + " does not commute with r=" + R.render(r);
                return detail::fails(Property::Abelian, R, sigma_context, std::move(w));
            }
    }
    return detail::holds(Property::Abelian, R, sigma_context);
}

inline Verdict is_right_sigma_reversible(const Ring& R, const Endomorphism& s) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto a : R.elements()) {
        Element sa = s.apply(a);
        for (auto b : R.elements())
            if (X.zero_product(a, b) && !X.zero_product(b, sa))
                return detail::fails(Property::SigmaReversibleRight, R, &s,
                                     detail::pair_witness(R, a.index, b.index));
    }
    return detail::holds(Property::SigmaReversibleRight, R, &s);
}

inline Verdict is_left_sigma_reversible(const Ring& R, const Endomorphism& s) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto a : R.elements())
        for (auto b : R.elements())
            if (X.zero_product(a, b) && !X.zero_product(s.apply(b), a))
                return detail::fails(Property::SigmaReversibleLeft, R, &s,
                                     detail::pair_witness(R, a.index, b.index));
    return detail::holds(Property::SigmaReversibleLeft, R, &s);
}

inline Verdict is_right_sigma_symmetric(const Ring& R, const Endomorphism& s) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto a : R.elements())
        for (auto b : R.elements()) {
            Element sb = s.apply(b);
            for (auto c : R.elements())
                if (X.zero_product3(a, b, c) && !X.zero_product3(a, c, sb))
                    return detail::fails(Property::SigmaSymmetricRight, R, &s,
                                         detail::triple_witness(R, a.index, b.index, c.index));
        }
    return detail::holds(Property::SigmaSymmetricRight, R, &s);
}

inline Verdict is_left_sigma_symmetric(const Ring& R, const Endomorphism& s) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto a : R.elements())
        for (auto b : R.elements()) {
            Element sb = s.apply(b);
            for (auto c : R.elements())
                if (X.zero_product3(a, b, c) && !X.zero_product3(sb, a, c))
                    return detail::fails(Property::SigmaSymmetricLeft, R, &s,
                                         detail::triple_witness(R, a.index, b.index, c.index));
        }
    return detail::holds(Property::SigmaSymmetricLeft, R, &s);
}

// both-sided combinations used by the theorem chains
inline Verdict is_sigma_reversible(const Ring& R, const Endomorphism& s) {
    Verdict r = is_right_sigma_reversible(R, s);
    if (!r.ok()) return r;
    return is_left_sigma_reversible(R, s);
}

inline Verdict is_sigma_symmetric(const Ring& R, const Endomorphism& s) {
    Verdict r = is_right_sigma_symmetric(R, s);
    if (!r.ok()) return r;
    return is_left_sigma_symmetric(R, s);
}

inline Verdict is_sigma_rigid(const Ring& R, const Endomorphism& s) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto a : R.elements())
        if (!R.is_zero(a) && X.zero_product(a, s.apply(a))) {
            Witness w;
            w.elems = {a.index};
            w.text = "a=" + R.render(a) + " with a*sigma(a)=0";
            return detail::fails(Property::SigmaRigid, R, &s, std::move(w));
        }
    return detail::holds(Property::SigmaRigid, R, &s);
}

inline Verdict satisfies_c_sigma(const Ring& R, const Endomorphism& s) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto a : R.elements())
        for (auto b : R.elements())
            if (X.zero_product(a, s.apply(b)) && !X.zero_product(a, b))
                return detail::fails(Property::CSigma, R, &s, detail::pair_witness(R, a.index, b.index));
    return detail::holds(Property::CSigma, R, &s);
}

inline Verdict is_sigma_compatible(const Ring& R, const Endomorphism& s) {
    detail::guard_ring(R);
    ExactMul X(R);
    for (auto a : R.elements())
        for (auto b : R.elements())
            if (X.zero_product(a, s.apply(b)) != X.zero_product(a, b))
                return detail::fails(Property::SigmaCompatible, R, &s,
                                     detail::pair_witness(R, a.index, b.index));
    return detail::holds(Property::SigmaCompatible, R, &s);
}

// --- annihilator-generation deciders (total finite rings only) ------------

inline Verdict is_baer(const Ring& R) {
    detail::guard_ring(R);
    require_finite(R, "baer");
    for (auto& ideal : annihilator_lattice(R)) {
        if (!generated_by_idempotent(R, ideal)) {
            Witness w;
            w.set_a = ideal.elems;
            w.set_b = ideal.source;
            w.text = "ideal " + render_element_set(R, ideal.elems) + " = r(" +
                     render_element_set(R, ideal.source) + ") has no idempotent generator";
            return detail::fails(Property::Baer, R, nullptr, std::move(w));
        }
    }
    return detail::holds(Property::Baer, R, nullptr);
}

inline Verdict is_quasi_baer(const Ring& R) {
    detail::guard_ring(R);
    require_finite(R, "quasi_baer");
    for (auto& ideal : right_ideals(R)) {
        auto ann = right_annihilator(R, ideal.elems);
        if (!generated_by_idempotent(R, ann)) {
            Witness w;
            w.set_a = ideal.elems;
            w.set_b = ann.elems;
            w.text = "right ideal " + render_element_set(R, ideal.elems) + " with r(I) " +
                     render_element_set(R, ann.elems) + " not generated by an idempotent";
            return detail::fails(Property::QuasiBaer, R, nullptr, std::move(w));
        }
    }
    return detail::holds(Property::QuasiBaer, R, nullptr);
}

inline Verdict is_pp(const Ring& R, Side side) {
    detail::guard_ring(R);
    require_finite(R, side == Side::Right ? "pp_right" : "pp_left");
    Property p = side == Side::Right ? Property::PpRight : Property::PpLeft;
    for (std::uint64_t a = 0; a < R.order(); ++a) {
        std::uint64_t one[1] = {a};
        auto ann = annihilator(R, one, side);
        if (!generated_by_idempotent(R, ann)) {
            Witness w;
            w.elems = {a};
            w.set_a = ann.elems;
            w.text = "a=" + R.render(R.element(a)) + " with ann(a) " +
                     render_element_set(R, ann.elems) + " not generated by an idempotent";
            return detail::fails(p, R, nullptr, std::move(w));
        }
    }
    return detail::holds(p, R, nullptr);
}

// --- Armendariz family at polynomial degree <= D ---------------------------

enum class ArmVariant { Classical, SigmaSkew, SigmaSps };

namespace detail {

inline Property arm_property(ArmVariant v) {
    switch (v) {
        case ArmVariant::Classical: return Property::Armendariz;
        case ArmVariant::SigmaSkew: return Property::SigmaSkewSpsArmendariz;
        case ArmVariant::SigmaSps: return Property::SigmaSpsArmendariz;
    }
    return Property::Armendariz;
}

// Scans every pair of coefficient tuples of degree <= D with p*q = 0 exactly
// and checks the variant's coefficientwise products. Exhaustive when the pair
// count fits the budget; otherwise a seeded sample of recorded size.
inline Verdict armendariz_scan(const Ring& R, const Endomorphism& s, ArmVariant v,
                               const DeciderOptions& opt) {
    guard_ring(R);
    ExactMul X(R);
    const int D = opt.degree;
    const std::size_t len = static_cast<std::size_t>(D) + 1;
    const std::uint64_t sat = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t tuples = 1;
    for (int i = 0; i <= D; ++i) {
        if (tuples > sat / R.order()) {
            tuples = sat;
            break;
        }
        tuples *= R.order();
    }
    bool exhaustive = tuples != sat && tuples <= opt.budget / tuples;

    std::vector<Element> p(len, R.zero()), q(len, R.zero());
    auto decode = [&](std::uint64_t ix, std::vector<Element>& out) {
        for (auto& e : out) {
            e = Element{&R, ix % R.order()};
            ix /= R.order();
        }
    };

    auto check_pair = [&](const std::vector<Element>& p, const std::vector<Element>& q)
        -> std::optional<Witness> {
        if (!ore_product_is_zero(X, s, p, q)) return std::nullopt;
        for (int i = 0; i <= D; ++i) {
            if (R.is_zero(p[i])) continue;
            auto tab = v == ArmVariant::SigmaSkew ? s.power_table(i) : s.power_table(0);
            for (int j = 0; j <= D; ++j) {
                Element rhs{&R, tab[q[j].index]};
                std::uint64_t prod = X.mul(p[i], rhs);
                if (prod != 0) {
                    Witness w;
                    w.polys = {{}, {}};
                    for (auto& e : p) w.polys[0].push_back(e.index);
                    for (auto& e : q) w.polys[1].push_back(e.index);
                    w.i = i;
                    w.j = j;
                    SkewPoly pp = SkewPoly::from_indices(R, s, w.polys[0]);
                    SkewPoly qq = SkewPoly::from_indices(R, s, w.polys[1]);
                    const Ring& Wd = X.wide();
                    std::string prods = Wd.render(Wd.element(prod));
                    w.text = "p=" + pp.render() + " q=" + qq.render() + " pq=0 but a" +
                             std::to_string(i) + (v == ArmVariant::SigmaSkew ? "*s^i(b" : "*b") +
                             std::to_string(j) + (v == ArmVariant::SigmaSkew ? ")" : "") + "=" + prods;
                    return w;
                }
            }
        }
        return std::nullopt;
    };

    Bounds bounds;
    bounds.degree = D;
    if (exhaustive) {
        for (std::uint64_t pix = 0; pix < tuples; ++pix) {
            decode(pix, p);
            for (std::uint64_t qix = 0; qix < tuples; ++qix) {
                decode(qix, q);
                if (auto w = check_pair(p, q)) {
                    Verdict verdict = fails(arm_property(v), R, &s, std::move(*w));
                    verdict.bounds = bounds;
                    return verdict;
                }
            }
        }
    } else {
        bounds.samples = opt.samples;
        bounds.seed = opt.seed;
        std::mt19937_64 rng(opt.seed);
        for (std::uint64_t k = 0; k < opt.samples; ++k) {
            for (auto& e : p) e = Element{&R, rng() % R.order()};
            for (auto& e : q) e = Element{&R, rng() % R.order()};
            if (auto w = check_pair(p, q)) {
                Verdict verdict = fails(arm_property(v), R, &s, std::move(*w));
                verdict.bounds = bounds;
                return verdict;
            }
        }
    }
    Verdict verdict{property_id(arm_property(v)), R.name(), s.name(), Status::VerifiedUpToBound,
                    bounds, std::nullopt};
    return verdict;
}

}  // namespace detail

inline Verdict is_armendariz_bounded(const Ring& R, const DeciderOptions& opt = {}) {
    EndoPtr id = detail::identity_on(R);
    Verdict v = detail::armendariz_scan(R, *id, ArmVariant::Classical, opt);
    v.endo = "-";
    return v;
}

inline Verdict is_sigma_skew_sps_armendariz_bounded(const Ring& R, const Endomorphism& s,
                                                    const DeciderOptions& opt = {}) {
    return detail::armendariz_scan(R, s, ArmVariant::SigmaSkew, opt);
}

inline Verdict is_sigma_sps_armendariz_bounded(const Ring& R, const Endomorphism& s,
                                               const DeciderOptions& opt = {}) {
    return detail::armendariz_scan(R, s, ArmVariant::SigmaSps, opt);
}

// --- dispatch and replay ----------------------------------------------------

inline Verdict decide(Property p, const Ring& R, const Endomorphism* s,
                      const DeciderOptions& opt = {}) {
    if (property_needs_endo(p) && !s)
        throw Error(std::string("property ") + property_id(p) + " needs an endomorphism");
    switch (p) {
        case Property::Reduced: return is_reduced(R);
        case Property::Reversible: return is_reversible(R);
        case Property::Symmetric: return is_symmetric(R);
        case Property::Semiprime: return is_semiprime(R);
        case Property::Abelian: return is_abelian(R, s);
        case Property::SigmaReversibleRight: return is_right_sigma_reversible(R, *s);
        case Property::SigmaReversibleLeft: return is_left_sigma_reversible(R, *s);
        case Property::SigmaSymmetricRight: return is_right_sigma_symmetric(R, *s);
        case Property::SigmaSymmetricLeft: return is_left_sigma_symmetric(R, *s);
        case Property::SigmaRigid: return is_sigma_rigid(R, *s);
        case Property::CSigma: return satisfies_c_sigma(R, *s);
        case Property::SigmaCompatible: return is_sigma_compatible(R, *s);
        case Property::Baer: return is_baer(R);
        case Property::QuasiBaer: return is_quasi_baer(R);
        case Property::PpRight: return is_pp(R, Side::Right);
        case Property::PpLeft: return is_pp(R, Side::Left);
        case Property::Armendariz: return is_armendariz_bounded(R, opt);
        case Property::SigmaSkewSpsArmendariz: return is_sigma_skew_sps_armendariz_bounded(R, *s, opt);
        case Property::SigmaSpsArmendariz: return is_sigma_sps_armendariz_bounded(R, *s, opt);
    }
    throw Error("unknown property");
}

// Re-evaluates the defining implication on the stored counterexample. True
// means the witness still exhibits the violation.
inline bool replay_witness(Property p, const Ring& R, const Endomorphism* s, const Witness& w) {
    ExactMul X(R);
    auto el = [&](std::size_t k) { return R.element(w.elems.at(k)); };
    switch (p) {
        case Property::Reduced:
            return !R.is_zero(el(0)) && X.zero_product(el(0), el(0));
        case Property::Reversible:
            return X.zero_product(el(0), el(1)) && !X.zero_product(el(1), el(0));
        case Property::Symmetric:
            return X.zero_product3(el(0), el(1), el(2)) && !X.zero_product3(el(0), el(2), el(1));
        case Property::Semiprime: {
            if (R.is_zero(el(0))) return false;
            for (auto r : R.elements())
                if (!X.zero_product3(el(0), r, el(0))) return false;
            return true;
        }
        case Property::Abelian:
            return X.mul(el(0), el(0)) == X.lift(el(0)) && !X.commute(el(0), el(1));
        case Property::SigmaReversibleRight:
            return X.zero_product(el(0), el(1)) && !X.zero_product(el(1), s->apply(el(0)));
        case Property::SigmaReversibleLeft:
            return X.zero_product(el(0), el(1)) && !X.zero_product(s->apply(el(1)), el(0));
        case Property::SigmaSymmetricRight:
            return X.zero_product3(el(0), el(1), el(2)) &&
                   !X.zero_product3(el(0), el(2), s->apply(el(1)));
        case Property::SigmaSymmetricLeft:
            return X.zero_product3(el(0), el(1), el(2)) &&
                   !X.zero_product3(s->apply(el(1)), el(0), el(2));
        case Property::SigmaRigid:
            return !R.is_zero(el(0)) && X.zero_product(el(0), s->apply(el(0)));
        case Property::CSigma:
            return X.zero_product(el(0), s->apply(el(1))) && !X.zero_product(el(0), el(1));
        case Property::SigmaCompatible:
            return X.zero_product(el(0), s->apply(el(1))) != X.zero_product(el(0), el(1));
        case Property::Baer: {
            auto ann = right_annihilator(R, w.set_b);
            return ann.elems == w.set_a && !generated_by_idempotent(R, ann);
        }
        case Property::QuasiBaer: {
            if (!is_closed_one_sided_ideal(R, w.set_a, Side::Right)) return false;
            auto ann = right_annihilator(R, w.set_a);
            return ann.elems == w.set_b && !generated_by_idempotent(R, ann);
        }
        case Property::PpRight:
        case Property::PpLeft: {
            Side side = p == Property::PpRight ? Side::Right : Side::Left;
            std::uint64_t one[1] = {w.elems.at(0)};
            auto ann = annihilator(R, one, side);
            return ann.elems == w.set_a && !generated_by_idempotent(R, ann);
        }
        case Property::Armendariz:
        case Property::SigmaSkewSpsArmendariz:
        case Property::SigmaSpsArmendariz: {
            EndoPtr id;
            const Endomorphism* twist = s;
            if (p == Property::Armendariz) {
                id = detail::identity_on(R);
                twist = id.get();
            }
            std::vector<Element> pc, qc;
            for (auto ix : w.polys.at(0)) pc.push_back(R.element(ix));
            for (auto ix : w.polys.at(1)) qc.push_back(R.element(ix));
            if (!detail::ore_product_is_zero(X, *twist, pc, qc)) return false;
            Element b = qc.at(w.j);
            if (p == Property::SigmaSkewSpsArmendariz) b = twist->apply_power(w.i, b);
            return X.mul(pc.at(w.i), b) != 0;
        }
    }
    return false;
}

}  // namespace skewlab
