// Acceptance runner: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skewlab/run.hpp"

using namespace skewlab;

namespace {

struct Criterion {
    int number;
    std::string label;
    double limit_seconds;
    std::function<bool(std::string&)> body;
};

bool truthy(const Verdict& v) { return v.status != Status::Fails; }

// independent convolution oracle over the Z2 window: elements are bitmasks of
// Z2[t] with sigma(f) = f(0)
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (int i = 0; i < 16; ++i)
        if (b >> i & 1) r ^= a << i;
    return r;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "ring axiom suite", 10.0, [](std::string& detail) {
        auto catalog = load_catalog();
        for (auto& e : catalog) {
            if (e.ring->order() > 16) continue;
            // direct triple loops over the full carrier
            auto rep = verify_ring_axioms(*e.ring, 16);
            if (!rep.ok) {
                detail = e.name + ": " + rep.detail;
                return false;
            }
        }
        detail = "exhaustive triples on every catalog ring of order <= 16";
        return true;
    }});

    criteria.push_back({2, "window Armendariz split", 30.0, [](std::string& detail) {
        auto w = make_bounded_poly(make_zn(2), 2);
        auto& W = dynamic_cast<const BoundedPolyRing&>(*w);
        auto eval0 = Endomorphism::eval_at_zero(w);
        DeciderOptions opt;
        opt.degree = 2;

        Verdict skew = is_sigma_skew_sps_armendariz_bounded(*w, *eval0, opt);
        if (skew.status != Status::VerifiedUpToBound || skew.bounds.degree != 2) {
            detail = "twisted variant should be VerifiedUpToBound(D=2), got " +
                     std::string(to_string(skew.status));
            return false;
        }

        Verdict sps = is_sigma_sps_armendariz_bounded(*w, *eval0, opt);
        if (sps.status != Status::Fails || !sps.witness) {
            detail = "untwisted variant should fail with a witness";
            return false;
        }
        if (!replay_witness(Property::SigmaSpsArmendariz, *w, eval0.get(), *sps.witness)) {
            detail = "decider witness does not replay";
            return false;
        }

        // reference witness p = t*x, q = t: the product vanishes by the
        // independent convolution oracle while a1*b0 = t^2 does not
        std::uint64_t t = W.from_coeffs({0, 1}).index;
        std::uint64_t c0 = clmul(0, t);                   // a0 * b0
        std::uint64_t c1 = clmul(t, t & 1);               // a1 * sigma(b0)
        if (c0 != 0 || c1 != 0 || clmul(t, t) == 0) {
            detail = "oracle disagrees about the reference pair";
            return false;
        }
        Witness ref;
        ref.polys = {{0, t, 0}, {t, 0, 0}};
        ref.i = 1;
        ref.j = 0;
        if (!replay_witness(Property::SigmaSpsArmendariz, *w, eval0.get(), ref)) {
            detail = "reference witness p=t*x, q=t does not replay";
            return false;
        }
        detail = "twisted VerifiedUpToBound(D=2), untwisted Fails at " + sps.witness->text;
        return true;
    }});

    criteria.push_back({3, "theorem suite", 120.0, [](std::string& detail) {
        auto catalog = load_catalog();
        TheoremBounds bounds;  // D=2, N=3
        int confirmed = 0, skipped = 0;
        std::string tbaer_gf4, tbaer_z2, tbaer_z4;
        for (auto& e : catalog)
            for (auto& id : theorem_ids()) {
                TheoremReport rep = verify_theorem(id, e, bounds);
                if (rep.status == TheoremStatus::Violation) {
                    detail = id + " on " + e.name + ": VIOLATION " + rep.note;
                    return false;
                }
                rep.status == TheoremStatus::Confirmed ? ++confirmed : ++skipped;
                if (id == "T-BAER") {
                    if (e.name == "GF4-frobenius") tbaer_gf4 = to_string(rep.status);
                    if (e.name == "Z2-identity") tbaer_z2 = to_string(rep.status);
                    if (e.name == "Z4-identity") tbaer_z4 = to_string(rep.status);
                }
            }
        if (tbaer_gf4 != "Confirmed" || tbaer_z2 != "Confirmed") {
            detail = "T-BAER must confirm on GF4-frobenius and Z2-identity";
            return false;
        }
        if (tbaer_z4 != "HypothesisNotMet") {
            detail = "T-BAER on Z4-identity must be HypothesisNotMet";
            return false;
        }
        detail = std::to_string(confirmed) + " confirmed, " + std::to_string(skipped) +
                 " hypothesis-gated, zero violations";
        return true;
    }});

    criteria.push_back({4, "separation searches", 60.0, [](std::string& detail) {
        struct Goal {
            Property p, q;
            std::uint64_t max_order;
            const char* ring;
            const char* endo;
        };
        Goal goals[] = {
            {Property::Reduced, Property::SigmaReversibleRight, 4, "Z2xZ2", "swap"},
            {Property::SigmaReversibleRight, Property::CSigma, 4, "Z2[t]/(t^2)", "const_term"},
            {Property::Baer, Property::Reversible, 16, "M2(Z2)", "identity"},
            {Property::Reduced, Property::SigmaRigid, 4, "Z2xZ2", "swap"},
        };
        for (auto& g : goals) {
            SearchCaps caps;
            caps.max_order = g.max_order;
            auto hits = search_counterexamples(g.p, g.q, caps);
            bool found = false;
            for (auto& h : hits) {
                if (!h.q_verdict.witness ||
                    !replay_witness(g.q, *h.ring_ptr, h.endo_ptr.get(), *h.q_verdict.witness)) {
                    detail = std::string("hit for ") + property_id(g.q) + " does not replay";
                    return false;
                }
                if (h.ring == g.ring && h.endo == g.endo) found = true;
            }
            if (!found) {
                detail = std::string("search (") + property_id(g.p) + ", " + property_id(g.q) +
                         ") missed (" + g.ring + ", " + g.endo + ")";
                return false;
            }
        }
        detail = "all four separations witnessed and replayed";
        return true;
    }});

    criteria.push_back({5, "truncation negative control", 5.0, [](std::string& detail) {
        auto rep = truncation_caveat_check();
        if (!rep.ok) {
            detail = "caveat check failed";
            for (auto& l : rep.lines) detail += "; " + l;
            return false;
        }
        detail = rep.lines[0] + "; " + rep.lines[1] + "; " + rep.lines[2];
        return true;
    }});

    criteria.push_back({6, "oracle equivalences", 30.0, [](std::string& detail) {
        auto catalog = load_catalog();

        // lattice closure equals the 2^|R| subset brute force
        for (auto& e : catalog) {
            const Ring& R = *e.ring;
            if (R.graded() || R.order() > 8) continue;
            std::set<std::vector<std::uint64_t>> brute;
            std::vector<std::uint64_t> everything;
            for (std::uint64_t c = 0; c < R.order(); ++c) everything.push_back(c);
            brute.insert(everything);
            for (std::uint64_t mask = 1; mask < (1u << R.order()); ++mask) {
                std::vector<std::uint64_t> ann;
                for (std::uint64_t c = 0; c < R.order(); ++c) {
                    bool kills = true;
                    for (std::uint64_t d = 0; d < R.order(); ++d)
                        if ((mask >> d & 1) && R.mul_ix(d, c) != 0) {
                            kills = false;
                            break;
                        }
                    if (kills) ann.push_back(c);
                }
                brute.insert(ann);
            }
            std::set<std::vector<std::uint64_t>> closed;
            for (auto& i : annihilator_lattice(R)) closed.insert(i.elems);
            if (closed != brute) {
                detail = e.name + ": lattice closure disagrees with the subset scan";
                return false;
            }
        }

        // truncated products match reduced polynomial products on sampled pairs
        std::mt19937_64 rng(2026);
        std::vector<const CatalogEntry*> pool;
        for (auto& e : catalog) pool.push_back(&e);
        for (int trial = 0; trial < 10000; ++trial) {
            auto& e = *pool[rng() % pool.size()];
            const Ring& R = *e.ring;
            std::size_t N = 2 + rng() % 2;
            std::vector<std::uint64_t> fc(N), gc(N);
            for (auto& c : fc) c = rng() % R.order();
            for (auto& c : gc) c = rng() % R.order();
            try {
                TruncSeries f = TruncSeries::from_indices(R, *e.endo, N, fc);
                TruncSeries g = TruncSeries::from_indices(R, *e.endo, N, gc);
                TruncSeries fg = trunc_mul(f, g);
                SkewPoly pq = skew_mul(SkewPoly::from_indices(R, *e.endo, fc),
                                       SkewPoly::from_indices(R, *e.endo, gc));
                for (std::size_t l = 0; l < N; ++l)
                    if (!(fg.coefficient(l) == pq.coefficient(l))) {
                        detail = e.name + ": truncated product deviates from the reduced product";
                        return false;
                    }
            } catch (const DegreeOverflow&) {
                continue;  // window pairs whose products leave the cap are out of domain
            }
        }

        // identity-twist deciders collapse onto the classical ones
        for (auto& e : catalog) {
            const Ring& R = *e.ring;
            auto id = Endomorphism::identity(e.ring);
            DeciderOptions opt;
            opt.degree = 1;
            struct Pair {
                Verdict twisted, classical;
            };
            Pair pairs[] = {
                {is_right_sigma_reversible(R, *id), is_reversible(R)},
                {is_left_sigma_reversible(R, *id), is_reversible(R)},
                {is_right_sigma_symmetric(R, *id), is_symmetric(R)},
                {is_sigma_rigid(R, *id), is_reduced(R)},
                {is_sigma_skew_sps_armendariz_bounded(R, *id, opt), is_armendariz_bounded(R, opt)},
                {is_sigma_sps_armendariz_bounded(R, *id, opt), is_armendariz_bounded(R, opt)},
            };
            for (auto& p : pairs)
                if (truthy(p.twisted) != truthy(p.classical)) {
                    detail = e.name + ": identity-twist decider disagrees with the classical one (" +
                             p.twisted.property + " vs " + p.classical.property + ")";
                    return false;
                }
            if (satisfies_c_sigma(R, *id).status != Status::Holds ||
                is_sigma_compatible(R, *id).status != Status::Holds) {
                detail = e.name + ": identity twist must satisfy C_sigma and compatibility";
                return false;
            }
        }
        detail = "lattice brute force, truncated-vs-reduced products, identity collapse";
        return true;
    }});

    criteria.push_back({7, "deterministic reports", 60.0, [](std::string& detail) {
        RunOptions opt;
        opt.format = Format::Machine;
        opt.seed = 12345;
        std::ostringstream a, b;
        int ca = run_catalog(opt, a);
        int cb = run_catalog(opt, b);
        if (ca != 0 || cb != 0) {
            detail = "catalog run exited nonzero";
            return false;
        }
        if (a.str() != b.str()) {
            detail = "two catalog runs with the same seed differ";
            return false;
        }
        detail = std::to_string(a.str().size()) + " bytes, byte-identical across runs";
        return true;
    }});

    int failures = 0;
    for (auto& c : criteria) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            ok = false;
            detail += " [exceeded " + std::to_string(c.limit_seconds) + "s limit]";
        }
        std::printf("%s criterion %d (%s): %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.number,
                    c.label.c_str(), detail.c_str(), secs);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
