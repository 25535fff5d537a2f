#pragma once

#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ring.hpp"

namespace skewlab {

enum class EndoKind { Identity, Frobenius, EvalAtZero, ConstantTerm, Swap, ExplicitTable };

struct EndoCheck {
    bool additive = true;
    bool multiplicative = true;
    bool preserves_unity = false;
    bool injective = false;
    bool identity = false;
    std::string detail;  // first violated law, rendered

    bool ok() const { return additive && multiplicative; }
};

// Exhaustive verification of a candidate self-map given as an index table.
// On graded rings multiplicativity is demanded wherever a*b exists: the image
// product must exist and match sigma(a*b).
inline EndoCheck verify_endomorphism(const Ring& R, std::span<const std::uint64_t> map) {
    if (map.size() != R.order())
        throw NotAnEndomorphism(R.name() + ": map must be total on " + std::to_string(R.order()) +
                                " elements");
    for (auto v : map)
        if (v >= R.order())
            throw NotAnEndomorphism(R.name() + ": map leaves the ring's domain (image index " +
                                    std::to_string(v) + ")");
    EndoCheck rep;
    std::uint64_t n = R.order();
    for (std::uint64_t a = 0; a < n && rep.additive; ++a)
        for (std::uint64_t b = a; b < n; ++b)
            if (map[R.add_ix(a, b)] != R.add_ix(map[a], map[b])) {
                rep.additive = false;
                rep.detail = "additivity fails at (" + R.render(R.element(a)) + "," +
                             R.render(R.element(b)) + ")";
                break;
            }
    for (std::uint64_t a = 0; a < n && rep.multiplicative; ++a)
        for (std::uint64_t b = 0; b < n; ++b) {
            auto ab = R.try_mul_ix(a, b);
            if (!ab) continue;
            auto im = R.try_mul_ix(map[a], map[b]);
            if (!im || map[*ab] != *im) {
                rep.multiplicative = false;
                rep.detail = "multiplicativity fails at (" + R.render(R.element(a)) + "," +
                             R.render(R.element(b)) + ")";
                break;
            }
        }
    rep.preserves_unity = map[R.one().index] == R.one().index;
    std::vector<bool> seen(n, false);
    rep.injective = true;
    for (auto v : map) {
        if (seen[v]) rep.injective = false;
        seen[v] = true;
    }
    rep.identity = true;
    for (std::uint64_t a = 0; a < n; ++a)
        if (map[a] != a) {
            rep.identity = false;
            break;
        }
    return rep;
}

class Endomorphism {
public:
    const Ring& ring() const { return *ring_; }
    EndoKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool preserves_unity() const { return check_.preserves_unity; }
    bool injective() const { return check_.injective; }
    bool is_identity() const { return check_.identity; }
    const EndoCheck& verification() const { return check_; }
    std::span<const std::uint64_t> table() const { return map_; }
    std::uint64_t apply_ix(std::uint64_t i) const { return map_[i]; }

    Element apply(Element a) const {
        require(a);
        return {ring_.get(), map_[a.index]};
    }

    // sigma^i; power 0 is the identity.
    Element apply_power(std::uint64_t i, Element a) const {
        require(a);
        if (i == 0) return a;
        return {ring_.get(), power_table(i)[a.index]};
    }

    // Table of sigma^i, cached so convolution loops pay one lookup per term.
    std::span<const std::uint64_t> power_table(std::uint64_t i) const {
        if (i == 0) return {identity_.data(), identity_.size()};
        std::lock_guard<std::mutex> lock(mu_);
        if (powers_.empty()) powers_.push_back(map_);  // powers_[k] holds sigma^(k+1)
        while (powers_.size() < i) {
            const std::vector<std::uint64_t>& prev = powers_.back();
            std::vector<std::uint64_t> next(prev.size());
            for (std::size_t a = 0; a < prev.size(); ++a) next[a] = map_[prev[a]];
            powers_.push_back(std::move(next));
        }
        return {powers_[i - 1].data(), powers_[i - 1].size()};
    }

    static std::shared_ptr<const Endomorphism> identity(RingPtr ring) {
        std::vector<std::uint64_t> map(ring->order());
        std::iota(map.begin(), map.end(), 0);
        return build(std::move(ring), EndoKind::Identity, "identity", std::move(map), false);
    }

    // a -> a^q
    static std::shared_ptr<const Endomorphism> frobenius(RingPtr ring, std::uint64_t q) {
        if (q < 2) throw NotAnEndomorphism("frobenius exponent must be >= 2");
        std::vector<std::uint64_t> map(ring->order());
        for (std::uint64_t a = 0; a < ring->order(); ++a) {
            Element p = ring->pow(ring->element(a), q);  // DegreeOverflow leaves the domain
            map[a] = p.index;
        }
        return build(std::move(ring), EndoKind::Frobenius, "frobenius(" + std::to_string(q) + ")",
                     std::move(map), true);
    }

    // f(t) -> f(0) on a degree-capped polynomial window.
    static std::shared_ptr<const Endomorphism> eval_at_zero(RingPtr ring) {
        auto* w = dynamic_cast<const BoundedPolyRing*>(ring.get());
        if (!w) throw NotAnEndomorphism("eval0 requires a BoundedPoly ring, got " + ring->name());
        std::vector<std::uint64_t> map(ring->order());
        for (std::uint64_t a = 0; a < ring->order(); ++a) map[a] = w->digits(w->element(a))[0];
        return build(std::move(ring), EndoKind::EvalAtZero, "eval0", std::move(map), true);
    }

    // a0 + a1 t + ... -> a0 on a quotient ring.
    static std::shared_ptr<const Endomorphism> constant_term(RingPtr ring) {
        auto* q = dynamic_cast<const PolyQuotientRing*>(ring.get());
        if (!q) throw NotAnEndomorphism("const_term requires a PolyQuot or GF ring, got " + ring->name());
        std::vector<std::uint64_t> map(ring->order());
        for (std::uint64_t a = 0; a < ring->order(); ++a) map[a] = q->digits(q->element(a))[0];
        return build(std::move(ring), EndoKind::ConstantTerm, "const_term", std::move(map), true);
    }

    // (a,b) -> (b,a) on a product of two copies of the same ring.
    static std::shared_ptr<const Endomorphism> swap(RingPtr ring) {
        auto* p = dynamic_cast<const ProductRing*>(ring.get());
        if (!p) throw NotAnEndomorphism("swap requires a Product ring, got " + ring->name());
        if (!p->symmetric_factors())
            throw NotAnEndomorphism("swap requires equal product factors in " + ring->name());
        std::uint64_t o2 = p->second().order();
        std::vector<std::uint64_t> map(ring->order());
        for (std::uint64_t a = 0; a < ring->order(); ++a) map[a] = (a % o2) * o2 + a / o2;
        return build(std::move(ring), EndoKind::Swap, "swap", std::move(map), true);
    }

    static std::shared_ptr<const Endomorphism> from_table(RingPtr ring, std::vector<std::uint64_t> map,
                                                          std::string name = "table") {
        return build(std::move(ring), EndoKind::ExplicitTable, std::move(name), std::move(map), true);
    }

private:
    Endomorphism(RingPtr ring, EndoKind kind, std::string name, std::vector<std::uint64_t> map,
                 EndoCheck check)
        : ring_(std::move(ring)), kind_(kind), name_(std::move(name)), map_(std::move(map)),
          check_(check), identity_(map_.size()) {
        std::iota(identity_.begin(), identity_.end(), 0);
    }

    static std::shared_ptr<const Endomorphism> build(RingPtr ring, EndoKind kind, std::string name,
                                                     std::vector<std::uint64_t> map, bool verify) {
        EndoCheck check;
        if (verify) {
            check = verify_endomorphism(*ring, map);
            if (!check.ok())
                throw NotAnEndomorphism(ring->name() + ": " + name + ": " + check.detail);
        } else {
            check.preserves_unity = true;
            check.injective = true;
            check.identity = true;
        }
        return std::shared_ptr<const Endomorphism>(
            new Endomorphism(std::move(ring), kind, std::move(name), std::move(map), check));
    }

    void require(const Element& a) const {
        if (a.ring != ring_.get())
            throw RingMismatch(name_ + " is defined on " + ring_->name() + ", not on " +
                               (a.ring ? a.ring->name() : std::string("<none>")));
    }

    RingPtr ring_;
    EndoKind kind_;
    std::string name_;
    std::vector<std::uint64_t> map_;
    EndoCheck check_;
    std::vector<std::uint64_t> identity_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<std::uint64_t>> powers_;
};

using EndoPtr = std::shared_ptr<const Endomorphism>;

}  // namespace skewlab
