#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ring.hpp"

namespace skewlab {

enum class Side { Right, Left };

// Ideal-theoretic machinery needs a total product. Degree-capped windows only
// support the element-level scans below (idempotents, exact zero tests).
inline void require_finite(const Ring& R, const char* what) {
    if (R.graded())
        throw NotFinite(std::string(what) + " requires a finite ring; " + R.name() +
                        " is a graded window");
}

// A verified right (or left) ideal: sorted element indices, closed under
// addition and one-sided multiplication, plus an optional idempotent e with
// I = eR found later.
struct RightIdeal {
    const Ring* ring = nullptr;
    Side side = Side::Right;
    std::vector<std::uint64_t> elems;
    std::optional<std::uint64_t> generator;
    // for annihilators: a set X with ann(X) = elems (empty X means ann of the empty set)
    std::vector<std::uint64_t> source;

    bool contains(std::uint64_t ix) const {
        return std::binary_search(elems.begin(), elems.end(), ix);
    }
    friend bool operator==(const RightIdeal& a, const RightIdeal& b) {
        return a.ring == b.ring && a.elems == b.elems;
    }
    friend bool operator<(const RightIdeal& a, const RightIdeal& b) { return a.elems < b.elems; }
};

inline std::string render_element_set(const Ring& R, std::span<const std::uint64_t> xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += R.render(R.element(xs[i]));
    }
    return out + "}";
}

inline bool is_closed_one_sided_ideal(const Ring& R, std::span<const std::uint64_t> elems, Side side) {
    if (!std::binary_search(elems.begin(), elems.end(), std::uint64_t{0})) return false;
    for (auto a : elems) {
        for (auto b : elems) {
            std::uint64_t s = R.add_ix(a, b);
            if (!std::binary_search(elems.begin(), elems.end(), s)) return false;
        }
        for (std::uint64_t r = 0; r < R.order(); ++r) {
            std::uint64_t p = side == Side::Right ? R.mul_ix(a, r) : R.mul_ix(r, a);
            if (!std::binary_search(elems.begin(), elems.end(), p)) return false;
        }
    }
    return true;
}

inline RightIdeal annihilator(const Ring& R, std::span<const std::uint64_t> xs, Side side) {
    require_finite(R, side == Side::Right ? "right_annihilator" : "left_annihilator");
    RightIdeal out{&R, side, {}, std::nullopt};
    for (std::uint64_t c = 0; c < R.order(); ++c) {
        bool kills = true;
        for (auto d : xs) {
            std::uint64_t p = side == Side::Right ? R.mul_ix(d, c) : R.mul_ix(c, d);
            if (p != 0) {
                kills = false;
                break;
            }
        }
        if (kills) out.elems.push_back(c);
    }
    if (!is_closed_one_sided_ideal(R, out.elems, side))
        throw Error(R.name() + ": annihilator failed its closure verification");
    return out;
}

inline RightIdeal right_annihilator(const Ring& R, std::span<const std::uint64_t> xs) {
    return annihilator(R, xs, Side::Right);
}
inline RightIdeal left_annihilator(const Ring& R, std::span<const std::uint64_t> xs) {
    return annihilator(R, xs, Side::Left);
}

// {e : e*e = e}, ascending. Exact on windows: a square that leaves the window
// cannot equal its in-window base.
inline std::vector<std::uint64_t> idempotents(const Ring& R) {
    ExactMul X(R);
    std::vector<std::uint64_t> out;
    for (auto e : R.elements())
        if (X.mul(e, e) == X.lift(e)) out.push_back(e.index);
    return out;
}

// e*R (or R*e) as a sorted set.
inline std::vector<std::uint64_t> principal_ideal(const Ring& R, std::uint64_t e, Side side) {
    std::set<std::uint64_t> s;
    for (std::uint64_t r = 0; r < R.order(); ++r)
        s.insert(side == Side::Right ? R.mul_ix(e, r) : R.mul_ix(r, e));
    return {s.begin(), s.end()};
}

// Least idempotent e with eR = I (or Re = I on the left), if one exists.
inline std::optional<Element> generated_by_idempotent(const Ring& R,
                                                      std::span<const std::uint64_t> ideal_elems,
                                                      Side side = Side::Right) {
    require_finite(R, "generated_by_idempotent");
    std::vector<std::uint64_t> target(ideal_elems.begin(), ideal_elems.end());
    for (auto e : idempotents(R))
        if (principal_ideal(R, e, side) == target) return R.element(e);
    return std::nullopt;
}

inline std::optional<Element> generated_by_idempotent(const Ring& R, const RightIdeal& ideal) {
    return generated_by_idempotent(R, ideal.elems, ideal.side);
}

// All annihilators of nonempty subsets, plus r(empty) = R: the closure of the
// single-element annihilators under pairwise intersection, since
// r(X) is the intersection of r({a}) over a in X.
inline std::vector<RightIdeal> annihilator_lattice(const Ring& R, Side side = Side::Right,
                                                   std::size_t cap = kDefaultOrderCap) {
    require_finite(R, "annihilator_lattice");
    // value = some X with ann(X) = key; intersections merge their sources
    std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> sets;
    std::vector<std::uint64_t> everything;
    for (std::uint64_t c = 0; c < R.order(); ++c) everything.push_back(c);
    sets.emplace(everything, std::vector<std::uint64_t>{});
    for (std::uint64_t a = 0; a < R.order(); ++a) {
        std::uint64_t one[1] = {a};
        sets.emplace(annihilator(R, one, side).elems, std::vector<std::uint64_t>{a});
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> cur(
            sets.begin(), sets.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<std::uint64_t> meet, src;
                std::set_intersection(cur[i].first.begin(), cur[i].first.end(), cur[j].first.begin(),
                                      cur[j].first.end(), std::back_inserter(meet));
                std::set_union(cur[i].second.begin(), cur[i].second.end(), cur[j].second.begin(),
                               cur[j].second.end(), std::back_inserter(src));
                if (sets.emplace(std::move(meet), std::move(src)).second) grew = true;
                if (sets.size() > cap)
                    throw CapacityError(R.name() + ": annihilator lattice exceeds cap " +
                                        std::to_string(cap));
            }
    }
    std::vector<RightIdeal> out;
    for (auto& [s, src] : sets) out.push_back({&R, side, s, std::nullopt, src});
    return out;
}

// Every one-sided ideal: principal ideals closed under pairwise ideal sums.
inline std::vector<RightIdeal> one_sided_ideals(const Ring& R, Side side = Side::Right,
                                                std::size_t order_cap = 64,
                                                std::size_t count_cap = kDefaultOrderCap) {
    require_finite(R, "right_ideals");
    if (R.order() > order_cap)
        throw CapacityError(R.name() + ": ideal enumeration limited to order " +
                            std::to_string(order_cap));
    std::set<std::vector<std::uint64_t>> sets;
    for (std::uint64_t a = 0; a < R.order(); ++a) sets.insert(principal_ideal(R, a, side));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<std::uint64_t>> cur(sets.begin(), sets.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                std::set<std::uint64_t> sum;
                for (auto x : cur[i])
                    for (auto y : cur[j]) sum.insert(R.add_ix(x, y));
                std::vector<std::uint64_t> v(sum.begin(), sum.end());
                if (sets.insert(std::move(v)).second) grew = true;
                if (sets.size() > count_cap)
                    throw CapacityError(R.name() + ": ideal count exceeds cap " +
                                        std::to_string(count_cap));
            }
    }
    std::vector<RightIdeal> out;
    for (auto& s : sets) {
        if (!is_closed_one_sided_ideal(R, s, side))
            throw Error(R.name() + ": ideal closure verification failed");
        out.push_back({&R, side, s, std::nullopt});
    }
    return out;
}

inline std::vector<RightIdeal> right_ideals(const Ring& R, std::size_t order_cap = 64,
                                            std::size_t count_cap = kDefaultOrderCap) {
    return one_sided_ideals(R, Side::Right, order_cap, count_cap);
}

}  // namespace skewlab
