#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace skewlab {

class Ring;

// One ring element: owning ring plus its canonical integer encoding.
// Index 0 is always the zero element (all-zero digit tuple).
struct Element {
    const Ring* ring = nullptr;
    std::uint64_t index = 0;

    friend bool operator==(const Element&, const Element&) = default;
};

enum class RingKind { Zn, GaloisField, PolyQuotient, Matrix, UpperTriangular, Product, BoundedPoly };

inline constexpr std::uint64_t kDefaultOrderCap = 4096;
// Above this order arithmetic stays structural instead of table-backed.
inline constexpr std::uint64_t kTableLimit = 256;

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit,
                                 const char* what) {
    std::uint64_t r = 1;
    while (exp--) {
        if (base != 0 && r > limit / base)
            throw CapacityError(std::string(what) + ": order exceeds cap " + std::to_string(limit));
        r *= base;
    }
    return r;
}

}  // namespace detail

class Ring {
public:
    virtual ~Ring() = default;
    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

    RingKind kind() const { return kind_; }
    std::uint64_t order() const { return order_; }
    // Graded rings (degree-capped polynomial windows) have a partial product.
    bool graded() const { return graded_; }
    const std::string& name() const { return name_; }

    Element element(std::uint64_t i) const {
        if (i >= order_) throw Error(name_ + ": element index " + std::to_string(i) + " out of range");
        return {this, i};
    }
    Element zero() const { return {this, 0}; }
    Element one() const { return {this, one_}; }
    bool is_zero(Element a) const { return check(a).index == 0; }
    bool is_one(Element a) const { return check(a).index == one_; }

    // Index-level arithmetic; no operand checks, used by hot loops and by the
    // element-level wrappers below.
    std::uint64_t add_ix(std::uint64_t a, std::uint64_t b) const {
        if (tables_) return add_tab_[a * order_ + b];
        return add_impl(a, b);
    }
    std::uint64_t neg_ix(std::uint64_t a) const {
        if (tables_) return neg_tab_[a];
        return neg_impl(a);
    }
    std::optional<std::uint64_t> try_mul_ix(std::uint64_t a, std::uint64_t b) const {
        if (tables_) {
            std::uint32_t v = mul_tab_[a * order_ + b];
            if (v == kOverflow) return std::nullopt;
            return v;
        }
        return mul_impl(a, b);
    }
    std::uint64_t mul_ix(std::uint64_t a, std::uint64_t b) const {
        auto v = try_mul_ix(a, b);
        if (!v)
            throw DegreeOverflow(name_ + ": product degree exceeds the window cap");
        return *v;
    }
    std::uint64_t sub_ix(std::uint64_t a, std::uint64_t b) const { return add_ix(a, neg_ix(b)); }

    Element add(Element a, Element b) const { return {this, add_ix(check(a).index, check(b).index)}; }
    Element sub(Element a, Element b) const { return {this, sub_ix(check(a).index, check(b).index)}; }
    Element neg(Element a) const { return {this, neg_ix(check(a).index)}; }
    Element mul(Element a, Element b) const { return {this, mul_ix(check(a).index, check(b).index)}; }
    std::optional<Element> try_mul(Element a, Element b) const {
        auto v = try_mul_ix(check(a).index, check(b).index);
        if (!v) return std::nullopt;
        return Element{this, *v};
    }

    // n-fold sum of a (maps integer literals into the ring).
    Element mul_int(Element a, std::uint64_t n) const {
        check(a);
        std::uint64_t acc = 0, cur = a.index;
        while (n) {
            if (n & 1) acc = add_ix(acc, cur);
            n >>= 1;
            if (n) cur = add_ix(cur, cur);
        }
        return {this, acc};
    }
    Element from_int(std::uint64_t n) const { return mul_int(one(), n); }

    Element pow(Element a, std::uint64_t e) const {
        check(a);
        Element acc = one(), cur = a;
        while (e) {
            if (e & 1) acc = mul(acc, cur);
            e >>= 1;
            if (e) cur = mul(cur, cur);
        }
        return acc;
    }

    std::string render(Element a) const { return render_impl(check(a).index); }
    // Structural digit tuple behind the canonical index.
    std::vector<std::uint64_t> digits(Element a) const { return digits_impl(check(a).index); }

    struct Iterator {
        const Ring* ring;
        std::uint64_t i;
        Element operator*() const { return {ring, i}; }
        Iterator& operator++() { ++i; return *this; }
        friend bool operator==(const Iterator&, const Iterator&) = default;
    };
    struct Range {
        const Ring* ring;
        Iterator begin() const { return {ring, 0}; }
        Iterator end() const { return {ring, ring->order()}; }
    };
    Range elements() const { return {this}; }

protected:
    Ring(RingKind kind, std::uint64_t order, bool graded, std::string name)
        : kind_(kind), order_(order), graded_(graded), name_(std::move(name)) {
        if (order_ < 1) throw ConstructionError(name_ + ": empty carrier");
    }

    void set_one(std::uint64_t ix) { one_ = ix; }

    // Called at the end of each concrete constructor.
    void finish() {
        if (order_ <= kTableLimit) {
            add_tab_.resize(order_ * order_);
            mul_tab_.resize(order_ * order_);
            neg_tab_.resize(order_);
            for (std::uint64_t a = 0; a < order_; ++a) {
                neg_tab_[a] = static_cast<std::uint32_t>(neg_impl(a));
                for (std::uint64_t b = 0; b < order_; ++b) {
                    add_tab_[a * order_ + b] = static_cast<std::uint32_t>(add_impl(a, b));
                    auto m = mul_impl(a, b);
                    mul_tab_[a * order_ + b] = m ? static_cast<std::uint32_t>(*m) : kOverflow;
                }
            }
            tables_ = true;
        }
    }

    virtual std::uint64_t add_impl(std::uint64_t, std::uint64_t) const = 0;
    virtual std::uint64_t neg_impl(std::uint64_t) const = 0;
    virtual std::optional<std::uint64_t> mul_impl(std::uint64_t, std::uint64_t) const = 0;
    virtual std::string render_impl(std::uint64_t) const = 0;
    virtual std::vector<std::uint64_t> digits_impl(std::uint64_t) const = 0;

    const Element& check(const Element& a) const {
        if (a.ring != this)
            throw RingMismatch("operand belongs to " + (a.ring ? a.ring->name() : std::string("<none>")) +
                               ", expected " + name_);
        return a;
    }

private:
    static constexpr std::uint32_t kOverflow = 0xFFFFFFFFu;

    RingKind kind_;
    std::uint64_t order_;
    bool graded_;
    std::string name_;
    std::uint64_t one_ = 0;
    bool tables_ = false;
    std::vector<std::uint32_t> add_tab_, mul_tab_, neg_tab_;
};

using RingPtr = std::shared_ptr<const Ring>;

// ---------------------------------------------------------------------------
// Z/nZ

class ZnRing final : public Ring {
public:
    explicit ZnRing(std::uint64_t n) : Ring(RingKind::Zn, n, false, "Z" + std::to_string(n)), n_(n) {
        if (n < 2) throw ConstructionError("Zn requires n >= 2, got " + std::to_string(n));
        set_one(1 % n);
        finish();
    }
    std::uint64_t modulus() const { return n_; }

protected:
    std::uint64_t add_impl(std::uint64_t a, std::uint64_t b) const override { return (a + b) % n_; }
    std::uint64_t neg_impl(std::uint64_t a) const override { return (n_ - a) % n_; }
    std::optional<std::uint64_t> mul_impl(std::uint64_t a, std::uint64_t b) const override {
        return (a * b) % n_;
    }
    std::string render_impl(std::uint64_t a) const override { return std::to_string(a); }
    std::vector<std::uint64_t> digits_impl(std::uint64_t a) const override { return {a}; }

private:
    std::uint64_t n_;
};

inline RingPtr make_zn(std::uint64_t n) { return std::make_shared<ZnRing>(n); }

namespace detail {

// Mixed-radix digit codec with one radix for every slot.
inline void decode_digits(std::uint64_t ix, std::uint64_t radix, std::span<std::uint64_t> out) {
    for (auto& d : out) {
        d = ix % radix;
        ix /= radix;
    }
}
inline std::uint64_t encode_digits(std::span<const std::uint64_t> digits, std::uint64_t radix) {
    std::uint64_t ix = 0;
    for (std::size_t i = digits.size(); i-- > 0;) ix = ix * radix + digits[i];
    return ix;
}

inline bool base_is_commutative(const Ring& base, std::uint64_t sample = 10000) {
    std::uint64_t n = base.order();
    if (n * n <= 1u << 20) {
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = a + 1; b < n; ++b)
                if (base.mul_ix(a, b) != base.mul_ix(b, a)) return false;
        return true;
    }
    std::mt19937_64 rng(0);
    for (std::uint64_t k = 0; k < sample; ++k) {
        std::uint64_t a = rng() % n, b = rng() % n;
        if (base.mul_ix(a, b) != base.mul_ix(b, a)) return false;
    }
    return true;
}

// Renders c0 + c1 t + ... with the base ring's coefficient syntax, highest degree first.
inline std::string render_poly(const Ring& base, std::span<const std::uint64_t> coeffs, const char* var) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k] == 0) continue;
        std::string c = base.render(base.element(coeffs[k]));
        std::string term;
        if (k == 0) {
            term = c;
        } else {
            std::string v = k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k);
            if (coeffs[k] == base.one().index)
                term = v;
            else if (c.find('+') != std::string::npos || c.find(' ') != std::string::npos)
                term = "(" + c + ")" + v;
            else
                term = c + v;
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// base[t]/(m(t)) for a monic modulus m over a commutative base.

class PolyQuotientRing final : public Ring {
public:
    PolyQuotientRing(RingPtr base, std::vector<std::uint64_t> modulus,
                     std::uint64_t cap = kDefaultOrderCap, RingKind kind = RingKind::PolyQuotient,
                     std::string display = "")
        : Ring(kind,
               detail::checked_pow(base->order(), modulus.empty() ? 0 : modulus.size() - 1, cap,
                                   "PolyQuotient"),
               false,
               display.empty()
                   ? base->name() + "[t]/(" + detail::render_poly(*base, modulus, "t") + ")"
                   : std::move(display)),
          base_(std::move(base)), mod_(std::move(modulus)) {
        if (base_->graded()) throw ConstructionError("PolyQuotient: graded base not supported");
        if (mod_.size() < 2) throw ConstructionError("PolyQuotient: modulus must have degree >= 1");
        if (mod_.back() != base_->one().index)
            throw ConstructionError("PolyQuotient: modulus must be monic");
        for (auto c : mod_)
            if (c >= base_->order()) throw ConstructionError("PolyQuotient: modulus coefficient out of range");
        if (!detail::base_is_commutative(*base_))
            throw ConstructionError("PolyQuotient: base ring must be commutative");
        deg_ = mod_.size() - 1;
        b_ = base_->order();
        set_one(base_->one().index);  // tuple (1,0,...,0)
        finish();
    }

    const Ring& base() const { return *base_; }
    std::uint64_t degree() const { return deg_; }

    Element from_coeffs(std::span<const std::uint64_t> cs) const {
        if (cs.size() > deg_) throw Error(name() + ": coefficient tuple too long");
        std::vector<std::uint64_t> d(deg_, 0);
        std::copy(cs.begin(), cs.end(), d.begin());
        return {this, detail::encode_digits(d, b_)};
    }
    Element from_coeffs(std::initializer_list<std::uint64_t> cs) const {
        return from_coeffs(std::span<const std::uint64_t>(cs.begin(), cs.size()));
    }

protected:
    std::uint64_t add_impl(std::uint64_t a, std::uint64_t b) const override {
        std::vector<std::uint64_t> x(deg_), y(deg_);
        detail::decode_digits(a, b_, x);
        detail::decode_digits(b, b_, y);
        for (std::uint64_t i = 0; i < deg_; ++i) x[i] = base_->add_ix(x[i], y[i]);
        return detail::encode_digits(x, b_);
    }
    std::uint64_t neg_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(deg_);
        detail::decode_digits(a, b_, x);
        for (auto& c : x) c = base_->neg_ix(c);
        return detail::encode_digits(x, b_);
    }
    std::optional<std::uint64_t> mul_impl(std::uint64_t a, std::uint64_t b) const override {
        std::vector<std::uint64_t> x(deg_), y(deg_), buf(2 * deg_ - 1, 0);
        detail::decode_digits(a, b_, x);
        detail::decode_digits(b, b_, y);
        for (std::uint64_t i = 0; i < deg_; ++i) {
            if (x[i] == 0) continue;
            for (std::uint64_t j = 0; j < deg_; ++j)
                buf[i + j] = base_->add_ix(buf[i + j], base_->mul_ix(x[i], y[j]));
        }
        // monic reduction, top down
        for (std::size_t d = buf.size(); d-- > deg_;) {
            std::uint64_t c = buf[d];
            if (c == 0) continue;
            buf[d] = 0;
            for (std::uint64_t i = 0; i < deg_; ++i)
                buf[d - deg_ + i] = base_->sub_ix(buf[d - deg_ + i], base_->mul_ix(c, mod_[i]));
        }
        return detail::encode_digits(std::span<const std::uint64_t>(buf.data(), deg_), b_);
    }
    std::string render_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(deg_);
        detail::decode_digits(a, b_, x);
        return detail::render_poly(*base_, x, "t");
    }
    std::vector<std::uint64_t> digits_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(deg_);
        detail::decode_digits(a, b_, x);
        return x;
    }

private:
    RingPtr base_;
    std::vector<std::uint64_t> mod_;
    std::uint64_t deg_ = 0, b_ = 0;
};

inline RingPtr make_poly_quotient(RingPtr base, std::vector<std::uint64_t> modulus,
                                  std::uint64_t cap = kDefaultOrderCap) {
    return std::make_shared<PolyQuotientRing>(std::move(base), std::move(modulus), cap);
}

namespace detail {

// Plain polynomial division check over Zp, digit vectors low-to-high.
inline bool divides_mod_p(std::uint64_t p, std::vector<std::uint64_t> num,
                          const std::vector<std::uint64_t>& den) {
    auto deg = [](const std::vector<std::uint64_t>& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i]) return static_cast<long>(i);
        return -1L;
    };
    long dd = deg(den);
    long inv = 0;  // den is monic in our use
    (void)inv;
    long nd;
    while ((nd = deg(num)) >= dd && nd >= 0) {
        std::uint64_t c = num[nd];
        for (long i = 0; i <= dd; ++i)
            num[nd - dd + i] = (num[nd - dd + i] + p * p - c * den[i] % p) % p;
    }
    return deg(num) < 0;
}

inline bool irreducible_mod_p(std::uint64_t p, const std::vector<std::uint64_t>& f) {
    std::size_t k = f.size() - 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = checked_pow(p, d, std::numeric_limits<std::uint64_t>::max() / 2, "GF");
        for (std::uint64_t t = 0; t < count; ++t) {
            std::vector<std::uint64_t> g(d + 1, 0);
            decode_digits(t, p, std::span<std::uint64_t>(g.data(), d));
            g[d] = 1;  // monic candidate divisor
            if (divides_mod_p(p, f, g)) return false;
        }
    }
    return true;
}

}  // namespace detail

// GF(p^k) as Zp[t] modulo the lexicographically least monic irreducible of degree k.
inline RingPtr make_galois_field(std::uint64_t p, std::uint64_t k, std::uint64_t cap = kDefaultOrderCap) {
    if (p < 2 || k < 1) throw ConstructionError("GF requires p >= 2 and k >= 1");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw ConstructionError("GF: characteristic " + std::to_string(p) + " is not prime");
    std::uint64_t q = detail::checked_pow(p, k, cap, "GF");
    RingPtr base = make_zn(p);
    std::vector<std::uint64_t> f(k + 1, 0);
    f[k] = 1;
    if (k > 1) {
        std::uint64_t lower = detail::checked_pow(p, k, cap, "GF");
        bool found = false;
        for (std::uint64_t t = 0; t < lower && !found; ++t) {
            detail::decode_digits(t, p, std::span<std::uint64_t>(f.data(), k));
            found = detail::irreducible_mod_p(p, f);
        }
        if (!found) throw ConstructionError("GF: no irreducible modulus found");
    }
    return std::make_shared<PolyQuotientRing>(base, std::move(f), cap, RingKind::GaloisField,
                                              "GF(" + std::to_string(q) + ")");
}

// ---------------------------------------------------------------------------
// Full k x k matrices; entry (i,j) is digit i*k+j, e_ij has 1 in row i, column j.

class MatrixRing final : public Ring {
public:
    MatrixRing(std::uint64_t k, RingPtr base, std::uint64_t cap = kDefaultOrderCap)
        : Ring(RingKind::Matrix, detail::checked_pow(base->order(), k * k, cap, "Mat"), false,
               "M" + std::to_string(k) + "(" + base->name() + ")"),
          base_(std::move(base)), k_(k), b_(base_->order()) {
        if (k < 1) throw ConstructionError("Mat requires k >= 1");
        if (base_->graded()) throw ConstructionError("Mat: graded base not supported");
        std::vector<std::uint64_t> id(k_ * k_, 0);
        for (std::uint64_t i = 0; i < k_; ++i) id[i * k_ + i] = base_->one().index;
        set_one(detail::encode_digits(id, b_));
        finish();
    }

    std::uint64_t dim() const { return k_; }
    const Ring& base() const { return *base_; }

    Element from_entries(std::span<const std::uint64_t> es) const {
        if (es.size() != k_ * k_) throw Error(name() + ": expected " + std::to_string(k_ * k_) + " entries");
        return {this, detail::encode_digits(es, b_)};
    }
    Element from_entries(std::initializer_list<std::uint64_t> es) const {
        return from_entries(std::span<const std::uint64_t>(es.begin(), es.size()));
    }
    // e_ij, zero-based
    Element unit(std::uint64_t i, std::uint64_t j) const {
        std::vector<std::uint64_t> es(k_ * k_, 0);
        es[i * k_ + j] = base_->one().index;
        return from_entries(es);
    }

protected:
    std::uint64_t add_impl(std::uint64_t a, std::uint64_t b) const override {
        std::vector<std::uint64_t> x(k_ * k_), y(k_ * k_);
        detail::decode_digits(a, b_, x);
        detail::decode_digits(b, b_, y);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_->add_ix(x[i], y[i]);
        return detail::encode_digits(x, b_);
    }
    std::uint64_t neg_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(k_ * k_);
        detail::decode_digits(a, b_, x);
        for (auto& c : x) c = base_->neg_ix(c);
        return detail::encode_digits(x, b_);
    }
    std::optional<std::uint64_t> mul_impl(std::uint64_t a, std::uint64_t b) const override {
        std::vector<std::uint64_t> x(k_ * k_), y(k_ * k_), z(k_ * k_, 0);
        detail::decode_digits(a, b_, x);
        detail::decode_digits(b, b_, y);
        for (std::uint64_t i = 0; i < k_; ++i)
            for (std::uint64_t l = 0; l < k_; ++l) {
                std::uint64_t xi = x[i * k_ + l];
                if (xi == 0) continue;
                for (std::uint64_t j = 0; j < k_; ++j)
                    z[i * k_ + j] = base_->add_ix(z[i * k_ + j], base_->mul_ix(xi, y[l * k_ + j]));
            }
        return detail::encode_digits(z, b_);
    }
    std::string render_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(k_ * k_);
        detail::decode_digits(a, b_, x);
        std::string out = "[";
        for (std::uint64_t i = 0; i < k_; ++i) {
            out += i ? ",[" : "[";
            for (std::uint64_t j = 0; j < k_; ++j) {
                if (j) out += ",";
                out += base_->render(base_->element(x[i * k_ + j]));
            }
            out += "]";
        }
        return out + "]";
    }
    std::vector<std::uint64_t> digits_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(k_ * k_);
        detail::decode_digits(a, b_, x);
        return x;
    }

private:
    RingPtr base_;
    std::uint64_t k_, b_;
};

inline RingPtr make_matrix(std::uint64_t k, RingPtr base, std::uint64_t cap = kDefaultOrderCap) {
    return std::make_shared<MatrixRing>(k, std::move(base), cap);
}

// Upper triangular k x k matrices; free slots (i,j) with i <= j, row-major.
class UpperTriangularRing final : public Ring {
public:
    UpperTriangularRing(std::uint64_t k, RingPtr base, std::uint64_t cap = kDefaultOrderCap)
        : Ring(RingKind::UpperTriangular, detail::checked_pow(base->order(), k * (k + 1) / 2, cap, "UpperTri"),
               false, "T" + std::to_string(k) + "(" + base->name() + ")"),
          base_(std::move(base)), k_(k), b_(base_->order()) {
        if (k < 1) throw ConstructionError("UpperTri requires k >= 1");
        if (base_->graded()) throw ConstructionError("UpperTri: graded base not supported");
        for (std::uint64_t i = 0; i < k_; ++i)
            for (std::uint64_t j = i; j < k_; ++j) slots_.push_back(i * k_ + j);
        std::vector<std::uint64_t> id(slots_.size(), 0);
        for (std::uint64_t i = 0; i < k_; ++i) id[slot_of(i, i)] = base_->one().index;
        set_one(detail::encode_digits(id, b_));
        finish();
    }

    std::uint64_t dim() const { return k_; }

    Element from_entries(std::span<const std::uint64_t> es) const {
        if (es.size() != slots_.size())
            throw Error(name() + ": expected " + std::to_string(slots_.size()) + " entries");
        return {this, detail::encode_digits(es, b_)};
    }
    Element from_entries(std::initializer_list<std::uint64_t> es) const {
        return from_entries(std::span<const std::uint64_t>(es.begin(), es.size()));
    }
    Element unit(std::uint64_t i, std::uint64_t j) const {
        std::vector<std::uint64_t> es(slots_.size(), 0);
        es[slot_of(i, j)] = base_->one().index;
        return from_entries(es);
    }

protected:
    std::uint64_t add_impl(std::uint64_t a, std::uint64_t b) const override {
        std::vector<std::uint64_t> x(slots_.size()), y(slots_.size());
        detail::decode_digits(a, b_, x);
        detail::decode_digits(b, b_, y);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_->add_ix(x[i], y[i]);
        return detail::encode_digits(x, b_);
    }
    std::uint64_t neg_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(slots_.size());
        detail::decode_digits(a, b_, x);
        for (auto& c : x) c = base_->neg_ix(c);
        return detail::encode_digits(x, b_);
    }
    std::optional<std::uint64_t> mul_impl(std::uint64_t a, std::uint64_t b) const override {
        std::vector<std::uint64_t> x(slots_.size()), y(slots_.size()), z(slots_.size(), 0);
        detail::decode_digits(a, b_, x);
        detail::decode_digits(b, b_, y);
        for (std::uint64_t i = 0; i < k_; ++i)
            for (std::uint64_t l = i; l < k_; ++l) {
                std::uint64_t xi = x[slot_of(i, l)];
                if (xi == 0) continue;
                for (std::uint64_t j = l; j < k_; ++j)
                    z[slot_of(i, j)] = base_->add_ix(z[slot_of(i, j)], base_->mul_ix(xi, y[slot_of(l, j)]));
            }
        return detail::encode_digits(z, b_);
    }
    std::string render_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(slots_.size());
        detail::decode_digits(a, b_, x);
        std::string out = "[";
        for (std::uint64_t i = 0; i < k_; ++i) {
            out += i ? ",[" : "[";
            for (std::uint64_t j = 0; j < k_; ++j) {
                if (j) out += ",";
                out += i <= j ? base_->render(base_->element(x[slot_of(i, j)])) : "0";
            }
            out += "]";
        }
        return out + "]";
    }
    std::vector<std::uint64_t> digits_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(slots_.size());
        detail::decode_digits(a, b_, x);
        return x;
    }

private:
    std::uint64_t slot_of(std::uint64_t i, std::uint64_t j) const {
        for (std::size_t s = 0; s < slots_.size(); ++s)
            if (slots_[s] == i * k_ + j) return s;
        throw Error("UpperTri: below-diagonal access");
    }

    RingPtr base_;
    std::uint64_t k_, b_;
    std::vector<std::uint64_t> slots_;
};

inline RingPtr make_upper_triangular(std::uint64_t k, RingPtr base, std::uint64_t cap = kDefaultOrderCap) {
    return std::make_shared<UpperTriangularRing>(k, std::move(base), cap);
}

// ---------------------------------------------------------------------------
// Direct product with componentwise operations; index = i1*|r2| + i2.

class ProductRing final : public Ring {
public:
    ProductRing(RingPtr r1, RingPtr r2, std::uint64_t cap = kDefaultOrderCap)
        : Ring(RingKind::Product,
               [&] {
                   std::uint64_t o1 = r1->order(), o2 = r2->order();
                   if (o1 != 0 && o1 > cap / o2)
                       throw CapacityError("Product: order exceeds cap " + std::to_string(cap));
                   return o1 * o2;
               }(),
               false, r1->name() + "x" + r2->name()),
          r1_(std::move(r1)), r2_(std::move(r2)) {
        if (r1_->graded() || r2_->graded())
            throw ConstructionError("Product: graded factor not supported");
        set_one(r1_->one().index * r2_->order() + r2_->one().index);
        finish();
    }

    const Ring& first() const { return *r1_; }
    const Ring& second() const { return *r2_; }
    bool symmetric_factors() const {
        return r1_ == r2_ || (r1_->kind() == r2_->kind() && r1_->name() == r2_->name());
    }

    Element pair(Element a, Element b) const {
        if (a.ring != r1_.get() || b.ring != r2_.get())
            throw RingMismatch(name() + ": pair components from wrong rings");
        return {this, a.index * r2_->order() + b.index};
    }
    Element pair_ix(std::uint64_t a, std::uint64_t b) const { return {this, a * r2_->order() + b}; }

protected:
    std::uint64_t add_impl(std::uint64_t a, std::uint64_t b) const override {
        std::uint64_t o2 = r2_->order();
        return r1_->add_ix(a / o2, b / o2) * o2 + r2_->add_ix(a % o2, b % o2);
    }
    std::uint64_t neg_impl(std::uint64_t a) const override {
        std::uint64_t o2 = r2_->order();
        return r1_->neg_ix(a / o2) * o2 + r2_->neg_ix(a % o2);
    }
    std::optional<std::uint64_t> mul_impl(std::uint64_t a, std::uint64_t b) const override {
        std::uint64_t o2 = r2_->order();
        return r1_->mul_ix(a / o2, b / o2) * o2 + r2_->mul_ix(a % o2, b % o2);
    }
    std::string render_impl(std::uint64_t a) const override {
        std::uint64_t o2 = r2_->order();
        return "(" + r1_->render(r1_->element(a / o2)) + "," + r2_->render(r2_->element(a % o2)) + ")";
    }
    std::vector<std::uint64_t> digits_impl(std::uint64_t a) const override {
        std::uint64_t o2 = r2_->order();
        return {a / o2, a % o2};
    }

private:
    RingPtr r1_, r2_;
};

inline RingPtr make_product(RingPtr r1, RingPtr r2, std::uint64_t cap = kDefaultOrderCap) {
    return std::make_shared<ProductRing>(std::move(r1), std::move(r2), cap);
}

// ---------------------------------------------------------------------------
// Degree-capped polynomial window base[t], deg <= cap. The product is partial:
// results whose true degree exceeds the cap are out of domain, never truncated.

class BoundedPolyRing final : public Ring {
public:
    BoundedPolyRing(RingPtr base, std::uint64_t degree_cap, std::uint64_t cap = kDefaultOrderCap,
                    bool build_companion = true)
        : Ring(RingKind::BoundedPoly,
               detail::checked_pow(base->order(), degree_cap + 1, cap, "BoundedPoly"), true,
               base->name() + "[t]<=" + std::to_string(degree_cap)),
          base_(std::move(base)), cap_(degree_cap), b_(base_->order()), companion_(build_companion) {
        if (degree_cap < 1) throw ConstructionError("BoundedPoly requires degree_cap >= 1");
        if (base_->graded()) throw ConstructionError("BoundedPoly: graded base not supported");
        set_one(base_->one().index);
        finish();
    }

    const Ring& base() const { return *base_; }
    std::uint64_t degree_cap() const { return cap_; }

    Element from_coeffs(std::span<const std::uint64_t> cs) const {
        if (cs.size() > cap_ + 1) throw Error(name() + ": coefficient tuple too long");
        std::vector<std::uint64_t> d(cap_ + 1, 0);
        std::copy(cs.begin(), cs.end(), d.begin());
        return {this, detail::encode_digits(d, b_)};
    }
    Element from_coeffs(std::initializer_list<std::uint64_t> cs) const {
        return from_coeffs(std::span<const std::uint64_t>(cs.begin(), cs.size()));
    }

    int poly_degree(Element a) const {
        auto d = digits(a);
        for (std::size_t i = d.size(); i-- > 0;)
            if (d[i]) return static_cast<int>(i);
        return -1;
    }

    // Companion window with triple the cap; wide enough that any product of
    // two or three window elements is exact there. The index encoding agrees
    // on the shared range, so widening is the identity on indices.
    const BoundedPolyRing& exact_ring() const {
        std::call_once(exact_once_, [this] {
            exact_ = std::make_shared<BoundedPolyRing>(
                base_, 3 * cap_, std::numeric_limits<std::uint64_t>::max() / 2, false);
        });
        return *exact_;
    }
    std::uint64_t widen(std::uint64_t ix) const { return ix; }
    std::optional<std::uint64_t> narrow(std::uint64_t wide_ix) const {
        if (wide_ix < order()) return wide_ix;
        return std::nullopt;
    }

protected:
    std::uint64_t add_impl(std::uint64_t a, std::uint64_t b) const override {
        std::vector<std::uint64_t> x(cap_ + 1), y(cap_ + 1);
        detail::decode_digits(a, b_, x);
        detail::decode_digits(b, b_, y);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_->add_ix(x[i], y[i]);
        return detail::encode_digits(x, b_);
    }
    std::uint64_t neg_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(cap_ + 1);
        detail::decode_digits(a, b_, x);
        for (auto& c : x) c = base_->neg_ix(c);
        return detail::encode_digits(x, b_);
    }
    std::optional<std::uint64_t> mul_impl(std::uint64_t a, std::uint64_t b) const override {
        std::vector<std::uint64_t> x(cap_ + 1), y(cap_ + 1), buf(2 * cap_ + 1, 0);
        detail::decode_digits(a, b_, x);
        detail::decode_digits(b, b_, y);
        for (std::size_t i = 0; i <= cap_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j <= cap_; ++j)
                buf[i + j] = base_->add_ix(buf[i + j], base_->mul_ix(x[i], y[j]));
        }
        for (std::size_t d = cap_ + 1; d < buf.size(); ++d)
            if (buf[d] != 0) return std::nullopt;
        return detail::encode_digits(std::span<const std::uint64_t>(buf.data(), cap_ + 1), b_);
    }
    std::string render_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(cap_ + 1);
        detail::decode_digits(a, b_, x);
        return detail::render_poly(*base_, x, "t");
    }
    std::vector<std::uint64_t> digits_impl(std::uint64_t a) const override {
        std::vector<std::uint64_t> x(cap_ + 1);
        detail::decode_digits(a, b_, x);
        return x;
    }

private:
    RingPtr base_;
    std::uint64_t cap_, b_;
    bool companion_;
    mutable std::once_flag exact_once_;
    mutable std::shared_ptr<const BoundedPolyRing> exact_;
};

inline RingPtr make_bounded_poly(RingPtr base, std::uint64_t degree_cap,
                                 std::uint64_t cap = kDefaultOrderCap) {
    return std::make_shared<BoundedPolyRing>(std::move(base), degree_cap, cap);
}

// ---------------------------------------------------------------------------
// Exact products for any ring. Total rings compute in place; graded windows
// compute in the widened companion so sums of overflowing terms still cancel
// correctly. All values live in the wide index space (zero is index 0 there too).

class ExactMul {
public:
    explicit ExactMul(const Ring& r) : ring_(&r) {
        if (r.graded()) {
            win_ = static_cast<const BoundedPolyRing*>(&r);
            wide_ = &win_->exact_ring();
        } else {
            wide_ = &r;
        }
    }

    const Ring& ring() const { return *ring_; }
    const Ring& wide() const { return *wide_; }

    std::uint64_t lift(Element a) const { return a.index; }
    std::uint64_t mul(Element a, Element b) const { return wide_->mul_ix(a.index, b.index); }
    std::uint64_t mul3(Element a, Element b, Element c) const {
        return wide_->mul_ix(wide_->mul_ix(a.index, b.index), c.index);
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return wide_->add_ix(a, b); }
    static bool is_zero(std::uint64_t v) { return v == 0; }

    bool zero_product(Element a, Element b) const { return mul(a, b) == 0; }
    bool zero_product3(Element a, Element b, Element c) const { return mul3(a, b, c) == 0; }
    bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

    std::optional<Element> narrow(std::uint64_t wide_ix) const {
        if (wide_ix < ring_->order()) return Element{ring_, wide_ix};
        return std::nullopt;
    }

private:
    const Ring* ring_;
    const Ring* wide_;
    const BoundedPolyRing* win_ = nullptr;
};

// ---------------------------------------------------------------------------
// Axiom verification. Exhaustive triples up to the stated order, seeded random
// triples beyond. On graded rings laws are checked wherever both sides exist.

struct AxiomReport {
    bool ok = true;
    std::string detail;
};

inline AxiomReport verify_ring_axioms(const Ring& R, std::uint64_t exhaustive_limit = 16,
                                      int random_triples = 10000, std::uint64_t seed = 0) {
    auto fail = [&](const std::string& what) { return AxiomReport{false, R.name() + ": " + what}; };

    Element z = R.zero(), e = R.one();
    for (auto a : R.elements()) {
        if (!(R.add(a, z) == a)) return fail("a+0 != a at " + R.render(a));
        if (!(R.add(a, R.neg(a)) == z)) return fail("a+(-a) != 0 at " + R.render(a));
        auto l = R.try_mul(e, a), r = R.try_mul(a, e);
        if (!l || !r || !(*l == a) || !(*r == a)) return fail("unit law fails at " + R.render(a));
    }

    auto check_triple = [&](Element a, Element b, Element c) -> std::optional<std::string> {
        if (!(R.add(a, b) == R.add(b, a))) return "a+b != b+a";
        if (!(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)))) return "(a+b)+c != a+(b+c)";
        auto ab = R.try_mul(a, b), bc = R.try_mul(b, c);
        if (ab && bc) {
            auto l = R.try_mul(*ab, c), r = R.try_mul(a, *bc);
            if (l && r && !(*l == *r)) return "(ab)c != a(bc)";
        }
        auto ac = R.try_mul(a, c);
        auto l2 = R.try_mul(a, R.add(b, c));
        if (l2 && ab && ac && !(*l2 == R.add(*ab, *ac))) return "a(b+c) != ab+ac";
        auto r2 = R.try_mul(R.add(a, b), c);
        if (r2 && ac && bc && !(*r2 == R.add(*ac, *bc))) return "(a+b)c != ac+bc";
        return std::nullopt;
    };

    if (R.order() <= exhaustive_limit) {
        for (auto a : R.elements())
            for (auto b : R.elements())
                for (auto c : R.elements())
                    if (auto bad = check_triple(a, b, c))
                        return fail(*bad + " at (" + R.render(a) + "," + R.render(b) + "," + R.render(c) + ")");
    } else {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < random_triples; ++t) {
            Element a = R.element(rng() % R.order());
            Element b = R.element(rng() % R.order());
            Element c = R.element(rng() % R.order());
            if (auto bad = check_triple(a, b, c))
                return fail(*bad + " at (" + R.render(a) + "," + R.render(b) + "," + R.render(c) + ")");
        }
    }
    return {};
}

}  // namespace skewlab
