#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "harness.hpp"

namespace skewlab {

// Line-oriented config grammar:
//   ring NAME = Zn(4) | GF(2,2) | PolyQuot(RING, "t^2+t+1") | Mat(2, RING)
//               | UpperTri(2, RING) | Product(RING, RING) | BoundedPoly(RING, 2)
//   endo NAME on RING = identity | frobenius(2) | eval0 | const_term | swap
//               | table{0->0, 1->1, ...}
//   task check RING ENDO property=<id> [D=<n>] [expect=fails]
//   task verify RING ENDO theorems=all|<id,...> [D=<n>] [N=<n>]
//   task search P=<id> Q=<id> [max_order=<n>]
// '-' in the endomorphism slot means none; comments start with '#'.

struct CheckTask {
    std::string ring, endo;
    Property property;
    std::optional<int> degree;
    bool expect_fails = false;
};

struct VerifyTask {
    std::string ring, endo;
    std::vector<std::string> theorems;
    int degree = 2;
    int trunc = 3;
};

struct SearchTask {
    Property p, q;
    std::uint64_t max_order = 8;
};

struct Task {
    std::variant<CheckTask, VerifyTask, SearchTask> body;
    int line = 0;
    std::string label;  // "check(R,s)" etc., used in report rows
};

struct ConfigDocument {
    std::vector<std::string> ring_names;
    std::map<std::string, RingPtr> rings;
    std::vector<std::string> endo_names;
    std::map<std::string, EndoPtr> endos;
    std::vector<Task> tasks;
};

namespace detail {

struct Token {
    enum Kind { Word, Sym, Str, End } kind;
    std::string text;
};

inline std::vector<Token> lex_line(const std::string& line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::string("(){},=").find(c) != std::string::npos) {
            out.push_back({Token::Sym, std::string(1, c)});
            ++i;
            continue;
        }
        if (c == '"') {
            std::size_t j = line.find('"', i + 1);
            if (j == std::string::npos) throw ConfigError(lineno, "unterminated string literal");
            out.push_back({Token::Str, line.substr(i + 1, j - i - 1)});
            i = j + 1;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({Token::Sym, "->"});
            i += 2;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               std::string("(){},=#\"").find(line[j]) == std::string::npos &&
               !(line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>'))
            ++j;
        out.push_back({Token::Word, line.substr(i, j - i)});
        i = j;
    }
    out.push_back({Token::End, ""});
    return out;
}

struct Cursor {
    const std::vector<Token>* toks;
    std::size_t pos = 0;
    int line = 0;

    const Token& peek() const { return (*toks)[pos]; }
    Token next() { return (*toks)[pos++]; }
    bool at_end() const { return peek().kind == Token::End; }

    std::string expect_word(const char* what) {
        if (peek().kind != Token::Word) throw ConfigError(line, std::string("expected ") + what);
        return next().text;
    }
    void expect_sym(const char* s) {
        if (peek().kind != Token::Sym || peek().text != s)
            throw ConfigError(line, std::string("expected '") + s + "'");
        next();
    }
    bool accept_sym(const char* s) {
        if (peek().kind == Token::Sym && peek().text == s) {
            next();
            return true;
        }
        return false;
    }
    std::uint64_t expect_int(const char* what) {
        std::string w = expect_word(what);
        try {
            std::size_t used = 0;
            std::uint64_t v = std::stoull(w, &used);
            if (used != w.size()) throw std::invalid_argument(w);
            return v;
        } catch (...) {
            throw ConfigError(line, std::string("expected integer for ") + what + ", got '" + w + "'");
        }
    }
};

// "t^2+t+1" -> low-to-high coefficient indices over the base ring
inline std::vector<std::uint64_t> parse_poly_literal(const Ring& base, const std::string& text,
                                                     int lineno) {
    std::vector<std::uint64_t> coeffs;
    auto put = [&](std::size_t deg, Element value, bool negate) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        Element cur = base.element(coeffs[deg]);
        Element v = negate ? base.neg(value) : value;
        coeffs[deg] = base.add(cur, v).index;
    };
    std::size_t i = 0;
    bool neg = false;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '+') {
            neg = false;
            ++i;
            continue;
        }
        if (c == '-') {
            neg = true;
            ++i;
            continue;
        }
        std::uint64_t coef = 1;
        bool have_coef = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coef = (have_coef ? coef * 10 : 0) + (text[i] - '0');
            have_coef = true;
            ++i;
        }
        std::size_t deg = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            deg = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ConfigError(lineno, "malformed exponent in polynomial literal");
                deg = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    deg = deg * 10 + (text[i++] - '0');
            }
        } else if (!have_coef) {
            throw ConfigError(lineno, std::string("unexpected character '") + c +
                                          "' in polynomial literal");
        }
        put(deg, base.from_int(coef), neg);
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) throw ConfigError(lineno, "polynomial literal is zero");
    return coeffs;
}

inline RingPtr parse_ring_ctor(Cursor& cur, const ConfigDocument& doc) {
    std::string kind = cur.expect_word("ring constructor");
    auto named = [&](const std::string& n) -> RingPtr {
        auto it = doc.rings.find(n);
        if (it == doc.rings.end()) throw ConfigError(cur.line, "undeclared ring '" + n + "'");
        return it->second;
    };
    try {
        if (kind == "Zn") {
            cur.expect_sym("(");
            std::uint64_t n = cur.expect_int("modulus");
            cur.expect_sym(")");
            return make_zn(n);
        }
        if (kind == "GF") {
            cur.expect_sym("(");
            std::uint64_t p = cur.expect_int("characteristic");
            cur.expect_sym(",");
            std::uint64_t k = cur.expect_int("extension degree");
            cur.expect_sym(")");
            return make_galois_field(p, k);
        }
        if (kind == "PolyQuot") {
            cur.expect_sym("(");
            RingPtr base = named(cur.expect_word("base ring name"));
            cur.expect_sym(",");
            if (cur.peek().kind != Token::Str)
                throw ConfigError(cur.line, "PolyQuot needs a quoted modulus like \"t^2+t+1\"");
            std::string lit = cur.next().text;
            cur.expect_sym(")");
            return make_poly_quotient(base, parse_poly_literal(*base, lit, cur.line));
        }
        if (kind == "Mat") {
            cur.expect_sym("(");
            std::uint64_t k = cur.expect_int("matrix size");
            cur.expect_sym(",");
            RingPtr base = named(cur.expect_word("base ring name"));
            cur.expect_sym(")");
            return make_matrix(k, base);
        }
        if (kind == "UpperTri") {
            cur.expect_sym("(");
            std::uint64_t k = cur.expect_int("matrix size");
            cur.expect_sym(",");
            RingPtr base = named(cur.expect_word("base ring name"));
            cur.expect_sym(")");
            return make_upper_triangular(k, base);
        }
        if (kind == "Product") {
            cur.expect_sym("(");
            RingPtr r1 = named(cur.expect_word("ring name"));
            cur.expect_sym(",");
            RingPtr r2 = named(cur.expect_word("ring name"));
            cur.expect_sym(")");
            return make_product(r1, r2);
        }
        if (kind == "BoundedPoly") {
            cur.expect_sym("(");
            RingPtr base = named(cur.expect_word("base ring name"));
            cur.expect_sym(",");
            std::uint64_t d = cur.expect_int("degree cap");
            cur.expect_sym(")");
            return make_bounded_poly(base, d);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(cur.line, e.what());
    }
    throw ConfigError(cur.line, "unknown ring constructor '" + kind + "'");
}

inline EndoPtr parse_endo_ctor(Cursor& cur, RingPtr ring) {
    std::string kind = cur.expect_word("endomorphism constructor");
    try {
        if (kind == "identity") return Endomorphism::identity(ring);
        if (kind == "frobenius") {
            cur.expect_sym("(");
            std::uint64_t q = cur.expect_int("frobenius exponent");
            cur.expect_sym(")");
            return Endomorphism::frobenius(ring, q);
        }
        if (kind == "eval0") return Endomorphism::eval_at_zero(ring);
        if (kind == "const_term") return Endomorphism::constant_term(ring);
        if (kind == "swap") return Endomorphism::swap(ring);
        if (kind == "table") {
            cur.expect_sym("{");
            std::vector<std::uint64_t> table(ring->order(), ring->order());
            if (!cur.accept_sym("}")) {
                do {
                    std::uint64_t from = cur.expect_int("table source");
                    cur.expect_sym("->");
                    std::uint64_t to = cur.expect_int("table target");
                    if (from >= ring->order())
                        throw ConfigError(cur.line, "table source out of range");
                    table[from] = to;
                } while (cur.accept_sym(","));
                cur.expect_sym("}");
            }
            for (std::size_t i = 0; i < table.size(); ++i)
                if (table[i] == ring->order())
                    throw ConfigError(cur.line,
                                      "table is not total: no image for element " + std::to_string(i));
            return Endomorphism::from_table(ring, std::move(table));
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(cur.line, e.what());
    }
    throw ConfigError(cur.line, "unknown endomorphism constructor '" + kind + "'");
}

inline Property parse_property(const std::string& id, int line) {
    auto p = property_from_id(id);
    if (!p) throw ConfigError(line, "unknown property '" + id + "'");
    return *p;
}

}  // namespace detail

inline ConfigDocument parse_config(const std::string& text) {
    ConfigDocument doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::lex_line(line, lineno);
        detail::Cursor cur{&toks, 0, lineno};
        if (cur.at_end()) continue;
        std::string head = cur.expect_word("declaration");

        if (head == "ring") {
            std::string name = cur.expect_word("ring name");
            if (doc.rings.count(name)) throw ConfigError(lineno, "ring '" + name + "' redeclared");
            cur.expect_sym("=");
            doc.rings[name] = detail::parse_ring_ctor(cur, doc);
            doc.ring_names.push_back(name);
        } else if (head == "endo") {
            std::string name = cur.expect_word("endomorphism name");
            if (doc.endos.count(name)) throw ConfigError(lineno, "endo '" + name + "' redeclared");
            std::string on = cur.expect_word("'on'");
            if (on != "on") throw ConfigError(lineno, "expected 'on' after the endomorphism name");
            std::string rname = cur.expect_word("ring name");
            auto rit = doc.rings.find(rname);
            if (rit == doc.rings.end()) throw ConfigError(lineno, "undeclared ring '" + rname + "'");
            cur.expect_sym("=");
            doc.endos[name] = detail::parse_endo_ctor(cur, rit->second);
            doc.endo_names.push_back(name);
        } else if (head == "task") {
            std::string kind = cur.expect_word("task kind");
            Task task;
            task.line = lineno;
            auto parse_kv = [&](std::map<std::string, std::string>& kv) {
                while (!cur.at_end()) {
                    std::string key = cur.expect_word("key");
                    cur.expect_sym("=");
                    std::string value = cur.expect_word("value");
                    while (cur.accept_sym(",")) value += "," + cur.expect_word("value");
                    kv[key] = value;
                }
            };
            if (kind == "check" || kind == "verify") {
                std::string rname = cur.expect_word("ring name");
                if (!doc.rings.count(rname))
                    throw ConfigError(lineno, "undeclared ring '" + rname + "'");
                std::string ename = cur.expect_word("endomorphism name or '-'");
                if (ename != "-" && !doc.endos.count(ename))
                    throw ConfigError(lineno, "undeclared endo '" + ename + "'");
                if (ename != "-" && &doc.endos[ename]->ring() != doc.rings[rname].get())
                    throw ConfigError(lineno, "endo '" + ename + "' is not defined on '" + rname + "'");
                std::map<std::string, std::string> kv;
                parse_kv(kv);
                if (kind == "check") {
                    CheckTask t;
                    t.ring = rname;
                    t.endo = ename;
                    if (!kv.count("property")) throw ConfigError(lineno, "check needs property=<id>");
                    t.property = detail::parse_property(kv["property"], lineno);
                    if (property_needs_endo(t.property) && ename == "-")
                        throw ConfigError(lineno, std::string("property ") + kv["property"] +
                                                      " needs an endomorphism");
                    if (kv.count("D")) t.degree = std::stoi(kv["D"]);
                    if (t.degree && *t.degree < 1) throw ConfigError(lineno, "D must be positive");
                    if (kv.count("expect")) {
                        if (kv["expect"] != "fails")
                            throw ConfigError(lineno, "only expect=fails is understood");
                        t.expect_fails = true;
                    }
                    task.label = "check(" + rname + "," + ename + ")";
                    task.body = std::move(t);
                } else {
                    VerifyTask t;
                    t.ring = rname;
                    t.endo = ename;
                    if (!kv.count("theorems"))
                        throw ConfigError(lineno, "verify needs theorems=all or a list");
                    if (kv["theorems"] == "all") {
                        t.theorems = theorem_ids();
                    } else {
                        std::istringstream ss(kv["theorems"]);
                        std::string id;
                        while (std::getline(ss, id, ',')) {
                            if (std::find(theorem_ids().begin(), theorem_ids().end(), id) ==
                                theorem_ids().end())
                                throw ConfigError(lineno, "unknown theorem '" + id + "'");
                            t.theorems.push_back(id);
                        }
                    }
                    if (kv.count("D")) t.degree = std::stoi(kv["D"]);
                    if (kv.count("N")) t.trunc = std::stoi(kv["N"]);
                    if (t.degree < 1 || t.trunc < 1)
                        throw ConfigError(lineno, "bounds must be positive");
                    task.label = "verify(" + rname + "," + ename + ")";
                    task.body = std::move(t);
                }
            } else if (kind == "search") {
                std::map<std::string, std::string> kv;
                parse_kv(kv);
                if (!kv.count("P") || !kv.count("Q"))
                    throw ConfigError(lineno, "search needs P=<id> and Q=<id>");
                SearchTask t;
                t.p = detail::parse_property(kv["P"], lineno);
                t.q = detail::parse_property(kv["Q"], lineno);
                if (kv.count("max_order")) t.max_order = std::stoull(kv["max_order"]);
                if (t.max_order < 2) throw ConfigError(lineno, "max_order must be at least 2");
                task.label = "search(" + kv["P"] + "," + kv["Q"] + ")";
                task.body = std::move(t);
            } else {
                throw ConfigError(lineno, "unknown task kind '" + kind + "'");
            }
            doc.tasks.push_back(std::move(task));
        } else {
            throw ConfigError(lineno, "expected 'ring', 'endo' or 'task', got '" + head + "'");
        }
    }
    return doc;
}

}  // namespace skewlab
