#include "knotoid/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace knotoid {

namespace {

// Renders one term into `out`.  `first` controls the sign separator.
void render_term(std::ostringstream& out, bool first, const Coef& c,
                 const std::string& vars) {
    Coef a = c;
    if (first) {
        if (a < 0) {
            out << "-";
            a = -a;
        }
    } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    if (vars.empty()) {
        out << a.str();
        return;
    }
    if (a != 1)
        out << a.str() << "*";
    out << vars;
}

std::string var_power(char v, int e) {
    if (e == 0) return "";
    std::string s(1, v);
    if (e != 1) {
        s += "^";
        s += std::to_string(e);
    }
    return s;
}

struct TermParser {
    const std::string& text;
    size_t pos = 0;

    explicit TermParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::runtime_error("laurent parse error at offset " +
                                 std::to_string(pos) + ": " + what);
    }
    int parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) fail("expected integer");
        return std::stoi(text.substr(start, pos - start));
    }

    // Parses one term: optional coefficient, then variable powers joined
    // by '*'.  Returns (coefficient, exponent per allowed variable).
    void parse_term(const std::string& allowed_vars, Coef& coef,
                    std::map<char, int>& exps) {
        skip_ws();
        coef = 1;
        exps.clear();
        bool saw_anything = false;
        if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            coef = Coef(text.substr(start, pos - start));
            saw_anything = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        while (pos < text.size()) {
            skip_ws();
            if (pos >= text.size()) break;
            char v = text[pos];
            if (allowed_vars.find(v) == std::string::npos) break;
            ++pos;
            int e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = parse_int();
            }
            if (exps.count(v)) fail(std::string("repeated variable ") + v);
            exps[v] = e;
            saw_anything = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_anything) fail("expected term");
    }
};

}  // namespace

Laurent1 Laurent1::constant(const Coef& c, char var) {
    Laurent1 p(var);
    p.add_term(0, c);
    return p;
}

Laurent1 Laurent1::monomial(const Coef& c, int e, char var) {
    Laurent1 p(var);
    p.add_term(e, c);
    return p;
}

Coef Laurent1::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coef(0) : it->second;
}

void Laurent1::add_term(int e, const Coef& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Laurent1::maxdeg() const {
    if (terms_.empty()) throw std::logic_error("maxdeg of zero polynomial");
    return terms_.rbegin()->first;
}

int Laurent1::mindeg() const {
    if (terms_.empty()) throw std::logic_error("mindeg of zero polynomial");
    return terms_.begin()->first;
}

int Laurent1::deg_pos() const {
    if (terms_.empty()) return 0;
    return std::max(maxdeg(), 0);
}

int Laurent1::deg_neg() const {
    if (terms_.empty()) return 0;
    return std::max(-mindeg(), 0);
}

Laurent1 Laurent1::operator+(const Laurent1& o) const {
    Laurent1 r = *this;
    r += o;
    return r;
}

Laurent1& Laurent1::operator+=(const Laurent1& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Laurent1 Laurent1::operator-(const Laurent1& o) const {
    Laurent1 r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Laurent1 Laurent1::operator-() const {
    Laurent1 r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Laurent1 Laurent1::operator*(const Laurent1& o) const {
    Laurent1 r(var_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Laurent1 Laurent1::scaled(const Coef& c) const {
    Laurent1 r(var_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Laurent1 Laurent1::pow(unsigned k) const {
    Laurent1 r = constant(1, var_);
    Laurent1 base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Laurent1 Laurent1::substitute_inverse() const {
    Laurent1 r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

std::string Laurent1::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        render_term(out, first, c, var_power(var_, e));
        first = false;
    }
    return out.str();
}

Laurent1 Laurent1::parse(const std::string& text, char var) {
    Laurent1 p(var);
    TermParser tp(text);
    if (tp.done()) throw std::runtime_error("laurent parse error: empty input");
    bool first = true;
    while (!tp.done()) {
        int sign = 1;
        tp.skip_ws();
        if (tp.text[tp.pos] == '+' || tp.text[tp.pos] == '-') {
            sign = tp.text[tp.pos] == '-' ? -1 : 1;
            ++tp.pos;
        } else if (!first) {
            tp.fail("expected '+' or '-'");
        }
        Coef c;
        std::map<char, int> exps;
        tp.parse_term(std::string(1, var), c, exps);
        int e = exps.count(var) ? exps[var] : 0;
        p.add_term(e, sign * c);
        first = false;
    }
    return p;
}

Laurent2 Laurent2::constant(const Coef& c) {
    Laurent2 p;
    p.add_term(0, 0, c);
    return p;
}

Laurent2 Laurent2::monomial(const Coef& c, int ea, int eu) {
    Laurent2 p;
    p.add_term(ea, eu, c);
    return p;
}

Laurent2 Laurent2::from_a_poly(const Laurent1& p) {
    Laurent2 r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, 0, c);
    return r;
}

Coef Laurent2::coeff(int ea, int eu) const {
    auto it = terms_.find({ea, eu});
    return it == terms_.end() ? Coef(0) : it->second;
}

void Laurent2::add_term(int ea, int eu, const Coef& c) {
    if (c == 0) return;
    Key k{ea, eu};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Laurent2::deg_pos(int which) const {
    int best = 0;
    for (const auto& [k, c] : terms_) {
        (void)c;
        int e = which == 0 ? k.first : k.second;
        if (e > best) best = e;
    }
    return best;
}

int Laurent2::deg_neg(int which) const {
    int best = 0;
    for (const auto& [k, c] : terms_) {
        (void)c;
        int e = which == 0 ? k.first : k.second;
        if (-e > best) best = -e;
    }
    return best;
}

Laurent2 Laurent2::operator+(const Laurent2& o) const {
    Laurent2 r = *this;
    r += o;
    return r;
}

Laurent2& Laurent2::operator+=(const Laurent2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

Laurent2 Laurent2::operator*(const Laurent2& o) const {
    Laurent2 r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

Laurent2 Laurent2::scaled(const Coef& c) const {
    Laurent2 r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

Laurent2 Laurent2::substitute_inverse_u() const {
    Laurent2 r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first, -k.second}, c);
    return r;
}

Laurent1 Laurent2::u_coefficient(int eu) const {
    Laurent1 r('A');
    for (const auto& [k, c] : terms_)
        if (k.second == eu) r.add_term(k.first, c);
    return r;
}

Laurent1 Laurent2::collapse_u() const {
    Laurent1 r('A');
    for (const auto& [k, c] : terms_) r.add_term(k.first, c);
    return r;
}

std::string Laurent2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string va = var_power('A', k.first);
        std::string vu = var_power('u', k.second);
        std::string vars = va;
        if (!vu.empty()) {
            if (!vars.empty()) vars += "*";
            vars += vu;
        }
        render_term(out, first, c, vars);
        first = false;
    }
    return out.str();
}

Laurent2 Laurent2::parse(const std::string& text) {
    Laurent2 p;
    TermParser tp(text);
    if (tp.done()) throw std::runtime_error("laurent parse error: empty input");
    bool first = true;
    while (!tp.done()) {
        int sign = 1;
        tp.skip_ws();
        if (tp.text[tp.pos] == '+' || tp.text[tp.pos] == '-') {
            sign = tp.text[tp.pos] == '-' ? -1 : 1;
            ++tp.pos;
        } else if (!first) {
            tp.fail("expected '+' or '-'");
        }
        Coef c;
        std::map<char, int> exps;
        tp.parse_term("Au", c, exps);
        p.add_term(exps.count('A') ? exps['A'] : 0,
                   exps.count('u') ? exps['u'] : 0, sign * c);
        first = false;
    }
    return p;
}

}  // namespace knotoid
