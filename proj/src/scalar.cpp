#include "wrect/scalar.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace wrect {

/******** Poly arithmetic ********/

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [m1, c1] : terms)
        for (auto& [m2, c2] : o.terms) {
            Mono m = m1 * m2;
            auto it = r.terms.find(m);
            if (it == r.terms.end()) {
                r.terms.emplace(m, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (auto& [m, k] : terms) r.terms.emplace(m, k * c);
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly rem = *this, quot;
    auto [lm, lc] = d.leading();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading();
        if (!lm.divides(rm)) return std::nullopt;
        Mono qm = rm / lm;
        Rat qc = rc / lc;
        Poly t;
        t.terms[qm] = qc;
        quot += t;
        rem -= d * t;
    }
    return quot;
}

/******** gcd (primitive PRS, recursing on the top variable) ********/

namespace {

int top_var(const Poly& p) {
    for (int v = kNumVars - 1; v >= 0; --v)
        if (p.degree_in(Var(v)) > 0) return v;
    return -1;
}

// View p as a univariate polynomial in v with Poly coefficients.
std::vector<Poly> coeffs_in(const Poly& p, Var v) {
    std::vector<Poly> out(p.degree_in(v) + 1);
    for (auto& [m, c] : p.terms) {
        Mono r = m;
        int k = r.e[v];
        r.e[v] = 0;
        out[k].terms[r] = c;
    }
    return out;
}

Poly from_coeffs(const std::vector<Poly>& cs, Var v) {
    Poly out;
    for (size_t k = 0; k < cs.size(); ++k) {
        Poly xk = Poly::var(v, int(k));
        out += cs[k] * xk;
    }
    return out;
}

Poly make_monic(Poly p) {
    if (p.is_zero()) return p;
    Rat lc = p.leading().second;
    return p * (Rat(1) / lc);
}

Poly content_in(const std::vector<Poly>& cs) {
    Poly g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    if (g.is_zero()) g = Poly(Rat(0));
    return g;
}

// Pseudo-remainder of a by b in variable v.
Poly pseudo_rem(Poly a, const Poly& b, Var v) {
    int db = b.degree_in(v);
    auto bc = coeffs_in(b, v);
    Poly blead = bc[db];
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        auto ac = coeffs_in(a, v);
        Poly alead = ac[da];
        // a <- blead*a - alead*x^(da-db)*b
        a = a * blead - b * (alead * Poly::var(v, da - db));
    }
    return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    int va = top_var(a), vb = top_var(b);
    if (va < 0 || vb < 0) return Poly(Rat(1));
    Var v = Var(std::max(va, vb));
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
        // One operand is free of the top variable: gcd divides its content.
        const Poly& free_one = a.degree_in(v) == 0 ? a : b;
        const Poly& other = a.degree_in(v) == 0 ? b : a;
        Poly cont = content_in(coeffs_in(other, v));
        return poly_gcd(free_one, cont);
    }
    auto ca = content_in(coeffs_in(a, v));
    auto cb = content_in(coeffs_in(b, v));
    Poly cg = poly_gcd(ca, cb);
    Poly pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
    while (!pb.is_zero()) {
        Poly r = pseudo_rem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            Poly cr = content_in(coeffs_in(r, v));
            pb = *r.divide_exact(cr);
        }
    }
    return make_monic(cg * pa);
}

/******** Scalar ********/

Scalar::Scalar(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    canonicalize();
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
    }
    Rat lc = den_.leading().second;
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Scalar Scalar::xi(int r) {
    Poly p = Poly::var(VAR_ALPHA) * Rat(2 * r + 1) + Poly(Rat(1));
    return Scalar(p * Poly::var(VAR_HBAR), Poly(Rat(2)));
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Scalar Scalar::operator*(const Scalar& o) const { return Scalar(num_ * o.num_, den_ * o.den_); }
Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}
Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

bool Scalar::operator<(const Scalar& o) const {
    if (num_.terms != o.num_.terms) return num_.terms < o.num_.terms;
    return den_.terms < o.den_.terms;
}

namespace {
Scalar subst_poly(const Poly& p, const std::map<Var, Scalar>& b) {
    Scalar out(0);
    for (auto& [m, c] : p.terms) {
        Scalar t{Rat(c)};
        for (int v = 0; v < kNumVars; ++v) {
            if (m.e[v] == 0) continue;
            auto it = b.find(Var(v));
            Scalar base = (it != b.end()) ? it->second : Scalar(Poly::var(Var(v)));
            for (int k = 0; k < m.e[v]; ++k) t = t * base;
        }
        out += t;
    }
    return out;
}
}  // namespace

Scalar Scalar::substitute(const std::map<Var, Scalar>& bindings) const {
    return subst_poly(num_, bindings) / subst_poly(den_, bindings);
}

std::map<Var, Scalar> eps_bindings(int n) {
    Scalar ah = Scalar::alpha() * Scalar::hbar();
    std::map<Var, Scalar> b;
    b[VAR_EPS1] = Scalar(0) - ah / Scalar(n);
    b[VAR_EPS2] = Scalar::hbar() + ah / Scalar(n);
    return b;
}

std::map<Var, Scalar> hbar_binding() {
    std::map<Var, Scalar> b;
    b[VAR_HBAR] = Scalar::eps1() + Scalar::eps2();
    return b;
}

Rat binom(long a, long r) {
    if (r < 0) return 0;
    Rat num = 1;
    for (long k = 0; k < r; ++k) num *= Rat(a - k);
    Rat den = 1;
    for (long k = 2; k <= r; ++k) den *= Rat(k);
    return num / den;
}

/******** printing ********/

namespace {
const char* kVarNames[kNumVars] = {"alpha", "hbar", "eps1", "eps2", "a0"};

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    // Highest monomials first.
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const Mono& m = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (int v = 0; v < kNumVars; ++v) {
            if (m.e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += kVarNames[v];
            if (m.e[v] > 1) mono += "^" + std::to_string(m.e[v]);
        }
        if (mono.empty()) {
            out += rat_str(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += rat_str(c) + "*" + mono;
        }
    }
    return out;
}
}  // namespace

std::string Scalar::str() const {
    if (den_.is_constant() && den_.constant_value() == 1) return poly_str(num_);
    std::string d = poly_str(den_);
    if (den_.terms.size() > 1) d = "(" + d + ")";
    std::string n = poly_str(num_);
    if (num_.terms.size() > 1) n = "(" + n + ")";
    return n + "/" + d;
}

/******** parsing ********/

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        while (true) {
            if (eat('+')) {
                v += parse_term();
            } else if (eat('-')) {
                v -= parse_term();
            } else {
                return v;
            }
        }
    }
    Scalar parse_term() {
        Scalar v = parse_factor();
        while (true) {
            if (eat('*')) {
                v *= parse_factor();
            } else if (eat('/')) {
                v = v / parse_factor();
            } else {
                return v;
            }
        }
    }
    Scalar parse_factor() {
        Scalar base = parse_base();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            long e = parse_int();
            Scalar r(1);
            for (long k = 0; k < e; ++k) r *= base;
            if (neg) r = Scalar(1) / r;
            return r;
        }
        return base;
    }
    long parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("Scalar::parse: expected integer at position " + std::to_string(pos));
        return std::stol(s.substr(start, pos - start));
    }
    Scalar parse_base() {
        skip_ws();
        if (eat('(')) {
            Scalar v = parse_expr();
            if (!eat(')')) throw std::invalid_argument("Scalar::parse: missing ')'");
            return v;
        }
        if (eat('-')) return -parse_factor();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) return Scalar(Rat(Int(parse_int())));
        // Symbol: ASCII names or the unicode spellings used in the paper-facing docs.
        static const std::vector<std::pair<std::string, Var>> names = {
            {"alpha", VAR_ALPHA}, {"α", VAR_ALPHA},                       // α
            {"hbar", VAR_HBAR},   {"ħ", VAR_HBAR},                        // ħ
            {"eps1", VAR_EPS1},   {"ε₁", VAR_EPS1}, {"ε1", VAR_EPS1},  // ε₁
            {"eps2", VAR_EPS2},   {"ε₂", VAR_EPS2}, {"ε2", VAR_EPS2},  // ε₂
            {"a0", VAR_A0},       {"a₀", VAR_A0},                         // a₀
        };
        for (auto& [name, var] : names) {
            if (s.compare(pos, name.size(), name) == 0) {
                pos += name.size();
                return Scalar(Poly::var(var));
            }
        }
        throw std::invalid_argument("Scalar::parse: unexpected token at position " + std::to_string(pos));
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    Parser p(text);
    Scalar v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw std::invalid_argument("Scalar::parse: trailing input");
    return v;
}

}  // namespace wrect
