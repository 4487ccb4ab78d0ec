#include "ramify/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace ramify {

MultiPoly::MultiPoly(const DVRSpec& spec, int nvars) : spec_(spec), nvars_(nvars) {
    if (nvars < 0) raise(ErrorKind::InvalidArgument, "negative variable count");
}

MultiPoly MultiPoly::constant(const DVRSpec& spec, int nvars, const DVRElement& c) {
    MultiPoly p(spec, nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const DVRSpec& spec, int nvars, int i) {
    MultiPoly p(spec, nvars);
    Monomial m(nvars, 0);
    m.at(i) = 1;
    p.add_term(m, DVRElement::one(spec));
    return p;
}

DVRElement MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? DVRElement::zero(spec_) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const DVRElement& c) {
    if (static_cast<int>(m.size()) != nvars_) raise(ErrorKind::InvalidArgument, "monomial arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(spec_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) raise(ErrorKind::InvalidArgument, "variable count mismatch");
    MultiPoly r(spec_, nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) raise(ErrorKind::InvalidArgument, "negative exponent");
    MultiPoly r = constant(spec_, nvars_, DVRElement::one(spec_)), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::derivative(int i) const {
    MultiPoly r(spec_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d(m);
        --d[i];
        r.add_term(d, c * DVRElement::from_int(spec_, m[i]));
    }
    return r;
}

MultiPoly MultiPoly::linear_substitution(const DVRMatrix& L) const {
    if (L.rows() != nvars_ || L.cols() != nvars_) raise(ErrorKind::InvalidArgument, "substitution shape mismatch");
    std::vector<MultiPoly> images;
    for (int i = 0; i < nvars_; ++i) {
        MultiPoly v(spec_, nvars_);
        for (int j = 0; j < nvars_; ++j) v = v + constant(spec_, nvars_, L(i, j)) * variable(spec_, nvars_, j);
        images.push_back(v);
    }
    MultiPoly r(spec_, nvars_);
    for (const auto& [m, c] : terms_) {
        MultiPoly t = constant(spec_, nvars_, c);
        for (int i = 0; i < nvars_; ++i)
            if (m[i]) t = t * images[i].pow(m[i]);
        r = r + t;
    }
    return r;
}

MultiPoly MultiPoly::with_precision(int precision) const {
    MultiPoly r(spec_.with_precision(precision), nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.with_precision(precision));
    return r;
}

MultiPoly MultiPoly::with_nvars(int nvars) const {
    if (nvars < nvars_) {
        for (const auto& [m, c] : terms_)
            for (int i = nvars; i < nvars_; ++i)
                if (m[i]) raise(ErrorKind::InvalidArgument, "cannot drop a variable that occurs");
    }
    MultiPoly r(spec_, nvars);
    for (const auto& [m, c] : terms_) {
        Monomial n(nvars, 0);
        for (int i = 0; i < std::min(nvars, nvars_); ++i) n[i] = m[i];
        r.add_term(n, c);
    }
    return r;
}

DVRPoly MultiPoly::to_univariate() const {
    if (nvars_ != 1) raise(ErrorKind::InvalidArgument, "polynomial is not univariate");
    const int d = std::max(total_degree(), 0);
    std::vector<DVRElement> cs(d + 1, DVRElement::zero(spec_));
    for (const auto& [m, c] : terms_) cs[m[0]] = c;
    return DVRPoly(spec_, std::move(cs));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (!m[i]) continue;
            os << "*x" << i;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string& text, const DVRSpec& spec) : s_(text), spec_(spec) {}

    MultiPoly run(int min_vars) {
        // First pass finds the variable count, second pass builds.
        scan_vars();
        nvars_ = std::max(min_vars, max_var_ + 1);
        pos_ = 0;
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        raise(ErrorKind::InvalidArgument, "parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    void scan_vars() {
        for (std::size_t i = 0; i < s_.size(); ++i) {
            if (s_[i] != 'x') continue;
            if (i + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i + 1])))
                max_var_ = std::max(max_var_, s_[i + 1] - '0');
            else
                max_var_ = std::max(max_var_, 0);
        }
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc = acc + term();
            } else if (peek('-')) {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return c == '(' || c == 'x' || c == 't' || std::isdigit(static_cast<unsigned char>(c));
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * unary();
            } else if (starts_primary()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    MultiPoly power() {
        MultiPoly base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            const long long k = integer();
            if (k > 64) fail("exponent too large");
            return base.pow(static_cast<int>(k));
        }
        return base;
    }

    long long integer() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 40)) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    MultiPoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly::constant(spec_, nvars_, DVRElement::from_int(spec_, integer()));
        if (c == 't') {
            ++pos_;
            if (!spec_.is_equal_char()) fail("'t' is only available in equal characteristic");
            return MultiPoly::constant(spec_, nvars_, DVRElement::uniformizer_power(spec_, 1));
        }
        if (c == 'x') {
            ++pos_;
            int idx = 0;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) idx = s_[pos_++] - '0';
            return MultiPoly::variable(spec_, nvars_, idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    DVRSpec spec_;
    std::size_t pos_ = 0;
    int max_var_ = -1;
    int nvars_ = 1;
};

}  // namespace

MultiPoly parse_polynomial(const std::string& text, const DVRSpec& spec, int min_vars) {
    return Parser(text, spec).run(min_vars);
}

}  // namespace ramify
