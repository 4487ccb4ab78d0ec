#include "ramify/dvr.hpp"

#include <algorithm>
#include <sstream>

namespace ramify {

namespace {

std::uint64_t ipow(std::uint64_t b, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

DVRSpec DVRSpec::equal_char(std::uint32_t q, int precision) {
    if (precision < 2 || precision > kMaxPrecision)
        raise(ErrorKind::InvalidArgument,
              "precision must lie in [2, " + std::to_string(kMaxPrecision) + "]");
    if (FiniteField::prime_of(q) == 0 || q > FiniteField::kMaxOrder)
        raise(ErrorKind::InvalidArgument, "q must be a prime power, got " + std::to_string(q));
    DVRSpec s;
    s.kind_ = Kind::EqualChar;
    s.order_ = q;
    s.precision_ = precision;
    s.modulus_ = 0;
    s.field_ = &FiniteField::get(q);
    return s;
}

DVRSpec DVRSpec::mixed_char(std::uint32_t p, int precision) {
    if (precision < 2 || precision > kMaxPrecision)
        raise(ErrorKind::InvalidArgument,
              "precision must lie in [2, " + std::to_string(kMaxPrecision) + "]");
    if (!FiniteField::is_prime(p))
        raise(ErrorKind::InvalidArgument, "p must be prime, got " + std::to_string(p));
    unsigned __int128 m = 1;
    for (int i = 0; i < precision; ++i) {
        m *= p;
        if (m > (static_cast<unsigned __int128>(1) << 62))
            raise(ErrorKind::InvalidArgument, "p^N exceeds 2^62 for p=" + std::to_string(p) +
                                                  ", N=" + std::to_string(precision));
    }
    DVRSpec s;
    s.kind_ = Kind::MixedChar;
    s.order_ = p;
    s.precision_ = precision;
    s.modulus_ = static_cast<std::uint64_t>(m);
    s.field_ = &FiniteField::get(p);
    return s;
}

std::uint32_t DVRSpec::residue_characteristic() const noexcept {
    return field_ ? field_->characteristic() : order_;
}

const FiniteField& DVRSpec::residue_field() const {
    return field_ ? *field_ : FiniteField::get(order_);
}

DVRSpec DVRSpec::with_precision(int precision) const {
    return is_equal_char() ? equal_char(order_, precision) : mixed_char(order_, precision);
}

std::string DVRSpec::describe() const {
    std::ostringstream os;
    if (is_equal_char())
        os << "F_" << order_ << "[[t]]/t^" << precision_;
    else
        os << "Z_" << order_ << "/" << order_ << "^" << precision_;
    return os.str();
}

std::string Valuation::to_string() const {
    return at_least ? "AtLeast(" + std::to_string(value) + ")" : std::to_string(value);
}

// ---------------------------------------------------------------------------

DVRElement DVRElement::zero(const DVRSpec& spec) { return DVRElement(spec); }

DVRElement DVRElement::one(const DVRSpec& spec) {
    DVRElement r(spec);
    if (spec.is_equal_char())
        r.series_[0] = 1;
    else
        r.value_ = 1;
    return r;
}

DVRElement DVRElement::from_int(const DVRSpec& spec, long long n) {
    DVRElement r(spec);
    if (spec.is_equal_char()) {
        r.series_[0] = static_cast<std::uint16_t>(spec.residue_field().from_int(n));
    } else {
        const auto m = static_cast<long long>(spec.modulus());
        long long v = n % m;
        if (v < 0) v += m;
        r.value_ = static_cast<std::uint64_t>(v);
    }
    return r;
}

DVRElement DVRElement::constant(const DVRSpec& spec, Digit residue) {
    DVRElement r(spec);
    if (spec.is_equal_char()) {
        if (residue >= spec.order())
            raise(ErrorKind::InvalidArgument, "residue digit out of range");
        r.series_[0] = static_cast<std::uint16_t>(residue);
    } else {
        r.value_ = residue % spec.order();
    }
    return r;
}

DVRElement DVRElement::uniformizer_power(const DVRSpec& spec, int k) {
    DVRElement r(spec);
    if (k < 0) raise(ErrorKind::InvalidArgument, "negative uniformizer power");
    if (k >= spec.precision()) return r;
    if (spec.is_equal_char())
        r.series_[k] = 1;
    else
        r.value_ = ipow(spec.order(), k);
    return r;
}

DVRElement DVRElement::from_digits(const DVRSpec& spec, const std::vector<Digit>& digits) {
    DVRElement r(spec);
    const int n = std::min<int>(static_cast<int>(digits.size()), spec.precision());
    if (spec.is_equal_char()) {
        for (int i = 0; i < n; ++i) {
            if (digits[i] >= spec.order())
                raise(ErrorKind::InvalidArgument, "digit out of range for F_q");
            r.series_[i] = static_cast<std::uint16_t>(digits[i]);
        }
    } else {
        std::uint64_t scale = 1, acc = 0;
        for (int i = 0; i < n; ++i) {
            acc = (acc + mulmod(digits[i] % spec.order(), scale, spec.modulus())) % spec.modulus();
            scale = mulmod(scale, spec.order(), spec.modulus());
        }
        r.value_ = acc;
    }
    return r;
}

std::vector<DVRElement::Digit> DVRElement::digits() const {
    const int n = spec_.precision();
    std::vector<Digit> out(n, 0);
    if (spec_.is_equal_char()) {
        for (int i = 0; i < n; ++i) out[i] = series_[i];
    } else {
        std::uint64_t v = value_;
        for (int i = 0; i < n; ++i) {
            out[i] = static_cast<Digit>(v % spec_.order());
            v /= spec_.order();
        }
    }
    return out;
}

Valuation DVRElement::valuation() const noexcept {
    const int n = spec_.precision();
    if (spec_.is_equal_char()) {
        for (int i = 0; i < n; ++i)
            if (series_[i] != 0) return Valuation::exact(i);
        return Valuation::lower_bound(n);
    }
    if (value_ == 0) return Valuation::lower_bound(n);
    int v = 0;
    std::uint64_t x = value_;
    while (x % spec_.order() == 0) {
        x /= spec_.order();
        ++v;
    }
    return Valuation::exact(v);
}

bool DVRElement::is_zero() const noexcept { return valuation().at_least; }

bool DVRElement::is_unit() const noexcept {
    return spec_.is_equal_char() ? series_[0] != 0 : value_ % spec_.order() != 0;
}

void DVRElement::check_same(const DVRElement& o) const {
    if (spec_ != o.spec_)
        raise(ErrorKind::InvalidArgument,
              "mixing elements of " + spec_.describe() + " and " + o.spec_.describe());
}

DVRElement DVRElement::operator+(const DVRElement& o) const {
    check_same(o);
    DVRElement r(spec_);
    if (spec_.is_equal_char()) {
        const auto& F = spec_.residue_field();
        for (int i = 0; i < spec_.precision(); ++i)
            r.series_[i] = static_cast<std::uint16_t>(F.add(series_[i], o.series_[i]));
    } else {
        r.value_ = (value_ + o.value_) % spec_.modulus();
    }
    return r;
}

DVRElement DVRElement::operator-() const {
    DVRElement r(spec_);
    if (spec_.is_equal_char()) {
        const auto& F = spec_.residue_field();
        for (int i = 0; i < spec_.precision(); ++i)
            r.series_[i] = static_cast<std::uint16_t>(F.neg(series_[i]));
    } else {
        r.value_ = value_ == 0 ? 0 : spec_.modulus() - value_;
    }
    return r;
}

DVRElement DVRElement::operator-(const DVRElement& o) const { return *this + (-o); }

DVRElement DVRElement::operator*(const DVRElement& o) const {
    check_same(o);
    DVRElement r(spec_);
    if (spec_.is_equal_char()) {
        const auto& F = spec_.residue_field();
        const int n = spec_.precision();
        for (int i = 0; i < n; ++i) {
            if (series_[i] == 0) continue;
            for (int j = 0; i + j < n; ++j) {
                if (o.series_[j] == 0) continue;
                r.series_[i + j] = static_cast<std::uint16_t>(
                    F.add(r.series_[i + j], F.mul(series_[i], o.series_[j])));
            }
        }
    } else {
        r.value_ = mulmod(value_, o.value_, spec_.modulus());
    }
    return r;
}

DVRElement DVRElement::unit_inverse() const {
    if (!is_unit()) raise(ErrorKind::InvalidArgument, "inverse of a non-unit " + to_string());
    DVRElement r(spec_);
    if (spec_.is_equal_char()) {
        // b_0 = a_0^{-1}; b_k = -a_0^{-1} sum_{i=1..k} a_i b_{k-i}
        const auto& F = spec_.residue_field();
        const int n = spec_.precision();
        const auto a0inv = F.inv(series_[0]);
        r.series_[0] = static_cast<std::uint16_t>(a0inv);
        for (int k = 1; k < n; ++k) {
            FiniteField::Elem s = 0;
            for (int i = 1; i <= k; ++i)
                s = F.add(s, F.mul(series_[i], r.series_[k - i]));
            r.series_[k] = static_cast<std::uint16_t>(F.neg(F.mul(a0inv, s)));
        }
    } else {
        // Extended Euclid on (value, p^N).
        __int128 old_r = static_cast<__int128>(value_), cur_r = spec_.modulus();
        __int128 old_s = 1, cur_s = 0;
        while (cur_r != 0) {
            __int128 q = old_r / cur_r;
            __int128 t = old_r - q * cur_r;
            old_r = cur_r;
            cur_r = t;
            t = old_s - q * cur_s;
            old_s = cur_s;
            cur_s = t;
        }
        __int128 m = spec_.modulus();
        __int128 v = old_s % m;
        if (v < 0) v += m;
        r.value_ = static_cast<std::uint64_t>(v);
    }
    return r;
}

DVRElement DVRElement::shift_up(int k) const {
    if (k < 0) return shift_down(-k);
    DVRElement r(spec_);
    const int n = spec_.precision();
    if (k >= n) return r;
    if (spec_.is_equal_char()) {
        for (int i = n - 1; i >= k; --i) r.series_[i] = series_[i - k];
    } else {
        r.value_ = mulmod(value_, ipow(spec_.order(), k), spec_.modulus());
    }
    return r;
}

DVRElement DVRElement::shift_down(int k) const {
    if (k < 0) return shift_up(-k);
    const Valuation v = valuation();
    if (!v.at_least && v.value < k)
        raise(ErrorKind::InvalidArgument, "shift_down by " + std::to_string(k) +
                                              " of an element of valuation " + v.to_string());
    DVRElement r(spec_);
    const int n = spec_.precision();
    if (k >= n) return r;
    if (spec_.is_equal_char()) {
        for (int i = 0; i + k < n; ++i) r.series_[i] = series_[i + k];
    } else {
        r.value_ = value_ / ipow(spec_.order(), k);
    }
    return r;
}

DVRElement DVRElement::exact_div(const DVRElement& a, const DVRElement& b) {
    a.check_same(b);
    const Valuation vb = b.valuation();
    if (vb.at_least) raise(ErrorKind::PrecisionLoss, "division by an element that is zero at precision");
    const Valuation va = a.valuation();
    if (!va.at_least && va.value < vb.value)
        raise(ErrorKind::InvalidArgument, "exact_div: v(a) < v(b)");
    const int k = vb.value;
    DVRElement q = a.shift_down(k) * b.shift_down(k).unit_inverse();
    // Only the digits below N - k are determined.
    const int n = a.spec_.precision();
    if (k > 0) {
        if (a.spec_.is_equal_char()) {
            for (int i = n - k; i < n; ++i) q.series_[i] = 0;
        } else {
            q.value_ %= ipow(a.spec_.order(), n - k);
        }
    }
    return q;
}

DVRElement DVRElement::with_precision(int precision) const {
    const DVRSpec target = spec_.with_precision(precision);
    DVRElement r(target);
    if (spec_.is_equal_char()) {
        const int n = std::min(precision, spec_.precision());
        for (int i = 0; i < n; ++i) r.series_[i] = series_[i];
    } else {
        r.value_ = value_ % target.modulus();
    }
    return r;
}

std::string DVRElement::to_string() const {
    std::ostringstream os;
    if (!spec_.is_equal_char()) {
        os << value_;
        return os.str();
    }
    bool first = true;
    for (int i = 0; i < spec_.precision(); ++i) {
        if (series_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || series_[i] != 1) os << series_[i];
        if (i > 0) os << (series_[i] != 1 ? "*t" : "t");
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

bool operator==(const DVRElement& a, const DVRElement& b) noexcept {
    if (a.spec_ != b.spec_) return false;
    if (a.spec_.is_equal_char()) return a.series_ == b.series_;
    return a.value_ == b.value_;
}

// ---------------------------------------------------------------------------

DVRPoly::DVRPoly(const DVRSpec& spec, std::vector<DVRElement> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.spec() != spec_) raise(ErrorKind::InvalidArgument, "coefficient ring mismatch");
    trim();
}

DVRPoly DVRPoly::from_ints(const DVRSpec& spec, const std::vector<long long>& coeffs) {
    std::vector<DVRElement> cs;
    cs.reserve(coeffs.size());
    for (long long c : coeffs) cs.push_back(DVRElement::from_int(spec, c));
    return DVRPoly(spec, std::move(cs));
}

DVRPoly DVRPoly::monomial(const DVRSpec& spec, int degree, const DVRElement& c) {
    std::vector<DVRElement> cs(degree + 1, DVRElement::zero(spec));
    cs[degree] = c;
    return DVRPoly(spec, std::move(cs));
}

void DVRPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DVRElement DVRPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return DVRElement::zero(spec_);
    return coeffs_[i];
}

bool DVRPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == DVRElement::one(spec_);
}

DVRPoly DVRPoly::operator+(const DVRPoly& o) const {
    const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    std::vector<DVRElement> cs;
    cs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        cs.push_back(coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i)));
    return DVRPoly(spec_, std::move(cs));
}

DVRPoly DVRPoly::operator-(const DVRPoly& o) const {
    const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    std::vector<DVRElement> cs;
    cs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        cs.push_back(coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i)));
    return DVRPoly(spec_, std::move(cs));
}

DVRPoly DVRPoly::operator*(const DVRPoly& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return DVRPoly(spec_);
    std::vector<DVRElement> cs(coeffs_.size() + o.coeffs_.size() - 1, DVRElement::zero(spec_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] += coeffs_[i] * o.coeffs_[j];
    return DVRPoly(spec_, std::move(cs));
}

DVRPoly DVRPoly::scaled(const DVRElement& c) const {
    std::vector<DVRElement> cs;
    cs.reserve(coeffs_.size());
    for (const auto& a : coeffs_) cs.push_back(a * c);
    return DVRPoly(spec_, std::move(cs));
}

DVRPoly DVRPoly::derivative() const { return hasse_derivative(1); }

DVRPoly DVRPoly::hasse_derivative(int j) const {
    if (j < 0) raise(ErrorKind::InvalidArgument, "negative derivative order");
    const int d = degree();
    if (j > d) return DVRPoly(spec_);
    // Pascal rows computed inside the ring, so no integer overflow.
    std::vector<DVRElement> row(1, DVRElement::one(spec_));
    std::vector<DVRElement> cs;
    cs.reserve(d - j + 1);
    for (int i = 0; i <= d; ++i) {
        if (i > 0) {
            std::vector<DVRElement> next(i + 1, DVRElement::zero(spec_));
            for (int k = 0; k <= i; ++k) {
                if (k < i) next[k] += row[k];
                if (k > 0) next[k] += row[k - 1];
            }
            row = std::move(next);
        }
        if (i >= j) cs.push_back(row[j] * coeffs_[i]);
    }
    return DVRPoly(spec_, std::move(cs));
}

DVRElement DVRPoly::evaluate(const DVRElement& x) const {
    DVRElement acc = DVRElement::zero(spec_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

DVRPoly DVRPoly::with_precision(int precision) const {
    const DVRSpec s = spec_.with_precision(precision);
    std::vector<DVRElement> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(c.with_precision(precision));
    return DVRPoly(s, std::move(cs));
}

bool is_eisenstein(const DVRPoly& E) {
    if (!E.is_monic() || E.degree() < 1) return false;
    for (int i = 1; i < E.degree(); ++i) {
        const Valuation v = E.coeff(i).valuation();
        if (!v.at_least && v.value < 1) return false;
    }
    const Valuation v0 = E.coeff(0).valuation();
    if (v0.at_least) {
        if (v0.value <= 1)
            raise(ErrorKind::PrecisionLoss, "constant term valuation undecidable");
        return false;
    }
    return v0.value == 1;
}

}  // namespace ramify
