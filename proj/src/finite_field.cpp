#include "ramify/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

// Digit-vector helpers for the polynomial representation used while the
// tables are being built.
std::vector<std::uint32_t> to_digits(std::uint32_t a, std::uint32_t p, unsigned k) {
    std::vector<std::uint32_t> d(k, 0);
    for (unsigned i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

std::uint32_t from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t a = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
    return a;
}

// Multiply by x modulo the monic polynomial x^k + sum c_i x^i (c given low first).
std::vector<std::uint32_t> times_x(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& c, std::uint32_t p) {
    const unsigned k = static_cast<unsigned>(a.size());
    std::vector<std::uint32_t> r(k, 0);
    const std::uint32_t top = a[k - 1];
    for (unsigned i = k - 1; i > 0; --i) r[i] = a[i - 1];
    r[0] = 0;
    for (unsigned i = 0; i < k; ++i) r[i] = (r[i] + (p - c[i]) % p * top) % p;
    return r;
}

}  // namespace

bool FiniteField::is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t FiniteField::prime_of(std::uint32_t q) {
    if (q < 2) return 0;
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t r = q;
    while (r % p == 0) r /= p;
    return r == 1 ? p : 0;
}

const FiniteField& FiniteField::get(std::uint32_t q) {
    static std::mutex mutex;
    static std::map<std::uint32_t, std::unique_ptr<FiniteField>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(q);
    if (it == cache.end()) {
        it = cache.emplace(q, std::unique_ptr<FiniteField>(new FiniteField(q))).first;
    }
    return *it->second;
}

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
    p_ = prime_of(q);
    if (p_ == 0 || q > kMaxOrder)
        raise(ErrorKind::InvalidArgument, "field order must be a prime power <= 65536, got " +
                                              std::to_string(q));
    k_ = 0;
    for (std::uint32_t r = q; r > 1; r /= p_) ++k_;

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);

    // Search monic polynomials of degree k until x generates the unit group.
    for (std::uint32_t code = 0; code < q_; ++code) {
        std::vector<std::uint32_t> c = to_digits(code, p_, k_);
        if (c[0] == 0) continue;
        std::vector<std::uint32_t> cur(k_, 0);
        cur[0] = 1;
        if (k_ == 1) {
            // Degree one: the "polynomial" is x + c0, x = -c0; look for a generator directly.
            cur[0] = (p_ - c[0]) % p_;
        }
        std::vector<bool> seen(q_, false);
        bool ok = true;
        std::uint32_t g = k_ == 1 ? cur[0] : 0;
        std::vector<std::uint32_t> acc(k_, 0);
        acc[0] = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            std::uint32_t a = from_digits(acc, p_);
            if (a == 0 || seen[a]) {
                ok = false;
                break;
            }
            seen[a] = true;
            exp_[i] = a;
            if (k_ == 1) {
                acc[0] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(acc[0]) * g) % p_);
            } else {
                acc = times_x(acc, c, p_);
            }
        }
        if (!ok) continue;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i + q_ - 1] = exp_[i];
            log_[exp_[i]] = i;
        }
        return;
    }
    raise(ErrorKind::InvalidArgument, "no primitive polynomial found for q=" + std::to_string(q));
}

FiniteField::Elem FiniteField::from_int(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const noexcept {
    if (k_ == 1) {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem r = 0, scale = 1;
    while (a || b) {
        Elem d = (a % p_ + b % p_) % p_;
        r += d * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const noexcept {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0, scale = 1;
    while (a) {
        Elem d = a % p_;
        r += ((p_ - d) % p_) * scale;
        scale *= p_;
        a /= p_;
    }
    return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    return exp_[log_[a] + log_[b]];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) raise(ErrorKind::InvalidArgument, "inverse of zero in F_q");
    if (a == 1) return 1;
    return exp_[(q_ - 1) - log_[a]];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t n) const noexcept {
    if (n == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * n) % (q_ - 1))];
}

}  // namespace ramify
