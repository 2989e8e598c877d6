#include "polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace saw {

BigInt binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt acc = 1;
    for (unsigned i = 1; i <= r; ++i) {
        acc *= n - r + i;
        acc /= i;
    }
    return acc;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt acc = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

// Polynomial ----------------------------------------------------------

Polynomial Polynomial::monomial(BigInt c, unsigned e) {
    if (c == 0) return {};
    std::vector<BigInt> v(e + 1, BigInt(0));
    v[e] = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& Polynomial::coeff(std::size_t i) const {
    static const BigInt zero = 0;
    return i < c_.size() ? c_[i] : zero;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> v(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    std::vector<BigInt> v = c_;
    for (auto& x : v) x = -x;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const BigInt& f) const {
    std::vector<BigInt> v = c_;
    for (auto& x : v) x *= f;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * i;
    return Polynomial(std::move(v));
}

BigRat Polynomial::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

Float50 Polynomial::eval(const Float50& x) const {
    Float50 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + Float50(*it);
    return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigInt a = c_[i];
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) out << a.str();
        if (i >= 1) {
            out << var;
            if (i >= 2) out << '^' << i;
        }
    }
    return out.str();
}

// MultiPolynomial ------------------------------------------------------

MultiPolynomial MultiPolynomial::constant(BigInt v) { return monomial(std::move(v), 0, 0, 0, 0); }

MultiPolynomial MultiPolynomial::monomial(BigInt c, int ex, int ey, int ea, int eb) {
    MultiPolynomial p;
    p.add_term({ex, ey, ea, eb}, std::move(c));
    return p;
}

void MultiPolynomial::add_term(Key k, BigInt c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool MultiPolynomial::is_laurent_free() const {
    for (const auto& [k, c] : terms_)
        for (int e : k)
            if (e < 0) return false;
    return true;
}

MultiPolynomial MultiPolynomial::operator+(const MultiPolynomial& o) const {
    MultiPolynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

MultiPolynomial MultiPolynomial::operator-(const MultiPolynomial& o) const {
    MultiPolynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

MultiPolynomial MultiPolynomial::operator*(const MultiPolynomial& o) const {
    MultiPolynomial r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]};
            r.add_term(k, ca * cb);
        }
    return r;
}

MultiPolynomial MultiPolynomial::operator-() const {
    MultiPolynomial r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

MultiPolynomial MultiPolynomial::scaled(const BigInt& f) const {
    if (f == 0) return {};
    MultiPolynomial r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * f);
    return r;
}

BigRat MultiPolynomial::eval(const BigRat& x, const BigRat& y, const BigRat& a,
                             const BigRat& b) const {
    auto pow_rat = [](const BigRat& v, int e) {
        if (e == 0) return BigRat(1);
        bool neg = e < 0;
        unsigned n = neg ? -e : e;
        BigRat acc = 1, base = v;
        while (n) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return neg ? BigRat(1) / acc : acc;
    };
    BigRat total = 0;
    for (const auto& [k, c] : terms_)
        total += BigRat(c) * pow_rat(x, k[0]) * pow_rat(y, k[1]) * pow_rat(a, k[2]) * pow_rat(b, k[3]);
    return total;
}

Polynomial MultiPolynomial::specialize_prob() const {
    if (!is_laurent_free())
        throw std::logic_error("specialize_prob: Laurent terms present");
    // x -> 3x, y -> 2, a -> 2x, b -> 1: the term c x^i y^j a^m b^n
    // becomes c 3^i 2^j 2^m x^(i+m).
    Polynomial out;
    for (const auto& [k, c] : terms_) {
        BigInt f = c * int_pow(3, k[0]) * int_pow(2, k[1]) * int_pow(2, k[2]);
        out = out + Polynomial::monomial(f, static_cast<unsigned>(k[0] + k[2]));
    }
    return out;
}

std::string MultiPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names[4] = {"x", "y", "a", "b"};
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = k[0] || k[1] || k[2] || k[3];
        if (!has_var || a != 1) out << a.str();
        for (int v = 0; v < 4; ++v) {
            if (k[v] == 0) continue;
            out << names[v];
            if (k[v] != 1) out << '^' << k[v];
        }
    }
    return out.str();
}

std::optional<MultiPolynomial> divide_exact(const MultiPolynomial& num,
                                            const MultiPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (!num.is_laurent_free() || !den.is_laurent_free())
        throw std::invalid_argument("divide_exact: Laurent inputs not supported");

    using Key = MultiPolynomial::Key;
    // Long division by the lex-leading term of the divisor, carried out
    // over rational coefficients; the map's largest key is the leading
    // monomial because Key is compared lexicographically.
    std::map<Key, BigRat> rem;
    for (const auto& [k, c] : num.terms()) rem[k] = BigRat(c);
    const Key dk = den.terms().rbegin()->first;
    const BigInt& dc = den.terms().rbegin()->second;

    std::map<Key, BigRat> quo;
    while (!rem.empty()) {
        const Key rk = rem.rbegin()->first;
        const BigRat rc = rem.rbegin()->second;
        Key qk;
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            qk[i] = rk[i] - dk[i];
            if (qk[i] < 0) ok = false;
        }
        if (!ok) return std::nullopt;  // leading term not divisible: nonzero remainder
        BigRat qc = rc / BigRat(dc);
        quo[qk] += qc;
        for (const auto& [k, c] : den.terms()) {
            Key t{k[0] + qk[0], k[1] + qk[1], k[2] + qk[2], k[3] + qk[3]};
            auto it = rem.find(t);
            BigRat nv = (it == rem.end() ? BigRat(0) : it->second) - qc * BigRat(c);
            if (nv == 0) {
                if (it != rem.end()) rem.erase(it);
            } else {
                rem[t] = nv;
            }
        }
    }

    MultiPolynomial result;
    for (const auto& [k, c] : quo) {
        if (c == 0) continue;
        if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
        result.add_term(k, BigInt(boost::multiprecision::numerator(c)));
    }
    return result;
}

// RationalSeries -------------------------------------------------------

RationalSeries::RationalSeries(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero() || den_.coeff(0) == 0)
        throw std::invalid_argument("RationalSeries: denominator must have nonzero constant term");
}

BigRat RationalSeries::coeff_rat(unsigned l) const {
    // den[0]*s_l = num[l] - sum_{j>=1} den[j]*s_{l-j}
    const BigRat d0(den_.coeff(0));
    while (cache_.size() <= l) {
        unsigned n = static_cast<unsigned>(cache_.size());
        BigRat acc(num_.coeff(n));
        unsigned maxj = std::min<unsigned>(n, static_cast<unsigned>(std::max(den_.degree(), 0)));
        for (unsigned j = 1; j <= maxj; ++j) acc -= BigRat(den_.coeff(j)) * cache_[n - j];
        cache_.push_back(acc / d0);
    }
    return cache_[l];
}

BigInt RationalSeries::coeff(unsigned l) const {
    BigRat v = coeff_rat(l);
    if (boost::multiprecision::denominator(v) != 1)
        throw std::logic_error("RationalSeries::coeff: non-integer coefficient");
    return BigInt(boost::multiprecision::numerator(v));
}

}  // namespace saw
