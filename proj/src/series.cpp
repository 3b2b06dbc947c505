#include "goss/series.hpp"

#include <cmath>
#include <sstream>

namespace goss {

TruncSeries TruncSeries::one(const FieldSpec* f, uint32_t N) {
    TruncSeries s(f, N);
    if (N > 0) s.c_[0] = 1;
    return s;
}

TruncSeries TruncSeries::pi_pow(const FieldSpec* f, uint32_t N, uint32_t k, uint32_t coeff) {
    TruncSeries s(f, N);
    if (k < N) s.c_[k] = static_cast<uint16_t>(coeff);
    return s;
}

TruncSeries TruncSeries::from_coeffs(const FieldSpec* f, uint32_t N, const std::vector<uint32_t>& coeffs) {
    TruncSeries s(f, N);
    for (uint32_t k = 0; k < N && k < coeffs.size(); ++k) {
        if (coeffs[k] >= f->q()) throw std::invalid_argument("coefficient index out of field range");
        s.c_[k] = static_cast<uint16_t>(coeffs[k]);
    }
    return s;
}

void TruncSeries::set_coeff(uint32_t k, uint32_t v) {
    if (k >= N_) throw std::out_of_range("coefficient index past precision");
    c_[k] = static_cast<uint16_t>(v);
}

bool TruncSeries::is_zero() const {
    for (uint16_t x : c_)
        if (x) return false;
    return true;
}

bool TruncSeries::is_one() const {
    if (N_ == 0 || c_[0] != 1) return false;
    for (uint32_t k = 1; k < N_; ++k)
        if (c_[k]) return false;
    return true;
}

std::optional<uint32_t> TruncSeries::valuation() const {
    for (uint32_t k = 0; k < N_; ++k)
        if (c_[k]) return k;
    return std::nullopt;
}

void TruncSeries::check(const TruncSeries& o) const {
    if (f_ != o.f_) throw FieldMismatchError("series arithmetic across coefficient fields");
    if (N_ != o.N_)
        throw PrecisionError("series precisions differ (" + std::to_string(N_) + " vs " +
                                 std::to_string(o.N_) + "); re-truncate explicitly",
                             static_cast<long>(std::max(N_, o.N_)));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check(o);
    TruncSeries r(f_, N_);
    if (f_->prime_field()) {
        uint32_t p = f_->p();
        for (uint32_t k = 0; k < N_; ++k) {
            uint32_t s = c_[k] + o.c_[k];
            r.c_[k] = static_cast<uint16_t>(s >= p ? s - p : s);
        }
    } else {
        for (uint32_t k = 0; k < N_; ++k) r.c_[k] = static_cast<uint16_t>(f_->add(c_[k], o.c_[k]));
    }
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    check(o);
    TruncSeries r(f_, N_);
    for (uint32_t k = 0; k < N_; ++k) r.c_[k] = static_cast<uint16_t>(f_->sub(c_[k], o.c_[k]));
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(f_, N_);
    for (uint32_t k = 0; k < N_; ++k) r.c_[k] = static_cast<uint16_t>(f_->neg(c_[k]));
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check(o);
    TruncSeries r(f_, N_);
    if (f_->prime_field()) {
        uint32_t p = f_->p();
        std::vector<uint64_t> acc(N_, 0);
        for (uint32_t i = 0; i < N_; ++i) {
            uint64_t a = c_[i];
            if (!a) continue;
            uint32_t lim = N_ - i;
            for (uint32_t j = 0; j < lim; ++j) acc[i + j] += a * o.c_[j];
        }
        for (uint32_t k = 0; k < N_; ++k) r.c_[k] = static_cast<uint16_t>(acc[k] % p);
    } else {
        for (uint32_t i = 0; i < N_; ++i) {
            uint32_t a = c_[i];
            if (!a) continue;
            uint32_t lim = N_ - i;
            for (uint32_t j = 0; j < lim; ++j) {
                uint32_t bb = o.c_[j];
                if (!bb) continue;
                r.c_[i + j] = static_cast<uint16_t>(f_->add(r.c_[i + j], f_->mul(a, bb)));
            }
        }
    }
    return r;
}

TruncSeries TruncSeries::inverse() const {
    if (N_ == 0 || c_[0] == 0) throw std::domain_error("series inverse requires a unit constant term");
    TruncSeries r(f_, N_);
    uint32_t a0inv = f_->inv(c_[0]);
    r.c_[0] = static_cast<uint16_t>(a0inv);
    for (uint32_t n = 1; n < N_; ++n) {
        uint32_t s = 0;
        for (uint32_t k = 1; k <= n; ++k)
            if (c_[k] && r.c_[n - k]) s = f_->add(s, f_->mul(c_[k], r.c_[n - k]));
        r.c_[n] = static_cast<uint16_t>(f_->neg(f_->mul(a0inv, s)));
    }
    return r;
}

TruncSeries TruncSeries::mul_scalar(uint32_t s) const {
    TruncSeries r(f_, N_);
    for (uint32_t k = 0; k < N_; ++k)
        if (c_[k]) r.c_[k] = static_cast<uint16_t>(f_->mul(c_[k], s));
    return r;
}

TruncSeries TruncSeries::shift(uint32_t k) const {
    TruncSeries r(f_, N_);
    for (uint32_t i = 0; i + k < N_; ++i) r.c_[i + k] = c_[i];
    return r;
}

TruncSeries TruncSeries::frobenius() const {
    TruncSeries r(f_, N_);
    uint32_t p = f_->p();
    for (uint32_t k = 0; k * p < N_; ++k)
        if (c_[k]) r.c_[k * p] = static_cast<uint16_t>(f_->frob(c_[k]));
    return r;
}

TruncSeries TruncSeries::pow_small(uint32_t e) const {
    TruncSeries r = TruncSeries::one(f_, N_);
    for (uint32_t i = 0; i < e; ++i) r = r * (*this);
    return r;
}

TruncSeries TruncSeries::truncate(uint32_t N) const {
    if (N > N_) throw PrecisionError("cannot extend series precision", static_cast<long>(N));
    TruncSeries r(f_, N);
    for (uint32_t k = 0; k < N; ++k) r.c_[k] = c_[k];
    return r;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (uint32_t k = 0; k < N_; ++k) {
        if (!c_[k]) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0 || c_[k] != 1) os << c_[k];
        if (k >= 1) {
            os << "pi";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    os << " (mod pi^" << N_ << ")";
    return os.str();
}

OneUnit::OneUnit(TruncSeries s) : s_(std::move(s)) {
    if (s_.coeff(0) != 1) throw std::invalid_argument("1-unit must have constant coefficient 1");
}

OneUnit one_unit_pow(const OneUnit& u, const PadicExponent& y) {
    const uint32_t N = u.precision();
    uint32_t p = y.p();
    if (u.series().field()->p() != p)
        throw std::invalid_argument("exponent characteristic differs from coefficient field");
    uint32_t K = 0;
    uint64_t pk = 1;
    while (pk < N) { pk *= p; ++K; }
    if (y.available_digits() < K)
        throw PrecisionError("one_unit_pow needs " + std::to_string(K) + " certified exponent digits",
                             static_cast<long>(K));
    std::vector<uint8_t> ds = y.digits(K);
    TruncSeries acc = TruncSeries::one(u.series().field(), N);
    TruncSeries v = u.series();
    for (uint32_t n = 0; n < K; ++n) {
        if (ds[n]) acc = acc * v.pow_small(ds[n]);
        v = v.frobenius();
    }
    return OneUnit(std::move(acc));
}

}  // namespace goss
