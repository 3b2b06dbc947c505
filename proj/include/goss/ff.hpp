#ifndef GOSS_FF_HPP
#define GOSS_FF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goss/errors.hpp"

namespace goss {

// A finite field F_{p^m} = F_p[x]/(modulus), with the modulus chosen
// deterministically: the lexicographically smallest monic irreducible of
// degree m over F_p, coefficients compared low-degree-first.
//
// Elements are stored as indices in [0, p^m): the index of an element with
// coefficient tuple (c_0,...,c_{m-1}) is sum c_i p^i. Prime-field indices
// coincide with residues. Instances live in a process-wide registry so that
// raw pointers stay valid for the life of the program; construction is
// memoized and reproducible.
class FieldSpec {
public:
    static const FieldSpec* get(uint32_t p, uint32_t m);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    bool prime_field() const { return m_ == 1; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    std::string name() const;

    // index arithmetic
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t frob(uint32_t a) const;  // a^p
    bool in_prime_subfield(uint32_t a) const { return a < p_; }

    // digit i of an index = coefficient of x^i
    uint32_t digit(uint32_t a, uint32_t i) const;
    uint32_t from_digits(const std::vector<uint32_t>& c) const;

    bool has_tables() const { return !mul_.empty(); }

private:
    FieldSpec(uint32_t p, uint32_t m);

    uint32_t add_slow(uint32_t a, uint32_t b) const;
    uint32_t mul_slow(uint32_t a, uint32_t b) const;

    uint32_t p_, m_, q_;
    std::vector<uint32_t> modulus_;  // c_0..c_m with c_m = 1
    std::vector<uint16_t> add_, mul_, neg_, inv_, frob_;
};

// Value type for field elements. Cross-field arithmetic throws; embeddings
// are explicit (see embed below).
class FieldElem {
public:
    FieldElem() : f_(nullptr), v_(0) {}
    FieldElem(const FieldSpec* f, uint32_t idx) : f_(f), v_(idx) {}

    const FieldSpec* field() const { return f_; }
    uint32_t idx() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool in_prime_subfield() const { return f_->in_prime_subfield(v_); }

    FieldElem operator+(const FieldElem& o) const { check(o); return {f_, f_->add(v_, o.v_)}; }
    FieldElem operator-(const FieldElem& o) const { check(o); return {f_, f_->sub(v_, o.v_)}; }
    FieldElem operator*(const FieldElem& o) const { check(o); return {f_, f_->mul(v_, o.v_)}; }
    FieldElem operator-() const { return {f_, f_->neg(v_)}; }
    FieldElem inverse() const { return {f_, f_->inv(v_)}; }
    FieldElem pow(uint64_t e) const { return {f_, f_->pow(v_, e)}; }
    bool operator==(const FieldElem& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
    void check(const FieldElem& o) const {
        if (f_ != o.f_) throw FieldMismatchError("arithmetic between elements of different fields");
    }
    const FieldSpec* f_;
    uint32_t v_;
};

// x^{p^k}
FieldElem frobenius_iter(const FieldElem& x, uint64_t k);

// Frobenius orbit {x, x^p, x^{p^2}, ...} without repetition. Its length
// divides the extension degree of the ambient field.
std::vector<FieldElem> frobenius_orbit(const FieldElem& x);

// Dense polynomial over a fixed field, coefficients stored low-degree-first
// as element indices. The zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() : f_(nullptr) {}
    explicit Poly(const FieldSpec* f) : f_(f) {}
    Poly(const FieldSpec* f, std::vector<uint32_t> coeffs);

    static Poly x(const FieldSpec* f);
    static Poly constant(const FieldSpec* f, uint32_t c);

    const FieldSpec* field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0u; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly mul_scalar(uint32_t s) const;
    // division by a monic divisor; returns {quotient, remainder}
    std::pair<Poly, Poly> divmod(const Poly& monic_divisor) const;
    Poly mod(const Poly& monic_divisor) const { return divmod(monic_divisor).second; }

    uint32_t eval(uint32_t x_idx) const;
    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    const FieldSpec* f_;
    std::vector<uint32_t> c_;
};

Poly poly_pow_mod(const Poly& base, uint64_t e, const Poly& modulus);
Poly poly_gcd(Poly a, Poly b);
bool is_irreducible(const Poly& f);
std::vector<uint32_t> poly_roots(const Poly& f);  // roots in the coefficient field

// Streams the q^d monic polynomials of degree d in a fixed odometer order.
class MonicRange {
public:
    MonicRange(const FieldSpec* f, uint32_t d);
    bool next(Poly& out);  // false when exhausted
    uint64_t total() const { return total_; }

private:
    const FieldSpec* f_;
    uint32_t d_;
    uint64_t total_, at_;
};

// Deterministic embedding F_{p^a} -> F_{p^{ab}}: the small modulus is mapped
// to its smallest root (in index order) in the big field. Memoized.
FieldElem embed(const FieldElem& x, const FieldSpec* big);

}  // namespace goss

#endif
