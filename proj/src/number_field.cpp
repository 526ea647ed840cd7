#include "number_field.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace covsys {

std::string coordsText(const Elem& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Elem& a) {
    os << '(';
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) os << ',';
        os << a.c[i];
    }
    return os << ')';
}

NumberField::NumberField(std::vector<std::string> basisLabels,
                         std::vector<std::vector<Elem>> multTable)
    : n_(basisLabels.size()), labels_(std::move(basisLabels)), table_(std::move(multTable)) {
    if (n_ == 0) fail(ErrorCode::InvalidArgument, "number field needs a nonempty basis");
    if (table_.size() != n_)
        fail(ErrorCode::InvalidArgument, "multiplication table has wrong row count");
    for (const auto& row : table_) {
        if (row.size() != n_)
            fail(ErrorCode::InvalidArgument, "multiplication table has wrong column count");
        for (const auto& e : row)
            if (e.c.size() != n_)
                fail(ErrorCode::InvalidArgument, "multiplication table entry has wrong length");
    }
    // omega_0 must act as 1.
    for (std::size_t b = 0; b < n_; ++b) {
        if (table_[0][b] != basisElem(b))
            fail(ErrorCode::InvalidArgument, "basis element 0 is not the multiplicative identity");
    }
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (table_[a][b] != table_[b][a])
                fail(ErrorCode::InvalidArgument, "multiplication table is not symmetric");
    // (omega_a omega_b) omega_c == omega_a (omega_b omega_c), expanded
    // through the table.
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            for (std::size_t c = 0; c < n_; ++c) {
                Elem lhs = mul(table_[a][b], basisElem(c));
                Elem rhs = mul(basisElem(a), table_[b][c]);
                if (lhs != rhs)
                    fail(ErrorCode::InvalidArgument, "multiplication table is not associative");
            }
}

std::shared_ptr<const NumberField> NumberField::rationals() {
    std::vector<std::vector<Elem>> table{{Elem{{1}}}};
    return std::make_shared<NumberField>(std::vector<std::string>{"1"}, std::move(table));
}

namespace {

bool isSquarefree(i64 d) {
    i64 a = d < 0 ? -d : d;
    if (a > 1000000000000LL)
        fail(ErrorCode::Unsupported, "cannot certify squarefreeness beyond 10^12");
    for (i64 k = 2; k * k <= a; ++k)
        if (a % (k * k) == 0) return false;
    return true;
}

} // namespace

std::shared_ptr<const NumberField> NumberField::quadratic(i64 d) {
    if (d == 0 || d == 1)
        fail(ErrorCode::InvalidArgument, "quadratic field parameter must differ from 0 and 1");
    if (!isSquarefree(d))
        fail(ErrorCode::InvalidArgument, "quadratic field parameter must be squarefree");
    // Standard integral basis: omega = sqrt(d) when d = 2,3 (mod 4) and
    // omega = (1+sqrt(d))/2 when d = 1 (mod 4).
    Elem omegaSq;
    std::string label;
    if (floorMod(d, 4) == 1) {
        omegaSq = Elem{{(d - 1) / 4, 1}};
        label = "(1+sqrt(" + std::to_string(d) + "))/2";
    } else {
        omegaSq = Elem{{d, 0}};
        label = "sqrt(" + std::to_string(d) + ")";
    }
    std::vector<std::vector<Elem>> table{
        {Elem{{1, 0}}, Elem{{0, 1}}},
        {Elem{{0, 1}}, omegaSq},
    };
    return std::make_shared<NumberField>(std::vector<std::string>{"1", label}, std::move(table));
}

void NumberField::checkDims(const Elem& a) const {
    if (a.c.size() != n_)
        fail(ErrorCode::InvalidArgument, "element coordinate length does not match field degree");
}

Elem NumberField::zero() const { return Elem{std::vector<i64>(n_, 0)}; }

Elem NumberField::one() const { return basisElem(0); }

Elem NumberField::basisElem(std::size_t i) const {
    Elem e = zero();
    e.c[i] = 1;
    return e;
}

Elem NumberField::fromInt(i64 k) const {
    Elem e = zero();
    e.c[0] = k;
    return e;
}

Elem NumberField::add(const Elem& a, const Elem& b) const {
    checkDims(a);
    checkDims(b);
    Elem r = zero();
    for (std::size_t i = 0; i < n_; ++i) r.c[i] = checkedAdd(a.c[i], b.c[i]);
    return r;
}

Elem NumberField::sub(const Elem& a, const Elem& b) const {
    checkDims(a);
    checkDims(b);
    Elem r = zero();
    for (std::size_t i = 0; i < n_; ++i) r.c[i] = checkedSub(a.c[i], b.c[i]);
    return r;
}

Elem NumberField::neg(const Elem& a) const {
    checkDims(a);
    Elem r = zero();
    for (std::size_t i = 0; i < n_; ++i) r.c[i] = checkedNeg(a.c[i]);
    return r;
}

Elem NumberField::scale(i64 k, const Elem& a) const {
    checkDims(a);
    Elem r = zero();
    for (std::size_t i = 0; i < n_; ++i) r.c[i] = checkedMul(k, a.c[i]);
    return r;
}

Elem NumberField::mul(const Elem& a, const Elem& b) const {
    checkDims(a);
    checkDims(b);
    Elem r = zero();
    for (std::size_t i = 0; i < n_; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (b.c[j] == 0) continue;
            i64 coeff = checkedMul(a.c[i], b.c[j]);
            const Elem& t = table_[i][j];
            for (std::size_t k = 0; k < n_; ++k)
                r.c[k] = checkedAdd(r.c[k], checkedMul(coeff, t.c[k]));
        }
    }
    return r;
}

bool NumberField::isZero(const Elem& a) const {
    checkDims(a);
    for (i64 x : a.c)
        if (x != 0) return false;
    return true;
}

bool NumberField::operator==(const NumberField& other) const {
    return n_ == other.n_ && table_ == other.table_;
}

} // namespace covsys
