#include "ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

namespace covsys {

namespace {

void rowSubMul(std::vector<i64>& target, i64 q, const std::vector<i64>& src) {
    for (std::size_t k = 0; k < target.size(); ++k)
        target[k] = checkedSub(target[k], checkedMul(q, src[k]));
}

bool isZeroRow(const std::vector<i64>& row) {
    return std::all_of(row.begin(), row.end(), [](i64 x) { return x == 0; });
}

} // namespace

Mat hnf(Mat rows) {
    if (rows.empty()) return rows;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        // Euclidean reduction within column c on rows >= r.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() ||
                    std::llabs(rows[i][c]) < std::llabs(rows[best][c]))
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                rowSubMul(rows[i], rows[i][c] / rows[r][c], rows[r]);
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r]) x = checkedNeg(x);
        for (std::size_t i = 0; i < r; ++i)
            if (rows[i][c] != 0) rowSubMul(rows[i], floorDiv(rows[i][c], rows[r][c]), rows[r]);
        ++r;
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(), isZeroRow), rows.end());
    return rows;
}

Ideal Ideal::fromGenerators(FieldPtr field, const std::vector<Elem>& gens) {
    if (gens.empty()) fail(ErrorCode::ZeroIdeal, "ideal needs at least one generator");
    const std::size_t n = field->degree();
    Mat rows;
    for (const auto& g : gens)
        for (std::size_t b = 0; b < n; ++b)
            rows.push_back(field->mul(g, field->basisElem(b)).c);
    Mat h = hnf(std::move(rows));
    if (h.size() != n) fail(ErrorCode::ZeroIdeal, "generators span a rank-deficient lattice");
    return Ideal(std::move(field), std::move(h));
}

Ideal Ideal::unit(FieldPtr field) {
    const std::size_t n = field->degree();
    Mat h(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i) h[i][i] = 1;
    return Ideal(std::move(field), std::move(h));
}

Ideal Ideal::fromHnfRows(FieldPtr field, Mat rows) {
    const std::size_t n = field->degree();
    Mat h = hnf(std::move(rows));
    if (h.size() != n) fail(ErrorCode::ZeroIdeal, "rows span a rank-deficient lattice");
    Ideal result(std::move(field), std::move(h));
    if (!result.isModuleClosed())
        fail(ErrorCode::InvalidArgument, "lattice is not closed under ring multiplication");
    return result;
}

i64 Ideal::norm() const {
    i64 det = 1;
    for (std::size_t i = 0; i < hnf_.size(); ++i) det = checkedMul(det, hnf_[i][i]);
    return det;
}

bool Ideal::contains(const Elem& v) const {
    if (v.c.size() != field_->degree())
        fail(ErrorCode::InvalidArgument, "element dimension mismatch");
    std::vector<i64> w = v.c;
    for (std::size_t i = 0; i < hnf_.size(); ++i) {
        if (w[i] % hnf_[i][i] != 0) return false;
        rowSubMul(w, w[i] / hnf_[i][i], hnf_[i]);
    }
    return true;
}

Elem Ideal::reduce(const Elem& v) const {
    if (v.c.size() != field_->degree())
        fail(ErrorCode::InvalidArgument, "element dimension mismatch");
    std::vector<i64> w = v.c;
    for (std::size_t i = 0; i < hnf_.size(); ++i)
        rowSubMul(w, floorDiv(w[i], hnf_[i][i]), hnf_[i]);
    return Elem{std::move(w)};
}

std::vector<Elem> Ideal::residues(std::size_t cap) const {
    const i64 count = norm();
    if (static_cast<std::size_t>(count) > cap)
        fail(ErrorCode::CapExceeded,
             "residue enumeration needs " + std::to_string(count) + " elements, cap is " +
                 std::to_string(cap));
    const std::size_t n = field_->degree();
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(count));
    Elem cur = field_->zero();
    for (;;) {
        out.push_back(cur);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++cur.c[i] < hnf_[i][i]) break;
            cur.c[i] = 0;
            if (i == 0) return out;
        }
    }
}

bool Ideal::isModuleClosed() const {
    for (std::size_t i = 0; i < hnf_.size(); ++i)
        for (std::size_t b = 0; b < field_->degree(); ++b)
            if (!contains(field_->mul(basisRow(i), field_->basisElem(b)))) return false;
    return true;
}

bool Ideal::operator==(const Ideal& other) const {
    return *field_ == *other.field_ && hnf_ == other.hnf_;
}

namespace {

void requireSameField(const Ideal& a, const Ideal& b) {
    if (!(*a.field() == *b.field()))
        fail(ErrorCode::FieldMismatch, "ideals belong to different fields");
}

} // namespace

Ideal operator+(const Ideal& a, const Ideal& b) {
    requireSameField(a, b);
    Mat rows = a.hnf_;
    rows.insert(rows.end(), b.hnf_.begin(), b.hnf_.end());
    return Ideal(a.field_, hnf(std::move(rows)));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
    requireSameField(a, b);
    Mat rows;
    for (std::size_t i = 0; i < a.hnf_.size(); ++i)
        for (std::size_t j = 0; j < b.hnf_.size(); ++j)
            rows.push_back(a.field_->mul(a.basisRow(i), b.basisRow(j)).c);
    return Ideal(a.field_, hnf(std::move(rows)));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    requireSameField(a, b);
    const std::size_t n = a.field_->degree();
    // HNF of [A|A; B|0]: rows whose left block vanishes carry a basis of
    // the intersection in the right block.
    Mat block;
    for (const auto& row : a.hnf_) {
        std::vector<i64> r(2 * n);
        std::copy(row.begin(), row.end(), r.begin());
        std::copy(row.begin(), row.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
        block.push_back(std::move(r));
    }
    for (const auto& row : b.hnf_) {
        std::vector<i64> r(2 * n, 0);
        std::copy(row.begin(), row.end(), r.begin());
        block.push_back(std::move(r));
    }
    Mat h = hnf(std::move(block));
    Mat rows;
    for (const auto& row : h) {
        bool leftZero = std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n),
                                    [](i64 x) { return x == 0; });
        if (leftZero)
            rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    }
    Mat hp = hnf(std::move(rows));
    if (hp.size() != n) fail(ErrorCode::Internal, "intersection lattice lost full rank");
    return Ideal(a.field_, std::move(hp));
}

bool divides(const Ideal& a, const Ideal& b) {
    requireSameField(a, b);
    for (std::size_t i = 0; i < b.hnfMatrix().size(); ++i)
        if (!a.contains(b.basisRow(i))) return false;
    return true;
}

Ideal Factorization::product(FieldPtr field) const {
    Ideal result = Ideal::unit(std::move(field));
    for (const auto& pp : factors)
        for (int e = 0; e < pp.exponent; ++e) result = result * pp.prime.ideal;
    return result;
}

// ---- modular helpers for splitting quadratics mod p ----

namespace {

i64 mulMod(i64 a, i64 b, i64 p) {
    return static_cast<i64>(static_cast<__int128>(a) * b % p);
}

i64 powMod(i64 base, i64 exp, i64 p) {
    i64 r = 1 % p;
    base = floorMod(base, p);
    while (exp > 0) {
        if (exp & 1) r = mulMod(r, base, p);
        base = mulMod(base, base, p);
        exp >>= 1;
    }
    return r;
}

// Tonelli-Shanks square root of a QR a mod odd prime p.
i64 sqrtMod(i64 a, i64 p) {
    a = floorMod(a, p);
    if (a == 0) return 0;
    if (p % 4 == 3) return powMod(a, (p + 1) / 4, p);
    i64 q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    i64 z = 2;
    while (powMod(z, (p - 1) / 2, p) != p - 1) ++z;
    i64 m = s;
    i64 c = powMod(z, q, p);
    i64 t = powMod(a, q, p);
    i64 r = powMod(a, (q + 1) / 2, p);
    while (t != 1) {
        i64 t2 = t;
        i64 i = 0;
        while (t2 != 1) {
            t2 = mulMod(t2, t2, p);
            ++i;
        }
        i64 b = c;
        for (i64 k = 0; k < m - i - 1; ++k) b = mulMod(b, b, p);
        m = i;
        c = mulMod(b, b, p);
        t = mulMod(t, c, p);
        r = mulMod(r, b, p);
    }
    return r;
}

bool isPrime(i64 p) {
    if (p < 2) return false;
    for (i64 k = 2; k * k <= p; ++k)
        if (p % k == 0) return false;
    return true;
}

PrimeIdeal makePrime(const FieldPtr& field, std::vector<Elem> gens, i64 p, int deg) {
    Ideal ideal = Ideal::fromGenerators(field, gens);
    i64 expected = 1;
    for (int i = 0; i < deg; ++i) expected = checkedMul(expected, p);
    if (ideal.norm() != expected)
        fail(ErrorCode::Internal, "prime ideal construction produced wrong norm");
    return PrimeIdeal{std::move(ideal), p, deg};
}

} // namespace

std::vector<PrimeIdeal> primesAbove(const FieldPtr& field, i64 p) {
    if (!isPrime(p)) fail(ErrorCode::InvalidArgument, "primesAbove needs a rational prime");
    std::vector<PrimeIdeal> result;
    if (field->degree() == 1) {
        result.push_back(makePrime(field, {field->fromInt(p)}, p, 1));
        return result;
    }
    if (field->degree() != 2)
        fail(ErrorCode::Unsupported,
             "prime splitting is only certified for degree 1 and 2 fields");
    // omega^2 = u + v*omega, so omega has minimal relation x^2 - v x - u.
    const Elem& sq = field->tableEntry(1, 1);
    const i64 u = sq.c[0];
    const i64 v = sq.c[1];
    const Elem omega = field->basisElem(1);
    auto rootPrime = [&](i64 a) {
        // (p, omega - a)
        return makePrime(field, {field->fromInt(p), field->sub(omega, field->fromInt(a))}, p, 1);
    };
    int exponentOfP = 1;
    if (p == 2) {
        auto val = [&](i64 x) { return floorMod(x * x - v * x - u, 2); };
        bool r0 = val(0) == 0;
        bool r1 = val(1) == 0;
        if (r0 && r1) {
            result.push_back(rootPrime(0));
            result.push_back(rootPrime(1));
        } else if (r0 || r1) {
            result.push_back(rootPrime(r0 ? 0 : 1));
            exponentOfP = 2;
        } else {
            result.push_back(makePrime(field, {field->fromInt(2)}, 2, 2));
        }
    } else {
        const i64 vb = floorMod(v, p);
        const i64 ub = floorMod(u, p);
        const i64 disc = floorMod(mulMod(vb, vb, p) + 4 * (ub % p), p);
        if (disc == 0) {
            i64 a = mulMod(vb, powMod(2, p - 2, p), p); // v/2 mod p
            result.push_back(rootPrime(a));
            exponentOfP = 2;
        } else if (powMod(disc, (p - 1) / 2, p) == 1) {
            i64 s = sqrtMod(disc, p);
            i64 half = powMod(2, p - 2, p);
            i64 a1 = mulMod(floorMod(vb + s, p), half, p);
            i64 a2 = mulMod(floorMod(vb - s + p, p), half, p);
            result.push_back(rootPrime(a1));
            result.push_back(rootPrime(a2));
        } else {
            result.push_back(makePrime(field, {field->fromInt(p)}, p, 2));
        }
    }
    std::sort(result.begin(), result.end(),
              [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.ideal < b.ideal; });
    // Certify the splitting: product of primes with their ramification
    // exponents must reconstruct (p).
    Ideal prod = Ideal::unit(field);
    for (const auto& q : result)
        for (int e = 0; e < exponentOfP; ++e) prod = prod * q.ideal;
    if (prod != Ideal::fromGenerators(field, {field->fromInt(p)}))
        fail(ErrorCode::Internal, "prime splitting failed certification");
    return result;
}

Factorization factorIdeal(const Ideal& ideal, i64 trialBound) {
    std::vector<i64> rationalPrimes;
    i64 rem = ideal.norm();
    i64 p = 2;
    for (; p <= trialBound; ++p) {
        if (static_cast<__int128>(p) * p > rem) break;
        if (rem % p != 0) continue;
        rationalPrimes.push_back(p);
        while (rem % p == 0) rem /= p;
    }
    if (rem > 1) {
        // Remainder is certified prime only if trial division covered its
        // square root.
        if (static_cast<__int128>(p) * p <= rem)
            fail(ErrorCode::CapExceeded, "ideal norm has a prime factor beyond the trial bound");
        rationalPrimes.push_back(rem);
    }
    Factorization fac;
    for (i64 p : rationalPrimes) {
        for (const auto& prime : primesAbove(ideal.field(), p)) {
            int e = valuation(ideal, prime);
            if (e > 0) fac.factors.push_back(PrimePower{prime, e});
        }
    }
    std::sort(fac.factors.begin(), fac.factors.end(), [](const PrimePower& a, const PrimePower& b) {
        if (a.prime.residueChar != b.prime.residueChar)
            return a.prime.residueChar < b.prime.residueChar;
        return a.prime.ideal < b.prime.ideal;
    });
    if (fac.product(ideal.field()) != ideal)
        fail(ErrorCode::Internal, "ideal factorization failed reconstruction");
    return fac;
}

int valuation(const Ideal& ideal, const PrimeIdeal& p) {
    int e = 0;
    Ideal power = p.ideal;
    while (divides(power, ideal)) {
        ++e;
        power = power * p.ideal;
    }
    return e;
}

i64 bigG(const Ideal& ideal, i64 trialBound) {
    i64 best = 1;
    for (const auto& pp : factorIdeal(ideal, trialBound).factors) {
        i64 npow = 1;
        for (int e = 0; e < pp.exponent; ++e) npow = checkedMul(npow, pp.prime.ideal.norm());
        best = std::max(best, npow);
    }
    return best;
}

} // namespace covsys
