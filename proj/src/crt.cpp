#include "crt.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace covsys {

ResidueSystem::ResidueSystem(PrimeIdeal prime, std::vector<Elem> reps)
    : prime_(std::move(prime)), reps_(std::move(reps)) {
    const auto& field = prime_.ideal.field();
    if (reps_.size() != static_cast<std::size_t>(prime_.ideal.norm()) || reps_.empty() ||
        !field->isZero(reps_[0]))
        fail(ErrorCode::InvalidArgument, "residue system must have N(p) elements with 0 first");
    for (std::size_t i = 0; i < reps_.size(); ++i)
        if (!lookup_.emplace(prime_.ideal.reduce(reps_[i]), i).second)
            fail(ErrorCode::InvalidArgument, "residue system entries are congruent mod p");
}

std::size_t ResidueSystem::indexOf(const Elem& a) const {
    auto it = lookup_.find(prime_.ideal.reduce(a));
    if (it == lookup_.end())
        fail(ErrorCode::Internal, "residue system lookup missed a canonical residue");
    return it->second;
}

ResidueSystem buildResidueSystem(const FieldPtr& field, const PrimeIdeal& p, std::size_t cap) {
    std::vector<Elem> reps = p.ideal.residues(cap);
    // 0 is lexicographically first in the fundamental box, but reorder
    // defensively: the digit machinery requires reps[0] == 0.
    auto zero = std::find(reps.begin(), reps.end(), field->zero());
    if (zero == reps.end()) fail(ErrorCode::Internal, "residue enumeration lost zero");
    std::rotate(reps.begin(), reps.begin() + (zero - reps.begin()), zero + 1);
    return ResidueSystem(p, std::move(reps));
}

Uniformizer findUniformizer(const FieldPtr& field, const PrimeIdeal& p) {
    Ideal psq = p.ideal * p.ideal;
    for (std::size_t i = 0; i < field->degree(); ++i) {
        Elem row = p.ideal.basisRow(i);
        if (!psq.contains(row)) return Uniformizer{p, row};
    }
    fail(ErrorCode::Internal, "prime ideal equals its square");
}

CrtContext::CrtContext(FieldPtr field, Ideal modulus, std::size_t cap)
    : field_(std::move(field)), modulus_(std::move(modulus)) {
    if (modulus_.isUnit())
        fail(ErrorCode::InvalidArgument, "CRT context needs a proper modulus");
    if (static_cast<std::size_t>(modulus_.norm()) > cap)
        fail(ErrorCode::CapExceeded, "modulus norm exceeds the enumeration cap");
    factors_ = factorIdeal(modulus_);
    for (const auto& pp : factors_.factors) {
        // Built as named locals: GCC 11 leaks earlier members of a braced
        // aggregate when a later member initializer throws (PR 66139).
        ResidueSystem rs = buildResidueSystem(field_, pp.prime, cap);
        Elem t = findUniformizer(field_, pp.prime).t;
        primes_.push_back(PrimeData{pp.prime.ideal, std::move(rs), std::move(t), {}});
    }
    buildTables(cap);
}

CrtContext::CrtContext(FieldPtr field, Ideal modulus, std::vector<Elem> uniformizers,
                       std::vector<std::vector<Elem>> residueReps, std::size_t cap)
    : field_(std::move(field)), modulus_(std::move(modulus)) {
    if (modulus_.isUnit())
        fail(ErrorCode::InvalidArgument, "CRT context needs a proper modulus");
    if (static_cast<std::size_t>(modulus_.norm()) > cap)
        fail(ErrorCode::CapExceeded, "modulus norm exceeds the enumeration cap");
    factors_ = factorIdeal(modulus_);
    if (uniformizers.size() != factors_.factors.size() ||
        residueReps.size() != factors_.factors.size())
        fail(ErrorCode::InvalidArgument, "one uniformizer and residue system per prime required");
    for (std::size_t j = 0; j < factors_.factors.size(); ++j) {
        const PrimeIdeal& p = factors_.factors[j].prime;
        const Ideal psq = p.ideal * p.ideal;
        if (!p.ideal.contains(uniformizers[j]) || psq.contains(uniformizers[j]))
            fail(ErrorCode::InvalidArgument, "uniformizer must lie in p but not p^2");
        ResidueSystem rs(p, std::move(residueReps[j]));
        primes_.push_back(PrimeData{p.ideal, std::move(rs), uniformizers[j], {}});
    }
    buildTables(cap);
}

void CrtContext::buildTables(std::size_t cap) {
    for (std::size_t j = 0; j < primes_.size(); ++j) {
        PrimeData& pd = primes_[j];
        const int r = factors_.factors[j].exponent;
        const i64 np = factors_.factors[j].prime.ideal.norm();
        for (int e = 1; e < r; ++e) pd.power = pd.power * factors_.factors[j].prime.ideal;
        if (static_cast<std::size_t>(pd.power.norm()) > cap)
            fail(ErrorCode::CapExceeded, "prime power norm exceeds the enumeration cap");
        // Precompute powers of the uniformizer, then key every digit sum by
        // its canonical residue mod p^r.
        const std::size_t ru = static_cast<std::size_t>(r);
        std::vector<Elem> tpow{field_->one()};
        for (std::size_t e = 1; e < ru; ++e) tpow.push_back(field_->mul(tpow.back(), pd.t));
        std::vector<std::size_t> digits(ru, 0);
        for (bool more = true; more;) {
            Elem sum = field_->zero();
            for (std::size_t k = 0; k < ru; ++k)
                sum = field_->add(sum, field_->mul(pd.reps.reps()[digits[k]], tpow[k]));
            pd.table[pd.power.reduce(sum)] = digits;
            more = false;
            for (std::size_t k = ru; k-- > 0;) {
                if (++digits[k] < static_cast<std::size_t>(np)) {
                    more = true;
                    break;
                }
                digits[k] = 0;
            }
        }
        if (pd.table.size() != static_cast<std::size_t>(pd.power.norm()))
            fail(ErrorCode::Internal, "digit sums do not exhaust the residues mod p^r");
        dims_.insert(dims_.end(), static_cast<std::size_t>(r), np);
        coarseDims_.push_back(pd.power.norm());
    }
}

DigitExpansion CrtContext::digitExpand(const Elem& a, std::size_t j) const {
    const PrimeData& pd = primes_[j];
    auto it = pd.table.find(pd.power.reduce(a));
    if (it == pd.table.end())
        fail(ErrorCode::Internal, "digit lookup missed a residue mod p^r");
    return DigitExpansion{j, it->second};
}

Elem CrtContext::digitReconstruct(const DigitExpansion& d) const {
    const PrimeData& pd = primes_[d.primeIndex];
    Elem sum = field_->zero();
    Elem tpow = field_->one();
    for (std::size_t k = 0; k < d.digits.size(); ++k) {
        sum = field_->add(sum, field_->mul(pd.reps.reps()[d.digits[k]], tpow));
        tpow = field_->mul(tpow, pd.t);
    }
    return sum;
}

std::vector<i64> CrtContext::mapF(const Elem& a) const {
    std::vector<i64> out;
    out.reserve(dims_.size());
    for (std::size_t j = 0; j < primes_.size(); ++j)
        for (std::size_t digit : digitExpand(a, j).digits) out.push_back(static_cast<i64>(digit));
    return out;
}

std::vector<i64> CrtContext::mapFBar(const Elem& a) const {
    std::vector<i64> out;
    out.reserve(primes_.size());
    for (std::size_t j = 0; j < primes_.size(); ++j) {
        const i64 np = factors_.factors[j].prime.ideal.norm();
        const auto digits = digitExpand(a, j).digits;
        // Digit k carries weight n_j^{r_j - 1 - k}.
        i64 value = 0;
        for (std::size_t digit : digits)
            value = checkedAdd(checkedMul(value, np), static_cast<i64>(digit));
        out.push_back(value);
    }
    return out;
}

} // namespace covsys
