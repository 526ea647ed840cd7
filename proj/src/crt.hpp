#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ideal.hpp"

namespace covsys {

// Complete set of representatives of O_K mod a prime, 0 first, the rest in
// canonical fundamental-domain order.
class ResidueSystem {
public:
    // Validates: N(p) entries, 0 first, pairwise incongruent mod p.
    ResidueSystem(PrimeIdeal prime, std::vector<Elem> reps);

    const PrimeIdeal& prime() const { return prime_; }
    const std::vector<Elem>& reps() const { return reps_; }
    std::size_t size() const { return reps_.size(); }

    // Index of the class of a within reps.
    std::size_t indexOf(const Elem& a) const;

private:
    PrimeIdeal prime_;
    std::vector<Elem> reps_;
    std::map<Elem, std::size_t> lookup_; // canonical residue -> index
};

ResidueSystem buildResidueSystem(const FieldPtr& field, const PrimeIdeal& p,
                                 std::size_t cap = kDefaultResidueCap);

struct Uniformizer {
    PrimeIdeal prime;
    Elem t; // in p but not p^2
};

// First HNF basis row of p outside p^2; always exists.
Uniformizer findUniformizer(const FieldPtr& field, const PrimeIdeal& p);

struct DigitExpansion {
    std::size_t primeIndex;        // position in the CrtContext factorization
    std::vector<std::size_t> digits; // r indices into the residue system
};

// CRT machinery for one modulus I = prod p_j^{r_j}: per-prime residue
// systems, uniformizers, digit lookup tables, and the maps onto the
// parallelotopes P(n;b) and P(l;d).
class CrtContext {
public:
    CrtContext(FieldPtr field, Ideal modulus, std::size_t cap = kDefaultResidueCap);
    // Same, with caller-chosen uniformizers and residue systems (one per
    // prime, in canonical factor order). Choices are validated.
    CrtContext(FieldPtr field, Ideal modulus, std::vector<Elem> uniformizers,
               std::vector<std::vector<Elem>> residueReps, std::size_t cap = kDefaultResidueCap);

    const FieldPtr& field() const { return field_; }
    const Ideal& modulus() const { return modulus_; }
    const Factorization& factorization() const { return factors_; }

    std::size_t primeCount() const { return primes_.size(); }
    int exponent(std::size_t j) const { return factors_.factors[j].exponent; }
    const Ideal& primePower(std::size_t j) const { return primes_[j].power; }
    const ResidueSystem& residueSystem(std::size_t j) const { return primes_[j].reps; }
    const Elem& uniformizer(std::size_t j) const { return primes_[j].t; }

    // Coordinate count n = sum r_j and bounds b (n_j repeated r_j times).
    std::size_t dimension() const { return dims_.size(); }
    const std::vector<i64>& bounds() const { return dims_; }
    // Bounds d = (n_1^{r_1}, ..., n_l^{r_l}) of the coarse parallelotope.
    const std::vector<i64>& coarseBounds() const { return coarseDims_; }

    // Digit vector of a mod p_j^{r_j}, via the precomputed lookup table.
    DigitExpansion digitExpand(const Elem& a, std::size_t j) const;
    // sum of reps[digits[k]] * t^k.
    Elem digitReconstruct(const DigitExpansion& d) const;

    // Concatenated digit vectors, a point of P(n;b).
    std::vector<i64> mapF(const Elem& a) const;
    // Per-prime weighted digit sums, a point of P(l;d).
    std::vector<i64> mapFBar(const Elem& a) const;

private:
    struct PrimeData {
        Ideal power; // p_j^{r_j}
        ResidueSystem reps;
        Elem t;
        std::map<Elem, std::vector<std::size_t>> table; // residue mod p^r -> digits
    };

    void buildTables(std::size_t cap);

    FieldPtr field_;
    Ideal modulus_;
    Factorization factors_;
    std::vector<PrimeData> primes_;
    std::vector<i64> dims_;
    std::vector<i64> coarseDims_;
};

} // namespace covsys
