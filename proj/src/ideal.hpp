#pragma once

#include <cstddef>
#include <vector>

#include "number_field.hpp"

namespace covsys {

using Mat = std::vector<std::vector<i64>>;

// Row Hermite normal form of an integer matrix: echelon shape, positive
// pivots, entries above each pivot reduced into [0, pivot). Zero rows are
// dropped. Two equal lattices get identical matrices.
Mat hnf(Mat rows);

constexpr std::size_t kDefaultResidueCap = 100000;
constexpr i64 kDefaultTrialBound = 1000000;

// Nonzero ideal of O_K as a full-rank sublattice in canonical row HNF.
// Rows are a Z-basis of the ideal.
class Ideal {
public:
    static Ideal fromGenerators(FieldPtr field, const std::vector<Elem>& gens);
    static Ideal unit(FieldPtr field);
    // Z-span of the given rows; validates full rank and O_K-module closure.
    static Ideal fromHnfRows(FieldPtr field, Mat rows);

    const FieldPtr& field() const { return field_; }
    const Mat& hnfMatrix() const { return hnf_; }
    Elem basisRow(std::size_t i) const { return Elem{hnf_[i]}; }

    i64 norm() const;
    bool isUnit() const { return norm() == 1; }

    bool contains(const Elem& v) const;
    // Canonical representative in the fundamental box prod [0, pivot_i).
    Elem reduce(const Elem& v) const;
    // All norm() canonical representatives in lexicographic box order;
    // element 0 comes first.
    std::vector<Elem> residues(std::size_t cap = kDefaultResidueCap) const;

    bool isModuleClosed() const;

    bool operator==(const Ideal& other) const;
    bool operator!=(const Ideal& other) const { return !(*this == other); }
    // HNF-lexicographic order between ideals of one field.
    bool operator<(const Ideal& other) const { return hnf_ < other.hnf_; }

    friend Ideal operator+(const Ideal& a, const Ideal& b);
    friend Ideal operator*(const Ideal& a, const Ideal& b);
    friend Ideal intersect(const Ideal& a, const Ideal& b);

private:
    Ideal(FieldPtr field, Mat hnfRows) : field_(std::move(field)), hnf_(std::move(hnfRows)) {}

    FieldPtr field_;
    Mat hnf_;
};

// True iff a | b, i.e. b is contained in a as a lattice.
bool divides(const Ideal& a, const Ideal& b);

struct PrimeIdeal {
    Ideal ideal;
    i64 residueChar; // rational prime below
    int residueDeg;  // norm == residueChar^residueDeg
};

struct PrimePower {
    PrimeIdeal prime;
    int exponent;
};

struct Factorization {
    std::vector<PrimePower> factors; // canonical order, pairwise distinct primes

    Ideal product(FieldPtr field) const;
};

// The distinct primes above a rational prime p, canonically ordered, with
// residue degrees; certifies that the product with ramification exponents
// reconstructs (p). Supports the shipped degree-1 and degree-2 fields.
std::vector<PrimeIdeal> primesAbove(const FieldPtr& field, i64 p);

// Prime factorization of a nonzero ideal; the rational primes come from
// trial division of the norm up to trialBound.
Factorization factorIdeal(const Ideal& ideal, i64 trialBound = kDefaultTrialBound);

// Largest e with P^e | I.
int valuation(const Ideal& ideal, const PrimeIdeal& p);

// max of N(p)^r over prime powers p^r dividing I; 1 for the unit ideal.
i64 bigG(const Ideal& ideal, i64 trialBound = kDefaultTrialBound);

} // namespace covsys
