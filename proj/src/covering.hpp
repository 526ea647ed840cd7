#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crt.hpp"

namespace covsys {

// One congruence class alpha mod I with I a proper ideal; the stored
// representative is canonically reduced.
struct CongruenceClass {
    CongruenceClass(Elem representative, Ideal modulusIdeal);

    Elem rep;
    Ideal modulus;
};

// Finite collection of congruence classes over one field, with the common
// modulus I = intersection of all moduli cached alongside.
class CoveringSystem {
public:
    static CoveringSystem make(FieldPtr field, std::vector<CongruenceClass> classes);

    const FieldPtr& field() const { return field_; }
    const std::vector<CongruenceClass>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }
    const Ideal& commonModulus() const { return common_; }

private:
    CoveringSystem(FieldPtr field, std::vector<CongruenceClass> classes, Ideal common)
        : field_(std::move(field)), classes_(std::move(classes)), common_(std::move(common)) {}

    FieldPtr field_;
    std::vector<CongruenceClass> classes_;
    Ideal common_;
};

struct Verdict {
    enum class Kind { Exact, NotCovering, Overlap };

    Kind kind = Kind::Exact;
    Elem witness;                       // first failing residue, canonical order
    std::size_t classA = 0, classB = 0; // overlapping pair for Kind::Overlap

    bool exact() const { return kind == Kind::Exact; }
};

// Brute-force exactness check over the residues of the common modulus:
// every residue must belong to exactly one class.
Verdict verifyExact(const CoveringSystem& sys, std::size_t cap = kDefaultResidueCap);

// Exact rational identity sum 1/N(I_i) == 1, an independent cross-check of
// verifyExact (all N(I_i) divide N(I)).
bool densityIsOne(const CoveringSystem& sys);

// Sub-box of a parallelotope: some coordinates fixed, the rest free.
struct Cell {
    std::vector<std::optional<i64>> entries; // nullopt = free coordinate

    // 1-based positions of the free coordinates.
    std::vector<std::size_t> indexSet() const;
    bool matches(const std::vector<i64>& point) const;
    i64 pointCount(const std::vector<i64>& bounds) const;
};

struct CellPartition {
    std::vector<i64> bounds;
    std::vector<Cell> cells;
};

bool cellsDisjoint(const Cell& a, const Cell& b);
// Pairwise disjointness plus the exact counting identity
// sum_K prod_{i in I(K)} b_i == prod_i b_i.
bool isCellPartition(const CellPartition& partition);

// Image of a congruence class under the CRT map f: the first r_{i,j} digits
// at each prime are fixed, the rest free. The class modulus must divide the
// context modulus.
Cell classToCell(const CrtContext& ctx, const CongruenceClass& cls);

// Cell images of all classes of an exact system; validates the partition.
CellPartition systemToPartition(const CrtContext& ctx, const CoveringSystem& sys,
                                std::size_t cap = kDefaultResidueCap);

bool isDivisionMaximal(const CoveringSystem& sys, std::size_t i);
bool isSubsetMinimal(const CellPartition& partition, std::size_t cellIndex);

struct Lemma1Entry {
    std::size_t cellIndex; // a subset-minimal cell
    i64 bound;             // min bounds over coordinates outside the index set
    i64 count;             // cells with exactly this index set
    bool ok;               // count >= bound
};

struct Lemma1Report {
    std::vector<Lemma1Entry> entries;
    bool allOk = true;
};

// For every subset-minimal cell, count the cells sharing its index set and
// compare against the minimum free-coordinate bound.
Lemma1Report checkLemma1(const CellPartition& partition);

// min N(p) over primes dividing I_i.
i64 theorem1Bound(const CoveringSystem& sys, std::size_t i);

// min over distinct moduli I_j of G(I_i / (I_i + I_j)); nullopt when all
// moduli equal I_i (the minimum would range over an empty set).
std::optional<i64> theorem2Bound(const CoveringSystem& sys, std::size_t i);

// Number of classes whose modulus equals I_i (HNF equality), includes i.
i64 repetitionCount(const CoveringSystem& sys, std::size_t i);

// The S_{I'} representative set for I' = modulus of class j: residues of
// the common modulus whose digit expansions end in zeros past the valuation
// of I' at each prime.
std::vector<Elem> sRepresentatives(const CrtContext& ctx, const CoveringSystem& sys,
                                   std::size_t j);

// Restriction of an exact system to the classes meeting S_{I_j}, with
// moduli coarsened to I_i + I_j; exact again when I_j is division maximal.
CoveringSystem derivedSystem(const CoveringSystem& sys, std::size_t j,
                             std::size_t cap = kDefaultResidueCap);

// Brute-force check that every residue of class i splits as an element of
// (class i) intersect S_{I_j} plus an element of I_j.
bool checkSSubsetShift(const CoveringSystem& sys, std::size_t j, std::size_t i,
                       std::size_t cap = kDefaultResidueCap);

} // namespace covsys
