#include "covering.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace covsys {

CongruenceClass::CongruenceClass(Elem representative, Ideal modulusIdeal)
    : rep(modulusIdeal.reduce(representative)), modulus(std::move(modulusIdeal)) {
    if (modulus.isUnit())
        fail(ErrorCode::Domain, "congruence class modulus must be a proper ideal");
}

CoveringSystem CoveringSystem::make(FieldPtr field, std::vector<CongruenceClass> classes) {
    if (classes.empty()) fail(ErrorCode::InvalidArgument, "covering system needs classes");
    for (const auto& cls : classes)
        if (!(*cls.modulus.field() == *field))
            fail(ErrorCode::FieldMismatch, "classes belong to different fields");
    Ideal common = classes[0].modulus;
    for (std::size_t i = 1; i < classes.size(); ++i)
        common = intersect(common, classes[i].modulus);
    return CoveringSystem(std::move(field), std::move(classes), std::move(common));
}

Verdict verifyExact(const CoveringSystem& sys, std::size_t cap) {
    const auto& field = sys.field();
    for (const Elem& x : sys.commonModulus().residues(cap)) {
        std::size_t hits = 0;
        std::size_t first = 0, second = 0;
        for (std::size_t i = 0; i < sys.size(); ++i) {
            const auto& cls = sys.classes()[i];
            if (cls.modulus.contains(field->sub(x, cls.rep))) {
                if (hits == 0)
                    first = i;
                else
                    second = i;
                if (++hits == 2) break;
            }
        }
        if (hits == 0) return Verdict{Verdict::Kind::NotCovering, x, 0, 0};
        if (hits > 1) return Verdict{Verdict::Kind::Overlap, x, first, second};
    }
    return Verdict{Verdict::Kind::Exact, field->zero(), 0, 0};
}

bool densityIsOne(const CoveringSystem& sys) {
    const i64 total = sys.commonModulus().norm();
    i64 sum = 0;
    for (const auto& cls : sys.classes())
        sum = checkedAdd(sum, total / cls.modulus.norm());
    return sum == total;
}

std::vector<std::size_t> Cell::indexSet() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!entries[i]) out.push_back(i + 1);
    return out;
}

bool Cell::matches(const std::vector<i64>& point) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] && *entries[i] != point[i]) return false;
    return true;
}

i64 Cell::pointCount(const std::vector<i64>& bounds) const {
    i64 count = 1;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!entries[i]) count = checkedMul(count, bounds[i]);
    return count;
}

bool cellsDisjoint(const Cell& a, const Cell& b) {
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i] && b.entries[i] && *a.entries[i] != *b.entries[i]) return true;
    return false;
}

bool isCellPartition(const CellPartition& partition) {
    for (std::size_t i = 0; i < partition.cells.size(); ++i)
        for (std::size_t j = i + 1; j < partition.cells.size(); ++j)
            if (!cellsDisjoint(partition.cells[i], partition.cells[j])) return false;
    i64 total = 1;
    for (i64 b : partition.bounds) total = checkedMul(total, b);
    i64 covered = 0;
    for (const auto& cell : partition.cells)
        covered = checkedAdd(covered, cell.pointCount(partition.bounds));
    return covered == total;
}

Cell classToCell(const CrtContext& ctx, const CongruenceClass& cls) {
    if (!divides(cls.modulus, ctx.modulus()))
        fail(ErrorCode::InvalidArgument, "class modulus does not divide the context modulus");
    Cell cell;
    cell.entries.reserve(ctx.dimension());
    for (std::size_t j = 0; j < ctx.primeCount(); ++j) {
        const int fixedCount = valuation(cls.modulus, ctx.factorization().factors[j].prime);
        const auto digits = ctx.digitExpand(cls.rep, j).digits;
        for (std::size_t k = 0; k < digits.size(); ++k) {
            if (k < static_cast<std::size_t>(fixedCount))
                cell.entries.emplace_back(static_cast<i64>(digits[k]));
            else
                cell.entries.emplace_back(std::nullopt);
        }
    }
    return cell;
}

CellPartition systemToPartition(const CrtContext& ctx, const CoveringSystem& sys,
                                std::size_t cap) {
    if (!verifyExact(sys, cap).exact())
        fail(ErrorCode::Domain, "cell partitions require an exact covering system");
    CellPartition partition;
    partition.bounds = ctx.bounds();
    for (const auto& cls : sys.classes()) partition.cells.push_back(classToCell(ctx, cls));
    if (!isCellPartition(partition))
        fail(ErrorCode::Internal, "class images do not partition the parallelotope");
    return partition;
}

bool isDivisionMaximal(const CoveringSystem& sys, std::size_t i) {
    const Ideal& mine = sys.classes()[i].modulus;
    for (const auto& cls : sys.classes())
        if (divides(mine, cls.modulus) && cls.modulus != mine) return false;
    return true;
}

bool isSubsetMinimal(const CellPartition& partition, std::size_t cellIndex) {
    const auto mine = partition.cells[cellIndex].indexSet();
    for (const auto& cell : partition.cells) {
        const auto other = cell.indexSet();
        if (other == mine) continue;
        if (std::includes(mine.begin(), mine.end(), other.begin(), other.end())) return false;
    }
    return true;
}

Lemma1Report checkLemma1(const CellPartition& partition) {
    if (partition.cells.size() < 2)
        fail(ErrorCode::InvalidArgument, "the cell-count bound needs at least two cells");
    Lemma1Report report;
    for (std::size_t e = 0; e < partition.cells.size(); ++e) {
        if (!isSubsetMinimal(partition, e)) continue;
        const auto idx = partition.cells[e].indexSet();
        i64 bound = 0;
        for (std::size_t i = 0; i < partition.bounds.size(); ++i) {
            if (std::find(idx.begin(), idx.end(), i + 1) != idx.end()) continue;
            if (bound == 0 || partition.bounds[i] < bound) bound = partition.bounds[i];
        }
        i64 count = 0;
        for (const auto& cell : partition.cells)
            if (cell.indexSet() == idx) ++count;
        const bool ok = count >= bound;
        report.entries.push_back(Lemma1Entry{e, bound, count, ok});
        report.allOk = report.allOk && ok;
    }
    return report;
}

i64 theorem1Bound(const CoveringSystem& sys, std::size_t i) {
    i64 best = 0;
    for (const auto& pp : factorIdeal(sys.classes()[i].modulus).factors) {
        const i64 np = pp.prime.ideal.norm();
        if (best == 0 || np < best) best = np;
    }
    return best;
}

std::optional<i64> theorem2Bound(const CoveringSystem& sys, std::size_t i) {
    const Ideal& mine = sys.classes()[i].modulus;
    const Factorization mineFactors = factorIdeal(mine);
    std::optional<i64> best;
    for (const auto& cls : sys.classes()) {
        if (cls.modulus == mine) continue;
        // I_i / (I_i + I_j) via valuations: exponent of p drops by
        // min(v_p(I_i), v_p(I_j)).
        Ideal quotient = Ideal::unit(sys.field());
        for (const auto& pp : mineFactors.factors) {
            const int other = valuation(cls.modulus, pp.prime);
            const int e = pp.exponent - std::min(pp.exponent, other);
            for (int k = 0; k < e; ++k) quotient = quotient * pp.prime.ideal;
        }
        const i64 g = bigG(quotient);
        if (!best || g < *best) best = g;
    }
    return best;
}

i64 repetitionCount(const CoveringSystem& sys, std::size_t i) {
    const Ideal& mine = sys.classes()[i].modulus;
    i64 count = 0;
    for (const auto& cls : sys.classes())
        if (cls.modulus == mine) ++count;
    return count;
}

std::vector<Elem> sRepresentatives(const CrtContext& ctx, const CoveringSystem& sys,
                                   std::size_t j) {
    const Ideal& pivot = sys.classes()[j].modulus;
    std::vector<int> keep; // s_j = valuation of the pivot at each prime
    for (const auto& pp : ctx.factorization().factors)
        keep.push_back(valuation(pivot, pp.prime));
    std::vector<Elem> out;
    const auto all = ctx.modulus().residues(static_cast<std::size_t>(ctx.modulus().norm()));
    for (const Elem& x : all) {
        bool inS = true;
        for (std::size_t jj = 0; jj < ctx.primeCount() && inS; ++jj) {
            const auto digits = ctx.digitExpand(x, jj).digits;
            for (std::size_t k = static_cast<std::size_t>(keep[jj]); k < digits.size(); ++k)
                if (digits[k] != 0) {
                    inS = false;
                    break;
                }
        }
        if (inS) out.push_back(x);
    }
    return out;
}

CoveringSystem derivedSystem(const CoveringSystem& sys, std::size_t j, std::size_t cap) {
    if (!isDivisionMaximal(sys, j))
        fail(ErrorCode::Domain, "derived systems require a division-maximal pivot modulus");
    if (!verifyExact(sys, cap).exact())
        fail(ErrorCode::Domain, "derived systems require an exact covering system");
    CrtContext ctx(sys.field(), sys.commonModulus(), cap);
    const auto sReps = sRepresentatives(ctx, sys, j);
    const auto& field = sys.field();
    std::vector<CongruenceClass> derived;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const auto& cls = sys.classes()[i];
        const bool meetsS = std::any_of(sReps.begin(), sReps.end(), [&](const Elem& s) {
            return cls.modulus.contains(field->sub(s, cls.rep));
        });
        if (meetsS)
            derived.emplace_back(cls.rep, cls.modulus + sys.classes()[j].modulus);
    }
    return CoveringSystem::make(field, std::move(derived));
}

bool checkSSubsetShift(const CoveringSystem& sys, std::size_t j, std::size_t i,
                       std::size_t cap) {
    CrtContext ctx(sys.field(), sys.commonModulus(), cap);
    const auto& field = sys.field();
    const auto& cls = sys.classes()[i];
    std::vector<Elem> meet;
    for (const Elem& s : sRepresentatives(ctx, sys, j))
        if (cls.modulus.contains(field->sub(s, cls.rep))) meet.push_back(s);
    if (meet.empty())
        fail(ErrorCode::Domain, "class does not meet the S-representative set");
    const Ideal& pivot = sys.classes()[j].modulus;
    for (const Elem& x : sys.commonModulus().residues(cap)) {
        if (!cls.modulus.contains(field->sub(x, cls.rep))) continue;
        const bool decomposes = std::any_of(meet.begin(), meet.end(), [&](const Elem& s) {
            return pivot.contains(field->sub(x, s));
        });
        if (!decomposes) return false;
    }
    return true;
}

} // namespace covsys
