#include "generate.hpp"

#include <random>
#include <utility>

namespace covsys {

CoveringSystem trivialSystem(const FieldPtr& field, const Ideal& modulus, std::size_t cap) {
    if (modulus.isUnit())
        fail(ErrorCode::Domain, "the unit ideal admits no covering system");
    std::vector<CongruenceClass> classes;
    for (const Elem& r : modulus.residues(cap)) classes.emplace_back(r, modulus);
    return CoveringSystem::make(field, std::move(classes));
}

CoveringSystem splitClass(const CoveringSystem& sys, std::size_t i, const PrimeIdeal& p,
                          std::size_t cap) {
    if (i >= sys.size()) fail(ErrorCode::InvalidArgument, "class index out of range");
    const auto& field = sys.field();
    const auto& target = sys.classes()[i];
    const Ideal refined = target.modulus * p.ideal;
    // Representatives of I_i mod I_i*P: the residues of the refined modulus
    // that lie in I_i. Exactly N(P) of them.
    std::vector<Elem> shifts;
    for (const Elem& r : refined.residues(cap))
        if (target.modulus.contains(r)) shifts.push_back(r);
    if (shifts.size() != static_cast<std::size_t>(p.ideal.norm()))
        fail(ErrorCode::Internal, "refinement shift count differs from the prime norm");
    std::vector<CongruenceClass> classes;
    for (std::size_t k = 0; k < sys.size(); ++k) {
        if (k != i) {
            classes.push_back(sys.classes()[k]);
            continue;
        }
        for (const Elem& s : shifts)
            classes.emplace_back(field->add(target.rep, s), refined);
    }
    return CoveringSystem::make(field, std::move(classes));
}

GeneratedSystem randomSystem(const FieldPtr& field, std::uint64_t seed, unsigned steps,
                             const std::vector<PrimeIdeal>& pool, std::size_t cap) {
    if (pool.empty()) fail(ErrorCode::InvalidArgument, "prime pool must be nonempty");
    std::mt19937_64 rng(seed);
    // rng() % n keeps the stream portable across standard library
    // implementations.
    const PrimeIdeal& seedPrime = pool[rng() % pool.size()];
    GeneratedSystem out{trivialSystem(field, seedPrime.ideal, cap), false};
    for (unsigned step = 0; step < steps; ++step) {
        const std::size_t i = rng() % out.system.size();
        const PrimeIdeal& p = pool[rng() % pool.size()];
        const Ideal refined = out.system.classes()[i].modulus * p.ideal;
        const Ideal next = intersect(out.system.commonModulus(), refined);
        if (static_cast<std::size_t>(next.norm()) > cap) {
            out.capped = true;
            return out;
        }
        out.system = splitClass(out.system, i, p, cap);
    }
    return out;
}

} // namespace covsys
