// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1-7 drive the core library directly; criterion 8 runs
// the installed CLI against the golden files.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "io.hpp"
#include "test_util.hpp"

using namespace covsys;

namespace {

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

std::vector<FieldPtr> acceptanceFields() {
    return {NumberField::rationals(), NumberField::quadratic(-1), NumberField::quadratic(-5),
            NumberField::quadratic(2), NumberField::quadratic(-3)};
}

std::vector<PrimeIdeal> primePool(const FieldPtr& field) {
    std::vector<PrimeIdeal> pool;
    for (i64 p : {2, 3, 5})
        for (const auto& prime : primesAbove(field, p))
            if (prime.ideal.norm() <= 9) pool.push_back(prime);
    return pool;
}

// Deterministic corpus: per field, the first 100 generated systems with at
// most 64 classes and common-modulus norm at most 10^4.
std::vector<CoveringSystem> buildCorpus(const FieldPtr& field) {
    const auto pool = primePool(field);
    std::vector<CoveringSystem> corpus;
    std::uint64_t seed = 0;
    while (corpus.size() < 100) {
        const unsigned steps = 1 + static_cast<unsigned>(seed % 5);
        const auto generated = randomSystem(field, seed, steps, pool, 10000);
        ++seed;
        if (generated.system.size() > 64) continue;
        corpus.push_back(generated.system);
    }
    return corpus;
}

bool allModuliEqual(const CoveringSystem& sys) {
    for (const auto& cls : sys.classes())
        if (cls.modulus != sys.classes()[0].modulus) return false;
    return true;
}

// ---- criterion bodies ----

void criterionAlgebra() {
    std::mt19937_64 rng(1001);
    for (const auto& field : acceptanceFields()) {
        for (int k = 0; k < 500; ++k) {
            const Ideal a = testutil::randomIdeal(rng, field, 3000);
            const Ideal b = testutil::randomIdeal(rng, field, 3000);
            const Ideal prod = a * b;
            require(prod.norm() == a.norm() * b.norm(), "norm multiplicativity failed");
            require(intersect(a, b) * (a + b) == prod, "(I^J)(I+J) != IJ");
            require(factorIdeal(a).product(field) == a, "factorization round-trip failed");
            require(factorIdeal(b).product(field) == b, "factorization round-trip failed");
        }
    }
}

void criterionBijections() {
    std::mt19937_64 rng(2002);
    for (const auto& field : acceptanceFields()) {
        for (int k = 0; k < 50; ++k) {
            const Ideal m = testutil::randomIdeal(rng, field, 2000);
            CrtContext ctx(field, m);
            i64 fineVolume = 1;
            for (i64 b : ctx.bounds()) fineVolume = checkedMul(fineVolume, b);
            i64 coarseVolume = 1;
            for (i64 d : ctx.coarseBounds()) coarseVolume = checkedMul(coarseVolume, d);
            require(fineVolume == m.norm() && coarseVolume == m.norm(),
                    "parallelotope volume mismatch");
            std::set<std::vector<i64>> fine, coarse;
            for (const Elem& x : m.residues()) {
                const auto pf = ctx.mapF(x);
                for (std::size_t i = 0; i < pf.size(); ++i)
                    require(pf[i] >= 0 && pf[i] < ctx.bounds()[i], "f image out of bounds");
                fine.insert(pf);
                const auto pb = ctx.mapFBar(x);
                for (std::size_t i = 0; i < pb.size(); ++i)
                    require(pb[i] >= 0 && pb[i] < ctx.coarseBounds()[i],
                            "f-bar image out of bounds");
                coarse.insert(pb);
            }
            require(fine.size() == static_cast<std::size_t>(m.norm()), "f is not injective");
            require(coarse.size() == static_cast<std::size_t>(m.norm()), "f-bar is not injective");
        }
    }
}

void criterionLemma2(const std::vector<std::vector<CoveringSystem>>& corpora) {
    for (const auto& corpus : corpora) {
        for (const auto& sys : corpus) {
            require(verifyExact(sys).exact(), "corpus system not exact");
            CrtContext ctx(sys.field(), sys.commonModulus());
            const CellPartition partition = systemToPartition(ctx, sys);
            require(isCellPartition(partition), "class images do not form a cell partition");
            // Enumerated image of each class must equal its predicted cell.
            std::vector<std::set<std::vector<i64>>> images(sys.size());
            for (const Elem& x : sys.commonModulus().residues()) {
                for (std::size_t i = 0; i < sys.size(); ++i) {
                    const auto& cls = sys.classes()[i];
                    if (cls.modulus.contains(sys.field()->sub(x, cls.rep))) {
                        images[i].insert(ctx.mapF(x));
                        break;
                    }
                }
            }
            for (std::size_t i = 0; i < sys.size(); ++i) {
                const Cell& cell = partition.cells[i];
                require(images[i].size() ==
                            static_cast<std::size_t>(cell.pointCount(partition.bounds)),
                        "class image size differs from the cell size");
                for (const auto& pt : images[i])
                    require(cell.matches(pt), "class image escapes its predicted cell");
                require(isDivisionMaximal(sys, i) == isSubsetMinimal(partition, i),
                        "division-maximal / subset-minimal equivalence failed");
            }
        }
    }
}

void criterionTheorem1(const std::vector<std::vector<CoveringSystem>>& corpora) {
    for (const auto& corpus : corpora) {
        for (const auto& sys : corpus) {
            i64 maxNorm = 0;
            for (const auto& cls : sys.classes())
                maxNorm = std::max(maxNorm, cls.modulus.norm());
            for (std::size_t i = 0; i < sys.size(); ++i) {
                const bool dm = isDivisionMaximal(sys, i);
                if (sys.classes()[i].modulus.norm() == maxNorm)
                    require(dm, "maximal-norm modulus not division maximal");
                if (!dm) continue;
                require(repetitionCount(sys, i) >= theorem1Bound(sys, i),
                        "repetition below the prime-norm bound");
            }
        }
    }
    // Classic spot check: modulus (8) has bound 2 and count 2.
    auto q = NumberField::rationals();
    const auto classic = testutil::classicZSystem(q);
    require(theorem1Bound(classic, 2) == 2, "classic bound is not 2");
    require(repetitionCount(classic, 2) == 2, "classic count is not 2");
    require(isDivisionMaximal(classic, 2), "classic (8) not division maximal");
}

void criterionTheorem2(const std::vector<std::vector<CoveringSystem>>& corpora) {
    for (const auto& corpus : corpora) {
        for (const auto& sys : corpus) {
            if (allModuliEqual(sys)) continue;
            // Bounds depend only on the modulus; compute once per distinct
            // modulus.
            std::map<Mat, std::pair<i64, i64>> byModulus; // hnf -> (t2, t1)
            for (std::size_t i = 0; i < sys.size(); ++i) {
                const Mat& key = sys.classes()[i].modulus.hnfMatrix();
                auto it = byModulus.find(key);
                if (it == byModulus.end()) {
                    const auto bound2 = theorem2Bound(sys, i);
                    require(bound2.has_value(), "missing bound with distinct moduli present");
                    it = byModulus.emplace(key, std::make_pair(*bound2, theorem1Bound(sys, i)))
                             .first;
                }
                require(repetitionCount(sys, i) >= it->second.first,
                        "repetition below the G-quotient bound");
                if (isDivisionMaximal(sys, i))
                    require(it->second.first >= it->second.second,
                            "G-quotient bound below the prime-norm bound");
            }
        }
    }
    // Degree-1 spot check: moduli {(12),(8)} give G((12)/(4)) = 3.
    auto q = NumberField::rationals();
    std::vector<CongruenceClass> classes;
    classes.emplace_back(q->fromInt(0), Ideal::fromGenerators(q, {q->fromInt(12)}));
    classes.emplace_back(q->fromInt(0), Ideal::fromGenerators(q, {q->fromInt(8)}));
    const auto pair = CoveringSystem::make(q, std::move(classes));
    require(theorem2Bound(pair, 0) == std::optional<i64>{3}, "G((12)/(4)) != 3");
}

void criterionLemmas145(const std::vector<std::vector<CoveringSystem>>& corpora) {
    // Lemma 1: no violations across every corpus partition with >= 2 cells.
    for (const auto& corpus : corpora) {
        for (const auto& sys : corpus) {
            CrtContext ctx(sys.field(), sys.commonModulus());
            const CellPartition partition = systemToPartition(ctx, sys);
            if (partition.cells.size() < 2) continue;
            require(checkLemma1(partition).allOk, "cell-count bound violated");
        }
    }
    // Lemma 4: exhaustive shift decomposition on 10 small corpus systems.
    std::size_t checked = 0;
    for (const auto& corpus : corpora) {
        for (const auto& sys : corpus) {
            if (checked >= 10) break;
            if (sys.commonModulus().norm() > 500) continue;
            ++checked;
            CrtContext ctx(sys.field(), sys.commonModulus());
            for (std::size_t j = 0; j < sys.size(); ++j) {
                const auto sReps = sRepresentatives(ctx, sys, j);
                for (std::size_t i = 0; i < sys.size(); ++i) {
                    const auto& cls = sys.classes()[i];
                    const bool meets =
                        std::any_of(sReps.begin(), sReps.end(), [&](const Elem& s) {
                            return cls.modulus.contains(sys.field()->sub(s, cls.rep));
                        });
                    if (meets)
                        require(checkSSubsetShift(sys, j, i), "shift decomposition failed");
                }
            }
        }
        if (checked >= 10) break;
    }
    require(checked == 10, "too few small systems for the shift check");
    // Lemma 5: derived systems on every division-maximal pivot of 25
    // systems.
    std::size_t used = 0;
    for (const auto& corpus : corpora) {
        for (const auto& sys : corpus) {
            if (used >= 25) break;
            if (sys.commonModulus().norm() > 2000) continue;
            ++used;
            for (std::size_t j = 0; j < sys.size(); ++j) {
                if (!isDivisionMaximal(sys, j)) continue;
                const auto derived = derivedSystem(sys, j);
                require(verifyExact(derived).exact(), "derived system not exact");
                for (const auto& cls : derived.classes())
                    require(divides(cls.modulus, sys.classes()[j].modulus),
                            "derived modulus does not divide the pivot");
            }
        }
        if (used >= 25) break;
    }
    require(used == 25, "too few systems for the derived-system check");
}

void criterionExactnessOracle(const std::vector<std::vector<CoveringSystem>>& corpora) {
    for (const auto& corpus : corpora)
        for (const auto& sys : corpus)
            require(verifyExact(sys).exact() == densityIsOne(sys),
                    "verdict disagrees with the density identity");
    // 50 deterministic perturbations must all be rejected with a witness.
    std::mt19937_64 rng(7007);
    std::size_t rejected = 0;
    for (std::size_t n = 0; rejected < 50; ++n) {
        const auto& corpus = corpora[n % corpora.size()];
        const auto& sys = corpus[(n * 7) % corpus.size()];
        if (sys.size() < 2) continue;
        std::vector<CongruenceClass> classes = sys.classes();
        if (n % 2 == 0) {
            classes.erase(classes.begin() +
                          static_cast<std::ptrdiff_t>(rng() % classes.size()));
        } else {
            const std::size_t i = rng() % classes.size();
            const Elem shifted = sys.field()->add(classes[i].rep, sys.field()->one());
            classes[i] = CongruenceClass(shifted, classes[i].modulus);
        }
        const auto broken = CoveringSystem::make(sys.field(), std::move(classes));
        const Verdict v = verifyExact(broken);
        require(!v.exact(), "perturbed system still verifies as exact");
        // The witness is a concrete residue of the common modulus.
        require(v.witness.c.size() == sys.field()->degree(), "witness malformed");
        require(broken.commonModulus().reduce(v.witness) == v.witness,
                "witness not in canonical form");
        ++rejected;
    }
}

// ---- CLI plumbing for criterion 8 ----

struct RunResult {
    int exitCode = -1;
    std::string output;
};

RunResult runCli(const std::string& args) {
    const std::string cmd = std::string(COVSYS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "cannot spawn the CLI");
    RunResult result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string goldenPath(const std::string& name) {
    return std::string(COVSYS_GOLDEN_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
    std::ifstream in(goldenPath(name));
    require(in.good(), "missing golden file " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterionCli() {
    require(runCli("verify " + goldenPath("classic_z.json")).output == "exact\n",
            "classic verify output");
    require(runCli("verify " + goldenPath("classic_z.json")).exitCode == 0,
            "classic verify exit code");
    require(runCli("analyze " + goldenPath("classic_z.json")).output ==
                golden("classic_z.analyze.txt"),
            "classic analyze golden");
    require(runCli("analyze --json " + goldenPath("classic_z.json")).output ==
                golden("classic_z.analyze.json"),
            "classic analyze json golden");
    require(runCli("map " + goldenPath("classic_z.json")).output == golden("classic_z.map.txt"),
            "classic map golden");
    require(runCli("verify " + goldenPath("gaussian.json")).output == "exact\n",
            "gaussian verify output");
    require(runCli("analyze " + goldenPath("gaussian.json")).output ==
                golden("gaussian.analyze.txt"),
            "gaussian analyze golden");
    require(runCli("map " + goldenPath("gaussian.json")).output == golden("gaussian.map.txt"),
            "gaussian map golden");
    for (int seed = 0; seed < 20; ++seed) {
        const auto made = runCli("construct --field quadratic -d -1 --seed " +
                                 std::to_string(seed) + " --steps 3 --primes 2 5");
        require(made.exitCode == 0, "construct failed");
        const std::string path = "acceptance_roundtrip.json";
        std::ofstream out(path);
        out << made.output;
        out.close();
        const auto verified = runCli("verify " + path);
        std::remove(path.c_str());
        require(verified.exitCode == 0 && verified.output == "exact\n",
                "construct round-trip not exact");
    }
}

} // namespace

int main() {
    std::vector<std::vector<CoveringSystem>> corpora;
    for (const auto& field : acceptanceFields()) corpora.push_back(buildCorpus(field));

    struct Criterion {
        int number;
        const char* label;
        std::function<void()> body;
        double limitSeconds; // 0 = no limit
    };
    const std::vector<Criterion> criteria{
        {1, "algebra: norms, Dedekind identity, factorization round-trip",
         [] { criterionAlgebra(); }, 30.0},
        {2, "crt bijections onto P(n;b) and P(l;d)", [] { criterionBijections(); }, 0.0},
        {3, "cell images, partitions, maximal/minimal equivalence",
         [&] { criterionLemma2(corpora); }, 0.0},
        {4, "theorem 1 repetition bound", [&] { criterionTheorem1(corpora); }, 0.0},
        {5, "theorem 2 repetition bound and dominance", [&] { criterionTheorem2(corpora); }, 0.0},
        {6, "cell-count bound, shift decomposition, derived systems",
         [&] { criterionLemmas145(corpora); }, 0.0},
        {7, "exactness oracle vs density; perturbation rejection",
         [&] { criterionExactnessOracle(corpora); }, 0.0},
        {8, "cli golden files and construct round-trip", [] { criterionCli(); }, 0.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body();
        } catch (const Failure& f) {
            error = f.what;
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && c.limitSeconds > 0 && seconds > c.limitSeconds)
            error = "runtime " + std::to_string(seconds) + "s exceeds " +
                    std::to_string(c.limitSeconds) + "s";
        if (error.empty()) {
            std::printf("PASS  %d  %s (%.2fs)\n", c.number, c.label, seconds);
        } else {
            std::printf("FAIL  %d  %s (%.2fs): %s\n", c.number, c.label, seconds, error.c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
