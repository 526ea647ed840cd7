#pragma once

#include <string>

#include "generate.hpp"

namespace covsys {

// Input document: {"field": {...}, "classes": [{"rep": [...],
// "modulus_gens": [[...], ...]}, ...]}. Field is {"type": "rationals"} or
// {"type": "quadratic", "d": <squarefree int>}.
FieldPtr parseFieldJson(const std::string& text);
CoveringSystem parseSystemJson(const std::string& text);

// Inverse of parseSystemJson; moduli are emitted as their HNF rows (a
// Z-basis is also a generating set).
std::string systemToJson(const CoveringSystem& sys);

std::string verdictToText(const FieldPtr& field, const Verdict& verdict);

struct ClassAnalysis {
    std::size_t index = 0;
    Elem rep;
    Mat modulusHnf;
    i64 norm = 0;
    Factorization factors;
    bool divisionMaximal = false;
    i64 repetition = 0;
    i64 bound1 = 0;
    std::optional<i64> bound2; // empty when all moduli are equal
    bool bound1Ok = true;      // vacuous unless division maximal
    bool bound2Ok = true;
    Cell cell;
};

struct AnalysisReport {
    FieldPtr field;
    Mat commonHnf;
    i64 commonNorm = 0;
    Factorization commonFactors;
    bool densityOk = false;
    std::vector<i64> bounds;
    std::vector<i64> coarseBounds;
    std::vector<ClassAnalysis> classes;
    Lemma1Report lemma1;
    bool allBoundsOk = true;
};

// Full per-class bound analysis of an exact system (Domain error otherwise).
AnalysisReport analyze(const CoveringSystem& sys, std::size_t cap = kDefaultResidueCap);

std::string analysisToText(const AnalysisReport& report);
std::string analysisToJson(const AnalysisReport& report);

// Per-residue f and f-bar images plus per-class cell patterns.
std::string mapDump(const CoveringSystem& sys, std::size_t cap = kDefaultResidueCap);

} // namespace covsys
