#include "covsys.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "io.hpp"

using namespace covsys;

struct covsys_field {
    FieldPtr impl;
};

struct covsys_ideal {
    Ideal impl;
};

struct covsys_system {
    CoveringSystem impl;
};

namespace {

thread_local std::string g_lastError;

covsys_status mapCode(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return COVSYS_ERR_INVALID_ARGUMENT;
        case ErrorCode::FieldMismatch: return COVSYS_ERR_FIELD_MISMATCH;
        case ErrorCode::ZeroIdeal: return COVSYS_ERR_ZERO_IDEAL;
        case ErrorCode::CapExceeded: return COVSYS_ERR_CAP_EXCEEDED;
        case ErrorCode::Overflow: return COVSYS_ERR_OVERFLOW;
        case ErrorCode::Unsupported: return COVSYS_ERR_UNSUPPORTED;
        case ErrorCode::Parse: return COVSYS_ERR_PARSE;
        case ErrorCode::Domain: return COVSYS_ERR_DOMAIN;
        case ErrorCode::Internal: return COVSYS_ERR_INTERNAL;
    }
    return COVSYS_ERR_INTERNAL;
}

covsys_status setError(covsys_status status, const std::string& message) {
    g_lastError = message;
    return status;
}

template <typename Fn>
covsys_status guarded(Fn&& fn) {
    try {
        fn();
        return COVSYS_OK;
    } catch (const Error& e) {
        return setError(mapCode(e.code()), e.what());
    } catch (const std::exception& e) {
        return setError(COVSYS_ERR_INTERNAL, e.what());
    }
}

covsys_status requireArgs(bool ok) {
    if (!ok) setError(COVSYS_ERR_INVALID_ARGUMENT, "null argument");
    return ok ? COVSYS_OK : COVSYS_ERR_INVALID_ARGUMENT;
}

char* copyString(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) fail(ErrorCode::Internal, "out of memory");
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::size_t effectiveCap(size_t cap) { return cap == 0 ? kDefaultResidueCap : cap; }

} // namespace

extern "C" {

const char* covsys_version(void) { return "0.1.0"; }

const char* covsys_last_error(void) { return g_lastError.c_str(); }

void covsys_string_free(char* s) { std::free(s); }

covsys_status covsys_field_rationals(covsys_field** out) {
    if (requireArgs(out != nullptr)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new covsys_field{NumberField::rationals()}; });
}

covsys_status covsys_field_quadratic(int64_t d, covsys_field** out) {
    if (requireArgs(out != nullptr)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new covsys_field{NumberField::quadratic(d)}; });
}

int covsys_field_degree(const covsys_field* field) {
    return field ? static_cast<int>(field->impl->degree()) : 0;
}

void covsys_field_free(covsys_field* field) { delete field; }

covsys_status covsys_ideal_from_generators(const covsys_field* field, const int64_t* coords,
                                           size_t ngens, covsys_ideal** out) {
    if (requireArgs(field && coords && out && ngens > 0)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const std::size_t n = field->impl->degree();
        std::vector<Elem> gens;
        for (std::size_t g = 0; g < ngens; ++g)
            gens.push_back(Elem{std::vector<i64>(coords + g * n, coords + (g + 1) * n)});
        *out = new covsys_ideal{Ideal::fromGenerators(field->impl, gens)};
    });
}

covsys_status covsys_ideal_hnf(const covsys_ideal* ideal, int64_t* out) {
    if (requireArgs(ideal && out)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const Mat& m = ideal->impl.hnfMatrix();
        std::size_t k = 0;
        for (const auto& row : m)
            for (i64 x : row) out[k++] = x;
    });
}

covsys_status covsys_ideal_norm(const covsys_ideal* ideal, int64_t* out) {
    if (requireArgs(ideal && out)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = ideal->impl.norm(); });
}

covsys_status covsys_ideal_sum(const covsys_ideal* a, const covsys_ideal* b, covsys_ideal** out) {
    if (requireArgs(a && b && out)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new covsys_ideal{a->impl + b->impl}; });
}

covsys_status covsys_ideal_product(const covsys_ideal* a, const covsys_ideal* b,
                                   covsys_ideal** out) {
    if (requireArgs(a && b && out)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new covsys_ideal{a->impl * b->impl}; });
}

covsys_status covsys_ideal_intersect(const covsys_ideal* a, const covsys_ideal* b,
                                     covsys_ideal** out) {
    if (requireArgs(a && b && out)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new covsys_ideal{intersect(a->impl, b->impl)}; });
}

int covsys_ideal_equal(const covsys_ideal* a, const covsys_ideal* b) {
    if (!a || !b) return -1;
    int result = -1;
    if (guarded([&] { result = a->impl == b->impl ? 1 : 0; }) != COVSYS_OK) return -1;
    return result;
}

int covsys_ideal_divides(const covsys_ideal* a, const covsys_ideal* b) {
    if (!a || !b) return -1;
    int result = -1;
    if (guarded([&] { result = divides(a->impl, b->impl) ? 1 : 0; }) != COVSYS_OK) return -1;
    return result;
}

covsys_status covsys_ideal_big_g(const covsys_ideal* ideal, int64_t* out) {
    if (requireArgs(ideal && out)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = bigG(ideal->impl); });
}

void covsys_ideal_free(covsys_ideal* ideal) { delete ideal; }

covsys_status covsys_system_parse(const char* json_text, covsys_system** out) {
    if (requireArgs(json_text && out)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new covsys_system{parseSystemJson(json_text)}; });
}

covsys_status covsys_system_to_json(const covsys_system* sys, char** out) {
    if (requireArgs(sys && out)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = copyString(systemToJson(sys->impl)); });
}

size_t covsys_system_class_count(const covsys_system* sys) { return sys ? sys->impl.size() : 0; }

int covsys_system_field_degree(const covsys_system* sys) {
    return sys ? static_cast<int>(sys->impl.field()->degree()) : 0;
}

void covsys_system_free(covsys_system* sys) { delete sys; }

covsys_status covsys_system_verify(const covsys_system* sys, size_t cap, int* kind,
                                   int64_t* witness, size_t* class_a, size_t* class_b) {
    if (requireArgs(sys && kind)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const Verdict v = verifyExact(sys->impl, effectiveCap(cap));
        *kind = static_cast<int>(v.kind);
        if (witness)
            for (std::size_t i = 0; i < v.witness.c.size(); ++i) witness[i] = v.witness.c[i];
        if (class_a) *class_a = v.classA;
        if (class_b) *class_b = v.classB;
    });
}

covsys_status covsys_system_verify_report(const covsys_system* sys, size_t cap, int* kind,
                                          char** out) {
    if (requireArgs(sys && kind && out)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const Verdict v = verifyExact(sys->impl, effectiveCap(cap));
        *kind = static_cast<int>(v.kind);
        *out = copyString(verdictToText(sys->impl.field(), v));
    });
}

covsys_status covsys_system_analyze(const covsys_system* sys, size_t cap, int as_json,
                                    char** out) {
    if (requireArgs(sys && out)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const AnalysisReport report = analyze(sys->impl, effectiveCap(cap));
        *out = copyString(as_json ? analysisToJson(report) : analysisToText(report));
    });
}

covsys_status covsys_system_map_dump(const covsys_system* sys, size_t cap, char** out) {
    if (requireArgs(sys && out)) return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = copyString(mapDump(sys->impl, effectiveCap(cap))); });
}

covsys_status covsys_construct_random(const covsys_field* field, uint64_t seed, unsigned steps,
                                      const int64_t* pool_primes, size_t npool, size_t cap,
                                      int* capped, char** json_out) {
    if (requireArgs(field && pool_primes && npool > 0 && json_out))
        return COVSYS_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::vector<PrimeIdeal> pool;
        for (std::size_t i = 0; i < npool; ++i)
            for (auto& p : primesAbove(field->impl, pool_primes[i])) pool.push_back(std::move(p));
        const GeneratedSystem generated =
            randomSystem(field->impl, seed, steps, pool, effectiveCap(cap));
        if (capped) *capped = generated.capped ? 1 : 0;
        *json_out = copyString(systemToJson(generated.system));
    });
}

} // extern "C"
