#ifndef COXMUT_TOOLS_ANALYSIS_HPP
#define COXMUT_TOOLS_ANALYSIS_HPP

// Report assembly shared by `coxmut analyze` and the HTTP service.

#include "caps.hpp"
#include "coxmut/json_io.hpp"

namespace coxmut::tools {

/// Parsed input file: a matrix, optionally with a custom realization.
struct Input {
    ExchangeMatrix matrix;
    std::optional<CustomInput> custom;

    static Input from_json(const Json& j)
    {
        Input in{matrix_from_json(j), std::nullopt};
        if (has_custom(j)) in.custom = custom_from_json(j);
        return in;
    }
};

inline ManifoldReport analyze(const Input& in, const Caps& caps)
{
    if (in.custom) return manifold_invariants(*in.custom, caps.tc_cosets);
    return manifold_invariants(in.matrix, caps.cls, caps.closure);
}

/// True when the report carries the group-theoretic pipeline, i.e. W has a
/// concrete representation.
inline bool analysis_available(const ManifoldReport& r)
{
    return r.mutation_type == "Custom" || r.mutation_type.starts_with("FiniteType") ||
           r.mutation_type.starts_with("AffineType");
}

/// HTTP-style outcome: 200 with the report, or 422 with a reason.
struct Outcome {
    int status = 200;
    Json body;
};

inline Outcome analysis_outcome(const Input& in, const Caps& caps)
{
    const std::string key = matrix_key(in.matrix).hex();
    try {
        const auto rep = analyze(in, caps);
        if (!analysis_available(rep))
            return {422, {{"canonical_key", key},
                          {"error", "analysis unavailable"},
                          {"reason", "mutation type " + rep.mutation_type + " has no concrete representation of W"}}};
        return {200, to_json(rep)};
    } catch (const WrongType& e) {
        return {422, {{"canonical_key", key}, {"error", "analysis unavailable"}, {"reason", e.what()}}};
    } catch (const CapExceeded& e) {
        return {422, {{"canonical_key", key}, {"error", "cap exceeded"}, {"reason", e.what()}}};
    }
}

} // namespace coxmut::tools

#endif // COXMUT_TOOLS_ANALYSIS_HPP
