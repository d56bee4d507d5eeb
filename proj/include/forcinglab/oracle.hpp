#pragma once

#include <unordered_map>

#include <forcinglab/formula.hpp>
#include <forcinglab/forcing.hpp>

namespace forcinglab {

/// The structure obtained by interpreting every name through one filter.
/// Interpretations are cached across formulas.
class SemanticModel {
public:
    explicit SemanticModel(ConditionSet G) : G_(std::move(G)) {}

    bool holds(const Formula& f);
    HFSet value(Name n);

private:
    bool eval(const Formula& f);
    HFSet value(const Term& t);

    ConditionSet G_;
    Bindings<HFSet> vars_;
    std::unordered_map<std::uint32_t, HFSet> names_;
};

/// Direct HF semantics of f once every name is interpreted by the filter G.
bool evaluate(const Formula& f, const ConditionSet& G);

/// Semantic counterpart of forcing: p is in the result iff f evaluates true
/// under the filter up(m) for every minimal m <= p.
ConditionSet oracle_set(const Poset& P, const Formula& f);

struct OracleDisagreement {
    ConditionIndex condition;
    bool forced;
    bool oracle;
};

/// Conditions where the forcing relation and the oracle differ.
std::vector<OracleDisagreement> compare_with_oracle(ForcingContext& ctx, const Formula& f);

} // namespace forcinglab
