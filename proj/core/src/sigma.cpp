#include "degseq/sigma.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace degseq {

DegreeSequence lower_bound_witness(const TargetPattern& pattern, int n) {
    (void)pattern;
    if (n < 5) {
        throw std::invalid_argument("threshold witness needs n >= 5, got " + std::to_string(n));
    }
    std::vector<int> terms{n - 1, n - 1};
    terms.insert(terms.end(), static_cast<std::size_t>(n) - 2, 2);
    return DegreeSequence(std::move(terms));
}

SigmaResult compute_sigma(const TargetPattern& pattern, int n, Decider decider,
                          EnumerationBudget budget) {
    if (n < 5) {
        throw std::invalid_argument("sigma threshold needs n >= 5, got " + std::to_string(n));
    }
    SigmaResult result;
    result.n = n;
    result.pattern = pattern.name;

    long long best = -1;
    std::optional<DegreeSequence> witness;
    enumerate_graphic_sequences(n, [&](const DegreeSequence& seq) {
        const bool potential = decider == Decider::kPredicate
                                   ? check_pattern(seq, pattern).potential
                                   : oracle_potentially(seq, pattern, budget);
        // Strictly-greater keeps the first maximum of the descending-lex
        // stream, i.e. the lexicographically largest extremal witness.
        if (!potential && seq.sum() > best) {
            best = seq.sum();
            witness = seq;
        }
        return true;
    });
    if (!witness) {
        throw std::logic_error("no NO sequence of length " + std::to_string(n) +
                               " for pattern " + pattern.name);
    }
    result.sigma_value = best + 2;
    result.extremal_witness = *witness;
    return result;
}

}  // namespace degseq
